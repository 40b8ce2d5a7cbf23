import json
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from avsieve.cli import ReportEnvelope, run

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "table-g4.txt": ("table-g4",),
    "mprime-2.txt": ("mprime", "2"),
    "mprime-4.txt": ("mprime", "4"),
    "mprime-6.txt": ("mprime", "6"),
    "decomp-g1.txt": ("decomp", "--g", "1"),
    "decomp-g2.txt": ("decomp", "--g", "2"),
    "decomp-g3.txt": ("decomp", "--g", "3"),
    "decomp-g4.txt": ("decomp", "--g", "4"),
}

ALL_COMMANDS = [
    ("mprime", "2"),
    ("mprime", "4", "--oracle"),
    ("decomp", "--g", "3"),
    ("decomp", "--g", "2", "--nk", "3"),
    ("decomp", "--g", "2", "--semistable"),
    ("table-g4",),
    ("threshold", "--g", "2", "--q0", "2", "--elambda", "2"),
    ("bounds", "c7", "--g", "2", "--n", "1"),
    ("bounds", "c6", "--g", "1", "--n", "1", "--m", "2", "--nk", "2", "--logdisc", "1", "--ellprime", "3"),
    ("bounds", "c8", "--g", "1"),
    ("bounds", "n-uniform", "--g", "1", "--n", "1"),
    ("lambertw", "-0.25"),
    ("x0", "--c", "4", "--N", "2"),
    ("residue", "--m", "2", "--ell", "13"),
    ("elliott-scan", "--m", "2", "--hi", "500", "--rows"),
    ("goldfeld", "--disc", "8", "--ell", "29"),
    ("goldfeld", "--disc", "-4", "--N", "23", "--S", "2,3"),
    ("goldfeld", "--disc", "5", "--limit", "300"),
    ("weil", "power-charpoly", "--coeffs", "1,-1,2", "--e", "2"),
    ("weil", "forcing", "--coeffs", "1,0,2", "--q0", "2", "--elambda", "4", "--ell", "277"),
    ("weil", "mq", "--ell", "13", "--i", "2,11"),
    ("weil", "min-degree", "--t", "4", "--p", "2"),
    ("weil", "mazur", "--q", "2", "--ell", "11"),
    ("weil", "sixth-root", "--p", "2", "--ell", "103"),
    ("weil", "cubic", "--q", "2", "--ell", "13"),
    ("family", "--count", "3"),
    ("appendix-check", "--draws", "5"),
    ("cchain", "--dmax", "10", "--ellmax", "30"),
]


@pytest.fixture(scope="module")
def schema():
    text = resources.files("avsieve").joinpath("report_schema.json").read_text(encoding="utf-8")
    return json.loads(text)


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_text(cli, name):
    expected = (GOLDEN / name).read_text(encoding="utf-8")
    outs = {cli(*GOLDEN_CASES[name])[1] for _ in range(3)}
    assert outs == {expected}


def test_golden_across_threads():
    def job(name):
        import io

        buf = io.StringIO()
        assert run(list(GOLDEN_CASES[name]), stdout=buf, stderr=io.StringIO()) == 0
        return name, buf.getvalue()

    names = sorted(GOLDEN_CASES) * 3
    for workers in (1, 4, 8):
        with ThreadPoolExecutor(workers) as pool:
            for name, out in pool.map(job, names):
                assert out == (GOLDEN / name).read_text(encoding="utf-8")


def test_golden_via_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "avsieve", "table-g4"], capture_output=True, check=True
    )
    assert proc.stdout == (GOLDEN / "table-g4.txt").read_bytes()


def test_table_g4_is_the_decomp_table(cli):
    _, table, _ = cli("table-g4")
    _, decomp, _ = cli("decomp", "--g", "4")
    assert decomp.endswith(table)
    _, tj, _ = cli("table-g4", "--json")
    _, dj, _ = cli("decomp", "--g", "4", "--json")
    assert json.loads(tj)["results"]["rows"] == json.loads(dj)["results"]["survivors"]


def test_table_g4_json_rows(cli):
    rows = json.loads(cli("table-g4", "--json")[1])["results"]["rows"]
    got = [(r["congruence"]["modulus"], r["congruence"]["residues"]) for r in rows]
    assert got == [(24, [13]), (24, [13]), (16, [9]), (20, [11]), (24, [13])]


def test_mprime_text(cli):
    assert cli("mprime", "2") == (0, "48 = 2^4 · 3\n", "")


def test_decomp_g3_json(cli):
    res = json.loads(cli("decomp", "--g", "3", "--json")[1])["results"]
    assert res["survivors"] == []
    assert len(res["exceptions"]) == 4


@pytest.mark.parametrize("argv", ALL_COMMANDS, ids=lambda a: " ".join(a))
def test_json_validates_and_echoes_parameters(cli, schema, argv):
    code, out, _ = cli(*argv, "--json", "--c3", "2.5", "--c1prime", "3")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, schema)
    assert payload["command"].split()[0] == argv[0]
    assert payload["parameters"]["C3"] == 2.5
    assert payload["parameters"]["C1_prime"] == 3.0
    assert list(payload) == ["command", "inputs", "results", "parameters", "version"]
    back = ReportEnvelope.from_json(payload)
    assert back.to_json() == payload
    assert back.dumps() == out.rstrip("\n")


@pytest.mark.parametrize("argv", [("bounds", "c7", "--g", "1"), ("bounds", "c8", "--g", "1"), ("bounds", "n-uniform")])
def test_bound_text_echoes_parameters(cli, argv):
    out = cli(*argv, "--c3", "2", "--c1prime", "5")[1]
    assert out.rstrip().splitlines()[-1] == "parameters: C3=2.0 C1'=5.0"


def test_out_file(cli, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = cli("mprime", "4", "--out", str(target))
    assert code == 0 and out == "23040 = 2^9 · 3^2 · 5\n"
    payload = json.loads(target.read_text(encoding="utf-8"))
    assert payload["results"]["value"] == "23040"
    assert payload["command"] == "mprime"
    assert target.read_text(encoding="utf-8") == cli("mprime", "4", "--json")[1]


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("bogus",),
        ("decomp",),
        ("mprime", "two"),
        ("bounds", "c9"),
        ("weil", "mazur", "--q", "2"),
        ("weil", "forcing", "--coeffs", "1,0,2"),
        ("goldfeld", "--disc", "8", "--ell", "29", "--N", "23"),
        ("table-g4", "--c", "2"),
    ],
)
def test_usage_errors_exit_2(cli, argv):
    assert cli(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv, named",
    [
        (("--c3", "0.5", "mprime", "2"), "C3 >= 1"),
        (("--c1prime", "0", "mprime", "2"), "C1' > 0"),
        (("mprime", "0"), "n >= 1"),
        (("residue", "--m", "2", "--ell", "4"), "ell odd prime"),
        (("elliott-scan", "--hi", "2000000"), "--limit"),
        (("goldfeld", "--disc", "8", "--limit", "1000000"), "--limit"),
        (("goldfeld", "--disc", "7", "--ell", "29"), "fundamental discriminant"),
        (("family", "--count", "21"), "count <= 20"),
        (("x0", "--c", "0.5", "--N", "2"), "c >= (e/N)^N"),
        (("weil", "mazur", "--q", "3", "--ell", "11"), ""),
    ],
)
def test_precondition_errors_exit_1(cli, argv, named):
    code, out, err = cli(*argv)
    assert code == 1 and out == ""
    assert err.startswith("error: precondition violated:")
    assert named in err


def test_ineffective_constants_are_named(cli):
    assert "C2" in json.loads(cli("goldfeld", "--disc", "8", "--ell", "29", "--json")[1])["parameters"]
    assert "C10" in json.loads(cli("weil", "cubic", "--q", "2", "--ell", "13", "--json")[1])["parameters"]


def test_global_flags_after_subcommand(cli):
    assert cli("mprime", "2", "--c3", "3")[0] == 0
    payload = json.loads(cli("mprime", "2", "--json", "--c3", "3")[1])
    assert payload["parameters"]["C3"] == 3.0


def test_seeded_suite_is_reproducible(cli):
    a = cli("appendix-check", "--draws", "20", "--seed", "7", "--json")[1]
    b = cli("appendix-check", "--draws", "20", "--seed", "7", "--json")[1]
    assert a == b
