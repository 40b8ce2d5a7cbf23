"""Command-line front end.

Every subcommand builds a ReportEnvelope; text mode renders it for humans,
`--json` prints it verbatim and `--out` additionally writes it to a file.
Exit codes: 0 success, 1 precondition violation, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from math import log
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import __version__
from .arith import Magnitude, PreconditionError, smallest_prime_mth_residue
from . import bounds as B
from .decomp import FieldContext, SieveResult, c_chain_violations, sieve
from .glorders import gl_gcd_oracle, m_prime
from .quadfam import (
    discriminant_norm_is_2_power,
    distinct_family_check,
    epsilon,
    family_curve,
    j_invariant,
    verify_unit_conditions,
)
from .residues import (
    QuadraticField,
    ell_star,
    elliott_scan,
    goldfeld_check,
    nprime_count,
    nprime_member,
)
from . import weil as W

logger = logging.getLogger("avsieve")

DEFAULT_SCAN_LIMIT = 10**5


@dataclass
class ReportEnvelope:
    command: str
    inputs: dict[str, Any]
    results: dict[str, Any]
    parameters: dict[str, Any]
    version: str = __version__
    text: list[str] = field(default_factory=list, repr=False)

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "parameters": self.parameters,
            "version": self.version,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> ReportEnvelope:
        return cls(payload["command"], payload["inputs"], payload["results"], payload["parameters"], payload["version"])


def magnitude_json(m: Magnitude) -> dict[str, Any]:
    return {"log_e": m.log_e, "log10": m.log10, "exact": str(m.exact) if m.exact is not None else None}


def _params_line(args) -> str:
    return f"parameters: C3={args.c3} C1'={args.c1prime}"


# ---------------------------------------------------------------------------
# rendering helpers shared by decomp and table-g4

def _table_key(s):
    return (max(d for d, _ in s.profile.counts), s.profile.sort_key(), s.m_Q)


def render_survivor_table(result: SieveResult) -> list[str]:
    rows = sorted(result.survivors, key=_table_key)
    labels = [s.profile.table_label() for s in rows]
    congr = [f"ℓ ≡ {s.constraint}" for s in rows]
    w = max([len("Sum")] + [len(x) for x in labels])
    out = [f"{'Sum':<{w}}  Congruence", "-" * w + "  " + "-" * max([len("Congruence")] + [len(c) for c in congr])]
    out += [f"{a:<{w}}  {b}" for a, b in zip(labels, congr)]
    return out


def survivor_rows_json(result: SieveResult) -> list[dict]:
    return [s.to_json() for s in sorted(result.survivors, key=_table_key)]


# ---------------------------------------------------------------------------
# subcommands

def cmd_mprime(args) -> ReportEnvelope:
    mp = m_prime(args.n)
    res = {"value": str(mp.value), "factors": {str(p): k for p, k in sorted(mp.factors.items())}}
    if args.oracle:
        res["gcd_oracle"] = str(gl_gcd_oracle(args.n))
        res["oracle_agrees"] = gl_gcd_oracle(args.n) == mp.value
    env = ReportEnvelope("mprime", {"n": args.n}, res, {})
    env.text = [str(mp)]
    if args.oracle:
        env.text.append(f"gcd oracle: {res['gcd_oracle']} ({'agrees' if res['oracle_agrees'] else 'DISAGREES'})")
    return env


def _ctx(args) -> FieldContext:
    if args.nk == 1 and not args.general:
        return FieldContext.rational(args.semistable)
    return FieldContext.general(args.nk, args.semistable)


def cmd_decomp(args) -> ReportEnvelope:
    ctx = _ctx(args)
    r = sieve(args.g, ctx)
    res = {
        "profile_count": len(r.profiles),
        "survivors": survivor_rows_json(r),
        "exceptions": [p.table_label() for p in r.exceptions],
        "eliminations": [e.to_json() for e in r.eliminations],
    }
    inputs = {"g": args.g, "base": ctx.base.value, "n_K": ctx.n_K, "semistable": ctx.semistable}
    env = ReportEnvelope("decomp", inputs, res, {})
    t = [
        f"g = {args.g}, base = {ctx.base.value}, n_K = {ctx.n_K}, semistable = {'yes' if ctx.semistable else 'no'}",
        f"profiles: {len(r.profiles)}",
        f"survivors: {len(r.survivors)}",
        f"exceptions reaching the C8 stage: {len(r.exceptions)}",
    ]
    t += [f"  {p.table_label()}" for p in r.exceptions]
    t.append("eliminations:")
    for e in r.eliminations:
        where = "".join(f" {k}={v}" for k, v in (("e", e.e), ("m", e.m)) if v is not None)
        t.append(f"  {e.profile.table_label()}: {e.rule}{where} ({e.detail})")
    if r.survivors:
        t.append("survivor table:")
        t += render_survivor_table(r)
    env.text = t
    return env


def cmd_table_g4(args) -> ReportEnvelope:
    r = sieve(4, FieldContext.rational())
    env = ReportEnvelope("table-g4", {"g": 4}, {"rows": survivor_rows_json(r)}, {})
    env.text = render_survivor_table(r)
    return env


def cmd_threshold(args) -> ReportEnvelope:
    v = B.a2_threshold(B.A2Input(args.g, args.q0, args.elambda))
    env = ReportEnvelope("threshold", {"g": args.g, "q0": args.q0, "e_lambda": args.elambda}, {"threshold": str(v)}, {})
    env.text = [str(v)]
    return env


def _cheb(args, m: int, n: int, nK: int) -> B.ChebParams:
    return B.ChebParams(C3=args.c3, log_disc_Ktilde=args.logdisc, m=m, g=args.g, n=n, n_K=nK)


def cmd_bounds(args) -> ReportEnvelope:
    params = {"C3": args.c3, "C1_prime": args.c1prime}
    which = args.which
    if which == "c7":
        m = B.c7(args.g, args.nk)
        inputs = {"g": args.g, "n_K": args.nk}
        res = {"C7": magnitude_json(m)}
        text = [f"C7 = {m.describe()}"]
    elif which == "c6":
        p = _cheb(args, args.m, args.n, args.nk)
        c4, c5 = B.c4_c5(p)
        m = B.c6(p, args.ellprime)
        inputs = {"g": args.g, "n": args.n, "m": args.m, "n_K": args.nk, "log_disc": args.logdisc, "ell_prime": args.ellprime}
        res = {"C4": c4, "C5": c5, "C6": magnitude_json(m), "crossing": B.crossing(p)}
        text = [f"C4 = {c4}, C5 = {c5}", f"C6 = {m.describe()}", f"true crossing = {res['crossing']:.6f}"]
    elif which == "c8":
        terms = B.c8_terms(args.g, args.eps, args.c1prime, args.c1prime4)
        m = B.c8(args.g, args.eps, args.c1prime, args.c1prime4)
        inputs = {"g": args.g, "eps": args.eps}
        if args.c1prime4 is not None:
            params["C1_prime_4"] = args.c1prime4
        res = {"C8": magnitude_json(m), "terms": {k: magnitude_json(v) for k, v in terms.items()}}
        text = [f"{k} = {v.describe()}" for k, v in terms.items()] + [f"C8 = {m.describe()}"]
    else:  # n-uniform
        base = B.ChebParams(C3=args.c3, log_disc_Ktilde=args.logdisc)
        m = B.n_uniform(args.g, args.n, args.nk, base, args.ellprime)
        ms = B.m_set(args.g, args.n, args.nk)
        inputs = {"g": args.g, "n": args.n, "n_F": args.nk, "log_disc": args.logdisc, "ell_prime": args.ellprime}
        res = {"N": magnitude_json(m), "m_set": ms}
        text = [f"m ranges over divisors of {ms[-1]}: {ms}", f"N = {m.describe()}"]
    env = ReportEnvelope(f"bounds {which}", inputs, res, params)
    env.text = text + [_params_line(args)]
    return env


def cmd_lambertw(args) -> ReportEnvelope:
    w = B.lambert_w_m1(args.x)
    res = {"w": w, "ratio": w / (1 + w) if w != -1 else None, "lower_bound": B.appendix_lower(args.x)}
    env = ReportEnvelope("lambertw", {"x": args.x}, res, {})
    env.text = [f"W_-1({args.x}) = {w!r}", f"L(x) = {res['lower_bound']!r}"]
    if res["ratio"] is not None:
        env.text.append(f"W/(1+W) = {res['ratio']!r}")
    return env


def cmd_x0(args) -> ReportEnvelope:
    x = B.x0(args.c, args.N)
    xb = B.x0_bisection(args.c, args.N)
    ub = B.x0_upper_bound(args.c, args.N)
    res = {"x0": x, "bisection": xb, "relative_gap": abs(x - xb) / xb, "upper_bound": ub}
    env = ReportEnvelope("x0", {"c": args.c, "N": args.N}, res, {})
    env.text = [f"x0 = {x!r}", f"bisection = {xb!r}", f"c N^(2N) = {ub!r}"]
    return env


def cmd_residue(args) -> ReportEnvelope:
    p = smallest_prime_mth_residue(args.m, args.ell)
    env = ReportEnvelope("residue", {"m": args.m, "ell": args.ell}, {"p_min": p}, {})
    env.text = [str(p)]
    return env


def cmd_elliott(args) -> ReportEnvelope:
    if args.hi > args.limit:
        raise PreconditionError("hi <= --limit", f"hi={args.hi}, limit={args.limit}")
    scan = elliott_scan(args.m, args.lo, args.hi, args.eps)
    top = scan.argmax
    res = {
        "count": len(scan.rows),
        "max_ratio": scan.max_ratio,
        "argmax": asdict(top) if top else None,
        "rows": [asdict(r) for r in scan.rows] if args.rows else None,
    }
    env = ReportEnvelope("elliott-scan", {"m": args.m, "lo": args.lo, "hi": args.hi, "eps": args.eps}, res, {"C1_prime": args.c1prime})
    env.text = [f"primes scanned: {len(scan.rows)}", f"max p_min / ell^((m-1)/4+eps) = {scan.max_ratio:.6f}"]
    if top:
        env.text.append(f"attained at ell = {top.ell} with p_min = {top.p_min}")
    env.text.append(f"empirical lower bound for C1' = {scan.max_ratio:.6f} (supplied C1' = {args.c1prime})")
    return env


def cmd_goldfeld(args) -> ReportEnvelope:
    K = QuadraticField(args.disc)
    inputs: dict[str, Any] = {"disc": args.disc}
    text = []
    res: dict[str, Any] = {}
    if args.ell is not None:
        inputs["ell"] = args.ell
        member = nprime_member(args.ell, K)
        v = goldfeld_check(-ell_star(args.ell), K)
        res.update({"nprime_member": member, "N": v.N, "go1": v.go1, "go2": v.go2, "witnesses": list(v.witnesses)})
        text = [f"ell = {args.ell} in N'(K): {member}", f"N = {v.N}: Go1 {v.go1}, Go2 {v.go2}, witnesses {list(v.witnesses)}"]
    elif args.N is not None:
        S = frozenset(int(s) for s in args.S.split(",")) if args.S else frozenset()
        inputs.update({"N": args.N, "S": sorted(S)})
        v = goldfeld_check(args.N, K, S)
        res.update({"N": v.N, "go1": v.go1, "go2": v.go2, "witnesses": list(v.witnesses), "member": v.member})
        text = [f"N = {v.N}: Go1 {v.go1}, Go2 {v.go2}, witnesses {list(v.witnesses)}"]
    else:
        if args.limit > DEFAULT_SCAN_LIMIT:
            raise PreconditionError(f"--limit <= {DEFAULT_SCAN_LIMIT}", f"got {args.limit}")
        inputs["limit"] = args.limit
        c = nprime_count(K, args.limit)
        res["count"] = c
        text = [f"#{{ell <= {args.limit} in N'(K)}} = {c} (no finiteness bound asserted)"]
    env = ReportEnvelope("goldfeld", inputs, res, {"C2": "ineffective, not computed"})
    env.text = text
    return env


def _poly(s: str) -> W.IntPolynomial:
    return W.IntPolynomial.of(*(int(c) for c in s.split(",")))


def _cert_text(c: W.Certificate) -> list[str]:
    out = [f"certificate {c.name} {c.inputs}"]
    for i, s in enumerate(c.steps, 1):
        out.append(f"  {i}. [{'ok' if s.holds else 'FAIL'}] {s.label}: {s.claim}")
    out += [f"  note: {n}" for n in c.notes]
    out.append(f"  valid refutation: {c.valid}")
    return out


def cmd_weil(args) -> ReportEnvelope:
    what = args.what
    if what == "power-charpoly":
        P = _poly(args.coeffs)
        Q = W.power_charpoly(P, args.e)
        inputs = {"P": str(P), "e": args.e}
        res = {"result": str(Q), "coefficients": [str(c) for c in Q.coefficients]}
        text = [str(Q)]
    elif what == "forcing":
        P = _poly(args.coeffs)
        v = W.a2_forcing_check(P, args.q0, args.elambda, args.ell)
        inputs = {"P": str(P), "q0": args.q0, "e_lambda": args.elambda, "ell": args.ell}
        res = v.to_json()
        text = [f"P_e = {v.power_poly}", "refuted: no j-vector matches" if v.refuted else f"j = {v.j_vector}, exact {v.exact_equality}, all e/2 {v.all_half}"]
    elif what == "mq":
        v = W.ExponentVector(args.ell, tuple(int(x) for x in args.i.split(",")))
        m0, m = W.mq_from_exponents(v)
        inputs = {"ell": args.ell, "i": list(v.i)}
        res = {"m0": m0, "m": m}
        text = [f"m0 = {m0}, m = {m}"]
    elif what == "min-degree":
        d = W.min_poly_degree(args.t, args.p)
        inputs = {"t": args.t, "p": args.p}
        res = {"degree": d}
        text = [str(d)]
    else:
        if what == "mazur":
            c = W.mazur_contradiction(args.g, args.q, args.f, args.ell)
        elif what == "sixth-root":
            c = W.sixth_root_analysis(args.g, args.p, args.ell)
        else:
            c = W.cubic_contradiction(args.q, args.ell)
        inputs = c.inputs
        res = c.to_json()
        text = _cert_text(c)
    # the absolute constant bounding ell in the cubic case is ineffective
    params = {"C10": "ineffective, not computed"} if what == "cubic" else {}
    env = ReportEnvelope(f"weil {what}", inputs, res, params)
    env.text = text
    return env


def cmd_family(args) -> ReportEnvelope:
    rows = []
    text = []
    for i in range(args.count):
        e = epsilon(i)
        u = verify_unit_conditions(i)
        j = j_invariant(family_curve(i))
        rows.append(
            {
                "i": i,
                "epsilon": str(e),
                "eps_unit": u.eps_unit,
                "eps_minus_one_2unit": u.eps_minus_one_2unit,
                "disc_norm_2_power": discriminant_norm_is_2_power(i),
                "j": str(j),
            }
        )
        text.append(f"i={i}: eps = {e}, unit {u.eps_unit}, 2-unit {u.eps_minus_one_2unit}, j = {j}")
    distinct = distinct_family_check(args.count)
    text.append(f"pairwise distinct j-invariants: {distinct}")
    env = ReportEnvelope("family", {"count": args.count}, {"rows": rows, "distinct": distinct}, {})
    env.text = text
    return env


def appendix_check(draws: int, seed: int) -> dict[str, Any]:
    """Random admissible draws for x0 and for the corollary bound."""
    rng = random.Random(seed)
    worst_gap, bound_ok = 0.0, True
    for _ in range(draws):
        N = rng.uniform(1.0, 8.0)
        c = max((4 / N) ** N, 1.0) * rng.uniform(1.0, 50.0)
        x, xb = B.x0(c, N), B.x0_bisection(c, N)
        worst_gap = max(worst_gap, abs(x - xb) / xb)
        bound_ok &= x <= B.x0_upper_bound(c, N)
    cor_ok, worst_cross = True, 0.0
    for _ in range(draws // 2):
        g, n = rng.randint(1, 4), rng.randint(1, 3)
        C3, c4, c5 = rng.uniform(1, 10), rng.uniform(0, 20), rng.randint(1, 24)
        bound = B.corollary_bound_raw(g, n, C3, c4, c5)
        cross = B.crossing_bisection_raw(g, n, C3, c4, c5)
        worst_cross = max(worst_cross, log(cross) - bound.log_e)
        cor_ok &= log(cross) <= bound.log_e
    return {
        "draws": draws,
        "x0_max_relative_gap": worst_gap,
        "x0_upper_bound_holds": bound_ok,
        "corollary_dominates": cor_ok,
        "max_log_crossing_minus_log_bound": worst_cross,
    }


def cmd_appendix(args) -> ReportEnvelope:
    res = appendix_check(args.draws, args.seed)
    w = B.lambert_w_m1(-0.25)
    res["w_ratio"] = w / (1 + w)
    env = ReportEnvelope("appendix-check", {"draws": args.draws}, res, {"C3": args.c3, "seed": args.seed})
    env.text = [
        f"W(-1/4)/(1+W(-1/4)) = {res['w_ratio']:.6f}",
        f"x0 vs bisection, max relative gap = {res['x0_max_relative_gap']:.3e}",
        f"x0 <= c N^(2N) on all draws: {res['x0_upper_bound_holds']}",
        f"corollary bound >= crossing on all draws: {res['corollary_dominates']}",
        f"seed = {args.seed}",
    ]
    return env


def cmd_cchain(args) -> ReportEnvelope:
    v = c_chain_violations(args.dmax, args.ellmax, args.nmax, args.fmax)
    inputs = {"d_max": args.dmax, "ell_max": args.ellmax, "n_max": args.nmax, "f_max": args.fmax}
    env = ReportEnvelope("cchain", inputs, {"violations": [list(map(str, x)) for x in v]}, {})
    env.text = [f"violations: {len(v)}"]
    return env


# ---------------------------------------------------------------------------
# parser

def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=d(False), help="print the JSON report")
    p.add_argument("--c3", type=float, default=d(1.0), help="effective Chebotarev constant C3 (>= 1)")
    p.add_argument("--c1prime", type=float, default=d(1.0), help="Elliott constant C1'")
    p.add_argument("--seed", type=int, default=d(0), help="seed for randomized suites")
    p.add_argument("--out", default=d(None), help="also write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="avsieve", allow_abbrev=False, description="Sieve and bound toolkit for abelian varieties with constrained torsion.")
    _global_flags(parser, suppress=False)
    shared = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    _global_flags(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, **kw) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[shared], allow_abbrev=False, **kw)
        sp.set_defaults(func=fn)
        return sp

    sp = add("mprime", cmd_mprime, help="factorization of M'(n)")
    sp.add_argument("n", type=int)
    sp.add_argument("--oracle", action="store_true", help="also compute the gcd of #GL_n(F_q)")

    sp = add("decomp", cmd_decomp, help="run the totient-decomposition sieve")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--nk", type=int, default=1)
    sp.add_argument("--general", action="store_true", help="general base even when n_K = 1")
    sp.add_argument("--semistable", action="store_true")

    add("table-g4", cmd_table_g4, help="survivor table for g = 4 over Q")

    sp = add("threshold", cmd_threshold, help="trace-forcing threshold on ell")
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--q0", type=int, required=True)
    sp.add_argument("--elambda", type=int, required=True)

    sp = add("bounds", cmd_bounds, help="explicit constants")
    sp.add_argument("which", choices=["c7", "c6", "c8", "n-uniform"])
    sp.add_argument("--g", type=int, default=1)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--nk", type=int, default=1)
    sp.add_argument("--logdisc", type=float, default=0.0)
    sp.add_argument("--ellprime", type=int, default=1)
    sp.add_argument("--eps", type=float, default=0.05)
    sp.add_argument("--c1prime4", type=float, default=None)

    sp = add("lambertw", cmd_lambertw, help="W_{-1}(x)")
    sp.add_argument("x", type=float)

    sp = add("x0", cmd_x0, help="largest root of x^(1/N) = log(cx)")
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--N", type=float, required=True)

    sp = add("residue", cmd_residue, help="least prime m-th power residue mod ell")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)

    sp = add("elliott-scan", cmd_elliott, help="scan least m-th power residues")
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--lo", type=int, default=3)
    sp.add_argument("--hi", type=int, default=10**4)
    sp.add_argument("--eps", type=float, default=0.1)
    sp.add_argument("--limit", type=int, default=DEFAULT_SCAN_LIMIT)
    sp.add_argument("--rows", action="store_true", help="include every row in the JSON report")

    sp = add("goldfeld", cmd_goldfeld, help="Goldfeld conditions for a quadratic field")
    sp.add_argument("--disc", type=int, required=True)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--ell", type=int)
    grp.add_argument("--N", type=int)
    sp.add_argument("--S", default="", help="comma-separated excluded primes")
    sp.add_argument("--limit", type=int, default=10**4)

    sp = add("weil", cmd_weil, help="Weil-number engine")
    sp.add_argument("what", choices=["power-charpoly", "forcing", "mq", "min-degree", "mazur", "sixth-root", "cubic"])
    sp.add_argument("--coeffs", help="comma-separated monic coefficients, top down")
    sp.add_argument("--e", type=int, default=1)
    sp.add_argument("--q0", type=int)
    sp.add_argument("--elambda", type=int)
    sp.add_argument("--ell", type=int)
    sp.add_argument("--i", help="comma-separated exponents")
    sp.add_argument("--t", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--g", type=int, default=1)
    sp.add_argument("--q", type=int)
    sp.add_argument("--f", type=int, default=1)

    sp = add("family", cmd_family, help="the Legendre family over Q(sqrt(4^i + 1))")
    sp.add_argument("--count", type=int, default=10)

    sp = add("appendix-check", cmd_appendix, help="randomized check of the Lambert-W machinery")
    sp.add_argument("--draws", type=int, default=200)

    sp = add("cchain", cmd_cchain, help="exhaustive scan of the computable condition chain")
    sp.add_argument("--dmax", type=int, default=60)
    sp.add_argument("--ellmax", type=int, default=200)
    sp.add_argument("--nmax", type=int, default=3)
    sp.add_argument("--fmax", type=int, default=3)
    return parser


_WEIL_REQUIRED = {
    "power-charpoly": ("coeffs",),
    "forcing": ("coeffs", "q0", "elambda", "ell"),
    "mq": ("ell", "i"),
    "min-degree": ("t", "p"),
    "mazur": ("q", "ell"),
    "sixth-root": ("p", "ell"),
    "cubic": ("q", "ell"),
}


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    level = os.environ.get("AVSIEVE_VERBOSITY", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "weil":
            missing = [k for k in _WEIL_REQUIRED[args.what] if getattr(args, k) is None]
            if missing:
                parser.error(f"weil {args.what} requires " + ", ".join("--" + k for k in missing))
    except SystemExit as exc:
        return int(exc.code or 0)
    logger.debug("running %s", args.command)
    try:
        if args.c3 < 1:
            raise PreconditionError("C3 >= 1", f"got {args.c3}")
        if args.c1prime <= 0:
            raise PreconditionError("C1' > 0", f"got {args.c1prime}")
        env = args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if "C3" not in env.parameters:
        env.parameters["C3"] = args.c3
    if "C1_prime" not in env.parameters:
        env.parameters["C1_prime"] = args.c1prime
    payload = env.dumps()
    print(payload if args.json else "\n".join(env.text), file=stdout)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    return 0


def main() -> None:
    sys.exit(run())
