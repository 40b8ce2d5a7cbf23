import pytest
import sympy
from hypothesis import given, strategies as st

from avsieve.arith import PreconditionError, primes_up_to, smallest_prime_mth_residue
from avsieve.residues import (
    QuadraticField,
    ell_star,
    elliott_scan,
    field_discriminant,
    fundamental_discriminants,
    goldfeld_check,
    is_fundamental_discriminant,
    kronecker,
    nprime_count,
    nprime_member,
)

DISCS = fundamental_discriminants(40)
ODD_PRIMES = [p for p in primes_up_to(500) if p > 2]


def test_fundamental_discriminant_examples():
    assert is_fundamental_discriminant(-4)
    assert is_fundamental_discriminant(-11)
    assert is_fundamental_discriminant(12)
    assert not is_fundamental_discriminant(18)
    for bad in (0, 1):
        with pytest.raises(PreconditionError):
            is_fundamental_discriminant(bad)


def test_fundamental_discriminants_match_field_discriminants():
    # a fundamental discriminant is exactly the discriminant of Q(sqrt D)
    for D in range(-300, 301):
        if D in (0, 1):
            continue
        is_square = D > 0 and sympy.sqrt(D).is_integer
        expected = not is_square and field_discriminant(D) == D
        assert is_fundamental_discriminant(D) == expected


def split_by_factoring(disc: int, p: int) -> bool:
    """x^2 - disc (or x^2 - x + (1 - disc)/4) has two distinct roots mod p."""
    if disc % 4 == 1:
        poly = [(x * x - x + (1 - disc) // 4) % p for x in range(p)]
        disc_poly = disc % p
    else:
        poly = [(x * x - disc // 4) % p for x in range(p)]
        disc_poly = disc % p
    roots = sum(1 for v in poly if v == 0)
    return roots == 2 and disc_poly != 0


@pytest.mark.parametrize("D", [-4, -3, 5, 8, 12, -20, 13, -7, 24, 21])
def test_splitting_matches_factorization(D):
    K = QuadraticField(D)
    for p in primes_up_to(500):
        assert K.splits(p) == split_by_factoring(D, p)


@given(st.integers(-10**6, 10**6), st.sampled_from(list(primes_up_to(400))))
def test_kronecker_matches_sympy(D, p):
    if D % 4 in (2, 3) and p == 2:
        return  # the Kronecker symbol at 2 is only used for discriminants
    ref = sympy.jacobi_symbol(D, p) if p > 2 else sympy.kronecker_symbol(D, p)
    assert kronecker(D, p) == ref


def test_ell_star_sign():
    for ell in ODD_PRIMES:
        if ell % 4 == 3:
            assert -ell_star(ell) == ell
        else:
            assert -ell_star(ell) == -ell
        assert is_fundamental_discriminant(ell_star(ell))


def test_goldfeld_examples():
    v = goldfeld_check(3, QuadraticField(5))
    assert v.go2 and v.witnesses == ()
    v = goldfeld_check(20, QuadraticField(8), {2})
    assert v.go1 and v.go2
    with pytest.raises(PreconditionError):
        goldfeld_check(2, QuadraticField(5))


def test_nprime_examples():
    assert nprime_member(3, QuadraticField(5))
    assert not nprime_member(31, QuadraticField(8))
    # 7 < 29/4 splits in Q(sqrt 2) and is a square mod 29
    assert not nprime_member(29, QuadraticField(8))
    assert pow(7, 14, 29) == 1
    assert nprime_member(23, QuadraticField(8))


def nprime_by_definition(ell: int, K: QuadraticField) -> bool:
    return all(sympy.legendre_symbol(p, ell) == -1 for p in sympy.primerange(2, ell) if 4 * p < ell and K.splits(p))


@pytest.mark.parametrize("D", DISCS)
def test_nprime_equals_goldfeld_membership(D):
    K = QuadraticField(D)
    for ell in ODD_PRIMES:
        member = nprime_member(ell, K)
        assert member == goldfeld_check(-ell_star(ell), K).member
        assert member == nprime_by_definition(ell, K)


def test_nprime_counts_are_reported():
    K = QuadraticField(-4)
    counts = [nprime_count(K, n) for n in (1000, 10000)]
    assert counts[0] <= counts[1]


def test_elliott_scan_small():
    s = elliott_scan(2, 3, 100, 0.1)
    assert [r.ell for r in s.rows] == [p for p in primes_up_to(100) if p > 2]
    for r in s.rows:
        squares = {x * x % r.ell for x in range(1, r.ell)}
        assert r.p_min % r.ell in squares
        assert all(q % r.ell not in squares for q in primes_up_to(r.p_min - 1) if q != r.ell)
        assert abs(r.ratio - r.p_min / r.ell ** 0.35) < 1e-12
    assert s.max_ratio == max(r.ratio for r in s.rows)


def test_elliott_first_powers():
    s = elliott_scan(1, 3, 500, 0.1)
    assert all(r.p_min == 2 for r in s.rows)


def test_elliott_guards():
    with pytest.raises(PreconditionError):
        elliott_scan(9, 3, 100, 0.1)
    with pytest.raises(PreconditionError):
        elliott_scan(2, 3, 10**6 + 1, 0.1)


def test_elliott_scan_max_ratio_finite():
    s = elliott_scan(2, 3, 10**4, 0.1)
    assert 0 < s.max_ratio < float("inf")
    assert s.argmax.p_min == smallest_prime_mth_residue(2, s.argmax.ell)
