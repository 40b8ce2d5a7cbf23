import pytest
from hypothesis import given, strategies as st

from avsieve.arith import PreconditionError, is_prime
from avsieve.glorders import gl_gcd_oracle, gl_order, m_prime, oracle_primes, u_p

# frozen from the gcd oracle (8 primes, stable with 10)
FROZEN = {1: 2, 2: 48, 3: 96, 4: 23040, 5: 46080, 6: 23224320, 7: 46448640, 8: 22295347200}


@pytest.mark.parametrize("n", range(1, 9))
def test_m_prime_matches_gcd_oracle(n):
    assert m_prime(n).value == gl_gcd_oracle(n, 8) == gl_gcd_oracle(n, 10)


@pytest.mark.parametrize("n, value", sorted(FROZEN.items()))
def test_frozen_values(n, value):
    assert m_prime(n).value == value


def test_rendering():
    assert str(m_prime(2)) == "48 = 2^4 · 3"
    assert str(m_prime(4)) == "23040 = 2^9 · 3^2 · 5"


def test_gl_order_small():
    assert gl_order(1, 5) == 4
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert gl_order(2, 4) == 180
    with pytest.raises(PreconditionError):
        gl_order(2, 6)
    with pytest.raises(PreconditionError):
        gl_order(2, 1)


def test_oracle_primes_skip_small():
    ps = oracle_primes(4)
    assert ps[0] == 5 and len(ps) == 8 and all(is_prime(p) for p in ps)


@given(st.integers(min_value=1, max_value=10), st.sampled_from([11, 13, 17, 19, 23, 29, 31, 37, 41, 43]))
def test_m_prime_divides_gl_order(n, q):
    assert gl_order(n, q) % m_prime(n).value == 0


@given(st.integers(min_value=1, max_value=30))
def test_m_prime_divisibility_chain(n):
    # M'(n) | M'(n+1): the exponents u_p are nondecreasing in n
    assert m_prime(n + 1).value % m_prime(n).value == 0


def test_u_p_rejects_composite():
    with pytest.raises(PreconditionError):
        u_p(4, 4)
