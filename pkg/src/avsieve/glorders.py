"""Orders of GL_n over finite fields and their universal divisor M'(n)."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd, prod

from .arith import PreconditionError, iter_primes, is_prime, prime_power_decomposition, v_p_factorial


def u_p(n: int, p: int) -> int:
    """Exponent of p in M'(n)."""
    if n < 1:
        raise PreconditionError("n >= 1", f"got {n}")
    if not is_prime(p):
        raise PreconditionError("p prime", f"got {p}")
    if p == 2:
        return v_p_factorial(n, 2) + n + n // 2
    k = n // (p - 1)
    return v_p_factorial(k, p) + k


@dataclass(frozen=True)
class MPrimeFactorization:
    n: int
    factors: dict[int, int] = field(hash=False)
    value: int

    def __str__(self) -> str:
        parts = [str(p) if k == 1 else f"{p}^{k}" for p, k in sorted(self.factors.items())]
        return f"{self.value} = " + " · ".join(parts)


@lru_cache(maxsize=None)
def m_prime(n: int) -> MPrimeFactorization:
    """M'(n) = prod_p p^{u_p(n)}; only primes p <= n + 1 contribute."""
    if n < 1:
        raise PreconditionError("n >= 1", f"got {n}")
    factors = {}
    for p in iter_primes():
        if p > n + 1:
            break
        k = u_p(n, p)
        if k:
            factors[p] = k
    value = prod(p**k for p, k in factors.items())
    return MPrimeFactorization(n, factors, value)


def gl_order(n: int, q: int) -> int:
    """#GL_n(F_q) = prod_{i<n} (q^n - q^i)."""
    if n < 1:
        raise PreconditionError("n >= 1", f"got {n}")
    if q < 2:
        raise PreconditionError("q >= 2", f"got {q}")
    if prime_power_decomposition(q) is None:
        raise PreconditionError("q a prime power", f"got {q}")
    qn = q**n
    return prod(qn - q**i for i in range(n))


def oracle_primes(n: int, count: int = 8) -> list[int]:
    """The first `count` odd primes q with q not dividing 2*n!, i.e. q > max(n, 2)."""
    out = []
    for q in iter_primes(max(n, 2) + 1):
        out.append(q)
        if len(out) == count:
            break
    return out


def gl_gcd_oracle(n: int, count: int = 8) -> int:
    """gcd of #GL_n(F_q) over the sampled primes; independent check of M'(n)."""
    return reduce(gcd, (gl_order(n, q) for q in oracle_primes(n, count)))
