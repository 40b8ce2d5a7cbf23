"""Exact integer arithmetic: primes, valuations, totients, orders, CRT."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd, isqrt, lcm, log
from typing import Iterable, Iterator


class PreconditionError(ValueError):
    """Raised when an operation is called outside its documented domain."""

    def __init__(self, precondition: str, detail: str = ""):
        self.precondition = precondition
        msg = f"precondition violated: {precondition}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


# ---------------------------------------------------------------------------
# primes

@dataclass(frozen=True)
class PrimePool:
    limit: int
    primes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __contains__(self, n: object) -> bool:
        from bisect import bisect_left

        if not isinstance(n, int):
            return False
        i = bisect_left(self.primes, n)
        return i < len(self.primes) and self.primes[i] == n


def primes_up_to(limit: int) -> PrimePool:
    """Sieve of Eratosthenes; returns all primes <= limit."""
    if limit < 2:
        return PrimePool(max(limit, 0), ())
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return PrimePool(limit, tuple(i for i, flag in enumerate(sieve) if flag))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iter_primes(start: int = 2) -> Iterator[int]:
    """Unbounded increasing stream of primes >= start."""
    n = max(start, 2)
    if n == 2:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def next_prime(n: int) -> int:
    """Least prime strictly greater than n."""
    return next(iter_primes(n + 1))


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization (intended for the small moduli used here)."""
    if n < 1:
        raise PreconditionError("n >= 1", f"got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    p = 5
    step = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power_decomposition(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p**k, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    ((p, k),) = f.items()
    return p, k


def divisors(n: int) -> list[int]:
    out = [1]
    for p, k in factorize(n).items():
        out = [d * p**j for d in out for j in range(k + 1)]
    return sorted(out)


def squarefree_part(n: int) -> tuple[int, int]:
    """Write |n| = s**2 * r with r squarefree; returns (s, r)."""
    s, r = 1, 1
    for p, k in factorize(abs(n)).items():
        s *= p ** (k // 2)
        if k % 2:
            r *= p
    return s, r


# ---------------------------------------------------------------------------
# valuations, totient, orders

def v_p(n: int, p: int) -> int:
    if n == 0:
        raise PreconditionError("n >= 1", "valuation of 0 is infinite")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def v_p_factorial(n: int, p: int) -> int:
    """v_p(n!) by Legendre's formula."""
    total, pk = 0, p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def euler_phi(d: int) -> int:
    if d < 1:
        raise PreconditionError("d >= 1", f"got {d}")
    result = d
    for p in factorize(d):
        result -= result // p
    return result


def mult_order(a: int, n: int) -> int:
    """Least k >= 1 with a**k = 1 (mod n)."""
    if n < 1:
        raise PreconditionError("n >= 1", f"got {n}")
    if n == 1:
        return 1
    if gcd(a, n) != 1:
        raise PreconditionError("gcd(a, n) = 1", f"a={a}, n={n}")
    order = euler_phi(n)
    for p in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


# ---------------------------------------------------------------------------
# congruence classes

@dataclass(frozen=True)
class CongruenceClass:
    """Integers congruent to one of `residues` modulo `modulus`.

    The empty class is stored as modulus 1 with no residues. Instances built
    through `make` are canonical: the modulus cannot be reduced without
    changing the solution set.
    """

    modulus: int
    residues: frozenset[int]

    @classmethod
    def make(cls, modulus: int, residues: Iterable[int]) -> CongruenceClass:
        if modulus < 1:
            raise PreconditionError("modulus >= 1", f"got {modulus}")
        res = frozenset(r % modulus for r in residues)
        if not res:
            return cls.empty()
        return _canonicalize(modulus, res)

    @classmethod
    def empty(cls) -> CongruenceClass:
        return cls(1, frozenset())

    @classmethod
    def universal(cls) -> CongruenceClass:
        return cls(1, frozenset({0}))

    @property
    def is_empty(self) -> bool:
        return not self.residues

    def __contains__(self, n: int) -> bool:
        return n % self.modulus in self.residues

    def sorted_residues(self) -> list[int]:
        return sorted(self.residues)

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        rs = ", ".join(map(str, self.sorted_residues()))
        if len(self.residues) == 1:
            return f"{rs} (mod {self.modulus})"
        return f"{{{rs}}} (mod {self.modulus})"


def _canonicalize(modulus: int, res: frozenset[int]) -> CongruenceClass:
    changed = True
    while changed and modulus > 1:
        changed = False
        for p in factorize(modulus):
            m = modulus // p
            reduced = {r % m for r in res}
            if len(reduced) * p == len(res):
                # every lift of every reduced residue is present
                modulus, res = m, frozenset(reduced)
                changed = True
                break
    return CongruenceClass(modulus, res)


def _crt_pair(r1: int, m1: int, r2: int, m2: int) -> int | None:
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    m2g = m2 // g
    t = ((r2 - r1) // g) * pow(m1 // g, -1, m2g) % m2g if m2g > 1 else 0
    return (r1 + m1 * t) % lcm(m1, m2)


def crt_intersect(c1: CongruenceClass, c2: CongruenceClass) -> CongruenceClass:
    """Class of integers lying in both c1 and c2."""
    if c1.is_empty or c2.is_empty:
        return CongruenceClass.empty()
    L = lcm(c1.modulus, c2.modulus)
    sols = set()
    for r1 in c1.residues:
        for r2 in c2.residues:
            x = _crt_pair(r1, c1.modulus, r2, c2.modulus)
            if x is not None:
                sols.add(x)
    return CongruenceClass.make(L, sols)


def crt_intersect_all(classes: Iterable[CongruenceClass]) -> CongruenceClass:
    return reduce(crt_intersect, classes, CongruenceClass.universal())


# ---------------------------------------------------------------------------
# power residues

def is_mth_power_residue(a: int, m: int, ell: int) -> bool:
    """True iff a mod ell lies in the subgroup of m-th powers of F_ell^x."""
    if a % ell == 0:
        return False
    k = gcd(m, ell - 1)
    return pow(a, (ell - 1) // k, ell) == 1


def smallest_prime_mth_residue(m: int, ell: int) -> int:
    """Least prime p != ell whose residue mod ell is an m-th power."""
    if m < 1:
        raise PreconditionError("m >= 1", f"got {m}")
    if ell < 3 or not is_prime(ell):
        raise PreconditionError("ell odd prime", f"got {ell}")
    for p in iter_primes():
        if p != ell and is_mth_power_residue(p, m, ell):
            return p
    raise AssertionError("unreachable")


def log_int(n: int) -> float:
    """Natural log of an arbitrarily large positive integer."""
    if n <= 0:
        raise PreconditionError("n > 0", f"got {n}")
    bits = n.bit_length()
    if bits < 1000:
        return log(n)
    shift = bits - 60
    return log(n >> shift) + shift * log(2)


# ---------------------------------------------------------------------------
# large magnitudes

_GUARD = 1e-9


@dataclass(frozen=True)
class Magnitude:
    """A positive quantity stored as natural log, with the exact integer when known.

    Comparisons against concrete integers use the exact value when present,
    otherwise logs with a relative guard band; ties count as "not exceeded".
    """

    log_e: float
    exact: int | None = None

    @classmethod
    def from_int(cls, n: int) -> Magnitude:
        return cls(log_int(n), n)

    @classmethod
    def from_float(cls, x: float) -> Magnitude:
        if x <= 0:
            raise PreconditionError("magnitude > 0", f"got {x}")
        return cls(log(x))

    @property
    def log10(self) -> float:
        return self.log_e / log(10)

    def value(self) -> float:
        """Float value (inf when it overflows)."""
        if self.exact is not None:
            try:
                return float(self.exact)
            except OverflowError:
                return float("inf")
        from math import exp

        try:
            return exp(self.log_e)
        except OverflowError:
            return float("inf")

    def exceeded_by(self, n: int) -> bool:
        """Conservative test for n > self."""
        if self.exact is not None:
            return n > self.exact
        return log_int(n) > self.log_e + _GUARD * max(1.0, abs(self.log_e))

    def __lt__(self, other: Magnitude) -> bool:
        if self.exact is not None and other.exact is not None:
            return self.exact < other.exact
        return self.log_e < other.log_e

    def __le__(self, other: Magnitude) -> bool:
        return self == other or self < other

    def describe(self) -> str:
        if self.exact is not None and self.exact.bit_length() <= 64:
            return str(self.exact)
        return f"exp({self.log_e:.6f}) ~ 10^{self.log10:.4f}"


def max_magnitude(*items: Magnitude) -> Magnitude:
    best = items[0]
    for m in items[1:]:
        if best < m:
            best = m
    return best
