"""Small power residues and the Goldfeld-type conditions for quadratic fields."""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import PreconditionError, is_prime, iter_primes, primes_up_to, smallest_prime_mth_residue, squarefree_part

ELLIOTT_MAX_M = 8
ELLIOTT_MAX_HI = 10**6


def is_fundamental_discriminant(D: int) -> bool:
    if D in (0, 1):
        raise PreconditionError("D not in {0, 1}", f"got {D}")
    if D % 4 == 1:
        return squarefree_part(D)[0] == 1
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree_part(m)[0] == 1
    return False


def field_discriminant(n: int) -> int:
    """Discriminant of Q(sqrt(n)) for n not a square."""
    s, r = squarefree_part(n)
    d = r if n > 0 else -r
    if d == 1:
        raise PreconditionError("n not a perfect square", f"got {n}")
    return d if d % 4 == 1 else 4 * d


def kronecker(D: int, p: int) -> int:
    """Kronecker symbol (D/p) for p prime."""
    if p == 2:
        if D % 2 == 0:
            return 0
        return 1 if D % 8 in (1, 7) else -1
    r = D % p
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class QuadraticField:
    disc: int

    def __post_init__(self):
        if self.disc in (0, 1) or not is_fundamental_discriminant(self.disc):
            raise PreconditionError("disc a fundamental discriminant", f"got {self.disc}")

    def splits(self, p: int) -> bool:
        """p splits completely; ramified primes count as non-split."""
        return kronecker(self.disc, p) == 1

    def __str__(self) -> str:
        return f"Q(sqrt({self.disc if self.disc % 4 == 1 else self.disc // 4}))"


def fundamental_discriminants(bound: int) -> list[int]:
    """All fundamental discriminants D with |D| <= bound, sorted by (|D|, sign)."""
    out = [D for a in range(2, bound + 1) for D in (-a, a) if is_fundamental_discriminant(D)]
    return out


@dataclass(frozen=True)
class GoldfeldVerdict:
    N: int
    go1: bool
    go2: bool
    witnesses: tuple[int, ...] = field(default=())

    @property
    def member(self) -> bool:
        return self.go1 and self.go2


def goldfeld_check(N: int, K: QuadraticField, S: frozenset[int] | set[int] = frozenset()) -> GoldfeldVerdict:
    """(Go 1): -N is a fundamental discriminant. (Go 2): every prime p < |N|/4,
    p not in S, that splits in K does not split in Q(sqrt(-N))."""
    if abs(N) < 3:
        raise PreconditionError("|N| >= 3", f"got {N}")
    go1 = is_fundamental_discriminant(-N)
    # splitting in Q(sqrt(-N)) depends only on the squarefree class of -N
    square = squarefree_part(-N)[1] == 1 and -N > 0
    L_disc = None if square else -N if go1 else field_discriminant(-N)
    witnesses = []
    for p in iter_primes():
        if 4 * p >= abs(N):
            break
        if p in S or not K.splits(p):
            continue
        splits_L = N % p != 0 if L_disc is None else kronecker(L_disc, p) == 1
        if splits_L:
            witnesses.append(p)
    return GoldfeldVerdict(N, go1, not witnesses, tuple(witnesses))


def ell_star(ell: int) -> int:
    return ell if ell % 4 == 1 else -ell


def nprime_member(ell: int, K: QuadraticField) -> bool:
    """Every prime p < ell/4 splitting in K is a non-residue mod ell."""
    if ell < 3 or not is_prime(ell):
        raise PreconditionError("ell odd prime", f"got {ell}")
    for p in iter_primes():
        if 4 * p >= ell:
            return True
        if K.splits(p) and pow(p, (ell - 1) // 2, ell) == 1:
            return False


def nprime_count(K: QuadraticField, limit: int) -> int:
    return sum(1 for ell in primes_up_to(limit) if ell > 2 and nprime_member(ell, K))


@dataclass(frozen=True)
class ElliottRow:
    ell: int
    p_min: int
    ratio: float


@dataclass(frozen=True)
class ElliottScan:
    m: int
    eps: float
    rows: tuple[ElliottRow, ...]

    @property
    def max_ratio(self) -> float:
        return max((r.ratio for r in self.rows), default=0.0)

    @property
    def argmax(self) -> ElliottRow | None:
        return max(self.rows, key=lambda r: r.ratio, default=None)


def elliott_scan(m: int, lo: int, hi: int, eps: float) -> ElliottScan:
    """p_min(m, ell) / ell^{(m-1)/4 + eps} over odd primes ell in [lo, hi]."""
    if not 1 <= m <= ELLIOTT_MAX_M:
        raise PreconditionError(f"1 <= m <= {ELLIOTT_MAX_M}", f"got {m}")
    if hi > ELLIOTT_MAX_HI or lo > hi:
        raise PreconditionError(f"lo <= hi <= {ELLIOTT_MAX_HI}", f"got [{lo}, {hi}]")
    if eps <= 0:
        raise PreconditionError("eps > 0", f"got {eps}")
    expo = (m - 1) / 4 + eps
    rows = []
    for ell in primes_up_to(hi):
        if ell < max(lo, 3):
            continue
        p = smallest_prime_mth_residue(m, ell)
        rows.append(ElliottRow(ell, p, p / ell**expo))
    return ElliottScan(m, eps, tuple(rows))
