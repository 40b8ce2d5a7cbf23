"""Exact real quadratic arithmetic for the family of Legendre curves
y^2 = x(x - 1)(x - eps_i) with eps_i = -2^i + sqrt(4^i + 1)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Union

from .arith import PreconditionError, v_p

EPSILON_MAX_I = 64
FAMILY_MAX_COUNT = 20

Number = Union[int, Fraction, "QuadRat"]


@lru_cache(maxsize=None)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """n = s^2 r with r squarefree; sympy handles the large factorizations."""
    from sympy import factorint

    s, r = 1, 1
    for p, k in factorint(n).items():
        s *= p ** (k // 2)
        if k % 2:
            r *= p
    return s, r


@dataclass(frozen=True)
class QuadRat:
    """a + b sqrt(D), D > 1 squarefree, a and b rational."""

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        if self.D < 2:
            raise PreconditionError("D > 1 squarefree", f"got {self.D}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def _coerce(self, other: Number) -> QuadRat:
        if isinstance(other, QuadRat):
            if other.D != self.D:
                raise PreconditionError("same quadratic field", f"D={self.D} vs {other.D}")
            return other
        return QuadRat(Fraction(other), Fraction(0), self.D)

    def __add__(self, other: Number) -> QuadRat:
        o = self._coerce(other)
        return QuadRat(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self) -> QuadRat:
        return QuadRat(-self.a, -self.b, self.D)

    def __sub__(self, other: Number) -> QuadRat:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Number) -> QuadRat:
        return self._coerce(other) - self

    def __mul__(self, other: Number) -> QuadRat:
        o = self._coerce(other)
        return QuadRat(self.a * o.a + self.D * self.b * o.b, self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadRat:
        out = QuadRat(Fraction(1), Fraction(0), self.D)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> QuadRat:
        return QuadRat(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> QuadRat:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero in a quadratic field")
        c = self.conjugate()
        return QuadRat(c.a / n, c.b / n, self.D)

    def __truediv__(self, other: Number) -> QuadRat:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Number) -> QuadRat:
        return self._coerce(other) * self.inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadRat):
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.D))

    def is_rational(self) -> bool:
        return self.b == 0

    def min_poly(self) -> tuple[Fraction, ...]:
        """Monic minimal polynomial over Q, coefficients from the top."""
        if self.is_rational():
            return (Fraction(1), -self.a)
        return (Fraction(1), -self.trace(), self.norm())

    def to_float(self) -> float:
        root = self.D**0.5
        if self.a * self.b < 0:
            # opposite signs cancel; divide the exact norm by the conjugate
            return float(self.norm()) / (float(self.a) - float(self.b) * root)
        return float(self.a) + float(self.b) * root

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        mag = abs(self.b)
        coef = "" if mag == 1 else f"{mag}*"
        return f"{self.a} {sign} {coef}sqrt({self.D})"


def epsilon(i: int) -> QuadRat:
    """eps_i = -2^i + sqrt(4^i + 1), written over Q(sqrt D) with D the squarefree part."""
    if not 0 <= i <= EPSILON_MAX_I:
        raise PreconditionError(f"0 <= i <= {EPSILON_MAX_I}", f"got {i}")
    s, D = squarefree_decompose(4**i + 1)
    return QuadRat(Fraction(-(2**i)), Fraction(s), D)


@dataclass(frozen=True)
class UnitConditions:
    eps_unit: bool
    eps_minus_one_2unit: bool
    eps_const: Fraction
    eps_minus_one_const: Fraction


def _is_signed_power_of_two(x: Fraction) -> bool:
    if x.denominator != 1 or x == 0:
        return False
    n = abs(x.numerator)
    return n == 1 << v_p(n, 2)


def verify_unit_conditions(i: int) -> UnitConditions:
    """eps_i is a unit and eps_i - 1 is a 2-unit, read off minimal polynomials."""
    e = epsilon(i)
    c0 = e.min_poly()[-1]
    c1 = (e - 1).min_poly()[-1]
    return UnitConditions(abs(c0) == 1, _is_signed_power_of_two(c1), c0, c1)


@dataclass(frozen=True)
class LegendreCurve:
    lam: QuadRat

    def __post_init__(self):
        if self.lam == 0 or self.lam == 1:
            raise PreconditionError("lambda not in {0, 1}", str(self.lam))

    def discriminant(self) -> QuadRat:
        """16 lambda^2 (lambda - 1)^2."""
        l = self.lam
        return 16 * l * l * (l - 1) * (l - 1)


def j_invariant(curve: LegendreCurve) -> QuadRat:
    """2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2)."""
    l = curve.lam
    num = 256 * (l * l - l + 1) ** 3
    den = l * l * (l - 1) * (l - 1)
    return num / den


def j_invariant_rational(lam: Fraction) -> Fraction:
    lam = Fraction(lam)
    if lam in (0, 1):
        raise PreconditionError("lambda not in {0, 1}", str(lam))
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


def family_curve(i: int) -> LegendreCurve:
    return LegendreCurve(epsilon(i))


def discriminant_norm_is_2_power(i: int) -> bool:
    return _is_signed_power_of_two(family_curve(i).discriminant().norm())


def distinct_family_check(count: int) -> bool:
    """j(E_0), ..., j(E_{count-1}) pairwise distinct as algebraic numbers.

    Two elements of real quadratic fields are equal iff they are conjugate
    roots of the same minimal polynomial and coincide after aligning
    fields; distinct minimal polynomials already separate them.
    """
    if not 0 <= count <= FAMILY_MAX_COUNT:
        raise PreconditionError(f"0 <= count <= {FAMILY_MAX_COUNT}", f"got {count}")
    js = [j_invariant(family_curve(i)) for i in range(count)]
    for x, y in combinations(js, 2):
        if _algebraically_equal(x, y):
            return False
    return True


def _algebraically_equal(x: QuadRat, y: QuadRat) -> bool:
    if x.min_poly() != y.min_poly():
        return False
    if x.is_rational():
        return True
    # same irrational minimal polynomial: equal iff same field and same root
    return x.D == y.D and x.b == y.b
