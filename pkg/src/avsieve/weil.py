"""Exact Weil-number engine: power characteristic polynomials, forcing of
exponents under the trace bound, m_Q combinatorics, and the Mazur-style
contradiction certificates built on 12th-root-of-unity multiples of sqrt(q).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, gcd, isqrt, lcm
from typing import Any

from .arith import PreconditionError, is_prime, prime_power_decomposition, squarefree_part
from .bounds import A2Input, a2_threshold


# ---------------------------------------------------------------------------
# integer polynomials

@dataclass(frozen=True)
class IntPolynomial:
    """Monic integer polynomial, coefficients listed from the leading term down."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients or self.coefficients[0] != 1:
            raise PreconditionError("monic polynomial", f"got {self.coefficients}")

    @classmethod
    def of(cls, *coefficients: int) -> IntPolynomial:
        return cls(tuple(int(c) for c in coefficients))

    @classmethod
    def from_roots(cls, roots: list[int]) -> IntPolynomial:
        coeffs = [1]
        for r in roots:
            coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        acc = 0
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        n = self.degree
        terms = []
        for i, c in enumerate(self.coefficients):
            k = n - i
            if c == 0:
                continue
            mono = "" if k == 0 else "T" if k == 1 else f"T^{k}"
            mag = abs(c)
            body = str(mag) if k == 0 or mag != 1 else ""
            body += mono
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def power_sums(P: IntPolynomial, count: int) -> list[int]:
    """p_1..p_count of the roots, by Newton's identities."""
    c = P.coefficients
    n = P.degree
    p = [0] * (count + 1)
    for k in range(1, count + 1):
        s = sum(c[i] * p[k - i] for i in range(1, min(k, n + 1)))
        if k <= n:
            s += k * c[k]
        p[k] = -s
    return p[1:]


def from_power_sums(sums: list[int], n: int) -> IntPolynomial:
    """Monic degree-n polynomial with the given first n power sums (exact division)."""
    c = [1] + [0] * n
    for k in range(1, n + 1):
        s = sums[k - 1] + sum(c[i] * sums[k - i - 1] for i in range(1, k))
        if s % k:
            raise ArithmeticError("power sums are not those of an integer polynomial")
        c[k] = -s // k
    return IntPolynomial(tuple(c))


def power_charpoly(P: IntPolynomial, e: int) -> IntPolynomial:
    """Polynomial whose roots are the e-th powers of the roots of P."""
    if e < 1:
        raise PreconditionError("e >= 1", f"got {e}")
    n = P.degree
    p = power_sums(P, n * e)
    return from_power_sums([p[k * e - 1] for k in range(1, n + 1)], n)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def weil_functional_equation(P: IntPolynomial, q: int) -> bool:
    """c_{2g-i} = q^{g-i} c_i, i.e. roots are closed under alpha -> q/alpha."""
    n = P.degree
    if n % 2:
        return False
    g = n // 2
    # coefficient of T^{n-k} is coefficients[k]; pairing T^k with T^{n-k}
    c = P.coefficients
    return all(c[n - k] == q ** (g - k) * c[k] for k in range(g + 1))


def trace_polynomial(P: IntPolynomial, q: int) -> list[int]:
    """h with P(T) = T^g h(T + q/T), coefficients from the top; needs the functional equation."""
    n = P.degree
    g = n // 2
    c = list(P.coefficients)
    # T^{-g} P(T) = sum_k c[k] (T^{g-k} + q^{g-k} T^{k-g}) for k < g, plus c[g]
    # expand with T^j + q^j T^{-j} written as a polynomial in x = T + q/T
    h = [0] * (g + 1)  # h[i] = coefficient of x^i
    basis = {0: [2], 1: [0, 1]}  # x-polynomials (low to high) for T^j + q^j T^{-j}
    for j in range(2, g + 1):
        a, b = basis[j - 1], basis[j - 2]
        nxt = [0] + a
        for i, v in enumerate(b):
            nxt[i] -= q * v
        basis[j] = nxt
    for k in range(g):
        for i, v in enumerate(basis[g - k]):
            h[i] += c[k] * v
    h[0] += c[g]
    return list(reversed(h))


def _taylor_shift_reflect(c: list[int], a: int) -> list[int]:
    """Coefficients (top down) of (-1)^n f(a - z) for monic f with coefficients c."""
    n = len(c) - 1
    out = [0] * (n + 1)  # low to high in z
    for i, ci in enumerate(c):
        k = n - i  # ci * (a - z)^k
        for j in range(k + 1):
            out[j] += ci * comb(k, j) * a ** (k - j) * (-1) ** j
    sign = (-1) ** n
    return [sign * v for v in reversed(out)]


def is_weil_admissible(P: IntPolynomial, q: int) -> bool:
    """All complex roots of P have absolute value sqrt(q); decided exactly.

    With the functional equation in place, P(T) = T^g h(T + q/T) and the
    condition becomes: h is real-rooted with all roots r satisfying r^2 <= 4q.
    Real-rootedness is counted with sympy; the bound is checked through the
    polynomial k whose roots are 4q - r^2, which must all be >= 0 (sign
    alternation of a real-rooted polynomial).
    """
    import sympy

    if q < 1 or not weil_functional_equation(P, q):
        return False
    h = trace_polynomial(P, q)
    g = len(h) - 1
    if g == 0:
        return True
    x = sympy.Symbol("x")
    if len(sympy.real_roots(sympy.Poly(h, x))) != g:
        return False
    squares = power_charpoly(IntPolynomial(tuple(h)), 2).coefficients
    k = _taylor_shift_reflect(list(squares), 4 * q)
    return all((-1) ** i * c >= 0 for i, c in enumerate(k))


def elliptic_weil_polynomials(q: int) -> list[IntPolynomial]:
    """T^2 - aT + q for every integer |a| <= 2 sqrt(q)."""
    bound = isqrt(4 * q)
    return [IntPolynomial.of(1, -a, q) for a in range(-bound, bound + 1)]


# ---------------------------------------------------------------------------
# forcing of exponents

@dataclass(frozen=True)
class ForcingVerdict:
    power_poly: IntPolynomial
    j_vector: tuple[int, ...] | None
    congruence_matches: tuple[tuple[int, ...], ...]
    exact_equality: bool
    all_half: bool

    @property
    def refuted(self) -> bool:
        return self.j_vector is None

    def to_json(self) -> dict:
        return {
            "power_poly": str(self.power_poly),
            "j_vector": list(self.j_vector) if self.j_vector is not None else None,
            "congruence_matches": [list(j) for j in self.congruence_matches],
            "exact_equality": self.exact_equality,
            "all_half": self.all_half,
            "refuted": self.refuted,
        }


def a2_forcing_check(P: IntPolynomial, q0: int, e_lambda: int, ell: int) -> ForcingVerdict:
    """Search j-vectors with prod (T - q0^{j_r}) = P_{e_lambda}(T) mod ell.

    Above the threshold both sides have coefficients of absolute value < ell/2,
    so any congruence match must be an equality in Z, which in turn pins every
    j_r to e_lambda / 2.
    """
    if not is_prime(ell):
        raise PreconditionError("ell prime", f"got {ell}")
    g2 = P.degree
    if g2 % 2 or g2 == 0:
        raise PreconditionError("degree 2g >= 2", f"got {g2}")
    threshold = a2_threshold(A2Input(g2 // 2, q0, e_lambda))
    if ell <= threshold:
        raise PreconditionError("ell > a2_threshold", f"ell={ell}, threshold={threshold}")
    if not is_weil_admissible(P, q0):
        raise PreconditionError("P Weil-admissible for q0", str(P))
    Q = power_charpoly(P, e_lambda)
    target = tuple(c % ell for c in Q.coefficients)
    matches = []
    for js in combinations_with_replacement(range(e_lambda + 1), g2):
        R = IntPolynomial.from_roots([q0**j for j in js])
        if tuple(c % ell for c in R.coefficients) == target:
            matches.append(js)
    if not matches:
        return ForcingVerdict(Q, None, (), False, False)
    js = matches[0]
    exact = all(IntPolynomial.from_roots([q0**j for j in m]) == Q for m in matches)
    half = all(2 * j == e_lambda for m in matches for j in m)
    return ForcingVerdict(Q, js, tuple(matches), exact, half)


# ---------------------------------------------------------------------------
# exponent vectors and m_Q

@dataclass(frozen=True)
class ExponentVector:
    ell: int
    i: tuple[int, ...]
    delta: int | None = None

    def __post_init__(self):
        if not is_prime(self.ell):
            raise PreconditionError("ell prime", f"got {self.ell}")
        object.__setattr__(self, "i", tuple(x % (self.ell - 1) for x in self.i))
        if self.delta is not None:
            bound = (self.ell - 1) // self.delta
            if any(x >= bound for x in self.i):
                raise PreconditionError("i_r < (ell - 1)/delta", f"i={self.i}, delta={self.delta}")


def character_order(k: int, ell: int) -> int:
    """Order of chi^k, chi generating the cyclic group F_ell^x."""
    return (ell - 1) // gcd(k, ell - 1)


def mq_from_exponents(v: ExponentVector) -> tuple[int, int]:
    """(m0, m): lcm of the orders of chi^{2 i_r - 1}, and of chi^{i_r + i_s - 1} over all r, s."""
    ell, i = v.ell, v.i
    m0 = lcm(*(character_order(2 * a - 1, ell) for a in i)) if i else 1
    m = lcm(*(character_order(a + b - 1, ell) for a in i for b in i)) if i else 1
    return m0, m


def forced_window(target: int, bound: int, ell: int) -> list[int]:
    """Integers a with |a| <= bound and a = target (mod ell)."""
    start = -bound + ((target + bound) % ell)
    return list(range(start, bound + 1, ell))


def mazur_forced_trace(g: int, q: int, ell: int) -> int:
    if 4 * g * q >= ell:
        raise PreconditionError("q < ell/(4g)", f"g={g}, q={q}, ell={ell}")
    (a,) = forced_window(2 * g * q, 2 * g * q, ell)
    return a


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class Step:
    label: str
    claim: str
    holds: bool
    data: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"label": self.label, "claim": self.claim, "holds": self.holds, "data": self.data}


@dataclass(frozen=True)
class Certificate:
    name: str
    inputs: dict[str, Any]
    steps: tuple[Step, ...]
    notes: tuple[str, ...] = ()

    @property
    def valid(self) -> bool:
        """Every step checks out; the last one is the refutation of the hypothesis."""
        return bool(self.steps) and all(s.holds for s in self.steps)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "inputs": self.inputs,
            "steps": [s.to_json() for s in self.steps],
            "notes": list(self.notes),
            "valid": self.valid,
        }


def _odd_prime_power(q: int) -> tuple[int, int]:
    dec = prime_power_decomposition(q)
    if dec is None:
        raise PreconditionError("q a prime power", f"got {q}")
    return dec


def mazur_contradiction(g: int, q: int, f_odd: int, ell: int) -> Certificate:
    """Assuming chi(m_Q)(Frob) = 1 at a prime of norm q = p^f, f odd, derive ell | 4 g^2 q."""
    if not is_prime(ell):
        raise PreconditionError("ell prime", f"got {ell}")
    if f_odd % 2 == 0:
        raise PreconditionError("f odd", f"got {f_odd}")
    p, f = _odd_prime_power(q)
    if f != f_odd:
        raise PreconditionError("q = p^f", f"q={q}, f={f_odd}")
    if 4 * g * q >= ell:
        raise PreconditionError("q < ell/(4g)", f"g={g}, q={q}, ell={ell}")
    window = forced_window(2 * g * q, 2 * g * q, ell)
    steps = [
        Step("window", "4gq < ell", 4 * g * q < ell, {"4gq": 4 * g * q, "ell": ell}),
        Step(
            "forced a2",
            "a2 = 2gq (mod ell) and |a2| <= 2gq leave only a2 = 2gq",
            window == [2 * g * q],
            {"window": window},
        ),
        Step("eigenvalues", "a2 = 2gq forces alpha^2 = q for every r", True, {"q": q}),
        Step(
            "balance",
            "alpha = +-sqrt(q) with sqrt(q) irrational forces s+ = s- and a1 = 0",
            not _is_square(q),
            {"q_square": _is_square(q)},
        ),
        Step(
            "refutation",
            "0 = a1^2 = 4g^2 q (mod ell) requires ell | 4g^2 q, which fails",
            (4 * g * g * q) % ell != 0,
            {"4g^2q": 4 * g * g * q, "residue": (4 * g * g * q) % ell},
        ),
    ]
    return Certificate("mazur", {"g": g, "q": q, "f": f_odd, "ell": ell}, tuple(steps))


# ---------------------------------------------------------------------------
# Q(zeta_12) arithmetic

_PHI12_REDUCTION = {4: (-1, 0, 1, 0), 5: (0, -1, 0, 1)}  # zeta^4 = zeta^2 - 1, zeta^5 = zeta^3 - zeta


@dataclass(frozen=True)
class CycloElement:
    """Element of Q(zeta_12) in the basis 1, zeta, zeta^2, zeta^3 (Phi_12 = x^4 - x^2 + 1)."""

    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def make(cls, *coords) -> CycloElement:
        cs = [Fraction(c) for c in coords] + [Fraction(0)] * (4 - len(coords))
        return cls(tuple(cs))

    @classmethod
    def rational(cls, r) -> CycloElement:
        return cls.make(r)

    @classmethod
    def zeta(cls, k: int) -> CycloElement:
        k %= 12
        sign = 1
        if k >= 6:
            k -= 6
            sign = -1
        if k < 4:
            v = [0, 0, 0, 0]
            v[k] = sign
            return cls.make(*v)
        return cls.make(*(sign * c for c in _PHI12_REDUCTION[k]))

    def __add__(self, other: CycloElement) -> CycloElement:
        return CycloElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: CycloElement) -> CycloElement:
        return CycloElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> CycloElement:
        return CycloElement(tuple(-a for a in self.coords))

    def scale(self, r) -> CycloElement:
        r = Fraction(r)
        return CycloElement(tuple(a * r for a in self.coords))

    def __mul__(self, other: CycloElement) -> CycloElement:
        prod_ = [Fraction(0)] * 7
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    prod_[i + j] += a * b
        out = CycloElement.make()
        for k, c in enumerate(prod_):
            if c:
                out = out + CycloElement.zeta(k).scale(c)
        return out

    def apply(self, k: int) -> CycloElement:
        """Image under the automorphism zeta -> zeta^k."""
        if gcd(k, 12) != 1:
            raise PreconditionError("k a unit mod 12", f"got {k}")
        out = CycloElement.make()
        for i, a in enumerate(self.coords):
            if a:
                out = out + CycloElement.zeta(i * k).scale(a)
        return out

    def conjugate(self) -> CycloElement:
        return self.apply(11)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        names = ("", "z", "z^2", "z^3")
        parts = [f"{c}{'*' + n if n else ''}" for c, n in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"


SQRT3 = CycloElement.make(0, 2, 0, -1)  # zeta + zeta^{-1} = 2 zeta - zeta^3


def galois_actions(q: int) -> list[tuple[int, int]]:
    """Automorphisms of Q(zeta_12, sqrt q) as pairs (k, s): zeta -> zeta^k, sqrt q -> s sqrt q."""
    _, r = squarefree_part(q)
    if r == 1:
        return [(k, 1) for k in (1, 5, 7, 11)]
    if r == 3:
        # sqrt 3 = zeta + zeta^{-1} is moved by zeta -> zeta^5 and zeta -> zeta^7
        return [(k, 1 if k in (1, 11) else -1) for k in (1, 5, 7, 11)]
    return [(k, s) for k in (1, 5, 7, 11) for s in (1, -1)]


def act_on_index(t: int, action: tuple[int, int]) -> int:
    """zeta^t sqrt q -> zeta^{kt} (s sqrt q), as an index mod 12."""
    k, s = action
    return (k * t + (0 if s == 1 else 6)) % 12


def galois_orbit(t: int, q: int) -> frozenset[int]:
    return frozenset(act_on_index(t, a) for a in galois_actions(q))


def min_poly_degree(t: int, p: int) -> int:
    """Degree over Q of zeta_12^t sqrt(p): the size of its Galois orbit."""
    if p < 1:
        raise PreconditionError("p >= 1", f"got {p}")
    return len(galois_orbit(t % 12, p))


@dataclass(frozen=True)
class TraceValue:
    """cyclo * q^{q_power} * (sqrt q if sqrt else 1)."""

    cyclo: CycloElement
    q: int
    q_power: int
    sqrt: bool

    def as_rational(self) -> Fraction | None:
        base = self.cyclo.scale(Fraction(self.q) ** self.q_power)
        if not self.sqrt:
            return base.coords[0] if base.is_rational else None
        if base.is_zero:
            return Fraction(0)
        s, r = squarefree_part(self.q)
        if r == 1:
            return base.coords[0] * s if base.is_rational else None
        if r == 3:
            v = base * SQRT3.scale(s)
            return v.coords[0] if v.is_rational else None
        return None

    @property
    def is_rational(self) -> bool:
        return self.as_rational() is not None

    def __str__(self) -> str:
        r = self.as_rational()
        if r is not None:
            return str(r)
        tail = f" * {self.q}^{self.q_power}" if self.q_power else ""
        return f"({self.cyclo}){tail}" + (f" * sqrt({self.q})" if self.sqrt else "")


@dataclass(frozen=True)
class WeilConfig:
    """Multiset of roots zeta_12^t sqrt(q) with multiplicities kappa[t]."""

    q: int
    kappa: tuple[int, ...]

    def __post_init__(self):
        if len(self.kappa) != 12 or any(k < 0 for k in self.kappa):
            raise PreconditionError("kappa of length 12, nonnegative", f"got {self.kappa}")

    @classmethod
    def from_mu6(cls, q: int, kappa6: tuple[int, ...]) -> WeilConfig:
        """Roots eta^t sqrt(q), eta = zeta_12^2."""
        if len(kappa6) != 6:
            raise PreconditionError("kappa of length 6", f"got {kappa6}")
        k = [0] * 12
        for t, c in enumerate(kappa6):
            k[2 * t] = c
        return cls(q, tuple(k))

    @property
    def size(self) -> int:
        return sum(self.kappa)

    def is_galois_stable(self) -> bool:
        return all(
            self.kappa[act_on_index(t, a)] == self.kappa[t] for t in range(12) for a in galois_actions(self.q)
        )


def trace(config: WeilConfig, n: int) -> TraceValue:
    """sum_t kappa_t (zeta^t sqrt q)^n, exact."""
    if n < 0:
        raise PreconditionError("n >= 0", f"got {n}")
    c = CycloElement.make()
    for t, k in enumerate(config.kappa):
        if k:
            c = c + CycloElement.zeta(t * n).scale(k)
    return TraceValue(c, config.q, n // 2, n % 2 == 1)


def mu6_configs(two_g: int) -> list[tuple[int, ...]]:
    """All kappa in N^6 with sum 2g."""
    return [k for k in product(range(two_g + 1), repeat=6) if sum(k) == two_g]


def sixth_root_analysis(g: int, p: int, ell: int) -> Certificate:
    """Assuming m_Q = 6 and p a square mod ell, derive ell | 2gp."""
    if not is_prime(p) or not is_prime(ell):
        raise PreconditionError("p and ell prime", f"p={p}, ell={ell}")
    if 4 * g * p**3 >= ell:
        raise PreconditionError("p^3 < ell/(4g)", f"g={g}, p={p}, ell={ell}")
    if (ell - 1) % 6:
        raise PreconditionError("6 | ell - 1", f"ell={ell}")
    bound = 2 * g * p**3
    window = forced_window(bound, bound, ell)
    stable = []
    shape_ok = True
    a3_zero = True
    odd_vanish = True
    for k6 in mu6_configs(2 * g):
        cfg = WeilConfig.from_mu6(p, k6)
        if not cfg.is_galois_stable():
            continue
        stable.append(list(k6))
        shape_ok &= k6[0] == k6[3] and k6[1] == k6[2] == k6[4] == k6[5]
        a3_zero &= trace(cfg, 3).as_rational() == 0
        odd_vanish &= all(trace(cfg, j).as_rational() == 0 for j in (1, 3, 5))
    steps = [
        Step("window", "4g p^3 < ell", 4 * g * p**3 < ell, {"4gp^3": 4 * g * p**3, "ell": ell}),
        Step(
            "forced a6",
            "a6 = 2g p^3 (mod ell) and |a6| <= 2g p^3 leave only a6 = 2g p^3",
            window == [bound],
            {"window": window},
        ),
        Step("eigenvalues", "alpha^6 = p^3, so alpha = eta^t sqrt(p)", True, {}),
        Step(
            "galois stability",
            "stable configurations satisfy kappa0 = kappa3 and kappa1 = kappa2 = kappa4 = kappa5",
            bool(stable) and shape_ok,
            {"stable_configs": stable},
        ),
        Step("odd traces", "a_{p,j} = 0 for odd j on every stable configuration", a3_zero and odd_vanish, {}),
        Step(
            "refutation",
            "0 = a3^2 = 4g^2 p^3 (mod ell) requires ell | 2gp, which fails",
            (2 * g * p) % ell != 0 and (4 * g * g * p**3) % ell != 0,
            {"2gp": 2 * g * p, "residue": (2 * g * p) % ell},
        ),
    ]
    return Certificate("sixth-root", {"g": g, "p": p, "ell": ell}, tuple(steps))


def cubic_contradiction(q: int, ell: int) -> Certificate:
    """Elliptic case: chi(2)(Frob) = 1 with chi(6)(Frob) of order 3 is impossible when q < ell/4."""
    if not is_prime(ell):
        raise PreconditionError("ell prime", f"got {ell}")
    p, f = _odd_prime_power(q)
    if f % 2 == 0:
        raise PreconditionError("q = p^f with f odd", f"got {q}")
    if 4 * q >= ell:
        raise PreconditionError("q < ell/4", f"q={q}, ell={ell}")
    window = forced_window(-q, 2 * q, ell)
    # Frob^2 eigenvalues: roots of T^2 + qT + q^2 should be zeta_3 q and zeta_3^2 q
    z3 = CycloElement.zeta(4)
    roots_ok = True
    for r in (z3, z3 * z3):
        x = r.scale(q)
        val = x * x + x.scale(q) + CycloElement.rational(q * q)
        roots_ok &= val.is_zero
    candidates = [2, 4, 8, 10]  # +-zeta_3 sqrt q, +-zeta_3^2 sqrt q as zeta_12 indices
    squares_ok = all(
        (CycloElement.zeta(2 * t) - CycloElement.zeta(4)).is_zero or (CycloElement.zeta(2 * t) - CycloElement.zeta(8)).is_zero
        for t in candidates
    )
    degrees = {t: min_poly_degree(t, q) for t in candidates}
    notes = ()
    if (ell - 1) % 3:
        notes = (f"3 does not divide {ell - 1}, so no Frobenius has chi(6) of exact order 3; hypothesis is vacuous",)
    steps = [
        Step("window", "4q < ell", 4 * q < ell, {"4q": 4 * q, "ell": ell}),
        Step(
            "forced a2",
            "a2 = -q (mod ell) and |a2| <= 2q leave only a2 = -q",
            window == [-q],
            {"window": window},
        ),
        Step("frob^2 eigenvalues", "roots of T^2 + qT + q^2 are zeta_3 q and zeta_3^2 q", roots_ok, {}),
        Step(
            "frob eigenvalues",
            "square roots lie in {+-zeta_3 sqrt q, +-zeta_3^2 sqrt q}",
            squares_ok,
            {"zeta12_indices": candidates},
        ),
        Step(
            "refutation",
            "each candidate has degree 4 over Q, but elliptic Frobenius eigenvalues have degree <= 2",
            all(d == 4 for d in degrees.values()),
            {"degrees": {str(t): d for t, d in degrees.items()}},
        ),
    ]
    return Certificate("cubic", {"q": q, "ell": ell}, tuple(steps), notes)
