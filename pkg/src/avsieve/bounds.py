"""Explicit constants and thresholds, and the Lambert W_{-1} machinery.

C3 (effective Chebotarev) and C1' (Elliott) are not known explicitly; they
enter every function here as parameters defaulting to 1.0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import comb, e as E, exp, factorial, isqrt, log, sqrt

from .arith import Magnitude, PreconditionError, divisors, log_int, max_magnitude
from .glorders import m_prime

EXACT_EXPONENT_LIMIT = 10_000


@dataclass(frozen=True)
class ChebParams:
    C3: float = 1.0
    log_disc_Ktilde: float = 0.0
    m: int = 1
    g: int = 1
    n: int = 1
    n_K: int = 1

    def __post_init__(self):
        if self.C3 < 1:
            raise PreconditionError("C3 >= 1", f"got {self.C3}")
        if self.log_disc_Ktilde < 0:
            raise PreconditionError("log disc >= 0", f"got {self.log_disc_Ktilde}")
        for name in ("m", "g", "n", "n_K"):
            if getattr(self, name) < 1:
                raise PreconditionError(f"{name} >= 1", f"got {getattr(self, name)}")


@dataclass(frozen=True)
class A2Input:
    g: int
    q0: int
    e_lambda: int

    def __post_init__(self):
        if self.q0 < 2:
            raise PreconditionError("q0 >= 2", f"got {self.q0}")
        if self.g < 1 or self.e_lambda < 1:
            raise PreconditionError("g, e_lambda >= 1")


def c4_c5(params: ChebParams) -> tuple[float, int]:
    c4 = params.m * params.log_disc_Ktilde
    c5 = max(1, (params.m - 1) * factorial(params.n_K))
    return c4, c5


def _half_power_ceil(q: int, k: int) -> int:
    """Ceiling of q**(k/2), exact."""
    if k % 2 == 0:
        return q ** (k // 2)
    x = q**k
    r = isqrt(x)
    return r if r * r == x else r + 1


def a2_threshold(inp: A2Input) -> int:
    """max_k binom(2g, k) (q0^{e k} + q0^{e k / 2}), half powers rounded up."""
    g, q0, e = inp.g, inp.q0, inp.e_lambda
    return max(
        comb(2 * g, k) * (q0 ** (e * k) + _half_power_ceil(q0, e * k)) for k in range(1, 2 * g + 1)
    )


def c7(g: int, n_K: int) -> Magnitude:
    """C7 = 2 binom(2g, g) 3^{2g n_K^2 M'(2g)}."""
    if g < 1 or n_K < 1:
        raise PreconditionError("g, n_K >= 1")
    exponent = 2 * g * n_K**2 * m_prime(2 * g).value
    lead = 2 * comb(2 * g, g)
    log_e = log(lead) + exponent * log(3)
    exact = lead * 3**exponent if exponent <= EXACT_EXPONENT_LIMIT else None
    return Magnitude(log_e, exact)


def _check_eps(eps: float, upper: float):
    if not 0 < eps < upper:
        raise PreconditionError(f"0 < eps < {upper}", f"got {eps}")


def c1(m: int, g: int, eps: float, C1_prime: float = 1.0) -> float:
    """C1 = (4 g C1')^{4 / ((5 - m) - 4 eps)}."""
    if not 1 <= m <= 4:
        raise PreconditionError("1 <= m <= 4", f"got {m}")
    _check_eps(eps, 0.25)
    return (4 * g * C1_prime) ** (4 / ((5 - m) - 4 * eps))


def elliott_corollary_holds(m: int, g: int, eps: float, C1_prime: float, ell: int) -> bool:
    """C1' ell^{(m-1)/4 + eps} < ell / (4g), compared in logs."""
    lhs = log(C1_prime) + ((m - 1) / 4 + eps) * log_int(ell)
    rhs = log_int(ell) - log(4 * g)
    return lhs < rhs


# ---------------------------------------------------------------------------
# Lambert W, branch -1

def lambert_w_m1(x: float) -> float:
    """Real branch W_{-1} on [-1/e, 0): the solution w <= -1 of w e^w = x."""
    if not -1 / E - 1e-15 <= x < 0:
        raise PreconditionError("-1/e <= x < 0", f"got {x}")
    if x <= -1 / E:
        return -1.0

    def f(w: float) -> float:
        return w * exp(w) - x

    # f is decreasing on (-inf, -1]: f(-1) = x... sign conventions below
    hi = -1.0  # f(hi) = -1/e - x < 0
    lo = -2.0
    while f(lo) <= 0:
        lo *= 2
    # coarse bisection to leave the ill-conditioned neighbourhood of -1
    for _ in range(30):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    w = 0.5 * (lo + hi)
    for _ in range(50):
        ew = exp(w)
        fw = w * ew - x
        if fw == 0:
            break
        d1 = ew * (w + 1)
        d2 = ew * (w + 2)
        denom = d1 - fw * d2 / (2 * d1) if d1 != 0 else 0.0
        w_new = w - fw / denom if denom != 0 else 0.5 * (lo + hi)
        if not lo < w_new < hi:
            w_new = 0.5 * (lo + hi)
        if f(w_new) > 0:
            lo = w_new
        else:
            hi = w_new
        if abs(w_new - w) <= 1e-16 * abs(w_new):
            w = w_new
            break
        w = w_new
    return w


def appendix_lower(x: float) -> float:
    """Piecewise lower bound L(x) for W_{-1}: W(-1/4) on [-1/e, -1/4), 2 log(-x) after."""
    if x < -0.25:
        return lambert_w_m1(-0.25)
    return 2 * log(-x)


def x0(c: float, N: float) -> float:
    """Largest real solution of x^{1/N} = log(c x), valid for c >= (e/N)^N."""
    if N <= 0 or c <= 0:
        raise PreconditionError("c, N > 0")
    if c < (E / N) ** N * (1 - 1e-12):
        raise PreconditionError("c >= (e/N)^N", f"c={c}, N={N}")
    arg = max(-(1 / N) * c ** (-1 / N), -1 / E)
    return exp(-N * lambert_w_m1(arg)) / c


def x0_bisection(c: float, N: float, tol: float = 1e-14) -> float:
    """Independent root-finder for the largest root of x^{1/N} - log(c x).

    Works in y = log x where k(y) = e^{y/N} - y - log c is convex with its
    minimum at y = N log N.
    """
    logc = log(c)

    def k(y: float) -> float:
        return exp(y / N) - y - logc

    lo = N * log(N)
    if k(lo) > 0:
        raise PreconditionError("a real root exists", f"c={c}, N={N}")
    hi = lo + 1.0
    while k(hi) <= 0:
        hi = lo + 2 * (hi - lo)
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if k(mid) > 0:
            hi = mid
        else:
            lo = mid
    return exp(0.5 * (lo + hi))


def x0_upper_bound(c: float, N: float) -> float:
    """c N^{2N}, valid when c >= (4/N)^N."""
    return c * N ** (2 * N)


# ---------------------------------------------------------------------------
# Chebotarev-side constants

def corollary_bound_raw(g: int, n: int, C3: float, c4: float, c5: float) -> Magnitude:
    """16 g^2 C3^{2n} C5^{4n} (2n)^{4n} exp(C4/C5)."""
    log_e = (
        log(16 * g * g) + 2 * n * log(C3) + 4 * n * log(c5) + 4 * n * log(2 * n) + c4 / c5
    )
    exact = None
    if c4 == 0 and float(C3).is_integer() and float(c5).is_integer():
        exact = 16 * g * g * int(C3) ** (2 * n) * int(c5) ** (4 * n) * (2 * n) ** (4 * n)
    return Magnitude(log_e, exact)


def corollary_bound(params: ChebParams) -> Magnitude:
    c4, c5 = c4_c5(params)
    return corollary_bound_raw(params.g, params.n, params.C3, c4, c5)


def crossing_raw(g: int, n: int, C3: float, c4: float, c5: float) -> float:
    """Largest real ell with (ell / 4g)^{1/n} = C3 (C4 + C5 log ell)^2, via W_{-1}.

    Substituting ell = 4g C3^n C5^{2n} x turns the equation into
    x^{1/2n} = log(c x) with c = 4g C3^n C5^{2n} exp(C4/C5).
    """
    scale = 4 * g * C3**n * c5 ** (2 * n)
    return scale * x0(scale * exp(c4 / c5), 2 * n)


def crossing(params: ChebParams) -> float:
    c4, c5 = c4_c5(params)
    return crossing_raw(params.g, params.n, params.C3, c4, c5)


def crossing_bisection_raw(g: int, n: int, C3: float, c4: float, c5: float, tol: float = 1e-13) -> float:
    """Same crossing located by bisection on t = log ell, without any substitution."""
    N = 2 * n
    a = (4 * g) ** (-1 / N)
    b = sqrt(C3)

    def G(t: float) -> float:
        return a * exp(t / N) - b * (c4 + c5 * t)

    lo = N * log(N * b * c5 / a)  # minimum of the convex function G
    if G(lo) > 0:
        raise PreconditionError("a real crossing exists")
    hi = lo + 1.0
    while G(hi) <= 0:
        hi = lo + 2 * (hi - lo)
    while hi - lo > tol * max(1.0, abs(hi)):
        mid = 0.5 * (lo + hi)
        if G(mid) > 0:
            hi = mid
        else:
            lo = mid
    return exp(0.5 * (lo + hi))


def crossing_bisection(params: ChebParams, tol: float = 1e-13) -> float:
    c4, c5 = c4_c5(params)
    return crossing_bisection_raw(params.g, params.n, params.C3, c4, c5, tol)


def chebotarev_inequality_holds(params: ChebParams, ell: int) -> bool:
    """(ell/4g)^{1/n} > C3 (C4 + C5 log ell)^2, compared in logs."""
    c4, c5 = c4_c5(params)
    L = log_int(ell)
    lhs = (L - log(4 * params.g)) / params.n
    rhs = log(params.C3) + 2 * log(c4 + c5 * L)
    return lhs > rhs


def verify_corollary_bound(params: ChebParams) -> dict:
    """Check the bound dominates the true crossing and the inequality holds just past it."""
    bound = corollary_bound(params)
    cross = crossing(params)
    above = int(bound.value()) + 1 if bound.log_e < 700 else None
    holds_above = chebotarev_inequality_holds(params, above) if above is not None else None
    return {
        "bound_log": bound.log_e,
        "crossing": cross,
        "dominates": log(cross) <= bound.log_e + 1e-9,
        "holds_above_bound": holds_above,
    }


def is_rational_base(params: ChebParams) -> bool:
    return params.n_K == 1 and params.log_disc_Ktilde == 0


def c6(params: ChebParams, ell_prime_max_div_disc: int = 1) -> Magnitude:
    """C6 = max(ell', corollary bound); excluded for (m, K) = (1, Q)."""
    if params.m == 1 and is_rational_base(params):
        raise PreconditionError("(m, K) != (1, Q)")
    return max_magnitude(Magnitude.from_int(max(ell_prime_max_div_disc, 1)), corollary_bound(params))


def c6_trivial_case(g: int, n: int) -> Magnitude:
    """For (m, K) = (1, Q) any value above 4g 2^n works (p = 2 is available)."""
    return Magnitude.from_int(4 * g * 2**n + 1)


def m_set(g: int, n: int, nF: int) -> list[int]:
    """Divisors of M'(2g) n_F n / 2."""
    return divisors(m_prime(2 * g).value * nF * n // 2)


def n_uniform(g: int, n: int, nF: int, F_params: ChebParams | None = None, ell_prime: int = 1) -> Magnitude:
    """N(g, n, F) = max(max_{m} C6(m, g, n, F), C7(g, n_F n))."""
    base = F_params or ChebParams()
    terms = []
    for m in m_set(g, n, nF):
        p = replace(base, m=m, g=g, n=n, n_K=nF)
        if m == 1 and is_rational_base(p):
            terms.append(c6_trivial_case(g, n))
        else:
            terms.append(c6(p, ell_prime))
    return max_magnitude(max_magnitude(*terms), c7(g, nF * n))


def q0_bound(n_K: int, ell_is_2: bool) -> int:
    if n_K < 1:
        raise PreconditionError("n_K >= 1", f"got {n_K}")
    return 3**n_K if ell_is_2 else 2**n_K


def c8_terms(g: int, eps: float, C1_prime_2: float = 1.0, C1_prime_4: float | None = None) -> dict[str, Magnitude]:
    _check_eps(eps, 1 / 12)
    c1p4 = C1_prime_2 if C1_prime_4 is None else C1_prime_4
    fourth_log = (4 / (1 - 12 * eps)) * log(4 * g * C1_prime_2**3)
    return {
        "C7(g,1)": c7(g, 1),
        "C1(2,g,eps)": Magnitude.from_float(c1(2, g, eps, C1_prime_2)),
        "C1(4,g,eps)": Magnitude.from_float(c1(4, g, eps, c1p4)),
        "(4gC1'^3)^(4/(1-12eps))": Magnitude(fourth_log),
    }


def c8(g: int, eps: float, C1_prime_2: float = 1.0, C1_prime_4: float | None = None) -> Magnitude:
    """max{C7(g,1), C1(2,g,eps), C1(4,g,eps), (4g C1'(2,eps)^3)^{4/(1-12 eps)}}."""
    return max_magnitude(*c8_terms(g, eps, C1_prime_2, C1_prime_4).values())
