"""Totient-decomposition sieve for inertia profiles 2g = sum n_d phi(d).

The pipeline is enumerate -> admissible e -> m_Q candidates -> C8 pruning ->
congruence on ell. Every elimination is recorded so the result can be
compared against the hand-run case analysis step by step.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd, lcm

from .arith import (
    CongruenceClass,
    PreconditionError,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    mult_order,
    v_p,
)
from .glorders import m_prime

MAX_G = 12


class Base(str, Enum):
    RATIONAL = "rational"
    GENERAL = "general"


@dataclass(frozen=True, order=True)
class Profile:
    """A solution {n_d} of 2g = sum n_d phi(d) (only n_d >= 1 stored).

    The toric/abelian split n_d = b_d + t_d is not modelled; `g_d` is
    n_d * phi(d) / 2.
    """

    g: int
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        total = sum(n * euler_phi(d) for d, n in self.counts)
        if total != 2 * self.g:
            raise PreconditionError("sum n_d phi(d) = 2g", f"{total} != {2 * self.g}")
        for d, n in self.counts:
            if n < 1:
                raise PreconditionError("n_d >= 1 for stored entries", f"d={d}")
            if d <= 2 and n % 2:
                raise PreconditionError("2 | n_d for d <= 2", f"d={d}, n_d={n}")

    @classmethod
    def of(cls, counts: dict[int, int]) -> Profile:
        items = tuple(sorted((d, n) for d, n in counts.items() if n))
        g2 = sum(n * euler_phi(d) for d, n in items)
        return cls(g2 // 2, items)

    @property
    def count_map(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def e_prime(self) -> int:
        return lcm(*(d for d, _ in self.counts))

    @property
    def g_d(self) -> dict[int, int]:
        return {d: n * euler_phi(d) // 2 for d, n in self.counts}

    def sort_key(self) -> tuple:
        return (self.e_prime, tuple(d for d, _ in self.counts), tuple(n for _, n in self.counts))

    def table_label(self) -> str:
        """Ascending-d form used in the g = 4 table, e.g. '2φ(3) + φ(8)'."""
        return " + ".join(f"φ({d})" if n == 1 else f"{n}φ({d})" for d, n in self.counts)

    def to_json(self) -> dict:
        return {"g": self.g, "counts": {str(d): n for d, n in self.counts}, "e_prime": self.e_prime}


@dataclass(frozen=True)
class FieldContext:
    base: Base = Base.RATIONAL
    n_K: int = 1
    semistable: bool = False
    delta: int | None = None

    def __post_init__(self):
        if self.n_K < 1:
            raise PreconditionError("n_K >= 1", f"got {self.n_K}")
        if self.base == Base.RATIONAL and self.n_K != 1:
            raise PreconditionError("rational base implies n_K = 1", f"got n_K={self.n_K}")
        if self.delta is not None and self.n_K % self.delta:
            raise PreconditionError("delta | n_K", f"delta={self.delta}, n_K={self.n_K}")

    @classmethod
    def rational(cls, semistable: bool = False) -> FieldContext:
        return cls(Base.RATIONAL, 1, semistable)

    @classmethod
    def general(cls, n_K: int, semistable: bool = False) -> FieldContext:
        return cls(Base.GENERAL, n_K, semistable)


@dataclass(frozen=True)
class SurvivorReport:
    profile: Profile
    e: int
    m_Q: int
    constraint: CongruenceClass

    def __post_init__(self):
        assert self.m_Q % 2 == 0 and (self.e // 2) % self.m_Q == 0

    def to_json(self) -> dict:
        return {
            "profile": self.profile.to_json(),
            "label": self.profile.table_label(),
            "e": self.e,
            "m_Q": self.m_Q,
            "congruence": {
                "modulus": self.constraint.modulus,
                "residues": self.constraint.sorted_residues(),
            },
        }


@dataclass(frozen=True)
class Elimination:
    """One audit-trail entry: `rule` removed `profile` (at a given e / m when set)."""

    profile: Profile
    rule: str
    detail: str
    e: int | None = None
    m: int | None = None

    def to_json(self) -> dict:
        return {
            "profile": self.profile.table_label(),
            "rule": self.rule,
            "e": self.e,
            "m": self.m,
            "detail": self.detail,
        }


@dataclass
class SieveResult:
    g: int
    ctx: FieldContext
    profiles: list[Profile]
    survivors: list[SurvivorReport] = field(default_factory=list)
    eliminations: list[Elimination] = field(default_factory=list)

    @property
    def exceptions(self) -> list[Profile]:
        """Profiles that reached the C8 stage with some m_Q candidate."""
        seen = []
        for el in self.eliminations:
            if el.rule == RULE_C8 and el.profile not in seen:
                seen.append(el.profile)
        for s in self.survivors:
            if s.profile not in seen:
                seen.append(s.profile)
        return sorted(seen, key=Profile.sort_key)


RULE_E = "e-admissibility"
RULE_MQ = "m_Q-candidates"
RULE_C8 = "C8"
RULE_PRIME = "prime-factor-bound"


# ---------------------------------------------------------------------------
# enumeration

def candidate_ds(g: int) -> list[int]:
    """All d with phi(d) <= 2g (phi(d) >= sqrt(d/2) bounds the search)."""
    bound = 2 * (2 * g) ** 2
    return [d for d in range(1, bound + 1) if euler_phi(d) <= 2 * g]


def enumerate_profiles(g: int) -> list[Profile]:
    if not 1 <= g <= MAX_G:
        raise PreconditionError(f"1 <= g <= {MAX_G}", f"got {g}")
    ds = candidate_ds(g)
    phis = [euler_phi(d) for d in ds]
    out: list[Profile] = []

    def rec(i: int, remaining: int, acc: list[tuple[int, int]]):
        if remaining == 0:
            out.append(Profile(g, tuple(acc)))
            return
        if i == len(ds):
            return
        d, ph = ds[i], phis[i]
        step = 2 if d <= 2 else 1
        n = 0
        while n * ph <= remaining:
            if n:
                acc.append((d, n))
            rec(i + 1, remaining - n * ph, acc)
            if n:
                acc.pop()
            n += step

    rec(0, 2 * g, [])
    return sorted(out, key=Profile.sort_key)


# ---------------------------------------------------------------------------
# pruning rules

def admissible_e(profile: Profile, ctx: FieldContext) -> list[int]:
    """Candidate values of e = gcd over lambda of e_A * e_{lambda/ell}."""
    ep = profile.e_prime
    if ctx.semistable and ep != 1:
        return []
    M = m_prime(2 * profile.g).value
    if ctx.base == Base.RATIONAL:
        return [ep] if ep % 4 == 0 and M % ep == 0 else []
    bound = M * ctx.n_K
    return [
        e
        for e in divisors(bound)
        if e % 4 == 0 and e % ep == 0 and ctx.n_K % (e // ep) == 0
    ]


def mq_candidates(e: int, ctx: FieldContext) -> list[int]:
    """Even divisors of e/2; over Q also m_Q > 6."""
    if e % 4:
        raise PreconditionError("4 | e", f"got e={e}")
    out = [m for m in divisors(e // 2) if m % 2 == 0]
    if ctx.base == Base.RATIONAL:
        out = [m for m in out if m > 6]
    return out


def c8_witness(profile: Profile, m: int) -> int | None:
    """Smallest d with n_d = 1 and d | m, if any."""
    for d, n in profile.counts:
        if n == 1 and m % d == 0:
            return d
    return None


def prune_c8(profile: Profile, m: int, ctx: FieldContext) -> bool:
    """True when C8 eliminates (profile, m): some d with n_d = 1 divides m | ell-1."""
    if ctx.base != Base.RATIONAL:
        raise PreconditionError("rational base (f_{lambda/ell} = 1)")
    return c8_witness(profile, m) is not None


def derive_congruence(m: int) -> CongruenceClass:
    """ell with m | ell - 1 and v_2(ell - 1) = v_2(m) exactly."""
    if m < 2 or m % 2:
        raise PreconditionError("m even", f"got {m}")
    v = v_p(m, 2)
    L = lcm(m, 2 ** (v + 1))
    res = [r for r in range(L) if (r - 1) % m == 0 and (r - 1) % 2 ** (v + 1) != 0]
    return CongruenceClass.make(L, res)


def prime_factor_bound_check(profile: Profile) -> bool:
    """Every prime p | e' satisfies p <= 2 max g_d + 1."""
    bound = 2 * max(profile.g_d.values()) + 1
    return all(p <= bound for p in factorize(profile.e_prime))


def semistable_uniform_check(n_K: int) -> bool:
    """True when 4 does not divide n_K, which forces the semistable set empty for large ell."""
    if n_K < 1:
        raise PreconditionError("n_K >= 1", f"got {n_K}")
    return n_K % 4 != 0


def sieve(g: int, ctx: FieldContext | None = None) -> SieveResult:
    ctx = ctx or FieldContext.rational()
    profiles = enumerate_profiles(g)
    result = SieveResult(g, ctx, profiles)
    for prof in profiles:
        if not prime_factor_bound_check(prof):
            result.eliminations.append(Elimination(prof, RULE_PRIME, "prime factor of e' too large"))
            continue
        es = admissible_e(prof, ctx)
        if not es:
            result.eliminations.append(
                Elimination(prof, RULE_E, f"no admissible e for e'={prof.e_prime}")
            )
            continue
        for e in es:
            ms = mq_candidates(e, ctx)
            if not ms:
                result.eliminations.append(
                    Elimination(prof, RULE_MQ, f"no admissible m_Q dividing {e // 2}", e=e)
                )
                continue
            for m in ms:
                if ctx.base == Base.RATIONAL:
                    d = c8_witness(prof, m)
                    if d is not None:
                        result.eliminations.append(
                            Elimination(prof, RULE_C8, f"n_{d} = 1 and {d} | m_Q forces f = 1", e=e, m=m)
                        )
                        continue
                result.survivors.append(SurvivorReport(prof, e, m, derive_congruence(m)))
    return result


def analyze(g: int, ctx: FieldContext | None = None) -> list[SurvivorReport]:
    return sieve(g, ctx).survivors


# ---------------------------------------------------------------------------
# computable conditions C2, C6, C7, C8

@dataclass(frozen=True)
class ConditionState:
    d: int
    ell: int
    n_d: int
    f_lambda_over_ell: int
    f: int
    f_lambda: int

    @classmethod
    def build(cls, d: int, ell: int, n_d: int, f_lambda_over_ell: int = 1) -> ConditionState:
        if not is_prime(ell):
            raise PreconditionError("ell prime", f"got {ell}")
        if d % ell == 0:
            raise PreconditionError("ell does not divide d", f"d={d}, ell={ell}")
        f = mult_order(ell, d)
        return cls(d, ell, n_d, f_lambda_over_ell, f, f // gcd(f, f_lambda_over_ell))


@dataclass(frozen=True)
class Conditions:
    C2: bool
    C6: bool
    C7: bool
    C8: bool


def evaluate_conditions(state: ConditionState) -> Conditions:
    d, ell = state.d, state.ell
    if d % ell == 0:
        raise PreconditionError("ell does not divide d", f"d={d}, ell={ell}")
    minus_one = (-1) % d
    subgroup = {pow(ell, k, d) for k in range(state.f)} if d > 1 else {0}
    c2 = minus_one in subgroup
    c6 = state.f % 2 == 0 or d <= 2
    c7 = (state.n_d * state.f) % 2 == 0
    c8 = state.n_d * state.f_lambda * state.f_lambda_over_ell != 1
    return Conditions(c2, c6, c7, c8)


def c_chain_violations(d_max: int = 60, ell_max: int = 200, n_max: int = 3, f_max: int = 3) -> list[tuple]:
    """Scan for failures of C2 => C6 => C7 => C8 and, for n_d = 1, C7 => C6.

    States with d <= 2 and odd n_d cannot occur in a profile and are skipped.
    """
    from .arith import primes_up_to

    bad = []
    for ell in primes_up_to(ell_max):
        for d in range(1, d_max + 1):
            if d % ell == 0:
                continue
            for n_d in range(1, n_max + 1):
                if d <= 2 and n_d % 2:
                    continue
                for fl in range(1, f_max + 1):
                    c = evaluate_conditions(ConditionState.build(d, ell, n_d, fl))
                    if (c.C2 and not c.C6) or (c.C6 and not c.C7) or (c.C7 and not c.C8):
                        bad.append((d, ell, n_d, fl, c))
                    if n_d == 1 and c.C7 != c.C6:
                        bad.append((d, ell, n_d, fl, c))
    return bad
