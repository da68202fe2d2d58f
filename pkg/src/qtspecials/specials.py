"""Partition-indexed qt-Stirling, Bernoulli, Bell, Catalan and Fibonacci
numbers, plus the integer-alpha ordinary limits (t = q^alpha, q -> 1).

The Stirling formulas contain an inner limit: a change-of-basis
coefficient evaluated at parameters (1/q, 1/t) as q tends to 1.  That
limit is taken exactly, by building the coefficient as a rational
function of a fresh formal variable with t specialized first, and then
cancelling (q - 1) factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .binomial import pair_ratio, qt_binomial, qt_bracket
from .errors import DegenerateParameters, UnsupportedRegime
from .partitions import (
    bump,
    contains,
    enumerate_sub,
    n_prime_stat,
    n_stat,
    scale,
    sum_decompositions,
    weight,
)
from .scalars import RatFuncQ, Rational, as_rational, limit_at_one
from .wcore import (
    FormalQ,
    ScalarMode,
    guarded_div,
    poch_partition,
    w_principal,
)


# ---------------------------------------------------------------------------
# Change-of-basis coefficients and qt-Stirling numbers
# ---------------------------------------------------------------------------

def u_coeff(lam, mu, mode: ScalarMode):
    """Coefficient of x^{|mu|} in the expansion of (x; 1/q, 1/t)_lam."""
    if not contains(lam, mu):
        return mode.zero
    n = len(mu)
    w = w_principal("s_down", mu, lam, mode)
    if w == 0:
        return mode.zero
    den = poch_partition(mode.q * mode.tpow(n - 1), mu, mode)
    pref = guarded_div(
        mode.qpow(weight(mu)) * mode.tpow(2 * n_stat(mu)), den, "u-coefficient"
    )
    return pref * pair_ratio(mu, mode) * w


def v_coeff(lam, mu, mode: ScalarMode):
    """Coefficient of (x; 1/q, 1/t)_mu in the expansion of x^{|lam|}."""
    if not contains(lam, mu):
        return mode.zero
    n = len(mu)
    w = w_principal("s_up", mu, lam, mode)
    if w == 0:
        return mode.zero
    wm = weight(mu)
    den = poch_partition(mode.q * mode.tpow(n - 1), mu, mode)
    sign = mode.one if wm % 2 == 0 else -mode.one
    pref = guarded_div(
        sign * mode.qpow(wm + n_prime_stat(mu)) * mode.tpow(n_stat(mu) + (1 - n) * wm),
        den,
        "v-coefficient",
    )
    return pref * pair_ratio(mu, mode) * w


@lru_cache(maxsize=None)
def _uv_reciprocal_limit(which: str, lam, mu, t0):
    """lim_{q -> 1} of u or v at parameters (1/q, 1/t0), as an exact Rational.

    t0=None is allowed only for single-part partitions, where t never
    enters the coefficient at all.
    """
    rmode = FormalQ.reciprocal(t0)
    coeff = u_coeff if which == "u" else v_coeff
    return limit_at_one(coeff(lam, mu, rmode))


def _inner_t(mode: ScalarMode, n: int):
    """The rational t to specialize inside the Stirling limit, or None at n=1."""
    if n == 1:
        return None
    if getattr(mode, "is_point", False):
        return mode.point.t
    t0 = getattr(mode, "t0", None)
    if t0 is None:
        raise UnsupportedRegime(
            "Stirling limits with n >= 2 need a rational t "
            "(a point mode or a formal mode with fixed t)"
        )
    return t0


STIRLING_KINDS = ("first", "second")


def stirling(kind: str, nu, mu, mode: ScalarMode):
    """qt-Stirling number of the first or second kind at (nu, mu)."""
    if kind not in STIRLING_KINDS:
        raise ValueError(f"kind must be one of {STIRLING_KINDS}")
    if len(nu) != len(mu):
        raise ValueError("nu and mu must have the same length")
    if not contains(nu, mu):
        return mode.zero
    key = ("stirling", kind, nu, mu)
    hit = mode.cache.get(key)
    if hit is not None:
        return hit
    n = len(nu)
    t0 = _inner_t(mode, n)
    den = mode.one
    for i in range(1, n + 1):
        den = den * (mode.one - mode.q * mode.tpow(n - i)) ** (nu[i - 1] - mu[i - 1])
    total = mode.zero
    if kind == "first":
        pref = guarded_div(
            mode.qpow(n_prime_stat(nu))
            * mode.tpow(-2 * n_stat(mu) + (n - 1) * weight(mu)),
            den,
            "Stirling prefactor",
        )
        for lam in enumerate_sub(nu):
            if not contains(lam, mu):
                continue
            ul = u_coeff(nu, lam, mode)
            if ul == 0:
                continue
            lim = _uv_reciprocal_limit("v", lam, mu, t0)
            if lim == 0:
                continue
            total = total + ul * mode.tpow((1 - n) * weight(lam)) * mode.lift(lim)
    else:
        pref = guarded_div(
            mode.qpow(-n_prime_stat(mu))
            * mode.tpow(2 * n_stat(nu) + (1 - n) * weight(nu)),
            den,
            "Stirling prefactor",
        )
        for lam in enumerate_sub(nu):
            if not contains(lam, mu):
                continue
            lim = _uv_reciprocal_limit("u", nu, lam, t0)
            if lim == 0:
                continue
            vl = v_coeff(lam, mu, mode)
            if vl == 0:
                continue
            total = total + mode.lift(lim) * mode.tpow((n - 1) * weight(lam)) * vl
    value = pref * total
    mode.cache[key] = value
    return value


def stirling_expansion_residual(lam, Q, mode: ScalarMode):
    """Residual of the first-kind defining expansion at a principal value Q.

    The shifted bracket of lam expands over mu <= lam with coefficient
    s1(lam, mu) against the weighted bracket-power basis
    t^{2n(mu)+(1-n)|mu|} * prod_i [(1-Q t^{n-i}) / (1-q t^{n-i})]^{mu_i};
    the weight is forced by the diagonal normalization s1(lam, lam) = 1.
    """
    from .binomial import qt_bracket_shifted

    Q = mode.lift(Q)
    n = len(lam)
    lhs = qt_bracket_shifted(Q, lam, mode)
    rhs = mode.zero
    for mu in enumerate_sub(lam):
        basis = mode.tpow(2 * n_stat(mu) + (1 - n) * weight(mu))
        for i in range(1, n + 1):
            basis = basis * guarded_div(
                mode.one - Q * mode.tpow(n - i),
                mode.one - mode.q * mode.tpow(n - i),
                "bracket-power basis",
            ) ** mu[i - 1]
        rhs = rhs + stirling("first", lam, mu, mode) * basis
    return lhs - rhs


@dataclass
class StirlingTable:
    """All Stirling numbers of one kind on the poset below a bound."""

    kind: str
    n: int
    bound: tuple
    entries: dict  # (nu, mu) -> scalar, only for mu <= nu

    @classmethod
    def build(cls, kind: str, bound, mode: ScalarMode) -> "StirlingTable":
        bound = tuple(bound)
        entries = {}
        for nu in enumerate_sub(bound):
            for mu in enumerate_sub(nu):
                entries[(nu, mu)] = stirling(kind, nu, mu, mode)
        return cls(kind=kind, n=len(bound), bound=bound, entries=entries)


# ---------------------------------------------------------------------------
# Bernoulli, Bell, Catalan, Fibonacci
# ---------------------------------------------------------------------------

def bernoulli(lam, mode: ScalarMode):
    """qt-Bernoulli number, from the triangular recurrence with value 1 at 0^n.

    Each partition of positive weight introduces exactly one new unknown,
    so the defining relation solves uniquely:
    beta_lam = -t^{n(lam)} q^{-n(lam')} B(lam+e_1, lam)^{-1}
               * sum_{mu strictly below lam} t^{-n(mu)} q^{n(mu')} B(lam+e_1, mu) beta_mu.
    """
    key = ("bernoulli", lam)
    hit = mode.cache.get(key)
    if hit is not None:
        return hit
    if weight(lam) == 0:
        value = mode.one
    else:
        lam1 = bump(lam, 1)
        lead = qt_binomial(lam1, lam, mode)
        if lead == 0:
            raise DegenerateParameters(
                f"leading binomial of the recurrence vanishes at {lam}"
            )
        acc = mode.zero
        for mu in enumerate_sub(lam):
            if mu == lam:
                continue
            b = qt_binomial(lam1, mu, mode)
            if b == 0:
                continue
            acc = acc + (
                mode.tpow(-n_stat(mu)) * mode.qpow(n_prime_stat(mu)) * b
                * bernoulli(mu, mode)
            )
        value = -(mode.tpow(n_stat(lam)) * mode.qpow(-n_prime_stat(lam))
                  * guarded_div(acc, lead, "Bernoulli recurrence"))
    mode.cache[key] = value
    return value


def bernoulli_recurrence_residual(lam, mode: ScalarMode):
    """sum_{mu <= lam} t^{-n(mu)} q^{n(mu')} B(lam+e_1, mu) beta_mu; zero by
    construction for |lam| >= 1."""
    lam1 = bump(lam, 1)
    acc = mode.zero
    for mu in enumerate_sub(lam):
        acc = acc + (
            mode.tpow(-n_stat(mu))
            * mode.qpow(n_prime_stat(mu))
            * qt_binomial(lam1, mu, mode)
            * bernoulli(mu, mode)
        )
    return acc


def bell(lam, mode: ScalarMode):
    """qt-Bell number: sum_{mu <= lam} t^{-n(mu)} q^{n(mu')} s2(lam, mu)."""
    acc = mode.zero
    for mu in enumerate_sub(lam):
        s2 = stirling("second", lam, mu, mode)
        if s2 == 0:
            continue
        acc = acc + mode.tpow(-n_stat(mu)) * mode.qpow(n_prime_stat(mu)) * s2
    return acc


def catalan(lam, mode: ScalarMode):
    """qt-Catalan number: the binomial of 2*lam over lam, divided by the
    bracket of lam + e_1; requires that bracket to be nonzero."""
    lam1 = bump(lam, 1)
    den = qt_bracket(lam1, mode)
    if den == 0:
        raise DegenerateParameters(f"bracket of {lam1} vanishes")
    return qt_binomial(scale(lam, 2), lam, mode) / den


def fibonacci(lam, mode: ScalarMode):
    """qt-Fibonacci number indexed by lam + e_1, via the coordinatewise
    decomposition sum over nu + mu = lam."""
    acc = mode.zero
    n = len(lam)
    for nu, mu in sum_decompositions(lam):
        b = qt_binomial(nu, mu, mode) if contains(nu, mu) else mode.zero
        if b == 0:
            continue
        wm = weight(mu)
        acc = acc + (
            mode.qpow(2 * n_prime_stat(mu))
            * mode.tpow(2 * (n - 1) * wm - 2 * n_stat(mu))
            * b
        )
    return acc


@dataclass
class SpecialSequence:
    """Values of one special-number family over a partition poset."""

    kind: str
    n: int
    values: dict  # partition -> scalar

    @classmethod
    def build(cls, kind: str, bound, mode: ScalarMode) -> "SpecialSequence":
        fn = {"bernoulli": bernoulli, "bell": bell,
              "catalan": catalan, "fibonacci": fibonacci}[kind]
        bound = tuple(bound)
        values = {lam: fn(lam, mode) for lam in enumerate_sub(bound)}
        return cls(kind=kind, n=len(bound), values=values)


# ---------------------------------------------------------------------------
# Ordinary alpha-limits
# ---------------------------------------------------------------------------

def alpha_limit(quantity, alpha: int):
    """Exact limit at q -> 1 of a deferred computation with t = q^alpha.

    ``quantity`` is a callable taking a ScalarMode; it is evaluated in the
    formal mode with t = q^alpha (alpha a positive integer keeps every
    scalar a univariate rational function of q) and the limit is taken by
    (q - 1) cancellation.
    """
    mode = FormalQ.alpha(alpha)
    value = quantity(mode)
    if isinstance(value, RatFuncQ):
        return limit_at_one(value)
    return as_rational(value)


@lru_cache(maxsize=None)
def binomial_alpha(lam, mu, alpha: int) -> Rational:
    """alpha-binomial coefficient: the t = q^alpha, q -> 1 limit."""
    return alpha_limit(lambda m: qt_binomial(lam, mu, m), alpha)


@lru_cache(maxsize=None)
def bernoulli_alpha(lam, alpha: int) -> Rational:
    """alpha-Bernoulli number via the recurrence over alpha-binomials.

    The recurrence is triangular and its leading binomial has a nonzero
    limit, so the limit of the solution satisfies the recurrence of the
    limits; solving over exact rationals avoids any large formal
    denominators.
    """
    if weight(lam) == 0:
        return Rational(1)
    lam1 = bump(lam, 1)
    lead = binomial_alpha(lam1, lam, alpha)
    if lead == 0:
        raise DegenerateParameters(f"leading alpha-binomial vanishes at {lam}")
    acc = Rational(0)
    for mu in enumerate_sub(lam):
        if mu == lam:
            continue
        acc += binomial_alpha(lam1, mu, alpha) * bernoulli_alpha(mu, alpha)
    return -acc / lead


def bracket_alpha(z, alpha: int) -> Rational:
    """alpha-limit of the bracket: prod_i (z_i + alpha(n-i)) / (1 + alpha(n-i))."""
    return alpha_limit(lambda m: qt_bracket(tuple(z), m), alpha)
