"""Pochhammer symbols and the limiting W-function family.

All values are computed either at an exact rational parameter pair (q, t)
or symbolically as rational functions of a formal q with t specialized to
a rational (which is what makes exact q -> 1 limits possible downstream).

The three W kinds handled here are the s-parameter limits of a family of
well-poised symmetric rational functions:

* ``"ab"``     -- carries an auxiliary scalar s,
* ``"s_up"``   -- the s -> infinity limit (after scaling),
* ``"s_down"`` -- the s -> 0 limit.

Single-variable skew values have closed product forms; multivariable values
are computed only through the variable-peeling recurrence over horizontal
strips, with memoization on the active ScalarMode.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateParameters, NotAStrip, UnsupportedRegime
from .partitions import (
    contains,
    enumerate_strips,
    is_horizontal_strip,
    n_prime_stat,
    n_stat,
    weight,
    zeros,
)
from .scalars import ONE, RatFuncQ, Rational, as_rational

W_KINDS = ("ab", "s_up", "s_down")


@dataclass(frozen=True)
class QtPoint:
    """A validated exact rational parameter pair (q, t).

    Construction rejects points where any factor (1 - q^a t^b) with
    0 <= a <= 2*max_part + 2 and |b| <= 2*n vanishes, so that every
    denominator arising for partitions of at most n parts bounded by
    max_part is safely nonzero.
    """

    q: Rational
    t: Rational
    n: int = 4
    max_part: int = 8

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))
        object.__setattr__(self, "t", as_rational(self.t))
        self.validate(self.n, self.max_part)

    def validate(self, n: int, max_part: int) -> "QtPoint":
        """Check the degeneracy window for the given bounds; returns self."""
        q, t = self.q, self.t
        if q == 0 or q == 1:
            raise DegenerateParameters(f"q = {q} is not allowed")
        if t == 0:
            raise DegenerateParameters("t = 0 is not allowed")
        tb = {0: ONE}
        for b in range(1, 2 * n + 1):
            tb[b] = tb[b - 1] * t
            tb[-b] = 1 / tb[b]
        qa = ONE
        for a in range(0, 2 * max_part + 3):
            if a:
                qa = qa * q
            for b in range(-2 * n, 2 * n + 1):
                if a == 0 and b == 0:
                    continue
                if qa * tb[b] == 1:
                    raise DegenerateParameters(
                        f"degenerate point: q^{a} t^{b} = 1 at q={q}, t={t}"
                    )
        return self


class ScalarMode:
    """How scalars are carried: at an exact point, or formally in q.

    Each mode owns a cache shared by the W recursions and the binomial
    layer; all cached values are immutable, so concurrent reads/inserts
    under one mode are safe.
    """

    def __init__(self):
        self.cache: dict = {}
        self._qp: dict = {}
        self._tp: dict = {}

    # subclasses provide: q, t, one, zero, lift(r), is_point

    def qpow(self, k: int):
        v = self._qp.get(k)
        if v is None:
            v = self._qp[k] = self.q ** k
        return v

    def tpow(self, k: int):
        if k == 0:
            return self.one
        v = self._tp.get(k)
        if v is None:
            v = self._tp[k] = self.t ** k
        return v


class AtPoint(ScalarMode):
    """Evaluate everything exactly at a QtPoint."""

    is_point = True

    def __init__(self, point: QtPoint):
        super().__init__()
        self.point = point
        self.one = ONE
        self.zero = Rational(0)

    @property
    def q(self):
        return self.point.q

    @property
    def t(self):
        return self.point.t

    def lift(self, r):
        return as_rational(r)

    def __repr__(self):
        return f"AtPoint(q={self.point.q}, t={self.point.t})"


class FormalQ(ScalarMode):
    """Carry values as rational functions of a formal q.

    Variants:

    * ``FormalQ(t0)``        -- t specialized to the rational t0;
    * ``FormalQ.alpha(a)``   -- t = q^a for a positive integer a (the
      specialization used for ordinary-limit computations);
    * internally, a reciprocal-variable mode where the q slot holds 1/q,
      used when a formula needs parameters (1/q, 1/t).
    """

    is_point = False

    def __init__(self, t0=None, *, _q_value=None, _t_value=None, _label=None):
        super().__init__()
        g = RatFuncQ.generator()
        self._q_value = g if _q_value is None else _q_value
        if t0 is not None:
            self._t_value = RatFuncQ.from_rational(as_rational(t0))
            self.t0 = as_rational(t0)
        else:
            self._t_value = _t_value
            self.t0 = None
        self.alpha_value = None
        self._label = _label or (f"t0={self.t0}" if t0 is not None else "raw")
        self.one = RatFuncQ.from_rational(1)
        self.zero = RatFuncQ.from_rational(0)

    @classmethod
    def alpha(cls, a: int) -> "FormalQ":
        """Mode with t = q^a (positive integer a)."""
        if not (isinstance(a, int) and a >= 1):
            raise UnsupportedRegime(f"alpha must be a positive integer, got {a!r}")
        g = RatFuncQ.generator()
        mode = cls(_q_value=g, _t_value=g ** a, _label=f"t=q^{a}")
        mode.alpha_value = a
        return mode

    @classmethod
    def reciprocal(cls, t0=None) -> "FormalQ":
        """Mode whose parameter slots hold (1/q, 1/t0).

        With t0=None the t slot is unavailable; any n >= 2 computation that
        touches t will raise instead of silently using a wrong value.
        """
        g = RatFuncQ.generator()
        tv = None if t0 is None else RatFuncQ.from_rational(1 / as_rational(t0))
        return cls(_q_value=g ** -1, _t_value=tv, _label=f"q->1/q, t={t0}^-1")

    @property
    def q(self):
        return self._q_value

    @property
    def t(self):
        if self._t_value is None:
            raise UnsupportedRegime("this formal mode carries no value for t")
        return self._t_value

    def lift(self, r):
        if isinstance(r, RatFuncQ):
            return r
        return RatFuncQ.from_rational(as_rational(r))

    def __repr__(self):
        return f"FormalQ({self._label})"


def guarded_div(num, den, what: str):
    """Exact division that reports a vanishing denominator as degeneracy."""
    if den == 0:
        raise DegenerateParameters(f"vanishing denominator in {what}")
    return num / den


# ---------------------------------------------------------------------------
# Pochhammer symbols
# ---------------------------------------------------------------------------

def poch(a, m: int, mode: ScalarMode):
    """Finite product (a; q)_m = prod_{k=0}^{m-1} (1 - a q^k).

    Negative order inverts: (a; q)_{-k} = 1 / (a q^{-k}; q)_k.
    """
    if m == 0:
        return mode.one
    if m < 0:
        den = poch(a * mode.qpow(m), -m, mode)
        if den == 0:
            raise ZeroDivisionError("vanishing factor in negative-order product")
        return mode.one / den
    acc = mode.one
    for k in range(m):
        acc = acc * (mode.one - a * mode.qpow(k))
    return acc


def poch_partition(a, lam, mode: ScalarMode):
    """Partition product (a; q, t)_lam = prod_i (a t^{1-i}; q)_{lam_i}."""
    acc = mode.one
    for i, m in enumerate(lam, start=1):
        acc = acc * poch(a * mode.tpow(1 - i), m, mode)
    return acc


def poch_ratio(a, lam, mu, mode: ScalarMode):
    """Telescoped ratio (a)_lam / (a)_mu for mu contained in lam.

    Expanding both partition products factor by factor leaves
    prod_i prod_{k=mu_i}^{lam_i - 1} (1 - a t^{1-i} q^k), a plain product
    with no division, which stays finite even where (a)_mu itself vanishes.
    """
    acc = mode.one
    for i in range(len(lam)):
        base = a * mode.tpow(-i)
        for k in range(mu[i], lam[i]):
            acc = acc * (mode.one - base * mode.qpow(k))
    return acc


# ---------------------------------------------------------------------------
# The H factor and single-variable skew W values
# ---------------------------------------------------------------------------

def h_factor(lam, mu, mode: ScalarMode):
    """The two-ratio product over pairs i < j entering every skew W value.

    For each pair the order is mu_{j-1} - lam_j, which is nonnegative
    exactly because lam/mu is a horizontal strip.
    """
    if not is_horizontal_strip(lam, mu):
        raise NotAStrip(f"{lam}/{mu} is not a horizontal strip")
    n = len(lam)
    num = mode.one
    den = mode.one
    for j in range(2, n + 1):
        lj = lam[j - 1]
        for i in range(1, j):
            m = mu[j - 2] - lj
            if m == 0:
                continue
            mi, li = mu[i - 1], lam[i - 1]
            num = num * poch(mode.qpow(mi - mu[j - 2]) * mode.tpow(j - i), m, mode)
            num = num * poch(mode.qpow(li - mu[j - 2] + 1) * mode.tpow(j - i - 1), m, mode)
            den = den * poch(mode.qpow(mi - mu[j - 2] + 1) * mode.tpow(j - i - 1), m, mode)
            den = den * poch(mode.qpow(li - mu[j - 2]) * mode.tpow(j - i), m, mode)
    return guarded_div(num, den, "strip factor")


def _check_kind(kind: str):
    if kind not in W_KINDS:
        raise ValueError(f"unknown W kind {kind!r}; expected one of {W_KINDS}")


def w_skew(kind: str, lam, mu, x, mode: ScalarMode, s=None):
    """Single-variable skew value W_{lam/mu}(x); zero off horizontal strips."""
    _check_kind(kind)
    if not is_horizontal_strip(lam, mu):
        return mode.zero
    if x == 0:
        raise DegenerateParameters("W argument x must be nonzero")
    xinv = x ** -1
    ratio = poch_ratio(xinv, lam, mu, mode)
    h = h_factor(lam, mu, mode)
    if kind == "s_up":
        e = weight(mu) - weight(lam)
        sign = (-(mode.q / x)) ** e if e else mode.one
        return sign * mode.qpow(n_prime_stat(mu) - n_prime_stat(lam)) * h * ratio
    tpref = mode.tpow(-n_stat(lam) + weight(mu) + n_stat(mu))
    if kind == "s_down":
        return tpref * h * ratio
    if s is None:
        raise ValueError("kind 'ab' requires the auxiliary scalar s")
    num = poch_partition(mode.q * s * guarded_div(mode.one, x * mode.t, "W argument"), mu, mode)
    den = poch_partition(mode.q * s * guarded_div(mode.one, x, "W argument"), lam, mode)
    return tpref * h * ratio * guarded_div(num, den, "auxiliary product of W^ab")


def w_multi(kind: str, lam, mu, z, mode: ScalarMode, s=None):
    """Multivariable W_{lam/mu}(z_1, ..., z_m) via variable peeling.

    Each step removes the first variable and sums over horizontal strips
    nu below lam; the s slot of the peeled factor is shifted by t^{-ell}
    for the "ab" kind and the "s_up" kind gains t^{ell(|lam|-|nu|)}.
    Vanishes for mu not contained in lam (every strip chain dies).
    """
    _check_kind(kind)
    if not contains(lam, mu):
        return mode.zero
    if len(z) == 1:
        return w_skew(kind, lam, mu, z[0], mode, s)
    key = ("W", kind, lam, mu, z, s)
    hit = mode.cache.get(key)
    if hit is not None:
        return hit
    ell = len(z) - 1
    tshift = mode.tpow(-ell)
    y = z[0] * tshift
    s_peel = s * tshift if kind == "ab" else None
    rest = z[1:]
    total = mode.zero
    wl = weight(lam)
    for nu in enumerate_strips(lam):
        if not contains(nu, mu):
            continue
        skew = w_skew(kind, lam, nu, y, mode, s_peel)
        if skew == 0:
            continue
        inner = w_multi(kind, nu, mu, rest, mode, s)
        if inner == 0:
            continue
        term = skew * inner
        if kind == "s_up":
            term = term * mode.tpow(ell * (wl - weight(nu)))
        total = total + term
    mode.cache[key] = total
    return total


def principal_spec(lam, mode: ScalarMode) -> tuple:
    """The principal argument vector (q^{lam_1} t^{n-1}, ..., q^{lam_n})."""
    key = ("z", lam)
    hit = mode.cache.get(key)
    if hit is None:
        n = len(lam)
        hit = tuple(mode.qpow(lam[i]) * mode.tpow(n - 1 - i) for i in range(n))
        mode.cache[key] = hit
    return hit


def w_principal(kind: str, mu, lam, mode: ScalarMode, s=None):
    """W_{mu}(q^lam t^delta); vanishes whenever mu is not contained in lam."""
    return w_multi(kind, mu, zeros(len(mu)), principal_spec(lam, mode), mode, s)


def w_rectangular(kind: str, k: int, z, mode: ScalarMode, s=None):
    """Closed product form of W_{k^n}(z) for a rectangular index."""
    _check_kind(kind)
    if k < 0:
        raise ValueError("rectangular index requires k >= 0")
    if k == 0:
        return mode.one
    acc = mode.one
    if kind == "s_up":
        base = mode.qpow(1 - k)
        for zi in z:
            acc = acc * poch(base * zi, k, mode)
        return mode.qpow(-len(z) * k) * acc
    for zi in z:
        if zi == 0:
            raise DegenerateParameters("W argument must be nonzero")
        acc = acc * poch(zi ** -1, k, mode)
        if kind == "ab":
            acc = guarded_div(acc, poch(mode.q * s * zi ** -1, k, mode), "rectangular W^ab")
    return acc


# ---------------------------------------------------------------------------
# Closed self-evaluations at the principal argument
# ---------------------------------------------------------------------------

def _diag_pair_ratio(lam, mode: ScalarMode):
    acc = mode.one
    n = len(lam)
    for j in range(2, n + 1):
        for i in range(1, j):
            d = lam[i - 1] - lam[j - 1]
            if d == 0:
                continue
            num = poch(mode.q * mode.tpow(j - i - 1), d, mode)
            den = poch(mode.q * mode.tpow(j - i), d, mode)
            acc = acc * guarded_div(num, den, "self-evaluation pair ratio")
    return acc


def wsup_self(lam, mode: ScalarMode):
    """Closed form of the s_up value at its own principal argument."""
    n = len(lam)
    w = weight(lam)
    return (
        poch_partition(mode.q * mode.tpow(n - 1), lam, mode)
        * mode.tpow((n - 1) * w - 2 * n_stat(lam))
        * mode.qpow(-w)
        * _diag_pair_ratio(lam, mode)
    )


def wsdown_self(lam, mode: ScalarMode):
    """Closed form of the s_down value at its own principal argument."""
    n = len(lam)
    w = weight(lam)
    sign = mode.one if w % 2 == 0 else -mode.one
    return (
        sign
        * mode.tpow(-n_stat(lam))
        * mode.qpow(-w - n_prime_stat(lam))
        * poch_partition(mode.q * mode.tpow(n - 1), lam, mode)
        * _diag_pair_ratio(lam, mode)
    )
