"""Partition-indexed qt-binomial coefficients, qt-brackets and closed forms.

The central object is ``qt_binomial(lam, mu, mode)``: a two-parameter
deformation of the binomial coefficient indexed by a pair of n-part
partitions.  It reduces to the Gaussian polynomial at n = 1, equals 1 on
the diagonal and at mu = 0^n, and vanishes unless 0^n <= mu <= lam in the
componentwise order.
"""

from __future__ import annotations

from .partitions import contains, n_prime_stat, n_stat, weight
from .wcore import (
    ScalarMode,
    guarded_div,
    poch,
    poch_partition,
    w_principal,
)


def pair_ratio(mu, mode: ScalarMode):
    """prod_{i<j} (q t^{j-i}; q)_{mu_i - mu_j} / (q t^{j-i-1}; q)_{mu_i - mu_j}."""
    n = len(mu)
    acc = mode.one
    for j in range(2, n + 1):
        for i in range(1, j):
            d = mu[i - 1] - mu[j - 1]
            if d == 0:
                continue
            num = poch(mode.q * mode.tpow(j - i), d, mode)
            den = poch(mode.q * mode.tpow(j - i - 1), d, mode)
            acc = acc * guarded_div(num, den, "binomial pair ratio")
    return acc


def _t_pair_ratio(mu, mode: ScalarMode):
    """prod_{i<j} (t^{j-i+1}; q)_{mu_i - mu_j} / (t^{j-i}; q)_{mu_i - mu_j}."""
    n = len(mu)
    acc = mode.one
    for j in range(2, n + 1):
        for i in range(1, j):
            d = mu[i - 1] - mu[j - 1]
            if d == 0:
                continue
            num = poch(mode.tpow(j - i + 1), d, mode)
            den = poch(mode.tpow(j - i), d, mode)
            acc = acc * guarded_div(num, den, "t-pair ratio")
    return acc


def qt_binomial(lam, mu, mode: ScalarMode):
    """The qt-binomial coefficient of lam over mu.

    mu may be a generalized (weakly decreasing, possibly negative)
    integer vector; any negative part forces the value 0, as does
    mu not contained in lam.
    """
    if len(lam) != len(mu):
        raise ValueError("lam and mu must have the same length")
    if mu[-1] < 0 or not contains(lam, mu):
        return mode.zero
    key = ("binom", lam, mu)
    hit = mode.cache.get(key)
    if hit is not None:
        return hit
    n = len(mu)
    w = weight(mu)
    pref = mode.qpow(w) * mode.tpow(2 * n_stat(mu) + (1 - n) * w)
    den = poch_partition(mode.q * mode.tpow(n - 1), mu, mode)
    value = (
        guarded_div(pref, den, "qt-binomial prefactor")
        * pair_ratio(mu, mode)
        * w_principal("s_up", mu, lam, mode)
    )
    mode.cache[key] = value
    return value


def binom_rect_lower(lam, k: int, mode: ScalarMode):
    """Closed form of the binomial with lower index the rectangle k^n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = len(lam)
    acc = mode.one
    for i in range(1, n + 1):
        num = poch(mode.qpow(1 - k + lam[i - 1]) * mode.tpow(n - i), k, mode)
        den = poch(mode.q * mode.tpow(n - i), k, mode)
        acc = acc * guarded_div(num, den, "rectangular lower binomial")
    return acc


def binom_rect_upper(k: int, mu, mode: ScalarMode):
    """Closed form of the binomial with upper index the rectangle k^n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = len(mu)
    w = weight(mu)
    acc = mode.tpow(2 * n_stat(mu) + (1 - n) * w)
    for i in range(1, n + 1):
        mi = mu[i - 1]
        num = poch(mode.qpow(1 + k - mi) * mode.tpow(i - 1), mi, mode)
        den = poch(mode.q * mode.tpow(n - i), mi, mode)
        acc = acc * guarded_div(num, den, "rectangular upper binomial")
    return acc * pair_ratio(mu, mode) * _t_pair_ratio(mu, mode)


def binom_e1(lam, mode: ScalarMode):
    """Sum form of the binomial at mu = e_1: sum_i [lam_i]_q t^{1-i}."""
    acc = mode.zero
    for i in range(1, len(lam) + 1):
        acc = acc + q_number(lam[i - 1], mode) * mode.tpow(1 - i)
    return acc


def q_number(m: int, mode: ScalarMode):
    """[m]_q = (1 - q^m) / (1 - q)."""
    return guarded_div(mode.one - mode.qpow(m), mode.one - mode.q, "q-number")


def gaussian_binomial(m: int, k: int, mode: ScalarMode):
    """The Gaussian polynomial (q)_m / ((q)_{m-k} (q)_k), zero off-range."""
    if k < 0 or k > m:
        return mode.zero
    num = poch(mode.q, m, mode)
    den = poch(mode.q, m - k, mode) * poch(mode.q, k, mode)
    return guarded_div(num, den, "Gaussian binomial")


def qt_bracket(z, mode: ScalarMode):
    """Multi-part q-number: prod_i (1 - q^{z_i} t^{n-i}) / (1 - q t^{n-i})."""
    n = len(z)
    acc = mode.one
    for i in range(1, n + 1):
        num = mode.one - mode.qpow(z[i - 1]) * mode.tpow(n - i)
        den = mode.one - mode.q * mode.tpow(n - i)
        acc = acc * guarded_div(num, den, "qt-bracket")
    return acc


def qt_bracket_shifted(Q, mu, mode: ScalarMode):
    """The mu-shifted bracket as a function of the principal value Q = q^x.

    Equal to q^{n(mu')} (Q; 1/q, 1/t)_mu / prod_i (1 - q t^{n-i})^{mu_i};
    the reciprocal-base partition product expands to
    prod_i prod_{k<mu_i} (1 - Q t^{i-1} q^{-k}).
    """
    Q = mode.lift(Q)
    n = len(mu)
    acc = mode.qpow(n_prime_stat(mu))
    for i in range(1, n + 1):
        base = Q * mode.tpow(i - 1)
        for k in range(mu[i - 1]):
            acc = acc * (mode.one - base * mode.qpow(-k))
        den = (mode.one - mode.q * mode.tpow(n - i)) ** mu[i - 1]
        acc = guarded_div(acc, den, "shifted bracket")
    return acc
