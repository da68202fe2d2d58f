"""Executable verification of the package's identities.

Every check computes its left side and right side separately -- through
independent code paths wherever one exists -- and returns the exact
residual.  Exact checks pass iff the residual is exactly zero; truncated
checks carry a rational tolerance and are flagged approximate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .binomial import pair_ratio, _t_pair_ratio, qt_binomial
from .errors import ConvergenceViolated, DegenerateParameters
from .partitions import (
    bump,
    contains,
    enumerate_sub,
    format_partition,
    n_prime_stat,
    n_stat,
    valid_bumps,
    weight,
    zeros,
)
from .scalars import Rational, as_rational, format_rational
from .wcore import (
    AtPoint,
    QtPoint,
    ScalarMode,
    guarded_div,
    poch,
    poch_partition,
    w_principal,
)


@dataclass
class IdentityCheck:
    """Record of one verified identity: name, both sides, exact residual."""

    name: str
    lhs: object
    rhs: object
    residual: object
    params: dict
    approximate: bool = False
    tolerance: object = None

    @property
    def passed(self) -> bool:
        if self.approximate:
            return abs(self.residual) < self.tolerance
        return self.residual == 0

    def to_record(self) -> dict:
        rec = {
            "name": self.name,
            "params": self.params,
            "residual": format_rational(self.residual)
            if not isinstance(self.residual, str)
            else self.residual,
            "approximate": self.approximate,
            "pass": self.passed,
        }
        if self.tolerance is not None:
            rec["tolerance"] = format_rational(self.tolerance)
        return rec


def _params(**kv) -> dict:
    out = {}
    for k, v in kv.items():
        if isinstance(v, tuple):
            out[k] = format_partition(v)
        elif isinstance(v, int):
            out[k] = str(v)
        else:
            out[k] = format_rational(v)
    return out


def _mode_params(mode: ScalarMode) -> dict:
    if getattr(mode, "is_point", False):
        return {"q": format_rational(mode.q), "t": format_rational(mode.t)}
    return {"mode": repr(mode)}


# ---------------------------------------------------------------------------
# Exact identities
# ---------------------------------------------------------------------------

def check_binomial_theorem(lam, x, mode: ScalarMode) -> IdentityCheck:
    """(x)_lam against the signed binomial sum over mu <= lam."""
    x = mode.lift(x)
    lhs = poch_partition(x, lam, mode)
    rhs = mode.zero
    for mu in enumerate_sub(lam):
        w = weight(mu)
        sign = mode.one if w % 2 == 0 else -mode.one
        rhs = rhs + (
            sign
            * mode.qpow(n_prime_stat(mu))
            * mode.tpow(-n_stat(mu))
            * qt_binomial(lam, mu, mode)
            * x ** w
        )
    return IdentityCheck(
        "binomial_theorem", lhs, rhs, lhs - rhs,
        _params(lam=lam, x=x) if mode.is_point else {"lam": format_partition(lam)},
    )


def check_2phi1(lam, s, x, mode: ScalarMode) -> IdentityCheck:
    """Terminating sum: (s/x)_lam / (s)_lam against the strip-weighted series."""
    s = mode.lift(s)
    x = mode.lift(x)
    n = len(lam)
    lhs = guarded_div(
        poch_partition(s * x ** -1, lam, mode),
        poch_partition(s, lam, mode),
        "left side of the terminating sum",
    )
    s_slot = s ** -1 * mode.tpow(n - 1)
    rhs = mode.zero
    for mu in enumerate_sub(lam):
        den = poch_partition(mode.q * mode.tpow(n - 1), mu, mode)
        term = (
            guarded_div(mode.qpow(weight(mu)) * mode.tpow(2 * n_stat(mu)), den, "series term")
            * poch_partition(x ** -1, mu, mode)
            * pair_ratio(mu, mode)
            * w_principal("ab", mu, lam, mode, s_slot)
        )
        rhs = rhs + term
    return IdentityCheck("2phi1", lhs, rhs, lhs - rhs, _params(lam=lam, s=s, x=x))


def _weighted_binom_sum(lam, k, mode: ScalarMode):
    acc = mode.zero
    for mu in enumerate_sub(lam, weight_filter=k):
        acc = acc + (
            mode.qpow(n_prime_stat(mu))
            * mode.tpow(-n_stat(mu))
            * qt_binomial(lam, mu, mode)
        )
    return acc


def check_pascal(lam, i: int, k: int, mode: ScalarMode) -> IdentityCheck:
    """Bump recurrence relating weight-k sums over lam + e_i to sums over lam."""
    lam_i = bump(lam, i)
    lhs = _weighted_binom_sum(lam_i, k, mode)
    rhs = _weighted_binom_sum(lam, k, mode)
    if k >= 1:
        rhs = rhs + (
            mode.qpow(lam[i - 1])
            * mode.tpow(1 - i)
            * _weighted_binom_sum(lam, k - 1, mode)
        )
    return IdentityCheck("pascal", lhs, rhs, lhs - rhs, _params(lam=lam, i=i, k=k))


def check_symmetry(lam, k: int, mode: ScalarMode) -> IdentityCheck:
    """Weight-k and weight-(|lam|-k) binomial sums agree."""
    lhs = mode.zero
    for mu in enumerate_sub(lam, weight_filter=k):
        lhs = lhs + qt_binomial(lam, mu, mode)
    rhs = mode.zero
    for tau in enumerate_sub(lam, weight_filter=weight(lam) - k):
        rhs = rhs + qt_binomial(lam, tau, mode)
    return IdentityCheck("symmetry", lhs, rhs, lhs - rhs, _params(lam=lam, k=k))


def check_weak_cocycle(nu, mu, s, r, mode: ScalarMode) -> IdentityCheck:
    """Composite shift by s*r against the double-shift expansion."""
    s = mode.lift(s)
    r = mode.lift(r)
    n = len(nu)
    tn1 = mode.tpow(n - 1)
    lhs = poch_partition(s * r, nu, mode) * w_principal(
        "ab", mu, nu, mode, (s * r) ** -1 * tn1
    )
    s_nu = poch_partition(s, nu, mode)
    rhs = mode.zero
    for lam in enumerate_sub(nu):
        if not contains(lam, mu):
            continue
        den = poch_partition(mode.q * tn1, lam, mode)
        term = (
            guarded_div(
                mode.qpow(weight(lam)) * mode.tpow(2 * n_stat(lam)) * s_nu,
                den,
                "cocycle term",
            )
            * pair_ratio(lam, mode)
            * w_principal("ab", lam, nu, mode, s ** -1 * tn1)
            * poch_partition(r, lam, mode)
            * w_principal("ab", mu, lam, mode, r ** -1 * tn1)
        )
        rhs = rhs + term
    return IdentityCheck(
        "weak_cocycle", lhs, rhs, lhs - rhs, _params(nu=nu, mu=mu, s=s, r=r)
    )


def check_double_binomial(nu, mu, mode: ScalarMode) -> IdentityCheck:
    """Telescoped product of two binomials against the nested double sum."""
    minus_one = -mode.one
    lhs = (
        mode.tpow(-n_stat(mu))
        * mode.qpow(n_prime_stat(mu))
        * guarded_div(
            poch_partition(minus_one, nu, mode),
            poch_partition(minus_one, mu, mode),
            "double-binomial left side",
        )
        * qt_binomial(nu, mu, mode)
    )
    rhs = mode.zero
    for lam in enumerate_sub(nu):
        if not contains(lam, mu):
            continue
        rhs = rhs + (
            mode.tpow(-n_stat(lam))
            * mode.qpow(n_prime_stat(lam))
            * qt_binomial(nu, lam, mode)
            * qt_binomial(lam, mu, mode)
        )
    return IdentityCheck("double_binomial", lhs, rhs, lhs - rhs, _params(nu=nu, mu=mu))


def check_density_normalization(lam, z, which: str, mode: ScalarMode) -> IdentityCheck:
    """Total mass of the g or f density over the poset below lam equals 1."""
    if which not in ("g", "f"):
        raise ValueError("which must be 'g' or 'f'")
    z = mode.lift(z)
    total = mode.zero
    if which == "g":
        wl = weight(lam)
        for mu in enumerate_sub(lam):
            total = total + (
                qt_binomial(lam, mu, mode)
                * z ** (wl - weight(mu))
                * poch_partition(z, mu, mode)
            )
    else:
        z_lam = poch_partition(z, lam, mode)
        for mu in enumerate_sub(lam):
            total = total + (
                mode.tpow(-2 * n_stat(mu))
                * mode.qpow(2 * n_prime_stat(mu))
                * qt_binomial(lam, mu, mode)
                * guarded_div(z_lam, poch_partition(z, mu, mode), "f-density term")
                * z ** weight(mu)
            )
    return IdentityCheck(
        f"density_normalization_{which}", total, mode.one, total - mode.one,
        _params(lam=lam, z=z),
    )


# ---------------------------------------------------------------------------
# Truncated (approximate) identity
# ---------------------------------------------------------------------------

def geometric_convergence_ok(z, point: QtPoint, n: int) -> bool:
    """max_i |q z t^(2i-n-1)| < 1, the ratio-test condition of the series."""
    q, t = point.q, point.t
    return all(abs(q * z * t ** (2 * i - n - 1)) < 1 for i in range(1, n + 1))


def check_geometric(
    mu, z, part_cap: int, trunc: int, point: QtPoint, tolerance=Rational(1, 10 ** 8)
) -> IdentityCheck:
    """Truncated comparison of z^{|mu|} / (qz)_inf with its partition series.

    The series coefficient of z^{|lam|} carries the lam-indexed weight
    q^{|lam|} t^{2n(lam)+(1-n)|lam|} / (q t^{n-1})_lam times both pair
    ratios, against the s_up value at the principal argument of lam; for
    mu = 0^n this is exactly the series expansion of 1/(qz)_inf, and at
    n = 1 it reduces to the classical expansion of 1/(qz; q)_inf.

    The left side truncates each of the n infinite products at ``trunc``
    factors; the right side sums over partitions containing mu with parts
    at most ``part_cap``.  Requires |q| < 1 and the ratio-test condition.
    """
    n = len(mu)
    z = as_rational(z)
    mode = AtPoint(point)
    if not abs(point.q) < 1:
        raise ConvergenceViolated("infinite products require |q| < 1")
    if not geometric_convergence_ok(z, point, n):
        raise ConvergenceViolated("parameters violate max_i |q z t^(2i-n-1)| < 1")
    prod = mode.one
    for i in range(1, n + 1):
        prod = prod * poch(mode.q * z * mode.tpow(1 - i), trunc, mode)
    lhs = guarded_div(z ** weight(mu), prod, "truncated product") * _t_pair_ratio(mu, mode)
    qz = mode.q * z
    tn1 = mode.tpow(n - 1)
    rhs = mode.zero
    for lam in enumerate_sub((part_cap,) * n):
        if not contains(lam, mu):
            continue
        w = w_principal("s_up", mu, lam, mode)
        if w == 0:
            continue
        wl = weight(lam)
        coeff = guarded_div(
            qz ** wl * mode.tpow(2 * n_stat(lam) + (1 - n) * wl),
            poch_partition(mode.q * tn1, lam, mode),
            "series coefficient",
        )
        rhs = rhs + coeff * pair_ratio(lam, mode) * _t_pair_ratio(lam, mode) * w
    return IdentityCheck(
        "geometric", lhs, rhs, lhs - rhs,
        _params(mu=mu, z=z, part_cap=part_cap, trunc=trunc),
        approximate=True, tolerance=as_rational(tolerance),
    )


# ---------------------------------------------------------------------------
# Seeded random parameter generation
# ---------------------------------------------------------------------------

def random_rational(rng: random.Random) -> Rational:
    """Numerator and denominator drawn uniformly from [1, 10^6]."""
    return Rational(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))


def random_unit(rng: random.Random) -> Rational:
    """A rational strictly between 0 and 1."""
    b = rng.randint(2, 10 ** 6)
    a = rng.randint(1, b - 1)
    return Rational(a, b)


def random_qt_point(
    rng: random.Random, n: int, max_part: int, unit: bool = False, attempts: int = 100
) -> QtPoint:
    """Draw a non-degenerate (q, t); with unit=True both lie in (0, 1)."""
    for _ in range(attempts):
        q = random_unit(rng) if unit else random_rational(rng)
        t = random_unit(rng) if unit else random_rational(rng)
        try:
            return QtPoint(q, t, n=n, max_part=max_part)
        except DegenerateParameters:
            continue
    raise DegenerateParameters(f"no valid point found in {attempts} attempts")


def sample_until(rng: random.Random, draw, accept, attempts: int = 100):
    """Resample ``draw(rng)`` until ``accept`` does not reject it."""
    for _ in range(attempts):
        value = draw(rng)
        if accept(value):
            return value
    raise DegenerateParameters(f"rejected {attempts} consecutive samples")


# ---------------------------------------------------------------------------
# The suite
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    """Aggregated per-identity residual records for one suite run."""

    n: int
    bound: tuple
    points: int
    seed: int
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)  # report-only, never fail

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: IdentityCheck):
        self.checks.append(check)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "bound": format_partition(self.bound),
            "points": self.points,
            "seed": self.seed,
            "total": len(self.checks),
            "failures": sum(1 for c in self.checks if not c.passed),
            "all_pass": self.all_pass,
            "checks": [c.to_record() for c in self.checks],
        }
        if self.notes:
            out["exploratory"] = self.notes
        return out


def run_identity_suite(
    bound,
    points: int = 5,
    seed: int = 0,
    geometric_caps: tuple = (6, 30),
    report: VerificationReport | None = None,
) -> VerificationReport:
    """Run every identity check over all partitions below ``bound``.

    One (q, t) point plus fresh auxiliary scalars are drawn per round; the
    same seeded stream makes the whole report reproducible byte for byte.
    """
    bound = tuple(bound)
    n = len(bound)
    rng = random.Random(seed)
    if report is None:
        report = VerificationReport(n=n, bound=bound, points=points, seed=seed)
    lams = enumerate_sub(bound)
    for _ in range(points):
        point = random_qt_point(rng, n, max_part=bound[0] + 1)
        mode = AtPoint(point)

        # scalars entering Pochhammer denominators must keep them alive
        def alive(v):
            return v != 0 and poch_partition(v, bound, mode) != 0

        x = sample_until(rng, random_rational, lambda v: v != 0)
        z = sample_until(rng, random_rational, alive)
        s = sample_until(rng, random_rational, alive)
        r = sample_until(rng, random_rational, lambda v: alive(v) and alive(v * s))
        for lam in lams:
            report.add(check_binomial_theorem(lam, x, mode))
            report.add(check_2phi1(lam, s, x, mode))
            report.add(check_density_normalization(lam, z, "g", mode))
            report.add(check_density_normalization(lam, z, "f", mode))
            for k in range(weight(lam) + 1):
                report.add(check_symmetry(lam, k, mode))
            for i in valid_bumps(lam):
                for k in range(weight(lam) + 1):
                    report.add(check_pascal(lam, i, k, mode))
        for nu in lams:
            for mu in enumerate_sub(nu):
                report.add(check_double_binomial(nu, mu, mode))
                report.add(check_weak_cocycle(nu, mu, s, r, mode))
        # truncated geometric series at a deliberately small |q| point
        part_cap, trunc = geometric_caps
        gpoint = None
        for _ in range(100):
            try:
                gpoint = QtPoint(random_unit(rng) / 2, random_unit(rng),
                                 n=n, max_part=part_cap)
                break
            except DegenerateParameters:
                continue
        if gpoint is None:
            raise DegenerateParameters("no usable point for the truncated check")
        bnd = max(
            abs(gpoint.q * gpoint.t ** (2 * i - n - 1)) for i in range(1, n + 1)
        )
        zgeo = Rational(1, 100 * (1 + bnd.numerator // bnd.denominator))
        for mu in (zeros(n), bump(zeros(n), 1)):
            report.add(
                check_geometric(mu, zgeo, part_cap, trunc, gpoint,
                                tolerance=Rational(1, 10 ** 6))
            )
    return report


# ---------------------------------------------------------------------------
# Checks for the special-number layer
# ---------------------------------------------------------------------------

def _classical_sequences():
    """1-part classical reference values computed independently here."""
    from math import comb

    bern = [Rational(1)]
    for m in range(1, 5):
        # sum_{k<=m} C(m+1, k) B_k = 0
        acc = Rational(0)
        for k in range(m):
            acc += comb(m + 1, k) * bern[k]
        bern.append(-acc / (m + 1))
    catalan = [Rational(comb(2 * m, m), m + 1) for m in range(6)]
    fib = [Rational(1), Rational(1)]
    for _ in range(8):
        fib.append(fib[-1] + fib[-2])
    # Bell via the triangle
    s2 = {(0, 0): 1}
    for m in range(1, 6):
        for k in range(m + 1):
            s2[(m, k)] = (k and s2.get((m - 1, k - 1), 0)) + k * s2.get((m - 1, k), 0)
    bell = [Rational(sum(s2.get((m, k), 0) for k in range(m + 1))) for m in range(6)]
    return bern[1:], catalan, fib, bell


def run_specials_suite(
    bound, points: int = 3, seed: int = 0,
    report: VerificationReport | None = None,
) -> VerificationReport:
    """Checks for the Stirling/Bernoulli/Bell/Catalan/Fibonacci layer.

    Covers: first/second-kind diagonals and matrix inversion, both
    change-of-basis expansions, the bracket expansion in the first kind,
    the Bernoulli recurrence residual, classical 1-part limits of all four
    sequence families, the rectangular Catalan closed forms, and the
    exploratory odd-weight Bernoulli report (non-failing).
    """
    from .binomial import qt_binomial
    from .specials import (
        SpecialSequence,
        alpha_limit,
        bell,
        bernoulli,
        bernoulli_alpha,
        bernoulli_recurrence_residual,
        catalan,
        fibonacci,
        stirling,
        stirling_expansion_residual,
        u_coeff,
        v_coeff,
    )

    bound = tuple(bound)
    n = len(bound)
    rng = random.Random(seed)
    if report is None:
        report = VerificationReport(n=n, bound=bound, points=points, seed=seed)

    stir_bound = tuple(min(b, c) for b, c in zip(bound, (3, 2, 1) + (1,) * max(0, n - 3)))
    stir_lams = enumerate_sub(stir_bound)
    for _ in range(points):
        point = random_qt_point(rng, n, max_part=bound[0] + 1)
        mode = AtPoint(point)
        x = sample_until(rng, random_rational, lambda v: v != 0)
        Q = sample_until(rng, random_rational, lambda v: v != 0)

        # u/v and Stirling inversion, diagonals
        for nu in stir_lams:
            for kind in ("first", "second"):
                d = stirling(kind, nu, nu, mode)
                report.add(IdentityCheck(
                    f"stirling_diagonal_{kind}", d, mode.one, d - mode.one,
                    _params(nu=nu),
                ))
            for mu in enumerate_sub(nu):
                uv = mode.zero
                s12 = mode.zero
                for lam in enumerate_sub(nu):
                    if not contains(lam, mu):
                        continue
                    uv = uv + u_coeff(nu, lam, mode) * v_coeff(lam, mu, mode)
                    s12 = s12 + (
                        stirling("first", nu, lam, mode)
                        * stirling("second", lam, mu, mode)
                    )
                delta = mode.one if mu == nu else mode.zero
                report.add(IdentityCheck(
                    "uv_inversion", uv, delta, uv - delta, _params(nu=nu, mu=mu)))
                report.add(IdentityCheck(
                    "stirling_inversion", s12, delta, s12 - delta,
                    _params(nu=nu, mu=mu)))

        # change of basis: reciprocal-base product against u; powers against v
        for lam in stir_lams:
            recip = mode.one
            for i in range(1, n + 1):
                for k in range(lam[i - 1]):
                    recip = recip * (mode.one - x * mode.tpow(i - 1) * mode.qpow(-k))
            ex_u = mode.zero
            ex_v = mode.zero
            for mu in enumerate_sub(lam):
                ex_u = ex_u + u_coeff(lam, mu, mode) * x ** weight(mu)
                inner = mode.one
                for i in range(1, n + 1):
                    for k in range(mu[i - 1]):
                        inner = inner * (
                            mode.one - x * mode.tpow(i - 1) * mode.qpow(-k)
                        )
                ex_v = ex_v + v_coeff(lam, mu, mode) * inner
            report.add(IdentityCheck(
                "change_of_basis_u", recip, ex_u, recip - ex_u, _params(lam=lam, x=x)))
            xw = x ** weight(lam)
            report.add(IdentityCheck(
                "change_of_basis_v", xw, ex_v, xw - ex_v, _params(lam=lam, x=x)))
            report.add(IdentityCheck(
                "stirling_expansion",
                "(bracket)", "(expansion)",
                stirling_expansion_residual(lam, Q, mode),
                _params(lam=lam, Q=Q),
            ))

        # Bernoulli recurrence residual
        bern_bound = tuple(min(b, c) for b, c in zip(bound, (4, 2) + (1,) * max(0, n - 2)))
        for lam in enumerate_sub(bern_bound):
            if weight(lam) == 0:
                continue
            res = bernoulli_recurrence_residual(lam, mode)
            report.add(IdentityCheck(
                "bernoulli_recurrence", "(sum)", mode.zero, res, _params(lam=lam)))

        # Catalan closed forms at this point
        kmax = min(bound[0], 3)
        for k in range(1, kmax + 1):
            lam = (k,) * n
            lhs = catalan(lam, mode)
            num = mode.one - mode.q * mode.tpow(n - 1)
            den = mode.one - mode.qpow(k + 1) * mode.tpow(n - 1)
            closed = guarded_div(num, den, "rectangular Catalan")
            for i in range(2, n + 1):
                closed = closed * guarded_div(
                    mode.one - mode.q * mode.tpow(n - i),
                    mode.one - mode.qpow(k) * mode.tpow(n - i),
                    "rectangular Catalan",
                )
            for i in range(1, n + 1):
                closed = closed * guarded_div(
                    poch(mode.qpow(1 + k) * mode.tpow(n - i), k, mode),
                    poch(mode.q * mode.tpow(n - i), k, mode),
                    "rectangular Catalan",
                )
            report.add(IdentityCheck(
                "catalan_rectangular", lhs, closed, lhs - closed, _params(k=k)))

        # Bell against its defining sum (definition restated independently)
        for lam in stir_lams:
            b = bell(lam, mode)
            direct = mode.zero
            for mu in enumerate_sub(lam):
                direct = direct + (
                    mode.tpow(-n_stat(mu)) * mode.qpow(n_prime_stat(mu))
                    * stirling("second", lam, mu, mode)
                )
            report.add(IdentityCheck(
                "bell_definition", b, direct, b - direct, _params(lam=lam)))

        # Fibonacci against a brute-force decomposition sum
        fib_bound = tuple(min(b, 2) for b in bound)
        from .partitions import is_partition
        from itertools import product as iproduct

        for lam in enumerate_sub(fib_bound):
            got = fibonacci(lam, mode)
            brute = mode.zero
            for nu in iproduct(*(range(p + 1) for p in lam)):
                mu = tuple(l - v for l, v in zip(lam, nu))
                if not (is_partition(nu) and is_partition(mu)):
                    continue
                wm = weight(mu)
                brute = brute + (
                    mode.qpow(2 * n_prime_stat(mu))
                    * mode.tpow(2 * (n - 1) * wm - 2 * n_stat(mu))
                    * qt_binomial(nu, mu, mode)
                )
            report.add(IdentityCheck(
                "fibonacci_decomposition", got, brute, got - brute, _params(lam=lam)))

    # classical 1-part limits (deterministic, point-free)
    bern, cat, fib, bel = _classical_sequences()
    for m in range(1, 5):
        got = alpha_limit(lambda mo, m=m: bernoulli((m,), mo), 1)
        report.add(IdentityCheck(
            "classical_bernoulli", got, bern[m - 1], got - bern[m - 1], _params(m=m)))
    for m in range(6):
        got = alpha_limit(lambda mo, m=m: catalan((m,), mo), 1)
        report.add(IdentityCheck(
            "classical_catalan", got, cat[m], got - cat[m], _params(m=m)))
    for m in range(10):
        got = alpha_limit(lambda mo, m=m: fibonacci((m,), mo), 1)
        report.add(IdentityCheck(
            "classical_fibonacci", got, fib[m], got - fib[m], _params(m=m)))
    for m in range(6):
        got = alpha_limit(lambda mo, m=m: bell((m,), mo), 1)
        report.add(IdentityCheck(
            "classical_bell", got, bel[m], got - bel[m], _params(m=m)))

    # exploratory: odd-weight ordinary Bernoulli values (reported, not asserted)
    if n == 2:
        for alpha in (1, 2):
            for lam in [(3, 0), (2, 1), (5, 0), (4, 1), (3, 2)]:
                val = bernoulli_alpha(lam, alpha)
                report.notes.append({
                    "family": "alpha_bernoulli_odd_weight",
                    "lam": format_partition(lam),
                    "alpha": alpha,
                    "value": format_rational(val),
                    "vanishes": val == 0,
                })
    return report
