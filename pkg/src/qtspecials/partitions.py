"""Fixed-length partitions, their statistics, orderings and enumerators.

A partition is represented as a plain tuple of n weakly decreasing
nonnegative integers; zeros are kept so that the length is always exactly n
(the surrounding formulas weight part i by powers of t^(n-i), so n matters).
Generalized partitions relax nonnegativity but keep the weak decrease.
"""

from __future__ import annotations

from itertools import product
from math import comb

from .errors import LengthMismatch, NotAPartition

Parts = tuple  # tuple[int, ...]; kept loose for 3.10 ergonomics


def partition(parts) -> Parts:
    """Validate and normalize an iterable of parts into a partition tuple."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise NotAPartition(f"parts not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise NotAPartition(f"negative part in partition: {p}")
    return p


def generalized(parts) -> Parts:
    """Validate a weakly decreasing integer tuple (negative parts allowed)."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise NotAPartition(f"parts not weakly decreasing: {p}")
    return p


def is_partition(parts) -> bool:
    p = tuple(parts)
    return all(a >= b for a, b in zip(p, p[1:])) and (not p or p[-1] >= 0)


def parse_partition(text: str) -> Parts:
    """Parse a comma-separated literal such as "3,2,0"; length defines n."""
    return partition(int(x) for x in text.strip().split(","))


def format_partition(lam) -> str:
    return ",".join(str(x) for x in lam)


def zeros(n: int) -> Parts:
    return (0,) * n


def e1(n: int) -> Parts:
    """The vector (1, 0, ..., 0) of length n."""
    return (1,) + (0,) * (n - 1)


def staircase(n: int) -> Parts:
    """delta(n) = (n-1, n-2, ..., 0)."""
    return tuple(range(n - 1, -1, -1))


def weight(lam) -> int:
    return sum(lam)


def n_stat(lam) -> int:
    """n(lambda) = sum (i-1) * lambda_i, with i counted from 1."""
    return sum(i * x for i, x in enumerate(lam))


def n_prime_stat(lam) -> int:
    """n(lambda') = sum C(lambda_i, 2)."""
    return sum(comb(x, 2) for x in lam)


def stats(lam):
    """(weight, n(lambda), n(lambda')) in one pass."""
    return weight(lam), n_stat(lam), n_prime_stat(lam)


def _require_same_length(lam, mu):
    if len(lam) != len(mu):
        raise LengthMismatch(f"length {len(lam)} vs {len(mu)}")


def contains(lam, mu) -> bool:
    """Inclusion ordering: mu_i <= lam_i for all i."""
    _require_same_length(lam, mu)
    return all(m <= l for l, m in zip(lam, mu))


def is_horizontal_strip(lam, mu) -> bool:
    """Interlacing test lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... >= mu_n >= 0."""
    _require_same_length(lam, mu)
    n = len(lam)
    for i in range(n):
        if not (lam[i] >= mu[i]):
            return False
        if i + 1 < n and not (mu[i] >= lam[i + 1]):
            return False
    return mu[-1] >= 0 if n else True


def _revlex_key(p):
    # ascending weight, then descending lexicographic within a weight
    return (sum(p), tuple(-x for x in p))


def enumerate_sub(lam, weight_filter: int | None = None) -> list:
    """All partitions mu contained in lam, in ascending weight then
    descending lexicographic order; optionally restricted to |mu| = k."""
    n = len(lam)
    out = []

    def rec(i, prev, acc, w):
        if i == n:
            if weight_filter is None or w == weight_filter:
                out.append(tuple(acc))
            return
        hi = min(lam[i], prev)
        for v in range(hi + 1):
            if weight_filter is not None and w + v > weight_filter:
                break
            acc.append(v)
            rec(i + 1, v, acc, w + v)
            acc.pop()

    if n:
        rec(0, lam[0], [], 0)
    else:
        out.append(())
    out.sort(key=_revlex_key)
    return out


def enumerate_strips(lam) -> list:
    """All nu with lam/nu a horizontal strip (nu interlaces below lam)."""
    n = len(lam)
    ranges = [range((lam[i + 1] if i + 1 < n else 0), lam[i] + 1) for i in range(n)]
    out = [tuple(v) for v in product(*ranges)]
    out.sort(key=_revlex_key)
    return out


def sum_decompositions(lam) -> list:
    """All pairs (nu, mu) of partitions with nu_i + mu_i = lam_i for all i."""
    out = []
    for nu in enumerate_sub(lam):
        mu = tuple(l - v for l, v in zip(lam, nu))
        if is_partition(mu):
            out.append((nu, mu))
    return out


def bump(lam, i: int) -> Parts:
    """lam + e_i (i counted from 1); error when the result is not a partition."""
    if not (1 <= i <= len(lam)):
        raise IndexError(f"bump index {i} out of range for length {len(lam)}")
    parts = list(lam)
    parts[i - 1] += 1
    if i >= 2 and parts[i - 1] > parts[i - 2]:
        raise NotAPartition(f"{lam} + e_{i} is not a partition")
    return tuple(parts)


def valid_bumps(lam) -> list:
    """Indices i (from 1) for which lam + e_i is a partition."""
    return [i for i in range(1, len(lam) + 1) if i == 1 or lam[i - 1] < lam[i - 2]]


def scale(lam, c: int) -> Parts:
    return tuple(c * x for x in lam)
