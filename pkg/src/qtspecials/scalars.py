"""Exact scalars: arbitrary-precision rationals and rational functions of q.

Two scalar carriers are used throughout the package:

* ``Rational`` -- an exact fraction kept in lowest terms with a positive
  denominator.  Backed by ``gmpy2.mpq`` when available (much faster on the
  large numerators this package produces), with ``fractions.Fraction`` as a
  pure-Python fallback.  Set ``QTSPECIALS_BACKEND=fractions`` to force the
  fallback, ``QTSPECIALS_BACKEND=gmpy2`` to require gmpy2.

* ``RatFuncQ`` -- a quotient of two polynomials in a single formal variable
  q with Rational coefficients.  Used to carry values symbolically in q so
  that limits at q = 1 can be taken exactly by cancelling (q - 1) factors.

No floating point enters any computation here.
"""

from __future__ import annotations

import os
import re

_BACKEND = os.environ.get("QTSPECIALS_BACKEND", "gmpy2")
if _BACKEND == "gmpy2":
    try:
        from gmpy2 import mpq as Rational
    except ImportError:  # pragma: no cover - exercised only without gmpy2
        from fractions import Fraction as Rational
        _BACKEND = "fractions"
elif _BACKEND == "fractions":
    from fractions import Fraction as Rational
else:  # pragma: no cover
    raise ImportError(f"unknown QTSPECIALS_BACKEND {_BACKEND!r}")

from .errors import PoleAtOne

ZERO = Rational(0)
ONE = Rational(1)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def backend_name() -> str:
    """Name of the active rational backend ('gmpy2' or 'fractions')."""
    return _BACKEND


def as_rational(x) -> Rational:
    """Coerce an int, string literal or rational-like value to Rational."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, int):
        return Rational(x)
    if isinstance(x, str):
        return parse_rational(x)
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Rational(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Rational:
    """Parse a "p" or "p/q" literal; rejects q = 0 and anything non-integer."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise ZeroDivisionError(f"zero denominator in literal {text!r}")
        return Rational(int(p), int(q))
    return Rational(int(s))


def format_rational(x) -> str:
    """Render a rational as "p/q", always with an explicit denominator."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


class UniPoly:
    """Dense univariate polynomial in q with Rational coefficients.

    Invariant: the coefficient list carries no trailing zeros, so the last
    entry is the (nonzero) leading coefficient; the zero polynomial is ().
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((as_rational(c),))

    @classmethod
    def monomial(cls, c, k: int) -> "UniPoly":
        c = as_rational(c)
        if c == 0:
            return cls()
        return cls((ZERO,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Lowest power of q with a nonzero coefficient (0 for the zero poly)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by q^k; only valid when the valuation is at least k."""
        return UniPoly(self.coeffs[k:])

    def scale(self, c) -> "UniPoly":
        c = as_rational(c)
        if c == 0:
            return UniPoly()
        return UniPoly(tuple(a * c for a in self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    def __call__(self, x):
        """Evaluate at a rational point by Horner's rule."""
        x = as_rational(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def div_qminus1(self) -> "UniPoly":
        """Exact synthetic division by (q - 1); requires self(1) == 0."""
        if self.is_zero():
            return self
        out = [ZERO] * len(self.coeffs)
        carry = ZERO
        for i in range(len(self.coeffs) - 1, 0, -1):
            carry = carry + self.coeffs[i]
            out[i - 1] = carry
        if carry + self.coeffs[0] != 0:
            raise ValueError("polynomial does not vanish at q = 1")
        return UniPoly(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "UniPoly(0)"
        terms = [f"({c})*q^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return "UniPoly(" + " + ".join(terms) + ")"


_POLY_ONE = UniPoly((ONE,))


class RatFuncQ:
    """Quotient of two UniPoly values in the single formal variable q.

    The representation is normalized only lightly: any common power of q is
    stripped and the denominator is made monic.  No polynomial GCD is taken
    during arithmetic; cancellation of (q - 1) factors happens lazily in
    :func:`limit_at_one`, which is the only cancellation ever needed.
    ``==`` compares values (by cross-multiplication); ``hash`` is
    representation-based, which is fine for the internal caches because
    their keys are always built along identical code paths.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = _POLY_ONE):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero():
            num, den = UniPoly(), _POLY_ONE
        else:
            v = min(num.valuation(), den.valuation())
            if v:
                num = num.shift_down(v)
                den = den.shift_down(v)
            lc = den.coeffs[-1]
            if lc != 1:
                inv = ONE / lc
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, c) -> "RatFuncQ":
        return cls(UniPoly.const(as_rational(c)))

    @classmethod
    def generator(cls) -> "RatFuncQ":
        """The formal variable q itself."""
        return cls(UniPoly.monomial(ONE, 1))

    # -- helpers -----------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFuncQ):
            return x
        if isinstance(x, (int, Rational)):
            return RatFuncQ.from_rational(x)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _is_monomial(self) -> bool:
        return (
            sum(1 for c in self.num.coeffs if c != 0) == 1
            and sum(1 for c in self.den.coeffs if c != 0) == 1
        )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if self.den == o.den:
            return RatFuncQ(self.num + o.num, self.den)
        return RatFuncQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFuncQ(UniPoly())
        return RatFuncQ(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFuncQ(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return RatFuncQ.from_rational(ONE)
        base = self
        if k < 0:
            if base.is_zero():
                raise ZeroDivisionError("0 raised to a negative power")
            base = RatFuncQ(base.den, base.num)
            k = -k
        if base._is_monomial():
            nk = base.num.valuation()
            dk = base.den.valuation()
            c = base.num.coeffs[-1] ** k
            return RatFuncQ(UniPoly.monomial(c, nk * k), UniPoly.monomial(ONE, dk * k))
        out = RatFuncQ.from_rational(ONE)
        acc = base
        while k:
            if k & 1:
                out = out * acc
            k >>= 1
            if k:
                acc = acc * acc
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __call__(self, q0):
        """Evaluate at an exact rational point; the point must avoid poles."""
        q0 = as_rational(q0)
        d = self.den(q0)
        if d == 0:
            n = self.num(q0)
            if n == 0:
                # Remove the common root and retry.
                return self.cancel_at(q0)(q0)
            raise ZeroDivisionError(f"pole at q = {q0}")
        return self.num(q0) / d

    def cancel_at(self, q0) -> "RatFuncQ":
        """Divide out all common (q - q0) factors of num and den."""
        num, den = self.num, self.den
        while den(q0) == 0 and num(q0) == 0:
            num = _div_root(num, q0)
            den = _div_root(den, q0)
        return RatFuncQ(num, den)

    def __repr__(self) -> str:
        return f"RatFuncQ({self.num!r} / {self.den!r})"


def _div_root(p: UniPoly, root) -> UniPoly:
    """Exact synthetic division of p by (q - root); requires p(root) == 0."""
    root = as_rational(root)
    out = [ZERO] * len(p.coeffs)
    carry = ZERO
    for i in range(len(p.coeffs) - 1, 0, -1):
        carry = carry * root + p.coeffs[i]
        out[i - 1] = carry
    if carry * root + p.coeffs[0] != 0:
        raise ValueError(f"polynomial does not vanish at q = {root}")
    return UniPoly(out)


def limit_at_one(f):
    """Limit of a rational function of q as q -> 1, as an exact Rational.

    Repeatedly divides numerator and denominator by (q - 1) while both
    vanish at 1, then evaluates.  Raises PoleAtOne when the denominator
    still vanishes after full cancellation.
    """
    if not isinstance(f, RatFuncQ):
        return as_rational(f)
    num, den = f.num, f.den
    while True:
        d1 = den(ONE)
        if d1 != 0:
            return num(ONE) / d1
        if num(ONE) != 0:
            raise PoleAtOne("no finite limit at q = 1")
        num = num.div_qminus1()
        den = den.div_qminus1()
