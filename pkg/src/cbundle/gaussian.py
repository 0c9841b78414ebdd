"""Exact Gaussian rationals ``a + b i`` with ``a, b`` in Q.

Every hypothesis checked by the workbench (half-plane membership, strict
argument order, non-vanishing of ``b.m``) is decided with these numbers, never
with floats.  The textual syntax is ``"a/b+c/di"``::

    >>> GaussianRational.parse("3/2+1/2i")
    GaussianRational('3/2+1/2i')
    >>> str(GaussianRational.parse("-i") * GaussianRational.parse("i"))
    '1'
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import DomainError

_RAT = r"\d+(?:/\d+)?"
_PURE_REAL = re.compile(rf"^(?P<re>[+-]?{_RAT})$")
_PURE_IMAG = re.compile(rf"^(?P<sign>[+-]?)(?P<im>{_RAT})?i$")
_MIXED = re.compile(rf"^(?P<re>[+-]?{_RAT})(?P<sign>[+-])(?P<im>{_RAT})?i$")
_DECIMAL = re.compile(r"\d*\.\d*|\d[eE]")


class GaussianRational:
    """Immutable element of Q(i)."""

    __slots__ = ("_re", "_im")

    def __init__(self, re_part=0, im_part=0):
        if isinstance(re_part, float) or isinstance(im_part, float):
            raise DomainError("floats are not exact; pass Fraction or int")
        object.__setattr__(self, "_re", Fraction(re_part))
        object.__setattr__(self, "_im", Fraction(im_part))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- construction -------------------------------------------------
    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            return cls(value, 0)
        if isinstance(value, str):
            return cls.parse(value)
        raise DomainError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Parse ``"a/b+c/di"`` style literals; decimals are rejected."""
        if isinstance(text, int) and not isinstance(text, bool):
            return cls(text)
        if not isinstance(text, str):
            raise DomainError(f"expected a string literal, got {text!r}")
        s = text.replace(" ", "")
        if _DECIMAL.search(s):
            raise DomainError(
                f"{text!r}: decimal literals are not exact; write e.g. '3/2' instead of '1.5'"
            )
        m = _PURE_REAL.match(s)
        if m:
            return cls(Fraction(m["re"]), 0)
        m = _PURE_IMAG.match(s)
        if m:
            im = Fraction(m["im"]) if m["im"] else Fraction(1)
            return cls(0, -im if m["sign"] == "-" else im)
        m = _MIXED.match(s)
        if m:
            im = Fraction(m["im"]) if m["im"] else Fraction(1)
            return cls(Fraction(m["re"]), -im if m["sign"] == "-" else im)
        raise DomainError(f"{text!r} is not a Gaussian rational literal (expected 'a/b+c/di')")

    # -- accessors ----------------------------------------------------
    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm2(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def in_upper_half_plane(self) -> bool:
        """True when arg lies in [0, pi): im > 0, or im == 0 and re > 0."""
        return self._im > 0 or (self._im == 0 and self._re > 0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except DomainError:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except DomainError:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except DomainError:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except DomainError:
            return NotImplemented
        n = o.norm2()
        if n == 0:
            raise ZeroDivisionError("division by the Gaussian rational 0")
        num = self * o.conjugate()
        return GaussianRational(num._re / n, num._im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except DomainError:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    # -- text ---------------------------------------------------------
    def __str__(self):
        re_s = str(self._re)
        if self._im == 0:
            return re_s
        mag = abs(self._im)
        im_s = "i" if mag == 1 else f"{mag}i"
        if self._re == 0:
            return im_s if self._im > 0 else "-" + im_s
        return f"{re_s}{'+' if self._im > 0 else '-'}{im_s}"

    def __repr__(self):
        return f"GaussianRational('{self}')"


def gvec(values) -> tuple[GaussianRational, ...]:
    """Coerce an iterable of literals/ints into a tuple of Gaussian rationals."""
    return tuple(GaussianRational.coerce(v) for v in values)


I = GaussianRational(0, 1)
ONE = GaussianRational(1, 0)
ZERO = GaussianRational(0, 0)
