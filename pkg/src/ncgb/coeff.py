"""Exact coefficients in Q(p1, ..., pk).

A :class:`Scalar` is a reduced fraction of multivariate polynomials with
rational coefficients in the parameters of a :class:`ParamRing`.  The
polynomial arithmetic itself is delegated to FLINT (``fmpq_mpoly``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import flint

__all__ = ["ParamRing", "Scalar", "ScalarDivisionError", "param_ring"]


class ScalarDivisionError(ZeroDivisionError):
    """Division by the zero scalar."""


class ParamRing:
    """The field Q(params).  Use :func:`param_ring` to get a shared instance."""

    def __init__(self, params: tuple[str, ...] = ()):
        if len(set(params)) != len(params):
            raise ValueError(f"duplicate parameter names in {params}")
        self.params = tuple(params)
        self.ctx = flint.fmpq_mpoly_ctx.get(self.params, "lex")
        self._one_poly = self.ctx.from_dict({(0,) * len(self.params): 1})
        self.zero = Scalar(self.ctx.from_dict({}), self._one_poly, _normal=True)
        self.one = Scalar(self._one_poly, self._one_poly, _normal=True)

    def __repr__(self):
        return f"ParamRing({self.params!r})"

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction, fmpq, string or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.ring is not self:
                raise ValueError("scalar belongs to a different parameter ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            value = flint.fmpq(value.numerator, value.denominator)
        if isinstance(value, (int, flint.fmpz, flint.fmpq)):
            return Scalar(self._const(value), self._one_poly, _normal=True)
        raise TypeError(f"cannot coerce {type(value).__name__} to a scalar")

    def _const(self, c):
        if not c:
            return self.ctx.from_dict({})
        return self.ctx.from_dict({(0,) * len(self.params): c})

    def gen(self, name: str) -> Scalar:
        i = self.params.index(name)
        return Scalar(self.ctx.gens()[i], self._one_poly, _normal=True)

    def parse(self, text: str) -> Scalar:
        from .parsing import parse_scalar

        return parse_scalar(text, self)


def param_ring(params=()) -> ParamRing:
    """Shared field instance for a parameter list."""
    return _param_ring(tuple(params))


@lru_cache(maxsize=None)
def _param_ring(params: tuple[str, ...]) -> ParamRing:
    return ParamRing(params)


def _rational_content(p) -> flint.fmpq:
    """Positive rational c such that p / c has coprime integer coefficients."""
    num = 0
    den = 1
    for c in p.coeffs():
        c = flint.fmpq(c)
        num = gcd(num, int(c.p))
        den = lcm(den, int(c.q))
    return flint.fmpq(num, den)


class Scalar:
    """Immutable element of Q(params) kept as a normalized fraction num/den.

    Normal form: gcd(num, den) = 1 and den has coprime integer coefficients
    with positive leading coefficient (lex order on the parameters).
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den, _normal: bool = False):
        if not _normal:
            if den.is_zero():
                raise ScalarDivisionError("zero denominator")
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def ring(self) -> ParamRing:
        return param_ring(tuple(self.num.context().names()))

    # -- predicates -------------------------------------------------------
    def __bool__(self):
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        return hash((tuple(self.num.to_dict().items()), tuple(self.den.to_dict().items())))

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring(other)
        return None

    def __neg__(self):
        return Scalar(-self.num, self.den, _normal=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num + other.num, self.den, _normal=True)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num - other.num, self.den, _normal=True)
        if self.den == other.den:
            return Scalar(self.num - other.num, self.den)
        return Scalar(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, self.den, _normal=True)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ScalarDivisionError("division by zero scalar")
        if other.den.is_one() and other.num.is_constant():
            c = other.num.leading_coefficient()
            return Scalar(self.num / c, self.den, _normal=True)
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def inverse(self) -> Scalar:
        return self.ring.one / self

    # -- conversions ------------------------------------------------------
    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        c = flint.fmpq(self.num.leading_coefficient()) if self else flint.fmpq(0)
        return Fraction(int(c.p), int(c.q))

    def substitute(self, values: dict[str, Fraction | int]) -> Fraction:
        """Specialize every parameter to a rational value."""
        args = [flint.fmpq(Fraction(values[p]).numerator, Fraction(values[p]).denominator)
                for p in self.ring.params]
        n = self.num(*args) if args else self.num.leading_coefficient() if self else 0
        d = self.den(*args) if args else 1
        n, d = flint.fmpq(n), flint.fmpq(d)
        if not d:
            raise ScalarDivisionError(f"denominator of {self} vanishes at {values}")
        r = n / d
        return Fraction(int(r.p), int(r.q))

    def needs_parens(self) -> bool:
        """True when the printed form is not a single signed atom."""
        if self.den.is_one():
            return len(self.num) > 1
        return False

    def __str__(self):
        if self.is_constant():
            return str(self.to_fraction())
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _normalize(num, den):
    if num.is_zero():
        return num, den.context().from_dict({(0,) * den.context().nvars(): 1})
    if den.is_constant():
        c = den.leading_coefficient()
        return num / c, den / c
    g = num.gcd(den)
    if not g.is_one():
        num = num / g
        den = den / g
    c = _rational_content(den)
    if den.leading_coefficient() < 0:
        c = -c
    if c != 1:
        num = num / c
        den = den / c
    return num, den
