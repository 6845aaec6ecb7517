"""Rational functions in the free variables, kept in canonical form.

Canonical form: numerator and denominator coprime; denominator with integer
coprime coefficients and positive leading coefficient in graded-lex order;
the numerator may carry rational content.  Equal fractions therefore have
identical representations, which is what the golden-file comparisons rely on.
"""

from __future__ import annotations

from .mpoly import SparsePoly, format_poly, mpoly_gcd
from .rat import Rat, rat


class ZeroDenominator(ZeroDivisionError):
    pass


def _normalize_content(num: SparsePoly, den: SparsePoly):
    """Absorb the denominator's rational content (and sign) into the numerator."""
    c, prim = den.int_clear()
    if c != 1:
        num = num / c
    return num, prim


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num: SparsePoly, den: SparsePoly | None = None):
        if den is None:
            den = SparsePoly.const(num.nvars, 1)
        if num.nvars != den.nvars:
            raise ValueError("ambient variable count mismatch")
        if not den:
            raise ZeroDenominator("zero denominator")
        if not num:
            self.num = num
            self.den = SparsePoly.const(num.nvars, 1)
            return
        g = mpoly_gcd(num, den)
        if not g.is_constant():
            num = num.exact_div(g)
            den = den.exact_div(g)
        self.num, self.den = _normalize_content(num, den)

    @classmethod
    def _canonical(cls, num: SparsePoly, den: SparsePoly) -> "RatFun":
        out = object.__new__(cls)
        out.num, out.den = num, den
        return out

    @classmethod
    def from_const(cls, nvars: int, c) -> "RatFun":
        return cls._canonical(SparsePoly.const(nvars, c), SparsePoly.const(nvars, 1))

    @classmethod
    def from_poly(cls, p: SparsePoly) -> "RatFun":
        return cls._canonical(p, SparsePoly.const(p.nvars, 1))

    @property
    def nvars(self) -> int:
        return self.num.nvars

    def is_poly(self) -> bool:
        return self.den.is_constant()

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Rat, SparsePoly)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFun({self.format()})"

    def _coerce(self, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        if isinstance(x, SparsePoly):
            return RatFun.from_poly(x)
        return RatFun.from_const(self.nvars, rat(x))

    # -- ring operations, canonical in and out --------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        g = mpoly_gcd(self.den, o.den) if self.den and o.den else None
        if g is not None and not g.is_constant():
            da = self.den.exact_div(g)
            db = o.den.exact_div(g)
            return RatFun(self.num * db + o.num * da, self.den * db)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._canonical(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if not self.num or not o.num:
            return RatFun.from_const(self.nvars, 0)
        a_num, a_den = self.num, self.den
        b_num, b_den = o.num, o.den
        g1 = mpoly_gcd(a_num, b_den)
        if not g1.is_constant():
            a_num = a_num.exact_div(g1)
            b_den = b_den.exact_div(g1)
        g2 = mpoly_gcd(b_num, a_den)
        if not g2.is_constant():
            b_num = b_num.exact_div(g2)
            a_den = a_den.exact_div(g2)
        num, den = _normalize_content(a_num * b_num, a_den * b_den)
        return RatFun._canonical(num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if not o.num:
            raise ZeroDivisionError("division by zero fraction")
        return RatFun(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            if not self.num:
                raise ZeroDivisionError("zero to a negative power")
            return RatFun(self.den, self.num) ** (-n)
        num, den = _normalize_content(self.num**n, self.den**n)
        return RatFun._canonical(num, den)

    def evaluate(self, point):
        d = self.den.eval_all(point)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval_all(point) / d

    def format(self, labels=None) -> str:
        if self.den.is_constant():
            return format_poly(self.num, labels)
        return f"({format_poly(self.num, labels)})/({format_poly(self.den, labels)})"


def ratfun_normalize(num: SparsePoly, den: SparsePoly) -> RatFun:
    """Canonical fraction num/den; raises ZeroDenominator when den = 0."""
    return RatFun(num, den)
