"""Dense univariate polynomials over an exact coefficient domain.

Coefficients are stored lowest degree first in a trimmed tuple; the zero
polynomial is the empty tuple.  The domain is duck-typed: Rat, RatFun and
TruncSeries all work, as do plain ints (which the domains absorb on contact).
``divrem`` divides by the leading coefficient, so over the truncated-series
ring it raises whenever that coefficient is not a unit -- exactly the
genericity failures the drivers catch and retry.
"""

from __future__ import annotations


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def y_power(cls, k: int, coeff=1) -> "UniPoly":
        return cls((0,) * k + (coeff,))

    # -- queries ---------------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self):
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if len(self.coeffs) != len(other.coeffs):
                return False
            return all(a == b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        la, lb = len(self.coeffs), len(other.coeffs)
        out = [0] * max(la, lb)
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return UniPoly(out)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return UniPoly(out)

    def scale(self, c) -> "UniPoly":
        if not c:
            return UniPoly(())
        return UniPoly(tuple(c * x for x in self.coeffs))

    def shift(self, k: int) -> "UniPoly":
        """Multiply by Y^k."""
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return UniPoly(tuple(c / lc for c in self.coeffs))

    def derivative(self) -> "UniPoly":
        return UniPoly(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def eval(self, x):
        """Horner evaluation; x in the coefficient domain (or coercible)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly(tuple(fn(c) for c in self.coeffs))


def upoly_divrem(a: UniPoly, b: UniPoly):
    """Quotient and remainder with deg(rem) < deg(b).

    Divides by lc(b); over a non-field coefficient domain this raises when
    that coefficient is not invertible.
    """
    if b.is_zero():
        raise ZeroDivisionError("zero divisor")
    da, db = a.degree(), b.degree()
    if da < db:
        return UniPoly(()), a
    rem = list(a.coeffs)
    lb = b.lc()
    monic = lb == 1
    bc = b.coeffs
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        top = rem[db + k]
        if not top:
            continue
        f = top if monic else top / lb
        q[k] = f
        for i in range(db):
            rem[i + k] = rem[i + k] - f * bc[i]
        rem[db + k] = 0
    return UniPoly(q), UniPoly(rem[:db])


def upoly_mod(a: UniPoly, b: UniPoly) -> UniPoly:
    return upoly_divrem(a, b)[1]


def upoly_mulmod(a: UniPoly, b: UniPoly, q: UniPoly) -> UniPoly:
    return upoly_mod(a * b, q)


def upoly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd over a coefficient field; gcd(a, 0) = monic a."""
    if a.is_zero() and b.is_zero():
        raise ZeroDivisionError("gcd(0, 0) undefined")
    while not b.is_zero():
        a, b = b, upoly_mod(a, b)
    return a.monic()


def upoly_ext_inv(a: UniPoly, q: UniPoly) -> UniPoly:
    """Inverse of a modulo q via the extended Euclidean algorithm.

    Works over any domain whose division raises on non-units; raises
    ZeroDivisionError when a is not invertible mod q (non-unit gcd).
    """
    r0, r1 = q, upoly_mod(a, q)
    t0, t1 = UniPoly(()), UniPoly.const(1)
    while not r1.is_zero():
        quo, rem = upoly_divrem(r0, r1)
        r0, r1 = r1, rem
        t0, t1 = t1, t0 - quo * t1
    if r0.degree() != 0:
        raise ZeroDivisionError("not invertible modulo q")
    inv_lead = r0.coeffs[0]
    return upoly_mod(t0.map_coeffs(lambda c: c / inv_lead), q)


def upoly_is_squarefree(q: UniPoly) -> bool:
    if q.degree() <= 0:
        return True
    return upoly_gcd(q, q.derivative()).degree() == 0
