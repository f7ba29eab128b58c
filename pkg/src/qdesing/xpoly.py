"""Polynomials in x over the field K(q), plus fractions and resultants.

x is the operator variable (read x = q**n when acting on sequences).  The
q-shift automorphism sigma maps x to q*x and fixes K(q).
"""

from __future__ import annotations

from typing import Iterable

from .qpoly import POLYQ_ONE, PolyQ, polyq_gcd, polyq_lcm
from .ratfunc import RF_ONE, RF_ZERO, RatFuncQ


class PolyX:
    """Dense polynomial in x with RatFuncQ coefficients, lowest power first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[RatFuncQ] = ()):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.c = tuple(cs)

    @staticmethod
    def const(v: RatFuncQ) -> "PolyX":
        return PolyX((v,))

    @staticmethod
    def monomial(e: int, coeff: RatFuncQ = RF_ONE) -> "PolyX":
        return PolyX((RF_ZERO,) * e + (coeff,))

    @staticmethod
    def from_qpoly_coeffs(coeffs: Iterable[PolyQ]) -> "PolyX":
        return PolyX(tuple(RatFuncQ.from_poly(p) for p in coeffs))

    # -- structure -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0].is_one()

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def lc(self) -> RatFuncQ:
        return self.c[-1] if self.c else RF_ZERO

    def constant(self) -> RatFuncQ:
        return self.c[0] if self.c else RF_ZERO

    def __getitem__(self, j: int) -> RatFuncQ:
        return self.c[j] if 0 <= j < len(self.c) else RF_ZERO

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, PolyX):
            return self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return PolyX(tuple(-v for v in self.c))

    def __add__(self, other: "PolyX") -> "PolyX":
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return PolyX(out)

    def __sub__(self, other: "PolyX") -> "PolyX":
        return self + (-other)

    def __mul__(self, other) -> "PolyX":
        if isinstance(other, RatFuncQ):
            return self.scale(other)
        a, b = self.c, other.c
        if not a or not b:
            return POLYX_ZERO
        out = [RF_ZERO] * (len(a) + len(b) - 1)
        for i, va in enumerate(a):
            if va.is_zero():
                continue
            for j, vb in enumerate(b):
                if not vb.is_zero():
                    out[i + j] = out[i + j] + va * vb
        return PolyX(out)

    def scale(self, k: RatFuncQ) -> "PolyX":
        if k.is_zero():
            return POLYX_ZERO
        if k.is_one():
            return self
        return PolyX(tuple(v * k for v in self.c))

    def __pow__(self, e: int) -> "PolyX":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = POLYX_ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other: "PolyX"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        db, lb = other.degree, other.lc()
        if len(rem) - 1 < db:
            return POLYX_ZERO, self
        quo = [RF_ZERO] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            if rem[i].is_zero():
                continue
            f = rem[i] / lb
            quo[i - db] = f
            for j, vb in enumerate(other.c):
                if not vb.is_zero():
                    rem[i - db + j] = rem[i - db + j] - f * vb
        return PolyX(quo), PolyX(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divexact(self, other: "PolyX") -> "PolyX":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def monic(self) -> "PolyX":
        if self.is_zero() or self.lc().is_one():
            return self
        inv = self.lc().inverse()
        return PolyX(tuple(v * inv for v in self.c))

    # -- q-shift and substitutions ------------------------------------------

    def sigma(self, k: int = 1) -> "PolyX":
        """Apply the q-shift x -> q**k x: coefficient of x**j picks up q**(k*j)."""
        if k == 0 or self.is_zero():
            return self
        return PolyX(tuple(v.scale_qpow(k * j) for j, v in enumerate(self.c)))

    def subst_qinv(self) -> "PolyX":
        return PolyX(tuple(v.subst_qinv() for v in self.c))

    def eval_x(self, point: RatFuncQ) -> RatFuncQ:
        acc = RF_ZERO
        for v in reversed(self.c):
            acc = acc * point + v
        return acc

    def shift_x(self, e: int) -> "PolyX":
        if e == 0 or self.is_zero():
            return self
        return PolyX((RF_ZERO,) * e + self.c)

    def x_valuation(self) -> int:
        """Largest e with x**e dividing self (0 for the zero polynomial)."""
        for j, v in enumerate(self.c):
            if not v.is_zero():
                return j
        return 0

    # -- denominators ---------------------------------------------------------

    def common_denominator(self) -> PolyQ:
        d = POLYQ_ONE
        for v in self.c:
            d = polyq_lcm(d, v.den)
        return d

    def clear_denominators(self):
        """Return (coeffs in Q[q], d in Q[q]) with d * self having those coeffs."""
        d = self.common_denominator()
        out = []
        for v in self.c:
            num = v.num * d.divexact(v.den)
            out.append(num)
        return out, d

    def __repr__(self):
        return "PolyX(%s)" % (", ".join(str(v) for v in self.c) or "0")

    def __str__(self):
        from .render import render_polyx

        return render_polyx(self)


POLYX_ZERO = PolyX()
POLYX_ONE = PolyX((RF_ONE,))
POLYX_X = PolyX((RF_ZERO, RF_ONE))


# -- gcd over Q[q][x] (primitive PRS on PolyQ coefficient lists) -------------


def _trim_x(v: list) -> list:
    while v and v[-1].is_zero():
        v.pop()
    return v


def _content_x(v: list) -> PolyQ:
    g = PolyQ()
    for p in v:
        g = polyq_gcd(g, p)
        if g.is_one():
            break
    return g


def _primitive_x(v: list) -> list:
    g = _content_x(v)
    if g.is_one() or g.is_zero():
        return v
    return [p.divexact(g) for p in v]


def _prem_x(a: list, b: list) -> list:
    """Pseudo-remainder of PolyQ coefficient lists, up to content."""
    r = _trim_x(list(a))
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db:
        lr = r[-1]
        g = polyq_gcd(lr, lb)
        mult, fac = lb.divexact(g), lr.divexact(g)
        r = [p * mult for p in r]
        off = len(r) - 1 - db
        for j in range(db + 1):
            r[off + j] = r[off + j] - fac * b[j]
        _trim_x(r)
    return r


def _prs_gcd_x(a: list, b: list) -> list:
    """Primitive gcd in Q[q][x] of primitive PolyQ coefficient lists."""
    a, b = _primitive_x(_trim_x(list(a))), _primitive_x(_trim_x(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive_x(_prem_x(a, b))
    if a and a[-1].lc() < 0:
        a = [-p for p in a]
    return a


def polyx_gcd(f: PolyX, g: PolyX) -> PolyX:
    """Monic gcd over K(q)[x]; gcd(0, 0) = 0."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    fa, _ = f.clear_denominators()
    ga, _ = g.clear_denominators()
    core = _prs_gcd_x(fa, ga)
    return PolyX.from_qpoly_coeffs(core).monic()


def resultant_x(f: PolyX, g: PolyX) -> RatFuncQ:
    """Resultant with respect to x (Sylvester determinant, f-rows first)."""
    if f.is_zero() or g.is_zero():
        return RF_ZERO
    acc = RF_ONE
    while g.degree > 0:
        r = f % g
        if r.is_zero():
            return RF_ZERO
        m, n, d = f.degree, g.degree, r.degree
        if (m * n) % 2 == 1:
            acc = -acc
        acc = acc * g.lc() ** (m - d)
        f, g = g, r
    return acc * g.constant() ** f.degree


class RatX:
    """Rational function in x over K(q), canonical (monic reduced denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyX, den: PolyX = POLYX_ONE, _canonical=False):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            if num.is_zero():
                den = POLYX_ONE
            else:
                g = polyx_gcd(num, den)
                if not g.is_one():
                    num = num.divexact(g)
                    den = den.divexact(g)
                lb = den.lc()
                if not lb.is_one():
                    inv = lb.inverse()
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den

    @staticmethod
    def from_poly(p: PolyX) -> "RatX":
        return RatX(p, POLYX_ONE, _canonical=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatX):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatX(-self.num, self.den, _canonical=True)

    def __add__(self, other: "RatX") -> "RatX":
        if self.den == other.den:
            return RatX(self.num + other.num, self.den)
        return RatX(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RatX") -> "RatX":
        if self.is_zero() or other.is_zero():
            return RATX_ZERO
        return RatX(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatX") -> "RatX":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatX(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatX":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatX(self.den, self.num)

    def sigma(self, k: int = 1) -> "RatX":
        return RatX(self.num.sigma(k), self.den.sigma(k))

    def poly_part(self) -> PolyX:
        return self.num // self.den

    def proper_part(self) -> "RatX":
        """The fractional part: self minus its polynomial part."""
        q, r = divmod(self.num, self.den)
        if q.is_zero():
            return self
        if r.is_zero():
            return RATX_ZERO
        return RatX(r, self.den, _canonical=True)

    def __repr__(self):
        return "RatX(%r, %r)" % (self.num, self.den)


RATX_ZERO = RatX(POLYX_ZERO, POLYX_ONE, _canonical=True)
RATX_ONE = RatX(POLYX_ONE, POLYX_ONE, _canonical=True)
