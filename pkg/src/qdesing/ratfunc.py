"""The coefficient field K(q): reduced fractions of rational polynomials in q.

Every value is kept canonical (denominator monic, gcd(num, den) = 1), so
equality of field elements is equality of representations.
"""

from __future__ import annotations

from .qpoly import POLYQ_ONE, POLYQ_ZERO, PolyQ, polyq_gcd
from .rationals import rat


class RatFuncQ:
    __slots__ = ("num", "den")

    def __init__(self, num: PolyQ, den: PolyQ = POLYQ_ONE, _canonical=False):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _canonical:
            if num.is_zero():
                den = POLYQ_ONE
            else:
                g = polyq_gcd(num, den)
                if not g.is_one():
                    num = num.divexact(g)
                    den = den.divexact(g)
                lb = den.lc()
                if lb != 1:
                    num = num.scale(1 / lb)
                    den = den.monic()
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @staticmethod
    def const(v) -> "RatFuncQ":
        return RatFuncQ(PolyQ.const(rat(v)), POLYQ_ONE, _canonical=True)

    @staticmethod
    def from_poly(p: PolyQ) -> "RatFuncQ":
        return RatFuncQ(p, POLYQ_ONE, _canonical=True)

    @staticmethod
    def q_power(e: int) -> "RatFuncQ":
        """q**e for any integer e, negative exponents allowed."""
        if e >= 0:
            return RatFuncQ(PolyQ.monomial(e), POLYQ_ONE, _canonical=True)
        return RatFuncQ(POLYQ_ONE, PolyQ.monomial(-e), _canonical=True)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_q_unit(self) -> bool:
        """True when the value is (rational) * q**k for some integer k."""
        return self.num.is_monomial() and self.den.is_monomial()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFuncQ):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num.c, self.den.c))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return RatFuncQ(-self.num, self.den, _canonical=True)

    def __add__(self, other: "RatFuncQ") -> "RatFuncQ":
        if self.den.is_one() and other.den.is_one():
            return RatFuncQ(self.num + other.num, POLYQ_ONE, _canonical=True)
        if self.den == other.den:
            return RatFuncQ(self.num + other.num, self.den)
        return RatFuncQ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFuncQ") -> "RatFuncQ":
        return self + (-other)

    def __mul__(self, other: "RatFuncQ") -> "RatFuncQ":
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFuncQ(self.num * other.num, POLYQ_ONE, _canonical=True)
        # cross-reduce; the product of reduced parts is already canonical
        a, d2 = _reduce(self.num, other.den)
        b, d1 = _reduce(other.num, self.den)
        return RatFuncQ(a * b, d1 * d2, _canonical=True)

    def __truediv__(self, other: "RatFuncQ") -> "RatFuncQ":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return self * RatFuncQ(other.den, other.num)

    def inverse(self) -> "RatFuncQ":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFuncQ(self.den, self.num)

    def scale_qpow(self, e: int) -> "RatFuncQ":
        """Multiply by q**e (exact monomial scaling)."""
        if e == 0 or self.is_zero():
            return self
        if e > 0:
            return RatFuncQ(self.num.shift(e), self.den)
        return RatFuncQ(self.num, self.den.shift(-e))

    def __pow__(self, e: int) -> "RatFuncQ":
        if e == 0:
            return RF_ONE
        if e < 0:
            return self.inverse() ** (-e)
        return RatFuncQ(self.num**e, self.den**e, _canonical=True)

    # -- substitutions ----------------------------------------------------

    def subst_qinv(self) -> "RatFuncQ":
        """The image under q -> 1/q."""
        dn, dd = self.num.degree, self.den.degree
        if dn < 0:
            return RF_ZERO
        num, den = self.num.reverse(), self.den.reverse()
        # num/den picked up q^-dn / q^-dd; restore the difference
        if dd >= dn:
            num = num.shift(dd - dn)
        else:
            den = den.shift(dn - dd)
        return RatFuncQ(num, den)

    def eval(self, point):
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.eval(point) / d

    def eval_mod(self, point: int, p: int) -> int:
        d = self.den.eval_mod(point, p)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point (mod p)")
        return self.num.eval_mod(point, p) * pow(d, -1, p) % p

    def is_laurent(self) -> bool:
        """True when the denominator is a power of q (up to a rational unit)."""
        return self.den.is_monomial()

    # -- display ----------------------------------------------------------

    def __repr__(self):
        return "RatFuncQ(%r, %r)" % (self.num, self.den)

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if ("+" in ns or "-" in ns.lstrip("-") or "*" in ns) and not ns.startswith("("):
            ns = "(%s)" % ns
        if "+" in ds or "-" in ds.lstrip("-") or "*" in ds:
            ds = "(%s)" % ds
        return "%s/%s" % (ns, ds)


def _reduce(a: PolyQ, b: PolyQ):
    g = polyq_gcd(a, b)
    if g.is_one():
        return a, b
    return a.divexact(g), b.divexact(g)


RF_ZERO = RatFuncQ(POLYQ_ZERO, POLYQ_ONE, _canonical=True)
RF_ONE = RatFuncQ(POLYQ_ONE, POLYQ_ONE, _canonical=True)
