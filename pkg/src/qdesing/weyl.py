"""The first q-Weyl algebra K(q)[x][D] and its rational-coefficient extension.

Operators are sums sum_i l_i(x) D**i acting on sequences through x = q**n and
(D f)(n) = f(n+1); multiplication follows the commutation rule
D f(x) = f(q x) D.  The zero operator has order -1 by convention.
"""

from __future__ import annotations

from typing import Iterable, List, Tuple

from .errors import PreconditionError
from .qpoly import POLYQ_ONE, PolyQ, polyq_gcd, polyq_lcm
from .ratfunc import RF_ONE, RatFuncQ
from .xpoly import POLYX_ONE, POLYX_ZERO, PolyX, RATX_ZERO, RatX


def sigma_pow(f: PolyX, k: int) -> PolyX:
    """k-fold q-shift: the coefficient of x**j is multiplied by q**(k*j)."""
    return f.sigma(k)


class QWeylOp:
    """q-difference operator with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[PolyX] = ()):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def from_polyx(f: PolyX) -> "QWeylOp":
        return QWeylOp((f,))

    @staticmethod
    def d_power(i: int, coeff: PolyX = POLYX_ONE) -> "QWeylOp":
        return QWeylOp((POLYX_ZERO,) * i + (coeff,))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> PolyX:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else POLYX_ZERO

    def lc(self) -> PolyX:
        return self.coeffs[-1] if self.coeffs else POLYX_ZERO

    def trailing(self) -> PolyX:
        return self.coeffs[0] if self.coeffs else POLYX_ZERO

    def trailing_index(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return -1

    def __eq__(self, other):
        if isinstance(other, QWeylOp):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __neg__(self):
        return QWeylOp(tuple(-c for c in self.coeffs))

    def __add__(self, other: "QWeylOp") -> "QWeylOp":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return QWeylOp(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "QWeylOp") -> "QWeylOp":
        """Noncommutative product; D**i f(x) = f(q**i x) D**i."""
        if self.is_zero() or other.is_zero():
            return QWeylOp()
        out = [POLYX_ZERO] * (self.order + other.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b.sigma(i)
        return QWeylOp(out)

    def scale(self, v: RatFuncQ) -> "QWeylOp":
        return QWeylOp(tuple(c.scale(v) for c in self.coeffs))

    def scale_polyx(self, p: PolyX) -> "QWeylOp":
        """Left multiplication by a polynomial in x."""
        return QWeylOp(tuple(p * c for c in self.coeffs))

    def coefficient_gcd(self) -> PolyX:
        from .xpoly import polyx_gcd

        g = POLYX_ZERO
        for c in self.coeffs:
            g = polyx_gcd(g, c)
            if g.is_one():
                break
        return g

    def is_x_primitive(self) -> bool:
        """True when x does not divide the gcd of the coefficients."""
        if self.is_zero():
            return False
        return any(not c.is_zero() and c.x_valuation() == 0 for c in self.coeffs)

    def apply_sigma(self, k: int) -> "QWeylOp":
        return QWeylOp(tuple(c.sigma(k) for c in self.coeffs))

    def __repr__(self):
        return "QWeylOp(order=%d)" % self.order

    def __str__(self):
        from .render import render_operator

        return render_operator(self)


OP_ZERO = QWeylOp()
OP_ONE = QWeylOp((POLYX_ONE,))
OP_D = QWeylOp((POLYX_ZERO, POLYX_ONE))


class RatOp:
    """Operator with K(q, x) coefficients, kept as num / den (left-cleared).

    den is a polynomial in x; the operator is (1/den) * num, i.e. coefficient
    i equals num.coeff(i) / den.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QWeylOp, den: PolyX = POLYX_ONE, _canonical=False):
        if den.is_zero():
            raise ZeroDivisionError("rational operator with zero denominator")
        if not _canonical and not num.is_zero():
            from .xpoly import polyx_gcd

            g = den
            for c in num.coeffs:
                g = polyx_gcd(g, c)
                if g.is_one():
                    break
            if not g.is_one():
                num = QWeylOp(tuple(c.divexact(g) for c in num.coeffs))
                den = den.divexact(g)
            lc = den.lc()
            if not lc.is_one():
                inv = lc.inverse()
                num = num.scale(inv)
                den = den.scale(inv)
        elif num.is_zero():
            den = POLYX_ONE
        self.num = num
        self.den = den

    @staticmethod
    def from_op(op: QWeylOp) -> "RatOp":
        return RatOp(op, POLYX_ONE, _canonical=True)

    @staticmethod
    def from_ratx_coeffs(coeffs: List[RatX]) -> "RatOp":
        den = POLYX_ONE
        for c in coeffs:
            if not c.is_zero():
                den = den.divexact(polyx_gcd_helper(den, c.den)) * c.den
        num = []
        for c in coeffs:
            num.append(c.num * den.divexact(c.den))
        return RatOp(QWeylOp(num), den)

    @property
    def order(self) -> int:
        return self.num.order

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def to_op(self) -> QWeylOp:
        if not self.den.is_one():
            raise PreconditionError("operator has a nontrivial denominator")
        return self.num

    def ratx_coeff(self, i: int) -> RatX:
        return RatX(self.num.coeff(i), self.den)

    def ratx_coeffs(self) -> List[RatX]:
        return [self.ratx_coeff(i) for i in range(self.order + 1)]

    def __eq__(self, other):
        if isinstance(other, RatOp):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __neg__(self):
        return RatOp(-self.num, self.den, _canonical=True)

    def __add__(self, other: "RatOp") -> "RatOp":
        if self.den == other.den:
            return RatOp(self.num + other.num, self.den)
        return RatOp(
            self.num.scale_polyx(other.den) + other.num.scale_polyx(self.den),
            self.den * other.den,
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RatOp") -> "RatOp":
        """Product in K(q, x)[D] via coefficientwise rational arithmetic."""
        if self.is_zero() or other.is_zero():
            return RATOP_ZERO
        out = [RATX_ZERO] * (self.order + other.order + 1)
        for i in range(self.order + 1):
            a = self.ratx_coeff(i)
            if a.is_zero():
                continue
            for j in range(other.order + 1):
                b = other.ratx_coeff(j)
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b.sigma(i)
        return RatOp.from_ratx_coeffs(out)

    def __repr__(self):
        return "RatOp(order=%d)" % self.order


def polyx_gcd_helper(a: PolyX, b: PolyX) -> PolyX:
    from .xpoly import polyx_gcd

    return polyx_gcd(a, b)


RATOP_ZERO = RatOp(OP_ZERO, POLYX_ONE, _canonical=True)


def op_mul(a, b):
    """Product of two operators (QWeylOp or RatOp); result type follows inputs."""
    if isinstance(a, QWeylOp) and isinstance(b, QWeylOp):
        return a * b
    ra = a if isinstance(a, RatOp) else RatOp.from_op(a)
    rb = b if isinstance(b, RatOp) else RatOp.from_op(b)
    return ra * rb


def right_divide(t, p: QWeylOp) -> Tuple[RatOp, RatOp]:
    """Right division: t = Q * p + R with ord(R) < ord(p); Q, R unique."""
    if p.is_zero():
        raise PreconditionError("right division by the zero operator")
    rt = t if isinstance(t, RatOp) else RatOp.from_op(t)
    rem: List[RatX] = rt.ratx_coeffs()
    r = p.order
    lp = p.lc()
    quo: List[RatX] = [RATX_ZERO] * max(0, len(rem) - r)
    for i in range(len(rem) - 1, r - 1, -1):
        ci = rem[i]
        if ci.is_zero():
            continue
        d = i - r
        c = ci / RatX.from_poly(lp.sigma(d))
        quo[d] = c
        for j in range(r + 1):
            pj = p.coeff(j)
            if pj.is_zero():
                continue
            rem[d + j] = rem[d + j] - c * RatX.from_poly(pj.sigma(d))
    while rem and rem[-1].is_zero():
        rem.pop()
    q_op = RatOp.from_ratx_coeffs(quo) if quo else RATOP_ZERO
    r_op = RatOp.from_ratx_coeffs(rem) if rem else RATOP_ZERO
    return q_op, r_op


def divides_right(t, p: QWeylOp) -> bool:
    """True when p divides t on the right with zero remainder."""
    _, r = right_divide(t, p)
    return r.is_zero()


def normalize_trailing(p: QWeylOp) -> QWeylOp:
    """Shift away a zero trailing block: D**-t applied to the operator.

    Coefficient l_{t+i} moves down to slot i as sigma**(-t)(l_{t+i}).
    """
    if p.is_zero():
        raise PreconditionError("cannot normalize the zero operator")
    t = p.trailing_index()
    if t == 0:
        return p
    return QWeylOp(tuple(c.sigma(-t) for c in p.coeffs[t:]))


def primitive_normalize(p: QWeylOp) -> QWeylOp:
    """Canonical unit-free representative.

    Clears all q-denominators, removes the joint content in Q[q] and the
    rational content, and fixes the sign so the leading coefficient's
    (x-leading, then q-leading) entry is positive.
    """
    if p.is_zero():
        return p
    den = POLYQ_ONE
    for c in p.coeffs:
        den = polyq_lcm(den, c.common_denominator())
    numtab: List[List[PolyQ]] = []
    content = PolyQ()
    for c in p.coeffs:
        row = [v.num * den.divexact(v.den) for v in c.c]
        numtab.append(row)
        for num in row:
            if not num.is_zero():
                content = polyq_gcd(content, num)
    if content.is_zero() or content.is_one():
        pass
    else:
        numtab = [[poly.divexact(content) for poly in row] for row in numtab]
    # rational content: make coefficients integral with overall gcd 1
    import math

    num_gcd, den_lcm = 0, 1
    for row in numtab:
        for poly in row:
            for v in poly.c:
                num_gcd = math.gcd(num_gcd, int(v.numerator))
                d = int(v.denominator)
                den_lcm = den_lcm * d // math.gcd(den_lcm, d)
    if num_gcd not in (0, 1) or den_lcm != 1:
        from .rationals import Rational

        k = Rational(den_lcm, num_gcd or 1)
        numtab = [[poly.scale(k) for poly in row] for row in numtab]
    op = QWeylOp([PolyX.from_qpoly_coeffs(row) for row in numtab])
    # sign: x-leading then q-leading coefficient of the leading PolyX positive
    lead = op.lc().lc()  # RatFuncQ, polynomial by construction
    if lead.num.lc() < 0:
        op = -op
    return op


def mirror(p: QWeylOp) -> QWeylOp:
    """Swap the roles of leading and trailing coefficients.

    Writes P = (sum_j sigma**(-r)(l_{r-j}) theta**j) D**r with theta = D**-1,
    then reads the theta-expansion in a q-Weyl algebra with parameter 1/q.
    Applying mirror twice gives back exactly the original operator, and
    desingularizing the mirror's leading side desingularizes the original
    trailing side.
    """
    if p.is_zero():
        raise PreconditionError("mirror of the zero operator")
    if p.trailing().is_zero():
        raise PreconditionError("mirror requires a nonzero trailing coefficient")
    r = p.order
    out = []
    for j in range(r + 1):
        c = p.coeff(r - j).sigma(-r).subst_qinv()
        out.append(c)
    return QWeylOp(out)
