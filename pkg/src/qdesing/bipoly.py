"""Sparse polynomials in Q[q, x] (equivalently Q[q, q**n] with x = q**n)."""

from __future__ import annotations

import math
from typing import Dict, Iterable, Tuple

from .qpoly import POLYQ_ONE, PolyQ, polyq_gcd
from .ratfunc import RatFuncQ
from .rationals import RAT_ONE, rat
from .xpoly import PolyX, _prs_gcd_x

Exponent = Tuple[int, int]  # (power of q, power of x)


class BiPoly:
    """Element of Q[q, x] as a map (e_q, e_x) -> nonzero rational."""

    __slots__ = ("t",)

    def __init__(self, terms: Dict[Exponent, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, dict) else terms
        t = {}
        for (eq, ex), v in items:
            if eq < 0 or ex < 0:
                raise ValueError("negative exponent in BiPoly")
            v = rat(v)
            if v != 0:
                cur = t.get((eq, ex))
                if cur is None:
                    t[(eq, ex)] = v
                else:
                    s = cur + v
                    if s == 0:
                        del t[(eq, ex)]
                    else:
                        t[(eq, ex)] = s
        self.t = t

    # -- constructors -----------------------------------------------------

    @staticmethod
    def const(v) -> "BiPoly":
        v = rat(v)
        return BiPoly({(0, 0): v}) if v != 0 else BiPoly()

    @staticmethod
    def monomial(eq: int, ex: int, coeff=RAT_ONE) -> "BiPoly":
        return BiPoly({(eq, ex): rat(coeff)})

    @staticmethod
    def from_x_coeffs(coeffs: Iterable[PolyQ]) -> "BiPoly":
        t = {}
        for ex, p in enumerate(coeffs):
            for eq, v in enumerate(p.c):
                if v != 0:
                    t[(eq, ex)] = v
        return BiPoly(t)

    @staticmethod
    def from_polyx(f: PolyX) -> "BiPoly":
        """Exact conversion; every coefficient must be a polynomial in q."""
        for v in f.c:
            if not v.is_polynomial():
                raise ValueError("PolyX has a nontrivial q-denominator")
        return BiPoly.from_x_coeffs([v.num for v in f.c])

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.t

    def is_one(self) -> bool:
        return self.t == {(0, 0): RAT_ONE}

    def is_monomial(self) -> bool:
        return len(self.t) == 1

    def __bool__(self):
        return bool(self.t)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.t == other.t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.t.items()))

    def degree_x(self) -> int:
        return max((ex for _, ex in self.t), default=-1)

    def degree_q(self) -> int:
        return max((eq for eq, _ in self.t), default=-1)

    def x_valuation(self) -> int:
        return min((ex for _, ex in self.t), default=0)

    def q_valuation(self) -> int:
        return min((eq for eq, _ in self.t), default=0)

    def x_support(self):
        return sorted({ex for _, ex in self.t})

    def coeff_x(self, ex: int) -> PolyQ:
        """The coefficient of x**ex as a polynomial in q."""
        d = {}
        for (eq, e), v in self.t.items():
            if e == ex:
                d[eq] = v
        if not d:
            return PolyQ()
        out = [0] * (max(d) + 1)
        for eq, v in d.items():
            out[eq] = v
        return PolyQ(out)

    def x_coeffs(self) -> list:
        return [self.coeff_x(j) for j in range(self.degree_x() + 1)]

    def to_polyx(self) -> PolyX:
        return PolyX.from_qpoly_coeffs(self.x_coeffs())

    def lead_term(self) -> Tuple[Exponent, object]:
        """Leading term under lex order with x dominating q."""
        key = max(self.t, key=lambda e: (e[1], e[0]))
        return key, self.t[key]

    # -- arithmetic -----------------------------------------------------------

    def __neg__(self):
        out = BiPoly()
        out.t = {k: -v for k, v in self.t.items()}
        return out

    def __add__(self, other: "BiPoly") -> "BiPoly":
        t = dict(self.t)
        for k, v in other.t.items():
            s = t.get(k)
            if s is None:
                t[k] = v
            else:
                s = s + v
                if s == 0:
                    del t[k]
                else:
                    t[k] = s
        out = BiPoly()
        out.t = t
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scale(other)
        t = {}
        for (q1, x1), v1 in self.t.items():
            for (q2, x2), v2 in other.t.items():
                k = (q1 + q2, x1 + x2)
                s = t.get(k)
                if s is None:
                    t[k] = v1 * v2
                else:
                    s = s + v1 * v2
                    if s == 0:
                        del t[k]
                    else:
                        t[k] = s
        out = BiPoly()
        out.t = t
        return out

    def scale(self, v) -> "BiPoly":
        v = rat(v)
        if v == 0:
            return BiPoly()
        out = BiPoly()
        out.t = {k: c * v for k, c in self.t.items()}
        return out

    def mul_monomial(self, eq: int, ex: int) -> "BiPoly":
        out = BiPoly()
        out.t = {(a + eq, b + ex): v for (a, b), v in self.t.items()}
        return out

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divexact(self, other: "BiPoly") -> "BiPoly":
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return BiPoly()
        if other.is_monomial():
            ((eq, ex), v) = next(iter(other.t.items()))
            t = {}
            for (a, b), c in self.t.items():
                if a < eq or b < ex:
                    raise ArithmeticError("division was not exact")
                t[(a - eq, b - ex)] = c / v
            out = BiPoly()
            out.t = t
            return out
        q, r = divmod(self.to_polyx(), other.to_polyx())
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        try:
            return BiPoly.from_polyx(q)
        except ValueError:
            raise ArithmeticError("division was not exact over Q[q, x]") from None

    def divides(self, other: "BiPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        try:
            other.divexact(self)
            return True
        except ArithmeticError:
            return False

    # -- contents and normal forms ------------------------------------------

    def content_q(self) -> PolyQ:
        """gcd in Q[q] of all x-coefficients (monic)."""
        g = PolyQ()
        for p in self.x_coeffs():
            if p.is_zero():
                continue
            g = polyq_gcd(g, p)
            if g.is_one():
                break
        return g

    def rational_content(self):
        """Positive rational c with self/c having integer, gcd-1 coefficients."""
        num_gcd, den_lcm = 0, 1
        for v in self.t.values():
            num_gcd = math.gcd(num_gcd, int(v.numerator))
            d = int(v.denominator)
            den_lcm = den_lcm * d // math.gcd(den_lcm, d)
        if num_gcd == 0:
            return RAT_ONE
        return rat(num_gcd, den_lcm)

    def normalize_sign(self) -> "BiPoly":
        """Flip sign so the lex-leading (x then q) coefficient is positive."""
        if self.is_zero():
            return self
        _, v = self.lead_term()
        return -self if v < 0 else self

    def primitive(self) -> "BiPoly":
        """Integer-primitive, sign-normalized associate (content removed)."""
        if self.is_zero():
            return self
        c = self.rational_content()
        out = self.scale(1 / c)
        return out.normalize_sign()

    def strip_monomial(self):
        """Factor self = q**a * x**b * rest with rest divisible by neither."""
        if self.is_zero():
            return self, 0, 0
        a, b = min(eq for eq, _ in self.t), min(ex for _, ex in self.t)
        if a == 0 and b == 0:
            return self, 0, 0
        out = BiPoly()
        out.t = {(eq - a, ex - b): v for (eq, ex), v in self.t.items()}
        return out, a, b

    # -- substitutions ---------------------------------------------------------

    def shift_x_by_qpow(self, j: int) -> "BiPoly":
        """Substitute x -> q**j * x (for j >= 0 stays polynomial)."""
        if j == 0:
            return self
        t = {}
        for (eq, ex), v in self.t.items():
            e = eq + j * ex
            if e < 0:
                raise ValueError("substitution left the polynomial ring")
            t[(e, ex)] = v
        out = BiPoly()
        out.t = t
        return out

    def eval_x_qpow(self, n: int) -> RatFuncQ:
        """Evaluate at x = q**n (any integer n); exact element of K(q)."""
        neg = min((eq + n * ex for (eq, ex) in self.t), default=0)
        shift = -neg if neg < 0 else 0
        num = {}
        for (eq, ex), v in self.t.items():
            e = eq + n * ex + shift
            num[e] = num.get(e, rat(0)) + v
        coeffs = [0] * (max(num, default=0) + 1)
        for e, v in num.items():
            coeffs[e] = v
        return RatFuncQ(PolyQ(coeffs), PolyQ.monomial(shift))

    def subst_x_polyq(self, val: PolyQ) -> PolyQ:
        """Evaluate at x = val(q), staying in Q[q]."""
        acc = PolyQ()
        for p in reversed(self.x_coeffs()):
            acc = acc * val + p
        return acc

    # -- display ------------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.t.items(), key=lambda kv: (kv[0][1], kv[0][0]), reverse=True)

    def __repr__(self):
        return "BiPoly(%s)" % (self.t,)

    def __str__(self):
        from .render import render_bipoly

        return render_bipoly(self)


BIPOLY_ZERO = BiPoly()
BIPOLY_ONE = BiPoly.const(1)


def bipoly_gcd(f: BiPoly, g: BiPoly) -> BiPoly:
    """gcd over Q[q, x]: content gcd times primitive-part gcd, sign-normalized."""
    if f.is_zero():
        return g.primitive()
    if g.is_zero():
        return f.primitive()
    cf, cg = f.content_q(), g.content_q()
    content = polyq_gcd(cf, cg)
    pf = [p.divexact(cf) for p in f.x_coeffs()]
    pg = [p.divexact(cg) for p in g.x_coeffs()]
    core = _prs_gcd_x(pf, pg)
    out = BiPoly.from_x_coeffs(core) * BiPoly.from_x_coeffs([content])
    return out.primitive()


def bipoly_lcm(f: BiPoly, g: BiPoly) -> BiPoly:
    if f.is_zero() or g.is_zero():
        return BIPOLY_ZERO
    fp, gp = f.primitive(), g.primitive()
    return (fp * gp).divexact(bipoly_gcd(f, g)).primitive()
