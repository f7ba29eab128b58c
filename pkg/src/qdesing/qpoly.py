"""Dense univariate polynomials in q over the exact rationals."""

from __future__ import annotations

import math
from typing import Iterable

from .rationals import RAT_ONE, RAT_ZERO, Rational, rat, rat_str


class PolyQ:
    """Polynomial in q with rational coefficients, lowest power first.

    The coefficient list never has a trailing zero; the zero polynomial is
    the empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [rat(v) for v in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.c = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(v) -> "PolyQ":
        return PolyQ((rat(v),))

    @staticmethod
    def monomial(e: int, coeff=RAT_ONE) -> "PolyQ":
        if e < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return PolyQ((RAT_ZERO,) * e + (rat(coeff),))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree in q; the zero polynomial has degree -1."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return len(self.c) == 1 and self.c[0] == 1

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def is_monomial(self) -> bool:
        return bool(self.c) and all(v == 0 for v in self.c[:-1])

    def lc(self):
        if not self.c:
            return RAT_ZERO
        return self.c[-1]

    def constant(self):
        return self.c[0] if self.c else RAT_ZERO

    def __getitem__(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else RAT_ZERO

    def __bool__(self) -> bool:
        return bool(self.c)

    def __hash__(self):
        return hash(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyQ):
            return self.c == other.c
        return NotImplemented

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "PolyQ":
        return PolyQ(tuple(-v for v in self.c))

    def __add__(self, other: "PolyQ") -> "PolyQ":
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return PolyQ(out)

    def __sub__(self, other: "PolyQ") -> "PolyQ":
        return self + (-other)

    def __mul__(self, other) -> "PolyQ":
        if not isinstance(other, PolyQ):
            return self.scale(other)
        a, b = self.c, other.c
        if not a or not b:
            return PolyQ()
        out = [RAT_ZERO] * (len(a) + len(b) - 1)
        for i, va in enumerate(a):
            if va == 0:
                continue
            for j, vb in enumerate(b):
                if vb != 0:
                    out[i + j] = out[i + j] + va * vb
        return PolyQ(out)

    def scale(self, k) -> "PolyQ":
        k = rat(k)
        if k == 0:
            return PolyQ()
        return PolyQ(tuple(v * k for v in self.c))

    def shift(self, e: int) -> "PolyQ":
        """Multiply by q**e."""
        if self.is_zero() or e == 0:
            return self
        if e < 0:
            raise ValueError("cannot shift below q^0")
        return PolyQ((RAT_ZERO,) * e + self.c)

    def __divmod__(self, other: "PolyQ"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.c)
        db, lb = other.degree, other.lc()
        if len(rem) - 1 < db:
            return PolyQ(), self
        quo = [RAT_ZERO] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            if rem[i] == 0:
                continue
            f = rem[i] / lb
            quo[i - db] = f
            for j, vb in enumerate(other.c):
                rem[i - db + j] = rem[i - db + j] - f * vb
        return PolyQ(quo), PolyQ(rem)

    def __floordiv__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyQ") -> "PolyQ":
        return divmod(self, other)[1]

    def divexact(self, other: "PolyQ") -> "PolyQ":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def __pow__(self, e: int) -> "PolyQ":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = PolyQ.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- normal forms ---------------------------------------------------

    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        lb = self.lc()
        if lb == 1:
            return self
        return PolyQ(tuple(v / lb for v in self.c))

    def int_coeffs(self):
        """Return (list of ints, scale) with self == scale * PolyQ(ints)."""
        if self.is_zero():
            return [], RAT_ONE
        den = 1
        for v in self.c:
            den = den * int(v.denominator) // math.gcd(den, int(v.denominator))
        ints = [int(v.numerator) * (den // int(v.denominator)) for v in self.c]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g == 0:
            g = 1
        ints = [v // g for v in ints]
        return ints, Rational(g, den)

    def primitive(self) -> "PolyQ":
        """Integer-primitive associate with positive leading coefficient."""
        ints, _ = self.int_coeffs()
        if ints and ints[-1] < 0:
            ints = [-v for v in ints]
        return PolyQ(ints)

    # -- evaluation -----------------------------------------------------

    def eval(self, point):
        """Exact evaluation at a rational point (Horner)."""
        acc = RAT_ZERO
        for v in reversed(self.c):
            acc = acc * point + v
        return acc

    def eval_mod(self, point: int, p: int) -> int:
        """Evaluate at an integer point modulo a prime.

        Requires all denominators to be invertible mod p.
        """
        acc = 0
        for v in reversed(self.c):
            num, den = int(v.numerator), int(v.denominator)
            acc = (acc * point + num * pow(den, -1, p)) % p
        return acc

    def reverse(self) -> "PolyQ":
        """Coefficient reversal: q**deg * self(1/q)."""
        cs = list(self.c)
        while cs and cs[0] == 0:
            cs.pop(0)
        return PolyQ(tuple(reversed(cs)))

    # -- display --------------------------------------------------------

    def __repr__(self):
        return "PolyQ(%s)" % (self.c,)

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            v = self[e]
            if v == 0:
                continue
            if e == 0:
                parts.append(rat_str(v))
            else:
                mono = "q" if e == 1 else "q^%d" % e
                if v == 1:
                    parts.append(mono)
                elif v == -1:
                    parts.append("-" + mono)
                else:
                    parts.append("%s*%s" % (rat_str(v), mono))
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


POLYQ_ZERO = PolyQ()
POLYQ_ONE = PolyQ.const(1)
POLYQ_Q = PolyQ.monomial(1)


def _trim(v: list) -> list:
    while v and v[-1] == 0:
        v.pop()
    return v


def _prim(v: list) -> list:
    g = 0
    for x in v:
        g = math.gcd(g, x)
    if g in (0, 1):
        return v
    return [x // g for x in v]


def _prem(a: list, b: list, delta: int) -> list:
    """lc(b)**(delta+1) * a mod b over Z (lowest power first)."""
    r = _trim(list(a))
    db, lb = len(b) - 1, b[-1]
    steps = 0
    while len(r) - 1 >= db:
        lr = r[-1]
        if lb != 1:
            r = [v * lb for v in r]
        off = len(r) - 1 - db
        for j in range(db + 1):
            r[off + j] -= lr * b[j]
        _trim(r)
        steps += 1
    pad = delta + 1 - steps
    if pad > 0 and lb != 1 and r:
        scale = lb**pad
        r = [v * scale for v in r]
    return r


def _int_gcd(a: list, b: list) -> list:
    """Subresultant PRS gcd of integer coefficient lists (lowest power first)."""
    a, b = _prim(_trim(list(a))), _prim(_trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    g = h = 1
    while b:
        delta = len(a) - len(b)
        r = _prem(a, b, delta)
        a, b = b, r
        if b:
            div = g * h**delta
            if div != 1:
                b = [v // div for v in b]
        g = a[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g**delta // h ** (delta - 1)
    return _prim(a)


_GCD_PRIMES = (2147483647, 2305843009213693951, 2147483629)


def _gcd_modp(ia: list, ib: list, p: int) -> list:
    """Monic gcd of the reductions mod p (lowest power first)."""
    if p < (1 << 32) and max(len(ia), len(ib)) >= 24:
        return _gcd_modp_np(ia, ib, p)
    a = [v % p for v in ia]
    b = [v % p for v in ib]
    _trim(a)
    _trim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        db = len(b) - 1
        inv = pow(b[-1], -1, p)
        r = list(a)
        while len(r) - 1 >= db:
            fac = r[-1] * inv % p
            off = len(r) - 1 - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - fac * b[j]) % p
            _trim(r)
        a, b = b, r
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _gcd_modp_np(ia: list, ib: list, p: int) -> list:
    import numpy as np

    a = np.array([v % p for v in ia], dtype=np.int64)
    b = np.array([v % p for v in ib], dtype=np.int64)

    def trim(v):
        nz = np.nonzero(v)[0]
        return v[: nz[-1] + 1] if nz.size else v[:0]

    a, b = trim(a), trim(b)
    if a.size < b.size:
        a, b = b, a
    while b.size:
        if b.size == 1:
            return [1]
        db = b.size - 1
        inv = pow(int(b[-1]), -1, p)
        r = a.copy()
        while r.size - 1 >= db:
            fac = int(r[-1]) * inv % p
            off = r.size - 1 - db
            r[off:] = (r[off:] - fac * b) % p
            r = trim(r)
        a, b = b, r
    inv = pow(int(a[-1]), -1, p)
    return [int(v) * inv % p for v in a]


def polyq_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd in Q[q]; gcd(0, 0) = 0."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return POLYQ_ONE
    va = next(i for i, v in enumerate(a.c) if v != 0)
    vb = next(i for i, v in enumerate(b.c) if v != 0)
    v = min(va, vb)
    if a.is_monomial() or b.is_monomial():
        return PolyQ.monomial(v)
    ia, _ = PolyQ(a.c[va:]).int_coeffs()
    ib, _ = PolyQ(b.c[vb:]).int_coeffs()
    core = None
    gamma = math.gcd(ia[-1], ib[-1])
    for p in _GCD_PRIMES:
        if ia[-1] % p == 0 or ib[-1] % p == 0:
            continue
        gp = _gcd_modp(ia, ib, p)
        if len(gp) == 1:
            core = [1]  # a unit gcd mod a good prime is exact
            break
        half = p // 2
        lifted = []
        for c in gp:
            c = c * gamma % p
            lifted.append(c - p if c > half else c)
        cand = _prim(lifted)
        if cand[-1] < 0:
            cand = [-c for c in cand]
        if not _prem(ia, cand, 0) and not _prem(ib, cand, 0):
            core = cand
            break
    if core is None:
        core = _int_gcd(ia, ib)
    out = PolyQ(core).monic()
    return out.shift(v) if v else out


def polyq_lcm(a: PolyQ, b: PolyQ) -> PolyQ:
    if a.is_zero() or b.is_zero():
        return POLYQ_ZERO
    return (a * b).divexact(polyq_gcd(a, b)).monic()
