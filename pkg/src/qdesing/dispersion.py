"""q-dispersion: the largest alpha with gcd(f(q**alpha x), g(x)) nonconstant.

Two computation routes are provided.  The factored route walks pairs of
caller-supplied primitive irreducible factors and decides each pair from its
extreme coefficients plus one subtraction test.  The resultant route is
complete on arbitrary input: it interpolates R(z) = res_x(f(z x), g(x)),
extracts a finite candidate set from q-degree slopes of its coefficients,
and confirms candidates by an actual gcd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .bipoly import BiPoly
from .errors import PreconditionError
from .qpoly import PolyQ, polyq_lcm
from .ratfunc import RatFuncQ
from .rationals import Rational, rat
from .xpoly import PolyX, polyx_gcd, resultant_x


@dataclass(frozen=True)
class FactoredPoly:
    """A polynomial as unit * product(base**mult), bases primitive in Q[q][x]."""

    unit: RatFuncQ
    factors: Tuple[Tuple[BiPoly, int], ...]

    def __post_init__(self):
        seen = []
        for base, mult in self.factors:
            if mult < 1:
                raise PreconditionError("factor multiplicity must be positive")
            if base.degree_x() < 1:
                raise PreconditionError("factor of degree 0 in x")
            if base != base.primitive():
                raise PreconditionError("factor base is not primitive")
            for other in seen:
                if other == base:
                    raise PreconditionError("repeated factor base")
            seen.append(base)

    @staticmethod
    def make(unit, factors) -> "FactoredPoly":
        return FactoredPoly(unit, tuple((b, int(m)) for b, m in factors))

    def degree_x(self) -> int:
        return sum(b.degree_x() * m for b, m in self.factors)

    def constant_nonzero(self) -> bool:
        return not self.unit.is_zero() and all(
            not b.coeff_x(0).is_zero() for b, _ in self.factors
        )

    def expand(self) -> PolyX:
        acc = PolyX.const(self.unit)
        for base, mult in self.factors:
            acc = acc * base.to_polyx() ** mult
        return acc


@dataclass(frozen=True)
class DispersionResult:
    value: int
    witness: Optional[Tuple[int, PolyX]] = None


def dispersion_irreducible(f: BiPoly, g: BiPoly) -> int:
    """Dispersion of two primitive irreducible polynomials in Q[q][x].

    The caller vouches for irreducibility; primitivity and f(0) != 0 are
    checked.  Returns the unique shift making them associate, else 0.
    """
    if f.degree_x() < 1 or g.degree_x() < 1:
        raise PreconditionError("inputs must have positive degree in x")
    if not f.content_q().is_one() or not g.content_q().is_one():
        raise PreconditionError("inputs must be primitive over Q[q]")
    if f.coeff_x(0).is_zero():
        raise PreconditionError("f must have nonzero constant coefficient in x")
    d1, d2 = f.degree_x(), g.degree_x()
    if d1 != d2:
        return 0
    d = d1
    a0, ad = f.coeff_x(0), f.coeff_x(d)
    b0, bd = g.coeff_x(0), g.coeff_x(d)
    if b0.is_zero():
        return 0
    num, den = a0 * bd, b0 * ad
    quo, rem = divmod(num, den)
    if not rem.is_zero() or not quo.is_monomial() or quo.lc() != 1:
        return 0
    e = quo.degree
    if e % d != 0:
        return 0
    alpha = e // d
    lhs = f.shift_x_by_qpow(alpha) * BiPoly.from_x_coeffs([bd])
    rhs = g * BiPoly.from_x_coeffs([ad.shift(e)])
    return alpha if lhs == rhs else 0


def dispersion_factored(f: FactoredPoly, g: FactoredPoly) -> DispersionResult:
    """Dispersion from factor lists: the maximum over all factor pairs."""
    if not f.constant_nonzero():
        raise PreconditionError("f(0) must be nonzero")
    if f.degree_x() < 1 or g.degree_x() < 1:
        return DispersionResult(0)
    best, best_witness = 0, None
    for fb, _ in f.factors:
        for gb, _ in g.factors:
            if gb.coeff_x(0).is_zero():
                continue  # a power of x never meets a factor with f(0) != 0
            alpha = dispersion_irreducible(fb, gb)
            if alpha > best:
                best = alpha
                best_witness = (alpha, fb.to_polyx().sigma(alpha).monic())
    if best == 0:
        for fb, _ in f.factors:
            for gb, _ in g.factors:
                if fb == gb:
                    best_witness = (0, fb.to_polyx().monic())
                    break
    return DispersionResult(best, best_witness)


def _interpolate_resultant(f: PolyX, g: PolyX) -> List[RatFuncQ]:
    """Coefficients (in z) of res_x(f(z x), g(x)) via Newton interpolation."""
    d1, d2 = f.degree, g.degree
    npoints = d1 * d2 + 1
    nodes = [rat(t + 1) for t in range(npoints)]
    values = []
    for z in nodes:
        fz = PolyX(tuple(c * RatFuncQ.const(z**j) for j, c in enumerate(f.c)))
        values.append(resultant_x(fz, g))
    # divided differences over rational nodes
    table = list(values)
    for level in range(1, npoints):
        for i in range(npoints - 1, level - 1, -1):
            dx = RatFuncQ.const(nodes[i] - nodes[i - level])
            table[i] = (table[i] - table[i - 1]) / dx
    # expand the Newton form into power-basis coefficients
    coeffs = [RatFuncQ.const(0)] * npoints
    acc = [RatFuncQ.const(1)]  # product (z - nodes[0]) ... as we go
    for i in range(npoints):
        for j, a in enumerate(acc):
            coeffs[j] = coeffs[j] + table[i] * a
        if i + 1 < npoints:
            shifted = [RatFuncQ.const(0)] + acc
            scaled = [a * RatFuncQ.const(-nodes[i]) for a in acc] + [RatFuncQ.const(0)]
            acc = [u + v for u, v in zip(scaled, shifted)]
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs


def resultant_slope_candidates(f: PolyX, g: PolyX) -> set:
    """Candidate shifts from the q-degree slopes of R(z) = res_x(f(z x), g).

    A vanishing sum sum_i r_i(q) q^(alpha i) forces two indices of equal
    q-degree, so every alpha with R(q**alpha) = 0 appears among the slopes
    (deg r_i - deg r_j)/(j - i).
    """
    coeffs = _interpolate_resultant(f, g)
    den = PolyQ.const(1)
    for c in coeffs:
        den = polyq_lcm(den, c.den)
    cleared = [c.num * den.divexact(c.den) for c in coeffs]
    degs = [(i, p.degree) for i, p in enumerate(cleared) if not p.is_zero()]
    candidates = {0}
    for a in range(len(degs)):
        for b in range(a + 1, len(degs)):
            i, di = degs[a]
            j, dj = degs[b]
            if (di - dj) % (j - i) == 0:
                alpha = (di - dj) // (j - i)
                if alpha >= 1:
                    candidates.add(alpha)
    return candidates


def _int_x_coeffs(f: PolyX):
    """Clear f to Z[q][x]: list (per power of x) of integer q-coefficient lists."""
    qpolys, _ = f.clear_denominators()
    out = []
    for p in qpolys:
        ints, _ = p.int_coeffs()
        out.append(ints)
    return out


def _gcd_nontrivial_mod(fx, gx, alpha: int, q0: int, p: int) -> bool:
    """Whether gcd(f(q**alpha x), g) could be nonconstant, judged mod (q0, p).

    False is a proof of coprimality; True only flags a candidate.
    """

    def ev(ints, extra):
        acc = 0
        for v in reversed(ints):
            acc = (acc * q0 + v) % p
        return acc * pow(q0, extra, p) % p

    a = [ev(c, alpha * j) for j, c in enumerate(fx)]
    b = [ev(c, 0) for j, c in enumerate(gx)]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = trim(a), trim(b)
    if not a or not b:
        return True  # degenerate evaluation; stay conservative
    while b:
        if len(b) == 1:
            return False  # gcd is a unit mod p
        db, lb = len(b) - 1, b[-1]
        inv = pow(lb, -1, p)
        r = list(a)
        while len(r) - 1 >= db:
            fac = r[-1] * inv % p
            off = len(r) - 1 - db
            for j in range(db + 1):
                r[off + j] = (r[off + j] - fac * b[j]) % p
            trim(r)
        a, b = b, r
    return True  # common factor mod p; needs exact confirmation


def dispersion_resultant(f: PolyX, g: PolyX) -> DispersionResult:
    """Complete dispersion computation for unfactored input.

    Small inputs use the resultant-slope candidate set.  Large inputs use the
    exact shift bound deg_q(f) + deg_q(g) (a factor of f shifted onto a factor
    of g cannot raise the q-degree past the products), with candidates
    pre-screened by modular coprimality checks; every accepted shift is
    confirmed by an actual gcd, so both routes are exact.
    """
    if f.is_zero() or g.is_zero():
        raise PreconditionError("inputs must be nonzero")
    if not f.constant() or f.constant().is_zero():
        raise PreconditionError("f(0) must be nonzero")
    if f.degree < 1 or g.degree < 1:
        return DispersionResult(0)
    fx, gx = _int_x_coeffs(f), _int_x_coeffs(g)
    degq_f = max((len(c) - 1 for c in fx if c), default=0)
    degq_g = max((len(c) - 1 for c in gx if c), default=0)
    small = f.degree * g.degree <= 36 and max(degq_f, degq_g) <= 16
    if small:
        candidates = resultant_slope_candidates(f, g)
    else:
        candidates = set(range(0, degq_f + degq_g + 1))
    screens = ((100003, 2147483629), (31337, 2147483647))
    for alpha in sorted(candidates, reverse=True):
        if alpha > 0 and not all(
            _gcd_nontrivial_mod(fx, gx, alpha, q0, p) for q0, p in screens
        ):
            continue
        common = polyx_gcd(f.sigma(alpha), g)
        if common.degree > 0:
            return DispersionResult(alpha, (alpha, common))
    return DispersionResult(0)


def dispersion_value(f: PolyX, g: PolyX, f_factors: Optional[FactoredPoly] = None) -> int:
    """Dispersion of f and g, using supplied factors of f when available.

    With factors given, each factor is matched against g through the complete
    resultant route, so only f's factorization is trusted.
    """
    if f_factors is not None:
        best = 0
        for base, _ in f_factors.factors:
            r = dispersion_resultant(base.to_polyx(), g)
            best = max(best, r.value)
        return best
    return dispersion_resultant(f, g).value
