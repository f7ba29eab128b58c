"""Desingularization machinery: order bound, submodules, closure, minimal lc.

For an operator P of order r the polynomial-coefficient left multiples of
order at most k form a free K(q)[x]-module M_k; its D**k-coefficients form an
ideal I_k.  The order bound says a fully desingularized operator exists at
order r + dis(lc without x-powers, trailing coefficient); the minimal-degree
generator of I_k at that level is the desingularized leading coefficient, and
tracing the computation back yields the operator itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .bipoly import BiPoly
from .dispersion import DispersionResult, FactoredPoly, dispersion_value
from .errors import PreconditionError
from .groebner import groebner_reduced_with_cofactors
from .linalg import PolyMatrix, hnf_with_transform, kernel_rows, rref_nullspace
from .weyl import (
    QWeylOp,
    RatOp,
    mirror,
    normalize_trailing,
    primitive_normalize,
    right_divide,
)
from .xpoly import POLYX_ONE, POLYX_ZERO, PolyX, RATX_ONE, RATX_ZERO, RatX, polyx_gcd


@dataclass(frozen=True)
class SubmoduleBasis:
    """Echelon basis of the order-<=k piece of the polynomial multiples of P."""

    k: int
    generators: Tuple[QWeylOp, ...]  # ascending order; one element per order

    def of_order(self, j: int) -> Optional[QWeylOp]:
        for g in self.generators:
            if g.order == j:
                return g
        return None


@dataclass(frozen=True)
class CoeffIdeal:
    k: int
    generators: Tuple[BiPoly, ...]


@dataclass(frozen=True)
class DesingReport:
    operator_in: QWeylOp
    side: str
    bound: int
    order: int
    desingularized: QWeylOp
    minimal_lc: BiPoly
    tightness: Dict[int, BiPoly]  # k -> minimal-degree generator of I_k
    stripped_x_power: int
    dispersion_used: int


def _check_op(p: QWeylOp):
    if p.is_zero():
        raise PreconditionError("operator must be nonzero")
    if p.order < 1:
        raise PreconditionError("operator must have positive order")
    if p.trailing().is_zero():
        raise PreconditionError(
            "trailing coefficient is zero; shift it away first (normalize_trailing)"
        )


def order_bound_report(
    p: QWeylOp, lc_factors: Optional[FactoredPoly] = None
) -> Tuple[int, int, int]:
    """Return (bound, stripped x-power, dispersion used)."""
    _check_op(p)
    lr = p.lc()
    e = lr.x_valuation()
    stripped = PolyX(lr.c[e:])
    disp = dispersion_value(stripped, p.trailing(), lc_factors)
    return p.order + disp, e, disp


def order_bound(p: QWeylOp, lc_factors: Optional[FactoredPoly] = None) -> int:
    return order_bound_report(p, lc_factors)[0]


def _multiplication_matrix(p: QWeylOp, k: int) -> PolyMatrix:
    """Rows are the coefficient vectors of D**i * P for i = 0..k-r."""
    r = p.order
    rows = []
    for i in range(k - r + 1):
        row = [POLYX_ZERO] * (k + 1)
        for j in range(r + 1):
            cj = p.coeff(j)
            if not cj.is_zero():
                row[i + j] = cj.sigma(i)
        rows.append(row)
    return PolyMatrix(rows)


def _rational_kernel_columns(m: PolyMatrix) -> List[List[PolyX]]:
    """Polynomial, column-primitive basis of the right kernel over K(q, x)."""
    rows = [[RatX.from_poly(e) for e in row] for row in m.m]
    vecs = rref_nullspace(
        rows,
        RATX_ZERO,
        RATX_ONE,
        lambda v: v.is_zero(),
        lambda v: v.inverse(),
    )
    out = []
    for vec in vecs:
        den = POLYX_ONE
        for v in vec:
            if not v.is_zero():
                den = den.divexact(polyx_gcd(den, v.den)) * v.den
        cleared = [v.num * den.divexact(v.den) for v in vec]
        content = POLYX_ZERO
        for c in cleared:
            content = polyx_gcd(content, c)
            if content.is_one():
                break
        if not content.is_one() and not content.is_zero():
            cleared = [c.divexact(content) for c in cleared]
        out.append(cleared)
    return out


def submodule_basis(p: QWeylOp, k: int) -> SubmoduleBasis:
    """Echelon generating set of the polynomial multiples of P of order <= k.

    The rational row space of the multiplication matrix is cut out by its
    kernel N; the polynomial row vectors annihilating N are exactly the
    module, and a Hermite computation yields a free basis with one element
    per order r..k (pivots monic, higher elements reduced at pivot spots).
    """
    _check_op(p)
    r = p.order
    if k < r:
        raise PreconditionError("k must be at least the order of the operator")
    m = _multiplication_matrix(p, k)
    ncols = _rational_kernel_columns(m)
    if not ncols:
        raise AssertionError("multiplication matrix cannot have full column rank")
    n_mat = PolyMatrix([[col[i] for col in ncols] for i in range(k + 1)])
    kernel = kernel_rows(n_mat)
    # canonicalize with pivots on the highest D-power (reverse column order)
    rev = PolyMatrix([list(reversed(row)) for row in kernel])
    h, _ = hnf_with_transform(rev)
    ops = []
    for row in h.m:
        coeffs = list(reversed(row))
        if all(c.is_zero() for c in coeffs):
            continue
        ops.append(primitive_normalize(QWeylOp(coeffs)))
    ops.sort(key=lambda t: (t.order, t.lc().degree))
    return SubmoduleBasis(k, tuple(ops))


def coefficient_ideal(p: QWeylOp, k: int) -> CoeffIdeal:
    """Generators of the D**k-coefficient ideal of the order-<=k submodule.

    With an echelon basis only the order-k element contributes a nonzero
    D**k-coefficient, so the ideal is principal over K(q)[x]; the generator
    is kept with the exact q-content of the jointly primitive basis element.
    """
    basis = submodule_basis(p, k)
    gens = []
    for t in basis.generators:
        if t.order == k:
            gens.append(BiPoly.from_polyx(t.lc()))
    return CoeffIdeal(k, tuple(gens))


def weyl_closure(p: QWeylOp) -> SubmoduleBasis:
    """Generating set of all polynomial operators in the rational ideal of P."""
    return submodule_basis(p, order_bound(p))


def _minimal_groebner_element(gens: List[BiPoly]) -> Tuple[BiPoly, List[BiPoly]]:
    """Minimal (deg_x, then deg_q, then lex) element of the reduced basis."""
    G, C = groebner_reduced_with_cofactors(gens)
    if not G:
        raise PreconditionError("coefficient ideal is zero")
    best = None
    for g, cof in zip(G, C):
        key = (g.degree_x(), g.degree_q(), tuple(sorted(g.t.items())))
        if best is None or key < best[0]:
            best = (key, g, cof)
    return best[1], best[2]


def _canonical_multiple(p: QWeylOp, basis: SubmoduleBasis, k: int, lc_target: BiPoly) -> QWeylOp:
    """The element of the module with leading coefficient lc_target at order k,
    normalized so the cofactor of each lower D-power is a proper fraction."""
    t_k = basis.of_order(k)
    scale = lc_target.to_polyx().divexact(t_k.lc())
    l0 = t_k.scale_polyx(scale)
    quo, rem = right_divide(l0, p)
    if not rem.is_zero():
        raise AssertionError("module element is not a multiple of the input")
    coeffs = quo.ratx_coeffs()
    m = len(coeffs) - 1
    reduced = [c.proper_part() if i < m else c for i, c in enumerate(coeffs)]
    canon = RatOp.from_ratx_coeffs(reduced) * RatOp.from_op(p)
    return primitive_normalize(canon.to_op())


def desingularize(
    p: QWeylOp,
    side: str = "leading",
    lc_factors: Optional[FactoredPoly] = None,
) -> DesingReport:
    """Construct the minimal-leading-coefficient desingularized operator.

    Walks the coefficient ideals up to the order bound, takes the minimal
    x-degree achieved at the bound, and realizes it at the earliest order
    where the same (shift-compatible) minimum already occurs.
    """
    if side not in ("leading", "trailing"):
        raise PreconditionError("side must be 'leading' or 'trailing'")
    work = p
    if side == "trailing":
        _check_op(p)
        work = mirror(p)
    _check_op(work)
    r = work.order
    bound, e, disp = order_bound_report(work, lc_factors)
    basis = submodule_basis(work, bound)
    ladder: Dict[int, BiPoly] = {}
    for k in range(r, bound + 1):
        t_k = basis.of_order(k)
        g, _ = _minimal_groebner_element([BiPoly.from_polyx(t_k.lc())])
        ladder[k] = g
    g_bound = ladder[bound]
    dstar = g_bound.degree_x()
    k_star = bound
    for k in range(r, bound):
        g_k = ladder[k]
        if g_k.degree_x() != dstar:
            continue
        shifted = g_k.to_polyx().sigma(bound - k).monic()
        if shifted == g_bound.to_polyx().monic():
            k_star = k
            break
    lc_exact = ladder[k_star]
    op = _canonical_multiple(work, basis, k_star, lc_exact)
    if side == "trailing":
        if op.trailing().is_zero():
            op = normalize_trailing(op)
        op = primitive_normalize(mirror(op))
    return DesingReport(
        operator_in=p,
        side=side,
        bound=bound,
        order=op.order,
        desingularized=op,
        minimal_lc=lc_exact,
        tightness={k: ladder[k] for k in range(r, bound + 1)},
        stripped_x_power=e,
        dispersion_used=disp,
    )


def reduce_by_set(t: QWeylOp, gens: List[QWeylOp]) -> QWeylOp:
    """Left-ideal style reduction of t by gens over K(q)[x].

    Repeatedly cancels the leading coefficient using h(x) * D**d * g whenever
    the shifted leading coefficient divides exactly; returns the irreducible
    tail (zero means t lies in the left ideal generated by gens, witnessed
    by polynomial cofactors).
    """
    work = t
    progress = True
    while not work.is_zero() and progress:
        progress = False
        for g in sorted(gens, key=lambda x: -x.order):
            if g.is_zero() or g.order > work.order:
                continue
            d = work.order - g.order
            shifted_lc = g.lc().sigma(d)
            quo, rem = divmod(work.lc(), shifted_lc)
            if rem.is_zero() and not quo.is_zero():
                work = work - QWeylOp.d_power(d, quo) * g
                progress = True
                break
    return work


def same_left_module(gens_a: List[QWeylOp], gens_b: List[QWeylOp]) -> bool:
    """Mutual reduction to zero between two generating sets."""
    return all(reduce_by_set(a, gens_b).is_zero() for a in gens_a) and all(
        reduce_by_set(b, gens_a).is_zero() for b in gens_b
    )
