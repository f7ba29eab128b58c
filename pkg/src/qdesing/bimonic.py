"""Bimonic recurrence construction by multiplier guessing.

Given an inhomogeneous recurrence R(n) = p_-1 + sum p_i f(n+i) = 0 and the
target factor c built from lcm(p_0, p_r), search for polynomial multipliers
u_i(q, q**n) with sum u_i R(n+i) = c * (new recurrence) whose extreme
coefficients are plain powers q**(a n + b).  Such a recurrence certifies that
the bi-infinite solution sequence stays inside the Laurent polynomials.

The linear algebra is over K(q); candidate systems are pre-screened by
evaluation modulo a prime (full modular column rank proves unsolvability), so
exact eliminations only run on genuine candidates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .bipoly import BIPOLY_ZERO, BiPoly, bipoly_gcd, bipoly_lcm
from .errors import PreconditionError
from .ratfunc import RF_ZERO, RatFuncQ
from .xpoly import POLYX_ZERO, PolyX


@dataclass(frozen=True)
class InhomRec:
    """p_-1 + sum(p_i f(n+i)) = 0 with coefficients in Q[q, q**n]."""

    inhom: BiPoly
    coeffs: Tuple[BiPoly, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1].is_zero():
            raise PreconditionError("top coefficient of a recurrence must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> BiPoly:
        if i == -1:
            return self.inhom
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else BIPOLY_ZERO

    def is_homogeneous(self) -> bool:
        return self.inhom.is_zero()

    def homogeneous_operator(self):
        from .weyl import QWeylOp

        return QWeylOp([p.to_polyx() for p in self.coeffs])

    def __str__(self):
        from .render import render_recurrence

        return render_recurrence(self)


def shift_rec(rec: InhomRec, i: int) -> InhomRec:
    """The recurrence R(n+i): substitute q**n -> q**(n+i), shift the window."""
    if i < 0:
        raise PreconditionError("shift must be nonnegative")
    if i == 0:
        return rec
    pad = (BIPOLY_ZERO,) * i
    return InhomRec(
        rec.inhom.shift_x_by_qpow(i),
        pad + tuple(p.shift_x_by_qpow(i) for p in rec.coeffs),
    )


def substitute_multiplier(rec: InhomRec, m: BiPoly) -> InhomRec:
    """Substitute f(n) -> f(n)/m(q, q**n) and clear denominators.

    Coefficient i picks up prod_{j != i} m(q, q**(n+j)); afterwards the common
    polynomial gcd of all coefficients (inhomogeneous part included) is
    divided out.
    """
    if m.is_zero():
        raise PreconditionError("substitution multiplier must be nonzero")
    r = rec.order
    shifted = [m.shift_x_by_qpow(j) for j in range(r + 1)]
    full = BiPoly.const(1)
    for mj in shifted:
        full = full * mj
    new_inhom = rec.inhom * full
    new_coeffs = []
    for i, p in enumerate(rec.coeffs):
        if p.is_zero():
            new_coeffs.append(BIPOLY_ZERO)
            continue
        prod = BiPoly.const(1)
        for j, mj in enumerate(shifted):
            if j != i:
                prod = prod * mj
        new_coeffs.append(p * prod)
    g = new_inhom
    for p in new_coeffs:
        g = bipoly_gcd(g, p)
        if g.is_one():
            break
    if not g.is_one() and not g.is_zero():
        new_inhom = new_inhom.divexact(g)
        new_coeffs = [p.divexact(g) if not p.is_zero() else p for p in new_coeffs]
    return InhomRec(new_inhom, tuple(new_coeffs))


def target_factor(rec: InhomRec) -> Tuple[BiPoly, int, int]:
    """c = lcm(p_0, p_r) with all q- and q**n-powers stripped; returns (c, a, b)
    where the stripped monomial is q**(a n + b)."""
    p0, pr = rec.coeffs[0], rec.coeffs[-1]
    if p0.is_zero():
        raise PreconditionError("trailing coefficient must be nonzero")
    lcm = bipoly_lcm(p0, pr)
    stripped, b_q, a_y = lcm.strip_monomial()
    return stripped.normalize_sign(), a_y, b_q


@dataclass(frozen=True)
class BimonicResult:
    shifts: int  # s
    multipliers: Tuple[BiPoly, ...]  # u_0 .. u_s
    inhom: BiPoly  # divided-out inhomogeneous part
    coeffs: Tuple[BiPoly, ...]  # divided-out l_0 .. l_{r+s}
    removed: BiPoly  # c
    lead_exponents: Tuple[int, int]  # l_top = sign * q**(a n + b) -> (a, b)
    trail_exponents: Tuple[int, int]
    lead_sign: int
    trail_sign: int

    def to_rec(self) -> InhomRec:
        return InhomRec(self.inhom, self.coeffs)


def _monomial_shape(p: BiPoly) -> Optional[Tuple[int, int, object]]:
    """(a, b, coefficient) when p = coefficient * q**b * y**a, else None."""
    if len(p.t) != 1:
        return None
    (eq, ex), v = next(iter(p.t.items()))
    return ex, eq, v


def _combination_coeffs(rec: InhomRec, mults: Sequence[BiPoly]) -> List[BiPoly]:
    """Coefficients (index -1..r+s) of sum u_i R(n+i)."""
    r, s = rec.order, len(mults) - 1
    out = [BIPOLY_ZERO] * (r + s + 2)  # slot 0 is the inhomogeneous part
    for i, u in enumerate(mults):
        if u.is_zero():
            continue
        out[0] = out[0] + u * rec.inhom.shift_x_by_qpow(i)
        for t, p in enumerate(rec.coeffs):
            if not p.is_zero():
                out[1 + i + t] = out[1 + i + t] + u * p.shift_x_by_qpow(i)
    return out


def verify_bimonic(rec: InhomRec, res: BimonicResult) -> bool:
    """Re-expand the multiplier combination and compare with c * result."""
    combo = _combination_coeffs(rec, res.multipliers)
    if combo[0] != res.removed * res.inhom:
        return False
    expected = [res.removed * l for l in res.coeffs]
    return combo[1:] == expected


class _AnsatzSystem:
    """Linear data for one (s, windows) ansatz."""

    def __init__(self, rec: InhomRec, c: BiPoly, s: int, windows):
        self.rec, self.c, self.s = rec, c, s
        self.windows = windows
        r = rec.order
        self.variables: List[Tuple[int, int]] = []
        for i in range(s + 1):
            lo, hi = windows[i]
            for j in range(lo, hi + 1):
                self.variables.append((i, j))
        cp = c.to_polyx()
        self.c_deg = cp.degree
        # remainder and quotient tables for y**j * p_t(q, q**(n+i)) modulo c
        rem_rows: Dict[Tuple[int, int], List[PolyX]] = {}
        quo_rows: Dict[Tuple[int, int], List[PolyX]] = {}
        for i in range(s + 1):
            lo, hi = windows[i]
            for t in list(range(r + 1)) + [-1]:
                base = rec.coeff(t)
                if base.is_zero():
                    continue
                shifted = base.shift_x_by_qpow(i).to_polyx()
                rems, quos = [], []
                cur = shifted
                for j in range(hi + 1):
                    q, rm = divmod(cur, cp)
                    rems.append(rm)
                    quos.append(q)
                    cur = cur.shift_x(1)
                rem_rows[(i, t)] = rems
                quo_rows[(i, t)] = quos
        self.rem_rows, self.quo_rows = rem_rows, quo_rows
        # equations: for every combination slot m, each y-coefficient of the
        # remainder must vanish
        self.rows: List[List[RatFuncQ]] = []
        slots = [-1] + list(range(r + s + 1))
        for m in slots:
            for yexp in range(self.c_deg):
                row = []
                nonzero = False
                for (i, j) in self.variables:
                    t = -1 if m == -1 else m - i
                    if m != -1 and not (0 <= t <= r) or (i, t) not in rem_rows:
                        row.append(RF_ZERO)
                        continue
                    entry = rem_rows[(i, t)][j][yexp]
                    row.append(entry)
                    if not entry.is_zero():
                        nonzero = True
                if nonzero:
                    self.rows.append(row)

    def end_rows(self, which: str) -> List[List[RatFuncQ]]:
        """Linear forms giving the y-coefficients of l_0 (trail) or l_top (lead)."""
        r = self.rec.order
        i0, t0 = (0, 0) if which == "trail" else (self.s, r)
        quos = self.quo_rows.get((i0, t0))
        if quos is None:
            return []
        max_deg = max((q.degree for q in quos), default=-1)
        rows = []
        for yexp in range(max_deg + 1):
            row = []
            for (i, j) in self.variables:
                if i != i0:
                    row.append(RF_ZERO)
                else:
                    row.append(quos[j][yexp])
            rows.append(row)
        return rows

    def build_u(self, vec: Sequence[RatFuncQ]) -> List[BiPoly]:
        """Multipliers from a solution vector, cleared to Q[q, y]."""
        from .qpoly import POLYQ_ONE, polyq_lcm

        den = POLYQ_ONE
        for v in vec:
            if not v.is_zero():
                den = polyq_lcm(den, v.den)
        mults = [BIPOLY_ZERO] * (self.s + 1)
        for (i, j), v in zip(self.variables, vec):
            if v.is_zero():
                continue
            num = v.num * den.divexact(v.den)
            term = BiPoly.from_x_coeffs([num]).mul_monomial(0, j)
            mults[i] = mults[i] + term
        return mults


def _modp_matrix(rows, q0: int, p: int) -> Optional[np.ndarray]:
    out = np.zeros((len(rows), len(rows[0]) if rows else 0), dtype=np.int64)
    for a, row in enumerate(rows):
        for b, v in enumerate(row):
            if v.is_zero():
                continue
            try:
                out[a, b] = v.eval_mod(q0, p)
            except ZeroDivisionError:
                return None
    return out


def _modp_rank(mat: np.ndarray, p: int) -> int:
    m = mat % p
    rows, cols = m.shape
    rank = 0
    for c in range(cols):
        piv = None
        for i in range(rank, rows):
            if m[i, c]:
                piv = i
                break
        if piv is None:
            continue
        m[[rank, piv]] = m[[piv, rank]]
        inv = pow(int(m[rank, c]), -1, p)
        m[rank] = m[rank] * inv % p
        for i in range(rows):
            if i != rank and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


_SCREENS = ((1103, 2147483629), (4242, 2147483587))


def bimonic_guess(
    rec: InhomRec,
    c: BiPoly,
    s: int,
    windows: Sequence[Tuple[int, int]],
) -> Optional[BimonicResult]:
    """One ansatz attempt: multipliers u_i supported on the given windows.

    Returns a verified result whose extreme coefficients are exact signed
    powers q**b * (q**n)**a, or None when the ansatz admits no such solution.
    """
    if s < 0 or len(windows) != s + 1:
        raise PreconditionError("need one exponent window per shift")
    sysd = _AnsatzSystem(rec, c, s, windows)
    nvars = len(sysd.variables)
    if nvars == 0:
        return None
    trail_rows = sysd.end_rows("trail")
    lead_rows = sysd.end_rows("lead")
    if not trail_rows or not lead_rows:
        return None
    base_rows = sysd.rows if sysd.rows else [[RF_ZERO] * nvars]
    for a_trail in range(len(trail_rows)):
        for a_lead in range(len(lead_rows)):
            stacked = list(base_rows)
            stacked += [row for t, row in enumerate(trail_rows) if t != a_trail]
            stacked += [row for t, row in enumerate(lead_rows) if t != a_lead]
            # modular pre-screen: full column rank proves there is no solution
            solvable = True
            for q0, p in _SCREENS:
                mat = _modp_matrix(stacked, q0, p)
                if mat is None:
                    continue
                if _modp_rank(mat, p) == nvars:
                    solvable = False
                break
            if not solvable:
                continue
            result = _exact_attempt(rec, c, s, sysd, stacked, a_trail, a_lead)
            if result is not None:
                return result
    return None


def _exact_attempt(rec, c, s, sysd, stacked, a_trail, a_lead):
    from .linalg import rref_nullspace
    from .ratfunc import RF_ONE

    kernel = rref_nullspace(
        stacked,
        RF_ZERO,
        RF_ONE,
        lambda v: v.is_zero(),
        lambda v: v.inverse(),
    )
    if not kernel:
        return None
    candidates = list(kernel)
    if len(kernel) > 1:
        acc = kernel[0]
        for vec in kernel[1:]:
            acc = [a + b for a, b in zip(acc, vec)]
        candidates.append(acc)

    def keyfun(vec):
        mults = sysd.build_u(vec)
        deg = sum(m.degree_q() + m.degree_x() for m in mults if not m.is_zero())
        return (deg, tuple(str(m) for m in mults))

    for vec in sorted(candidates, key=keyfun):
        res = _package(rec, c, s, sysd, vec)
        if res is not None:
            return res
    return None


def _package(rec, c, s, sysd, vec) -> Optional[BimonicResult]:
    mults = sysd.build_u(vec)
    if all(m.is_zero() for m in mults):
        return None
    combo = _combination_coeffs(rec, mults)
    coeffs = []
    for a in combo:
        if a.is_zero():
            coeffs.append(BIPOLY_ZERO)
            continue
        try:
            coeffs.append(a.divexact(c))
        except ArithmeticError:
            return None
    inhom, body = coeffs[0], coeffs[1:]
    if not body or body[0].is_zero() or body[-1].is_zero():
        return None
    trail = _monomial_shape(body[0])
    lead = _monomial_shape(body[-1])
    if trail is None or lead is None:
        return None
    ratio = lead[2] / trail[2]
    if ratio != 1 and ratio != -1:
        return None  # no rational rescaling makes both ends unit powers
    # rescale so the trailing coefficient is exactly +q^b y^a
    scale = trail[2]
    mults = [m.scale(1 / scale) for m in mults]
    inhom = inhom.scale(1 / scale)
    body = [l.scale(1 / scale) for l in body]
    res = BimonicResult(
        shifts=s,
        multipliers=tuple(mults),
        inhom=inhom,
        coeffs=tuple(body),
        removed=c,
        lead_exponents=(lead[0], lead[1]),
        trail_exponents=(trail[0], trail[1]),
        lead_sign=1 if ratio == 1 else -1,
        trail_sign=1,
    )
    if not verify_bimonic(rec, res):
        return None
    return res


def bimonic_search(
    rec: InhomRec,
    s_max: int = 12,
    widen_max: int = 3,
    c: Optional[BiPoly] = None,
) -> Optional[BimonicResult]:
    """Schedule over shift counts s = 0..s_max with widening exponent windows.

    Window heights start at deg_y(c) (the multipliers divide monomial
    multiples of c's cofactors in the extreme coefficients) and grow by one
    on each failure.  The first verified solution wins; the post-check in
    bimonic_guess makes any returned result unconditionally sound.
    """
    if c is None:
        c, _, _ = target_factor(rec)
    base = max(c.degree_x(), 1)
    for s in range(s_max + 1):
        for widen in range(widen_max + 1):
            windows = [(0, base + widen)] * (s + 1)
            res = bimonic_guess(rec, c, s, windows)
            if res is not None:
                return res
    return None


@dataclass
class LaurentSeq:
    entries: Dict[int, RatFuncQ]
    certified: Dict[int, bool]

    def certified_range(self) -> Tuple[int, int]:
        ns = sorted(self.entries)
        return (ns[0], ns[-1]) if ns else (0, -1)


def unroll(
    rec,
    initial: Dict[int, RatFuncQ],
    start: int,
    stop: int,
) -> LaurentSeq:
    """Extend initial values to [start, stop] in both directions, exactly.

    Forward steps divide by the top coefficient, backward steps by the
    trailing one; an evaluation hitting a zero pivot reports the failing n.
    """
    if isinstance(rec, BimonicResult):
        rec = rec.to_rec()
    if stop < start:
        raise PreconditionError("empty range")
    r = rec.order
    entries: Dict[int, RatFuncQ] = dict(initial)

    def value(n: int) -> RatFuncQ:
        if n not in entries:
            raise PreconditionError("missing initial value at n = %d" % n)
        return entries[n]

    known = sorted(entries)
    if not known:
        raise PreconditionError("no initial values supplied")
    hi, lo = known[-1], known[0]
    while hi < stop:
        n = hi + 1 - r
        pivot = rec.coeffs[-1].eval_x_qpow(n)
        if pivot.is_zero():
            raise PreconditionError(
                "top coefficient vanishes at n = %d; cannot step forward" % n
            )
        acc = rec.inhom.eval_x_qpow(n)
        for i in range(r):
            pi = rec.coeffs[i]
            if not pi.is_zero():
                acc = acc + pi.eval_x_qpow(n) * value(n + i)
        entries[hi + 1] = -(acc / pivot)
        hi += 1
    while lo > start:
        n = lo - 1
        pivot = rec.coeffs[0].eval_x_qpow(n)
        if pivot.is_zero():
            raise PreconditionError(
                "trailing coefficient vanishes at n = %d; cannot step backward" % n
            )
        acc = rec.inhom.eval_x_qpow(n)
        for i in range(1, r + 1):
            pi = rec.coeffs[i]
            if not pi.is_zero():
                acc = acc + pi.eval_x_qpow(n) * value(n + i)
        entries[n] = -(acc / pivot)
        lo -= 1
    entries = {n: v for n, v in entries.items() if start <= n <= stop}
    certified = {n: v.is_laurent() for n, v in entries.items()}
    return LaurentSeq(entries, certified)


@dataclass(frozen=True)
class PalindromyReport:
    alpha: int
    beta: int
    gamma: int
    sign: int
    inhom_alpha: Optional[int] = None
    inhom_gamma: Optional[int] = None
    inhom_sign: Optional[int] = None


def _fit_exponent_plane(samples):
    """Solve e = alpha*j + beta*i + gamma exactly over the integer samples."""
    from .rationals import Rational

    eqs = [(j, i, 1, e) for (i, j), e in samples]
    # Gaussian elimination over Q on up to three unknowns
    cols = 3
    rows = [list(map(Rational, eq[:3])) + [Rational(eq[3])] for eq in eqs]
    piv = []
    rr = 0
    for ccol in range(cols):
        sel = None
        for i in range(rr, len(rows)):
            if rows[i][ccol] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[rr], rows[sel] = rows[sel], rows[rr]
        inv = 1 / rows[rr][ccol]
        rows[rr] = [v * inv for v in rows[rr]]
        for i in range(len(rows)):
            if i != rr and rows[i][ccol] != 0:
                f = rows[i][ccol]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rr])]
        piv.append(ccol)
        rr += 1
    sol = [Rational(0)] * cols
    for idx, ccol in enumerate(piv):
        sol[ccol] = rows[idx][3]
    for i in range(rr, len(rows)):
        if rows[i][3] != 0:
            return None
    if any(v.denominator != 1 for v in sol):
        return None
    a, b, g = (int(v) for v in sol)
    for (i, j), e in samples:
        if a * j + b * i + g != e:
            return None
    return a, b, g


def palindromy_check(res) -> Optional[PalindromyReport]:
    """Detect coefficient symmetry l_{i,j} = sign * q**(alpha j + beta i + gamma)
    * l_{S-i, J-j} across the homogeneous coefficients (J = support reflection
    point), plus the analogous one-index relation on the inhomogeneous part."""
    body = list(res.coeffs) if isinstance(res, BimonicResult) else list(res.coeffs)
    inhom = res.inhom
    S = len(body) - 1
    ymin, ymax = None, None
    for l in body:
        if l.is_zero():
            continue
        lo, hi = l.x_valuation(), l.degree_x()
        ymin = lo if ymin is None else min(ymin, lo)
        ymax = hi if ymax is None else max(ymax, hi)
    if ymin is None:
        return None
    J = ymin + ymax
    samples = []
    sign = None
    for i, l in enumerate(body):
        for j in range(0, max(J, l.degree_x()) + 1):
            cij = l.coeff_x(j)
            partner = body[S - i].coeff_x(J - j) if J - j >= 0 else cij.__class__()
            if cij.is_zero() and partner.is_zero():
                continue
            if cij.is_zero() or partner.is_zero():
                return None
            e = cij.degree - partner.degree
            ratio_sign = 1 if cij.lc() == partner.lc() else (-1 if cij.lc() == -partner.lc() else 0)
            if ratio_sign == 0:
                return None
            shifted = partner.shift(e) if e >= 0 else partner
            base = cij if e >= 0 else cij.shift(-e)
            if base != shifted.scale(ratio_sign):
                return None
            if sign is None:
                sign = ratio_sign
            elif sign != ratio_sign:
                return None
            samples.append(((i, j), e))
    fit = _fit_exponent_plane(samples)
    if fit is None:
        return None
    alpha, beta, gamma = fit
    report = PalindromyReport(alpha, beta, gamma, sign)
    if inhom.is_zero():
        return report
    lo, hi = inhom.x_valuation(), inhom.degree_x()
    Jp = lo + hi
    samples2 = []
    sign2 = None
    for j in range(hi + 1):
        cj = inhom.coeff_x(j)
        pj = inhom.coeff_x(Jp - j) if Jp - j >= 0 else cj.__class__()
        if cj.is_zero() and pj.is_zero():
            continue
        if cj.is_zero() or pj.is_zero():
            return report
        e = cj.degree - pj.degree
        rs = 1 if cj.lc() == pj.lc() else (-1 if cj.lc() == -pj.lc() else 0)
        if rs == 0:
            return report
        shifted = pj.shift(e) if e >= 0 else pj
        base = cj if e >= 0 else cj.shift(-e)
        if base != shifted.scale(rs):
            return report
        if sign2 is None:
            sign2 = rs
        elif sign2 != rs:
            return report
        samples2.append(((0, j), e))
    fit2 = _fit_exponent_plane(samples2)
    if fit2 is None:
        return report
    return PalindromyReport(
        alpha,
        beta,
        gamma,
        sign,
        inhom_alpha=fit2[0],
        inhom_gamma=fit2[2],
        inhom_sign=sign2,
    )


def support_profile(rec) -> List[Tuple[int, List[int]]]:
    """(coefficient index, sorted q**n-exponents present), index -1 first."""
    if isinstance(rec, BimonicResult):
        rec = rec.to_rec()
    out = [(-1, rec.inhom.x_support())]
    for i, p in enumerate(rec.coeffs):
        out.append((i, p.x_support()))
    return out
