"""Matrices over K(q)[x]: Hermite normal form with transform, kernels.

The Hermite form is the workhorse behind submodule bases: for U*N = H with U
unimodular, the rows of U facing zero rows of H are a free basis of the left
kernel lattice {v polynomial : v*N = 0}.
"""

from __future__ import annotations

from typing import List, Tuple

from .ratfunc import RF_ONE, RF_ZERO, RatFuncQ
from .xpoly import POLYX_ONE, POLYX_ZERO, PolyX, RatX


class PolyMatrix:
    """Rectangular matrix with PolyX entries."""

    __slots__ = ("rows", "cols", "m")

    def __init__(self, entries: List[List[PolyX]]):
        self.m = [list(row) for row in entries]
        self.rows = len(self.m)
        self.cols = len(self.m[0]) if self.m else 0
        for row in self.m:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "PolyMatrix":
        return PolyMatrix(
            [[POLYX_ONE if i == j else POLYX_ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix([[POLYX_ZERO] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.m[i][j]

    def __eq__(self, other):
        if isinstance(other, PolyMatrix):
            return self.m == other.m
        return NotImplemented

    def copy(self) -> "PolyMatrix":
        return PolyMatrix(self.m)

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = POLYX_ZERO
                for k in range(self.cols):
                    a, b = self.m[i][k], other.m[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def det_cofactor(self) -> PolyX:
        """Determinant by cofactor expansion (small matrices only)."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return POLYX_ONE
        if n == 1:
            return self.m[0][0]
        acc = POLYX_ZERO
        for j in range(n):
            a = self.m[0][j]
            if a.is_zero():
                continue
            minor = PolyMatrix(
                [[self.m[i][k] for k in range(n) if k != j] for i in range(1, n)]
            )
            term = a * minor.det_cofactor()
            acc = acc - term if j % 2 else acc + term
        return acc

    def __repr__(self):
        return "PolyMatrix(%d x %d)" % (self.rows, self.cols)


def hnf_with_transform(N: PolyMatrix) -> Tuple[PolyMatrix, PolyMatrix]:
    """Row Hermite normal form over K(q)[x].

    Returns (H, U) with U unimodular (det in K(q) minus zero), U*N = H, H in
    row-echelon form with pivots monic in x and entries above each pivot of
    strictly smaller x-degree.  Deterministic: the pivot is the topmost row
    of minimal pivot-entry degree.
    """
    H = [list(row) for row in N.m]
    rows, cols = N.rows, N.cols
    U = [[POLYX_ONE if i == j else POLYX_ZERO for j in range(rows)] for i in range(rows)]

    def rowop_sub(dst, src, quot):
        # row[dst] -= quot * row[src]
        for j in range(cols):
            if not H[src][j].is_zero():
                H[dst][j] = H[dst][j] - quot * H[src][j]
        for j in range(rows):
            if not U[src][j].is_zero():
                U[dst][j] = U[dst][j] - quot * U[src][j]

    def rowswap(i, j):
        if i != j:
            H[i], H[j] = H[j], H[i]
            U[i], U[j] = U[j], U[i]

    def rowscale(i, unit: RatFuncQ):
        H[i] = [e.scale(unit) for e in H[i]]
        U[i] = [e.scale(unit) for e in U[i]]

    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        while True:
            cands = [i for i in range(pivot_row, rows) if not H[i][col].is_zero()]
            if not cands:
                break
            best = min(cands, key=lambda i: (H[i][col].degree, i))
            if len(cands) == 1:
                break
            for i in cands:
                if i == best:
                    continue
                quot = H[i][col] // H[best][col]
                if quot.is_zero():
                    continue
                rowop_sub(i, best, quot)
            # rows equal in degree to the pivot now dropped degree or vanished;
            # loop until a single nonzero candidate remains
            remaining = [i for i in range(pivot_row, rows) if not H[i][col].is_zero()]
            if len(remaining) <= 1:
                break
        cands = [i for i in range(pivot_row, rows) if not H[i][col].is_zero()]
        if not cands:
            continue
        best = min(cands, key=lambda i: (H[i][col].degree, i))
        rowswap(pivot_row, best)
        lc = H[pivot_row][col].lc()
        if not lc.is_one():
            rowscale(pivot_row, lc.inverse())
        for i in range(pivot_row):
            if H[i][col].degree >= H[pivot_row][col].degree:
                quot = H[i][col] // H[pivot_row][col]
                if not quot.is_zero():
                    rowop_sub(i, pivot_row, quot)
        pivot_row += 1

    return PolyMatrix(H), PolyMatrix(U)


def kernel_rows(N: PolyMatrix) -> List[List[PolyX]]:
    """Free basis of {v in K(q)[x]^rows : v * N = 0} from the Hermite transform."""
    H, U = hnf_with_transform(N)
    out = []
    for i in range(N.rows):
        if all(H.m[i][j].is_zero() for j in range(N.cols)):
            out.append(list(U.m[i]))
    return out


def rref_nullspace(rows: List[List], zero, one, is_zero, inv) -> List[List]:
    """Nullspace basis of a matrix over any exact field.

    `rows` are lists of field elements supporting +, -, *.  `inv` returns the
    multiplicative inverse, `is_zero` tests for zero.  Returns one basis
    vector per free column (deterministic: columns scanned left to right).
    """
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if not is_zero(mat[i][c]):
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv_inv = inv(mat[r][c])
        mat[r] = [v * piv_inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [zero] * ncols
        for pi, pc in enumerate(pivots):
            vec[pc] = zero - mat[pi][fc]
        vec[fc] = one
        basis.append(vec)
    return basis
