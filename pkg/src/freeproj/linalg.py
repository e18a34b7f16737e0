"""Exact linear algebra over a coefficient field.

Everything here is plain Gauss-Jordan elimination, kept exact by working
with the field's own arithmetic.  Two representations are used:

* sparse: a matrix is a list of rows, each row a dict {column: nonzero value},
  plus an explicit column count.  All degreewise module computations use this
  (the matrices realizing graded maps are extremely sparse).
* dense: a list of lists, used for the small leveled matrices of the
  limit algebra.

Row-vector convention throughout: a sparse matrix A represents the map
v -> v*A, so kernels are left kernels {v : v*A = 0}.
"""

from __future__ import annotations


class SparseMatrix:
    """An immutable sparse matrix over a field."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, nrows, ncols, rows):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = tuple(dict(r) for r in rows)
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")

    @classmethod
    def from_dense(cls, field, dense):
        rows = [{j: v for j, v in enumerate(row) if v != 0} for row in dense]
        ncols = len(dense[0]) if dense else 0
        return cls(field, len(dense), ncols, rows)

    @classmethod
    def zero(cls, field, nrows, ncols):
        return cls(field, nrows, ncols, [{} for _ in range(nrows)])

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    def dense(self):
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> "SparseMatrix":
        rows = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return SparseMatrix(self.field, self.ncols, self.nrows, rows)

    def mul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        F = self.field
        out = []
        for r in self.rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in other.rows[k].items():
                    s = F.add(acc.get(j, F.zero), F.mul(a, b))
                    if s == 0:
                        acc.pop(j, None)
                    else:
                        acc[j] = s
            out.append(acc)
        return SparseMatrix(F, self.nrows, other.ncols, out)

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols} over {self.field!r})"


def _row_axpy(field, target: dict, coef, source: dict):
    """target -= coef * source, in place, dropping zeros."""
    for j, v in source.items():
        s = field.sub(target.get(j, field.zero), field.mul(coef, v))
        if s == 0:
            target.pop(j, None)
        else:
            target[j] = s


def row_reduce(mat: SparseMatrix, want_transform=False):
    """Full Gauss-Jordan reduction.

    Returns (pivots, reduced, transform) where pivots is a list of
    (row, column) pairs, reduced holds the RREF rows, and transform (when
    requested) holds rows T with T*A = reduced.
    """
    F = mat.field
    work = [dict(r) for r in mat.rows]
    trans = [{i: F.one} for i in range(mat.nrows)] if want_transform else None
    pivots = []
    r = 0
    cols = sorted({j for row in work for j in row})
    for c in cols:
        pi = next((i for i in range(r, len(work)) if c in work[i]), None)
        if pi is None:
            continue
        work[r], work[pi] = work[pi], work[r]
        if trans is not None:
            trans[r], trans[pi] = trans[pi], trans[r]
        pv = work[r][c]
        if pv != F.one:
            inv = F.invert(pv)
            work[r] = {j: F.mul(inv, v) for j, v in work[r].items()}
            if trans is not None:
                trans[r] = {j: F.mul(inv, v) for j, v in trans[r].items()}
        for i in range(len(work)):
            if i != r and c in work[i]:
                coef = work[i][c]
                _row_axpy(F, work[i], coef, work[r])
                if trans is not None:
                    _row_axpy(F, trans[i], coef, trans[r])
        pivots.append((r, c))
        r += 1
    return pivots, work, trans


def rank(mat: SparseMatrix) -> int:
    pivots, _, _ = row_reduce(mat)
    return len(pivots)


def left_kernel(mat: SparseMatrix) -> SparseMatrix:
    """Basis of {v : v*A = 0}, one row per basis vector."""
    pivots, reduced, trans = row_reduce(mat, want_transform=True)
    null_rows = [trans[i] for i in range(mat.nrows) if not reduced[i]]
    return SparseMatrix(mat.field, len(null_rows), mat.nrows, null_rows)


def solve_left(mat: SparseMatrix, targets) -> list:
    """For each target row b, find x with x*A = b, or None if unsolvable."""
    F = mat.field
    pivots, reduced, trans = row_reduce(mat, want_transform=True)
    out = []
    for b in targets:
        res = dict(b)
        x: dict = {}
        for ri, c in pivots:
            if c in res:
                coef = res[c]
                _row_axpy(F, res, coef, reduced[ri])
                for j, v in trans[ri].items():
                    s = F.add(x.get(j, F.zero), F.mul(coef, v))
                    if s == 0:
                        x.pop(j, None)
                    else:
                        x[j] = s
        out.append(None if res else x)
    return out


# ---------------------------------------------------------------------------
# dense helpers for small matrices


def dense_identity(field, n):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def dense_mul(field, A, B):
    n, m = len(A), len(B[0]) if B else 0
    k = len(B)
    Bt = list(zip(*B)) if B else []
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            Bj = Bt[j]
            s = field.zero
            for t in range(k):
                a = Ai[t]
                if a != 0:
                    s = field.add(s, field.mul(a, Bj[t]))
            row.append(s)
        out.append(row)
    return out


def dense_scale(field, c, A):
    return [[field.mul(c, v) for v in row] for row in A]


def dense_add(field, A, B):
    return [[field.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def dense_sub(field, A, B):
    return [[field.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def kron(field, A, B):
    """Kronecker product; the A index is the more significant one."""
    if not A or not B:
        return []
    bn, bm = len(B), len(B[0])
    out = []
    for i in range(len(A)):
        for bi in range(bn):
            row = []
            for j in range(len(A[0])):
                a = A[i][j]
                if a == 0:
                    row.extend([field.zero] * bm)
                else:
                    row.extend(field.mul(a, B[bi][bj]) for bj in range(bm))
            out.append(row)
    return out


def dense_rank(field, A) -> int:
    if not A:
        return 0
    return rank(SparseMatrix.from_dense(field, A))


def dense_rref(field, A):
    """Returns (pivot columns, rref rows as dense lists)."""
    if not A:
        return [], []
    m = SparseMatrix.from_dense(field, A)
    pivots, reduced, _ = row_reduce(m)
    z = field.zero
    dense = [[r.get(j, z) for j in range(m.ncols)] for r in reduced]
    return [c for _, c in pivots], dense


def rank_factorization(field, A):
    """A = B*C with B of full column rank and C of full row rank.

    C is the nonzero part of the RREF of A and B the pivot columns of A;
    the factorization is exact over the field.
    """
    pivcols, rref_rows = dense_rref(field, A)
    k = len(pivcols)
    C = rref_rows[:k]
    B = [[A[i][c] for c in pivcols] for i in range(len(A))]
    return B, C


def dense_solve_left(field, A, b):
    """One row solve: x with x*A = b, or None."""
    m = SparseMatrix.from_dense(field, A)
    brow = {j: v for j, v in enumerate(b) if v != 0}
    (x,) = solve_left(m, [brow])
    if x is None:
        return None
    z = field.zero
    return [x.get(i, z) for i in range(len(A))]
