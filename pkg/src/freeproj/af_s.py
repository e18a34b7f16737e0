"""The direct limit of matrix algebras M_d(k) tensor ... tensor M_d(k).

An element is a d^r x d^r matrix at some level r, with rows and columns
indexed by words of length r in lex order.  The transition to the next level
tensors an identity factor on as the new FIRST index, so at the matrix level
it is the block-diagonal embedding a -> diag(a,..,a).  Two representatives
are identified when they agree after embedding; the canonical form is the
least-level representative.

The normalized trace tr / d^r and the normalized rank rank / d^r are both
invariant under the embedding; the latter computes the class of an
idempotent in the dyadic-style group Z[1/d].
"""

from __future__ import annotations

from fractions import Fraction

from .errors import LevelDecrease, NotIdempotent, ZeroElement
from .fields import QQ
from .linalg import (
    dense_add,
    dense_identity,
    dense_mul,
    dense_rank,
    dense_scale,
    dense_sub,
    rank_factorization,
)


class AFMatrix:
    """A leveled matrix representative of an element of the limit algebra."""

    __slots__ = ("d", "field", "level", "entries")

    def __init__(self, d: int, level: int, entries, field=QQ):
        if d < 1 or level < 0:
            raise ValueError("need d >= 1 and level >= 0")
        n = d**level
        entries = tuple(tuple(field.coerce(v) for v in row) for row in entries)
        if len(entries) != n or any(len(row) != n for row in entries):
            raise ValueError(f"expected a {n}x{n} matrix at level {level}")
        self.d = d
        self.field = field
        self.level = level
        self.entries = entries

    # -- constructors ---------------------------------------------------------

    @classmethod
    def scalar(cls, d: int, value, field=QQ) -> "AFMatrix":
        return cls(d, 0, [[field.coerce(value)]], field)

    @classmethod
    def zero(cls, d: int, level: int = 0, field=QQ) -> "AFMatrix":
        n = d**level
        return cls(d, level, [[field.zero] * n for _ in range(n)], field)

    @classmethod
    def identity(cls, d: int, level: int = 0, field=QQ) -> "AFMatrix":
        return cls(d, level, dense_identity(field, d**level), field)

    @classmethod
    def matrix_unit(cls, d: int, u, v, field=QQ) -> "AFMatrix":
        """E_{u,v} for words u, v of equal length."""
        u, v = tuple(u), tuple(v)
        if len(u) != len(v):
            raise ValueError("matrix unit needs words of equal length")
        level = len(u)
        n = d**level
        rows = [[field.zero] * n for _ in range(n)]
        rows[word_rank(d, u)][word_rank(d, v)] = field.one
        return cls(d, level, rows, field)

    # -- level handling ---------------------------------------------------------

    def embed(self, level: int) -> "AFMatrix":
        """The same element at a higher level: iterated identity-tensor."""
        if level < self.level:
            raise LevelDecrease(f"cannot embed level {self.level} down to {level}")
        out = self
        while out.level < level:
            n = out.d**out.level
            z = out.field.zero
            size = n * out.d
            rows = [[z] * size for _ in range(size)]
            for blk in range(out.d):
                off = blk * n
                for i in range(n):
                    row = rows[off + i]
                    src = out.entries[i]
                    for j in range(n):
                        row[off + j] = src[j]
            out = AFMatrix(out.d, out.level + 1, rows, out.field)
        return out

    def canonical(self) -> "AFMatrix":
        """Least-level representative: peel off identity tensor factors."""
        out = self
        while out.level > 0:
            d, n = out.d, out.d ** (out.level - 1)
            ok = True
            for bi in range(d):
                for bj in range(d):
                    block_should_vanish = bi != bj
                    for i in range(n):
                        for j in range(n):
                            v = out.entries[bi * n + i][bj * n + j]
                            if block_should_vanish:
                                if v != 0:
                                    ok = False
                                    break
                            elif v != out.entries[i][j]:
                                ok = False
                                break
                        if not ok:
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                return out
            out = AFMatrix(d, out.level - 1, [row[:n] for row in out.entries[:n]], out.field)
        return out

    def _common(self, other: "AFMatrix"):
        if (self.d, self.field) != (other.d, other.field):
            raise ValueError("elements live in different limit algebras")
        r = max(self.level, other.level)
        return self.embed(r), other.embed(r)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        a, b = self._common(other)
        return AFMatrix(a.d, a.level, dense_add(a.field, a.entries, b.entries), a.field).canonical()

    def __sub__(self, other):
        a, b = self._common(other)
        return AFMatrix(a.d, a.level, dense_sub(a.field, a.entries, b.entries), a.field).canonical()

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def __mul__(self, other):
        if not isinstance(other, AFMatrix):
            return self.scale(other)
        a, b = self._common(other)
        return AFMatrix(a.d, a.level, dense_mul(a.field, a.entries, b.entries), a.field).canonical()

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "AFMatrix":
        c = self.field.coerce(c)
        return AFMatrix(
            self.d, self.level, dense_scale(self.field, c, self.entries), self.field
        ).canonical()

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def __eq__(self, other):
        if not isinstance(other, AFMatrix):
            return NotImplemented
        if (self.d, self.field) != (other.d, other.field):
            return False
        a, b = self._common(other)
        return a.entries == b.entries

    def __repr__(self):
        return f"AFMatrix(d={self.d}, level={self.level})"

    # -- invariants ----------------------------------------------------------------

    def rank(self) -> int:
        return dense_rank(self.field, [list(r) for r in self.entries])

    def normalized_trace(self) -> Fraction:
        tr = sum(Fraction(self.entries[i][i]) for i in range(len(self.entries)))
        return tr / Fraction(self.d) ** self.level

    def k0_class(self):
        """rank(e) * d^(-level) for an idempotent e, as a class in Z[1/d]."""
        from .qgr import QgrClass

        if self * self != self:
            raise NotIdempotent("k0_class requires an idempotent")
        value = Fraction(self.rank()) / Fraction(self.d) ** self.level
        return QgrClass.from_fraction(value, self.d)

    def vn_regular_witness(self) -> "AFMatrix":
        """An x with a*x*a = a, from a rank factorization and one-sided inverses."""
        if self.is_zero():
            return AFMatrix.zero(self.d, self.level, self.field)
        F = self.field
        A = [list(r) for r in self.entries]
        B, C = rank_factorization(F, A)
        L = _left_inverse(F, B)
        Rinv = _right_inverse(F, C)
        return AFMatrix(self.d, self.level, dense_mul(F, Rinv, L), F)

    def simplicity_witness(self):
        """Rows (u_i), (v_i) with sum u_i * a * v_i = 1, witnessing simplicity.

        With a_{pq} the first nonzero entry, u_i = E_{i,p} / a_{pq} and
        v_i = E_{q,i} give sum_i E_{i,p} a E_{q,i} / a_{pq} = identity.
        """
        if self.is_zero():
            raise ZeroElement("no simplicity witness for 0")
        F = self.field
        n = self.d**self.level
        p, q = next(
            (i, j) for i in range(n) for j in range(n) if self.entries[i][j] != 0
        )
        inv = F.invert(self.entries[p][q])
        us = []
        vs = []
        for i in range(n):
            wi = word_unrank(self.d, i, self.level)
            wp = word_unrank(self.d, p, self.level)
            wq = word_unrank(self.d, q, self.level)
            us.append(AFMatrix.matrix_unit(self.d, wi, wp, F).scale(inv))
            vs.append(AFMatrix.matrix_unit(self.d, wq, wi, F))
        return us, vs

    # -- serialization ----------------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for i, row in enumerate(self.entries):
            for j, v in enumerate(row):
                if v != 0:
                    entries.append([i, j, self.field.to_str(v)])
        return {"d": self.d, "level": self.level, "entries": entries}

    @classmethod
    def from_json(cls, data: dict, field=QQ) -> "AFMatrix":
        d = int(data["d"])
        level = int(data["level"])
        n = d**level
        rows = [[field.zero] * n for _ in range(n)]
        for i, j, s in data["entries"]:
            rows[int(i)][int(j)] = field.from_str(str(s))
        return cls(d, level, rows, field)


def word_rank(d: int, w) -> int:
    """Lex rank of a word among words of its length (first letter most significant)."""
    r = 0
    for i in w:
        if not 0 <= i < d:
            raise ValueError(f"letter {i} out of range")
        r = r * d + i
    return r


def word_unrank(d: int, rank: int, length: int):
    digits = []
    for _ in range(length):
        rank, i = divmod(rank, d)
        digits.append(i)
    return tuple(reversed(digits))


def _left_inverse(field, B):
    """L with L*B = I for a full-column-rank B."""
    n, k = len(B), len(B[0])
    # reduce [B | I_n]; the transform rows at the pivot positions invert B
    from .linalg import SparseMatrix, row_reduce

    mat = SparseMatrix.from_dense(field, B)
    pivots, reduced, trans = row_reduce(mat, want_transform=True)
    if len(pivots) != k:
        raise ValueError("matrix does not have full column rank")
    z = field.zero
    L = []
    for col in range(k):
        ri = next(r for r, c in pivots if c == col)
        L.append([trans[ri].get(j, z) for j in range(n)])
    return L


def _right_inverse(field, C):
    """X with C*X = I for a full-row-rank C."""
    Ct = [list(r) for r in zip(*C)]
    Lt = _left_inverse(field, Ct)
    return [list(r) for r in zip(*Lt)]


def embed(a: AFMatrix, level: int) -> AFMatrix:
    return a.embed(level)


def canonical_level(a: AFMatrix) -> AFMatrix:
    return a.canonical()
