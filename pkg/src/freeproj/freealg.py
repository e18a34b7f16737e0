"""Words, graded noncommutative polynomials, and graded free modules.

The base ring is the free algebra on d letters x_0..x_{d-1}, graded by word
length.  Words are plain tuples of letter indices; polynomials map words to
nonzero field elements.  A graded free module is described by its tuple of
shift degrees (b_1,..,b_s), meaning the direct sum of copies of the ring
with generator e_alpha placed in degree b_alpha.

Monomials of a module element are pairs (alpha, word); the term order is
length-then-lex on the word with the coordinate as tiebreak.  This order is
stable under left multiplication by words, which is what the submodule
machinery relies on.
"""

from __future__ import annotations

import itertools

from .fields import QQ
from .linalg import SparseMatrix

Word = tuple  # words are plain tuples of letter indices


def term_key(mon):
    """Well-order on module monomials (alpha, word), stable under left mult."""
    alpha, w = mon
    return (len(w), w, alpha)


class FreeAlgebra:
    """The free algebra on d letters over an exact coefficient field."""

    __slots__ = ("d", "field")

    def __init__(self, d: int, field=QQ):
        if d < 1:
            raise ValueError("need at least one letter")
        self.d = d
        self.field = field

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and (self.d, self.field) == (other.d, other.field)

    def __hash__(self):
        return hash((self.d, self.field))

    def __repr__(self):
        return f"FreeAlgebra(d={self.d}, field={self.field!r})"

    # -- element constructors ------------------------------------------------

    def poly(self, terms) -> "NcPoly":
        """Build a polynomial from {word: coefficient}; zeros are dropped."""
        clean = {}
        for w, c in dict(terms).items():
            c = self.field.coerce(c)
            if c != 0:
                self._check_word(w)
                clean[tuple(w)] = c
        return NcPoly(self, clean)

    def zero(self) -> "NcPoly":
        return NcPoly(self, {})

    def one(self) -> "NcPoly":
        return NcPoly(self, {(): self.field.one})

    def gen(self, i: int) -> "NcPoly":
        if not 0 <= i < self.d:
            raise ValueError(f"letter index {i} out of range")
        return NcPoly(self, {(i,): self.field.one})

    def monomial(self, word) -> "NcPoly":
        return self.poly({tuple(word): self.field.one})

    def from_str(self, text: str) -> "NcPoly":
        from .parsing import parse_poly

        return parse_poly(self, text)

    def _check_word(self, w):
        if any(not (0 <= i < self.d) for i in w):
            raise ValueError(f"word {w} has letters outside 0..{self.d - 1}")

    # -- word bookkeeping ----------------------------------------------------

    def words(self, length: int):
        """All words of the given length in lex order."""
        if length < 0:
            return
        yield from itertools.product(range(self.d), repeat=length)

    def word_count(self, length: int) -> int:
        return self.d**length if length >= 0 else 0

    def word_rank(self, w) -> int:
        """Lex rank among words of the same length (first letter most significant)."""
        r = 0
        for i in w:
            r = r * self.d + i
        return r

    def word_unrank(self, rank: int, length: int):
        digits = []
        for _ in range(length):
            rank, i = divmod(rank, self.d)
            digits.append(i)
        return tuple(reversed(digits))

    def free_module(self, shifts) -> "GradedFreeModule":
        return GradedFreeModule(self, shifts)


class NcPoly:
    """A noncommutative polynomial: finitely many words with nonzero coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        lengths = {len(w) for w in self.terms}
        return len(lengths) <= 1

    def degree(self):
        """Degree of a homogeneous polynomial; None for 0."""
        if not self.terms:
            return None
        lengths = {len(w) for w in self.terms}
        if len(lengths) > 1:
            raise ValueError("polynomial is not homogeneous")
        return lengths.pop()

    def coefficient(self, word):
        return self.terms.get(tuple(word), self.algebra.field.zero)

    def __add__(self, other):
        F = self.algebra.field
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = F.add(out.get(w, F.zero), c)
            if s == 0:
                out.pop(w, None)
            else:
                out[w] = s
        return NcPoly(self.algebra, out)

    def __neg__(self):
        F = self.algebra.field
        return NcPoly(self.algebra, {w: F.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.algebra.field
        c = F.coerce(c)
        if c == 0:
            return NcPoly(self.algebra, {})
        return NcPoly(self.algebra, {w: F.mul(c, v) for w, v in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product, extended bilinearly."""
        if not isinstance(other, NcPoly):
            return self.scale(other)
        F = self.algebra.field
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = F.add(out.get(w, F.zero), F.mul(c1, c2))
                if s == 0:
                    out.pop(w, None)
                else:
                    out[w] = s
        return NcPoly(self.algebra, out)

    def __rmul__(self, other):
        return self.scale(other)

    def reversed(self) -> "NcPoly":
        """Image under the word-reversal anti-automorphism."""
        return NcPoly(self.algebra, {tuple(reversed(w)): c for w, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, NcPoly)
            and self.algebra == other.algebra
            and self.terms == other.terms
        )

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def __repr__(self):
        return f"NcPoly({self})"


class GradedFreeModule:
    """A finite free graded module, given by the degrees of its generators."""

    __slots__ = ("algebra", "shifts", "_basis_cache")

    def __init__(self, algebra: FreeAlgebra, shifts):
        self.algebra = algebra
        self.shifts = tuple(int(b) for b in shifts)
        self._basis_cache = {}

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def graded_piece_dim(self, j: int) -> int:
        d = self.algebra.d
        return sum(d ** (j - b) for b in self.shifts if b <= j)

    def monomial_basis(self, j: int):
        """The canonical basis of the degree-j piece: (alpha, word) pairs,
        coordinates in order and words in lex order within each coordinate."""
        if j in self._basis_cache:
            return self._basis_cache[j]
        basis = []
        for alpha, b in enumerate(self.shifts):
            if b <= j:
                basis.extend((alpha, w) for w in self.algebra.words(j - b))
        basis = tuple(basis)
        self._basis_cache[j] = basis
        return basis

    def basis_index(self, j: int):
        """Dict mapping each degree-j monomial to its basis position."""
        return {mon: k for k, mon in enumerate(self.monomial_basis(j))}

    # -- element constructors ------------------------------------------------

    def zero(self) -> "FreeModuleElement":
        return FreeModuleElement(self, {})

    def gen(self, alpha: int) -> "FreeModuleElement":
        return FreeModuleElement(self, {(alpha, ()): self.algebra.field.one})

    def element(self, terms) -> "FreeModuleElement":
        F = self.algebra.field
        clean = {}
        for (alpha, w), c in dict(terms).items():
            c = F.coerce(c)
            if c != 0:
                if not 0 <= alpha < self.rank:
                    raise ValueError(f"coordinate {alpha} out of range")
                self.algebra._check_word(w)
                clean[(alpha, tuple(w))] = c
        return FreeModuleElement(self, clean)

    def from_polys(self, polys) -> "FreeModuleElement":
        """Element from a vector of polynomials, one per coordinate."""
        polys = list(polys)
        if len(polys) != self.rank:
            raise ValueError("vector length does not match rank")
        terms = {}
        for alpha, p in enumerate(polys):
            for w, c in p.terms.items():
                terms[(alpha, w)] = c
        return FreeModuleElement(self, terms)

    def shifted(self, m: int) -> "GradedFreeModule":
        """The twist by m: degrees drop by m, so shifts b become b - m."""
        return GradedFreeModule(self.algebra, tuple(b - m for b in self.shifts))

    def direct_sum(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.algebra, self.shifts + other.shifts)

    def __eq__(self, other):
        return (
            isinstance(other, GradedFreeModule)
            and self.algebra == other.algebra
            and self.shifts == other.shifts
        )

    def __hash__(self):
        return hash((self.algebra, self.shifts))

    def __repr__(self):
        return f"GradedFreeModule(shifts={self.shifts}, d={self.algebra.d})"


class FreeModuleElement:
    """An element of a graded free module, stored as {(alpha, word): coeff}."""

    __slots__ = ("module", "terms")

    def __init__(self, module: GradedFreeModule, terms: dict):
        self.module = module
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degs = {len(w) + self.module.shifts[alpha] for alpha, w in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Degree of a homogeneous element; None for 0."""
        if not self.terms:
            return None
        degs = {len(w) + self.module.shifts[alpha] for alpha, w in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def leading_term(self):
        """((alpha, word), coeff) at the maximal monomial."""
        mon = max(self.terms, key=term_key)
        return mon, self.terms[mon]

    def __add__(self, other):
        F = self.module.algebra.field
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = F.add(out.get(mon, F.zero), c)
            if s == 0:
                out.pop(mon, None)
            else:
                out[mon] = s
        return FreeModuleElement(self.module, out)

    def __neg__(self):
        F = self.module.algebra.field
        return FreeModuleElement(self.module, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.module.algebra.field
        c = F.coerce(c)
        if c == 0:
            return FreeModuleElement(self.module, {})
        return FreeModuleElement(self.module, {m: F.mul(c, v) for m, v in self.terms.items()})

    def word_mul(self, u) -> "FreeModuleElement":
        """Left multiplication by a word."""
        u = tuple(u)
        return FreeModuleElement(
            self.module, {(alpha, u + w): c for (alpha, w), c in self.terms.items()}
        )

    def poly_mul(self, p: NcPoly) -> "FreeModuleElement":
        """Left multiplication by a polynomial."""
        F = self.module.algebra.field
        out: dict = {}
        for u, a in p.terms.items():
            for (alpha, w), c in self.terms.items():
                mon = (alpha, u + w)
                s = F.add(out.get(mon, F.zero), F.mul(a, c))
                if s == 0:
                    out.pop(mon, None)
                else:
                    out[mon] = s
        return FreeModuleElement(self.module, out)

    def coords_in_degree(self, j: int) -> dict:
        """Sparse coordinate row w.r.t. the degree-j monomial basis."""
        index = self.module.basis_index(j)
        out = {}
        for mon, c in self.terms.items():
            if mon in index:
                out[index[mon]] = c
            else:
                raise ValueError(f"term {mon} is not of degree {j}")
        return out

    def polys(self) -> list:
        """The element as a vector of polynomials."""
        A = self.module.algebra
        vecs = [{} for _ in range(self.module.rank)]
        for (alpha, w), c in self.terms.items():
            vecs[alpha][w] = c
        return [NcPoly(A, v) for v in vecs]

    def __eq__(self, other):
        return (
            isinstance(other, FreeModuleElement)
            and self.module == other.module
            and self.terms == other.terms
        )

    def __str__(self):
        if not self.terms:
            return "(0)"
        return "(" + ", ".join(str(p) for p in self.polys()) + ")"

    def __repr__(self):
        return f"FreeModuleElement{self}"


class ModuleMap:
    """A degree-preserving map between graded free modules.

    The matrix is stored source-major: row alpha lists the coordinates of the
    image of the source generator e_alpha, so entry (alpha, beta) must be
    homogeneous of degree shifts_src[alpha] - shifts_tgt[beta].
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: GradedFreeModule, target: GradedFreeModule, matrix):
        if source.algebra != target.algebra:
            raise ValueError("source and target live over different algebras")
        self.source = source
        self.target = target
        rows = []
        for alpha, row in enumerate(matrix):
            row = tuple(row)
            if len(row) != target.rank:
                raise ValueError("matrix row length does not match target rank")
            for beta, p in enumerate(row):
                if p.is_zero():
                    continue
                want = source.shifts[alpha] - target.shifts[beta]
                if p.degree() != want:
                    raise ValueError(
                        f"entry ({alpha},{beta}) has degree {p.degree()}, expected {want}"
                    )
            rows.append(row)
        if len(rows) != source.rank:
            raise ValueError("matrix row count does not match source rank")
        self.matrix = tuple(rows)

    @classmethod
    def from_columns(cls, source, target, columns):
        """Build from target-major data (one column per source generator)."""
        matrix = [list(col) for col in columns]
        return cls(source, target, matrix)

    @classmethod
    def zero(cls, source, target):
        z = source.algebra.zero()
        return cls(source, target, [[z] * target.rank for _ in range(source.rank)])

    @classmethod
    def identity(cls, module):
        A = module.algebra
        rows = [
            [A.one() if i == j else A.zero() for j in range(module.rank)]
            for i in range(module.rank)
        ]
        return cls(module, module, rows)

    def row_elements(self) -> list:
        """Images of the source generators."""
        return [self.target.from_polys(row) for row in self.matrix]

    def apply(self, elem: FreeModuleElement) -> FreeModuleElement:
        if elem.module != self.source:
            raise ValueError("element not in the source module")
        out = self.target.zero()
        vecs = elem.polys()
        for alpha, p in enumerate(vecs):
            if p.is_zero():
                continue
            for beta, q in enumerate(self.matrix[alpha]):
                if not q.is_zero():
                    prod = p * q
                    out = out + FreeModuleElement(
                        self.target, {(beta, w): c for w, c in prod.terms.items()}
                    )
        return out

    def map_in_degree(self, j: int) -> SparseMatrix:
        """The degree-j realization in the canonical monomial bases.

        Rows are indexed by the source basis, columns by the target basis,
        acting on row vectors.
        """
        F = self.source.algebra.field
        src_basis = self.source.monomial_basis(j)
        tgt_index = self.target.basis_index(j)
        rows = []
        for alpha, u in src_basis:
            row = {}
            for beta, q in enumerate(self.matrix[alpha]):
                for w, c in q.terms.items():
                    k = tgt_index[(beta, u + w)]
                    row[k] = F.add(row.get(k, F.zero), c) if k in row else c
                    if row[k] == 0:
                        del row[k]
            rows.append(row)
        return SparseMatrix(F, len(src_basis), len(tgt_index), rows)

    def compose(self, then: "ModuleMap") -> "ModuleMap":
        """self followed by `then`."""
        if self.target != then.source:
            raise ValueError("maps are not composable")
        A = self.source.algebra
        rows = []
        for alpha in range(self.source.rank):
            row = []
            for gamma in range(then.target.rank):
                acc = A.zero()
                for beta in range(self.target.rank):
                    p, q = self.matrix[alpha][beta], then.matrix[beta][gamma]
                    if not p.is_zero() and not q.is_zero():
                        acc = acc + p * q
                row.append(acc)
            rows.append(row)
        return ModuleMap(self.source, then.target, rows)

    def __eq__(self, other):
        return (
            isinstance(other, ModuleMap)
            and self.source == other.source
            and self.target == other.target
            and self.matrix == other.matrix
        )

    def __repr__(self):
        return f"ModuleMap({self.source.shifts} -> {self.target.shifts})"


def graded_piece_dim(module: GradedFreeModule, j: int) -> int:
    return module.graded_piece_dim(j)


def monomial_basis(module: GradedFreeModule, j: int):
    return module.monomial_basis(j)


def map_in_degree(phi: ModuleMap, j: int) -> SparseMatrix:
    return phi.map_in_degree(j)
