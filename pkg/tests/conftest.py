import pytest

from freeproj import FreeAlgebra
from freeproj.linalg import SparseMatrix, rank


@pytest.fixture
def A2():
    return FreeAlgebra(2)


@pytest.fixture
def A3():
    return FreeAlgebra(3)


def span_dim(gens, j):
    """Brute-force dimension of the degree-j piece of the left submodule
    generated by `gens`: rank of all word multiples, no weak algorithm."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    module = gens[0].module
    field = module.algebra.field
    rows = []
    for g in gens:
        a = g.degree()
        if a > j:
            continue
        for u in module.algebra.words(j - a):
            rows.append(g.word_mul(u).coords_in_degree(j))
    if not rows:
        return 0
    return rank(SparseMatrix(field, len(rows), module.graded_piece_dim(j), rows))
