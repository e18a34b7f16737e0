"""The whole pipeline over a prime field: every headline count is
field-independent, so GF(5) must reproduce the rational answers."""

from freeproj import FpModule, FreeAlgebra, weak_basis
from freeproj.fields import GF
from freeproj.leavitt import LeavittElement, l0_to_s, strongly_graded_witness
from freeproj.qgr import ext1_k_R_dim, pi_star


def test_letter_quotient_over_gf5():
    A = FreeAlgebra(2, GF(5))
    M = FpModule.cyclic(A, [A.gen(0)])
    assert [M.hilbert(j) for j in range(6)] == [1, 1, 2, 4, 8, 16]
    p = M.stable_profile()
    assert (p.i0, p.t0) == (1, 1)
    assert pi_star(M).cls.to_json() == {"t": 1, "i": 1, "d": 2}


def test_weak_basis_over_gf5():
    A = FreeAlgebra(2, GF(5))
    R = A.free_module([0])
    x0, x1 = A.gen(0), A.gen(1)
    B = weak_basis([R.from_polys([x0 + x1.scale(3)]), R.from_polys([x0])])
    assert B.rank == 2
    assert B.reduce(R.from_polys([x1])).is_zero()


def test_ext1_over_gf5():
    A = FreeAlgebra(2, GF(5))
    assert ext1_k_R_dim(A, -1) == 2
    assert [ext1_k_R_dim(A, j) for j in range(3)] == [3, 6, 12]


def test_leavitt_over_gf5():
    A = FreeAlgebra(2, GF(5))
    one = LeavittElement.one(A)
    x0, x0s = LeavittElement.gen(A, 0), LeavittElement.gen_star(A, 0)
    assert (x0 * x0s).equals(one)
    assert strongly_graded_witness(A, 2).verified
    m = l0_to_s(one.raise_level(0, 1))
    assert m.level == 0 and m.entries == ((1,),)
