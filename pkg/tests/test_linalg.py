import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordantype.errors import DimensionError, ParseError
from jordantype.linalg import GF, QQ, Matrix, SparseEchelon, Subspace, field_from_spec, field_to_spec, kernel, solve

small = st.integers(-4, 4)


def matrices(field=QQ, max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda m: st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n).map(
                lambda rows: Matrix(field, rows)
            )
        )
    )


def test_rational_field_coercion():
    assert QQ.coerce("3/6") == Fraction(1, 2)
    assert QQ.parse("-2") == -2
    with pytest.raises(TypeError):
        QQ.coerce(0.5)
    with pytest.raises(TypeError):
        QQ.coerce(True)
    with pytest.raises(ParseError):
        QQ.parse("1/0")


def test_prime_field():
    F7 = GF(7)
    assert GF(7) is F7
    assert F7.coerce(-1) == 6
    assert F7.coerce(Fraction(1, 2)) == 4
    assert F7.inv(3) == 5
    with pytest.raises(ValueError):
        GF(8)
    assert field_from_spec({"Fp": 7}) is F7
    assert field_to_spec(F7) == {"Fp": 7}
    assert field_from_spec("Q") is QQ


def test_matrix_arithmetic():
    A = Matrix(QQ, [[1, 2], [3, 4]])
    B = Matrix(QQ, [[0, 1], [1, 0]])
    assert (A @ B).rows == ((2, 1), (4, 3))
    assert (A + B - B) == A
    assert A.transpose().rows == ((1, 3), (2, 4))
    assert A.determinant() == -2
    assert (A ** 0) == Matrix.identity(QQ, 2)
    assert A.apply((1, 1)) == (3, 7)
    with pytest.raises(DimensionError):
        A @ Matrix(QQ, [[1, 2, 3]])


def test_nilpotent_shift():
    N = Matrix(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    assert N.is_nilpotent()
    assert N.rank() == 2
    assert not Matrix.identity(QQ, 2).is_nilpotent()


def test_kernel_and_solve():
    M = Matrix(QQ, [[1, 2, 3], [2, 4, 6]])
    K = kernel(M)
    assert K.dim == 2
    for v in K.basis:
        assert not any(M.apply(v))
    x = solve(M, (1, 2))
    assert M.apply(x) == (1, 2)
    assert solve(M, (1, 0)) is None


def test_modp_rank_differs_from_rational():
    rows = [[1, 1], [1, 3]]
    assert Matrix(QQ, rows).rank() == 2
    assert Matrix(GF(2), rows).rank() == 1


def test_subspace_canonical_basis():
    U = Subspace(QQ, 3, [(1, 1, 0), (2, 2, 0), (0, 1, 1)])
    V = Subspace(QQ, 3, [(0, 1, 1), (1, 2, 1)])
    assert U == V and hash(U) == hash(V)
    assert U.dim == 2
    assert (1, 0, -1) in U
    assert (1, 0, 0) not in U
    assert U.coordinates((1, 2, 1)) is not None


def test_preimage_and_image():
    N = Matrix(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    zero = Subspace.zero(QQ, 3)
    assert zero.preimage(N).dim == 1
    assert zero.preimage(N).preimage(N).dim == 2
    assert Subspace.full(QQ, 3).image(N).dim == 2


def test_sparse_echelon_normal_forms():
    ech = SparseEchelon(QQ, 4)
    assert ech.insert({0: 1, 2: 1})
    assert not ech.insert({0: 2, 2: 2})
    assert ech.insert({1: 1, 3: -1})
    assert ech.pivots == [0, 1]
    nf = ech.normal_forms([2, 3])
    assert nf[0] == {2: -1}
    assert nf[1] == {3: 1}


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    assert M.rank() + kernel(M).dim == M.ncols
    assert M.rank() == M.transpose().rank()


@settings(max_examples=60, deadline=None)
@given(matrices(GF(5)))
def test_rank_nullity_mod_p(M):
    assert M.rank() + kernel(M).dim == M.ncols


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*(st.lists(st.lists(small, min_size=n, max_size=n), max_size=4) for _ in range(3)))))
def test_lattice_identities(vecs):
    n = len(next((v for group in vecs for v in group), [0]))
    U, V, W = (Subspace(QQ, n, g) for g in vecs)
    assert (U + V).dim + (U & V).dim == U.dim + V.dim
    assert (U & V) <= U <= (U + V)
    assert ((U & V) & W) == (U & (V & W))
    assert U + (V & (U + W)) == (U + V) & (U + W)


def test_determinant_matches_rank_on_random_matrices():
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 6)
        M = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        assert (M.determinant() != 0) == (M.rank() == n)
