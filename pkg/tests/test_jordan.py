import random

import pytest
from conftest import load_algebra
from randalg import random_ag_algebra, random_graded_algebra, random_linear_form

from jordantype.algebra import from_ideal
from jordantype.errors import InvariantViolation, UnsupportedError
from jordantype.jordan import (
    DEFAULT_SEED,
    dominance_refinement_check,
    dsjt,
    generic_element,
    generic_jordan_type,
    is_strong_lefschetz,
    is_weak_lefschetz,
    jdt_from_sequential,
    jdt_from_strings,
    jordan_degree_type,
    jordan_string_basis,
    jordan_type,
    jordan_type_of_operator,
    local_dominates_associated_graded,
    lsjt,
    sample_generic_elements,
    sjt,
    weyr_jordan_type,
)
from jordantype.linalg import QQ, Matrix, Subspace, kernel
from jordantype.partition import (
    Comparison,
    HilbertFunction,
    JordanDegreeType,
    Partition,
    dominates,
    jdt_hilbert_function,
)
from jordantype.poly import PolyRing, monomials_of_degree

R2 = PolyRing(QQ, ("x", "y"))
R3 = PolyRing(QQ, ("x", "y", "z"))


def P(*parts):
    return Partition(parts)


def ge(a, b):
    return dominates(a, b) in (Comparison.GREATER_EQUAL, Comparison.EQUAL)


def ideal(*gens):
    return from_ideal([R2.parse(g) for g in gens], R2)


def test_operator_routes_on_single_blocks():
    N = Matrix(QQ, [[0, 0, 0], [1, 0, 0], [0, 1, 0]])
    assert jordan_type_of_operator(N) == weyr_jordan_type(N) == P(3)
    Z = Matrix(QQ, [[0, 0], [0, 0]])
    assert jordan_type_of_operator(Z) == P(1, 1)


def test_weak_and_strong_lefschetz():
    A = load_algebra("monomial_ci")
    assert is_strong_lefschetz(A, "x+y") and is_weak_lefschetz(A, "x+y")
    assert not is_strong_lefschetz(A, "x")
    assert is_weak_lefschetz(A, "x")


def test_nonlinear_element_rejected_for_graded_invariants():
    A = load_algebra("monomial_ci")
    assert jordan_type(A, "x^2") == P(2, 2, 2, 1, 1, 1)
    with pytest.raises(UnsupportedError):
        jordan_degree_type(A, "x^2")


def test_special_jdts_of_the_degenerate_graded_member():
    G0 = load_algebra("graded_family_t0")
    assert jordan_degree_type(G0, "z") == JordanDegreeType.parse("2_0 1^_1..3 1^_2..4 1_1 1_2")
    assert jordan_degree_type(G0, "z") == jdt_from_strings(G0, "z")
    assert jordan_degree_type(G0, "x") == JordanDegreeType.parse("4^_0..1 1^_1..2")


def test_printed_type_for_z_cannot_occur():
    G0 = load_algebra("graded_family_t0")
    printed = JordanDegreeType.parse("2_1 1^_1..3 1^_2..4 1^_1..2")
    assert jdt_hilbert_function(printed) != G0.hilbert_function
    assert jdt_hilbert_function(printed)[0] == 0


def test_string_bases_on_local_algebra():
    C = load_algebra("gorenstein_family", t=0)
    for ell in ("x", "y+z", "z", "x^2"):
        B = jordan_string_basis(C, ell, full=True)
        assert B.is_basis() and B.is_jordan()
        assert B.lengths() == jordan_type(C, ell)


def test_generic_sampling_is_deterministic():
    C = load_algebra("gorenstein_family", t=1)
    assert generic_element(C, seed=5) == generic_element(C, seed=5)
    assert len(sample_generic_elements(C, 4, seed=5)) == 4
    assert generic_jordan_type(C, seed=1) == generic_jordan_type(C, seed=2) == P(5, 3, 2)


def test_dominance_refinement_on_fixtures():
    for name, params in (("monomial_ci", {}), ("gorenstein_family", {"t": 0}), ("jdt_pair_a", {}), ("local_ci", {})):
        A = load_algebra(name, **params)
        for ell in ("x", "y", "x+y"):
            rep = dominance_refinement_check(A, ell)
            assert rep.passed, (name, ell, rep.failures())


def test_dominance_refinement_on_random_algebras():
    rng = random.Random(21)
    for _ in range(6):
        A = random_graded_algebra(rng, max_dim=14)
        ell = random_linear_form(A, rng)
        rep = dominance_refinement_check(A, ell)
        assert rep.passed, rep.failures()


def test_sjt_is_increasing_chain():
    C = load_algebra("gorenstein_family", t=0)
    seq = sjt(C, "x")
    assert [Q.size for Q in seq] == [1, 4, 7, 9, 10]
    assert seq[-1] == jordan_type(C, "x")


def test_jdt_does_not_determine_lsjt():
    A = ideal("x^2", "x*y", "y^3")
    B = ideal("x^2", "y^2")
    assert jordan_degree_type(A, "y") == jordan_degree_type(B, "x+y") == JordanDegreeType.parse("3_0 1_1")
    assert lsjt(A, "y") == [P(1), P(2), P(3, 1)]
    assert lsjt(B, "x+y") == [P(1), P(2, 1), P(3, 1)]


def annihilator_quotient_type(A, ell, b):
    """Jordan type of ``ell`` on ``A/(0:m^b)`` from ranks, without quotient algebras."""
    n = A.dim
    ops = [A.mult_operator(A.ring.monomial(e)) for e in monomials_of_degree(A.ring.nvars, b)]
    stacked = Matrix(A.field, [list(row) for M in ops for row in M.rows]) if ops else Matrix.zeros(A.field, 0, n)
    J = kernel(stacked) if b else Subspace.zero(A.field, n)
    L = A.mult_operator(A.ring.parse(ell))
    ranks, power = [], Matrix.identity(A.field, n)
    while True:
        r = (Subspace(A.field, n, [power.apply(v) for v in Subspace.full(A.field, n).basis]) + J).dim - J.dim
        ranks.append(r)
        if r == 0:
            break
        power = power @ L
    counts = [ranks[k] - ranks[k + 1] for k in range(len(ranks) - 1)]
    return Partition(tuple(k + 1 for k in range(len(counts)) for _ in range(counts[k] - (counts[k + 1] if k + 1 < len(counts) else 0))))


def test_lsjt_does_not_determine_jdt():
    A = from_ideal([R3.parse(g) for g in ("x*y", "y^2", "x^3", "y*z^2", "z^4", "x^2*z^3")], R3)
    B = from_ideal([R3.parse(g) for g in ("y*z", "z^2", "x^3", "x^2*z", "x*y^3", "y^5")], R3)
    assert A.hilbert_function == B.hilbert_function == HilbertFunction((1, 3, 4, 3, 2))
    assert lsjt(A, "x") == lsjt(B, "x")
    for C in (A, B):
        j = C.socle_degree
        assert lsjt(C, "x") == [annihilator_quotient_type(C, "x", j - k) for k in range(j + 1)]
    SA, SB = jordan_degree_type(A, "x"), jordan_degree_type(B, "x")
    assert SA == jdt_from_strings(A, "x") == JordanDegreeType.parse("3^_0..2 2_3 1_1 1_2")
    assert SB == jdt_from_strings(B, "x") == JordanDegreeType.parse("3^_0..2 2_1 1_3 1_4")
    assert sjt(A, "x") != sjt(B, "x")


def test_lsjt_equals_sjt_for_gorenstein_algebras():
    rng = random.Random(22)
    for _ in range(8):
        A, _ = random_ag_algebra(rng, max_j=5, max_dim=16)
        ell = random_linear_form(A, rng, special=False)
        assert lsjt(A, ell) == sjt(A, ell)
        assert jdt_from_sequential(lsjt(A, ell)) == jordan_degree_type(A, ell)


def test_sequential_reconstruction_rejects_non_chains():
    with pytest.raises(InvariantViolation):
        jdt_from_sequential([(1,), (3,)])


@pytest.fixture(scope="module")
def family():
    out = {}
    for t in range(4):
        C = load_algebra("gorenstein_family", t=t)
        out[t] = (C, generic_element(C, trials=8, seed=DEFAULT_SEED))
    return out


@pytest.mark.parametrize("t", [1, 2, 3])
def test_deformation_dominates_special_fibre(family, t):
    C0, ell0 = family[0]
    Ct, ellt = family[t]
    assert ge(jordan_type(Ct, ellt), jordan_type(C0, ell0))
    assert all(ge(a, b) for a, b in zip(sjt(Ct, ellt), sjt(C0, ell0), strict=True))
    T0, Tt = dsjt(C0, ell0), dsjt(Ct, ellt)
    assert T0.entries.keys() == Tt.entries.keys()
    for key in T0.entries:
        assert ge(Tt.entries[key], T0.entries[key]), key


@pytest.mark.parametrize("t", [0, 1, 2])
def test_local_type_dominates_associated_graded(t):
    C = load_algebra("gorenstein_family", t=t)
    for ell in ("x", "y", "z", "x+y+z", "y+z"):
        Pl, Q, ok = local_dominates_associated_graded(C, ell)
        assert ok, (ell, Pl, Q)
    B = load_algebra("local_ci")
    assert local_dominates_associated_graded(B, "y") == (P(4, 3, 2), P(3, 3, 3), True)


def test_hilbert_function_of_jdt_on_fixtures():
    A = load_algebra("jdt_pair_b")
    assert jdt_hilbert_function(jordan_degree_type(A, "x+y+z")) == A.hilbert_function == HilbertFunction((1, 3, 5, 4, 2, 1))
