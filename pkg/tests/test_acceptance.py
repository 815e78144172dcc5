"""Acceptance criteria.

Every test carries a ``criterion`` marker; the conftest hook prints one
PASS/FAIL line per criterion at the end of the run.  All comparisons are
exact equalities.
"""

import random

import pytest
from conftest import load_algebra, load_description
from randalg import (
    random_ag_algebra,
    random_codim2_ci,
    random_graded_algebra,
    random_jdt,
    random_linear_form,
    random_partition,
)

from jordantype.algebra import associated_graded, from_dual_generator, from_ideal
from jordantype.hessian import cod2_jordan_types, hessian, rank_theorem_table, slp_certificate
from jordantype.jordan import (
    DEFAULT_SEED,
    dsjt,
    generic_element,
    generic_jordan_type,
    is_strong_lefschetz,
    jdt_from_sequential,
    jdt_from_strings,
    jordan_degree_type,
    jordan_string_basis,
    jordan_type,
    jordan_type_of_operator,
    lsjt,
    sjt,
    weyr_jordan_type,
)
from jordantype.linalg import QQ, Subspace
from jordantype.partition import (
    Comparison,
    HilbertFunction,
    JordanDegreeType,
    Partition,
    dominates,
    hf_conjugate,
    jdt_dominates,
    jdt_hilbert_function,
    jdt_of_hilbert_function,
    jdt_symmetry_check,
)
from jordantype.poly import PolyRing
from jordantype.symdecomp import symmetric_decomposition

SEED = 20240607
R2 = PolyRing(QQ, ("x", "y"))
R3 = PolyRing(QQ, ("x", "y", "z"))


def P(*parts):
    return Partition(parts)


def S(text):
    return JordanDegreeType.parse(text)


# -- 1 -------------------------------------------------------------------------

c1 = pytest.mark.criterion(1, "monomial and deformed complete intersections in two variables")


@c1
def test_c1_monomial_complete_intersection():
    A = load_algebra("monomial_ci")
    assert A.hilbert_function == HilbertFunction((1, 2, 3, 2, 1))
    assert jordan_type(A, "x") == P(3, 3, 3)
    assert jordan_type(A, "x+y") == P(5, 3, 1)
    assert hf_conjugate(A.hilbert_function) == P(5, 3, 1)
    assert is_strong_lefschetz(A, "x+y")


@c1
def test_c1_local_complete_intersection():
    A = load_algebra("monomial_ci")
    B = load_algebra("local_ci")
    assert jordan_type(B, "y") == P(4, 3, 2)
    assert jordan_type(B, "x") == P(3, 3, 3)
    assert associated_graded(B).same_presentation(A)
    assert jordan_type(A, "y") == P(3, 3, 3)
    assert dominates(jordan_type(B, "y"), jordan_type(A, "y")) is Comparison.GREATER_EQUAL


# -- 2 -------------------------------------------------------------------------

c2 = pytest.mark.criterion(2, "local Gorenstein algebra with cubic-quartic dual generator and its deformation")


@c2
def test_c2_annihilator_and_hilbert_function():
    C = load_algebra("gorenstein_family", t=0)
    gens = [R3.parse(g) for g in ("x*z", "y*z - x^3", "z^2", "x*y^2", "y^3")]
    assert C.same_presentation(from_ideal(gens, R3, mode="local"))
    assert C.hilbert_function == HilbertFunction((1, 3, 3, 2, 1))
    assert C.is_gorenstein()


@c2
def test_c2_generic_and_special_types():
    C = load_algebra("gorenstein_family", t=0)
    assert generic_jordan_type(C, trials=8, seed=DEFAULT_SEED) == P(5, 3, 1, 1)
    assert jordan_type(C, "x") == P(4, 4, 1, 1)
    assert jordan_type(C, "y+z") == P(4, 2, 2, 2)
    assert jordan_type(C, "y") == P(3, 3, 2, 2)
    assert jordan_type(C, "x^2") == P(2, 2, 2, 2, 1, 1)
    assert jordan_type(C, "z") == P(2, 2, 2, 1, 1, 1, 1)


@c2
@pytest.mark.parametrize("t", [1, 2])
def test_c2_deformation(t):
    Ct = load_algebra("gorenstein_family", t=t)
    assert Ct.hilbert_function == HilbertFunction((1, 3, 3, 2, 1))
    assert generic_jordan_type(Ct, trials=8, seed=DEFAULT_SEED) == P(5, 3, 2)
    assert jordan_type(Ct, "z") == P(3, 3, 1, 1, 1, 1)


@c2
@pytest.mark.parametrize("t", [0, 1, 2])
def test_c2_associated_graded_types(t):
    Ct = load_algebra("gorenstein_family", t=t)
    G = associated_graded(Ct)
    fixture = load_algebra("graded_family", t=t) if t else load_algebra("graded_family_t0")
    assert G.same_presentation(fixture)
    assert generic_jordan_type(G, trials=8, seed=DEFAULT_SEED) == generic_jordan_type(Ct, trials=8, seed=DEFAULT_SEED)
    assert jordan_type(G, "x") == jordan_type(Ct, "x") == P(4, 4, 1, 1)
    assert jordan_type(G, "x^2") == jordan_type(Ct, "x^2") == P(2, 2, 2, 2, 1, 1)
    assert jordan_type(G, "y+z") == P(3, 2, 2, 2, 1)
    assert jordan_type(G, "y") == P(3, 2, 2, 2, 1)
    expected_z = P(2, 1, 1, 1, 1, 1, 1, 1, 1) if t == 0 else P(2, 2, 1, 1, 1, 1, 1, 1)
    assert jordan_type(G, "z") == expected_z


# -- 3 -------------------------------------------------------------------------

c3 = pytest.mark.criterion(3, "Jordan degree types of the associated graded family")


@c3
def test_c3_generic_jdt():
    G1 = load_algebra("graded_family", t=1)
    G0 = load_algebra("graded_family_t0")
    ell1 = generic_element(G1, trials=8, seed=DEFAULT_SEED)
    ell0 = generic_element(G0, trials=8, seed=DEFAULT_SEED)
    assert jordan_degree_type(G1, ell1) == S("5_0 3_1 2_1") == jdt_of_hilbert_function((1, 3, 3, 2, 1))
    assert jordan_degree_type(G0, ell0) == S("5_0 3_1 1_1 1_2")


@c3
@pytest.mark.parametrize("t", [0, 1])
def test_c3_special_jdts_as_printed(t):
    G = load_algebra("graded_family", t=t) if t else load_algebra("graded_family_t0")
    printed = {
        "x": "4^_0..1 1^_1..2",
        "y": "3_0 2^_1..3 1_1",
        "z": "2^_0..1 1^_1..4 1^_2..3" if t else "2_1 1^_1..3 1^_2..4 1^_1..2",
    }
    for ell, text in printed.items():
        assert jordan_degree_type(G, ell) == S(text), ell
        assert jdt_from_strings(G, ell) == S(text), ell


# -- 4 -------------------------------------------------------------------------

c4 = pytest.mark.criterion(4, "Jordan degree type strictly refines Jordan type")


@c4
def test_c4_discriminating_pair():
    A = load_algebra("jdt_pair_a")
    B = load_algebra("jdt_pair_b")
    assert A.hilbert_function == B.hilbert_function == HilbertFunction((1, 3, 5, 4, 2, 1))
    assert jordan_type(A, "z") == jordan_type(B, "z") == P(3, 3, 3, 3, 1, 1, 1, 1)
    SA, SB = jordan_degree_type(A, "z"), jordan_degree_type(B, "z")
    assert SA == S("3^_0..2 3_1 1^_2..5")
    assert SB == S("3^_0..3 1^_1..3 1_2")
    assert SA != SB


# -- 5 -------------------------------------------------------------------------

c5 = pytest.mark.criterion(5, "rank formula and string extraction agree; symmetry for Gorenstein algebras")


@c5
def test_c5_rank_formula_matches_strings():
    rng = random.Random(f"{SEED}:c5")
    gorenstein_seen = 0
    for n in range(25):
        if n % 2:
            A = random_graded_algebra(rng, max_dim=18, nvars=rng.choice((2, 3)))
        else:
            A, _ = random_ag_algebra(rng, max_j=5, max_dim=18)
        for _ in range(3):
            ell = random_linear_form(A, rng)
            S_rank = jordan_degree_type(A, ell)
            assert S_rank == jdt_from_strings(A, ell), (A, ell)
            if A.is_gorenstein():
                gorenstein_seen += 1
                assert jdt_symmetry_check(S_rank, A.socle_degree), (A, ell)
    assert gorenstein_seen >= 30


# -- 6 -------------------------------------------------------------------------

c6 = pytest.mark.criterion(6, "Hessians: rank theorem, Lefschetz certificates, codimension-two enumeration")


@c6
def test_c6_rank_theorem_random_gorenstein():
    rng = random.Random(f"{SEED}:c6")
    for _ in range(25):
        _, F = random_ag_algebra(rng, max_j=5, action="differentiation")
        for _ in range(5):
            ell = [rng.randint(-6, 6) for _ in range(F.ring.nvars)]
            bad = [r for r in rank_theorem_table(F, ell) if not r.passed]
            assert not bad, (F, ell, bad)


@c6
def test_c6_slp_certificates():
    F = R2.dual_ring().parse("X^2*Y^2")
    cert = slp_certificate(F)
    assert cert.is_slp is True
    assert cert.witness == (1, 1)
    R5 = PolyRing(QQ, ("x", "y", "z", "u", "v"))
    perazzo = R5.dual_ring().parse("X*U^2 + Y*U*V + Z*V^2")
    assert hessian(perazzo, 1).determinant().is_zero()
    assert slp_certificate(perazzo).is_slp is False


@c6
def test_c6_cod2_counts():
    small = cod2_jordan_types((1, 2, 3, 2, 1))
    assert len(small) == 4
    assert P(3, 3, 3) in small and P(5, 3, 1) in small
    assert len(cod2_jordan_types((1, 2, 3, 3, 2, 1))) == 8


@c6
@pytest.mark.parametrize("H", [(1, 2, 3, 2, 1), (1, 2, 3, 3, 2, 1)])
def test_c6_sampled_types_are_enumerated(H):
    allowed = set(cod2_jordan_types(H))
    rng = random.Random(f"{SEED}:c6:{H}")
    for _ in range(8):
        A = random_codim2_ci(rng, H)
        for _ in range(6):
            ell = random_linear_form(A, rng)
            assert jordan_type(A, ell) in allowed, (A, ell)


# -- 7 -------------------------------------------------------------------------

c7 = pytest.mark.criterion(7, "sequential Jordan types and symmetric decompositions")

DSJT_TABLE = {
    0: [(), (1,), (2, 1, 1), (3, 2, 1, 1), (4, 3, 1, 1)],
    1: [(1,), (2, 1), (3, 2, 1), (4, 3, 1, 1)],
    2: [(2, 1), (3, 2, 1), (4, 3, 1, 1)],
    3: [(3, 2, 1), (4, 3, 1, 1)],
    4: [(4, 3, 1, 1)],
}


@c7
def test_c7_dsjt_table():
    C = load_algebra("gorenstein_family", t=0)
    T = dsjt(C, generic_element(C, trials=8, seed=DEFAULT_SEED))
    assert T.corner == P(5, 3, 1, 1)
    for a, row in DSJT_TABLE.items():
        for i, parts in enumerate(row):
            assert T.entries[(a, i)] == Partition(parts), (a, i)
        assert T.entries[(a, T.j + 1 - a)] == T.corner
    assert len({T.entries[(a, T.j - a)] for a in range(T.j + 1)}) == 1


@c7
def test_c7_sjt_reconstructs_jdt():
    rng = random.Random(f"{SEED}:c7")
    for _ in range(10):
        A = random_graded_algebra(rng, max_dim=18)
        ell = random_linear_form(A, rng, special=False)
        assert jdt_from_sequential(sjt(A, ell)) == jordan_degree_type(A, ell), (A, ell)


@c7
def test_c7_lsjt_reconstructs_jdt():
    rng = random.Random(f"{SEED}:c7")
    for _ in range(10):
        A = random_graded_algebra(rng, max_dim=18)
        ell = random_linear_form(A, rng, special=False)
        assert jdt_from_sequential(lsjt(A, ell)) == jordan_degree_type(A, ell), (A, ell)


@c7
def test_c7_symmetric_decomposition_four_variables():
    A = load_algebra("four_variable_local")
    assert A.hilbert_function == HilbertFunction((1, 4, 4, 3, 3, 1, 1))
    D = symmetric_decomposition(A)
    assert D.component(1) == (0, 2, 2, 2, 2, 0)
    assert D.component(3) == (0, 1, 1, 0)
    assert D.component(0) == (1, 1, 1, 1, 1, 1, 1)
    assert D.nonzero().keys() == {0, 1, 3}


@c7
@pytest.mark.parametrize("t", [0, 1, 2])
def test_c7_symmetric_decomposition_family(t):
    D = symmetric_decomposition(load_algebra("gorenstein_family", t=t))
    assert D.nonzero() == {0: (1, 2, 2, 2, 1), 1: (0, 1, 1, 0)}


@c7
def test_c7_symmetric_decomposition_perturbed():
    D = symmetric_decomposition(load_algebra("quartic_perturbed"))
    assert D.components == ((1, 2, 3, 2, 1), (0, 0, 0, 0), (0, 1, 0))


# -- 8 -------------------------------------------------------------------------

c8 = pytest.mark.criterion(8, "three-variable Gorenstein family with Sperner number five")


@c8
@pytest.mark.parametrize(
    "j, H, printed",
    [
        (4, (1, 3, 5, 3, 1), "5_0 3^_1..1 2_1 2_2 1^_2..2"),
        (5, (1, 3, 5, 5, 3, 1), "6_0 3^_1..2 2_1 2_3 1^_2..3"),
    ],
)
def test_c8_family(j, H, printed):
    A = load_algebra(f"sperner5_j{j}")
    assert A.hilbert_function == HilbertFunction(H)
    assert load_description(f"sperner5_j{j}")["dual"] == f"X^{j} + X^2*Y^{j - 2} + X*Z*Y^{j - 2}"
    assert jordan_degree_type(A, "x") == S(printed)
    gens = [R3.parse(g) for g in ("z^2", "x^2*z", "x^2*y - x*y*z", f"y^{j - 1}", f"x^{j - 1} - y^{j - 2}*z")]
    assert A.same_presentation(from_ideal(gens, R3))


# -- 9 -------------------------------------------------------------------------

c9 = pytest.mark.criterion(9, "randomized property suites")


@pytest.fixture(scope="module")
def pairs():
    rng = random.Random(f"{SEED}:c9")
    out = []
    while len(out) < 100:
        A = random_graded_algebra(rng, max_dim=16) if len(out) % 2 else random_ag_algebra(rng, max_j=5, max_dim=16)[0]
        for _ in range(2):
            out.append((A, random_linear_form(A, rng)))
    return out


@c9
def test_c9_dominance_and_sperner_bounds(pairs):
    for A, ell in pairs:
        Pl = jordan_type(A, ell)
        assert dominates(Pl, hf_conjugate(A.hilbert_function)) in (Comparison.LESS_EQUAL, Comparison.EQUAL)
        assert len(Pl) >= A.sperner_number


@c9
def test_c9_rank_and_weyr_routes_agree(pairs):
    for A, ell in pairs:
        L = A.mult_operator(ell)
        assert jordan_type_of_operator(L) == weyr_jordan_type(L)


@c9
def test_c9_string_bases(pairs):
    for A, ell in pairs:
        for full in (False, True):
            B = jordan_string_basis(A, ell, full=full)
            assert B.is_basis()
            assert B.lengths() == jordan_type(A, ell)
            if full:
                assert B.is_jordan()


@c9
def test_c9_jdt_consistency(pairs):
    for A, ell in pairs:
        Sl = jordan_degree_type(A, ell)
        assert jdt_hilbert_function(Sl) == A.hilbert_function
        assert Sl.partition() == jordan_type(A, ell)


@c9
def test_c9_concatenation_implies_dominance():
    rng = random.Random(f"{SEED}:c9:concat")
    done = 0
    while done < 100:
        T = random_jdt(rng)
        items = list(T)
        for _ in range(rng.randint(1, 3)):
            joinable = [(a, b) for a in range(len(items)) for b in range(len(items))
                        if a != b and items[b][1] == items[a][1] + items[a][0]]
            if not joinable:
                break
            a, b = rng.choice(joinable)
            (p, nu), (q, _) = items[a], items[b]
            items = [s for k, s in enumerate(items) if k not in (a, b)] + [(p + q, nu)]
        Sc = JordanDegreeType(items)
        if Sc == T:
            continue
        assert jdt_dominates(Sc, T) is Comparison.GREATER_EQUAL, (Sc, T)
        done += 1


@c9
def test_c9_subspace_lattice_identities():
    rng = random.Random(f"{SEED}:c9:lattice")
    for _ in range(100):
        n = rng.randint(1, 7)

        def sub(k):
            return Subspace(QQ, n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)])

        U, V, W0 = sub(rng.randint(0, n)), sub(rng.randint(0, n)), sub(rng.randint(0, n))
        W = U + W0
        assert (U + V).dim + (U & V).dim == U.dim + V.dim
        assert (U & V) <= U and (U & V) <= V and U <= U + V
        assert (U & V) == (V & U) and (U + V) == (V + U)
        assert U + (V & W) == (U + V) & W
        assert U.quotient_dim(U & V) == (U + V).dim - V.dim


@c9
def test_c9_random_partitions_conjugation():
    rng = random.Random(f"{SEED}:c9:partitions")
    for _ in range(100):
        n = rng.randint(1, 20)
        Pa, Pb = random_partition(rng, n), random_partition(rng, n)
        assert Pa.conjugate().conjugate() == Pa
        # conjugation reverses dominance
        assert dominates(Pb.conjugate(), Pa.conjugate()) == dominates(Pa, Pb)

