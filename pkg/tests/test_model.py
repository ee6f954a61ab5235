import random
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eids.algebra import PolyMatrix, PolyRing
from eids.groebner import INFINITE
from eids.ideals import Ideal
from eids.model import (
    PreconditionError,
    generic_determinantal,
    generic_linear_presentation,
    is_singular,
    nu_star,
    plucker_relations,
    presentation_from_strings,
    tau_g,
    tjurina_transform_general,
    tjurina_transform_maximal,
    versal_unfolding,
)

RIM = [["x1", "0", "2*x3", "x4"], ["0", "x2", "x3", "x4"]]


def vk(k):
    return presentation_from_strings([["x", "y", "z"], ["w", "x", f"y+v^{k}"]], "x y z w v".split(), 2)


@pytest.mark.parametrize("m,n,t,codim", [(2, 3, 2, 2), (2, 2, 1, 4), (3, 3, 2, 4), (3, 4, 3, 2)])
def test_generic_determinantal_codim(m, n, t, codim):
    E = generic_determinantal(m, n, t)
    assert E.expected_codim == codim
    assert E.codim() == codim


def test_generic_determinantal_rejects_bad_t():
    with pytest.raises(PreconditionError):
        generic_determinantal(2, 3, 3)


def test_generic_linear_is_seeded():
    a = generic_linear_presentation(2, 3, 2, 4, seed=11)
    b = generic_linear_presentation(2, 3, 2, 4, seed=11)
    c = generic_linear_presentation(2, 3, 2, 4, seed=12)
    assert a.matrix.rows == b.matrix.rows
    assert a.matrix.rows != c.matrix.rows
    with pytest.raises(PreconditionError):
        generic_linear_presentation(2, 3, 2, 1)


def test_rim_tau():
    assert tau_g(presentation_from_strings(RIM, ["x1", "x2", "x3", "x4"], 2)) == 5


@pytest.mark.parametrize("k", [2, 3, 4])
def test_vk_tau(k):
    assert tau_g(vk(k)) == 2 * k - 1


def test_generic_matrix_is_rigid():
    # every entry is a coordinate, so J_F is everything
    assert tau_g(generic_determinantal(2, 3, 2)) == 0


def test_non_isolated_has_infinite_tau():
    E = presentation_from_strings([["x", "y", "0"], ["0", "x", "y"]], ["x", "y", "z"], 2)
    assert tau_g(E) is INFINITE


def test_tau_invariant_under_unit_row_multiple():
    base = vk(2)
    rows = [["x", "y", "z"], ["(1+x)*w", "(1+x)*x", "(1+x)*(y+v^2)"]]
    moved = presentation_from_strings(rows, "x y z w v".split(), 2)
    assert tau_g(moved) == tau_g(base)


def test_versal_unfolding_counts_and_specialises():
    E = presentation_from_strings(RIM, ["x1", "x2", "x3", "x4"], 2)
    F = versal_unfolding(E)
    assert len(F.parameters) == 5
    assert F.special_fibre().rows == E.matrix.to_ring(F.ring).rows


def test_versal_unfolding_refuses_infinite():
    E = presentation_from_strings([["x", "y", "0"], ["0", "x", "y"]], ["x", "y", "z"], 2)
    with pytest.raises(PreconditionError):
        versal_unfolding(E)


def test_maximal_transform_equations():
    E = presentation_from_strings([["x", "y", "z"], ["w", "x", "y"]], "x y z w".split(), 2)
    T = tjurina_transform_maximal(E)
    S = T.ring
    assert T.transform_vars == ("s1", "s2")
    assert T.ideal == Ideal.from_strings(S, ["s1*x+s2*w", "s1*y+s2*x", "s1*z+s2*y"])
    # bihomogeneous: linear in s
    for g in T.ideal.gens:
        assert all(sum(S.exps(k)[S.index[s]] for s in T.transform_vars) == 1 for k in g.terms)


def test_maximal_transform_transposes_tall_matrices():
    E = presentation_from_strings([["x", "w"], ["y", "x"], ["z", "y"]], "x y z w".split(), 2)
    T = tjurina_transform_maximal(E)
    assert len(T.ideal.gens) == 3 and len(T.transform_vars) == 2


def test_maximal_transform_needs_maximal_minors():
    with pytest.raises(PreconditionError):
        tjurina_transform_maximal(generic_determinantal(3, 3, 2))


def test_grass_2_4_single_relation():
    P = plucker_relations(2, 4)
    R = P.ring
    assert P == Ideal.from_strings(R, ["p_1_2*p_3_4-p_1_3*p_2_4+p_1_4*p_2_3"])


@pytest.mark.parametrize("n", [4, 5, 6])
def test_grass_2_n_relation_count(n):
    assert len(plucker_relations(2, n).gens) == comb(n, 4)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 3), st.integers(0, 10**6))
def test_plucker_relations_vanish_on_actual_minors(r, seed):
    # evaluate on the maximal minors of a random r x n rational matrix
    n = r + 2
    rng = random.Random(seed)
    A = [[Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)] for _ in range(r)]

    def det(M):
        if len(M) == 1:
            return M[0][0]
        return sum((-1) ** j * M[0][j] * det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(len(M)))

    P = plucker_relations(r, n)
    R = P.ring
    point = {}
    for cols in combinations(range(n), r):
        name = "p_" + "_".join(str(c + 1) for c in cols)
        point[name] = det([[A[i][c] for c in cols] for i in range(r)])
    for g in P.gens:
        assert g.evaluate(point) == 0


def test_general_transform_on_maximal_case_matches_maximal():
    E = presentation_from_strings([["x", "y", "z"], ["w", "x", "y"]], "x y z w".split(), 2)
    T = tjurina_transform_general(E)
    M = tjurina_transform_maximal(E, names=T.transform_vars)
    # y_{2} multiplies row 1 with sign -1, y_{1} row 2 with sign +1
    assert len(T.ideal.gens) == len(M.ideal.gens) == 3
    assert T.relations is None


def test_general_transform_has_plucker_relations_for_grass_2_4():
    E = generic_determinantal(4, 4, 3)
    T = tjurina_transform_general(E)
    assert len(T.transform_vars) == 6
    assert len(T.relations.gens) == 1
    assert len(T.ideal.gens) == comb(4, 3) * 4


@pytest.mark.parametrize(
    "gens,codim,nu,singular",
    [
        (["x", "y"], 2, (1, 1), False),
        (["x", "y^2"], 2, (1, 2), True),
        (["x^2+y^3"], 1, (2,), True),
        (["x+y^2", "y^3"], 2, (1, 3), True),
    ],
)
def test_nu_star(gens, codim, nu, singular):
    R = PolyRing(["x", "y"])
    got = nu_star(Ideal.from_strings(R, gens))
    assert got == nu
    assert is_singular(got, codim) is singular


def test_nu_star_zero_ideal_refused():
    R = PolyRing(["x"])
    with pytest.raises(PreconditionError):
        nu_star(Ideal(R, []))
