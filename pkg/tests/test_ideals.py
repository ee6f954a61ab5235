import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eids.algebra import PolyMatrix, PolyRing
from eids.groebner.staircase import monomials_of_degree
from eids.ideals import (
    Ideal,
    eliminate,
    hypersurface_degree,
    intersect,
    jacobian,
    minors,
    positive_grading,
    quotient,
    saturate,
)


def I(R, *texts):
    return Ideal.from_strings(R, texts)


def test_one_minors_are_entries():
    R = PolyRing(["x", "y", "z"])
    M = PolyMatrix.from_strings(R, [["x", "y"], ["z", "x+y"]])
    assert minors(M, 1) == I(R, "x", "y", "z")


def test_zero_size_minor_convention():
    R = PolyRing(["x"])
    M = PolyMatrix.from_strings(R, [["x"]])
    assert minors(M, 0).is_unit()
    assert minors(M, 2).is_zero()


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def test_three_minors_against_permutation_expansion():
    rng = random.Random(3)
    R = PolyRing(["x", "y", "z"])
    names = ["x", "y", "z", "1"]
    rows = [[f"{rng.randint(-3, 3)}*{rng.choice(names)}+{rng.randint(-2, 2)}" for _ in range(4)] for _ in range(3)]
    M = PolyMatrix.from_strings(R, rows)
    got = M.minors(3)
    want = []
    for cols in combinations(range(4), 3):
        acc = R.zero()
        for p in permutations(range(3)):
            term = R.one()
            for i in range(3):
                term = term * M[i, cols[p[i]]]
            acc = acc + term.scale(R.field(_perm_sign(p)))
        want.append(acc)
    assert got == want


def test_jacobian_small():
    R = PolyRing(["x", "y"])
    J = jacobian([R("x^2+y"), R("3")], ["x", "y"])
    assert J.rows[0] == (R("2*x"), R("1"))
    assert all(e.is_zero() for e in J.rows[1])


def test_eliminate_examples():
    R = PolyRing(["x", "a", "b"])
    assert eliminate(I(R, "x"), ["x"]).is_zero()
    assert eliminate(I(R, "x-a", "x-b"), ["x"]) == I(PolyRing(["a", "b"]), "a-b")


def test_eliminate_section_family():
    names = ["x1", "x2", "x3", "x4", "x5", "a0", "a1", "a2", "a3"]
    R = PolyRing(names)
    gens = ["x1+a1", "x2+a2", "x3", "x4", "x5", "x1^3+x2^2+a3*x1+a0"]
    out = eliminate(I(R, *gens), ["x1", "x2", "x3", "x4", "x5"])
    S = PolyRing(["a0", "a1", "a2", "a3"])
    assert out == I(S, "-a1^3+a2^2-a3*a1+a0")


def test_quotient_examples():
    R = PolyRing(["x", "y", "z"])
    assert quotient(I(R, "x^2*y"), I(R, "x")) == I(R, "x*y")
    J = I(R, "x^2+y", "y*z")
    assert quotient(J, Ideal.unit(R)) == J
    assert quotient(I(R, "x*z", "y*z"), I(R, "z")) == I(R, "x", "y")


def test_saturate_examples():
    R = PolyRing(["x", "y"])
    sat, steps = saturate(I(R, "x^2*y"), I(R, "x"))
    assert sat == I(R, "y") and steps == 2
    J = I(R, "x^2+y^3")
    assert saturate(J, Ideal.unit(R))[0] == J
    S = PolyRing(["s", "t", "a", "b"])
    assert saturate(I(S, "s*(a^2-b)", "t*(a^2-b)"), I(S, "s", "t"))[0] == I(S, "a^2-b")
    # V(s) is not inside V(s, t), so a lone s*f survives
    assert saturate(I(S, "s*(a^2-b)"), I(S, "s", "t"))[0] == I(S, "s*(a^2-b)")


def test_intersect_examples():
    R = PolyRing(["x", "y", "z"])
    assert intersect(I(R, "x"), I(R, "y")) == I(R, "x*y")
    J = I(R, "x+y^2")
    assert intersect(J, Ideal.unit(R)) == J
    assert intersect(I(R, "x", "y"), I(R, "x", "z")) == I(R, "x", "y*z")


def test_graded_paths_match_plain_ones():
    # x, s, t homogeneous under weights (1, 1, 1): the quotient by a variable uses the graded shortcut
    R = PolyRing(["s", "t", "x", "y"])
    J = I(R, "s^2*x-t^2*y", "s*t*x^2", "t^3*y")
    assert positive_grading(J.gens) is not None
    q = quotient(J, I(R, "s"))
    plain = Ideal(R, [g for g in intersect(J, I(R, "s")).gens])
    assert all(q.contains(g.to_ring(R) * 1) for g in J.gens)
    assert Ideal(R, [g * R("s") for g in q.gens]).issubset(plain)


@pytest.mark.parametrize(
    "text,deg",
    [("a5*(4*a1^3+27*a2^2)", 4), ("a7*(a1^3-a2)", 4), ("a1", 1)],
)
def test_hypersurface_degree(text, deg):
    R = PolyRing(["a1", "a2", "a5", "a7"])
    assert hypersurface_degree(I(R, text)) == deg


def test_hypersurface_degree_rejects_non_principal():
    R = PolyRing(["x", "y"])
    with pytest.raises(ValueError):
        hypersurface_degree(I(R, "x", "y"))


# -- properties ---------------------------------------------------------------

NAMES = ["x", "a", "b"]
RING = PolyRing(NAMES)


@st.composite
def small_poly(draw, max_deg=2):
    f = RING.zero()
    for _ in range(draw(st.integers(1, 3))):
        e0 = draw(st.integers(0, max_deg))
        e1 = draw(st.integers(0, max_deg - e0))
        e = (e0, e1, draw(st.integers(0, max_deg - e0 - e1)))
        c = draw(st.integers(-3, 3))
        f = f + RING.one().scale(RING.field(c)).mul_term(RING.key(e), RING.field(1))
    return f


ideals = st.lists(small_poly(), min_size=1, max_size=2).map(lambda gs: Ideal(RING, gs))


@settings(max_examples=25, deadline=None)
@given(ideals, st.lists(small_poly(1), min_size=1, max_size=2))
def test_saturation_idempotent(J, gs):
    K = Ideal(RING, gs)
    once, _ = saturate(J, K)
    twice, steps = saturate(once, K)
    assert twice == once
    assert steps == 0


@settings(max_examples=25, deadline=None)
@given(ideals, ideals)
def test_quotient_of_intersection_contains_quotient(J, K):
    assert quotient(J, K).issubset(quotient(intersect(J, K), K))


def _macaulay_subring_elements(gens, keep, top=4, mult=3):
    """x-free elements of degree <= top found by row reduction of bounded multiples."""
    rows = []
    for g in gens:
        d = g.total_degree()
        for k in range(mult + 1):
            for e in monomials_of_degree(3, k):
                m = RING.one().mul_term(RING.key(e), RING.field(1))
                rows.append(m * g)
    cols = set()
    for r in rows:
        cols |= set(r.terms)
    # columns with x first, then by descending key
    xi = RING.index["x"]
    order = sorted(cols, key=lambda k: (RING.exps(k)[xi] == 0, -k))
    pos = {k: i for i, k in enumerate(order)}
    mat = []
    for r in rows:
        v = [Fraction(0)] * len(order)
        for k, c in r.terms.items():
            v[pos[k]] = Fraction(RING.field.to_fraction(c))
        mat.append(v)
    # row echelon form
    piv_row = 0
    for j in range(len(order)):
        p = next((i for i in range(piv_row, len(mat)) if mat[i][j]), None)
        if p is None:
            continue
        mat[piv_row], mat[p] = mat[p], mat[piv_row]
        pr = mat[piv_row]
        for i in range(piv_row + 1, len(mat)):
            if mat[i][j]:
                f = mat[i][j] / pr[j]
                mat[i] = [a - f * b for a, b in zip(mat[i], pr)]
        piv_row += 1
    S = PolyRing(keep)
    out = []
    for v in mat:
        if not any(v):
            continue
        support = [order[j] for j, c in enumerate(v) if c]
        if all(RING.exps(k)[xi] == 0 for k in support) and max(sum(RING.exps(k)) for k in support) <= top:
            f = S.zero()
            for j, c in enumerate(v):
                if c:
                    e = RING.exps(order[j])
                    f = f + S.one().scale(S.field(c)).mul_term(S.key((e[1], e[2])), S.field(1))
            out.append(f)
    return out


@settings(max_examples=20, deadline=None)
@given(ideals)
def test_elimination_membership_oracle(J):
    E = eliminate(J, ["x"])
    for g in E.gens:
        assert J.contains(g.to_ring(RING))
    for f in _macaulay_subring_elements(J.gens, ["a", "b"]):
        assert E.contains(f.to_ring(E.ring)) if E.gens else f.is_zero()


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_minor_expansion_identity(seed):
    rng = random.Random(seed)
    R = PolyRing(["x", "y", "z"])
    names = ["x", "y", "z", "1"]
    rows = [[f"{rng.randint(-2, 2)}*{rng.choice(names)}" for _ in range(4)] for _ in range(3)]
    M = PolyMatrix.from_strings(R, rows)
    for k in (1, 2):
        lower = minors(M, k) + Ideal(R, M.entries())
        for m in M.minors(k + 1):
            assert lower.contains(m)
