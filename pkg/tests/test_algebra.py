from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eids.algebra import (
    GF,
    PolyMatrix,
    PolyRing,
    ParseError,
    blocks,
    degrevlex,
    lex,
    negdegrevlex,
    neglex,
)
from eids.algebra.ring import DegreeOverflow

R3 = PolyRing(["x", "y", "z"])


def test_add_cancels():
    x, y = R3.gen("x"), R3.gen("y")
    assert (x + y) + (-y) == x


def test_difference_of_squares():
    assert R3("(x+y)*(x-y)") == R3("x^2-y^2")


def test_prime_field_wraps():
    F = GF(32003)
    R = PolyRing(["x"], field=F)
    x = R.gen("x")
    assert (x.scale(32002) + x).is_zero()
    # against plain integers mod p
    assert F(32002 * 5 + 7) == (32002 * 5 + 7) % 32003


def test_rationals_canonical():
    f = R3("2/4*x + 3/6")
    assert str(f) == "1/2*x+1/2"


def test_degrevlex_compare():
    R = PolyRing(["x", "y"], degrevlex(["x", "y"]))
    assert R.compare(R("x^2").lm(), R("x*y").lm()) > 0


def test_local_block_prefers_one():
    R = PolyRing(["x", "y"], neglex(["x", "y"]))
    assert R.compare(R.one().lm(), R.gen("x").lm()) > 0


def test_mixed_block_order():
    R = PolyRing(["s", "x"], blocks(("lex", ["s"]), ("neglex", ["x"])))
    sx = R("s*x").lm()
    x2 = R("x^2").lm()
    assert R.compare(sx, x2) > 0


@pytest.mark.parametrize(
    "text,local,expected",
    [("x^2+x^3", ["x", "y", "z"], 2), ("1+x", ["x", "y", "z"], 0)],
)
def test_order_of(text, local, expected):
    assert R3(text).order_in(local) == expected


def test_order_ignores_global_vars():
    R = PolyRing(["s", "x"])
    assert R("s*x+s^2*x^3").order_in(["x"]) == 1


def test_parse_rejects_juxtaposition():
    with pytest.raises(ParseError):
        R3("2x")


def test_exponent_overflow():
    with pytest.raises(DegreeOverflow):
        R3("x^5000")


def test_matrix_minors_generic():
    R = PolyRing([f"x{i}" for i in range(1, 7)])
    M = PolyMatrix.from_strings(R, [["x1", "x2", "x3"], ["x4", "x5", "x6"]])
    assert M.minors(2) == [R("x1*x5-x2*x4"), R("x1*x6-x3*x4"), R("x2*x6-x3*x5")]


# -- properties ---------------------------------------------------------------

coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)
term = st.tuples(coef, st.tuples(*[st.integers(0, 3)] * 3))
polys = st.lists(term, max_size=5)


def _naive(terms):
    out = {}
    for c, e in terms:
        out[e] = out.get(e, Fraction(0)) + Fraction(c)
    return {e: c for e, c in out.items() if c}


def _naive_mul(a, b):
    out = {}
    for (ea, ca), (eb, cb) in product(a.items(), b.items()):
        e = tuple(i + j for i, j in zip(ea, eb))
        out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c}


def _build(terms):
    f = R3.zero()
    for c, e in terms:
        f = f + R3.one().scale(R3.field(c)).mul_term(R3.key(e), R3.field(1))
    return f


def _as_dict(f):
    return {R3.exps(k): Fraction(R3.field.to_fraction(c)) for k, c in f.terms.items()}


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms_against_dense_oracle(a, b, c):
    fa, fb, fc = _build(a), _build(b), _build(c)
    assert (fa * fb) * fc == fa * (fb * fc)
    assert fa * (fb + fc) == fa * fb + fa * fc
    assert _as_dict(fa * fb) == _naive_mul(_naive(a), _naive(b))


@settings(max_examples=60, deadline=None)
@given(polys)
def test_print_parse_round_trip(a):
    f = _build(a)
    assert R3(str(f)) == f


mono = st.tuples(*[st.integers(0, 4)] * 3)
orders = st.sampled_from(
    [degrevlex(["x", "y", "z"]), lex(["x", "y", "z"]), negdegrevlex(["x", "y", "z"]),
     blocks(("lex", ["x"]), ("negdegrevlex", ["y", "z"]))]
)


@settings(max_examples=100, deadline=None)
@given(orders, mono, mono, mono)
def test_orders_total_and_multiplicative(order, a, b, c):
    R = PolyRing(["x", "y", "z"], order)
    ka, kb, kc = R.key(a), R.key(b), R.key(c)
    ab = R.compare(ka, kb)
    assert ab == -R.compare(kb, ka)
    assert (ab == 0) == (a == b)
    if ab > 0:
        assert R.compare(R.mul_keys(ka, kc), R.mul_keys(kb, kc)) > 0
    if ab > 0 and R.compare(kb, kc) > 0:
        assert R.compare(ka, kc) > 0
