from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hilbstrata.equations import gen_I2, universal_family
from hilbstrata.order import TermOrder
from hilbstrata.poly import (MarkedFamily, MarkedFamilyError, Poly, PolyError, T, TPoly, TVar,
                             extend_family, leading_data, parse_poly, parse_tpoly, reduce)
from hilbstrata.staircase import StandardSet

from conftest import SQUARE

LINE2 = StandardSet.of([(0,), (1,)])
GOLDEN = {(2,): parse_poly("x1^2 - x1 - 1", 1)}


def long_division_remainder(num, den):
    # dense coefficient lists, lowest degree first; den monic
    num = [Fraction(c) for c in num]
    d = len(den) - 1
    for k in range(len(num) - 1, d - 1, -1):
        c = num[k]
        if c:
            for j, b in enumerate(den):
                num[k - d + j] -= c * b
    return num[:d]


def test_leading_data_examples():
    f = parse_poly("x1^2 + x1*x2 + x2^2", 2)
    ld = leading_data(f, TermOrder.lex(2))
    assert ld.le == (2, 0) and ld.lc == 1
    assert ld.lt == ld.lm.scale(ld.lc)
    assert leading_data(f, TermOrder.weighted((1, 2))).le == (0, 2)
    f20 = universal_family(SQUARE, SQUARE, "border")[(2, 0)]
    assert leading_data(f20, TermOrder.grevlex(2)).le == (2, 0)
    with pytest.raises(PolyError):
        leading_data(Poly.zero(2), TermOrder.lex(2))


def test_reduce_univariate():
    r = reduce(Poly.monomial((3,)), GOLDEN, LINE2)
    assert r == parse_poly("2*x1 + 1", 1)
    assert long_division_remainder([0, 0, 0, 1], [-1, -1, 1]) == [1, 2]
    assert reduce(Poly.monomial((1,)), GOLDEN, LINE2) == Poly.monomial((1,))
    assert not reduce(GOLDEN[(2,)], GOLDEN, LINE2)


def test_reduce_matches_long_division():
    for k in range(2, 12):
        r = reduce(Poly.monomial((k,)), GOLDEN, LINE2)
        rem = long_division_remainder([0] * k + [1], [-1, -1, 1])
        assert [r.coefficient((i,)).constant_value() for i in range(2)] == rem


def test_extend_univariate():
    assert extend_family(GOLDEN, (3,), LINE2) == parse_poly("x1^3 - 2*x1 - 1", 1)
    assert extend_family(GOLDEN, (2,), LINE2) == GOLDEN[(2,)]
    with pytest.raises(PolyError):
        extend_family(GOLDEN, (1,), LINE2)


def test_extend_matches_structural_relation():
    # f_(2,1) comes from x2 * f_(2,0); its coefficients must satisfy that I2 relation
    order = TermOrder.lex(2)
    fam = MarkedFamily(universal_family(SQUARE, SQUARE, "groebner", order), SQUARE, order)
    values = {}
    for alpha in SQUARE.border:
        f = fam.extend(alpha)
        for beta in SQUARE:
            values[TVar(alpha, beta)] = -f.coefficient(beta)
    relations = [g.poly for g in gen_I2(SQUARE).generators if g.provenance[:2] == ((2, 0), (0, 1))]
    assert len(relations) == 4
    for g in relations:
        assert not g.substitute(values)


def test_marked_family_rejects_bad_members():
    with pytest.raises(MarkedFamilyError):
        MarkedFamily({(2,): parse_poly("x1^2 + x1^3", 1)}, LINE2)
    with pytest.raises(MarkedFamilyError):
        MarkedFamily({(2,): parse_poly("2*x1^2 + 1", 1)}, LINE2)


def test_unordered_marking_cycles():
    fam = universal_family(SQUARE, SQUARE, "border")
    corners = {a: fam[a] for a in SQUARE.corners}
    with pytest.raises(MarkedFamilyError):
        extend_family(corners, (2, 1), SQUARE)


def test_text_round_trip():
    p = T((1, 2), (0, 0)) * T((2, 0), (1, 1)) - Fraction(3, 2) * T((0, 2), (0, 1)) * TPoly.t(2) + 5
    assert parse_tpoly(str(p)) == p
    f = universal_family(SQUARE, SQUARE, "border")[(1, 2)]
    assert parse_poly(str(f), 2) == f


# random small elements of Q[T, t] over a handful of variables
VARS = [TVar((2, 0), (0, 0)), TVar((0, 2), (1, 0)), TVar((1, 2), (1, 1))]
monos = st.tuples(st.integers(0, 2), st.integers(0, 1), st.integers(0, 2), st.integers(0, 2))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def tpolys(draw):
    out = TPoly()
    for (a, b, c, k), q in draw(st.lists(st.tuples(monos, coeffs), max_size=4)):
        term = TPoly.const(q) * TPoly.t(k)
        for v, e in zip(VARS, (a, b, c)):
            term = term * TPoly.var(v, e)
        out = out + term
    return out


@settings(max_examples=80, deadline=None)
@given(tpolys(), tpolys(), tpolys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q == q + p and p * q == q * p
    assert p - p == TPoly()


@settings(max_examples=80, deadline=None)
@given(tpolys(), tpolys(), st.lists(coeffs, min_size=4, max_size=4))
def test_evaluation_is_a_homomorphism(p, q, vals):
    point = dict(zip(VARS, vals[:3]))
    ev = lambda f: f.evaluate(point, vals[3])
    assert ev(p * q) == ev(p) * ev(q)
    assert ev(p + q) == ev(p) + ev(q)


@settings(max_examples=40, deadline=None)
@given(st.lists(coeffs, min_size=6, max_size=6), st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), coeffs),
                                                           min_size=1, max_size=5))
def test_reduce_idempotent_and_specializes(vals, raw):
    order = TermOrder.lex(2)
    fam = universal_family(SQUARE, SQUARE, "groebner", order)
    f = Poly.from_rational(2, {(a, b): c for a, b, c in raw})
    r = reduce(f, fam, SQUARE, order)
    assert r.support() <= SQUARE.members
    assert reduce(r, fam, SQUARE, order) == r
    point = dict(zip(sorted({v for g in fam.values() for v in g.variables()}, key=lambda v: v.key), vals))
    fam_q = {a: g.evaluate_params(point) for a, g in fam.items()}
    assert reduce(f, fam_q, SQUARE, order) == r.evaluate_params(point)
