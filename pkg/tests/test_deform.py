from fractions import Fraction

import pytest

from hilbstrata.deform import (DeformationData, DeformationError, apply_deformation, build_deformation,
                               coefficient_law_holds, deformation_pairs, monomial_limit)
from hilbstrata.equations import gen_minimal, gen_stratum
from hilbstrata.order import TermOrder
from hilbstrata.poly import T, TPoly, TVar
from hilbstrata.staircase import StandardSet, enumerate_standard_sets

from conftest import SQUARE


def ell(w, a):
    return sum(x * y for x, y in zip(w, a))


def test_pairs_and_weights():
    lex = TermOrder.lex(2)
    pairs = deformation_pairs(SQUARE, lex)
    assert ((0, 2), (1, 1)) not in pairs and ((2, 0), (1, 1)) in pairs
    D = build_deformation(SQUARE, lex)
    assert all(ell(D.weights, a) > ell(D.weights, b) for a, b in D.pairs)
    assert D.weights == (2, 1)
    assert build_deformation(StandardSet.axis(3, 4), TermOrder.lex(3)).weights == (1, 1, 1)


def test_substitution_shape():
    D = build_deformation(SQUARE, TermOrder.lex(2))
    v = TVar((2, 0), (0, 1))
    assert D.substitution([v])[v] == TPoly.t(3) * T((2, 0), (0, 1))
    bad = DeformationData(SQUARE, D.order, (0, 1), D.pairs)
    with pytest.raises(DeformationError):
        bad.substitution([v])


@pytest.mark.parametrize("kind", ["lex", "grevlex", "grlex"])
def test_homogeneity_and_specializations(kind):
    for r in range(1, 5):
        for d in enumerate_standard_sets(2, r):
            order = TermOrder(kind, 2)
            D = build_deformation(d, order)
            out = apply_deformation(gen_stratum(d, order), D)
            assert all(w > 0 for w in out.t_weights)
            for base, bent, w in out.rows():
                assert bent.poly == base.poly * TPoly.t(w)
            assert out.specialize(1) == out.base.polys()
            assert not any(out.specialize(0))


def test_monomial_limit_and_coefficient_law():
    for order in (TermOrder.lex(2), TermOrder.grevlex(2), TermOrder.lex(2, (1, 0))):
        for r in range(1, 5):
            for d in enumerate_standard_sets(2, r):
                D = build_deformation(d, order)
                assert monomial_limit(D)
                assert coefficient_law_holds(D)


def test_three_variables():
    order = TermOrder.grevlex(3)
    for d in enumerate_standard_sets(3, 3):
        D = build_deformation(d, order)
        out = apply_deformation(gen_stratum(d, order), D)
        assert all(w > 0 for w in out.t_weights)
        assert monomial_limit(D)


def test_intermediate_values_interpolate():
    # at t = 2 every generator is 2^w times itself
    d = StandardSet.of([(0, 0), (1, 0), (0, 1)])
    order = TermOrder.grevlex(2)
    out = apply_deformation(gen_stratum(d, order), build_deformation(d, order))
    for (base, _, w), image in zip(out.rows(), out.specialize(Fraction(2))):
        assert image == base.poly * TPoly.const(2 ** w)


def test_minimal_presentation_deforms_too():
    order = TermOrder.lex(2)
    E = gen_minimal(SQUARE, order)
    D = build_deformation(SQUARE, order)
    for g in E.generators:
        sub = D.substitution(g.poly.variables())
        image = g.poly.substitute(sub)
        (w,) = image.t_degrees()
        assert image == g.poly * TPoly.t(w) and w > 0


def test_report_is_plain_data():
    order = TermOrder.lex(2)
    rep = apply_deformation(gen_stratum(SQUARE, order), build_deformation(SQUARE, order)).report()
    assert rep["weights"] == [2, 1] and rep["order"] == "lex"
    assert all(g["w"] > 0 for g in rep["generators"])


def test_mismatched_inputs():
    D = build_deformation(SQUARE, TermOrder.lex(2))
    other = StandardSet.axis(2, 4)
    with pytest.raises(DeformationError):
        apply_deformation(gen_stratum(other, TermOrder.lex(2)), D)
    with pytest.raises(DeformationError):
        build_deformation(SQUARE, TermOrder.lex(3))
