import random
from fractions import Fraction

import pytest

from hilbstrata.charts import (ChartBlocks, ChartError, determinant, gluing_map, intersection_det, joint_rows,
                               stratum_in_chart)
from hilbstrata.equations import gen_stratum
from hilbstrata.oracle import PointConfiguration, chart_values, point_ideal
from hilbstrata.order import TermOrder
from hilbstrata.poly import T, TPoly, TVar
from hilbstrata.staircase import StandardSet, enumerate_standard_sets

from conftest import SQUARE

ONE_X = StandardSet.of([(0, 0), (1, 0)])
ONE_Y = StandardSet.of([(0, 0), (0, 1)])


def random_values(variables, rng):
    return {v: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for v in variables}


def mat_mul(a, b, inner):
    return {r: {c: sum(a[r][k] * b[k][c] for k in inner) for c in next(iter(b.values()))} for r in a}


def test_intersection_det_examples():
    assert intersection_det(SQUARE, SQUARE) == TPoly.const(1)
    assert intersection_det(ONE_X, ONE_Y) == T((0, 1), (1, 0))
    eps = StandardSet.of([(0, 0), (1, 0), (2, 0), (0, 1)])
    assert intersection_det(SQUARE, eps) == T((2, 0), (1, 1))
    with pytest.raises(ChartError):
        intersection_det(SQUARE, ONE_X)


def test_determinant_against_permutation_expansion():
    rows, cols = [(0,), (1,), (2,)], [(3,), (4,), (5,)]
    m = {(r, c): TPoly.var(TVar(r, c)) for r in rows for c in cols}
    got = determinant(rows, cols, lambda r, c: m[(r, c)])
    import itertools
    want = TPoly()
    for perm in itertools.permutations(range(3)):
        sign = (-1) ** sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3))
        term = TPoly.const(sign)
        for i, j in enumerate(perm):
            term = term * m[(rows[i], cols[j])]
        want = want + term
    assert got == want


def test_blocks_partition_the_rows():
    eps = StandardSet.of([(0, 0), (1, 0), (2, 0), (0, 1)])
    b = ChartBlocks.build(SQUARE, eps)
    assert set(b.rows) == set(b.common) | set(b.d_only) | set(b.e_only) | set(b.rho)
    assert len(b.rows) == len(b.common) + len(b.d_only) + len(b.e_only) + len(b.rho)
    assert set(joint_rows(SQUARE, eps)) == (SQUARE.members | eps.members) | set(
        StandardSet(2, tuple(SQUARE.members | eps.members)).border)
    assert b.block("T32") == {(2, 0): {(1, 1): T((2, 0), (1, 1))}}
    assert b.block("U22") == {(1, 1): {(2, 0): TPoly.var(TVar((1, 1), (2, 0), "U"))}}


def test_same_chart_is_identity():
    for d in enumerate_standard_sets(2, 3):
        assert gluing_map(d, d).is_identity()


def test_two_point_example():
    cfg = PointConfiguration(((0, 0), (1, 1)))
    gm = gluing_map(ONE_X, ONE_Y)
    tv = chart_values(cfg, ONE_X, rows=gm.blocks.rows)
    direct = chart_values(cfg, ONE_Y, rows=gm.blocks.rows, name="U")
    pushed = gm.evaluate(tv)
    assert pushed and all(direct[v] == c for v, c in pushed.items())


def test_round_trip_on_random_specializations():
    rng = random.Random(11)
    pairs = [(ONE_X, ONE_Y), (SQUARE, StandardSet.of([(0, 0), (1, 0), (2, 0), (0, 1)])),
             (StandardSet.axis(2, 3), StandardSet.of([(0, 0), (1, 0), (0, 1)]))]
    for d, e in pairs:
        there, back = gluing_map(d, e), gluing_map(e, d)
        variables = {TVar(a, b) for a in there.blocks.rows if a not in d for b in d}
        done = 0
        while done < 20:
            tv = random_values(variables, rng)
            if there.denominator.evaluate(tv) == 0:
                continue
            done += 1
            u = there.evaluate(tv)
            again = back.evaluate({TVar(v.row, v.col): c for v, c in u.items()})
            assert all(tv[TVar(v.row, v.col)] == c for v, c in again.items())
            # the two boxes are mutually inverse
            tb = {a: {b: there.blocks.T(a, b).evaluate(tv) for b in d} for a in e}
            ub = there.evaluate_u_box(tv)
            ub = {a: {x: ub[(a, x)] for x in e} for a in d}
            prod = mat_mul(tb, ub, list(d))
            assert all(prod[a][x] == (a == x) for a in e for x in e)


def test_det_vanishes_exactly_off_the_chart():
    rng = random.Random(5)
    sets = enumerate_standard_sets(2, 3)
    for _ in range(15):
        cfg = PointConfiguration.random(2, 3, rng, height=2)
        for d in sets:
            tv = chart_values(cfg, d, rows=joint_rows(d, d) + tuple(a for e in sets for a in joint_rows(d, e)))
            if tv is None:
                continue
            for e in sets:
                det = intersection_det(d, e).evaluate(tv)
                assert (det != 0) == (chart_values(cfg, e) is not None)


def test_stratum_in_chart_examples():
    lex = TermOrder.lex(2)
    same = stratum_in_chart(SQUARE, SQUARE, lex)
    assert same.killed() == gen_stratum(SQUARE, lex, base=None).killed_variables()
    # with y > x nothing is killed on the {1, x} chart
    ylex = TermOrder.lex(2, (1, 0))
    sic = stratum_in_chart(ONE_X, ONE_Y, TermOrder.lex(2, (1, 0)))
    assert sic.killed() == set() and sic.delta_det == T((0, 1), (1, 0)) and not sic.is_empty()
    # with x > y the determinant itself is killed: {1, x} is not a lex staircase there
    assert stratum_in_chart(ONE_X, ONE_Y, lex).is_empty()
    assert ylex.greater((0, 1), (1, 0))


def test_stratum_witness_is_one_sided():
    rng = random.Random(2)
    order = TermOrder.grevlex(2)
    sets = enumerate_standard_sets(2, 3)
    checked = 0
    for _ in range(20):
        cfg = PointConfiguration.random(2, 3, rng, height=3)
        true_delta, _ = point_ideal(cfg, order)
        for d in sets:
            for e in sets:
                if d == e:
                    continue
                tv_d = chart_values(cfg, d, rows=joint_rows(d, e))
                tv_e = chart_values(cfg, e, rows=joint_rows(d, e))
                if tv_d is None or tv_e is None:
                    continue
                in_d = stratum_in_chart(d, e, order).holds_at(tv_d)
                in_e = stratum_in_chart(e, d, order).holds_at(tv_e)
                assert not (in_d and in_e)
                assert in_d == (true_delta == d) and in_e == (true_delta == e)
                checked += 1
    assert checked > 0


def test_eps_side_conditions_agree():
    rng = random.Random(9)
    order = TermOrder.grevlex(2)
    for d in enumerate_standard_sets(2, 3):
        for e in enumerate_standard_sets(2, 3):
            sic = stratum_in_chart(d, e, order)
            for _ in range(5):
                cfg = PointConfiguration.random(2, 3, rng)
                rows = joint_rows(d, e)
                tv, uv = chart_values(cfg, d, rows=rows), chart_values(cfg, e, rows=rows, name="U")
                if tv is None or uv is None:
                    continue
                lhs = [c.evaluate(tv) == 0 for c in sic.delta_conditions]
                rhs = [c.evaluate(uv) == 0 for c in sic.eps_conditions]
                assert lhs == rhs


def test_json_shape():
    data = gluing_map(ONE_X, ONE_Y).to_json()
    assert data["denominator"] == "T[(0,1)|(1,0)]"
    assert all(set(s) == {"u_var", "expression"} for s in data["substitution"])
