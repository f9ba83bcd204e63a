import json

import pytest

from hilbstrata.equations import gen_fewer, gen_full
from hilbstrata.oracle import BudgetExceeded, _grading_family, contains, graded_contains
from hilbstrata.staircase import StandardSet
from hilbstrata.suites import catalog, run_suite, suite_deform, suite_fewer, suite_golden

PLANAR = StandardSet.of([(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1)])
TRIPOD = StandardSet.of([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_catalog_sizes():
    assert sum(1 for _ in catalog(2, 6, 2)) == 1 + 2 + 3 + 5 + 7 + 11
    assert sum(1 for _ in catalog(3, None, 3)) == 1 + 3 + 6 + 13 + 24


def test_golden_reports_the_misprint_only():
    res = suite_golden()
    assert res.cases == 12 and not res.ok
    assert [f.get("index") for f in res.failures if "printed" in f] == [3]
    assert res.notes


def test_fewer_planar_catalog_passes():
    assert suite_fewer(2, 5).ok


def test_fewer_three_space_counterexample():
    res = suite_fewer(3, 4, min_n=3)
    assert [f["delta"]["elements"] for f in res.failures] == [TRIPOD.to_json()["elements"]]
    assert res.failures[0]["full_in_fewer"] is False and res.failures[0]["fewer_in_full"] is True


def test_budget_makes_sets_undecided():
    # the planar square sitting in three-space has no positive grading
    A, B = gen_fewer(PLANAR).polys(), gen_full(PLANAR).polys()
    assert graded_contains(A, B) is None
    with pytest.raises(BudgetExceeded):
        contains(A, B, max_pairs=1)
    assert contains(A, B)
    res = suite_fewer(3, 4, min_n=3, max_pairs=1)
    undecided = [f for f in res.failures if None in (f["full_in_fewer"], f["fewer_in_full"])]
    assert undecided and any("undecided" in n for n in res.notes)


def test_trivial_targets_skip_the_work():
    A = gen_fewer(TRIPOD).polys()
    assert contains(A, A + [-g for g in A], method="buchberger", max_pairs=0)


def test_grading_family_is_feasible():
    variables = set()
    for g in gen_full(StandardSet.axis(3, 5)).polys():
        variables |= g.variables()
    ells = _grading_family(list(variables))
    assert len(ells) > 1
    for ell in ells:
        assert all(sum(l * (a - b) for l, a, b in zip(ell, v.row, v.col)) > 0 for v in variables)


def test_results_are_deterministic():
    a, b = run_suite("deform", max_r=3), run_suite("deform", max_r=3)
    assert a.dumps() == b.dumps()
    data = json.loads(a.dumps())
    assert set(data) == {"suite", "seed", "cases", "passed", "failures", "notes"}
    assert data["passed"] and data["cases"] == suite_deform(3).cases
    s1, s2 = run_suite("strata", max_r=3, seed=7), run_suite("strata", max_r=3, seed=7)
    assert s1.dumps() == s2.dumps() and s1.ok
    with pytest.raises(ValueError):
        run_suite("nope")
