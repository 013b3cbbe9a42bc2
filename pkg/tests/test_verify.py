import pytest

from lltschur import verify


def test_random_tuples_are_seeded():
    a = verify.random_tuples(30, 8, seed=7)
    assert a == verify.random_tuples(30, 8, seed=7)
    assert a != verify.random_tuples(30, 8, seed=8)
    from lltschur.llt import TwoDiagTuple

    assert all(1 <= TwoDiagTuple.parse(s).n <= 8 for s in a)


@pytest.mark.parametrize("theorem", verify.THEOREMS)
def test_small_sweeps_pass(theorem):
    max_n = min(verify.DEFAULT_MAX_N[theorem], 5)
    rep = verify.run(theorem, max_n=max_n, samples=100)
    assert rep["theorem"] == theorem
    assert rep["cases"] > 0
    assert rep["failures"] == []


def test_failures_are_reported():
    # a deliberately wrong check surfaces as a failure record
    gen, check = verify.SWEEPS["domino"]
    verify.SWEEPS["broken"] = (gen, lambda case: ("lhs", "rhs"))
    try:
        rep = verify.run("broken", max_n=3)
    finally:
        del verify.SWEEPS["broken"]
    assert len(rep["failures"]) == rep["cases"]
    assert rep["failures"][0] == {"case": [[], True], "lhs": "lhs", "rhs": "rhs"}


def test_unknown_theorem():
    with pytest.raises(KeyError):
        verify.run("nope")
