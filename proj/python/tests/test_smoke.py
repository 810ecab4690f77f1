import pytest

import sympinv


def test_identity_gf3():
    r = sympinv.classify([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], p=3)
    assert r["bireflectional"]["verdict"] == "true"
    assert r["inv_skew"]["verdict"] == "false"


def test_transvection():
    r = sympinv.classify([[1, 1], [0, 1]], p=3)
    assert r["two_skew"]["verdict"] == "false"
    assert r["two_skew"]["method"] == "criterion"
    w = sympinv.wall([[1, 1], [0, 1]], p=3)
    assert w["theta_is_square"] is False


def test_rational_input():
    r = sympinv.classify([["1/2", 0], [0, 2]], p=None)
    assert r["reversible_gl"] is True


def test_errors():
    with pytest.raises(sympinv.NotSymplectic):
        sympinv.classify([[1, 1], [1, 1]], p=3)
    with pytest.raises(sympinv.UnsupportedField):
        sympinv.classify([[1, 0], [0, 1]], p=4)
    with pytest.raises(sympinv.BudgetExceeded):
        sympinv.class_table_csv(3, 3)


def test_enumerate_and_suites():
    assert sympinv.symplectic_group_order(2, 3) == 51840
    csv = sympinv.class_table_csv(1, 3)
    assert sum(int(line.split(",")[2]) for line in csv.splitlines()[1:]) == 24
    r = sympinv.run_suite("theorem4", n=1, q=3)
    assert r["passed"] and not r["skipped"]
    assert sympinv.run_suite("theorem4", q=5)["skipped"]
