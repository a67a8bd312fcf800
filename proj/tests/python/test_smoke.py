import cmath
import math

import pytest

import hypergm


def test_series_matches_logarithm():
    got = hypergm.hyp2f1(1.0, 1.0, 2.0, 0.5)
    assert abs(got - 2.0 * math.log(2.0)) < 1e-13


def test_derive_matches_reference():
    out = hypergm.derive("inf0", "1/3", "1/5", "5/7")
    assert out["matches_reference"]
    assert out["det"] == "(1/15)/(z^2 - z)"
    # A_0 = [[0,0],[c-a,-c]] at a=1/3, c=5/7
    assert out["derived"]["residues"][0] == [["0", "0"], ["8/21", "-5/7"]]
    assert out["scalar_q"] == "(1/15)/(z^2 - z)"


def test_derive_rejects_unknown_pair():
    with pytest.raises(hypergm.HypergmError):
        hypergm.derive("bogus", "1/3", "1/5", "5/7")


def test_weyl_reduce_parameter_map():
    out = hypergm.weyl_reduce(["-18/35", "-2/3", "-13/21", "-1/5"])
    assert (out["a"], out["b"], out["c"]) == ("1/3", "1/5", "5/7")


def test_cycle_relation_to_first_local_solution():
    rep = hypergm.relation_check(1, 1.0 / 3, 0.2, 5.0 / 7, 0.4)
    assert rep["abs_err"] / abs(rep["rhs"]) < 1e-10


def test_cycle_integral_is_beta_times_series():
    a, b, c, z = 1.0 / 3, 0.2, 5.0 / 7, 0.4
    integral = hypergm.cycle_integral(a, b, c, z, "01")
    series = hypergm.hyp2f1(a, b, c, z)
    beta = math.gamma(a) * math.gamma(c - a) / math.gamma(c)
    assert abs(integral - beta * series) < 1e-10 * abs(integral)


def test_kummer_cut_sides_conjugate():
    up = hypergm.kummer_local(6, 1.0 / 3, 0.2, 5.0 / 7, 0.4, "above")
    dn = hypergm.kummer_local(6, 1.0 / 3, 0.2, 5.0 / 7, 0.4, "below")
    assert cmath.isclose(up.conjugate(), dn, rel_tol=1e-12)


def test_normalize_matrix_cross_ratio():
    zs = hypergm.normalize_matrix([["1", "0", "1", "1"], ["0", "1", "-1", "-2/5"]])
    assert zs == ["2/5"]


def test_verify_suite_runs_clean():
    out = hypergm.verify("det", samples=3, seed=7)
    assert out["failures"] == 0
    assert out["checks"] == 18
