import json

import pytest

import gec

RUNNING_EXAMPLE = {
    "mode": "smooth",
    "d": 3,
    "r": 1,
    "g": {"dimension": 3, "degree": 1, "terms": {"2": {"monomials": {"1,0,0": "1"}}}},
    "alpha": {"dimension": 3, "degree": 1, "terms": {"3": {"monomials": {"0,1,0": "1"}}}},
}


def test_mesh_counts():
    m = gec.mesh("box", dim=3, sub=2)
    assert m["dimension"] == 3
    assert len(m["vertices"]) == 27
    assert len(m["simplices"]) == 48

    tri = gec.mesh("simplex", dim=2)
    assert len(tri["simplices"]) == 1


def test_suite_names_canonical():
    names = gec.suite_names()
    assert names[0] == "exactness"
    assert "em_chain" in names
    assert "convergence" in names
    assert len(names) == 12


def test_verify_selected_suites_pass():
    scenario = dict(RUNNING_EXAMPLE, suites=["em_chain", "decomposition", "currents"])
    report = gec.verify(scenario)
    assert report["summary"]["all_pass"] is True
    assert [s["name"] for s in report["suites"]] == ["em_chain", "decomposition", "currents"]


def test_verify_is_deterministic():
    scenario = dict(RUNNING_EXAMPLE, suites=["stokes", "cup_leibniz"], seed=3)
    a = gec.verify_json(json.dumps(scenario))
    b = gec.verify_json(json.dumps(scenario))
    assert a == b


def test_sign_error_detected():
    scenario = dict(RUNNING_EXAMPLE, suites=["em_chain"], inject_sign_error=True)
    report = gec.verify(scenario)
    assert report["summary"]["all_pass"] is False


def test_power_worked_example():
    report = gec.power(RUNNING_EXAMPLE)
    assert report["power"]["boundary"] == "1/2"
    assert report["power"]["bulk"] == "1/2"
    assert report["power"]["split"] == "1/2"
    assert report["power"]["sign"] == -1
    assert gec.worked_power() == "1/2"


def test_power_refinement_table():
    report = gec.power(RUNNING_EXAMPLE, refine=3)
    rows = report["convergence"]["rows"]
    assert [r["subdivisions"] for r in rows] == [1, 2, 4]
    gaps = [r["gap"] for r in rows]
    assert gaps[0] > gaps[1] > gaps[2]
    assert report["convergence"]["first_order"] is True


def test_bad_input_raises():
    with pytest.raises(ValueError):
        gec.verify({"mode": "unheard-of"})
    with pytest.raises(ValueError):
        gec.verify(dict(RUNNING_EXAMPLE, suites=[]))
