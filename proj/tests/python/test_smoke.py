import pytest

import mslopes


def test_parse_reduces():
    assert mslopes.parse_knot("M(2/4,1/3,1/7)") == ["1/2", "1/3", "1/7"]


def test_two_bridge_rejected():
    with pytest.raises(ValueError):
        mslopes.parse_knot("M(1/2,1/3)")


def test_pretzel_report():
    r = mslopes.report("M(-1/2,1/3,1/7)")
    assert r["diameter"] == "20"
    assert r["crossing_number"] == "12"
    assert r["case_tag"] == "2-2-2-1b-b"
    assert r["theorem1"] == "pass"
    assert r["tau_max"] == {"lo": "2", "hi": "2"}
    assert r["all_pass"] is True


def test_helpers_agree_with_report():
    k = "M(-1/2,2/3,2/3)"
    r = mslopes.report(k)
    assert mslopes.diameter(k) == (r["diameter_bounds"]["lo"], r["diameter_bounds"]["hi"])
    assert mslopes.crossing_number(k) == r["crossing_number"] == "8"
    assert mslopes.case_tag(k) == r["case_tag"] == "2-3-1"
    (mx, mn) = mslopes.twist_extremes(k)
    assert mx == (r["tau_max"]["lo"], r["tau_max"]["hi"])


def test_edgepaths_and_partial_length():
    assert sorted(mslopes.basic_edgepaths("1/2")) == [["1/2", "0"], ["1/2", "1"]]
    assert mslopes.partial_edge_length("1/3", "0", "2/3") == "0"
    assert mslopes.partial_edge_length("1/3", "0", "0") == "1"


def test_links_and_candidates():
    assert mslopes.component_count("M(1/3,1/3,-1/3,-1/3)") == 2
    r = mslopes.report("M(1/2,1/3,1/7)", candidates=True)
    assert r["alternating"] is True
    assert len(r["candidates"]) == r["counts"]["candidates"]
    assert isinstance(mslopes.__version__, str)
