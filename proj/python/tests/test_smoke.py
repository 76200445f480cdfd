"""Smoke tests for the berge_lab python module."""

import pytest

import berge_lab as bl


def test_star_construction_and_circumference():
    h = bl.make_star(7, 4)
    assert h.n == 7
    assert h.edge_count() == 4
    assert h.is_uniform(4)
    assert bl.berge_circumference(h) == 3
    assert bl.longest_berge_path(h) == 4


def test_hg_round_trip():
    h = bl.make_block_tree(5, 4, 2)
    text = bl.to_hg(h)
    back = bl.from_hg(text)
    assert bl.to_hg(back) == text
    assert back.n == 11 and back.edge_count() == 6


def test_verdict_on_block_tree():
    h = bl.make_block_tree(5, 4, 2)
    rep = bl.check_theorem(h, "eg-full", 4, 5)
    assert rep["applicable"] and rep["holds"] and rep["tight"]
    assert rep["class"] == "block_tree"
    assert rep["count"] == 6 and rep["bound"] == (6, 1)
    assert ("berge-circumference<k", True) in rep["hypotheses"]


def test_frame_verdict_is_tight_on_t1_family():
    f = bl.make_t1_family(5, 4, 1, 1)
    rep = bl.check_frame_theorem(f, "t1", 4)
    assert rep["applicable"] and rep["tight"] and rep["class"] == "t1_family"


def test_bound_value_and_ids():
    assert bl.bound_value("eg-full", 6, 4, 5) == (3, 1)
    assert bl.bound_value("eg", 7, 4, 5) == (18, 5)
    ids = bl.theorem_ids()
    assert "eg-full" in ids and "conjecture" in ids and len(ids) == 10
    with pytest.raises(ValueError):
        bl.bound_value("nope", 6, 4, 5)


def test_saturation_closure():
    c6 = bl.BipartiteGraph(3, 3)
    for x, y in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]:
        c6.add_edge(x, y)
    closure = bl.saturate(c6, 4)
    assert closure.edge_count() == 9
    assert bl.is_saturated(closure, 4)
    assert bl.saturate(closure, 4) == closure


def test_campaign_census():
    res = bl.run_campaign("rgraph", 6, 5, 4, "eg-full")
    assert res["scanned"] == 64
    assert res["applicable"] == 42
    assert res["violations"] == []
    assert len(res["tight"]) == 20
    assert all(t["class"] == "block_tree" for t in res["tight"])
    # Every tight instance parses back to a 3-edge hypergraph on 6 vertices.
    for t in res["tight"]:
        h = bl.from_hg(t["instance"])
        assert h.n == 6 and h.edge_count() == 3


def test_conjecture_scan_consistent():
    scan = bl.conjecture_scan(4, 6, 0, 1)
    assert scan["consistent"]
    assert scan["scanned"] == 32768
    assert scan["best_count"] == 3
    assert scan["bound"] == (15, 4)


def test_disintegrate_core():
    g = bl.BipartiteGraph(3, 3)
    for x, y in [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)]:
        g.add_edge(x, y)
    keep_x, keep_y = bl.disintegrate(g, 1, 0b111, 0b111)
    assert keep_x == 0b111 and keep_y == 0b111
    keep_x, keep_y = bl.disintegrate(g, 2, 0b111, 0b111)
    assert keep_x == 0 and keep_y == 0


def test_lift_preserves_edges():
    h = bl.MultiHypergraph(5)
    h.add_edge([0, 1, 2])
    h.add_edge([2, 3, 4])
    lifted = bl.lift_for_paths(h)
    assert lifted.n == 6
    assert lifted.edge_count() == h.edge_count()
    assert all(e[-1] == 5 for e in lifted.edges)
