import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliqueceiling import (
    accn,
    accn_trace,
    ceiling_of_graph,
    ceilings_under,
    clique_ceiling,
    from_edges,
    gen_complete,
    gen_cycle,
    gen_gnp,
    h_threshold,
    join_universal,
    phase2,
    phase3,
    relabel,
    revised_ceilings_under,
    revised_clique_ceiling,
)

from oracles import (
    accn_by_scan,
    adjacency_sets,
    ceiling_by_definition,
    h_by_scan,
    revised_by_definition,
)

from test_graph import graphs

U = 7  # universal vertex of the worked example's join


def sets_of(g):
    return adjacency_sets(g.n, g.edges())


@given(st.lists(st.integers(0, 20), max_size=25))
def test_h_threshold_matches_scan(values):
    assert h_threshold(values) == h_by_scan(values)


def test_h_threshold_examples():
    assert h_threshold([7, 5, 2, 2, 2, 4, 3, 3]) == 3
    assert h_threshold([]) == 0
    assert h_threshold([3, 3, 3, 3]) == 3


def test_clique_ceiling_example(example_graph):
    j = join_universal(example_graph).graph
    assert clique_ceiling(j, U, 0) == 3
    assert clique_ceiling(j, U, 4) == 4
    assert all(clique_ceiling(gen_complete(4), x, y) == 4 for x in range(4) for y in range(4))


def test_revised_clique_ceiling_example(example_graph):
    j = join_universal(example_graph).graph
    assert revised_clique_ceiling(j, U, 0) == 3
    assert revised_clique_ceiling(j, U, 6) == 4
    assert revised_clique_ceiling(gen_complete(4), 1, 2) == 4


def test_ceiling_of_graph():
    assert ceiling_of_graph(gen_complete(4)) == 4
    # C(x) in a bare 6-cycle is a 3-vertex path, so every c(x:x) is 2
    assert ceiling_of_graph(gen_cycle(6)) == 2
    assert ceiling_of_graph(join_universal(gen_cycle(6)).graph) == 3


def test_ceiling_of_graph_example(example_graph):
    j = join_universal(example_graph).graph
    assert ceiling_of_graph(j) == 4
    assert revised_clique_ceiling(j, U, U) == 4


def test_general_ops_reject_isolated_vertices():
    g = from_edges(3, [(0, 1)])
    for fn in (lambda: clique_ceiling(g, 0, 1), lambda: revised_clique_ceiling(g, 0, 0),
               lambda: ceiling_of_graph(g), lambda: ceilings_under(g, 0)):
        with pytest.raises(ValueError, match="isolated"):
            fn()


def test_general_ops_reject_outside_closed_neighborhood():
    g = gen_cycle(5)
    with pytest.raises(ValueError, match="closed neighbourhood"):
        clique_ceiling(g, 0, 2)
    with pytest.raises(ValueError, match="closed neighbourhood"):
        revised_clique_ceiling(g, 0, 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8))
def test_general_ops_match_definitions(g):
    if g.n == 0 or g.min_degree < 1:
        return
    nbr = sets_of(g)
    for x in range(g.n):
        under = ceilings_under(g, x)
        revised = revised_ceilings_under(g, x)
        assert set(under) == nbr[x] | {x}
        for y in under:
            expect = ceiling_by_definition(nbr, x, y)
            assert clique_ceiling(g, x, y) == expect == under[y]
            assert revised[y] == revised_by_definition(nbr, x, y)


def test_phase2_example(example_graph):
    c = phase2(join_universal(example_graph))
    assert c.tolist() == [3, 3, 3, 3, 4, 4, 4, 4]


def test_phase2_star_and_wheel():
    assert set(phase2(join_universal(from_edges(5, []))).tolist()) == {2}
    wheel = phase2(join_universal(gen_cycle(6)))
    assert wheel.tolist() == [3] * 6 + [4]


def test_phase3_example(example_graph):
    inst = join_universal(example_graph)
    t = phase3(inst, phase2(inst))
    assert t.revised.tolist() == [3, 3, 3, 3, 4, 4, 4, 4]


def test_phase3_wheel_lowers_hub():
    inst = join_universal(gen_cycle(6))
    t = phase3(inst, phase2(inst))
    assert t.ceiling[6] == 4
    assert t.revised.tolist() == [3] * 7


def test_phase3_complete():
    inst = join_universal(gen_complete(5))
    t = phase3(inst, phase2(inst))
    assert t.revised.tolist() == [6] * 6


def test_accn_examples(example_graph):
    r = accn(example_graph)
    assert (r.bound_join, r.bound_primary) == (4, 3)
    null = accn(from_edges(3, []))
    assert (null.bound_join, null.bound_primary) == (2, 1)


def test_accn_on_empty_vertex_set():
    r = accn(from_edges(0, []))
    assert (r.bound_join, r.bound_primary) == (1, 0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_accn_matches_scan_oracle(g):
    inst = join_universal(g)
    c, revised = accn_by_scan(sets_of(inst.graph), inst.universal_vertex)
    r = accn(g)
    assert r.table.ceiling.tolist() == [c[v] for v in range(inst.graph.n)]
    assert r.table.revised.tolist() == [revised[v] for v in range(inst.graph.n)]
    # the final step revises u against already-revised values, so another
    # vertex may keep a larger (looser) revised ceiling than u
    assert r.c_star_join == r.table.revised[inst.universal_vertex]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_phases_agree_with_general_ops(g):
    if g.n == 0:
        return
    inst = join_universal(g)
    j, u = inst.graph, inst.universal_vertex
    r = accn(g)
    under = ceilings_under(j, u)
    revised = revised_ceilings_under(j, u)
    assert r.table.ceiling.tolist() == [under[v] for v in range(j.n)]
    assert all(r.table.revised[v] == revised[v] for v in range(j.n) if v != u)
    # phase 3 revises u against revised values, so it can only be tighter
    assert r.c_star_join <= revised[u] == ceiling_of_graph(j)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_order_independence(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    base, moved = accn(g), accn(relabel(g, perm))
    assert base.bound_join == moved.bound_join
    full = np.array(perm + [g.n])
    assert np.array_equal(moved.table.revised[full], base.table.revised)
    assert np.array_equal(moved.table.ceiling[full], base.table.ceiling)


def test_inplace_variant_differs_somewhere_and_is_logged(caplog):
    # the literal sequential reading is order sensitive; find a witness
    for seed in range(500):
        g = gen_gnp(8, 0.5, seed)
        inst = join_universal(g)
        c = phase2(inst)
        if not np.array_equal(phase3(inst, c, inplace=True).revised, phase3(inst, c).revised):
            break
    else:
        pytest.fail("no disagreement found")
    with caplog.at_level(logging.WARNING, logger="cliqueceiling.ceilings"):
        accn(g, check_inplace=True)
    assert "in-place" in caplog.text


def test_inplace_variant_agrees_on_example(example_graph, caplog):
    with caplog.at_level(logging.WARNING):
        accn(example_graph, check_inplace=True)
    assert caplog.text == ""


def test_trace_example(example_graph):
    tr = accn_trace(example_graph)
    row = {r.y: r for r in tr.rows}[4]
    assert set(row.a) == {U, 0, 4, 5, 6}
    assert dict(zip(row.a, row.counts))[4] == 4
    # the hand-worked table lists 4 for vertex 1 under u; the actual count is 5
    top = {r.y: r for r in tr.rows}[U]
    assert dict(zip(top.a, top.counts))[0] == 5
    assert top.c == 4
    text = tr.to_text()
    assert "5 | {u,1,5,6,7} |" in text
    assert text.splitlines()[-1] == "c*(G∨u)=4  ω(G)≤3"


def test_trace_values_match_tables():
    g = gen_gnp(10, 0.5, 3)
    tr, r = accn_trace(g), accn(g)
    for row in tr.rows:
        assert row.c == 1 + h_threshold(row.counts) == r.table.ceiling[row.y]
        assert row.c_star == r.table.revised[row.y]


def test_trace_single_vertex():
    tr = accn_trace(from_edges(1, []))
    d = tr.to_dict()
    assert len(d["vertices"]) == 2
    zero = [v for v in d["vertices"] if v["y"] == "1"][0]
    assert zero["A"] == ["u", "1"] and zero["c"] == 2


def test_trace_cycle_footer():
    tr = accn_trace(gen_cycle(6))
    assert tr.to_text().splitlines()[-1].startswith("c*(G∨u)=3")
    assert tr.to_dict()["footer"] == {"c_star_join": 3, "bound_primary": 2}
