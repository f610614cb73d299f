import networkx as nx
import pytest

from conftest import digraph, flow_row, table_of
from trampnet.errors import ComputeError, DataError
from trampnet.graph import (
    EdgeWeights,
    TradeGraph,
    avg_path_length,
    build_graph,
    components,
    density,
    diameter,
    edge_rows,
    global_report,
    graph_to_json,
    gscc,
    gwcc,
    mean_degree,
    undirected_projection,
)
from trampnet.ingest import clean_flows


def _complete(n):
    return digraph([(u, v) for u in range(n) for v in range(n) if u != v])


# ------------- build -------------


def test_build_aggregates_parallel_flows():
    table = clean_flows(table_of([
        flow_row(1, 2, dwt=11300, volume=5500),
        flow_row(1, 2, dwt=20000, volume=4500),
    ]))
    g = build_graph(table)

    assert g.edges() == [(1, 2)]
    assert g.weights(1, 2) == EdgeWeights(frequency=2, dwt_total=31300, volume_total=10000)


def test_build_uses_trade_flow_edges_only():
    table = clean_flows(table_of([flow_row(10, 20), flow_row(10, 30)]))
    g = build_graph(table)

    assert g.edges() == [(10, 20), (10, 30)]
    assert g.in_degree() == {10: 0, 20: 1, 30: 1}
    assert g.out_degree()[10] == 2


def test_build_keeps_port_attributes():
    table = clean_flows(table_of([
        flow_row(1, 2, load_port_name="Montreal", load_country="Canada", load_region="USEC"),
    ]))
    info = build_graph(table).port(1)
    assert (info.name, info.region, info.country) == ("Montreal", "USEC", "Canada")


def test_build_rejects_self_loop():
    with pytest.raises(DataError, match="self-loop"):
        build_graph(table_of([flow_row(5, 5)]))


def test_trade_graph_rejects_self_loop():
    g = nx.DiGraph()
    g.add_edge(1, 1)
    with pytest.raises(ValueError):
        TradeGraph(g)


def test_export_lists_weights():
    g = digraph([(1, 2)], weights={(1, 2): EdgeWeights(3, 90.0, 60.0)})
    data = graph_to_json(g)
    assert data["edges"] == [
        {"src": 1, "dst": 2, "frequency": 3, "dwt_total": 90.0, "volume_total": 60.0}
    ]
    assert edge_rows(g) == [(1, 2, 3, 90.0, 60.0)]


def test_projection_sums_both_directions():
    weights = {(1, 2): EdgeWeights(2, 1.0, 1.0), (2, 1): EdgeWeights(3, 1.0, 1.0)}
    proj = undirected_projection(digraph([(1, 2), (2, 1)], weights=weights), "frequency")
    assert proj.number_of_edges() == 1
    assert proj.edges[1, 2]["weight"] == 5


# ------------- components -------------


def test_strong_components_largest_first():
    found = components(digraph([(1, 2), (2, 1), (3, 4)]), "strong")
    assert found.members[0] == frozenset({1, 2})
    assert found.sizes == [2, 1, 1]


def test_path_components():
    g = digraph([(1, 2), (2, 3)])
    assert len(components(g, "weak")) == 1
    assert len(components(g, "strong")) == 3


def test_components_empty_graph():
    assert len(components(digraph([]), "weak")) == 0


def test_gscc_drops_pendant():
    g = gscc(digraph([(1, 2), (2, 1), (2, 3)]))
    assert g.nodes() == [1, 2]
    assert g.edges() == [(1, 2), (2, 1)]


def test_gscc_of_acyclic_graph_is_single_node():
    g = gscc(digraph([(1, 2), (2, 3)]))
    assert g.nodes() == [1]


def test_gscc_empty_graph():
    with pytest.raises(ComputeError):
        gscc(digraph([]))


# ------------- distances -------------


def test_diameter_examples():
    assert diameter(digraph([(1, 2), (2, 3), (3, 4)]), "undirected") == 3
    assert diameter(digraph([(1, 2), (2, 3), (3, 1)]), "directed") == 2
    assert diameter(_complete(5), "directed") == 1


def test_diameter_rejects_disconnected_input():
    with pytest.raises(ComputeError):
        diameter(digraph([(1, 2), (3, 4)]), "undirected")
    with pytest.raises(ComputeError):
        diameter(digraph([(1, 2)]), "directed")


def test_avg_path_length_examples(triangle):
    assert avg_path_length(triangle) == pytest.approx(1.5)
    assert avg_path_length(_complete(4)) == pytest.approx(1.0)
    star = digraph([(0, i) for i in (1, 2, 3)] + [(i, 0) for i in (1, 2, 3)])
    assert avg_path_length(star) == pytest.approx(1.5)


def test_avg_path_length_needs_strong_connectivity():
    with pytest.raises(ComputeError):
        avg_path_length(digraph([(1, 2)]))


# ------------- global report -------------


def test_report_single_edge():
    r = global_report(digraph([(1, 2)]))
    assert (r.n, r.e, r.n_w, r.n_s) == (2, 1, 1, 2)
    assert r.k == pytest.approx(0.5)
    assert r.phi == pytest.approx(0.5)
    assert r.c == 0
    assert r.l == 0 and r.d_s == 0
    assert r.a is None


def test_report_directed_cycle(triangle):
    r = global_report(triangle)
    assert r.n_s == 1
    assert r.p_s == 1
    assert r.l == pytest.approx(1.5)
    assert r.d_s == 2
    assert r.c == pytest.approx(1.0)


def test_report_bounds():
    r = global_report(digraph([(1, 2), (2, 1), (2, 3), (3, 4), (4, 2), (5, 6)]))
    assert 0 < r.p_s <= r.p_w <= 1
    assert r.n_w <= r.n_s
    assert r.d_w == 2


def test_report_weak_figures_come_from_the_gwcc():
    g = digraph([(1, 2), (2, 1), (2, 3), (3, 4), (7, 8)])
    giant = gwcc(g)
    assert giant.nodes() == [1, 2, 3, 4]
    r = global_report(g)
    assert r.p_w == pytest.approx(giant.n / g.n)
    assert r.d_w == diameter(giant, "undirected") == 3
    assert (r.n_w, r.d_s) == (2, 1)


@pytest.mark.parametrize(
    "n, e, k, phi",
    [
        (2748, 171631, 62.46, 0.023),
        (1459, 22966, 15.74, 0.011),
        (1525, 19206, 12.59, 0.008),
        (902, 5970, 6.62, 0.007),
    ],
)
def test_degree_and_density_arithmetic(n, e, k, phi):
    assert mean_degree(n, e) == pytest.approx(k, abs=0.01)
    assert density(n, e) == pytest.approx(phi, abs=0.01)
