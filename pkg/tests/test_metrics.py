import itertools
import json
import math

import networkx as nx
import pytest

from conftest import digraph
from trampnet.errors import ComputeError, DataError
from trampnet.graph import EdgeWeights, PortInfo
from trampnet.metrics import (
    MEASURES,
    CentralityVector,
    PowerLawFit,
    assortativity,
    betweenness,
    centrality_correlations,
    centrality_to_csv,
    centrality_to_json,
    country_rankings,
    degree_centrality,
    degree_histogram,
    directed_assortativity,
    fit_degree_histogram,
    fit_power_law,
    node_centralities,
    power_law_rows,
    rank_countries,
    strength_centrality,
    transitivity,
)


def _complete(n):
    return digraph([(u, v) for u in range(n) for v in range(n) if u != v])


def _brute_betweenness(g):
    """Pair dependencies summed over every ordered pair by path enumeration."""
    out = {v: 0.0 for v in g.nodes()}
    for s, t in itertools.permutations(g.nodes(), 2):
        if not nx.has_path(g.nx, s, t):
            continue
        paths = list(nx.all_shortest_paths(g.nx, s, t))
        for path in paths:
            for v in path[1:-1]:
                out[v] += 1.0 / len(paths)
    scale = 1.0 / ((g.n - 1) * (g.n - 2))
    return {v: b * scale for v, b in out.items()}


# ------------- degree and strength -------------


def test_degree_of_star_hub():
    g = digraph([(0, 1), (0, 2), (0, 3)])
    assert degree_centrality(g, "out").values[0] == 3
    assert degree_centrality(g, "out", normalized=True).values[0] == pytest.approx(1.0)


def test_degree_of_isolated_port():
    g = digraph([(1, 2)], nodes=[9])
    assert degree_centrality(g, "in").values[9] == 0
    assert degree_centrality(g, "out").values[9] == 0


def test_degree_splits_direction():
    g = digraph([("X", "Y"), ("X", "Z")])
    assert degree_centrality(g, "out").values["X"] == 2
    vec = degree_centrality(g, "in")
    assert vec.measure == "k_i"
    assert vec.values["X"] == 0


def test_normalized_degree_needs_two_ports():
    with pytest.raises(ComputeError):
        degree_centrality(digraph([], nodes=[1]), "out", normalized=True)


def test_strength_sums_weights():
    weights = {(1, 2): EdgeWeights(1, 11300.0, 5500.0), (1, 3): EdgeWeights(2, 9000.0, 4500.0)}
    g = digraph([(1, 2), (1, 3)], weights=weights)

    vol = strength_centrality(g, "out", "volume")
    assert vol.measure == "s_o_t"
    assert vol.values[1] == pytest.approx(10000)
    assert vol.values[2] == 0
    assert strength_centrality(g, "out", "frequency").values[1] == 3
    assert strength_centrality(g, "in", "dwt").values[3] == pytest.approx(9000)


def test_strength_rejects_unknown_weight():
    with pytest.raises(ValueError):
        strength_centrality(digraph([(1, 2)]), "out", "tonnes")


# ------------- betweenness -------------


def test_betweenness_of_path():
    b = betweenness(digraph([("A", "B"), ("B", "C")]))
    assert b.values["B"] == pytest.approx(0.5)
    assert b.values["A"] == 0 and b.values["C"] == 0


def test_betweenness_of_complete_digraph():
    assert all(v == 0 for v in betweenness(_complete(5)).values.values())


def test_betweenness_splits_parallel_routes():
    g = digraph([("A", "B"), ("B", "D"), ("A", "C"), ("C", "D")])
    b = betweenness(g)
    # one geodesic pair (A, D) split over two routes, divisor (n-1)(n-2) = 6
    assert b.values["B"] == pytest.approx(0.5 / 6)
    assert b.values["C"] == pytest.approx(0.5 / 6)


def test_betweenness_raw():
    b = betweenness(digraph([(1, 2), (2, 3)]), normalized=False)
    assert b.values[2] == pytest.approx(1.0)


def test_betweenness_needs_three_ports():
    with pytest.raises(ComputeError):
        betweenness(digraph([(1, 2)]))


def test_betweenness_matches_path_enumeration():
    # 500 random digraphs of 3..8 ports, sparse to dense
    for seed in range(500):
        n = 3 + seed % 6
        p = (0.15, 0.3, 0.45, 0.6)[seed % 4]
        rand = nx.gnp_random_graph(n, p, seed=seed, directed=True)
        g = digraph(list(rand.edges), nodes=range(n))
        expected = _brute_betweenness(g)
        got = betweenness(g).values
        for v in g.nodes():
            assert got[v] == pytest.approx(expected[v], abs=1e-9), (seed, v)


# ------------- clustering and assortativity -------------


def test_transitivity_examples(triangle):
    assert transitivity(triangle) == pytest.approx(1.0)
    assert transitivity(digraph([(1, 2), (2, 3)])) == 0.0
    square = digraph([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    # two triangles, eight connected triples
    assert transitivity(square) == pytest.approx(0.75)


def test_transitivity_ignores_direction():
    assert transitivity(digraph([(1, 2), (2, 3), (1, 3)])) == pytest.approx(1.0)


def test_assortativity_of_star():
    assert assortativity(digraph([(0, i) for i in range(1, 5)])) == pytest.approx(-1.0)


@pytest.mark.parametrize(
    "edges",
    [
        [(1, 2), (3, 4)],
        [(1, 3), (1, 4), (2, 3), (2, 4)],
    ],
)
def test_assortativity_undefined_for_regular_graphs(edges):
    with pytest.raises(ComputeError, match="undefined assortativity"):
        assortativity(digraph(edges))


def test_directed_assortativity_is_finite():
    g = digraph([(0, 1), (0, 2), (0, 3), (1, 2), (3, 0), (2, 4)])
    assert -1.0 <= directed_assortativity(g, "out", "in") <= 1.0


# ------------- correlations -------------


def test_unit_weights_make_degree_and_strength_identical():
    g = digraph([(0, 1), (0, 2), (1, 2), (2, 3), (3, 0), (3, 1)])
    m = centrality_correlations(g)
    assert m.get("k_i", "s_i_f") == pytest.approx(1.0)
    assert m.get("k_o", "s_o_t") == pytest.approx(1.0)


def test_pure_exporters_and_importers_anticorrelate():
    g = digraph([(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])
    m = centrality_correlations(g)
    assert m.get("k_i", "k_o") < 0


def test_correlation_matrix_is_symmetric_with_unit_diagonal():
    weights = {(0, 1): EdgeWeights(3, 10.0, 7.0), (2, 0): EdgeWeights(1, 50.0, 1.0)}
    g = digraph([(0, 1), (1, 2), (2, 0), (0, 3), (3, 2)], weights=weights)
    m = centrality_correlations(g)
    for a in m.measures:
        assert m.get(a, a) == pytest.approx(1.0)
        for b in m.measures:
            assert m.get(a, b) == pytest.approx(m.get(b, a))
            assert -1.0 <= m.get(a, b) <= 1.0


def test_constant_measure_is_undefined(triangle):
    m = centrality_correlations(triangle)
    assert "k_i" in m.undefined
    assert m.get("k_i", "k_o") is None


# ------------- power law -------------


@pytest.mark.parametrize("gamma", [0.7, 1.0, 1.33, 2.0])
def test_power_law_recovers_exponent(gamma):
    hist = {k: 1000.0 * k ** -gamma for k in (1, 2, 3, 4, 5)}
    fit = fit_degree_histogram(hist)
    assert fit.gamma == pytest.approx(gamma, abs=1e-9)
    assert fit.r2 == pytest.approx(1.0)
    assert fit.logC == pytest.approx(math.log(1000.0))


def test_power_law_sampled_histogram():
    fit = fit_degree_histogram({1: 1000, 2: 500, 4: 250, 8: 125})
    assert fit.gamma == pytest.approx(1.0)
    assert fit.r2 == pytest.approx(1.0)
    assert fit.n_bins == 4


def test_power_law_ignores_scale():
    hist = {k: 200.0 * k ** -1.5 for k in (1, 2, 3, 6)}
    a = fit_degree_histogram(hist)
    b = fit_degree_histogram({k: 7 * f for k, f in hist.items()})
    assert b.gamma == pytest.approx(a.gamma)
    assert b.logC == pytest.approx(a.logC + math.log(7))


def test_power_law_needs_two_bins():
    with pytest.raises(ComputeError):
        fit_degree_histogram({3: 10})
    with pytest.raises(ComputeError):
        fit_power_law(digraph([(1, 2), (2, 3), (3, 1)]), "out")


def test_degree_histogram_counts_ports():
    g = digraph([(0, 1), (0, 2), (1, 2)])
    assert degree_histogram(g, "out") == {1: 1, 2: 1}
    assert degree_histogram(g, "total") == {2: 3}


# ------------- country rankings -------------


def _ported(edges, countries):
    ports = {p: PortInfo(name=f"P{p}", country=c) for p, c in countries.items()}
    return digraph(edges, nodes=list(countries), ports=ports)


def test_one_port_per_country_follows_port_order():
    g = _ported([(1, 2)], {1: "Brazil", 2: "China", 3: "Denmark"})
    vec = CentralityVector("k_o", {1: 3.0, 2: 5.0, 3: 1.0})
    ranked = rank_countries(g, vec, top_k=10)
    assert [c.country for c in ranked] == ["China", "Brazil", "Denmark"]


def test_ranking_sums_ports_and_truncates():
    g = _ported([(1, 2)], {1: "Brazil", 2: "China", 3: "China", 4: "Alba"})
    vec = CentralityVector("k_o", {1: 3.0, 2: 2.0, 3: 2.0, 4: 3.0})
    ranked = rank_countries(g, vec, top_k=2)
    assert [(c.country, c.score) for c in ranked] == [("China", 4.0), ("Alba", 3.0)]


def test_ranking_rejects_ports_outside_graph():
    g = _ported([(1, 2)], {1: "Brazil", 2: "China"})
    vec = CentralityVector("k_o", {1: 1.0, 2: 1.0, 9: 4.0})
    with pytest.raises(DataError, match="not in the graph"):
        rank_countries(g, vec)


def test_country_rankings_measures():
    g = _ported([(1, 2), (2, 3), (3, 1)], {1: "A", 2: "B", 3: "C"})
    out = country_rankings(g, top_k=8)
    assert sorted(out) == ["betweenness", "in_degree", "out_degree"]
    assert len(out["out_degree"]) == 3


# ------------- export -------------


def test_centrality_csv_bytes():
    vec = degree_centrality(digraph([(0, 1), (0, 2)]), "out")
    assert centrality_to_csv(vec) == "port_id,value\n0,2.0\n1,0.0\n2,0.0\n"


def test_centrality_csv_sorts_ports():
    vec = CentralityVector("betweenness", {7: 0.25, 3: 0.5}, normalized=True)
    assert centrality_to_csv(vec).splitlines() == ["port_id,value", "3,0.5", "7,0.25"]


def test_centrality_json_bytes():
    vec = degree_centrality(digraph([(0, 1), (0, 2)]), "out")
    expected = {
        "measure": "k_o",
        "normalized": False,
        "values": [
            {"port_id": 0, "value": 2.0},
            {"port_id": 1, "value": 0.0},
            {"port_id": 2, "value": 0.0},
        ],
    }
    assert centrality_to_json(vec) == json.dumps(expected, indent=2, sort_keys=True) + "\n"


def test_node_centralities_cover_every_measure(triangle):
    vectors = node_centralities(triangle)
    assert sorted(vectors) == sorted([*MEASURES, "betweenness"])
    assert vectors["betweenness"].values == {1: 0.5, 2: 0.5, 3: 0.5}


def test_node_centralities_skip_betweenness_below_three_ports():
    assert "betweenness" not in node_centralities(digraph([(1, 2)]))


def test_power_law_rows_skip_undefined_fits():
    fit = PowerLawFit(gamma=1.0, logC=2.0, r2=1.0, n_bins=4, which="in")
    assert power_law_rows({"in": fit, "out": None}) == [("in", 1.0, 2.0, 1.0, 4)]
