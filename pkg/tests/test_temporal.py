import pytest

from conftest import digraph, flow_row, synth_table, table_of
from trampnet.errors import DataError
from trampnet.graph import EdgeWeights, TradeGraph
from trampnet.ingest import clean_flows
from trampnet.temporal import (
    QuarterlyDistanceMatrix,
    cut_clusters,
    detect_breaks,
    distance_matrix,
    find_breaks,
    network_distance,
    quarterly_graphs,
    quarterly_metrics,
    ward_cluster,
)


def _quarter(edges, label):
    return TradeGraph.from_edges(edges, window=label)


def _matrix(rows, labels=None):
    labels = labels or tuple(f"2020Q{i + 1}" if i < 4 else f"2021Q{i - 3}" for i in range(len(rows)))
    return QuarterlyDistanceMatrix(quarters=tuple(labels), values=tuple(tuple(r) for r in rows))


FOUR_QUARTERS = _matrix([
    [0.0, 0.1, 0.9, 0.9],
    [0.1, 0.0, 0.9, 0.9],
    [0.9, 0.9, 0.0, 0.15],
    [0.9, 0.9, 0.15, 0.0],
])


# ------------- quarterly sequence -------------


def _spread_table():
    return clean_flows(table_of([
        flow_row(1, 2, load_departed_at="2015-01-10T00:00:00Z", imo="1"),
        flow_row(2, 3, load_departed_at="2015-02-10T00:00:00Z", imo="1"),
        flow_row(3, 1, load_departed_at="2015-08-10T00:00:00Z", imo="2", volume=100),
    ]))


def test_quarterly_graphs_cover_consecutive_quarters():
    graphs = quarterly_graphs(_spread_table())
    assert [g.window for g in graphs] == ["2015Q1", "2015Q2", "2015Q3"]
    assert graphs[0].edges() == [(1, 2), (2, 3)]
    assert graphs[1].is_empty
    assert graphs[2].edges() == [(3, 1)]


def test_quarterly_graphs_single_quarter():
    table = clean_flows(table_of([flow_row(1, 2)]))
    assert len(quarterly_graphs(table)) == 1


def test_quarterly_metrics():
    metrics = quarterly_metrics(_spread_table())
    q1 = metrics[0]
    assert (q1.quarter, q1.flows, q1.edges, q1.nodes, q1.ships) == ("2015Q1", 2, 2, 3, 1)
    assert metrics[1].flows == 0
    assert metrics[2].volume == pytest.approx(100)


# ------------- distance -------------


def test_distance_examples():
    a = _quarter([("A", "B"), ("B", "C")], "q1")
    b = _quarter([("A", "B"), ("C", "D")], "q2")
    c = _quarter([("X", "Y")], "q3")
    assert network_distance(a, b) == pytest.approx(0.5)
    assert network_distance(a, a) == 0.0
    assert network_distance(a, c) == pytest.approx(1.0)
    assert network_distance(a, b) == network_distance(b, a)


def test_distance_ignores_weights_and_isolated_ports():
    heavy = digraph([(1, 2)], weights={(1, 2): EdgeWeights(9, 9.0, 9.0)}, nodes=[7])
    assert network_distance(heavy, digraph([(1, 2)])) == 0.0


def test_distance_needs_edges():
    with pytest.raises(DataError, match="distance undefined"):
        network_distance(digraph([(1, 2)]), digraph([], nodes=[1]))


def test_distance_matrix_patterns():
    q1 = _quarter([(1, 2), (2, 3)], "2020Q1")
    q2 = _quarter([(7, 8)], "2020Q2")
    q3 = _quarter([(1, 2), (3, 4)], "2020Q3")
    m = distance_matrix([q1, q2, q3])

    assert m.values[0][1] == 1.0 and m.values[1][2] == 1.0
    assert m.values[0][2] == pytest.approx(0.5)
    for i in range(3):
        assert m.values[i][i] == 0.0
        for j in range(3):
            assert m.values[i][j] == m.values[j][i]


def test_identical_quarters_give_zero_matrix():
    m = distance_matrix([_quarter([(1, 2)], "2020Q1"), _quarter([(1, 2)], "2020Q2")])
    assert m.values == ((0.0, 0.0), (0.0, 0.0))


def test_distance_matrix_survives_port_renaming():
    edges = [[(1, 2), (2, 3)], [(1, 2), (3, 1)], [(2, 3)]]
    rename = {1: 11, 2: 42, 3: 5}
    plain = distance_matrix([_quarter(e, f"2020Q{i + 1}") for i, e in enumerate(edges)])
    renamed = distance_matrix([
        _quarter([(rename[u], rename[v]) for u, v in e], f"2020Q{i + 1}")
        for i, e in enumerate(edges)
    ])
    assert plain.values == renamed.values


def test_empty_quarters_are_excluded():
    graphs = [
        _quarter([(1, 2)], "2020Q1"),
        _quarter([], "2020Q2"),
        _quarter([(1, 2), (2, 1)], "2020Q3"),
    ]
    m = distance_matrix(graphs)
    assert m.missing == ("2020Q2",)
    assert m.values[1] == (None, None, None)
    labels, D = m.usable()
    assert labels == ("2020Q1", "2020Q3")
    assert D.shape == (2, 2)


def test_distance_matrix_needs_two_usable_quarters():
    with pytest.raises(DataError):
        distance_matrix([_quarter([(1, 2)], "2020Q1"), _quarter([], "2020Q2")])


def test_seasonal_sequence_is_closest_at_one_year():
    table, truth = synth_table(scenario="seasonal", seed=3)
    profile = distance_matrix(quarterly_graphs(table)).lag_profile()
    assert truth["period"] == 4
    assert profile[4] < min(profile[1], profile[2], profile[3])


# ------------- clustering -------------


def test_two_leaves_merge_at_their_distance():
    d = ward_cluster(_matrix([[0.0, 0.3], [0.3, 0.0]]))
    assert len(d.merges) == 1
    assert d.merges[0].height == pytest.approx(0.3)
    assert d.merges[0].size == 2


def test_ward_merges_close_pairs_first():
    d = ward_cluster(FOUR_QUARTERS)
    first, second, last = d.merges
    assert {first.a, first.b} == {0, 1}
    assert first.height == pytest.approx(0.1)
    assert {second.a, second.b} == {2, 3}
    assert last.size == 4
    heights = [m.height for m in d.merges]
    assert heights == sorted(heights)


def test_ward_rejects_asymmetric_matrix():
    with pytest.raises(DataError, match="symmetric"):
        ward_cluster(_matrix([[0.0, 0.2], [0.3, 0.0]]))


def test_ward_ties_are_deterministic():
    flat = _matrix([[0.0 if i == j else 0.5 for j in range(4)] for i in range(4)])
    assert ward_cluster(flat) == ward_cluster(flat)


def test_ward_ties_merge_smallest_leaves_first():
    flat = _matrix([[0.0 if i == j else 0.5 for j in range(4)] for i in range(4)])
    d = ward_cluster(flat)
    # leaves 0..3, merge i creates cluster 4 + i
    assert [(m.a, m.b) for m in d.merges] == [(0, 1), (2, 4), (3, 5)]
    assert [m.size for m in d.merges] == [2, 3, 4]
    assert cut_clusters(d, 2) == (1, 1, 1, 2)


def test_cut_examples():
    d = ward_cluster(FOUR_QUARTERS)
    assert cut_clusters(d, 2) == (1, 1, 2, 2)
    assert cut_clusters(d, 4) == (1, 2, 3, 4)
    assert cut_clusters(d, 1) == (1, 1, 1, 1)


def test_cut_rejects_out_of_range_k():
    d = ward_cluster(FOUR_QUARTERS)
    with pytest.raises(ValueError):
        cut_clusters(d, 0)
    with pytest.raises(ValueError):
        cut_clusters(d, 5)


# ------------- breaks -------------


QUARTERS = ("2019Q1", "2019Q2", "2019Q3", "2019Q4", "2020Q1")


def test_single_break_at_first_quarter_of_new_cluster():
    report = detect_breaks(QUARTERS, (1, 1, 1, 2, 2))
    assert report.breaks == ("2019Q4",)
    assert not report.non_contiguous
    assert report.n_clusters == 2


def test_no_breaks():
    assert detect_breaks(QUARTERS[:4], (1, 1, 1, 1)).breaks == ()


def test_alternating_clusters_are_flagged():
    report = detect_breaks(QUARTERS[:4], (1, 2, 1, 2))
    assert len(report.breaks) == 3
    assert report.non_contiguous


def test_find_breaks_on_four_quarters():
    report = find_breaks(FOUR_QUARTERS, k=2)
    assert report.labels == (1, 1, 2, 2)
    assert report.breaks == ("2020Q3",)


def test_planted_regime_change_is_found():
    table, truth = synth_table(scenario="regime", seed=11)
    m = distance_matrix(quarterly_graphs(table, "coal"))
    report = find_breaks(m, k=2)
    assert report.breaks == (truth["break"],)
    assert report.excluded == ()
