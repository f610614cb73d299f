from __future__ import annotations

from collections import defaultdict
from typing import Dict, List

from ..errors import DataError
from ..graph.models import TradeGraph
from .centrality import betweenness, degree_centrality
from .models import CentralityVector, CountryScore


def rank_countries(g: TradeGraph, measure: CentralityVector, top_k: int = 8) -> List[CountryScore]:
    """Countries by the sum of their ports' scores, highest first, ties by name."""
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    missing = [v for v in measure.values if not g.nx.has_node(v)]
    if missing:
        raise DataError(f"{measure.measure}: ports not in the graph: {sorted(missing, key=str)}")
    totals: Dict[str, float] = defaultdict(float)
    for node, value in measure.values.items():
        totals[g.port(node).country] += value
    ranked = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))
    return [CountryScore(country=c, score=s) for c, s in ranked[:top_k]]


def country_rankings(g: TradeGraph, top_k: int = 8) -> Dict[str, List[CountryScore]]:
    return {
        "out_degree": rank_countries(g, degree_centrality(g, "out", normalized=True), top_k),
        "in_degree": rank_countries(g, degree_centrality(g, "in", normalized=True), top_k),
        "betweenness": rank_countries(g, betweenness(g, normalized=True), top_k),
    }
