from __future__ import annotations

from typing import Dict, List

from ..graph.models import TradeGraph
from .centrality import (
    DIRECTIONS,
    assortativity,
    betweenness,
    centrality_correlations,
    degree_centrality,
    directed_assortativity,
    strength_centrality,
    transitivity,
)
from .export import (
    CENTRALITY_HEADER,
    POWER_LAW_HEADER,
    centrality_record,
    centrality_rows,
    centrality_to_csv,
    centrality_to_json,
    node_centralities,
    power_law_rows,
)
from .models import MEASURES, CentralityVector, CorrelationMatrix, CountryScore, PowerLawFit
from .powerlaw import DEGREE_KINDS, degree_histogram, fit_degree_histogram, fit_power_law
from .ranking import country_rankings, rank_countries

__all__ = [
    "CENTRALITY_HEADER",
    "DEGREE_KINDS",
    "DIRECTIONS",
    "MEASURES",
    "CentralityVector",
    "CorrelationMatrix",
    "CountryScore",
    "MetricsNamespace",
    "POWER_LAW_HEADER",
    "PowerLawFit",
    "assortativity",
    "betweenness",
    "centrality_correlations",
    "centrality_record",
    "centrality_rows",
    "centrality_to_csv",
    "centrality_to_json",
    "country_rankings",
    "degree_centrality",
    "degree_histogram",
    "directed_assortativity",
    "fit_degree_histogram",
    "fit_power_law",
    "node_centralities",
    "power_law_rows",
    "rank_countries",
    "strength_centrality",
    "transitivity",
]


class MetricsNamespace:
    """
    Grouping for node and graph statistics:

        tn.metrics.power_laws(g)
        tn.metrics.countries(g)
    """

    def __init__(self, top_k: int = 8) -> None:
        self._top_k = top_k

    def correlations(self, g: TradeGraph) -> CorrelationMatrix:
        return centrality_correlations(g)

    def power_laws(self, g: TradeGraph) -> Dict[str, PowerLawFit]:
        return {which: fit_power_law(g, which) for which in DEGREE_KINDS}

    def countries(self, g: TradeGraph) -> Dict[str, List[CountryScore]]:
        return country_rankings(g, self._top_k)

    def centralities(self, g: TradeGraph) -> Dict[str, CentralityVector]:
        return node_centralities(g)
