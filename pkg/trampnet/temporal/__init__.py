from __future__ import annotations

import dataclasses
from typing import Optional

from ..ingest.models import FlowTable
from .clustering import cut_clusters, detect_breaks, ward_cluster
from .distance import distance_matrix, network_distance
from .models import BreakReport, Dendrogram, Merge, QuarterlyDistanceMatrix, QuarterMetrics
from .quarters import quarterly_graphs, quarterly_metrics

__all__ = [
    "BreakReport",
    "Dendrogram",
    "Merge",
    "QuarterMetrics",
    "QuarterlyDistanceMatrix",
    "TemporalNamespace",
    "cut_clusters",
    "detect_breaks",
    "distance_matrix",
    "find_breaks",
    "network_distance",
    "quarterly_graphs",
    "quarterly_metrics",
    "ward_cluster",
]


def find_breaks(m: QuarterlyDistanceMatrix, k: int = 2) -> BreakReport:
    """Ward clustering, cut at k, then breaks over the usable quarters."""
    dendrogram = ward_cluster(m)
    labels = cut_clusters(dendrogram, k)
    report = detect_breaks(dendrogram.leaves, labels)
    return dataclasses.replace(report, excluded=m.missing)


class TemporalNamespace:
    """
    Grouping for the quarterly network sequence:

        tn.temporal.distances(table, "coal")
        tn.temporal.breaks(table, "coal", k=2)
    """

    def distances(self, table: FlowTable, layer: Optional[str] = None) -> QuarterlyDistanceMatrix:
        return distance_matrix(quarterly_graphs(table, layer))

    def breaks(self, table: FlowTable, layer: Optional[str] = None, k: int = 2) -> BreakReport:
        return find_breaks(self.distances(table, layer), k)
