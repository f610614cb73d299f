from __future__ import annotations

from typing import Dict, Tuple

from ..graph.models import TradeGraph
from .louvain import (
    dominant_region,
    louvain,
    louvain_levels,
    modularity,
    small_communities,
)
from .models import (
    DominantRegion,
    LevelSummary,
    Partition,
    SideCommunity,
    TransitionTable,
)
from .transitions import transitions

__all__ = [
    "CommunityNamespace",
    "DominantRegion",
    "LevelSummary",
    "Partition",
    "SideCommunity",
    "TransitionTable",
    "dominant_region",
    "louvain",
    "louvain_levels",
    "modularity",
    "small_communities",
    "transitions",
]


class CommunityNamespace:
    """
    Grouping for community detection and community evolution:

        tn.community.detect(g)
        tn.community.compare(g_before, g_after)
    """

    def __init__(self, weight: str = "frequency", seed: int = 0, small_size: int = 5) -> None:
        self._weight = weight
        self._seed = seed
        self._small_size = small_size

    def detect(self, g: TradeGraph) -> Partition:
        return louvain(g, self._weight, self._seed)

    def regions(self, g: TradeGraph, p: Partition) -> Dict[int, DominantRegion]:
        return dominant_region(g, p)

    def small(self, g: TradeGraph, p: Partition) -> Tuple[int, ...]:
        return small_communities(g, p, self._small_size)

    def compare(self, g_before: TradeGraph, g_after: TradeGraph) -> TransitionTable:
        return transitions(g_before, g_after, self.detect(g_before), self.detect(g_after))
