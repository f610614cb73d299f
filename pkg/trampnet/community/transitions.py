from __future__ import annotations

from collections import Counter
from typing import Tuple

from ..errors import DataError
from ..graph.models import TradeGraph
from .louvain import dominant_region
from .models import Partition, SideCommunity, TransitionTable


def transitions(
    g_before: TradeGraph,
    g_after: TradeGraph,
    p_before: Partition,
    p_after: Partition,
) -> TransitionTable:
    """
    Count shared ports per (community before, community after) pair.

    Ports present on one side only are listed as entries or exits.
    """
    before_nodes = set(g_before.nodes())
    after_nodes = set(g_after.nodes())
    for nodes, p, side in ((before_nodes, p_before, "before"), (after_nodes, p_after, "after")):
        if nodes - set(p.assignment):
            raise DataError(f"{side} partition does not cover its graph")

    shared = sorted(before_nodes & after_nodes)
    if not shared:
        raise DataError("no comparable ports")

    pairs = Counter((p_before.assignment[n], p_after.assignment[n]) for n in shared)
    links = tuple((b, a, count) for (b, a), count in sorted(pairs.items()))

    return TransitionTable(
        links=links,
        before=_side("before", g_before, p_before, shared),
        after=_side("after", g_after, p_after, shared),
        shared_ports=len(shared),
        entries=tuple(sorted(after_nodes - before_nodes)),
        exits=tuple(sorted(before_nodes - after_nodes)),
    )


def _side(side: str, g: TradeGraph, p: Partition, shared) -> Tuple[SideCommunity, ...]:
    regions = dominant_region(g, p)
    shared_counts = Counter(p.assignment[n] for n in shared)
    return tuple(
        SideCommunity(
            side=side,
            community=community_id,
            size=label.size,
            shared=shared_counts.get(community_id, 0),
            dominant_region=label.region,
            tie_flag=label.tie,
        )
        for community_id, label in sorted(regions.items())
    )
