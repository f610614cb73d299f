from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, Hashable, List, Mapping, Tuple

import community as community_louvain
import numpy as np

from ..errors import ComputeError, DataError
from ..graph.models import TradeGraph
from ..graph.structure import undirected_projection
from .models import DominantRegion, LevelSummary, Partition

logger = logging.getLogger(__name__)


def louvain(g: TradeGraph, weight: str = "frequency", seed: int = 0) -> Partition:
    """
    Louvain communities of the undirected weighted projection.

    Local moving and aggregation repeat until modularity stops improving;
    the node visit order is shuffled from `seed`. A graph without links
    gives one community per port and modularity 0.
    """
    proj = undirected_projection(g, weight)
    if proj.number_of_edges() == 0:
        assignment = {node: i for i, node in enumerate(sorted(proj.nodes))}
        return Partition(assignment=assignment, modularity=0.0, weight=weight, seed=seed)

    raw = community_louvain.best_partition(
        proj, weight="weight", resolution=1.0, random_state=_random_state(seed)
    )
    assignment = _densify(raw)
    q = community_louvain.modularity(assignment, proj, weight="weight")
    logger.info(
        "louvain %s/%s (%s): %d communities, Q=%.4f",
        g.layer, g.window, weight, len(set(assignment.values())), q,
    )
    return Partition(assignment=assignment, modularity=float(q), weight=weight, seed=seed)


def louvain_levels(g: TradeGraph, weight: str = "frequency", seed: int = 0) -> List[LevelSummary]:
    """Community count and modularity of every level of the Louvain hierarchy."""
    proj = undirected_projection(g, weight)
    if proj.number_of_edges() == 0:
        raise ComputeError("modularity undefined: graph has no links")

    dendrogram = community_louvain.generate_dendrogram(
        proj, weight="weight", resolution=1.0, random_state=_random_state(seed)
    )
    levels = []
    for level in range(len(dendrogram)):
        part = community_louvain.partition_at_level(dendrogram, level)
        levels.append(
            LevelSummary(
                level=level,
                n_communities=len(set(part.values())),
                modularity=float(community_louvain.modularity(part, proj, weight="weight")),
            )
        )
    return levels


def modularity(g: TradeGraph, p: Partition, weight: str = "frequency") -> float:
    """Q on the undirected weighted projection."""
    proj = undirected_projection(g, weight)
    uncovered = set(proj.nodes) - set(p.assignment)
    if uncovered:
        raise DataError(f"partition misses {len(uncovered)} ports, e.g. {sorted(uncovered)[:3]}")
    if proj.size(weight="weight") == 0:
        raise ComputeError("modularity undefined: total link weight is 0")
    assignment = {node: p.assignment[node] for node in proj.nodes}
    return float(community_louvain.modularity(assignment, proj, weight="weight"))


def dominant_region(g: TradeGraph, p: Partition) -> Dict[int, DominantRegion]:
    """Most common port region per community; ties go to the first name and are flagged."""
    regions: Dict[int, Counter] = {}
    for node, community_id in p.assignment.items():
        regions.setdefault(community_id, Counter())[g.port(node).region] += 1

    out: Dict[int, DominantRegion] = {}
    for community_id in sorted(regions):
        counts = regions[community_id]
        best = max(counts.values())
        leaders = sorted(r for r, c in counts.items() if c == best)
        if len(leaders) > 1:
            logger.info("community %d: region tie between %s", community_id, ", ".join(leaders))
        out[community_id] = DominantRegion(
            region=leaders[0],
            count=best,
            size=sum(counts.values()),
            tie=len(leaders) > 1,
        )
    return out


def small_communities(g: TradeGraph, p: Partition, min_size: int = 5) -> Tuple[int, ...]:
    """
    Communities with fewer than `min_size` ports that all have degree 1.

    Reported for exclusion by the caller; the partition itself is not changed.
    """
    degree = dict(undirected_projection(g).degree())
    flagged = []
    for community_id, members in sorted(p.communities().items()):
        if len(members) < min_size and all(degree.get(n, 0) == 1 for n in members):
            flagged.append(community_id)
    return tuple(flagged)


def _densify(raw: Mapping[Hashable, int]) -> Dict[Hashable, int]:
    first: Dict[int, Hashable] = {}
    for node in sorted(raw):
        first.setdefault(raw[node], node)
    order = {c: i for i, c in enumerate(sorted(first, key=lambda c: first[c]))}
    return {node: order[raw[node]] for node in sorted(raw)}


def _random_state(seed: int) -> int:
    # python-louvain seeds numpy's legacy RandomState, which takes 32 bits
    return int(np.random.SeedSequence(seed).generate_state(1)[0])
