from __future__ import annotations

import logging
from typing import List, Set, Tuple

import networkx as nx
import numpy as np

from ..errors import ComputeError
from ..graph.models import Edge, TradeGraph
from ..graph.structure import components
from .config import RewireConfig

logger = logging.getLogger(__name__)


def swap_pair(edges: List[Edge], present: Set[Edge], i: int, j: int) -> bool:
    """
    Try one directed double-edge swap in place.

    (a,b),(c,d) become (a,d),(c,b). The round is skipped (False) when both
    picks are the same edge, when a new edge would be a self-loop, or when
    it already exists.
    """
    if i == j:
        return False
    a, b = edges[i]
    c, d = edges[j]
    if a == d or c == b:
        return False
    if (a, d) in present or (c, b) in present:
        return False
    present.discard((a, b))
    present.discard((c, d))
    present.add((a, d))
    present.add((c, b))
    edges[i] = (a, d)
    edges[j] = (c, b)
    return True


def rewire_edges(g: TradeGraph, cfg: RewireConfig) -> Tuple[List[Edge], int]:
    """
    Rewired edge list of g and the number of accepted swaps.

    With scope 'gscc' only edges with both ends in the GSCC take part in
    swaps; every other edge is returned unchanged.
    """
    edges, fixed = _swappable(g, cfg.scope)
    present = set(edges) | set(fixed)
    m = len(edges)
    attempts = cfg.attempts_for(m)
    if attempts == 0 or m < 2:
        return fixed + edges, 0

    rng = np.random.default_rng(cfg.seed)
    picks = rng.integers(0, m, size=(attempts, 2))
    accepted = 0
    for i, j in picks:
        if swap_pair(edges, present, int(i), int(j)):
            accepted += 1
    logger.debug(
        "rewired %s/%s (%s): %d of %d swaps accepted",
        g.layer, g.window, cfg.scope, accepted, attempts,
    )
    return fixed + edges, accepted


def _swappable(g: TradeGraph, scope: str) -> Tuple[List[Edge], List[Edge]]:
    """(edges open to swaps, edges kept as they are) for a rewiring scope."""
    edges = g.edges()
    if scope == "full" or g.is_empty:
        return edges, []
    core = components(g, "strong").giant
    inside = [(u, v) for u, v in edges if u in core and v in core]
    outside = [(u, v) for u, v in edges if not (u in core and v in core)]
    return inside, outside


def rewire(g: TradeGraph, cfg: RewireConfig) -> TradeGraph:
    """
    Degree-preserving randomisation by directed double-edge swaps.

    Node set, edge count and every port's in- and out-degree are kept; the
    result carries unit weights. Deterministic in (g, cfg.seed, attempts).
    """
    edges, _ = rewire_edges(g, cfg)
    out = g.with_unit_weights(edges)
    check_degree_sequences(g, out)
    return out


def check_degree_sequences(before: TradeGraph, after: TradeGraph) -> None:
    """Raise ComputeError unless `after` is a valid degree-preserving rewiring of `before`."""
    problems = []
    if set(before.nodes()) != set(after.nodes()):
        problems.append("node set changed")
    # a duplicated edge collapses in the DiGraph and shows up here
    if before.e != after.e:
        problems.append(f"edge count {before.e} -> {after.e}")
    if before.in_degree() != after.in_degree():
        problems.append("in-degree sequence changed")
    if before.out_degree() != after.out_degree():
        problems.append("out-degree sequence changed")
    if any(u == v for u, v in after.edges()):
        problems.append("self-loop created")
    if problems:
        raise ComputeError(f"rewiring broke the degree sequences: {'; '.join(problems)}")


def ring_lattice(n: int, k: int) -> TradeGraph:
    """
    Ring of n ports, each linked to its k/2 nearest neighbours on either side.

    Stored with both orientations of every link and directed=False. An odd
    k is lowered by one.
    """
    if k % 2:
        logger.warning("ring lattice degree %d is odd, using %d", k, k - 1)
        k -= 1
    if not n > k >= 2:
        raise ValueError(f"ring lattice needs n > k >= 2, got n={n}, k={k}")

    ring = nx.watts_strogatz_graph(n, k, 0)
    g = nx.DiGraph()
    g.add_nodes_from(range(n), name="", region="", country="")
    for u, v in ring.edges:
        g.add_edge(u, v, frequency=1, dwt_total=1.0, volume_total=1.0)
        g.add_edge(v, u, frequency=1, dwt_total=1.0, volume_total=1.0)
    return TradeGraph(g, layer="lattice", window="ALL", directed=False)


def lattice_degree(n: int, e: int) -> int:
    """
    Even lattice degree nearest the mean degree e/n, kept in [2, n).

    Returns 0 when no valid lattice exists (n < 3).
    """
    k = 2 * int(round(e / n / 2)) if n else 0
    k = max(k, 2)
    if k >= n:
        k = n - 1 if (n - 1) % 2 == 0 else n - 2
    return k if k >= 2 and n > k else 0
