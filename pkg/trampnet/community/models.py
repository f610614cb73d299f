from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Hashable, List, Mapping, Tuple


@dataclass(frozen=True)
class Partition:
    """Port -> community id (dense, 0..c-1, numbered by smallest member)."""
    assignment: Mapping[Hashable, int]
    modularity: float
    weight: str = "frequency"
    seed: int = 0
    resolution: float = 1.0

    @property
    def n_communities(self) -> int:
        return len(set(self.assignment.values()))

    def communities(self) -> Dict[int, List[Hashable]]:
        out: Dict[int, List[Hashable]] = {}
        for node in sorted(self.assignment):
            out.setdefault(self.assignment[node], []).append(node)
        return out


@dataclass(frozen=True)
class DominantRegion:
    region: str
    count: int
    size: int
    # another region had the same count
    tie: bool = False


@dataclass(frozen=True)
class LevelSummary:
    level: int
    n_communities: int
    modularity: float


@dataclass(frozen=True)
class SideCommunity:
    side: str  # "before" | "after"
    community: int
    size: int
    shared: int
    dominant_region: str
    tie_flag: bool


@dataclass(frozen=True)
class TransitionTable:
    """
    Movement of shared ports between the communities of two periods.

    links: (community before, community after, ports) for every non-zero pair.
    entries/exits: ports only present after / before.
    """
    links: Tuple[Tuple[int, int, int], ...]
    before: Tuple[SideCommunity, ...]
    after: Tuple[SideCommunity, ...]
    shared_ports: int
    entries: Tuple[Hashable, ...] = ()
    exits: Tuple[Hashable, ...] = ()

    def to_sankey(self) -> Dict[str, Any]:
        """Sankey link data: links reference positions in the node list."""
        nodes = [*self.before, *self.after]
        index = {(c.side, c.community): i for i, c in enumerate(nodes)}
        return {
            "nodes": [
                {
                    "side": c.side,
                    "community": c.community,
                    "size": c.size,
                    "shared": c.shared,
                    "dominant_region": c.dominant_region,
                    "tie_flag": c.tie_flag,
                }
                for c in nodes
            ],
            "links": [
                {
                    "source": index[("before", b)],
                    "target": index[("after", a)],
                    "count": count,
                }
                for b, a, count in self.links
            ],
        }
