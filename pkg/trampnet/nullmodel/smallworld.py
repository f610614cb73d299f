from __future__ import annotations

import logging
from typing import List, Optional

from ..errors import ComputeError
from ..graph.models import TradeGraph
from ..graph.structure import avg_path_length, components, density, gscc
from ..metrics.centrality import assortativity, transitivity
from .config import RewireConfig, replicate_seed
from .models import GsccComparison, GsccSummary, ReplicateResult, SmallWorldReport
from .rewire import check_degree_sequences, lattice_degree, rewire_edges, ring_lattice

logger = logging.getLogger(__name__)

MIN_REPLICATE_GSCC = 3


def sigma(L: float, L_rand: float, C: float, C_rand: float) -> float:
    """(C / C_rand) / (L / L_rand)."""
    if min(L, L_rand, C, C_rand) <= 0:
        raise ValueError(
            f"sigma needs positive inputs, got L={L}, L_rand={L_rand}, C={C}, C_rand={C_rand}"
        )
    return (C / C_rand) / (L / L_rand)


def omega(L: float, L_rand: float, C: float, C_latt: float) -> float:
    """L_rand / L - C / C_latt; > 0 random-like, ~0 small-world, < 0 lattice-like."""
    if L <= 0 or C_latt <= 0:
        raise ValueError(f"omega needs L > 0 and C_latt > 0, got L={L}, C_latt={C_latt}")
    return L_rand / L - C / C_latt


def small_world_test(
    g: TradeGraph,
    n_replicates: int = 10,
    seed: int = 0,
    *,
    attempts: Optional[int] = None,
    scope: str = "full",
    swap_factor: int = 10,
) -> SmallWorldReport:
    """
    Compare g with degree-preserving rewired replicates and a ring lattice.

    C is the transitivity of the tested graph, L its GSCC's average path
    length. Each replicate is rewired with its own sub-seed and measured the
    same way, on its largest SCC; replicates whose largest SCC has fewer than
    3 ports are dropped. C_latt comes from a ring lattice with the same
    number of ports and the nearest even mean degree.
    """
    if g.is_empty:
        raise ComputeError("small-world test of an empty graph is undefined")
    if n_replicates < 1:
        raise ValueError("n_replicates must be >= 1")
    base_cfg = RewireConfig(n_swap_attempts=attempts, seed=seed, scope=scope, swap_factor=swap_factor)

    base = gscc(g) if scope == "gscc" else g
    C = transitivity(base)
    L = avg_path_length(gscc(base))
    n_attempts = base_cfg.attempts_for(base.e)

    replicates: List[ReplicateResult] = []
    dropped = 0
    for index in range(n_replicates):
        sub_seed = replicate_seed(seed, index)
        cfg = RewireConfig(n_swap_attempts=n_attempts, seed=sub_seed, scope=scope)
        edges, accepted = rewire_edges(base, cfg)
        replica = base.with_unit_weights(edges)
        check_degree_sequences(base, replica)

        core = gscc(replica)
        if core.n < MIN_REPLICATE_GSCC:
            dropped += 1
            logger.warning(
                "replicate %d dropped: largest SCC has %d ports", index, core.n
            )
            continue
        replicates.append(
            ReplicateResult(
                index=index,
                seed=sub_seed,
                C=transitivity(replica),
                L=avg_path_length(core),
                gscc_nodes=core.n,
                swaps_accepted=accepted,
            )
        )
        logger.debug("replicate %d: %d swaps accepted", index, accepted)

    if not replicates:
        raise ComputeError(f"all {n_replicates} replicates dropped: degenerate GSCC")

    C_rand = sum(r.C for r in replicates) / len(replicates)
    L_rand = sum(r.L for r in replicates) / len(replicates)

    warnings: List[str] = []
    k_latt = lattice_degree(base.n, base.e)
    C_latt: Optional[float] = None
    if k_latt:
        C_latt = transitivity(ring_lattice(base.n, k_latt))
    else:
        warnings.append(f"no ring lattice for n={base.n}; C_latt undefined")

    try:
        sig: Optional[float] = sigma(L, L_rand, C, C_rand)
    except ValueError as exc:
        sig = None
        warnings.append(f"sigma undefined: {exc}")
    try:
        om: Optional[float] = omega(L, L_rand, C, C_latt) if C_latt is not None else None
    except ValueError as exc:
        om = None
        warnings.append(f"omega undefined: {exc}")

    for w in warnings:
        logger.warning("%s/%s: %s", g.layer, g.window, w)

    return SmallWorldReport(
        layer=g.layer,
        window=g.window,
        scope=scope,
        n=base.n,
        e=base.e,
        L=L,
        L_rand=L_rand,
        C=C,
        C_rand=C_rand,
        C_latt=C_latt,
        lattice_k=k_latt,
        sigma=sig,
        omega=om,
        n_replicates=n_replicates,
        dropped_replicates=dropped,
        seed=seed,
        attempts=n_attempts,
        replicates=tuple(replicates),
        warnings=tuple(warnings),
    )


def gscc_comparison(
    g: TradeGraph,
    seed: int = 0,
    *,
    attempts: Optional[int] = None,
    swap_factor: int = 10,
) -> GsccComparison:
    """Summary of the GSCC next to one rewired replicate of it (sub-seed 0)."""
    observed = gscc(g)
    cfg = RewireConfig(
        n_swap_attempts=attempts,
        seed=replicate_seed(seed, 0),
        scope="gscc",
        swap_factor=swap_factor,
    )
    edges, _ = rewire_edges(observed, cfg)
    simulated = observed.with_unit_weights(edges)
    check_degree_sequences(observed, simulated)

    return GsccComparison(
        layer=g.layer,
        window=g.window,
        seed=seed,
        attempts=cfg.attempts_for(observed.e),
        observed=_summary(observed),
        simulated=_summary(simulated),
    )


def _summary(g: TradeGraph) -> GsccSummary:
    strong = components(g, "strong")
    try:
        a: Optional[float] = assortativity(g)
    except ComputeError:
        a = None
    return GsccSummary(
        n=g.n,
        e=g.e,
        phi=density(g.n, g.e),
        n_s=len(strong.giant),
        l=avg_path_length(g.subgraph(strong.giant)),
        c=transitivity(g),
        a=a,
    )
