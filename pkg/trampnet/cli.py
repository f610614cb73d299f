from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import TrampNet, __version__
from .community import louvain_levels, transitions
from .config import OUTPUT_FORMATS, WEIGHT_KINDS, RunConfig, TrampNetConfig
from .errors import ComputeError, DataError
from .graph import EDGE_HEADER, GlobalCentralityReport, TradeGraph, edge_rows, graph_to_json
from .ingest import (
    REJECTION_HEADER,
    FlowTable,
    QuarterId,
    QuarterWindow,
    canonical_layer,
    rejection_rows,
)
from .metrics import (
    DEGREE_KINDS,
    POWER_LAW_HEADER,
    centrality_correlations,
    centrality_record,
    centrality_to_csv,
    fit_power_law,
    power_law_rows,
)
from .models import OperationResult
from .nullmodel import SCOPES
from .output import ArtifactSet, print_result
from .synth import SCENARIOS, SynthSpec, generate
from .temporal import (
    cut_clusters,
    detect_breaks,
    distance_matrix,
    quarterly_graphs,
    quarterly_metrics,
    ward_cluster,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_COMPUTE = 4

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


# ------------- helpers -------------


def run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.resolve(vars(args))


def build_trampnet(cfg: RunConfig) -> TrampNet:
    return TrampNet(
        config=TrampNetConfig(
            seed=cfg.seed,
            n_replicates=cfg.replicates,
            community_weight=cfg.weight,
            top_k=cfg.top,
        )
    )


def load_selection(tn: TrampNet, cfg: RunConfig) -> FlowTable:
    """Cleaned flows of the configured layer, window and product; never empty."""
    if not cfg.input:
        raise ValueError("--input is required (or set TRAMPNET_INPUT)")
    table = tn.ingest.load(cfg.input)
    selected = tn.ingest.slice(table, cfg.layer, cfg.window, product=cfg.product)
    if not len(selected):
        raise DataError(
            f"empty selection: no flows for layer {cfg.layer!r} in window {cfg.window}"
        )
    return selected


def layer_label(cfg: RunConfig) -> str:
    return canonical_layer(cfg.layer) or "all"


def optional(compute: Callable[[], Any], what: str, warnings: List[str]) -> Any:
    """Result of compute(), or None with a warning when it is undefined for this graph."""
    try:
        return compute()
    except ComputeError as exc:
        logger.warning("%s: %s", what, exc)
        warnings.append(f"{what}: {exc}")
        return None


def commit(cfg: RunConfig, artifacts: ArtifactSet, table: Optional[FlowTable] = None) -> Dict[str, str]:
    manifest: Dict[str, Any] = {
        "command": cfg.command,
        "config": cfg.to_dict(),
        "version": __version__,
    }
    if table is not None:
        artifacts.add_csv("rejections.csv", REJECTION_HEADER, rejection_rows(table))
        manifest["provenance"] = table.provenance.to_dict()
    return artifacts.commit(cfg.out, manifest)


def finish(cfg: RunConfig, digests: Dict[str, str], details: Dict[str, Any], warnings=()) -> int:
    res = OperationResult(
        operation=f"trampnet_{cfg.command}",
        target=cfg.input or cfg.out,
        success=True,
        details={"out": cfg.out, "artifacts": sorted(digests), **details},
    )
    for w in warnings:
        res.add_warning(w)
    print_result(res, output=cfg.format)
    return EXIT_OK


def build_graph_for(tn: TrampNet, cfg: RunConfig, table: FlowTable) -> TradeGraph:
    return tn.graph.build(table, layer=layer_label(cfg), window=str(cfg.window))


# ------------- command handlers -------------


def handle_report(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    tn = build_trampnet(cfg)
    table = load_selection(tn, cfg)
    g = build_graph_for(tn, cfg, table)

    report = tn.graph.report(g)
    warnings: List[str] = []
    if report.a is None:
        warnings.append("assortativity undefined: zero degree variance")
    power_law = {
        which: optional(lambda: fit_power_law(g, which), f"power-law fit ({which})", warnings)
        for which in DEGREE_KINDS
    }
    correlations = optional(lambda: centrality_correlations(g), "centrality correlations", warnings)
    rankings = optional(lambda: tn.metrics.countries(g), "country rankings", warnings)
    centralities = tn.metrics.centralities(g)
    if "betweenness" not in centralities:
        warnings.append("betweenness undefined: fewer than 3 ports")

    artifacts = ArtifactSet()
    artifacts.add_json("graph.json", graph_to_json(g))
    artifacts.add_json(
        "centrality.json",
        {measure: centrality_record(vec) for measure, vec in centralities.items()},
    )
    artifacts.add_json(
        "report.json",
        {
            "report": report,
            "power_law": power_law,
            "correlations": correlations,
            "country_rankings": rankings,
            "warnings": warnings,
        },
    )
    if cfg.format == "csv":
        report_fields = [f.name for f in dataclasses.fields(GlobalCentralityReport)]
        artifacts.add_csv(
            "report.csv", report_fields, [[getattr(report, f) for f in report_fields]]
        )
        if correlations is not None:
            artifacts.add_csv(
                "correlations.csv",
                ["measure", *correlations.measures],
                [[m, *row] for m, row in zip(correlations.measures, correlations.values)],
            )
        if rankings is not None:
            artifacts.add_csv(
                "rankings.csv",
                ["ranking", "rank", "country", "score"],
                [
                    [name, rank, s.country, s.score]
                    for name, scores in rankings.items()
                    for rank, s in enumerate(scores, start=1)
                ],
            )
        artifacts.add_csv("edges.csv", EDGE_HEADER, edge_rows(g))
        artifacts.add_csv("power_law.csv", POWER_LAW_HEADER, power_law_rows(power_law))
        for measure, vec in centralities.items():
            artifacts.add_text(f"centrality_{measure}.csv", centrality_to_csv(vec))

    digests = commit(cfg, artifacts, table)
    return finish(cfg, digests, {"rows": [dataclasses.asdict(report)]}, warnings)


def handle_smallworld(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    tn = build_trampnet(cfg)
    table = load_selection(tn, cfg)
    g = build_graph_for(tn, cfg, table)

    report = tn.nullmodel.small_world(g, attempts=cfg.attempts, scope=cfg.scope)
    artifacts = ArtifactSet()
    artifacts.add_json("smallworld.json", report)
    if cfg.scope == "gscc":
        artifacts.add_json(
            "gscc_comparison.json", tn.nullmodel.gscc_comparison(g, attempts=cfg.attempts)
        )
    if cfg.format == "csv":
        artifacts.add_csv(
            "replicates.csv",
            ["index", "seed", "C", "L", "gscc_nodes", "swaps_accepted"],
            [[r.index, r.seed, r.C, r.L, r.gscc_nodes, r.swaps_accepted] for r in report.replicates],
        )

    digests = commit(cfg, artifacts, table)
    summary = {
        k: getattr(report, k)
        for k in ("L", "L_rand", "C", "C_rand", "C_latt", "sigma", "omega")
    }
    return finish(cfg, digests, {"rows": [summary]}, report.warnings)


def handle_temporal(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    tn = build_trampnet(cfg)
    table = load_selection(tn, cfg)

    graphs = quarterly_graphs(table, cfg.layer)
    matrix = distance_matrix(graphs)
    dendrogram = ward_cluster(matrix)
    labels = cut_clusters(dendrogram, cfg.k)
    breaks = dataclasses.replace(
        detect_breaks(dendrogram.leaves, labels), excluded=matrix.missing
    )
    per_quarter = quarterly_metrics(table, cfg.layer)

    artifacts = ArtifactSet()
    artifacts.add_json(
        "distance_matrix.json",
        {
            "quarters": matrix.quarters,
            "values": matrix.values,
            "missing": matrix.missing,
            "lag_profile": matrix.lag_profile(),
        },
    )
    artifacts.add_json("dendrogram.json", dendrogram)
    artifacts.add_json("breaks.json", breaks)
    artifacts.add_json("quarterly_metrics.json", per_quarter)
    if cfg.format == "csv":
        artifacts.add_csv("distance_matrix.csv", ["quarter", *matrix.quarters], matrix.rows())
        artifacts.add_csv("breaks.csv", ["quarter", "cluster"], zip(breaks.quarters, breaks.labels))
        artifacts.add_csv(
            "quarterly_metrics.csv",
            [f.name for f in dataclasses.fields(type(per_quarter[0]))],
            [dataclasses.astuple(m) for m in per_quarter],
        )

    warnings = [f"quarters without edges excluded: {', '.join(matrix.missing)}"] if matrix.missing else []
    if breaks.non_contiguous:
        warnings.append("clusters are not contiguous in time")
    digests = commit(cfg, artifacts, table)
    return finish(
        cfg,
        digests,
        {
            "breaks": list(breaks.breaks),
            "non_contiguous": breaks.non_contiguous,
            "rows": [{"quarter": q, "cluster": c} for q, c in zip(breaks.quarters, breaks.labels)],
        },
        warnings,
    )


def handle_communities(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    if not cfg.break_quarter:
        raise ValueError("--break is required (e.g. --break 2020Q1)")
    brk = QuarterId.parse(cfg.break_quarter)
    if not cfg.window.contains(brk):
        raise ValueError(f"break quarter {brk} lies outside the window {cfg.window}")

    tn = build_trampnet(cfg)
    table = load_selection(tn, cfg)
    # the break quarter opens the "after" period
    sides = {
        "before": tn.ingest.slice(table, window=QuarterWindow(end=brk.pred())),
        "after": tn.ingest.slice(table, window=QuarterWindow(start=brk)),
    }
    for side, flows in sides.items():
        if not len(flows):
            raise DataError(f"no flows {side} the break quarter {brk}")

    graphs = {
        "before": tn.graph.build(sides["before"], layer=layer_label(cfg), window=f"..{brk.pred()}"),
        "after": tn.graph.build(sides["after"], layer=layer_label(cfg), window=f"{brk}.."),
    }
    partitions = {side: tn.community.detect(g) for side, g in graphs.items()}
    table_t = transitions(graphs["before"], graphs["after"], partitions["before"], partitions["after"])

    warnings: List[str] = []
    artifacts = ArtifactSet()
    for side in ("before", "after"):
        g, p = graphs[side], partitions[side]
        levels = optional(
            lambda: louvain_levels(g, cfg.weight, cfg.seed), f"louvain levels ({side})", warnings
        )
        artifacts.add_json(
            f"partition_{side}.json",
            {
                "partition": p,
                "n_communities": p.n_communities,
                "dominant_regions": tn.community.regions(g, p),
                "small_communities": tn.community.small(g, p),
                "levels": levels,
            },
        )
    artifacts.add_json(
        "transitions.json",
        {
            "break": str(brk),
            "sankey": table_t.to_sankey(),
            "shared_ports": table_t.shared_ports,
            "entries": table_t.entries,
            "exits": table_t.exits,
        },
    )
    if cfg.format == "csv":
        artifacts.add_csv(
            "partitions.csv",
            ["side", "port_id", "community"],
            [
                [side, node, community_id]
                for side in ("before", "after")
                for node, community_id in sorted(partitions[side].assignment.items())
            ],
        )
        artifacts.add_csv("transitions.csv", ["before", "after", "count"], table_t.links)

    digests = commit(cfg, artifacts, table)
    return finish(
        cfg,
        digests,
        {
            "modularity": {side: p.modularity for side, p in partitions.items()},
            "communities": {side: p.n_communities for side, p in partitions.items()},
            "rows": [{"before": b, "after": a, "count": c} for b, a, c in table_t.links],
        },
        warnings,
    )


def handle_synth(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    if args.spec:
        try:
            spec = SynthSpec.from_json(args.spec)
        except OSError as exc:
            raise DataError(f"Cannot read {args.spec}: {exc}") from exc
    elif args.scenario:
        spec = SynthSpec(
            scenario=args.scenario,
            seed=cfg.seed,
            layer=canonical_layer(cfg.layer) or "Coal",
            quarters=args.quarters,
            noise=args.noise,
        )
    else:
        raise ValueError("synth needs --scenario or --spec")

    fixture = generate(spec)
    artifacts = ArtifactSet()
    artifacts.add_text("flows.csv", fixture.to_csv())
    artifacts.add_json("ground_truth.json", fixture.ground_truth)
    digests = artifacts.commit(
        cfg.out,
        {
            "command": cfg.command,
            "config": cfg.to_dict(),
            "spec": dataclasses.asdict(spec),
            "version": __version__,
        },
    )
    return finish(cfg, digests, {"flows": len(fixture.rows), "scenario": spec.scenario})


def handle_summary(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    tn = build_trampnet(cfg)
    table = load_selection(tn, cfg)

    warnings: List[str] = []
    rows = tn.ingest.commodities(table)
    try:
        durations = tn.ingest.durations(table)
    except DataError as exc:
        warnings.append(f"duration statistics: {exc}")
        durations = None

    artifacts = ArtifactSet()
    artifacts.add_json(
        "summary.json",
        {
            "commodities": rows,
            "totals": {
                "voyages": len({r.voyage_id for r in table}),
                "flows": len(table),
                "volume": sum(r.volume for r in table),
            },
            "vessel_segments": tn.ingest.segments(table),
            "durations": durations,
        },
    )
    if cfg.format == "csv":
        artifacts.add_csv(
            "commodities.csv",
            ["commodity_group", "voyages", "flows", "volume"],
            [dataclasses.astuple(r) for r in rows],
        )

    digests = commit(cfg, artifacts, table)
    return finish(cfg, digests, {"rows": [dataclasses.asdict(r) for r in rows]}, warnings)


def handle_yoy(args: argparse.Namespace) -> int:
    cfg = run_config(args)
    if not cfg.country:
        raise ValueError("--country is required")
    tn = build_trampnet(cfg)
    table = load_selection(tn, cfg)

    report = tn.ingest.yoy(table, cfg.country, cfg.layer)
    artifacts = ArtifactSet()
    artifacts.add_json("yoy.json", report)
    if cfg.format == "csv":
        row_fields = [
            "year", "region", "volume", "prior_volume", "change",
            "pct_change", "contribution_share", "significant",
        ]
        artifacts.add_csv(
            "yoy.csv", row_fields, [[getattr(r, f) for f in row_fields] for r in report.rows]
        )

    digests = commit(cfg, artifacts, table)
    return finish(cfg, digests, {"rows": [dataclasses.asdict(t) for t in report.totals]})


# ------------- parser -------------


def _selection_options() -> argparse.ArgumentParser:
    """Options shared by every command that reads flows. Defaults live in RunConfig."""
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--input", default=None, help="Trade-flow CSV (env TRAMPNET_INPUT)")
    p.add_argument(
        "--layer",
        default=None,
        help="all | grains | coal | iron-ore | <commodity_group> (default all)",
    )
    p.add_argument("--from", dest="window_from", default=None, help="First quarter, e.g. 2015Q1")
    p.add_argument("--to", dest="window_to", default=None, help="Last quarter, e.g. 2023Q4")
    p.add_argument("--product", default=None, help="Commodity filter, e.g. Wheat")
    _output_options(p)
    return p


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help="Random seed (default 0)")
    p.add_argument("--out", default=None, help="Output directory (default ./trampnet-out)")
    p.add_argument(
        "--format",
        choices=OUTPUT_FORMATS,
        default=None,
        help="Output format; csv adds CSV mirrors of tabular files (default json)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trampnet",
        description="Dry-bulk trade-flow network analysis",
    )
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        default="WARNING",
        help="Logging level for stderr (default WARNING)",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"trampnet {__version__}",
    )

    subparsers = parser.add_subparsers(dest="command", required=True)
    selection = _selection_options()

    p = subparsers.add_parser(
        "report", parents=[selection], help="Global network statistics of one layer/window"
    )
    p.add_argument("--top", type=int, default=None, help="Countries per ranking (default 8)")
    p.set_defaults(func=handle_report)

    p = subparsers.add_parser(
        "smallworld", parents=[selection], help="Small-world test against rewired and lattice graphs"
    )
    p.add_argument("--replicates", type=int, default=None, help="Rewired replicates (default 10)")
    p.add_argument(
        "--attempts",
        type=int,
        default=None,
        help="Swap attempts per replicate (default 10 x edges)",
    )
    p.add_argument(
        "--scope",
        choices=SCOPES,
        default=None,
        help="Test the full graph or its GSCC; gscc adds the GSCC comparison (default full)",
    )
    p.set_defaults(func=handle_smallworld)

    p = subparsers.add_parser(
        "temporal", parents=[selection], help="Quarterly distance matrix, clustering and breaks"
    )
    p.add_argument("--k", type=int, default=None, help="Number of clusters (default 2)")
    p.set_defaults(func=handle_temporal)

    p = subparsers.add_parser(
        "communities", parents=[selection], help="Communities before/after a break quarter"
    )
    p.add_argument("--break", dest="break_quarter", default=None, help="Break quarter, e.g. 2020Q1")
    p.add_argument(
        "--weight",
        choices=WEIGHT_KINDS,
        default=None,
        help="Edge weight for community detection (default frequency)",
    )
    p.set_defaults(func=handle_communities)

    p = subparsers.add_parser("summary", parents=[selection], help="Commodity, vessel and duration summary")
    p.set_defaults(func=handle_summary)

    p = subparsers.add_parser("yoy", parents=[selection], help="Year-on-year export volume change")
    p.add_argument("--country", default=None, help="Loading country, e.g. Ukraine")
    p.set_defaults(func=handle_yoy)

    p = subparsers.add_parser("synth", help="Write a synthetic trade-flow fixture")
    p.add_argument("--scenario", choices=SCENARIOS, default=None, help="Planted structure")
    p.add_argument("--spec", default=None, help="JSON fixture spec (overrides --scenario)")
    p.add_argument("--quarters", type=int, default=None, help="Number of quarters")
    p.add_argument("--layer", default=None, help="commodity_group written to the flows (default Coal)")
    p.add_argument("--noise", action="store_true", help="Add rows that cleaning removes")
    _output_options(p)
    p.set_defaults(func=handle_synth)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT, stream=sys.stderr)

    func = getattr(args, "func", None)
    if func is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        return func(args)
    except DataError as exc:
        return _fail(args, exc, EXIT_DATA)
    except ComputeError as exc:
        return _fail(args, exc, EXIT_COMPUTE)
    except ValueError as exc:
        return _fail(args, exc, EXIT_USAGE)


def _fail(args: argparse.Namespace, exc: Exception, code: int) -> int:
    logger.error("%s failed: %s", args.command, exc)
    res = OperationResult(
        operation=f"trampnet_{args.command}",
        target=getattr(args, "input", None) or "",
        success=True,
        details={"exit_code": code, "error_type": type(exc).__name__},
    )
    res.add_error(str(exc))
    print_result(res, output="json")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
