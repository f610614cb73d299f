from __future__ import annotations

from importlib.metadata import PackageNotFoundError, version
from typing import Optional

from .community import CommunityNamespace
from .config import TrampNetConfig
from .graph import GraphNamespace
from .ingest import CleaningConfig, FlowRegistry, FlowSchema, IngestNamespace
from .metrics import MetricsNamespace
from .nullmodel import NullModelNamespace
from .temporal import TemporalNamespace

try:
    __version__ = version("trampnet")
except PackageNotFoundError:
    __version__ = "development"


class TrampNet:
    """
    Entry point bundling the analysis namespaces:

        tn = TrampNet(config=TrampNetConfig(seed=7))
        flows = tn.ingest.load("flows.csv")
        g = tn.graph.build(tn.ingest.slice(flows, "coal"))
        tn.nullmodel.small_world(g)
    """

    def __init__(
        self,
        *,
        config: Optional[TrampNetConfig] = None,
        schema: Optional[FlowSchema] = None,
        rules: Optional[CleaningConfig] = None,
    ) -> None:
        self.config = config or TrampNetConfig()
        self._flows = FlowRegistry(schema, rules)

        self.ingest = IngestNamespace(self._flows)
        self.graph = GraphNamespace()
        self.metrics = MetricsNamespace(self.config.top_k)
        self.nullmodel = NullModelNamespace(
            seed=self.config.seed,
            n_replicates=self.config.n_replicates,
            swap_factor=self.config.swap_factor,
        )
        self.temporal = TemporalNamespace()
        self.community = CommunityNamespace(
            weight=self.config.community_weight,
            seed=self.config.seed,
            small_size=self.config.small_community_size,
        )


__all__ = ["TrampNet", "TrampNetConfig", "__version__"]
