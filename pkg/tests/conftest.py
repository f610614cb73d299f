# tests/conftest.py
import io
import sys
from datetime import timedelta
from pathlib import Path

import pytest
from dateutil.parser import isoparse

# Add repo root to sys.path so `import trampnet` works when running pytest
ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from trampnet.graph import TradeGraph  # noqa: E402
from trampnet.ingest import clean_flows, parse_flows  # noqa: E402
from trampnet.ingest.config import DEFAULT_COLUMNS  # noqa: E402
from trampnet.synth import SynthSpec, generate  # noqa: E402

HEADER = [
    "flow_id", "voyage_id", "commodity_group", "commodity", "volume", "dwt",
    "load_port_id", "load_port_name", "load_region", "load_country",
    "discharge_port_id", "discharge_port_name", "discharge_region", "discharge_country",
    "load_port_departed_at", "discharge_port_arrived_at", "days_total_duration",
    "status", "imo", "segment", "flow_type",
]

_counter = {"n": 0}

VOYAGE = timedelta(days=19, hours=12)


def flow_row(src=1, dst=2, **overrides):
    """One CSV row dict in export column names; overrides use record field names."""
    _counter["n"] += 1
    n = _counter["n"]
    fields = {
        "flow_id": f"F{n}",
        "voyage_id": f"V{n}",
        "commodity_group": "Grains",
        "commodity": "Wheat",
        "volume": "5500",
        "dwt": "11300",
        "load_port_id": str(src),
        "load_port_name": f"Port {src}",
        "load_region": "ECSA",
        "load_country": "Brazil",
        "discharge_port_id": str(dst),
        "discharge_port_name": f"Port {dst}",
        "discharge_region": "FAREAST",
        "discharge_country": "China",
        "load_departed_at": "2015-06-11T12:47:07Z",
        "discharge_arrived_at": "2015-07-01T00:53:28Z",
        "days_total_duration": "19.5",
        "status": "Completed",
        "imo": "9300001",
        "segment": "Panamax",
    }
    flow_type = overrides.pop("flow_type", "Trade")
    if "load_departed_at" in overrides and "discharge_arrived_at" not in overrides:
        # keep the voyage forward in time when only the departure moves
        try:
            departed = isoparse(str(overrides["load_departed_at"]))
        except ValueError:
            departed = None  # deliberately bad timestamp: leave it for the parser
        if departed is not None:
            overrides["discharge_arrived_at"] = (departed + VOYAGE).isoformat()
    fields.update({k: str(v) for k, v in overrides.items()})
    row = {DEFAULT_COLUMNS[k]: v for k, v in fields.items()}
    row["flow_type"] = flow_type
    return row


def csv_bytes(rows, header=HEADER):
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_quote(row.get(h, "")) for h in header) + "\n")
    return buf.getvalue().encode("utf-8")


def table_of(rows):
    return parse_flows(io.BytesIO(csv_bytes(rows)), source_name="test.csv")


def synth_table(**spec):
    """Cleaned FlowTable and ground truth of a generated fixture."""
    fixture = generate(SynthSpec(**spec))
    data = io.BytesIO(fixture.to_csv().encode("utf-8"))
    table = clean_flows(parse_flows(data, source_name=f"synth-{fixture.spec.scenario}"))
    return table, fixture.ground_truth


def digraph(edges, nodes=(), ports=None, weights=None):
    return TradeGraph.from_edges(edges, nodes=nodes, ports=ports, weights=weights)


def _quote(value):
    value = str(value)
    if "," in value or '"' in value:
        return '"' + value.replace('"', '""') + '"'
    return value


@pytest.fixture
def write_flows(tmp_path):
    """Write rows to a CSV file under tmp_path and return its path."""
    def _write(rows, name="flows.csv"):
        path = tmp_path / name
        path.write_bytes(csv_bytes(rows))
        return path
    return _write


@pytest.fixture
def triangle():
    return digraph([(1, 2), (2, 3), (3, 1)])


