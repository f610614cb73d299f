import hashlib
import json
import math
from datetime import datetime, timezone

import numpy as np

from trampnet.ingest import QuarterId
from trampnet.output import MANIFEST_NAME, ArtifactSet, csv_text, dumps, to_jsonable


def test_to_jsonable_handles_results():
    data = {
        ("A", "B"): 1,
        3: {"x", "a"},
        "q": QuarterId(2020, 1),
        "nan": math.nan,
        "ts": datetime(2020, 1, 1, tzinfo=timezone.utc),
        "arr": np.array([1.5, 2.5]),
        "n": np.int64(4),
    }
    out = to_jsonable(data)
    assert out["A->B"] == 1
    assert out["3"] == ["a", "x"]
    assert out["q"] == {"year": 2020, "quarter": 1}
    assert out["nan"] is None
    assert out["ts"] == "2020-01-01T00:00:00+00:00"
    assert out["arr"] == [1.5, 2.5]
    assert out["n"] == 4


def test_dumps_is_stable():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
    assert dumps({"x": math.inf}).strip() == '{\n  "x": null\n}'


def test_csv_text_blanks_none():
    assert csv_text(["a", "b"], [[1, None], ["x,y", 0.5]]) == 'a,b\n1,\n"x,y",0.5\n'


def test_artifacts_commit_with_manifest(tmp_path):
    artifacts = ArtifactSet()
    artifacts.add_json("report.json", {"n": 3})
    artifacts.add_csv("edges.csv", ["src", "dst"], [(1, 2)])

    digests = artifacts.commit(tmp_path / "out", {"command": "report"})

    text = (tmp_path / "out" / "edges.csv").read_text(encoding="utf-8")
    assert text == "src,dst\n1,2\n"
    assert digests["edges.csv"] == hashlib.sha256(text.encode("utf-8")).hexdigest()
    manifest = json.loads((tmp_path / "out" / MANIFEST_NAME).read_text(encoding="utf-8"))
    assert manifest["command"] == "report"
    assert manifest["artifacts"] == digests
    assert sorted(p.name for p in (tmp_path / "out").iterdir()) == [
        "edges.csv", MANIFEST_NAME, "report.json",
    ]


def test_nothing_written_before_commit(tmp_path):
    artifacts = ArtifactSet()
    artifacts.add_text("flows.csv", "a\n")
    assert artifacts.names == ["flows.csv"]
    assert list(tmp_path.iterdir()) == []


def test_dumps_stringifies_unknown_values():
    assert json.loads(dumps({"o": object()}))["o"].startswith("<object")
