# tests/test_operation_result.py

import io
import json

from trampnet.models import OperationResult
from trampnet.output import print_result


def test_operation_result_initial_state():
    r = OperationResult(operation="trampnet_report", target="flows.csv", success=True)
    assert r.success is True
    assert r.errors == []
    assert r.warnings == []
    assert isinstance(r.details, dict)


def test_operation_result_add_error_marks_failure():
    r = OperationResult(operation="trampnet_report", target="flows.csv", success=True)
    r.add_error("empty selection")
    assert r.success is False
    assert r.errors == ["empty selection"]


def test_operation_result_warning_keeps_success():
    r = OperationResult(operation="trampnet_report", target="flows.csv", success=True)
    r.add_warning("assortativity undefined")
    assert r.success is True
    assert r.warnings == ["assortativity undefined"]


def test_print_result_json_and_csv():
    r = OperationResult(
        operation="trampnet_temporal",
        target="flows.csv",
        success=True,
        details={"rows": [{"quarter": "2020Q1", "cluster": 1}, {"quarter": "2020Q2", "cluster": 2}]},
    )

    out = io.StringIO()
    print_result(r, output="json", stream=out)
    assert json.loads(out.getvalue())["details"]["rows"][1]["cluster"] == 2

    out = io.StringIO()
    print_result(r, output="csv", stream=out)
    assert out.getvalue().splitlines() == ["cluster,quarter", "1,2020Q1", "2,2020Q2"]
