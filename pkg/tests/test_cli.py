import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from toaderqi import cli, means, registry, sequences, sharp, special

GOLDEN = Path(__file__).parent / "golden"

COMMANDS = {
    "eval": ["eval", "toader-qi", "1", "4"],
    "verify": ["verify", "G-TQ-A", "W-YI", "I_0-L-A", "conjecture-2", "--samples", "100", "--seed", "7"],
    "constants": ["constants"],
    "series": ["series", "i0-squared", "6"],
    "table": ["table", "cd-ratio", "5"],
    "probe": ["probe", "I-TQ-sqrLA-w"],
}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("fmt", ["json", "csv"])
@pytest.mark.parametrize("command", sorted(COMMANDS))
def test_golden_output(command, fmt):
    code, out, _ = run(COMMANDS[command] + ["--format", fmt])
    assert code == 0
    assert out == (GOLDEN / f"{command}.{fmt}").read_text(encoding="utf-8")


def test_eval_is_thin_adapter():
    _, out, _ = run(["eval", "toader-qi", "1", "4"])
    obj = json.loads(out)
    assert obj == {"mean": "toader-qi", "a": 1, "b": 4, "value": means.tq_mean((1, 4))}
    assert 2 < obj["value"] < 2.5


def test_eval_tolerance_flag_reaches_quadrature():
    _, out, _ = run(["eval", "toader", "1", "3", "--tolerance", "1e-6"])
    expected = means.toader_mean((1, 3), special.QuadratureConfig(tolerance=1e-6))
    assert json.loads(out)["value"] == expected


def test_numbers_round_trip():
    a = 0.1 + 0.2
    _, out, _ = run(["eval", "arithmetic", repr(a), "1e-300"])
    obj = json.loads(out)
    assert obj["a"] == a and obj["b"] == 1e-300


def test_constants_match_library():
    _, out, _ = run(["constants", "--p", "0.93"])
    obj = json.loads(out)
    res = sharp.find_t0_delta0()
    assert obj["t0"] == res.location and obj["delta0"] == res.value
    assert abs(obj["t0"] - 2.7113555314) < 1e-6
    assert obj["lambda0"] == [{"p": 0.93, "t": sharp.find_lambda0(0.93).location,
                               "value": sharp.find_lambda0(0.93).value}]


def test_table_matches_library():
    _, out, _ = run(["table", "v-sequence", "3"])
    rows = json.loads(out)["rows"]
    assert [r["value"] for r in rows] == ["0/1", "0/1", "3/80", "4/189"]
    assert cli.emit_table("s-sequence", 1, "json") == \
        '{"sequence": "s-sequence", "rows": [{"n": 0, "value": "1/1"}, {"n": 1, "value": "3/4"}]}\n'
    assert [v.to_json() for v in sequences.sequence_values("cd-ratio", 3)] == json.loads(
        cli.emit_table("cd-ratio", 3))["rows"]


def test_verify_matches_library():
    _, out, _ = run(["verify", "Qi-I-1", "--samples", "200", "--seed", "5"])
    rep = registry.verify_case("Qi-I-1", 200, 5)
    assert json.loads(out)["cases"] == [json.loads(cli.dumps(rep.to_json()))]


def test_verify_reports_conjecture_without_failing():
    code, out, _ = run(["verify", "conjecture-L32", "conjecture-2", "--samples", "300"])
    assert code == 0
    assert {c["status"] for c in json.loads(out)["cases"]} == {"conjecture"}


def test_non_finite_floats_become_null():
    assert cli.dumps({"x": math.inf, "y": math.nan}) == '{"x": null, "y": null}\n'


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["eval", "toader-qi", "1"],
    ["eval", "toader-qi", "1", "x"],
    ["eval", "heronian", "1", "2"],
    ["eval", "toader-qi", "-1", "2"],
    ["verify", "--samples", "0"],
    ["verify", "no-such-case"],
    ["verify", "--bogus-flag"],
    ["series", "nope", "3"],
    ["table", "nope", "3"],
    ["table", "cd-ratio", "-1"],
    ["probe", "G-TQ-A"],
    ["constants", "--p", "0.5"],
])
def test_usage_errors_exit_two(argv):
    code, out, err = run(argv)
    assert code == 2
    assert out == "" and err.startswith("error:")


def test_help_exits_zero():
    code, _, _ = run(["--help"])
    assert code == 0


def test_failing_probe_exits_one(monkeypatch):
    bad = registry.ProbeResult("x", "0+", 1e-4, 1.0, 0.0, 1e-6)
    monkeypatch.setattr(registry, "sharpness_probe", lambda cid: [bad])
    code, out, _ = run(["probe", "I_0-L-A"])
    assert code == 1 and json.loads(out)["probes"][0]["ok"] is False


def test_failing_theorem_exits_one(monkeypatch):
    case = registry.la_upper_case(0.8)
    real_get = registry.get_case
    monkeypatch.setattr(registry, "get_case",
                        lambda cid: case if cid == case.id else real_get(cid))
    code, out, _ = run(["verify", case.id, "--samples", "200"])
    assert code == 1 and json.loads(out)["failed"] == [case.id]


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "toaderqi", "verify", "--samples", "100", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
