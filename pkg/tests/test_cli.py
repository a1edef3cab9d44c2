"""Tests for the command-line interface."""

import io
import json
import subprocess
import sys

import pytest

from bncells.cli import RunConfig, main
from bncells.errors import InvalidInputError
from bncells.group import WeightFunction, parse_window
from bncells.partition import GroupPartition
from bncells.tableaux import rs_generalized


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


# -- config --------------------------------------------------------------------


def test_run_config_validation():
    weight = WeightFunction(1, 2)
    RunConfig(2, weight)  # defaults are fine
    with pytest.raises(InvalidInputError):
        RunConfig(2, weight, method="magic")
    with pytest.raises(InvalidInputError):
        RunConfig(2, weight, fmt="yaml")
    with pytest.raises(InvalidInputError):
        RunConfig(2, weight, jobs=0)


# -- table ----------------------------------------------------------------------


def test_table_small_ranks_tsv():
    code, text = run_cli("table", "--max-n", "3")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "n\tboundary\tdominant\torbits\tcells_source"
    assert lines[1] == "2\t4\t6\t8\trefined+oracle"
    assert lines[2] == "3\t16\t20\t26\trefined+oracle"
    assert text.endswith("\n")


def test_table_small_ranks_json():
    code, text = run_cli("table", "--max-n", "3", "--format", "json")
    assert code == 0
    rows = json.loads(text)["rows"]
    assert rows[0]["boundary"] == 4
    assert rows[0]["dominant"] == 6
    assert rows[0]["orbits"] == 8
    assert rows[1]["n"] == 3


def test_table_respects_jobs_flag():
    code, text = run_cli("table", "--max-n", "3", "--jobs", "2")
    assert code == 0
    assert "2\t4\t6\t8" in text


def test_table_jobs_env_var(monkeypatch):
    monkeypatch.setenv("BNCELLS_JOBS", "2")
    code, _ = run_cli("table", "--max-n", "2")
    assert code == 0
    monkeypatch.setenv("BNCELLS_JOBS", "potato")
    code, _ = run_cli("table", "--max-n", "2")
    assert code == 2


def test_table_rejects_bad_jobs():
    code, _ = run_cli("table", "--max-n", "2", "--jobs", "0")
    assert code == 2


# -- verify -----------------------------------------------------------------------


def test_verify_dominant_weight_rank_three():
    code, text = run_cli("verify", "--n", "3", "--a", "1", "--b", "3")
    assert code == 0
    assert "num_classes\t20" in text
    assert "regime\tasymptotic" in text
    assert "FAIL" not in text


def test_verify_boundary_weight_rank_three():
    code, text = run_cli(
        "verify", "--n", "3", "--a", "1", "--b", "2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["num_classes"] == 16
    assert payload["regime"] == "intermediate"
    assert all(check["ok"] for check in payload["checks"])
    names = {check["check"] for check in payload["checks"]}
    assert names == {
        "oracle-vs-classes",
        "region-cells-are-left-cells",
        "region-difference",
    }


def test_verify_interval_weight_is_conjectural():
    code, text = run_cli(
        "verify", "--n", "3", "--a", "2", "--b", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(text)
    assert "conjectural regime" in payload["regime"]
    assert payload["num_classes"] == 16
    checks = {check["check"]: check for check in payload["checks"]}
    assert checks["interval-matches-boundary"]["ok"]
    assert "skipped" in checks["oracle-vs-classes"]["detail"]


def test_verify_low_regime_exits_two():
    code, _ = run_cli("verify", "--n", "3", "--a", "3", "--b", "1")
    assert code == 2


def test_verify_budget_guard_exits_two():
    code, _ = run_cli("verify", "--n", "5", "--a", "1", "--b", "5")
    assert code == 2


def test_verify_reports_falsification(monkeypatch):
    import bncells.cli as cli_module

    def coarse(kl):
        return GroupPartition(n=2, class_id=[0] * 8)

    monkeypatch.setattr(cli_module, "left_cells", coarse)
    code, text = run_cli("verify", "--n", "2", "--a", "1", "--b", "2")
    assert code == 1
    assert "FAIL" in text


# -- cells ------------------------------------------------------------------------


def test_cells_default_method_lists_every_element():
    code, text = run_cli("cells", "--n", "2")
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 8
    assert lines[0] == "1,2\t0"


def test_cells_oracle_json_summary():
    code, text = run_cli(
        "cells", "--n", "2", "--method", "oracle-kl", "--format", "json"
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["num_classes"] == 6
    assert payload["method"] == "oracle-kl"


def test_cells_insertion_method_labels_by_recording_side():
    code, text = run_cli("cells", "--n", "2", "--method", "rs-asymptotic")
    assert code == 0
    assert "1,2\t1 2 | -" in text


def test_cells_descent_method_labels_by_invariant():
    code, text = run_cli(
        "cells", "--n", "2", "--method", "rxi", "--a", "1", "--b", "2"
    )
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "1,2\t-"
    assert lines[1] == "-1,2\tt"


def test_cells_region_method_lists_only_region_elements():
    code, text = run_cli("cells", "--n", "2", "--method", "area")
    assert code == 0
    assert len(text.splitlines()) == 6


def test_cells_vogan_json_reports_rounds():
    code, text = run_cli(
        "cells", "--n", "3", "--method", "vogan", "--format", "json"
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["num_classes"] == 20
    assert "round_count" in payload


def test_cells_unknown_method_is_usage_error():
    with pytest.raises(SystemExit) as err:
        main(["cells", "--n", "2", "--method", "magic"], out=io.StringIO())
    assert err.value.code == 2


# -- orbits -----------------------------------------------------------------------


def test_orbits_json_summary():
    code, text = run_cli("orbits", "--n", "3", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["num_classes"] == 26
    assert payload["side"] == "right"


def test_orbits_left_side():
    code, text = run_cli(
        "orbits", "--n", "2", "--side", "left", "--format", "json"
    )
    assert code == 0
    assert json.loads(text)["num_classes"] == 8


def test_orbits_regime_gate():
    code, _ = run_cli("orbits", "--n", "4", "--a", "2", "--b", "4")
    assert code == 2


# -- element ----------------------------------------------------------------------


def test_element_worked_example_quick():
    code, text = run_cli("element", "--w", "-7,-5,6,4,3,-2,1", "--quick")
    assert code == 0
    assert "shape\t(1,1,1,1 | 1,1,1)" in text
    assert "in_area\ttrue" in text
    assert "length\t23" in text
    assert "length_t\t3" in text
    assert "rdes\tt,s3,s4,s5" in text


def test_element_identity_row():
    code, text = run_cli("element", "--w", "1,2,3", "--quick")
    assert code == 0
    assert "rdes\t-" in text
    assert "rxi\t-" in text
    assert "in_area\tfalse" in text
    assert "length\t0" in text


def test_element_full_report_has_orbit_and_class_ids():
    code, text = run_cli("element", "--w", "-2,1", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert {"orbit_id", "class_id", "class_label"} <= payload.keys()
    assert payload["n"] == 2


def test_element_report_matches_library(rng_seeded):
    for _ in range(5):
        n = rng_seeded.randint(1, 6)
        values = list(range(1, n + 1))
        rng_seeded.shuffle(values)
        w = tuple(v if rng_seeded.random() < 0.5 else -v for v in values)
        text_w = ",".join(str(x) for x in w)
        code, text = run_cli("element", "--w", text_w, "--quick", "--format", "json")
        assert code == 0
        payload = json.loads(text)
        a_tab, b_tab = rs_generalized(parse_window(text_w))
        assert payload["insertion"] == a_tab.to_text()
        assert payload["recording"] == b_tab.to_text()


def test_element_malformed_window_is_usage_error():
    code, _ = run_cli("element", "--w", "1,1")
    assert code == 2
    code, _ = run_cli("element", "--w", "apple")
    assert code == 2


# -- area -------------------------------------------------------------------------


def test_area_json_summary():
    code, text = run_cli("area", "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(text)
    assert payload["num_classes"] == 4
    assert payload["region_size"] == 6
    assert payload["cell_sizes"] == [1, 1, 2, 2]


def test_area_tsv_labels_cells_by_minimal_element():
    code, text = run_cli("area", "--n", "2")
    assert code == 0
    lines = dict(line.split("\t") for line in text.splitlines())
    assert lines["2,1"] == "2,1"
    assert lines["-1,2"] == lines["-2,1"]


# -- process-level behavior ---------------------------------------------------------


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "bncells", "table", "--max-n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.endswith("\n")
    assert "refined+oracle" in proc.stdout


def test_missing_subcommand_is_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "bncells"], capture_output=True, text=True
    )
    assert proc.returncode == 2
