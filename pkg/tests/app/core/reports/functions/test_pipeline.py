"""
Tests for the report pipeline: configuration loading, stage selection,
statuses and end-to-end runs on small geometries.
"""

import json

import pytest

from src.app.core.codes.entities.ClassifiedWord import DualWeightResult
from src.app.core.constructions.functions.gpg_format import export_gpg
from src.app.core.geometry.functions.geometry_build import mutate_remove_incidence
from src.app.core.origin.schemas.ServiceStatus import ServiceStatus
from src.app.core.reports.entities.Report import CheckRecord, Report
from src.app.core.reports.entities.RunConfig import RunConfig
from src.app.core.reports.exceptions.ConfigException import ConfigException
from src.app.core.reports.functions.pipeline import (
    STAGES,
    expected_gonality,
    finish_pipeline,
    load_run_config,
    prepare_pipeline,
    report_status,
    run_pipeline,
    run_stage,
    stage_enabled,
)
from src.app.infra.workers.contracts.thread_pool_worker_contract_v0 import (
    ThreadPoolWorkerContractV0,
)


def _checks(report: Report):
    return {record.check for record in report.assertions}


class TestLoadRunConfig:

    # ==================== Success Cases ====================

    def test_reads_json(self, tmp_path):
        """A config file becomes a RunConfig."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"geometry": {"family": "wq", "q": 2}, "fields": [3, 2], "seed": 7}))

        config = load_run_config(path)

        assert config.geometry.family == "wq"
        assert config.fields == [2, 3]
        assert config.seed == 7

    def test_seed_override(self, tmp_path):
        """An explicit seed replaces the configured one."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"geometry": {"family": "wq", "q": 2}, "seed": 7}))

        assert load_run_config(path, seed=11).seed == 11

    # ==================== Exception Cases ====================

    def test_missing_file(self, tmp_path):
        """An unreadable file is a config error."""
        with pytest.raises(ConfigException) as exc_info:
            load_run_config(tmp_path / "absent.json")

        assert "cannot read config" in str(exc_info.value)

    def test_invalid_json(self, tmp_path):
        """Malformed JSON is a config error."""
        path = tmp_path / "run.json"
        path.write_text("{geometry: wq")

        with pytest.raises(ConfigException) as exc_info:
            load_run_config(path)

        assert "not valid JSON" in str(exc_info.value)

    def test_invalid_fields(self, tmp_path):
        """Schema violations are config errors."""
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"geometry": {"family": "wq", "q": 2}, "fields": [4]}))

        with pytest.raises(ConfigException) as exc_info:
            load_run_config(path)

        assert exc_info.value.status == ServiceStatus.VALIDATION_ERROR

    def test_file_source_needs_gonality(self, w2_path):
        """A .gpg file carries no gonality of its own."""
        config = RunConfig(geometry={"path": w2_path})

        with pytest.raises(ConfigException):
            expected_gonality(config)


class TestStages:

    # ==================== Success Cases ====================

    def test_gonality_from_family(self):
        """Families fix n; ngon takes it from q."""
        assert expected_gonality(RunConfig(geometry={"family": "wq", "q": 2})) == 4
        assert expected_gonality(RunConfig(geometry={"family": "ngon", "q": 6})) == 6
        assert expected_gonality(RunConfig(geometry={"family": "wq", "q": 2}, n=5)) == 5

    def test_axioms_always_run(self):
        """Certification runs even when its check is not listed."""
        state = prepare_pipeline(RunConfig(geometry={"family": "wq", "q": 2}, checks=["minwt"]))

        assert stage_enabled(state, "axioms") is True
        assert stage_enabled(state, "minwt") is True
        assert stage_enabled(state, "classification") is False

        assert run_stage(state, "axioms") is True
        assert run_stage(state, "perp") is False
        assert _checks(state.report) == {"axioms.verify_polygon"}

    def test_stage_order(self):
        """Stages run in a fixed order."""
        assert STAGES == ("axioms", "cx", "minwt", "classification", "blocking", "perp", "dual")

    def test_timing_only_on_request(self):
        """Timings are left out unless asked for."""
        config = RunConfig(geometry={"family": "ngon", "q": 4}, checks=["axioms"])

        assert run_pipeline(config).timing is None
        timed = run_pipeline(config.model_copy(update={"include_timing": True}))
        assert set(timed.timing) == {"axioms"}


class TestReportStatus:

    # ==================== Status Mapping ====================

    def test_clean_report(self):
        """No anomalies and no notices is a success."""
        assert report_status(Report()) == ServiceStatus.SUCCESS

    def test_anomaly_wins_over_notices(self):
        """A failed assertion outranks a cost guard."""
        report = Report(anomalies=[CheckRecord(check="cx.all_eq", passed=False)], notices=["minwt GF(2): cap"])

        assert report_status(report) == ServiceStatus.ANOMALY

    def test_aborted_report(self):
        """An aborted run is an anomaly."""
        assert report_status(Report(aborted=True)) == ServiceStatus.ANOMALY

    def test_notices_only(self):
        """Searches stopped by a guard give exit code 3."""
        status = report_status(Report(notices=["blocking.converse: cap"]))

        assert status == ServiceStatus.COST_GUARD_EXCEEDED
        assert status.exit_code == 3


class TestRunPipeline:

    # ==================== Success Cases ====================

    def test_symplectic_quadrangle(self):
        """W(2) over GF(2) passes every check it asserts."""
        report = run_pipeline(RunConfig(geometry={"family": "wq", "q": 2}, fields=[2]))

        assert report_status(report) == ServiceStatus.SUCCESS
        assert report.anomalies == []
        assert report.geometry.label == "W(2)"
        assert (report.geometry.s, report.geometry.t) == (2, 2)
        block = report.field_block(2)
        assert block.min_weight == 3
        assert block.line_multiples == 15
        assert block.classification == {1: 15}
        assert block.unclassified == 0
        assert report.blocking.min_size.size == 3
        assert report.blocking.converse.d_histogram == {1: 15, 2: 20}
        assert report.perp.projective_augmented == 15
        assert {
            "axioms.expected_counts",
            "cx.line_products",
            "minwt.theorem",
            "minwt.embedded",
            "traces.star_witness",
            "blocking.converse",
            "perp.projective_points",
        } <= _checks(report)

    def test_field_condition_is_recorded(self):
        """GF(3) is run with the field condition and the theorem flag."""
        report = run_pipeline(
            RunConfig(geometry={"family": "wq", "q": 2}, fields=[3], checks=["axioms", "minwt"])
        )

        block = report.field_block(3)
        assert block.field_condition.holds is True
        assert block.theorem_applicable is True
        assert block.min_weight == 3
        assert report.anomalies == []

    def test_projective_plane(self):
        """Odd gonality skips every stage built on weighted vectors."""
        report = run_pipeline(RunConfig(geometry={"family": "pg2", "q": 2}, fields=[2]))

        assert report_status(report) == ServiceStatus.SUCCESS
        skipped = {o.check for o in report.observations}
        assert {"cx.skipped", "traces.skipped", "blocking.skipped", "perp.skipped"} <= skipped
        assert report.field_block(2).rank == 4
        assert "minwt.embedded" in _checks(report)

    def test_ordinary_hexagon(self):
        """Thin polygons are observed rather than asserted."""
        report = run_pipeline(RunConfig(geometry={"family": "ngon", "q": 6}, fields=[2]))

        assert report_status(report) == ServiceStatus.SUCCESS
        assert report.geometry.is_thick is False
        assert report.field_block(2).min_weight == 2
        assert "minwt.observed" in {o.check for o in report.observations}

    def test_worker_pool_gives_the_same_report(self):
        """Reports are identical with and without a worker pool."""
        config = RunConfig(geometry={"family": "wq", "q": 2}, fields=[2], seed=3)

        serial = run_pipeline(config)
        pooled = run_pipeline(config, ThreadPoolWorkerContractV0(4))

        assert serial.model_dump_json() == pooled.model_dump_json()

    def test_seed_is_recorded(self):
        """The seed used for sampling is part of the report."""
        config = RunConfig(geometry={"family": "ngon", "q": 4}, checks=["axioms"], seed=42)

        assert run_pipeline(config).seed == 42

    def test_split_cayley_hexagon(self):
        """H(2) over GF(2) runs every stage and passes every check it asserts."""
        report = run_pipeline(RunConfig(geometry={"family": "hexagon", "q": 2}, fields=[2]))

        assert report_status(report) == ServiceStatus.SUCCESS
        assert report.anomalies == []
        assert report.geometry.label == "H(2)"
        assert (report.geometry.s, report.geometry.t) == (2, 2)
        block = report.field_block(2)
        assert block.theorem_applicable is True
        assert block.min_weight == 3
        assert block.line_multiples == 63
        assert report.perp.projective_augmented == 63
        assert {"minwt.theorem", "traces.star_witness", "perp.projective_points"} <= _checks(report)

    def test_star_stage_uses_the_default_sample_count(self):
        """The star witness check on H(2) draws 1000 samples."""
        report = run_pipeline(
            RunConfig(geometry={"family": "hexagon", "q": 2}, fields=[2], checks=["axioms", "traces"])
        )

        record = next(r for r in report.assertions if r.check == "traces.star_witness")
        assert record.passed is True
        assert record.detail.startswith("1000 samples, seed 0")

    def test_regular_polygon_reaches_the_dual_bound(self):
        """W(2) is regular, so its dual minimum weight equals the bound 6."""
        report = run_pipeline(
            RunConfig(geometry={"family": "wq", "q": 2}, fields=[2], checks=["axioms", "dualwt"])
        )

        assert report.field_block(2).dual.weight == 6
        record = next(r for r in report.assertions if r.check == "dualwt.regular_equality")
        assert record.passed is True
        assert report_status(report) == ServiceStatus.SUCCESS

    # ==================== Failure Cases ====================

    def test_mutated_geometry_aborts(self, w2, tmp_path):
        """A geometry that fails certification stops the run."""
        path = tmp_path / "mutated.gpg"
        export_gpg(mutate_remove_incidence(w2, 0, w2.lines[0][0]), path)

        report = run_pipeline(RunConfig(geometry={"path": str(path)}, n=4))

        assert report.aborted is True
        assert report.abort_reason.startswith("certification failed")
        assert report_status(report) == ServiceStatus.ANOMALY
        assert _checks(report) == {"axioms.verify_polygon"}
        assert [r.check for r in report.anomalies] == ["axioms.verify_polygon"]

    def test_cost_guard_becomes_a_notice(self):
        """A tiny subset cap leaves notices instead of failing."""
        config = RunConfig(
            geometry={"family": "wq", "q": 2},
            checks=["axioms", "blocking"],
            overrides={"exhaustive_cap": 10},
        )

        report = run_pipeline(config)

        assert report.anomalies == []
        assert any(n.startswith("blocking.min_size") for n in report.notices)
        assert report_status(report) == ServiceStatus.COST_GUARD_EXCEEDED

    def test_regular_polygon_above_the_dual_bound(self, monkeypatch):
        """A dual weight above the bound is an anomaly for a regular polygon."""
        monkeypatch.setattr(
            "src.app.core.reports.functions.stages.dual_min_weight",
            lambda code, **kwargs: DualWeightResult(weight=8, method="row-space", bound=6),
        )

        report = run_pipeline(
            RunConfig(geometry={"family": "wq", "q": 2}, fields=[2], checks=["axioms", "dualwt"])
        )

        assert [r.check for r in report.anomalies] == ["dualwt.regular_equality"]
        assert report_status(report) == ServiceStatus.ANOMALY

    def test_dual_build_is_not_held_to_equality(self, monkeypatch):
        """dual W(2) is not regular; a weight above the bound only has to respect it."""
        monkeypatch.setattr(
            "src.app.core.reports.functions.stages.dual_min_weight",
            lambda code, **kwargs: DualWeightResult(weight=8, method="row-space", bound=6),
        )

        report = run_pipeline(
            RunConfig(geometry={"family": "wq", "q": 2, "dual": True}, fields=[2], checks=["axioms", "dualwt"])
        )

        assert "dualwt.regular_equality" not in _checks(report)
        assert report.anomalies == []

    def test_finish_collects_anomalies(self):
        """Failed assertions are copied into anomalies."""
        state = prepare_pipeline(RunConfig(geometry={"family": "ngon", "q": 4}, checks=["axioms"]))
        state.assert_check("cx.all_eq", False, "rows [0]")
        state.assert_check("cx.support", True)

        report = finish_pipeline(state)

        assert [r.check for r in report.anomalies] == ["cx.all_eq"]
