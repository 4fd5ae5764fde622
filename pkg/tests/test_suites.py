import logging

import pytest

from paramodring.config import settings
from paramodring.database import init_db
from paramodring.errors import InsufficientJacobiData, SuiteAborted, WindowTooSmall
from paramodring.models import CheckRecord, VerificationRun
from paramodring.suites import runner
from paramodring.suites.progress import VerifyProgress, verify_progress
from paramodring.suites.result import FAIL, PASS, UNDECIDED, CheckOutcome, SuiteResult


def _raise(exc):
    def check():
        raise exc
    return check


MIXED = [
    ("ok", lambda: (True, "")),
    ("bad", lambda: (False, "c(1,1) = 3, expected 4")),
    ("short", _raise(WindowTooSmall("weight 8: 3 slots for 5 monomials"))),
    ("boom", _raise(RuntimeError("boom"))),
]


@pytest.fixture
def fake_suites(monkeypatch):
    monkeypatch.setattr(settings, "max_workers", 1)
    monkeypatch.setitem(runner._SUITE_CHECKS, "mixed", MIXED)
    monkeypatch.setitem(runner._SUITE_CHECKS, "green", [("a", lambda: (True, "")), ("b", lambda: (True, ""))])
    monkeypatch.setitem(runner._SUITE_CHECKS, "open", [("a", _raise(InsufficientJacobiData([(3, 0)])))])


def test_outcomes_keep_declared_order(fake_suites):
    result = runner.run_suite("mixed", record=False)
    assert [c.check_id for c in result.checks] == ["ok", "bad", "short", "boom"]
    assert [c.status for c in result.checks] == [PASS, FAIL, UNDECIDED, FAIL]
    assert result.checks[1].witness == "c(1,1) = 3, expected 4"
    assert result.checks[3].witness == "RuntimeError: boom"
    assert result.exit_code == 1
    assert result.worst == FAIL


def test_green_suite(fake_suites):
    result = runner.run_suite("green", record=False)
    assert result.exit_code == 0
    assert result.to_dict()["passed"] == 2


def test_undecided_is_not_a_pass(fake_suites):
    result = runner.run_suite("open", record=False)
    assert result.worst == UNDECIDED
    assert result.exit_code == 1
    assert "(3,0)" in result.checks[0].witness


def test_unknown_suite():
    with pytest.raises(ValueError):
        runner.run_suite("nope")


def test_fail_fast_stops(fake_suites):
    result = runner.run_suite("mixed", fail_fast=True, record=False)
    assert result.aborted
    assert result.checks[0].status == PASS
    assert result.checks[1].status == FAIL
    assert result.exit_code == 1
    assert not verify_progress.is_abort_requested()

    results = runner.run_suites(["mixed", "green"], fail_fast=True, record=False)
    assert [r.suite for r in results] == ["mixed"]
    assert len(runner.run_suites(["mixed", "green"], record=False)) == 2


def test_all_expands_to_every_suite(monkeypatch):
    seen = []
    monkeypatch.setattr(runner, "run_suite", lambda n, fail_fast, record: seen.append(n) or SuiteResult(n))
    runner.run_suites("all")
    assert seen == list(runner.SUITES)


def test_recorded_run(fake_suites, run_db):
    runner.run_suite("mixed", record=True)
    db = run_db()
    try:
        runs = runner.recent_runs(db)
        assert len(runs) == 1
        run = runs[0]
        assert (run["suite"], run["status"]) == ("mixed", FAIL)
        assert (run["passed"], run["failed"], run["undecided"]) == (1, 2, 1)
        assert run["finished_at"] is not None
        assert db.query(CheckRecord).count() == 4
    finally:
        db.close()


def test_stale_runs_are_closed(run_db):
    init_db()
    db = run_db()
    try:
        stale = VerificationRun(suite="paramod", status="running", started_at="2024-01-01 00:00:00")
        db.add(stale)
        db.commit()
        db.add(CheckRecord(run_id=stale.id, check_id="paramod.lift_examples", status=PASS))
        db.add(CheckRecord(run_id=stale.id, check_id="paramod.p4_constants", status=UNDECIDED, witness="(3,0)"))
        db.commit()
        runner.cleanup_stale_runs(db)
        run = db.query(VerificationRun).one()
        declared = len(runner._SUITE_CHECKS["paramod"])
        assert run.status == "failed"
        assert run.error_message == f"interrupted after 2 of {declared} checks"
        assert (run.passed, run.failed, run.undecided) == (1, 0, 1)
        assert run.duration_seconds is None
    finally:
        db.close()


def test_progress_tracker():
    progress = VerifyProgress()
    progress.start("paramod", 3)
    assert progress.check_finished() == (1, 3)
    assert progress.check_finished() == (2, 3)
    progress.request_abort()
    with pytest.raises(SuiteAborted):
        progress.check_aborted()
    progress.reset()
    assert not progress.is_abort_requested()
    progress.check_aborted()


def test_verify_logs_progress_lines(fake_suites, caplog):
    caplog.set_level(logging.INFO, logger="paramodring.suites.runner")
    runner.run_suite("green", record=False)
    assert "[1/2] a: pass" in caplog.messages
    assert "[2/2] b: pass" in caplog.messages


def test_result_rendering():
    result = SuiteResult("demo", [CheckOutcome("one", PASS), CheckOutcome("two", FAIL, "witness")])
    table = result.table()
    assert table.splitlines()[0] == "== demo =="
    assert "FAIL" in table and "witness" in table
    assert table.endswith("1 passed, 1 failed, 0 undecided")
    assert result.to_dict()["checks"][1] == {"check": "two", "status": FAIL, "witness": "witness"}


@pytest.mark.parametrize("suite", ["hilbert", "sympcheck"])
def test_shipped_suites_pass(suite):
    result = runner.run_suite(suite, record=False)
    failures = [c for c in result.checks if c.status != PASS]
    assert not failures, failures
