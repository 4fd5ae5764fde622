import logging
import time
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from sqlalchemy.orm import Session

from paramodring.config import settings
from paramodring.database import SessionLocal, init_db
from paramodring.errors import (
    InsufficientJacobiData, SuiteAborted, TruncationError, UndecidedAtTruncation, WindowTooSmall,
    WindowUnstable,
)
from paramodring.models import CheckRecord, VerificationRun
from paramodring.suites import classical, deghilb, hilbert, paramod, sympcheck
from paramodring.suites.progress import verify_progress
from paramodring.suites.result import FAIL, PASS, UNDECIDED, CheckOutcome, SuiteResult

logger = logging.getLogger(__name__)

_SUITE_CHECKS = {
    "classical": classical.CHECKS,
    "deghilb": deghilb.CHECKS,
    "paramod": paramod.CHECKS,
    "sympcheck": sympcheck.CHECKS,
    "hilbert": hilbert.CHECKS,
}

SUITES = tuple(_SUITE_CHECKS)

# exceptions meaning "not decidable on this window" rather than "wrong"
_UNDECIDED_ERRORS = (
    UndecidedAtTruncation, WindowTooSmall, WindowUnstable, TruncationError, InsufficientJacobiData,
)


def _utcnow_str() -> str:
    return datetime.now(timezone.utc).replace(tzinfo=None).isoformat(sep=" ", timespec="seconds")


def cleanup_stale_runs(db: Session):
    """Close runs a crashed process left in 'running'; counts come from the checks it managed to record."""
    stale = db.query(VerificationRun).filter_by(status="running").all()
    for run in stale:
        statuses = [c.status for c in run.checks]
        run.passed = statuses.count(PASS)
        run.failed = statuses.count(FAIL)
        run.undecided = statuses.count(UNDECIDED)
        declared = len(_SUITE_CHECKS.get(run.suite, ()))
        run.status = "failed"
        run.error_message = f"interrupted after {len(statuses)} of {declared} checks"
        run.finished_at = _utcnow_str()
        # no duration: the crash time is unknown
    if stale:
        db.commit()
        logger.info("Cleaned up %d stale running verification run(s)", len(stale))


def recent_runs(db: Session, limit: int = 20) -> list[dict]:
    runs = db.query(VerificationRun).order_by(VerificationRun.id.desc()).limit(limit).all()
    return [
        {
            "id": r.id,
            "suite": r.suite,
            "started_at": r.started_at,
            "finished_at": r.finished_at,
            "status": r.status,
            "passed": r.passed,
            "failed": r.failed,
            "undecided": r.undecided,
            "duration_seconds": r.duration_seconds,
            "error_message": r.error_message,
        }
        for r in runs
    ]


def run_check(check_id: str, fn) -> CheckOutcome:
    """Run one check; raises SuiteAborted when a fail-fast stop was requested before it started."""
    verify_progress.check_aborted()
    try:
        ok, witness = fn()
        outcome = CheckOutcome(check_id, PASS if ok else FAIL, "" if ok else witness)
    except _UNDECIDED_ERRORS as e:
        outcome = CheckOutcome(check_id, UNDECIDED, str(e))
    except Exception as e:
        logger.exception("Check %s raised", check_id)
        outcome = CheckOutcome(check_id, FAIL, f"{type(e).__name__}: {e}")
    done, total = verify_progress.check_finished()
    logger.info("[%d/%d] %s: %s", done, total, check_id, outcome.status)
    return outcome


def _execute(name: str, fail_fast: bool, on_outcome=None) -> SuiteResult:
    checks = _SUITE_CHECKS[name]
    result = SuiteResult(name)
    with ThreadPoolExecutor(max_workers=settings.max_workers) as pool:
        futures = [pool.submit(run_check, check_id, fn) for check_id, fn in checks]
        for future in futures:
            if future.cancelled():
                continue
            try:
                outcome = future.result()
            except SuiteAborted:
                result.aborted = True
                continue
            result.checks.append(outcome)
            if on_outcome is not None:
                on_outcome(outcome)
            if fail_fast and outcome.status != PASS and not result.aborted:
                verify_progress.request_abort()
                result.aborted = True
                for f in futures:
                    f.cancel()
    return result


def _tally(run: VerificationRun, result: SuiteResult):
    run.passed = result.count(PASS)
    run.failed = result.count(FAIL)
    run.undecided = result.count(UNDECIDED)
    run.status = "aborted" if result.aborted else result.worst


def _record_check(db: Session, run: VerificationRun, outcome: CheckOutcome):
    # committed per check so an interrupted run keeps what it finished
    db.add(CheckRecord(run_id=run.id, check_id=outcome.check_id, status=outcome.status, witness=outcome.witness))
    db.commit()


def run_suite(name: str, fail_fast: bool = False, record: bool | None = None) -> SuiteResult:
    """Run every check of one suite on the worker pool; results keep the declared check order."""
    if name not in _SUITE_CHECKS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    record = settings.record_runs if record is None else record
    start_time = time.time()
    verify_progress.start(name, len(_SUITE_CHECKS[name]))
    logger.info("Suite %s started: %d checks", name, len(_SUITE_CHECKS[name]))

    db = None
    run = None
    if record:
        init_db()
        db = SessionLocal()
        cleanup_stale_runs(db)
        run = VerificationRun(suite=name, status="running")
        db.add(run)
        db.commit()

    result = SuiteResult(name)
    try:
        on_outcome = None if run is None else (lambda outcome: _record_check(db, run, outcome))
        result = _execute(name, fail_fast, on_outcome)
        logger.info(
            "Suite %s: %d passed, %d failed, %d undecided",
            name, result.count(PASS), result.count(FAIL), result.count(UNDECIDED),
        )
        if run is not None:
            _tally(run, result)
            run.finished_at = _utcnow_str()
            run.duration_seconds = round(time.time() - start_time, 1)
            db.commit()

    except SuiteAborted:
        logger.info("Suite %s stopped after a failure", name)
        result.aborted = True
        if run is not None:
            run.status = "aborted"
            run.finished_at = _utcnow_str()
            run.duration_seconds = round(time.time() - start_time, 1)
            db.commit()

    except Exception:
        logger.exception("Suite %s failed", name)
        result.checks.append(CheckOutcome(f"{name}.runner", FAIL, "suite runner error - check logs"))
        if run is not None:
            run.status = "failed"
            run.error_message = "runner error - check logs"
            run.finished_at = _utcnow_str()
            run.duration_seconds = round(time.time() - start_time, 1)
            db.commit()
    finally:
        verify_progress.reset()
        if db is not None:
            db.close()
    return result


def run_suites(names, fail_fast: bool = False, record: bool | None = None) -> list[SuiteResult]:
    """Run suites in order; "all" expands to every suite. Fail-fast stops at the first failing suite."""
    if isinstance(names, str):
        names = [names]
    expanded: list[str] = []
    for n in names:
        expanded.extend(SUITES if n == "all" else [n])
    results = []
    for n in expanded:
        result = run_suite(n, fail_fast=fail_fast, record=record)
        results.append(result)
        if fail_fast and result.exit_code:
            break
    return results
