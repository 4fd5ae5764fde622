"""Verification suites: named checks with pass, fail or undecided outcomes."""

from paramodring.suites.result import FAIL, PASS, UNDECIDED, CheckOutcome, SuiteResult

__all__ = ["FAIL", "PASS", "UNDECIDED", "CheckOutcome", "SuiteResult"]
