"""Thread-safe progress of the running suite: finished-check counter and fail-fast stop flag."""

import threading

from paramodring.errors import SuiteAborted


class VerifyProgress:
    """Shared by the runner's worker threads; one suite at a time."""

    def __init__(self):
        self._lock = threading.Lock()
        self._suite = ""
        self._done = 0
        self._total = 0
        self._abort_requested = False

    def start(self, suite: str, total: int):
        with self._lock:
            self._suite = suite
            self._done = 0
            self._total = total

    def check_finished(self) -> tuple[int, int]:
        """Count one finished check; returns (done, total) for the progress line."""
        with self._lock:
            self._done += 1
            return self._done, self._total

    # --- Abort ---
    def request_abort(self):
        with self._lock:
            self._abort_requested = True

    def is_abort_requested(self) -> bool:
        with self._lock:
            return self._abort_requested

    def check_aborted(self):
        """Raise SuiteAborted if a fail-fast stop was requested."""
        if self.is_abort_requested():
            raise SuiteAborted(f"suite {self._suite} stopped after a failure")

    def reset(self):
        with self._lock:
            self._suite = ""
            self._done = 0
            self._total = 0
            self._abort_requested = False


# Module-level singleton
verify_progress = VerifyProgress()
