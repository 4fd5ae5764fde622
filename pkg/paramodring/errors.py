"""Exception hierarchy shared by every paramodring package."""


class ParamodError(Exception):
    """Base class for all library errors."""


class TruncationError(ParamodError):
    """A coefficient was requested at or beyond the trusted window."""


class GrainError(ParamodError):
    """Exponent grain is incompatible with the requested operation."""


class DiscriminantMismatch(ParamodError):
    """Arithmetic mixed elements of different real quadratic fields."""


class SeriesDivisionError(ParamodError):
    """Series quotient is undefined or not a power series."""


class JacobiDataError(ParamodError):
    """Malformed or inconsistent Jacobi coefficient table."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(f"{where}{message}")


class InsufficientJacobiData(ParamodError):
    """The requested box needs Jacobi coefficients the table does not hold."""

    def __init__(self, missing: list[tuple[int, int]]):
        self.missing = sorted(set(missing))
        shown = ", ".join(f"({n},{r})" for n, r in self.missing[:8])
        more = f" and {len(self.missing) - 8} more" if len(self.missing) > 8 else ""
        super().__init__(f"missing Jacobi coefficients c(n,r): {shown}{more}")


class EisensteinValidationError(ParamodError):
    """Normalised Eisenstein lift failed its consistency checks."""


class LevelError(ParamodError):
    """Operation is not defined for this level."""


class WindowTooSmall(ParamodError):
    """Fewer coefficient slots than unknowns."""


class WindowUnstable(ParamodError):
    """Rank changed between the two protocol windows."""


class UndecidedAtTruncation(ParamodError):
    """Membership cannot be decided from the available coefficients."""


class SingularBlock(ParamodError):
    """The block CZ + D is not invertible."""


class SuiteAborted(ParamodError):
    """A fail-fast verification run stopped after its first failure."""
