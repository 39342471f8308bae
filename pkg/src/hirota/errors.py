"""Exception hierarchy.

Every error raised on purpose by the library derives from ``HirotaError``.
The two direct subclasses tell the CLI which exit code to use: input
problems exit with 2, numerical breakdowns with 3.
"""


class HirotaError(Exception):
    """Base class for all library errors."""

    exit_code = 3


class ValidationError(HirotaError, ValueError):
    """Bad user input detected before any computation."""

    exit_code = 2

    def __init__(self, message, field=None):
        self.field = field
        if field:
            message = f"{field}: {message}"
        super().__init__(message)


class NumericError(HirotaError, ArithmeticError):
    """A computation could not be carried out reliably."""

    exit_code = 3


# spectral
class ZeroArgument(ValidationError):
    pass


class CutAmbiguity(ValidationError):
    pass


# seed
class NearBranchPoint(NumericError):
    pass


class BranchPointEigenvector(NumericError):
    pass


class NonremovableSingularity(NumericError):
    pass


# darboux
class ZeroEigenvector(NumericError):
    pass


class SingularGram(NumericError):
    pass


class PoleHit(NumericError):
    pass


# closedform
class StationaryPhase(NumericError):
    pass


class TieBreak(NumericError):
    pass


# scattering
class BranchPointDegeneracy(NumericError):
    pass


class NonConvergence(NumericError):
    pass


class Overflow(NumericError):
    pass


# dynamics
class Blowup(NumericError):
    def __init__(self, message, site=None, time=None):
        self.site = site
        self.time = time
        super().__init__(message)


class GridTooSparse(ValidationError):
    pass
