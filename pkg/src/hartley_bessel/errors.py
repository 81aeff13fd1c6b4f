"""Exception types shared across the toolkit."""


class HartleyBesselError(Exception):
    """Base class for all toolkit errors."""


class NonConvergence(HartleyBesselError):
    """A series evaluation could not reach the requested tolerance."""


class InvalidConfig(HartleyBesselError):
    """A grid, parameter set, or run configuration is malformed."""


class InvalidExponent(HartleyBesselError):
    """A Lebesgue exponent is out of range or an exponent triple is inadmissible."""


class GridMismatch(HartleyBesselError):
    """A sampled function does not live on the grid an operation expects."""


class ReportNotSolvable(HartleyBesselError):
    """An a-priori bound check was requested on a non-solvable report."""
