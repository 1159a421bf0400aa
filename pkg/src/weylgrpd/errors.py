"""Exception hierarchy shared by all modules."""


class WeylGroupoidError(Exception):
    """Base class for errors raised by :mod:`weylgrpd`."""


class NotSymmetrizable(WeylGroupoidError):
    pass


class NonIntegralEntry(WeylGroupoidError):
    pass


class NotIsotropic(WeylGroupoidError):
    pass


class ZeroScalar(WeylGroupoidError):
    pass


class DimensionMismatch(WeylGroupoidError, ValueError):
    pass


class VertexCapExceeded(WeylGroupoidError):
    def __init__(self, max_vertices):
        super().__init__(f"component has more than {max_vertices} vertices")
        self.max_vertices = max_vertices


class StateCapExceeded(WeylGroupoidError):
    def __init__(self, cap):
        super().__init__(f"state enumeration exceeded {cap} states")
        self.cap = cap


class NonDiagonalCoroot(WeylGroupoidError):
    pass


class GradingMismatch(WeylGroupoidError, ValueError):
    pass


class DatumFormatError(WeylGroupoidError, ValueError):
    """Malformed Cartan datum file; ``field`` locates the offending entry."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field
