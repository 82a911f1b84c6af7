"""Exception hierarchy shared by every module of the package."""


class DiagramError(Exception):
    """Base class for all errors raised by bridgepass."""


class CodeSyntaxError(DiagramError, ValueError):
    """A Gauss or PD string contains a malformed token."""


class InconsistentCode(DiagramError, ValueError):
    """Labels, levels or signs of a code do not describe a knot diagram."""


class NonRealizable(DiagramError, ValueError):
    """No planar rotation system exists for a Gauss code."""


class NonPlanar(DiagramError, ValueError):
    """A rotation system was supplied but its face count violates Euler's formula."""


class EmptyDiagram(DiagramError, ValueError):
    """The operation needs at least one crossing."""


class DegenerateSite(DiagramError, ValueError):
    """A surgery site does not match the diagram it is applied to."""


class RoutingObstruction(DiagramError):
    """The replacement arc of a surgery could not be embedded."""


class StepLimitExceeded(DiagramError):
    """The reduction loop hit its step budget.

    The partially reduced diagram and the trace so far are attached.
    """

    def __init__(self, message, diagram=None, trace=None):
        super().__init__(message)
        self.diagram = diagram
        self.trace = list(trace or [])


class TooLarge(DiagramError):
    """The state sum was asked for more crossings than the configured cap."""


class InvalidK(DiagramError, ValueError):
    """Torus generator called with fewer than three passes."""


class CapExceeded(DiagramError, ValueError):
    """Enumeration requested beyond its configured cap."""


class BoundViolation(DiagramError):
    """A corpus record breaks one of the bridge/crossing inequalities."""

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record
