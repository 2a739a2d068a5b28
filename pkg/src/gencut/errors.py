"""Exception types shared across the library."""


class GencutError(Exception):
    """Base class for all gencut errors."""


class BoundsError(GencutError):
    """A weight or id falls outside the supported arithmetic range."""


class NoFiniteCut(GencutError):
    """Every separator contains an uncuttable (INF) member."""


class DisconnectedComponent(GencutError):
    """A node set that must induce a connected subgraph does not."""


class InstanceTooLarge(GencutError):
    """An exact oracle was asked to enumerate beyond its configured bound."""


class Infeasible(GencutError):
    """No solution satisfies the instance's constraints."""


class NotPlanar(GencutError):
    """The graph admits no planar embedding."""


class ArithmeticBoundExceeded(GencutError):
    """Perturbation scales would overflow the supported weight range."""


class ScaleTooSmall(GencutError):
    """A gadget cost scale does not dominate the base graph's weight."""


class OddOrder(GencutError):
    """An even number of nodes is required."""


class SizeBoundExceeded(GencutError):
    """A constructed collection would exceed the configured size limit."""


class LpInfeasible(GencutError):
    """The linear program has no feasible point."""


class LpUnbounded(GencutError):
    """The linear program's objective is unbounded below."""


class IterationLimit(GencutError):
    """The simplex solver hit its iteration cap."""


class InvalidParams(GencutError):
    """Generator parameters are out of range or inconsistent."""


class ParseError(GencutError):
    """Input text could not be parsed."""


class SchemaError(GencutError):
    """A parsed document violates the instance schema."""
