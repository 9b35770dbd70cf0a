"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed; message carries the line number."""


class DegenerateGraphError(ValueError):
    """Raised when an operation needs an invertible adjacency form but the graph is degenerate."""


class CapacityError(RuntimeError):
    """Raised when an exhaustive computation would exceed the configured state-space bound."""
