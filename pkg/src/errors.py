"""Exceptions raised by the digital topology engine."""


class UnknownVertexError(ValueError):
    """A vertex label is not part of the graph."""

    def __init__(self, label: str):
        super().__init__(f"Unknown vertex: {label!r}")
        self.label = label


class LabelCollisionError(ValueError):
    """Labels that must be fresh are already in use."""

    def __init__(self, labels: list[str]):
        super().__init__(f"Label collision: {sorted(labels)}")
        self.labels = sorted(labels)


class NotAnEdgeError(ValueError):
    """Two vertices expected to be adjacent are not."""

    def __init__(self, u: str, v: str):
        super().__init__(f"Not an edge: ({u!r}, {v!r})")
        self.edge = (u, v)


class GraphFormatError(ValueError):
    """Malformed graph, trace, certificate or model input.

    ``position`` is ``line:column`` for syntax errors and a JSON path such
    as ``$.edges[3]`` for structural errors.
    """

    def __init__(self, message: str, position: str, source: str = "<input>"):
        super().__init__(f"{source}:{position}: {message}")
        self.position = position
        self.source = source


class UndecidedError(RuntimeError):
    """The contractibility oracle ran out of budget."""

    def __init__(self, max_recursive_calls: int, reason: str | None = None):
        super().__init__(
            reason or f"Oracle budget of {max_recursive_calls} recursive calls exhausted"
        )
        self.max_recursive_calls = max_recursive_calls


class TransformRejected(ValueError):
    """A transformation precondition does not hold."""

    def __init__(self, reason: str, undecided: bool = False):
        prefix = "Undecided: " if undecided else ""
        super().__init__(prefix + reason)
        self.reason = reason
        self.undecided = undecided


class TraceReplayError(ValueError):
    """Replaying a trace failed at a given step (-1 for the digest check)."""

    def __init__(self, step_index: int, reason: str):
        where = "initial digest" if step_index < 0 else f"step {step_index}"
        super().__init__(f"Trace rejected at {where}: {reason}")
        self.step_index = step_index
        self.reason = reason


class InternalConsistencyError(RuntimeError):
    """A construction that cannot fail on valid input failed."""
