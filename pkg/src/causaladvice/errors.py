"""Exception types shared across the package."""


class GraphError(ValueError):
    """Malformed graph input (bad JSON, duplicate pair, unknown endpoint...)."""


class CycleError(GraphError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("directed cycle: " + " -> ".join(map(str, self.cycle + self.cycle[:1])))


class InconsistentGraphError(GraphError):
    """Orientation information admits no consistent DAG extension."""


class NotChordalError(GraphError):
    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__("graph is not chordal; chordless cycle " + "-".join(map(str, self.cycle)))


class CapExceededError(RuntimeError):
    def __init__(self, count, cap, hint=""):
        self.count = count
        self.cap = cap
        msg = f"enumeration cap {cap} exceeded after {count} items"
        if hint:
            msg += f"; {hint}"
        super().__init__(msg)


class AdviceError(GraphError):
    """Advice DAG is not in the Markov equivalence class of the hidden truth."""
