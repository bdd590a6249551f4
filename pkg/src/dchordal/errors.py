"""Exception types raised across the package."""


class GraphError(Exception):
    """Base class for every error raised by dchordal."""


class LoopEdge(GraphError):
    def __init__(self, vertex, line=None):
        self.vertex = vertex
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"loop edge at vertex {vertex}{where}")


class TooLarge(GraphError):
    def __init__(self, n, limit, what="operation"):
        self.n = n
        self.limit = limit
        super().__init__(f"{what} is limited to n <= {limit}, got n = {n}")


class Disconnected(GraphError):
    def __init__(self, what="operation"):
        super().__init__(f"{what} requires a connected graph")


class NoCompatibleTree(GraphError):
    pass


class NotApplicable(GraphError):
    """Input lies outside the 3-colouring algorithm's contract."""

    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(
            "some block of the graph is not locally connected"
            + (f" (vertex {witness})" if witness is not None else "")
        )


class PreconditionViolated(GraphError):
    pass


class VerificationFailed(GraphError):
    pass


class DimacsError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BadHeader(DimacsError):
    pass


class BadEdgeLine(DimacsError):
    pass


class VertexOutOfRange(DimacsError):
    pass
