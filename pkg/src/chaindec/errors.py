"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ChainDecError(Exception):
    """Base class for all errors raised by chaindec."""


# graph model ---------------------------------------------------------------

class GraphError(ChainDecError):
    pass


class SameSideEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge {u}-{v} joins two vertices of the same side")
        self.edge = (u, v)


class SelfLoop(GraphError):
    def __init__(self, v: int):
        super().__init__(f"loop at vertex {v}")
        self.vertex = v


class UnknownVertex(GraphError):
    def __init__(self, v):
        super().__init__(f"unknown vertex {v!r}")
        self.vertex = v


class OverlappingSets(GraphError):
    pass


# neighbourhood graphs ------------------------------------------------------

class CompleteInput(ChainDecError):
    """The graph is complete, so it has no clique cutset."""


class DisconnectedInput(ChainDecError):
    pass


class NotQuasiThreshold(ChainDecError):
    """Carries the induced P4 or C4 that rules out quasi-threshold structure."""

    def __init__(self, witness):
        super().__init__(f"not quasi-threshold: induced {witness.kind} on {list(witness.vertices)}")
        self.witness = witness


# chain decompositions ------------------------------------------------------

class BadInstance(ChainDecError):
    def __init__(self, clause: str, detail: str = ""):
        msg = f"instance violates assumption {clause}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.clause = clause


class InducedP7Found(ChainDecError):
    def __init__(self, witness, reason: str = ""):
        witness = tuple(witness)
        msg = f"induced P7 found: {list(witness)}"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.witness = witness


class InvalidDecomposition(ChainDecError):
    def __init__(self, violations):
        first = violations[0] if violations else None
        super().__init__(f"invalid chain decomposition: {first}")
        self.violations = list(violations)


class MalformedComponents(ChainDecError):
    pass


# decomposition trees -------------------------------------------------------

class NotDecomposable(ChainDecError):
    pass


class MalformedTree(ChainDecError):
    pass


# codec ---------------------------------------------------------------------

class CodecError(ChainDecError):
    pass


class LabelOverflow(CodecError):
    pass


class BadMagic(CodecError):
    pass


class TruncatedStream(CodecError):
    pass


class InvalidTag(CodecError):
    def __init__(self, tag: int):
        super().__init__(f"invalid node tag {tag}")
        self.tag = tag


class ParseError(CodecError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


# oracle --------------------------------------------------------------------

class CapExceeded(ChainDecError):
    pass


class RejectionBudgetExceeded(ChainDecError):
    pass
