"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems exit 1, internal
invariant failures exit 2, hypothesis violations exit 3.
"""

from __future__ import annotations


class DichromaError(Exception):
    """Base class for all package errors."""


class ParseError(DichromaError):
    """Malformed edge list or coloring file."""


class NoCycle(DichromaError):
    """The digraph is acyclic, so a cycle metric is undefined."""


class CapExceeded(DichromaError):
    """Input larger than the cap of an exponential-time routine."""


class TruncatedEnumeration(DichromaError):
    """Cycle enumeration hit its cap, so a full-profile claim cannot be certified."""


class Unreachable(DichromaError):
    """Some vertex is not reachable from the requested root."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is not reachable from the root")


class NotAncestor(DichromaError):
    """tree_path was asked for a pair that is not ancestor/descendant."""


class NotConnectedInTree(DichromaError):
    """Vertex set does not induce a connected subtree."""


class WidthTooLarge(DichromaError):
    """Requested block width exceeds girth minus one."""


class HypothesisViolated(DichromaError):
    """A cycle-residue hypothesis fails; carries a witness cycle."""

    def __init__(self, message: str, witness: tuple[int, ...] | None = None):
        self.witness = witness
        super().__init__(message)


class ImproperInput(DichromaError):
    """A coloring handed in does not satisfy its precondition."""


class AttemptsExhausted(DichromaError):
    """Rejection sampling gave up before finding a conforming instance."""


class InternalInvariantError(DichromaError):
    """A construction contradicted a property it is guaranteed to have; a bug."""


class LoopDetected(InternalInvariantError):
    """A block graph acquired a loop that the girth hypothesis rules out."""
