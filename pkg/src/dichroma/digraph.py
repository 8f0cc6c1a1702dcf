"""Loopless simple digraphs on dense integer vertices.

Vertices are 0..n-1. Arbitrary input labels are remapped in first-appearance
order and kept on the side so output can speak the caller's language.
All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    arc_set: frozenset[tuple[int, int]] = field(repr=False)

    @staticmethod
    def from_arcs(n: int, arcs, labels=None) -> "Digraph":
        """Build a digraph, validating vertex range, looplessness and arc uniqueness."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        ordered = tuple(sorted(seen))
        out = [[] for _ in range(n)]
        for u, v in ordered:
            out[u].append(v)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError("label table must have one entry per vertex")
        return Digraph(
            n=n,
            arcs=ordered,
            adjacency=tuple(tuple(row) for row in out),
            labels=labels,
            arc_set=frozenset(seen),
        )

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arc_set

    def in_adjacency(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            rows[v].append(u)
        return tuple(tuple(sorted(r)) for r in rows)

    def index_of_label(self) -> dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}


@dataclass(frozen=True)
class SccDecomposition:
    """Strong components in reverse topological order, plus a vertex-to-component map."""

    components: tuple[tuple[int, ...], ...]
    component_id: tuple[int, ...]


def strongly_connected_components(d: Digraph) -> SccDecomposition:
    """Tarjan's algorithm, iterative.

    Roots are tried in ascending vertex order and out-neighbors are scanned
    ascending, so the output order is deterministic. A component is emitted
    only once everything it can reach has been emitted, which makes the
    component list reverse topological.
    """
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[tuple[int, ...]] = []
    counter = 0

    for root in range(n):
        if index[root] != -1:
            continue
        work: list[list[int]] = [[root, 0]]
        while work:
            v, ptr = work[-1]
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            nbrs = d.adjacency[v]
            i = ptr
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if index[w] == -1:
                    work[-1][1] = i
                    work.append([w, 0])
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])

    component_id = [0] * n
    for cid, comp in enumerate(components):
        for v in comp:
            component_id[v] = cid
    return SccDecomposition(components=tuple(components), component_id=tuple(component_id))


def is_strong(d: Digraph) -> bool:
    return d.n <= 1 or len(strongly_connected_components(d).components) == 1


def induced_subdigraph(d: Digraph, vertices) -> tuple[Digraph, tuple[int, ...]]:
    """Subdigraph on the given vertices, relabeled 0..k-1 ascending.

    Returns the subdigraph and the list mapping new ids back to old ones.
    """
    old_of_new = tuple(sorted(set(vertices)))
    new_of_old = {u: i for i, u in enumerate(old_of_new)}
    arcs = [
        (new_of_old[u], new_of_old[v])
        for u, v in d.arcs
        if u in new_of_old and v in new_of_old
    ]
    labels = tuple(d.labels[u] for u in old_of_new)
    return Digraph.from_arcs(len(old_of_new), arcs, labels), old_of_new


def parse_edge_list(text: str) -> Digraph:
    """Parse "u v" lines into a digraph.

    Everything after a '#' is a comment. Blank lines are skipped. Tokens are
    arbitrary whitespace-free labels, remapped to 0..n-1 in order of first
    appearance.
    """
    labels: list[str] = []
    ids: dict[str, int] = {}
    arcs: list[tuple[int, int]] = []
    arc_seen: set[tuple[int, int]] = set()

    def vid(token: str) -> int:
        if token not in ids:
            ids[token] = len(labels)
            labels.append(token)
        return ids[token]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two tokens, got {len(parts)}")
        u, v = vid(parts[0]), vid(parts[1])
        if u == v:
            raise ParseError(f"line {lineno}: loop at '{parts[0]}' is not allowed")
        if (u, v) in arc_seen:
            raise ParseError(f"line {lineno}: duplicate arc {parts[0]} -> {parts[1]}")
        arc_seen.add((u, v))
        arcs.append((u, v))

    return Digraph.from_arcs(len(labels), arcs, labels)


def format_edge_list(d: Digraph) -> str:
    lines = [f"{d.labels[u]} {d.labels[v]}" for u, v in d.arcs]
    return "\n".join(lines) + ("\n" if lines else "")
