"""Colorings: exact and greedy proper coloring of auxiliary graphs,
lifting block colorings to vertex colorings, acyclicity verification,
and the exponential-time exact dichromatic number used as an oracle.

Everything here is deterministic. Exact searches assign colors in
ascending order, never opening color c+1 before c is in use, so the first
solution found is the lexicographically smallest one in scan order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .auxgraphs import AuxGraph
from .digraph import Digraph
from .errors import CapExceeded, ImproperInput

DEFAULT_CHROMATIC_CAP = 24
DEFAULT_ORACLE_CAP = 14


@dataclass(frozen=True)
class Coloring:
    """colors[i] is the color of vertex (or node) i; palette is 0..num_colors-1.

    Color classes may be empty; num_colors counts the palette, not the
    distinct colors in use.
    """

    colors: tuple[int, ...]
    num_colors: int
    method: str


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    witness: tuple[int, ...] | None


def greedy_coloring(aux: AuxGraph) -> Coloring:
    """Largest-degree-first greedy proper coloring; uses at most maxdeg+1 colors."""
    adj = aux.adjacency_lists()
    order = sorted(range(aux.node_count), key=lambda v: (-len(adj[v]), v))
    colors = [-1] * aux.node_count
    for v in order:
        taken = {colors[w] for w in adj[v] if colors[w] != -1}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    used = max(colors) + 1 if colors else 0
    return Coloring(colors=tuple(colors), num_colors=used, method="greedy")


def _try_proper(adj, n: int, k: int) -> tuple[int, ...] | None:
    """Smallest proper k-coloring in scan order, or None.

    Vertices are scanned in id order; a vertex may only open one color past
    the largest color already used, which prunes palette permutations.
    """
    colors = [-1] * n

    def place(i: int, max_used: int) -> bool:
        if i == n:
            return True
        limit = min(k - 1, max_used + 1)
        taken = {colors[w] for w in adj[i] if colors[w] != -1}
        for c in range(limit + 1):
            if c in taken:
                continue
            colors[i] = c
            if place(i + 1, max(max_used, c)):
                return True
            colors[i] = -1
        return False

    if place(0, -1):
        return tuple(colors)
    return None


def _greedy_clique(adj, n: int) -> list[int]:
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    clique: list[int] = []
    for v in order:
        if all(v in adj[u] for u in clique):
            clique.append(v)
    return clique


def exact_chromatic_number(aux: AuxGraph, cap: int = DEFAULT_CHROMATIC_CAP) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal coloring.

    Iterative deepening on k, starting from a greedy clique lower bound and
    stopped by a greedy upper bound. Zero colors for an empty node set.
    """
    n = aux.node_count
    if n > cap:
        raise CapExceeded(f"exact coloring is capped at {cap} nodes, got {n}")
    if n == 0:
        return 0, Coloring(colors=(), num_colors=0, method="exact-chromatic")
    adj = aux.adjacency_lists()
    adj_sets = [set(r) for r in adj]
    lower = max(1, len(_greedy_clique(adj_sets, n)))
    upper = greedy_coloring(aux).num_colors
    for k in range(lower, upper + 1):
        found = _try_proper(adj_sets, n, k)
        if found is not None:
            used = max(found) + 1
            return used, Coloring(colors=found, num_colors=used, method="exact-chromatic")
    raise AssertionError("greedy upper bound was not attainable")  # pragma: no cover


def verify_proper(aux: AuxGraph, coloring: Coloring) -> VerificationReport:
    """Check properness on the auxiliary graph; witness is an offending edge."""
    if len(coloring.colors) != aux.node_count:
        raise ImproperInput("coloring does not cover every node exactly once")
    for c in coloring.colors:
        if not (0 <= c < max(coloring.num_colors, 1)):
            raise ImproperInput(f"color {c} outside palette of size {coloring.num_colors}")
    for i, j in aux.edges:
        if coloring.colors[i] == coloring.colors[j]:
            return VerificationReport(valid=False, witness=(i, j))
    return VerificationReport(valid=True, witness=None)


def lift_block_coloring(aux: AuxGraph, block_coloring: Coloring) -> Coloring:
    """Color each digraph vertex by its block's color.

    The block coloring must be proper on the auxiliary graph and the block
    map must cover vertices 0..n-1 for some n.
    """
    report = verify_proper(aux, block_coloring)
    if not report.valid:
        raise ImproperInput(f"block coloring is not proper on edge {report.witness}")
    vertices = sorted(aux.block_map)
    if vertices != list(range(len(vertices))):
        raise ImproperInput("block map does not cover a dense vertex range")
    colors = tuple(block_coloring.colors[aux.block_map[v]] for v in vertices)
    return Coloring(colors=colors, num_colors=block_coloring.num_colors,
                    method=block_coloring.method)


def is_acyclic_within(d: Digraph, vertices: set[int]) -> bool:
    """Kahn's algorithm on the induced subdigraph."""
    indeg = {v: 0 for v in vertices}
    for u, v in d.arcs:
        if u in indeg and v in indeg:
            indeg[v] += 1
    queue = deque(v for v, deg in indeg.items() if deg == 0)
    seen = 0
    while queue:
        x = queue.popleft()
        seen += 1
        for y in d.adjacency[x]:
            if y in indeg:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
    return seen == len(vertices)


def _find_cycle_within(d: Digraph, vertices: set[int]) -> tuple[int, ...]:
    """Some elementary cycle inside the induced subdigraph, which must have one."""
    indeg = {v: 0 for v in vertices}
    for u, v in d.arcs:
        if u in indeg and v in indeg:
            indeg[v] += 1
    queue = deque(v for v, deg in indeg.items() if deg == 0)
    alive = set(vertices)
    while queue:
        x = queue.popleft()
        alive.discard(x)
        for y in d.adjacency[x]:
            if y in alive:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
    start = min(alive)
    seen_at = {start: 0}
    walk = [start]
    x = start
    while True:
        x = min(y for y in d.adjacency[x] if y in alive)
        if x in seen_at:
            cycle = walk[seen_at[x]:]
            m = cycle.index(min(cycle))
            return tuple(cycle[m:] + cycle[:m])
        seen_at[x] = len(walk)
        walk.append(x)


def verify_acyclic(d: Digraph, coloring: Coloring) -> VerificationReport:
    """Check that every color class induces an acyclic subdigraph.

    On failure the witness is a monochromatic elementary cycle.
    """
    if len(coloring.colors) != d.n:
        raise ImproperInput("coloring does not cover every vertex exactly once")
    for c in coloring.colors:
        if not (0 <= c < max(coloring.num_colors, 1)):
            raise ImproperInput(f"color {c} outside palette of size {coloring.num_colors}")
    classes: dict[int, set[int]] = {}
    for v, c in enumerate(coloring.colors):
        classes.setdefault(c, set()).add(v)
    for c in sorted(classes):
        members = classes[c]
        if not is_acyclic_within(d, members):
            return VerificationReport(valid=False, witness=_find_cycle_within(d, members))
    return VerificationReport(valid=True, witness=None)


def _dfs_preorder(d: Digraph) -> list[int]:
    """Depth-first discovery order over the whole digraph, ascending restarts."""
    seen = [False] * d.n
    order: list[int] = []
    for root in range(d.n):
        if seen[root]:
            continue
        seen[root] = True
        stack: list[list[int]] = [[root, 0]]
        order.append(root)
        while stack:
            v, ptr = stack[-1]
            nbrs = d.adjacency[v]
            moved = False
            i = ptr
            while i < len(nbrs):
                w = nbrs[i]
                i += 1
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
                    stack[-1][1] = i
                    stack.append([w, 0])
                    moved = True
                    break
            if not moved:
                stack.pop()
    return order


def exact_dichromatic_number(d: Digraph, cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, Coloring]:
    """Smallest k admitting a coloring with every class acyclic, by brute force.

    Deepens k from 2 (1 when the digraph is already acyclic), assigning
    vertices in DFS discovery order, pruning as soon as a class contains a
    cycle, never opening a new color before the previous ones. Deterministic.
    """
    if d.n > cap:
        raise CapExceeded(f"dichromatic oracle is capped at {cap} vertices, got {d.n}")
    if d.n == 0:
        return 0, Coloring(colors=(), num_colors=0, method="oracle")
    if is_acyclic_within(d, set(range(d.n))):
        return 1, Coloring(colors=(0,) * d.n, num_colors=1, method="oracle")

    order = _dfs_preorder(d)
    colors = [-1] * d.n

    def place(idx: int, k: int, max_used: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        limit = min(k - 1, max_used + 1)
        for c in range(limit + 1):
            colors[v] = c
            members = {u for u in range(d.n) if colors[u] == c}
            if is_acyclic_within(d, members) and place(idx + 1, k, max(max_used, c)):
                return True
            colors[v] = -1
        return False

    for k in range(2, d.n + 1):
        if place(0, k, -1):
            return k, Coloring(colors=tuple(colors), num_colors=k, method="oracle")
    raise AssertionError("n colors always suffice")  # pragma: no cover
