"""Elementary cycle enumeration and cycle metrics.

Cycles are directed and simple, written as vertex tuples starting at the
cycle's smallest vertex. Enumeration order is deterministic: ascending by
that smallest vertex, then depth-first with ascending out-neighbors.

Enumeration is capped. Anything that certifies a statement about all cycles
(a residue profile, a hypothesis check) refuses to answer from a truncated
enumeration instead of guessing.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterator

from .digraph import Digraph, strongly_connected_components
from .errors import CapExceeded, NoCycle, TruncatedEnumeration

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_CIRCUMFERENCE_VERTEX_CAP = 20


@dataclass(frozen=True)
class CycleEnumeration:
    cycles: tuple[tuple[int, ...], ...]
    truncated: bool


@dataclass(frozen=True)
class CycleProfile:
    """Summary of the elementary cycles of a digraph with at least one cycle.

    lengths holds the distinct cycle lengths seen, which is all of them when
    truncated is False.
    """

    girth: int
    circumference: int
    cycle_count: int
    lengths: frozenset[int]
    truncated: bool

    def residues(self, k: int) -> frozenset[int]:
        if k < 2:
            raise ValueError("modulus must be at least 2")
        return frozenset(l % k for l in self.lengths)


def _subgraph_sccs(d: Digraph, lowest: int) -> list[tuple[int, ...]]:
    """Strong components of the subgraph induced by vertices >= lowest."""
    alive = [v >= lowest for v in range(d.n)]
    n = d.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[tuple[int, ...]] = []
    counter = 0
    for root in range(lowest, n):
        if not alive[root] or index[root] != -1:
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
                if not alive[w]:
                    continue
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
                comps.append(tuple(sorted(comp)))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def _circuits_through(adj: dict[int, list[int]], start: int) -> Iterator[tuple[int, ...]]:
    """All elementary cycles through start, staying inside adj's vertex set.

    The usual blocked-set search: a vertex stays blocked after a fruitless
    visit until some cycle through a later part of the stack frees it.
    """
    path = [start]
    blocked = {start}
    closed = [False]
    B: dict[int, set[int]] = defaultdict(set)
    stack: list[Iterator[int]] = [iter(adj[start])]
    while stack:
        advanced = False
        for w in stack[-1]:
            if w == start:
                yield tuple(path)
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                closed.append(False)
                blocked.add(w)
                stack.append(iter(adj[w]))
                advanced = True
                break
        if advanced:
            continue
        stack.pop()
        v = path.pop()
        if closed.pop():
            if closed:
                closed[-1] = True
            pending = {v}
            while pending:
                u = pending.pop()
                if u in blocked:
                    blocked.discard(u)
                    pending |= B[u]
                    B[u].clear()
        else:
            for w in adj[v]:
                B[w].add(v)


def iter_elementary_cycles(d: Digraph) -> Iterator[tuple[int, ...]]:
    """Yield every elementary cycle exactly once, canonically rooted.

    Each cycle appears rooted at its smallest vertex. Cycles come out grouped
    by that root in ascending order.
    """
    s = 0
    while s < d.n:
        comps = [c for c in _subgraph_sccs(d, s) if len(c) >= 2]
        if not comps:
            return
        comp = min(comps, key=lambda c: c[0])
        start = comp[0]
        members = set(comp)
        adj = {v: [w for w in d.adjacency[v] if w in members] for v in comp}
        yield from _circuits_through(adj, start)
        s = start + 1


def enumerate_cycles(d: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> CycleEnumeration:
    """Collect elementary cycles up to cap, flagging truncation honestly.

    truncated is True only if a further cycle actually exists beyond the cap.
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    cycles: list[tuple[int, ...]] = []
    truncated = False
    for cyc in iter_elementary_cycles(d):
        if len(cycles) == cap:
            truncated = True
            break
        cycles.append(cyc)
    return CycleEnumeration(cycles=tuple(cycles), truncated=truncated)


def cycle_profile(d: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> CycleProfile:
    """Profile the cycle lengths of d. Raises NoCycle on acyclic input."""
    enum = enumerate_cycles(d, cap)
    if not enum.cycles:
        raise NoCycle("digraph has no cycle")
    lengths = frozenset(len(c) for c in enum.cycles)
    return CycleProfile(
        girth=min(lengths),
        circumference=max(lengths),
        cycle_count=len(enum.cycles),
        lengths=lengths,
        truncated=enum.truncated,
    )


def residue_profile(d: Digraph, k: int, cap: int = DEFAULT_CYCLE_CAP) -> frozenset[int]:
    """The set {length(C) mod k} over all elementary cycles C.

    Refuses (TruncatedEnumeration) if the enumeration cap was hit, because a
    partial profile could silently miss a residue.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    enum = enumerate_cycles(d, cap)
    if enum.truncated:
        raise TruncatedEnumeration(
            f"cycle enumeration hit the cap ({cap}); residue profile not certified"
        )
    return frozenset(len(c) % k for c in enum.cycles)


def find_cycle_with_residue(d: Digraph, k: int, residues) -> tuple[int, ...] | None:
    """First enumerated cycle whose length falls in the given residue classes mod k."""
    wanted = {r % k for r in residues}
    for cyc in iter_elementary_cycles(d):
        if len(cyc) % k in wanted:
            return cyc
    return None


def girth(d: Digraph) -> int:
    """Length of a shortest directed cycle, exactly, via per-source BFS.

    The shortest cycle through an arc (u, v) is 1 + dist(v, u), so scanning
    sources and their in-arcs covers every cycle. Raises NoCycle if none.
    """
    best: int | None = None
    in_adj = d.in_adjacency()
    for src in range(d.n):
        dist = [-1] * d.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] + 1 >= best:
                continue
            for y in d.adjacency[x]:
                if dist[y] == -1:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for u in in_adj[src]:
            if dist[u] != -1:
                cand = dist[u] + 1
                if best is None or cand < best:
                    best = cand
    if best is None:
        raise NoCycle("digraph has no cycle")
    return best


def _reachable_within(d: Digraph, source: int, allowed: set[int]) -> set[int]:
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in d.adjacency[x]:
            if y in allowed and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def circumference(
    d: Digraph, vertex_cap: int = DEFAULT_CIRCUMFERENCE_VERTEX_CAP
) -> int:
    """Length of a longest elementary cycle, exactly.

    Exhaustive search over simple paths, pruned by how many vertices remain
    reachable, so dense instances close quickly once a long cycle is in hand.
    Capped by vertex count because the problem is NP-hard.
    """
    if d.n > vertex_cap:
        raise CapExceeded(f"circumference is capped at {vertex_cap} vertices, got {d.n}")
    best = 0
    scc = strongly_connected_components(d)
    for comp in scc.components:
        if len(comp) < 2:
            continue
        if len(comp) <= best:
            continue
        best = max(best, _longest_cycle_in_component(d, comp, best))
    if best == 0:
        raise NoCycle("digraph has no cycle")
    return best


def _longest_cycle_in_component(d: Digraph, comp: tuple[int, ...], floor: int) -> int:
    best = floor
    comp_size = len(comp)
    for s in comp:
        if best >= comp_size:
            break
        allowed = {v for v in comp if v >= s}
        on_path = {s}
        path = [s]

        def extend(x: int) -> None:
            nonlocal best
            free = (allowed - on_path) | {x}
            reach = _reachable_within(d, x, free)
            if len(path) + len(reach) - 1 <= best:
                return
            if s not in reach and not d.has_arc(x, s):
                closable = any(d.has_arc(y, s) for y in reach)
                if not closable:
                    return
            for w in d.adjacency[x]:
                if w == s:
                    if len(path) > best:
                        best = len(path)
                elif w in allowed and w not in on_path:
                    on_path.add(w)
                    path.append(w)
                    extend(w)
                    path.pop()
                    on_path.discard(w)

        extend(s)
    return best
