"""Undirected auxiliary graphs built from a DFS tree's backward arcs.

Each graph gives an upper bound story: color the auxiliary graph properly,
pull the coloring back to the digraph through block_map, and every color
class induces an acyclic subdigraph. The constructions differ in what a
node is: a single vertex, a level, a run of consecutive levels, or a
residue class of levels.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cycles import (
    DEFAULT_CYCLE_CAP,
    CycleProfile,
    find_cycle_with_residue,
    girth,
    residue_profile,
)
from .digraph import Digraph
from .dfs import DfsTree, backward_arcs
from .errors import (
    HypothesisViolated,
    LoopDetected,
    NotConnectedInTree,
    WidthTooLarge,
)


class AuxKind(Enum):
    UNDERLYING = "underlying"
    BACKWARD_GRAPH = "backward-graph"
    BACKWARD_SPINE = "backward-spine"
    CONDENSATION = "condensation"
    RESIDUE_BLOCKS = "residue-blocks"


@dataclass(frozen=True)
class AuxGraph:
    kind: AuxKind
    node_count: int
    edges: frozenset[tuple[int, int]]
    block_map: dict[int, int]
    node_names: tuple[str, ...]

    def adjacency_lists(self) -> tuple[tuple[int, ...], ...]:
        rows: list[set[int]] = [set() for _ in range(self.node_count)]
        for i, j in self.edges:
            rows[i].add(j)
            rows[j].add(i)
        return tuple(tuple(sorted(r)) for r in rows)

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.adjacency_lists())


def _edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def underlying_graph(d: Digraph) -> AuxGraph:
    """Forget orientation: one edge per arc, duplicates merged."""
    edges = frozenset(_edge(u, v) for u, v in d.arcs)
    return AuxGraph(
        kind=AuxKind.UNDERLYING,
        node_count=d.n,
        edges=edges,
        block_map={v: v for v in range(d.n)},
        node_names=tuple(d.labels),
    )


def underlying_backward_graph(d: Digraph, tree: DfsTree, subtree) -> AuxGraph:
    """Nodes are the given subtree's vertices; edges are backward arcs between them.

    The vertex set must induce a connected subtree of the DFS tree.
    """
    vertices = sorted(set(subtree))
    members = set(vertices)
    if not members:
        raise NotConnectedInTree("empty vertex set")
    for v in members:
        if v not in tree.level:
            raise ValueError(f"vertex {v} is not in the tree")
    seen = {vertices[0]}
    frontier = [vertices[0]]
    children = tree.children()
    while frontier:
        x = frontier.pop()
        steps = []
        p = tree.parent.get(x)
        if p is not None and p in members:
            steps.append(p)
        steps.extend(c for c in children[x] if c in members)
        for y in steps:
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    if seen != members:
        raise NotConnectedInTree("vertex set does not induce a connected subtree")

    node_of = {v: i for i, v in enumerate(vertices)}
    edges = set()
    for u, v in backward_arcs(d, tree):
        if u in members and v in members:
            edges.add(_edge(node_of[u], node_of[v]))
    return AuxGraph(
        kind=AuxKind.BACKWARD_GRAPH,
        node_count=len(vertices),
        edges=frozenset(edges),
        block_map=node_of,
        node_names=tuple(d.labels[v] for v in vertices),
    )


def backward_spine(d: Digraph, tree: DfsTree) -> AuxGraph:
    """Nodes are the levels 0..t; levels joined by a backward arc get an edge.

    A backward arc always goes from a deeper level to a strictly shallower
    one, so the graph is loopless.
    """
    edges = set()
    for u, v in backward_arcs(d, tree):
        iu, iv = tree.level[u], tree.level[v]
        if iu <= iv:
            raise LoopDetected(
                f"backward arc ({u}, {v}) does not descend in level: {iu} vs {iv}"
            )
        edges.add(_edge(iv, iu))
    names = tuple(
        "V{} = {{{}}}".format(i, ", ".join(d.labels[v] for v in tree.levels[i]))
        for i in range(tree.t + 1)
    )
    return AuxGraph(
        kind=AuxKind.BACKWARD_SPINE,
        node_count=tree.t + 1,
        edges=frozenset(edges),
        block_map={v: tree.level[v] for v in range(d.n)},
        node_names=names,
    )


def block_condensation_graph(
    d: Digraph, tree: DfsTree, width: int, g: int | None = None
) -> AuxGraph:
    """Group runs of `width` consecutive levels into blocks and condense.

    Requires 1 <= width <= girth - 1 so that no backward arc, and hence no
    cycle, stays inside one block. Backward arcs between distinct blocks
    become edges.
    """
    if width < 1:
        raise ValueError("block width must be at least 1")
    if g is None:
        g = girth(d)
    if width > g - 1:
        raise WidthTooLarge(f"width {width} exceeds girth - 1 = {g - 1}")
    block_count = (tree.t + width) // width
    edges = set()
    for u, v in backward_arcs(d, tree):
        bu = tree.level[u] // width
        bv = tree.level[v] // width
        if bu == bv:
            raise LoopDetected(
                f"backward arc ({u}, {v}) inside block {bu} despite width {width} <= girth - 1"
            )
        edges.add(_edge(bv, bu))
    names = []
    for h in range(block_count):
        lo, hi = h * width, min(h * width + width - 1, tree.t)
        members = [
            d.labels[v]
            for lv in range(lo, hi + 1)
            for v in tree.levels[lv]
        ]
        names.append("U{} = V{}..V{} = {{{}}}".format(h, lo, hi, ", ".join(members)))
    return AuxGraph(
        kind=AuxKind.CONDENSATION,
        node_count=block_count,
        edges=frozenset(edges),
        block_map={v: tree.level[v] // width for v in range(d.n)},
        node_names=tuple(names),
    )


def residue_block_graph(
    d: Digraph,
    tree: DfsTree,
    k: int,
    profile: CycleProfile | None = None,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> AuxGraph:
    """Group levels by their residue mod k and condense backward arcs.

    Sound only when no elementary cycle has length 1 mod k, which is checked
    up front (HypothesisViolated carries a witness cycle). Residue classes
    beyond the tree length are kept as isolated nodes so indices stay plain.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    if profile is not None:
        residues = profile.residues(k)
    else:
        residues = residue_profile(d, k, cap=cycle_cap)
    if 1 in residues:
        witness = find_cycle_with_residue(d, k, {1})
        length = len(witness) if witness else "1 mod k"
        raise HypothesisViolated(
            f"an elementary cycle of length {length} is 1 mod {k}", witness
        )
    edges = set()
    for u, v in backward_arcs(d, tree):
        su = tree.level[u] % k
        sv = tree.level[v] % k
        if su == sv:
            raise LoopDetected(
                f"backward arc ({u}, {v}) joins levels equal mod {k}, "
                "contradicting the checked residue hypothesis"
            )
        edges.add(_edge(sv, su))
    names = []
    for s in range(k):
        members = [
            d.labels[v]
            for lv in range(s, tree.t + 1, k)
            for v in tree.levels[lv]
        ]
        names.append("U{} = levels {} mod {} = {{{}}}".format(s, s, k, ", ".join(members)))
    return AuxGraph(
        kind=AuxKind.RESIDUE_BLOCKS,
        node_count=k,
        edges=frozenset(edges),
        block_map={v: tree.level[v] % k for v in range(d.n)},
        node_names=tuple(names),
    )


def aux_to_dot(aux: AuxGraph) -> str:
    lines = [f"graph {aux.kind.value.replace('-', '_')} {{"]
    for i in range(aux.node_count):
        lines.append(f'  n{i} [label="{aux.node_names[i]}"];')
    for i, j in sorted(aux.edges):
        lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
