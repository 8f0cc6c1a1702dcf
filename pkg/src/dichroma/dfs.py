"""Depth-first search trees, visit labels, levels, and arc classes.

A DFS from a root that reaches everything yields an out-branching. Each
vertex gets a visit label f (1..n, in discovery order) and a level (its
distance from the root along tree arcs). The non-tree arcs then split into
forward arcs (into a proper descendant), backward arcs (into an ancestor),
and cross arcs. Backward arcs are the load-bearing class: every cycle uses
at least one, and a backward arc always points to a strictly lower level.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .digraph import Digraph
from .errors import CapExceeded, NotAncestor, Unreachable

DEFAULT_LONGEST_PATH_CAP = 15


class ArcClass(Enum):
    TREE = "tree"
    FORWARD = "forward"
    BACKWARD = "backward"
    CROSS = "cross"


@dataclass(frozen=True)
class DfsTree:
    root: int
    parent: dict[int, int]
    label: dict[int, int]
    level: dict[int, int]
    t: int
    levels: tuple[tuple[int, ...], ...]

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when a lies on the tree path from the root to b (a == b counts)."""
        steps = self.level[b] - self.level[a]
        if steps < 0:
            return False
        x = b
        for _ in range(steps):
            x = self.parent[x]
        return x == a

    def children(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in self.level}
        for v, p in self.parent.items():
            out[p].append(v)
        for row in out.values():
            row.sort()
        return out

    def subtree(self, v: int) -> set[int]:
        children = self.children()
        result = set()
        todo = [v]
        while todo:
            x = todo.pop()
            result.add(x)
            todo.extend(children[x])
        return result


def build_dfs_tree(d: Digraph, root: int) -> DfsTree:
    """DFS from root with out-neighbors scanned ascending.

    Labels are assigned at first visit starting from 1. Raises Unreachable
    if some vertex cannot be reached from root.
    """
    if not (0 <= root < d.n):
        raise ValueError(f"root {root} out of range")
    parent: dict[int, int] = {}
    label: dict[int, int] = {root: 1}
    counter = 1
    stack: list[list[int]] = [[root, 0]]
    while stack:
        v, ptr = stack[-1]
        nbrs = d.adjacency[v]
        descended = False
        i = ptr
        while i < len(nbrs):
            w = nbrs[i]
            i += 1
            if w not in label:
                counter += 1
                label[w] = counter
                parent[w] = v
                stack[-1][1] = i
                stack.append([w, 0])
                descended = True
                break
        if not descended:
            stack.pop()
    if len(label) != d.n:
        missing = min(v for v in range(d.n) if v not in label)
        raise Unreachable(missing)

    level: dict[int, int] = {root: 0}
    for v in sorted(label, key=label.get):
        if v != root:
            level[v] = level[parent[v]] + 1
    t = max(level.values())
    buckets: list[list[int]] = [[] for _ in range(t + 1)]
    for v, lv in level.items():
        buckets[lv].append(v)
    levels = tuple(tuple(sorted(b)) for b in buckets)
    return DfsTree(root=root, parent=parent, label=label, level=level, t=t, levels=levels)


def classify_arcs(d: Digraph, tree: DfsTree) -> dict[tuple[int, int], ArcClass]:
    """Assign each arc exactly one class.

    Tree beats forward for the parent arc; forward means a proper ancestor;
    backward means the tail descends from the head; cross is the rest.
    """
    result: dict[tuple[int, int], ArcClass] = {}
    for u, v in d.arcs:
        if tree.parent.get(v) == u:
            result[(u, v)] = ArcClass.TREE
        elif tree.is_ancestor(u, v):
            result[(u, v)] = ArcClass.FORWARD
        elif tree.is_ancestor(v, u):
            result[(u, v)] = ArcClass.BACKWARD
        else:
            result[(u, v)] = ArcClass.CROSS
    return result


def backward_arcs(d: Digraph, tree: DfsTree) -> list[tuple[int, int]]:
    classes = classify_arcs(d, tree)
    return [a for a in d.arcs if classes[a] is ArcClass.BACKWARD]


def tree_path(tree: DfsTree, ancestor: int, descendant: int) -> tuple[int, ...]:
    """Vertices of the tree path from ancestor down to descendant, inclusive."""
    if not tree.is_ancestor(ancestor, descendant):
        raise NotAncestor(f"{ancestor} is not a tree ancestor of {descendant}")
    path = [descendant]
    x = descendant
    while x != ancestor:
        x = tree.parent[x]
        path.append(x)
    path.reverse()
    return tuple(path)


@dataclass(frozen=True)
class RootInfo:
    root: int
    length: int
    mode: str


def longest_path_from(d: Digraph, u: int) -> int:
    """Number of arcs on a longest simple directed path starting at u. Exhaustive."""
    best = 0
    on_path = {u}

    def extend(x: int, depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        for w in d.adjacency[x]:
            if w not in on_path:
                on_path.add(w)
                extend(w, depth + 1)
                on_path.discard(w)

    extend(u, 0)
    return best


def select_root(
    d: Digraph,
    mode: str = "heuristic",
    longest_path_cap: int = DEFAULT_LONGEST_PATH_CAP,
) -> RootInfo:
    """Pick a DFS root for a strong digraph.

    exact mode minimizes the longest-simple-path length from the root, which
    is NP-hard, hence the vertex cap. heuristic mode minimizes the achieved
    DFS tree length t over all roots. Ties break to the smallest vertex.
    """
    if d.n == 0:
        raise ValueError("cannot select a root in an empty digraph")
    if mode == "exact":
        if d.n > longest_path_cap:
            raise CapExceeded(
                f"exact root selection is capped at {longest_path_cap} vertices, got {d.n}"
            )
        best_v, best_len = 0, None
        for v in range(d.n):
            lp = longest_path_from(d, v)
            if best_len is None or lp < best_len:
                best_v, best_len = v, lp
        return RootInfo(root=best_v, length=best_len, mode="exact")
    if mode == "heuristic":
        best_v, best_len = 0, None
        for v in range(d.n):
            t = build_dfs_tree(d, v).t
            if best_len is None or t < best_len:
                best_v, best_len = v, t
        return RootInfo(root=best_v, length=best_len, mode="heuristic")
    raise ValueError(f"unknown root selection mode: {mode}")


def dfs_tree_to_dot(d: Digraph, tree: DfsTree) -> str:
    """DOT rendering of the digraph with arc classes styled.

    Tree arcs solid, backward dashed, forward dotted, cross gray.
    """
    classes = classify_arcs(d, tree)
    style = {
        ArcClass.TREE: "[style=solid]",
        ArcClass.BACKWARD: "[style=dashed]",
        ArcClass.FORWARD: "[style=dotted]",
        ArcClass.CROSS: "[color=gray]",
    }
    lines = ["digraph dfs {"]
    for v in range(d.n):
        lines.append(
            f'  v{v} [label="{d.labels[v]} f={tree.label[v]} level={tree.level[v]}"];'
        )
    for u, v in d.arcs:
        lines.append(f"  v{u} -> v{v} {style[classes[(u, v)]]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
