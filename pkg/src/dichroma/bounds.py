"""Upper bounds on the dichromatic number, with certificate colorings.

Every bound returns a BoundCertificate. When a bound's construction yields
an explicit coloring, the coloring is checked by verify_acyclic before the
certificate may claim verified=True; a construction failing its own check
is a bug and raises InternalInvariantError rather than reporting quietly.

A digraph's dichromatic number is the maximum over its strong components,
so all bounds reduce to strong components and merge the results. Merged
certificates reuse palettes across components, which stays sound because a
cycle never crosses components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .auxgraphs import (
    backward_spine,
    block_condensation_graph,
    residue_block_graph,
    underlying_backward_graph,
)
from .coloring import (
    DEFAULT_CHROMATIC_CAP,
    DEFAULT_ORACLE_CAP,
    Coloring,
    exact_chromatic_number,
    exact_dichromatic_number,
    greedy_coloring,
    lift_block_coloring,
    verify_acyclic,
)
from .cycles import (
    DEFAULT_CIRCUMFERENCE_VERTEX_CAP,
    DEFAULT_CYCLE_CAP,
    CycleProfile,
    circumference,
    cycle_profile,
    enumerate_cycles,
    find_cycle_with_residue,
    girth,
)
from .dfs import DEFAULT_LONGEST_PATH_CAP, DfsTree, RootInfo, build_dfs_tree, select_root
from .digraph import Digraph, induced_subdigraph, strongly_connected_components
from .errors import (
    CapExceeded,
    HypothesisViolated,
    InternalInvariantError,
    NoCycle,
    TruncatedEnumeration,
    WidthTooLarge,
)

DEFAULT_MODULUS_CAP = 20

METHOD_NAMES = (
    "spine",
    "branches",
    "path-girth",
    "condensation",
    "circ-girth",
    "mod-no1",
    "multi-residue",
    "window-residue",
    "chen-numeric",
    "oracle",
)


@dataclass(frozen=True)
class Hypothesis:
    condition: str
    checked: bool


@dataclass(frozen=True)
class BoundCertificate:
    name: str
    value: int | None
    hypotheses: tuple[Hypothesis, ...]
    certificate: Coloring | None
    verified: bool
    parameters: dict


@dataclass(frozen=True)
class BoundReport:
    bounds: tuple[BoundCertificate, ...]
    best: int | None
    oracle: int | None


@dataclass(frozen=True)
class EngineOptions:
    cycle_cap: int = DEFAULT_CYCLE_CAP
    oracle_cap: int = DEFAULT_ORACLE_CAP
    chromatic_cap: int = DEFAULT_CHROMATIC_CAP
    circumference_vertex_cap: int = DEFAULT_CIRCUMFERENCE_VERTEX_CAP
    longest_path_cap: int = DEFAULT_LONGEST_PATH_CAP
    modulus_cap: int = DEFAULT_MODULUS_CAP
    root_mode: str = "heuristic"
    run_oracle: bool = True
    k: int | None = None
    p: int | None = None
    residues: tuple[int, ...] | None = None


def _certified(
    d: Digraph,
    name: str,
    value: int,
    colors,
    num_colors: int,
    hypotheses,
    parameters: dict,
) -> BoundCertificate:
    cert = Coloring(colors=tuple(colors), num_colors=num_colors, method=name)
    report = verify_acyclic(d, cert)
    if not report.valid:
        raise InternalInvariantError(
            f"{name} certificate admits monochromatic cycle {report.witness}"
        )
    if num_colors > value:
        raise InternalInvariantError(
            f"{name} certificate uses {num_colors} colors against a value of {value}"
        )
    return BoundCertificate(
        name=name,
        value=value,
        hypotheses=tuple(hypotheses),
        certificate=cert,
        verified=True,
        parameters=parameters,
    )


def _profile_or_compute(d: Digraph, profile: CycleProfile | None, cycle_cap: int) -> CycleProfile:
    if profile is None:
        profile = cycle_profile(d, cycle_cap)
    if profile.truncated:
        raise TruncatedEnumeration(
            "cycle enumeration was truncated; residue hypotheses cannot be certified"
        )
    return profile


def bound_spine(
    d: Digraph, tree: DfsTree, chromatic_cap: int = DEFAULT_CHROMATIC_CAP
) -> BoundCertificate:
    """Chromatic number of the level spine, lifted back through the levels.

    Always at most t+1 since the spine has t+1 nodes.
    """
    aux = backward_spine(d, tree)
    chi, block_col = exact_chromatic_number(aux, cap=chromatic_cap)
    lifted = lift_block_coloring(aux, block_col)
    params = {"t": tree.t, "envelope": tree.t + 1, "spine_edges": len(aux.edges)}
    return _certified(d, "spine", chi, lifted.colors, chi, (), params)


def bound_branches(
    d: Digraph, tree: DfsTree, chromatic_cap: int = DEFAULT_CHROMATIC_CAP
) -> BoundCertificate:
    """Max chromatic number of per-branch backward graphs.

    Each root branch (child subtree plus the root) is colored via its own
    backward graph; palettes are rotated so the root is color 0 everywhere,
    and the branch colorings are glued at the root.
    """
    root = tree.root
    kids = tree.children()[root]
    if not kids:
        return _certified(d, "branches", 1, (0,) * d.n, 1, (), {"branches": 0})
    colors = [0] * d.n
    value = 0
    branch_params = []
    for x in kids:
        branch = tree.subtree(x) | {root}
        aux = underlying_backward_graph(d, tree, branch)
        chi, bc = exact_chromatic_number(aux, cap=chromatic_cap)
        root_color = bc.colors[aux.block_map[root]]
        fixed = [
            0 if c == root_color else root_color if c == 0 else c for c in bc.colors
        ]
        for v in branch:
            colors[v] = fixed[aux.block_map[v]]
        value = max(value, chi)
        branch_params.append({"child": x, "size": len(branch), "chi": chi})
    colors[root] = 0
    params = {"branches": len(kids), "per_branch": branch_params}
    return _certified(d, "branches", value, colors, value, (), params)


def bound_mod_no1(
    d: Digraph,
    tree: DfsTree,
    k: int,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    profile: CycleProfile | None = None,
) -> BoundCertificate:
    """k colors when no cycle length is 1 mod k: color each vertex level mod k."""
    if k < 2:
        raise ValueError("modulus must be at least 2")
    prof = _profile_or_compute(d, profile, cycle_cap)
    if 1 in prof.residues(k):
        witness = find_cycle_with_residue(d, k, {1})
        raise HypothesisViolated(
            f"elementary cycle of length {len(witness)} is 1 mod {k}", witness
        )
    hyp = (
        Hypothesis(f"no elementary cycle has length 1 (mod {k})", True),
        Hypothesis("cycle enumeration completed within cap", True),
    )
    colors = [tree.level[v] % k for v in range(d.n)]
    return _certified(d, "mod-no1", k, colors, k, hyp, {"k": k, "t": tree.t})


def bound_path_girth(
    d: Digraph,
    rootinfo: RootInfo | None = None,
    mode: str = "heuristic",
    longest_path_cap: int = DEFAULT_LONGEST_PATH_CAP,
    g: int | None = None,
) -> BoundCertificate:
    """ceil((L+1)/(g-1)) colors, one per block of g-1 consecutive levels.

    In exact mode L is the smallest longest-path length over all roots; in
    heuristic mode L is the smallest achieved DFS tree length. Blocks get
    distinct colors, which is acyclic because a block never contains a
    whole cycle.
    """
    if rootinfo is None:
        rootinfo = select_root(d, mode, longest_path_cap=longest_path_cap)
    tree = build_dfs_tree(d, rootinfo.root)
    if g is None:
        g = girth(d)
    width = g - 1
    value = (rootinfo.length + width) // width  # ceil((L+1)/width)
    blocks = (tree.t + width) // width
    colors = [(tree.level[v] // width) % value for v in range(d.n)]
    params = {
        "mode": rootinfo.mode,
        "g": g,
        "width": width,
        "length": rootinfo.length,
        "blocks": blocks,
        "value_t_based": (tree.t + width) // width,
    }
    if rootinfo.mode == "heuristic" and d.n <= longest_path_cap:
        exact = select_root(d, "exact", longest_path_cap=longest_path_cap)
        params["l"] = exact.length
        params["value_l_based"] = (exact.length + width) // width
    elif rootinfo.mode == "exact":
        params["l"] = rootinfo.length
        params["value_l_based"] = value
    return _certified(d, "path-girth", value, colors, value, (), params)


def bound_condensation(
    d: Digraph,
    tree: DfsTree,
    chromatic_cap: int = DEFAULT_CHROMATIC_CAP,
    g: int | None = None,
) -> BoundCertificate:
    """Chromatic number of the width-(g-1) block condensation, lifted."""
    if g is None:
        g = girth(d)
    aux = block_condensation_graph(d, tree, g - 1, g=g)
    chi, block_col = exact_chromatic_number(aux, cap=chromatic_cap)
    lifted = lift_block_coloring(aux, block_col)
    params = {"g": g, "width": g - 1, "blocks": aux.node_count}
    return _certified(d, "condensation", chi, lifted.colors, chi, (), params)


def bound_chen_numeric(
    d: Digraph,
    k: int,
    r: int,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    profile: CycleProfile | None = None,
) -> BoundCertificate:
    """k colors when no cycle has length r mod k (1 <= r <= k). Numeric only.

    No constructive certificate is produced, so the bound is never marked
    verified; the engine still validates it against the oracle when one runs.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    if not (1 <= r <= k):
        raise ValueError("residue must satisfy 1 <= r <= k")
    prof = _profile_or_compute(d, profile, cycle_cap)
    if r % k in prof.residues(k):
        witness = find_cycle_with_residue(d, k, {r % k})
        raise HypothesisViolated(
            f"elementary cycle of length {len(witness)} is {r} mod {k}", witness
        )
    hyp = (
        Hypothesis(f"no elementary cycle has length {r} (mod {k})", True),
        Hypothesis("cycle enumeration completed within cap", True),
    )
    return BoundCertificate(
        name="chen-numeric",
        value=k,
        hypotheses=hyp,
        certificate=None,
        verified=False,
        parameters={"k": k, "r": r},
    )


def bound_multi_residue(
    d: Digraph,
    tree: DfsTree,
    k: int,
    residues,
    chromatic_cap: int = DEFAULT_CHROMATIC_CAP,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    profile: CycleProfile | None = None,
) -> BoundCertificate:
    """2s+1 colors when every cycle length falls in s residue classes, none 1 mod k.

    The residue block graph then has maximum degree 2s, so its chromatic
    number is at most 2s+1; its optimal proper coloring lifts to the
    certificate. A bipartite block graph gives a 2-color certificate, which
    covers the worst case of a single residue r with k/gcd(r-1, k) even.
    """
    if k < 2:
        raise ValueError("modulus must be at least 2")
    for r in residues:
        if not (0 <= r <= k):
            raise ValueError(f"residue {r} outside 0..{k}")
    rs = sorted({r % k for r in residues})
    if not rs:
        raise ValueError("at least one residue class is required")
    if 1 in rs:
        raise ValueError("residue 1 mod k cannot be allowed")
    prof = _profile_or_compute(d, profile, cycle_cap)
    extra = prof.residues(k) - set(rs)
    if extra:
        witness = find_cycle_with_residue(d, k, extra)
        raise HypothesisViolated(
            f"elementary cycle of length {len(witness)} has residue "
            f"{len(witness) % k} mod {k}, outside {rs}",
            witness,
        )
    s = len(rs)
    value = 2 * s + 1
    aux = residue_block_graph(d, tree, k, profile=prof, cycle_cap=cycle_cap)
    if aux.node_count <= chromatic_cap:
        chi, block_col = exact_chromatic_number(aux, cap=chromatic_cap)
    else:
        block_col = greedy_coloring(aux)
        chi = block_col.num_colors
    if chi > value:
        raise InternalInvariantError(
            f"residue block graph needed {chi} colors against a degree bound of {value - 1}"
        )
    lifted = lift_block_coloring(aux, block_col)
    hyp = (
        Hypothesis(
            f"every elementary cycle length is congruent to one of {rs} (mod {k})", True
        ),
        Hypothesis(f"no elementary cycle has length 1 (mod {k})", True),
        Hypothesis("cycle enumeration completed within cap", True),
    )
    params: dict = {
        "k": k,
        "s": s,
        "residues": rs,
        "block_chromatic": chi,
        "block_graph_bipartite": chi <= 2,
    }
    if s == 1:
        r = rs[0]
        div = math.gcd(r - 1, k)
        params["gcd"] = div
        params["block_cycle_length"] = k // div
        params["worst_case_two_colorable"] = (k // div) % 2 == 0
    return _certified(d, "multi-residue", value, lifted.colors, chi, hyp, params)


def bound_window_residue(
    d: Digraph,
    tree: DfsTree,
    k: int,
    p: int,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    profile: CycleProfile | None = None,
    g: int | None = None,
) -> BoundCertificate:
    """ceil(k/p) colors from a cleared residue window around zero.

    Round k up to a multiple of p, call it khat. If no cycle length is
    congruent to any of -p+2..p mod khat, then blocks of p consecutive
    levels colored h mod ceil(k/p) form an acyclic coloring. With p = 1
    this is exactly the mod-no1 bound.
    """
    if p < 1:
        raise ValueError("window width must be at least 1")
    if k < 1:
        raise ValueError("modulus must be at least 1")
    if g is None:
        g = girth(d)
    if p > g - 1:
        raise WidthTooLarge(f"window width {p} exceeds girth - 1 = {g - 1}")
    value = -(-k // p)  # ceil(k/p)
    khat = value * p
    forbidden = sorted({r % khat for r in range(-p + 2, p + 1)})
    prof = _profile_or_compute(d, profile, cycle_cap)
    bad = prof.residues(khat) & set(forbidden)
    if bad:
        witness = find_cycle_with_residue(d, khat, bad)
        raise HypothesisViolated(
            f"elementary cycle of length {len(witness)} has residue "
            f"{len(witness) % khat} mod {khat}, inside the forbidden window {forbidden}",
            witness,
        )
    hyp = (
        Hypothesis(
            f"no elementary cycle length is congruent to any of {forbidden} (mod {khat})",
            True,
        ),
        Hypothesis(f"window width {p} is at most girth - 1 = {g - 1}", True),
        Hypothesis("cycle enumeration completed within cap", True),
    )
    colors = [(tree.level[v] // p) % value for v in range(d.n)]
    params: dict = {"k": k, "p": p, "khat": khat, "forbidden": forbidden, "g": g}
    if k % p == 0:
        params["divides"] = True
        params["corollary_value"] = k // p
    else:
        params["divides"] = False
    return _certified(d, "window-residue", value, colors, value, hyp, params)


def _circ_girth_single(d: Digraph, tree: DfsTree, g: int, c: int) -> tuple[int, list[int], dict]:
    """Bound value and block coloring for one strong digraph with known g, c."""
    width = g - 1
    value = (c - 1 + width - 1) // width + 1  # ceil((c-1)/(g-1)) + 1
    colors = [(tree.level[v] // width) % value for v in range(d.n)]
    params = {"g": g, "c": c, "width": width, "value": value}
    return value, colors, params


@dataclass(frozen=True)
class _Ctx:
    comp_id: int
    sub: Digraph
    old_of_new: tuple[int, ...]
    tree: DfsTree
    rootinfo: RootInfo
    g: int
    c: int | None
    profile: CycleProfile | None


def _build_contexts(d: Digraph, opts: EngineOptions):
    scc = strongly_connected_components(d)
    ctxs: list[_Ctx] = []
    for cid, comp in enumerate(scc.components):
        if len(comp) < 2:
            continue
        sub, old = induced_subdigraph(d, comp)
        rootinfo = select_root(sub, opts.root_mode, longest_path_cap=opts.longest_path_cap)
        tree = build_dfs_tree(sub, rootinfo.root)
        enum = enumerate_cycles(sub, opts.cycle_cap)
        lengths = frozenset(len(cyc) for cyc in enum.cycles)
        g = girth(sub)
        if enum.truncated:
            profile = None
            if sub.n <= opts.circumference_vertex_cap:
                c = circumference(sub, opts.circumference_vertex_cap)
            else:
                c = None
        else:
            profile = CycleProfile(
                girth=min(lengths),
                circumference=max(lengths),
                cycle_count=len(enum.cycles),
                lengths=lengths,
                truncated=False,
            )
            c = max(lengths)
        ctxs.append(
            _Ctx(
                comp_id=cid,
                sub=sub,
                old_of_new=old,
                tree=tree,
                rootinfo=rootinfo,
                g=g,
                c=c,
                profile=profile,
            )
        )
    return scc, ctxs


def _global_profile(ctxs: list[_Ctx]) -> CycleProfile | None:
    """Union profile over components; None when empty or any part is incomplete."""
    if not ctxs:
        return None
    if any(ctx.profile is None for ctx in ctxs):
        return None
    lengths = frozenset().union(*(ctx.profile.lengths for ctx in ctxs))
    return CycleProfile(
        girth=min(lengths),
        circumference=max(lengths),
        cycle_count=sum(ctx.profile.cycle_count for ctx in ctxs),
        lengths=lengths,
        truncated=False,
    )


def _merge_components(
    d: Digraph, ctxs: list[_Ctx], name: str, parts: list[tuple[_Ctx, BoundCertificate]]
) -> BoundCertificate:
    """Glue per-component certificates into one digraph-wide certificate."""
    colors = [0] * d.n
    value = 1 if d.n > 0 else 0
    num_colors = 1 if d.n > 0 else 0
    hypotheses: list[Hypothesis] = []
    comp_summaries = []
    for ctx, cert in parts:
        assert cert.certificate is not None
        for local, vertex in enumerate(ctx.old_of_new):
            colors[vertex] = cert.certificate.colors[local]
        value = max(value, cert.value)
        num_colors = max(num_colors, cert.certificate.num_colors)
        for h in cert.hypotheses:
            if h not in hypotheses:
                hypotheses.append(h)
        comp_summaries.append(
            {"component": ctx.comp_id, "n": ctx.sub.n, "value": cert.value,
             **{key: val for key, val in cert.parameters.items()
                if isinstance(val, (int, str, bool))}}
        )
    params: dict = {"components": comp_summaries} if comp_summaries else {}
    return _certified(d, name, value, colors, num_colors, tuple(hypotheses), params)


def bound_circ_girth(
    d: Digraph,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    circumference_vertex_cap: int = DEFAULT_CIRCUMFERENCE_VERTEX_CAP,
    root_mode: str = "heuristic",
) -> BoundCertificate:
    """ceil((c-1)/(g-1)) + 1 colors per strong component, merged.

    c and g are each component's own circumference and girth. Blocks of g-1
    consecutive levels are colored round robin mod the value; a
    monochromatic cycle would force a tree path longer than c allows.
    """
    opts = EngineOptions(
        cycle_cap=cycle_cap,
        circumference_vertex_cap=circumference_vertex_cap,
        root_mode=root_mode,
    )
    _, ctxs = _build_contexts(d, opts)
    if not ctxs:
        raise NoCycle("digraph has no cycle")
    parts = []
    for ctx in ctxs:
        if ctx.c is None:
            raise CapExceeded(
                "circumference unavailable for a component "
                f"of {ctx.sub.n} vertices (enumeration truncated, over the vertex cap)"
            )
        value, colors, params = _circ_girth_single(ctx.sub, ctx.tree, ctx.g, ctx.c)
        cert = _certified(ctx.sub, "circ-girth", value, colors, value, (), params)
        parts.append((ctx, cert))
    merged = _merge_components(d, ctxs, "circ-girth", parts)
    hyp = (Hypothesis("digraph has at least one cycle", True),)
    return BoundCertificate(
        name=merged.name,
        value=merged.value,
        hypotheses=hyp,
        certificate=merged.certificate,
        verified=merged.verified,
        parameters=merged.parameters,
    )


def _detect_mod_no1(profile: CycleProfile, modulus_cap: int) -> int | None:
    for k in range(2, modulus_cap + 1):
        if 1 not in profile.residues(k):
            return k
    return None


def _detect_multi_residue(
    profile: CycleProfile, modulus_cap: int
) -> tuple[int, tuple[int, ...]] | None:
    best: tuple[int, int, tuple[int, ...]] | None = None
    for k in range(2, modulus_cap + 1):
        rs = profile.residues(k)
        if 1 in rs or not rs:
            continue
        cand = (2 * len(rs) + 1, k, tuple(sorted(rs)))
        if best is None or cand < best:
            best = cand
    if best is None:
        return None
    return best[1], best[2]


def _detect_window(
    profile: CycleProfile, g: int, modulus_cap: int
) -> tuple[int, int] | None:
    best: tuple[tuple[int, int, int, int], tuple[int, int]] | None = None
    for k in range(2, modulus_cap + 1):
        for p in range(1, g):
            value = -(-k // p)
            khat = value * p
            forbidden = {r % khat for r in range(-p + 2, p + 1)}
            if profile.residues(khat) & forbidden:
                continue
            rank = (value, 0 if k % p == 0 else 1, k, -p)
            if best is None or rank < best[0]:
                best = (rank, (k, p))
    return None if best is None else best[1]


def _detect_chen(profile: CycleProfile, modulus_cap: int) -> tuple[int, int] | None:
    for k in range(2, modulus_cap + 1):
        present = profile.residues(k)
        for r in range(1, k + 1):
            if r % k not in present:
                return k, r
    return None


def _failed(name: str, reason: str, params: dict | None = None) -> BoundCertificate:
    return BoundCertificate(
        name=name,
        value=None,
        hypotheses=(Hypothesis(reason, False),),
        certificate=None,
        verified=False,
        parameters=params or {},
    )


def _clean_failure(name: str, exc: Exception) -> BoundCertificate:
    params: dict = {"error": type(exc).__name__}
    witness = getattr(exc, "witness", None)
    if witness:
        params["witness"] = list(witness)
    return _failed(name, f"{type(exc).__name__}: {exc}", params)


def _chen_entry(
    d: Digraph,
    opts: EngineOptions,
    profile: CycleProfile | None,
    g: int | None,
    c: int | None,
    mod_cap: int | None = None,
) -> BoundCertificate:
    if mod_cap is None:
        mod_cap = opts.modulus_cap
    corollary = None
    if g is not None and c is not None and 2 * g <= c + 3:
        corollary = (c - g + 2, g - 1)
    if opts.k is not None:
        if profile is None:
            return _failed(
                "chen-numeric", "cycle enumeration incomplete; residues not certified"
            )
        present = profile.residues(opts.k)
        missing = [r for r in range(1, opts.k + 1) if r % opts.k not in present]
        if not missing:
            witness = find_cycle_with_residue(d, opts.k, present)
            return _failed(
                "chen-numeric",
                f"every residue mod {opts.k} is hit by some cycle",
                {"witness": list(witness) if witness else None},
            )
        entry = bound_chen_numeric(d, opts.k, missing[0], opts.cycle_cap, profile)
    elif profile is not None:
        detected = _detect_chen(profile, mod_cap)
        if detected is None and corollary is None:
            return _failed(
                "chen-numeric",
                f"every modulus up to {mod_cap} has all residues hit",
            )
        if detected is not None and (corollary is None or detected[0] <= corollary[0]):
            entry = bound_chen_numeric(d, detected[0], detected[1], opts.cycle_cap, profile)
        else:
            k, r = corollary
            entry = BoundCertificate(
                name="chen-numeric",
                value=k,
                hypotheses=(
                    Hypothesis(
                        f"no cycle length is {r} (mod {k}): lengths lie in "
                        f"[{g}, {c}] which misses that class",
                        True,
                    ),
                ),
                certificate=None,
                verified=False,
                parameters={"k": k, "r": r},
            )
    elif corollary is not None:
        k, r = corollary
        entry = BoundCertificate(
            name="chen-numeric",
            value=k,
            hypotheses=(
                Hypothesis(
                    f"no cycle length is {r} (mod {k}): lengths lie in "
                    f"[{g}, {c}] which misses that class",
                    True,
                ),
            ),
            certificate=None,
            verified=False,
            parameters={"k": k, "r": r},
        )
    else:
        return _failed(
            "chen-numeric", "cycle enumeration incomplete; residues not certified"
        )
    if corollary is not None:
        params = dict(entry.parameters)
        params["corollary_k"] = corollary[0]
        params["corollary_r"] = corollary[1]
        params["corollary"] = "c - g + 2 colors when g <= (c + 3) / 2"
        entry = BoundCertificate(
            name=entry.name,
            value=entry.value,
            hypotheses=entry.hypotheses,
            certificate=entry.certificate,
            verified=entry.verified,
            parameters=params,
        )
    return entry


def _trivial_certificate(d: Digraph, name: str) -> BoundCertificate:
    hyp = (Hypothesis("digraph is acyclic", True),)
    return _certified(d, name, 1, (0,) * d.n, 1, hyp, {})


def _per_component(
    d: Digraph, ctxs: list[_Ctx], name: str, fn
) -> BoundCertificate:
    """Run a per-component constructor and merge, mapping failures to entries."""
    try:
        if not ctxs:
            return _trivial_certificate(d, name)
        parts = [(ctx, fn(ctx)) for ctx in ctxs]
        return _merge_components(d, ctxs, name, parts)
    except (
        HypothesisViolated,
        CapExceeded,
        TruncatedEnumeration,
        NoCycle,
        WidthTooLarge,
        ValueError,
    ) as exc:
        return _clean_failure(name, exc)


def best_bound(d: Digraph, options: EngineOptions | None = None) -> BoundReport:
    """Run every applicable bound, a brute-force oracle when feasible, and rank.

    Residue-family parameters are auto-detected from the cycle-length
    profile unless explicit k, p, or residues are supplied. Individual bound
    failures (violated hypotheses, caps) are recorded, not fatal. best is
    the smallest verified value.
    """
    opts = options or EngineOptions()
    if d.n == 0:
        return BoundReport(bounds=(), best=0, oracle=0)
    scc, ctxs = _build_contexts(d, opts)
    profile = _global_profile(ctxs)
    truncated = bool(ctxs) and profile is None
    has_cycle = bool(ctxs)
    g = min(ctx.g for ctx in ctxs) if ctxs else None
    c = None
    if ctxs and all(ctx.c is not None for ctx in ctxs):
        c = max(ctx.c for ctx in ctxs)
    mod_cap = opts.modulus_cap if c is None else min(2 * c, opts.modulus_cap)

    entries: list[BoundCertificate] = []

    entries.append(
        _per_component(
            d, ctxs, "spine", lambda ctx: bound_spine(ctx.sub, ctx.tree, opts.chromatic_cap)
        )
    )
    entries.append(
        _per_component(
            d,
            ctxs,
            "branches",
            lambda ctx: bound_branches(ctx.sub, ctx.tree, opts.chromatic_cap),
        )
    )
    entries.append(
        _per_component(
            d,
            ctxs,
            "path-girth",
            lambda ctx: bound_path_girth(
                ctx.sub,
                rootinfo=ctx.rootinfo,
                longest_path_cap=opts.longest_path_cap,
                g=ctx.g,
            ),
        )
    )
    entries.append(
        _per_component(
            d,
            ctxs,
            "condensation",
            lambda ctx: bound_condensation(ctx.sub, ctx.tree, opts.chromatic_cap, g=ctx.g),
        )
    )

    if not has_cycle:
        entries.append(_failed("circ-girth", "digraph has no cycle"))
    else:
        try:
            if any(ctx.c is None for ctx in ctxs):
                raise CapExceeded(
                    "circumference unavailable for some component "
                    "(enumeration truncated, over the vertex cap)"
                )
            parts = []
            for ctx in ctxs:
                value, colors, params = _circ_girth_single(ctx.sub, ctx.tree, ctx.g, ctx.c)
                parts.append(
                    (ctx, _certified(ctx.sub, "circ-girth", value, colors, value, (), params))
                )
            entries.append(_merge_components(d, ctxs, "circ-girth", parts))
        except (CapExceeded, NoCycle) as exc:
            entries.append(_clean_failure("circ-girth", exc))

    if not has_cycle:
        for name in ("mod-no1", "multi-residue", "window-residue", "chen-numeric"):
            entries.append(
                _failed(name, "digraph has no cycle; residue bounds are vacuous")
            )
    elif truncated and opts.k is None:
        for name in ("mod-no1", "multi-residue", "window-residue"):
            entries.append(
                _failed(name, "cycle enumeration incomplete; residues not certified")
            )
        entries.append(_chen_entry(d, opts, None, g, c, mod_cap))
    else:
        k_no1 = opts.k if opts.k is not None else _detect_mod_no1(profile, mod_cap)
        if k_no1 is None:
            entries.append(
                _failed(
                    "mod-no1",
                    f"every modulus k in 2..{mod_cap} has a cycle of length 1 mod k",
                )
            )
        else:
            entries.append(
                _per_component(
                    d,
                    ctxs,
                    "mod-no1",
                    lambda ctx: bound_mod_no1(
                        ctx.sub, ctx.tree, k_no1, opts.cycle_cap, ctx.profile
                    ),
                )
            )

        if opts.k is not None:
            if opts.residues is not None:
                multi = (opts.k, opts.residues)
            elif profile is not None:
                multi = (opts.k, tuple(sorted(profile.residues(opts.k))))
            else:
                multi = None
        else:
            multi = _detect_multi_residue(profile, mod_cap)
        if multi is None:
            reason = (
                "cycle enumeration incomplete; residues not certified"
                if profile is None
                else f"no modulus k in 2..{mod_cap} avoids residue 1"
            )
            entries.append(_failed("multi-residue", reason))
        else:
            k_multi, rs_multi = multi
            if 1 in {r % k_multi for r in rs_multi}:
                entries.append(
                    _failed(
                        "multi-residue",
                        f"residue set {sorted(rs_multi)} mod {k_multi} contains 1",
                    )
                )
            else:
                entries.append(
                    _per_component(
                        d,
                        ctxs,
                        "multi-residue",
                        lambda ctx: bound_multi_residue(
                            ctx.sub,
                            ctx.tree,
                            k_multi,
                            rs_multi,
                            opts.chromatic_cap,
                            opts.cycle_cap,
                            ctx.profile,
                        ),
                    )
                )

        if opts.k is not None and opts.p is not None:
            window = (opts.k, opts.p)
        elif opts.k is not None:
            window = (opts.k, 1)
        else:
            window = _detect_window(profile, g, mod_cap)
        if window is None:
            entries.append(
                _failed(
                    "window-residue",
                    f"no (k, p) with k in 2..{mod_cap}, p <= girth - 1 "
                    "clears the residue window",
                )
            )
        else:
            k_win, p_win = window
            entries.append(
                _per_component(
                    d,
                    ctxs,
                    "window-residue",
                    lambda ctx: bound_window_residue(
                        ctx.sub,
                        ctx.tree,
                        k_win,
                        p_win,
                        opts.cycle_cap,
                        ctx.profile,
                        g=g,
                    ),
                )
            )

        entries.append(_chen_entry(d, opts, profile, g, c, mod_cap))

    oracle_value: int | None = None
    if opts.run_oracle and d.n <= opts.oracle_cap:
        oracle_value, oracle_coloring = exact_dichromatic_number(d, cap=opts.oracle_cap)
        check = verify_acyclic(d, oracle_coloring)
        if not check.valid:
            raise InternalInvariantError("oracle coloring failed verification")

    if oracle_value is not None:
        for entry in entries:
            if entry.value is not None and entry.value < oracle_value:
                raise InternalInvariantError(
                    f"bound {entry.name} reported {entry.value}, below the "
                    f"exact dichromatic number {oracle_value}"
                )

    verified_values = [e.value for e in entries if e.verified and e.value is not None]
    best = min(verified_values) if verified_values else None
    return BoundReport(bounds=tuple(entries), best=best, oracle=oracle_value)


def run_method(d: Digraph, method: str, options: EngineOptions | None = None) -> BoundCertificate:
    """One named bound (or the oracle) on an arbitrary digraph.

    Decomposes into strong components like best_bound, but violations and
    caps raise instead of being folded into a report.
    """
    opts = options or EngineOptions()
    if method not in METHOD_NAMES:
        raise ValueError(f"unknown method: {method}")
    if d.n == 0:
        raise ValueError("digraph is empty")

    if method == "oracle":
        value, coloring = exact_dichromatic_number(d, cap=opts.oracle_cap)
        check = verify_acyclic(d, coloring)
        if not check.valid:
            raise InternalInvariantError("oracle coloring failed verification")
        return BoundCertificate(
            name="oracle",
            value=value,
            hypotheses=(),
            certificate=coloring,
            verified=True,
            parameters={"n": d.n},
        )

    scc, ctxs = _build_contexts(d, opts)

    if method == "spine":
        if not ctxs:
            return _trivial_certificate(d, "spine")
        return _merge_components(
            d, ctxs, "spine",
            [(ctx, bound_spine(ctx.sub, ctx.tree, opts.chromatic_cap)) for ctx in ctxs],
        )
    if method == "branches":
        if not ctxs:
            return _trivial_certificate(d, "branches")
        return _merge_components(
            d, ctxs, "branches",
            [(ctx, bound_branches(ctx.sub, ctx.tree, opts.chromatic_cap)) for ctx in ctxs],
        )
    if method == "path-girth":
        if not ctxs:
            return _trivial_certificate(d, "path-girth")
        return _merge_components(
            d, ctxs, "path-girth",
            [
                (
                    ctx,
                    bound_path_girth(
                        ctx.sub,
                        rootinfo=ctx.rootinfo,
                        longest_path_cap=opts.longest_path_cap,
                        g=ctx.g,
                    ),
                )
                for ctx in ctxs
            ],
        )
    if method == "condensation":
        if not ctxs:
            return _trivial_certificate(d, "condensation")
        return _merge_components(
            d, ctxs, "condensation",
            [
                (ctx, bound_condensation(ctx.sub, ctx.tree, opts.chromatic_cap, g=ctx.g))
                for ctx in ctxs
            ],
        )
    if method == "circ-girth":
        return bound_circ_girth(
            d,
            cycle_cap=opts.cycle_cap,
            circumference_vertex_cap=opts.circumference_vertex_cap,
            root_mode=opts.root_mode,
        )

    if not ctxs:
        raise NoCycle("digraph has no cycle; a single color suffices")
    profile = _global_profile(ctxs)
    g = min(ctx.g for ctx in ctxs)
    c = max(ctx.c for ctx in ctxs) if all(ctx.c is not None for ctx in ctxs) else None
    mod_cap = opts.modulus_cap if c is None else min(2 * c, opts.modulus_cap)
    if profile is None and opts.k is None:
        raise TruncatedEnumeration(
            "cycle enumeration incomplete; residue parameters cannot be detected"
        )

    if method == "mod-no1":
        k = opts.k if opts.k is not None else _detect_mod_no1(profile, mod_cap)
        if k is None:
            raise HypothesisViolated(
                f"every modulus k in 2..{mod_cap} has a cycle of length 1 mod k"
            )
        return _merge_components(
            d, ctxs, "mod-no1",
            [
                (ctx, bound_mod_no1(ctx.sub, ctx.tree, k, opts.cycle_cap, ctx.profile))
                for ctx in ctxs
            ],
        )
    if method == "multi-residue":
        if opts.k is not None:
            k = opts.k
            if opts.residues is not None:
                rs = opts.residues
            else:
                if profile is None:
                    raise TruncatedEnumeration(
                        "cycle enumeration incomplete; residues cannot be detected"
                    )
                rs = tuple(sorted(profile.residues(k)))
        else:
            detected = _detect_multi_residue(profile, mod_cap)
            if detected is None:
                raise HypothesisViolated(
                    f"no modulus k in 2..{mod_cap} avoids residue 1"
                )
            k, rs = detected
        return _merge_components(
            d, ctxs, "multi-residue",
            [
                (
                    ctx,
                    bound_multi_residue(
                        ctx.sub, ctx.tree, k, rs,
                        opts.chromatic_cap, opts.cycle_cap, ctx.profile,
                    ),
                )
                for ctx in ctxs
            ],
        )
    if method == "window-residue":
        if opts.k is not None:
            k, p = opts.k, (opts.p if opts.p is not None else 1)
        else:
            detected = _detect_window(profile, g, mod_cap)
            if detected is None:
                raise HypothesisViolated(
                    f"no (k, p) with k in 2..{mod_cap}, p <= girth - 1 "
                    "clears the residue window"
                )
            k, p = detected
        return _merge_components(
            d, ctxs, "window-residue",
            [
                (
                    ctx,
                    bound_window_residue(
                        ctx.sub, ctx.tree, k, p, opts.cycle_cap, ctx.profile, g=g
                    ),
                )
                for ctx in ctxs
            ],
        )
    if method == "chen-numeric":
        entry = _chen_entry(d, opts, profile, g, c, mod_cap)
        if entry.value is None:
            raise HypothesisViolated(entry.hypotheses[0].condition)
        return entry
    raise ValueError(f"unhandled method: {method}")  # pragma: no cover
