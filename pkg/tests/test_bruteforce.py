"""Sanity checks for the brute-force reference implementations themselves.

These are the independent oracles the rest of the suite trusts, so they get
their own tiny hand-checkable fixtures.
"""

from bruteforce import (
    bf_chromatic,
    bf_circumference,
    bf_cycles,
    bf_dichromatic,
    bf_girth,
    bf_is_acyclic,
    bf_longest_path_from,
    bf_reachable,
    bf_residues,
    bf_sccs,
    underlying_edges,
)

C3 = [(0, 1), (1, 2), (2, 0)]
K3 = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]
PATH = [(0, 1), (1, 2)]


def test_reachability():
    assert bf_reachable(3, PATH, 0) == {0, 1, 2}
    assert bf_reachable(3, PATH, 2) == {2}


def test_sccs():
    assert bf_sccs(3, C3) == [(0, 1, 2)]
    assert bf_sccs(3, PATH) == [(0,), (1,), (2,)]
    assert bf_sccs(4, C3 + [(2, 3)]) == [(0, 1, 2), (3,)]


def test_cycles_canonical_and_complete():
    assert bf_cycles(3, C3) == {(0, 1, 2)}
    k3 = bf_cycles(3, K3)
    assert k3 == {(0, 1), (0, 2), (1, 2), (0, 1, 2), (0, 2, 1)}
    assert bf_cycles(3, PATH) == set()


def test_acyclicity():
    assert bf_is_acyclic(3, PATH)
    assert not bf_is_acyclic(3, C3)
    assert bf_is_acyclic(3, C3, vertices={0, 1})


def test_girth_and_circumference():
    assert bf_girth(3, K3) == 2
    assert bf_circumference(3, K3) == 3
    assert bf_girth(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]) == 4
    assert bf_circumference(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]) == 6


def test_residues():
    assert bf_residues(3, K3, 2) == {0, 1}
    assert bf_residues(6, [(i, (i + 1) % 6) for i in range(6)], 3) == {0}


def test_chromatic():
    assert bf_chromatic(3, [(0, 1), (1, 2), (0, 2)]) == 3
    assert bf_chromatic(4, [(0, 1), (2, 3)]) == 2
    assert bf_chromatic(3, []) == 1
    assert bf_chromatic(0, []) == 0


def test_dichromatic():
    assert bf_dichromatic(3, C3) == 2
    assert bf_dichromatic(3, K3) == 3
    assert bf_dichromatic(3, PATH) == 1
    assert bf_dichromatic(0, []) == 0


def test_longest_path():
    assert bf_longest_path_from(3, K3, 0) == 2
    assert bf_longest_path_from(3, PATH, 1) == 1


def test_underlying_edges():
    assert underlying_edges(K3) == {(0, 1), (0, 2), (1, 2)}


def test_cross_consistency_between_oracles():
    arcs = [(i, (i + 1) % 5) for i in range(5)] + [(0, 2), (2, 4)]
    lengths = sorted(len(c) for c in bf_cycles(5, arcs))
    assert lengths[0] == bf_girth(5, arcs)
    assert lengths[-1] == bf_circumference(5, arcs)
    assert bf_residues(5, arcs, 3) == {l % 3 for l in lengths}
