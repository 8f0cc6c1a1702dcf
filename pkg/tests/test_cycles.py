import pytest

from dichroma.cycles import (
    circumference,
    cycle_profile,
    enumerate_cycles,
    find_cycle_with_residue,
    girth,
    residue_profile,
)
from dichroma.digraph import Digraph
from dichroma.errors import CapExceeded, NoCycle, TruncatedEnumeration
from dichroma.generators import complete_symmetric, directed_cycle, random_strong

from bruteforce import bf_circumference, bf_cycles, bf_girth


def chorded_c6():
    return Digraph.from_arcs(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])


class TestEnumeration:
    def test_directed_triangle(self):
        enum = enumerate_cycles(directed_cycle(3))
        assert enum.cycles == ((0, 1, 2),)
        assert not enum.truncated

    def test_complete_symmetric_3(self):
        # frozen: K_3 has three 2-cycles and two triangles
        enum = enumerate_cycles(complete_symmetric(3))
        assert sorted(len(c) for c in enum.cycles) == [2, 2, 2, 3, 3]
        assert set(enum.cycles) == {(0, 1), (0, 2), (1, 2), (0, 1, 2), (0, 2, 1)}

    def test_acyclic_is_empty(self):
        d = Digraph.from_arcs(3, [(0, 1), (0, 2), (1, 2)])
        enum = enumerate_cycles(d)
        assert enum.cycles == ()
        assert not enum.truncated

    def test_cycles_are_rooted_at_minimum_vertex(self):
        enum = enumerate_cycles(chorded_c6())
        for cyc in enum.cycles:
            assert cyc[0] == min(cyc)

    def test_cap_truncates(self):
        enum = enumerate_cycles(complete_symmetric(3), cap=2)
        assert len(enum.cycles) == 2
        assert enum.truncated

    def test_cap_equal_to_count_is_not_truncated(self):
        enum = enumerate_cycles(complete_symmetric(3), cap=5)
        assert len(enum.cycles) == 5
        assert not enum.truncated

    def test_matches_bruteforce_on_seeded_instances(self):
        for seed in range(6):
            d = random_strong(6, 11, seed=seed)
            enum = enumerate_cycles(d)
            assert not enum.truncated
            assert set(enum.cycles) == bf_cycles(d.n, list(d.arcs))


class TestProfile:
    def test_chorded_hexagon(self):
        # frozen: the chord creates exactly one extra cycle of length 4
        prof = cycle_profile(chorded_c6())
        assert prof.girth == 4
        assert prof.circumference == 6
        assert prof.cycle_count == 2
        assert prof.lengths == frozenset({4, 6})
        assert not prof.truncated

    def test_residues_from_profile(self):
        prof = cycle_profile(chorded_c6())
        assert prof.residues(3) == frozenset({0, 1})
        assert prof.residues(2) == frozenset({0})
        with pytest.raises(ValueError):
            prof.residues(1)

    def test_acyclic_raises(self):
        with pytest.raises(NoCycle):
            cycle_profile(Digraph.from_arcs(2, [(0, 1)]))


class TestGirthCircumference:
    def test_directed_cycles(self):
        for n in range(2, 9):
            d = directed_cycle(n)
            assert girth(d) == n
            assert circumference(d) == n

    def test_complete_symmetric(self):
        for n in range(2, 7):
            d = complete_symmetric(n)
            assert girth(d) == 2
            assert circumference(d) == n

    def test_chorded_hexagon(self):
        d = chorded_c6()
        assert girth(d) == 4
        assert circumference(d) == 6

    def test_matches_bruteforce_on_seeded_instances(self):
        for seed in range(8):
            d = random_strong(7, 13, seed=seed)
            arcs = list(d.arcs)
            assert girth(d) == bf_girth(d.n, arcs)
            assert circumference(d) == bf_circumference(d.n, arcs)

    def test_no_cycle_raises(self):
        d = Digraph.from_arcs(3, [(0, 1), (1, 2)])
        with pytest.raises(NoCycle):
            girth(d)
        with pytest.raises(NoCycle):
            circumference(d)

    def test_circumference_vertex_cap(self):
        with pytest.raises(CapExceeded):
            circumference(directed_cycle(5), vertex_cap=3)


class TestResidues:
    def test_directed_hexagon_mod_3(self):
        assert residue_profile(directed_cycle(6), 3) == frozenset({0})

    def test_directed_heptagon_mod_4(self):
        assert residue_profile(directed_cycle(7), 4) == frozenset({3})

    def test_complete_symmetric_3_mod_2(self):
        assert residue_profile(complete_symmetric(3), 2) == frozenset({0, 1})

    def test_truncation_refused(self):
        with pytest.raises(TruncatedEnumeration):
            residue_profile(complete_symmetric(3), 2, cap=2)

    def test_modulus_validated(self):
        with pytest.raises(ValueError):
            residue_profile(directed_cycle(3), 1)

    def test_find_cycle_with_residue(self):
        d = chorded_c6()
        hit = find_cycle_with_residue(d, 3, {1})
        assert hit is not None and len(hit) == 4
        assert find_cycle_with_residue(d, 3, {2}) is None
