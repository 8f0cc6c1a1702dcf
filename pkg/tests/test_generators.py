import pytest

from dichroma.cycles import cycle_profile
from dichroma.digraph import is_strong
from dichroma.errors import AttemptsExhausted
from dichroma.generators import (
    GeneratorSpec,
    Lcg,
    complete_symmetric,
    directed_cycle,
    random_strong,
    residue_constrained,
)

from bruteforce import bf_residues, bf_sccs


class TestLcg:
    def test_raw_sequence_from_seed_0(self):
        # frozen reference values for the fixed multiplier and increment
        rng = Lcg(0)
        assert [rng.next_raw() for _ in range(3)] == [
            1442695040888963407,
            1876011003808476466,
            11166244414315200793,
        ]

    def test_bounded_draws_from_seed_42(self):
        rng = Lcg(42)
        assert [rng.next_below(10) for _ in range(6)] == [5, 2, 4, 6, 6, 0]

    def test_draws_stay_in_range(self):
        rng = Lcg(7)
        assert all(0 <= rng.next_below(3) < 3 for _ in range(200))

    def test_range_validated(self):
        with pytest.raises(ValueError):
            Lcg(1).next_below(0)

    def test_seed_is_masked_to_64_bits(self):
        assert Lcg(1 << 64).next_raw() == Lcg(0).next_raw()


class TestFixedFamilies:
    def test_directed_cycle(self):
        d = directed_cycle(3)
        assert d.arcs == ((0, 1), (1, 2), (2, 0))

    def test_directed_cycle_too_small(self):
        with pytest.raises(ValueError):
            directed_cycle(1)

    def test_complete_symmetric(self):
        d = complete_symmetric(3)
        assert d.arcs == ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))

    def test_complete_symmetric_too_small(self):
        with pytest.raises(ValueError):
            complete_symmetric(1)


class TestRandomStrong:
    def test_minimum_arcs_is_the_spanning_cycle(self):
        for seed in (0, 1, 99):
            d = random_strong(5, 5, seed=seed)
            assert d.arcs == directed_cycle(5).arcs

    def test_maximum_arcs_is_complete(self):
        d = random_strong(4, 12, seed=7)
        assert d.arcs == complete_symmetric(4).arcs

    def test_reproducible(self):
        assert random_strong(6, 9, seed=1).arcs == random_strong(6, 9, seed=1).arcs

    def test_seeds_differ(self):
        drawn = {random_strong(6, 9, seed=s).arcs for s in range(5)}
        assert len(drawn) > 1

    def test_always_strong_with_requested_arc_count(self):
        for seed in range(10):
            d = random_strong(7, 11, seed=seed)
            assert len(d.arcs) == 11
            assert is_strong(d)
            assert bf_sccs(d.n, list(d.arcs)) == [tuple(range(7))]

    def test_bounds_validated(self):
        with pytest.raises(ValueError):
            random_strong(1, 1, seed=0)
        with pytest.raises(ValueError):
            random_strong(5, 4, seed=0)
        with pytest.raises(ValueError):
            random_strong(3, 7, seed=0)


class TestResidueConstrained:
    def test_bare_cycle_passes_immediately(self):
        d = residue_constrained(6, 6, 3, (0,), seed=5)
        assert d.arcs == directed_cycle(6).arcs
        d = residue_constrained(7, 7, 4, (3,), seed=5)
        assert d.arcs == directed_cycle(7).arcs

    def test_certified_against_bruteforce_residues(self):
        d = residue_constrained(8, 10, 2, (0,), seed=3)
        assert is_strong(d)
        assert len(d.arcs) == 10
        assert bf_residues(d.n, list(d.arcs), 2) <= {0}

    def test_never_silent_on_chorded_instances(self):
        # either a certified instance comes back or the failure is explicit
        try:
            d = residue_constrained(8, 10, 3, (0,), seed=1, attempts=1000)
        except AttemptsExhausted:
            return
        assert bf_residues(d.n, list(d.arcs), 3) <= {0}

    def test_profile_contract_holds(self):
        d = residue_constrained(7, 8, 4, (3, 0), seed=11)
        assert cycle_profile(d).residues(4) <= {0, 3}

    def test_attempts_exhausted(self):
        # any chord added to the spanning 5-cycle closes a cycle of length
        # 2..4, none of which is 0 mod 5, so no candidate can pass
        with pytest.raises(AttemptsExhausted):
            residue_constrained(5, 7, 5, (0,), seed=0, attempts=30)

    def test_spanning_cycle_residue_fails_fast(self):
        with pytest.raises(AttemptsExhausted):
            residue_constrained(7, 7, 3, (0,), seed=0)

    def test_residue_1_rejected(self):
        with pytest.raises(ValueError):
            residue_constrained(7, 7, 3, (0, 1), seed=0)

    def test_bounds_validated(self):
        with pytest.raises(ValueError):
            residue_constrained(1, 1, 2, (0,), seed=0)
        with pytest.raises(ValueError):
            residue_constrained(4, 20, 2, (0,), seed=0)
        with pytest.raises(ValueError):
            residue_constrained(4, 4, 1, (0,), seed=0)
        with pytest.raises(ValueError):
            residue_constrained(4, 4, 2, (), seed=0)


class TestGeneratorSpec:
    def test_dispatch(self):
        assert GeneratorSpec("cycle", 5).build().arcs == directed_cycle(5).arcs
        assert GeneratorSpec("complete", 3).build().arcs == complete_symmetric(3).arcs
        assert (
            GeneratorSpec("strong", 6, m=9, seed=1).build().arcs
            == random_strong(6, 9, seed=1).arcs
        )
        assert (
            GeneratorSpec("residue", 6, m=6, k=3, allowed=(0,), seed=2).build().arcs
            == directed_cycle(6).arcs
        )

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            GeneratorSpec("mystery", 4).build()
