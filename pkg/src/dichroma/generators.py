"""Deterministic digraph generators driven by a fixed 64-bit LCG.

The generator is pinned (multiplier, increment, output derivation) so the
same seed yields the same digraph on every platform and Python version.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import DEFAULT_CYCLE_CAP, cycle_profile
from .digraph import Digraph
from .errors import AttemptsExhausted

_MULT = 6364136223846793005
_INC = 1442695040888963407
_MASK = (1 << 64) - 1


class Lcg:
    """64-bit linear congruential generator with top-bits range reduction."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_raw(self) -> int:
        self.state = (self.state * _MULT + _INC) & _MASK
        return self.state

    def next_below(self, n: int) -> int:
        """Uniform-ish value in 0..n-1 from the top 32 bits."""
        if n <= 0:
            raise ValueError("range must be positive")
        return ((self.next_raw() >> 32) * n) >> 32


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def complete_symmetric(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a complete symmetric digraph needs at least 2 vertices")
    return Digraph.from_arcs(
        n, [(u, v) for u in range(n) for v in range(n) if u != v]
    )


def random_strong(n: int, m: int, seed: int) -> Digraph:
    """Strongly connected digraph: a Hamiltonian cycle plus m - n extra arcs.

    Extra arcs are rejection-sampled to be distinct non-loops off the cycle.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if m < n:
        raise ValueError(f"need at least n = {n} arcs to close a spanning cycle")
    if m > n * (n - 1):
        raise ValueError(f"at most n(n-1) = {n * (n - 1)} arcs fit without duplicates")
    rng = Lcg(seed)
    arcs = {(i, (i + 1) % n) for i in range(n)}
    while len(arcs) < m:
        u = rng.next_below(n)
        v = rng.next_below(n)
        if u == v or (u, v) in arcs:
            continue
        arcs.add((u, v))
    return Digraph.from_arcs(n, sorted(arcs))


def residue_constrained(
    n: int,
    m: int,
    k: int,
    allowed,
    seed: int,
    attempts: int = 2000,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
) -> Digraph:
    """Strong digraph whose cycle lengths all fall in the allowed classes mod k.

    Draws random_strong candidates from one generator stream and certifies
    each by full cycle enumeration. Raises AttemptsExhausted when no
    candidate passes.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not (n <= m <= n * (n - 1)):
        raise ValueError(f"arc count must lie in {n}..{n * (n - 1)}")
    if k < 2:
        raise ValueError("modulus must be at least 2")
    allowed_set = {r % k for r in allowed}
    if not allowed_set:
        raise ValueError("at least one allowed residue class is required")
    if 1 in allowed_set:
        raise ValueError("residue 1 mod k cannot be allowed")
    if n % k not in allowed_set:
        # every candidate contains the spanning n-cycle, so sampling is futile
        raise AttemptsExhausted(
            f"the spanning cycle has length {n}, residue {n % k} mod {k}, "
            "so no candidate can conform"
        )
    rng = Lcg(seed)
    for _ in range(attempts):
        arcs = {(i, (i + 1) % n) for i in range(n)}
        while len(arcs) < m:
            u = rng.next_below(n)
            v = rng.next_below(n)
            if u == v or (u, v) in arcs:
                continue
            arcs.add((u, v))
        d = Digraph.from_arcs(n, sorted(arcs))
        profile = cycle_profile(d, cycle_cap)
        if profile.truncated:
            continue
        if profile.residues(k) <= allowed_set:
            return d
    raise AttemptsExhausted(
        f"no candidate with cycle residues inside {sorted(allowed_set)} mod {k} "
        f"found in {attempts} attempts"
    )


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative recipe for one generated digraph."""

    kind: str
    n: int
    m: int = 0
    seed: int = 0
    k: int = 0
    allowed: tuple[int, ...] = field(default_factory=tuple)
    attempts: int = 2000

    def build(self) -> Digraph:
        if self.kind == "cycle":
            return directed_cycle(self.n)
        if self.kind == "complete":
            return complete_symmetric(self.n)
        if self.kind == "strong":
            return random_strong(self.n, self.m, self.seed)
        if self.kind == "residue":
            return residue_constrained(
                self.n, self.m, self.k, self.allowed, self.seed, self.attempts
            )
        raise ValueError(f"unknown generator kind: {self.kind}")
