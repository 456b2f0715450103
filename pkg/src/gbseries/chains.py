"""Chain enumeration over an obstruction set and the alternating-sum series.

An obstruction set is the factor-minimal family of leading words of a
(reduced) basis.  Chains are built inductively: a level-n chain extends a
level-(n-1) chain g by a nonempty normal tail t such that tail(g)*t
contains exactly one obstruction occurrence, sitting at its very end.
Degree-1 obstructions simply delete their generator: such a generator can
never appear in a normal word or a chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .monomials import Word
from .ordering import MonomialOrder, default_order
from .series import FactorAutomaton, TruncatedSeries, _minimal_factors


@dataclass(frozen=True)
class ObstructionSet:
    """A factor-minimal antichain of words over a fixed alphabet."""

    words: tuple[Word, ...]
    ngens: int

    def __post_init__(self):
        for w in self.words:
            if w.is_one:
                raise ValueError("the empty word cannot be an obstruction")
            if any(a >= self.ngens for a in w.letters):
                raise ValueError(f"obstruction {w!r} uses letters outside the alphabet")
        minimal = tuple(_minimal_factors(self.words))
        object.__setattr__(self, "words", minimal)

    @property
    def killed_generators(self) -> frozenset[int]:
        """Generators excluded by a degree-1 obstruction."""
        return frozenset(w.letters[0] for w in self.words if w.degree == 1)

    def order(self) -> MonomialOrder:
        return default_order("deglex", self.ngens)


def occurrence_count(word: Word, obstructions: Iterable[Word]) -> int:
    """Total number of (position, obstruction) factor occurrences in word."""
    return sum(len(word.occurrences(f)) for f in obstructions)


@dataclass(frozen=True)
class Chain:
    """A level-n chain with its tail length recorded.

    Level -1 is the empty word (its own tail); level 0 chains are single
    generators; higher levels follow the inductive tail condition.
    """

    word: Word
    tail_length: int
    level: int

    @property
    def degree(self) -> int:
        return self.word.degree

    @property
    def tail(self) -> Word:
        return self.word.suffix(self.tail_length)


def _is_normal(word: Word, obstructions) -> bool:
    return not any(word.contains_factor(f) for f in obstructions)


def enumerate_chains(
    obstructions: ObstructionSet, max_level: int, max_degree: int
) -> dict[int, list[Chain]]:
    """All chains per level up to max_level with degree <= max_degree.

    Extension candidates are generated directly from the obstruction that
    must close the new tail: if r is the parent's tail, an obstruction o
    starting inside r and running past its end forces t = the protruding
    part of o.  The candidate survives if t is normal and r*t contains no
    other obstruction occurrence.
    """
    if max_level < -1:
        raise ValueError("max_level must be >= -1")
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    obs = obstructions.words
    killed = obstructions.killed_generators
    out: dict[int, list[Chain]] = {-1: [Chain(Word(), 0, -1)]}
    if max_level < 0:
        return out
    out[0] = [
        Chain(Word((a,)), 1, 0)
        for a in range(obstructions.ngens)
        if a not in killed and 1 <= max_degree
    ]
    for level in range(1, max_level + 1):
        found: dict[Word, Chain] = {}
        for parent in out[level - 1]:
            r = parent.tail
            for o in obs:
                for p in range(r.degree):
                    overhang = o.degree - (r.degree - p)
                    if overhang < 1:
                        continue
                    if r.letters[p:] != o.letters[:r.degree - p]:
                        continue
                    t = Word(o.letters[r.degree - p:])
                    if parent.degree + t.degree > max_degree:
                        continue
                    if not _is_normal(t, obs):
                        continue
                    joined = r * t
                    # the constructed occurrence ends the word; requiring a
                    # total count of one makes it the only one
                    if occurrence_count(joined, obs) != 1:
                        continue
                    chain = Chain(parent.word * t, t.degree, level)
                    previous = found.get(chain.word)
                    if previous is not None:
                        if previous.tail_length != chain.tail_length:
                            raise AssertionError(
                                f"chain word {chain.word!r} decomposes two ways at level {level}"
                            )
                        continue
                    found[chain.word] = chain
        order = obstructions.order()
        out[level] = sorted(
            found.values(), key=lambda c: (c.degree, order.sort_key(c.word))
        )
    return out


def chain_series(
    obstructions: ObstructionSet, level: int, max_degree: int
) -> TruncatedSeries:
    """Coefficient d = number of level-n chains of degree d."""
    if level < -1:
        raise ValueError("level must be >= -1")
    table = enumerate_chains(obstructions, level, max_degree)
    counts = [0] * (max_degree + 1)
    for chain in table.get(level, []):
        counts[chain.degree] += 1
    return TruncatedSeries(tuple(counts))


def _alternating_sum(obstructions: ObstructionSet, max_degree: int) -> TruncatedSeries:
    # a level-n chain has degree >= n+1, so levels above D-1 cannot
    # contribute below the truncation
    table = enumerate_chains(obstructions, max_degree - 1, max_degree)
    total = TruncatedSeries.zero(max_degree)
    for level, chains in table.items():
        sign = 1 if (level + 1) % 2 == 0 else -1
        counts = [0] * (max_degree + 1)
        for chain in chains:
            counts[chain.degree] += 1
        total = total + TruncatedSeries(tuple(c * sign for c in counts))
    return total


def hilbert_from_chains(obstructions: ObstructionSet, max_degree: int) -> TruncatedSeries:
    """Hilbert series as the inverse of the alternating chain-count sum."""
    alternating = _alternating_sum(obstructions, max_degree)
    if alternating[0] not in (1, -1):
        raise AssertionError("alternating chain sum lost its unit constant term")
    return alternating.inverse()


@dataclass(frozen=True)
class EulerReport:
    """Per-degree residuals of H_A * (alternating chain sum) - 1."""

    residuals: tuple[int, ...]

    @property
    def passed(self) -> bool:
        return not any(self.residuals)

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return f"euler identity {status}; residuals {list(self.residuals)}"


def euler_identity_check(obstructions: ObstructionSet, max_degree: int) -> EulerReport:
    """Verify the chain sum inverts the independently counted Hilbert series."""
    automaton = FactorAutomaton(obstructions.words, obstructions.ngens)
    h_algebra = TruncatedSeries(tuple(automaton.counts(max_degree)))
    alternating = _alternating_sum(obstructions, max_degree)
    product = h_algebra * alternating
    residuals = product - TruncatedSeries.unit(max_degree)
    return EulerReport(residuals.coefficients)
