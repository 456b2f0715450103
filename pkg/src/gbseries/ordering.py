"""Admissible monomial orderings: lex and degree-lex.

For commutative monomials both schemes are available.  For words only
deglex is offered: it compares length first, then letters left to right by
generator precedence.  A pure left-to-right lex on words is not a well
ordering (a word and its proper prefixes would form infinite descents), so
requesting it raises.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import RingMismatchError
from .monomials import COMMUTATIVE, NONCOMMUTATIVE, CommMonomial, Monomial, Word

LEX = "lex"
DEGLEX = "deglex"

LESS = -1
EQUAL = 0
GREATER = 1


@dataclass(frozen=True)
class MonomialOrder:
    """A total order on monomials, parameterized by generator precedence.

    `precedence` lists generator indices from greatest to smallest.
    """

    scheme: str
    precedence: tuple[int, ...]

    def __post_init__(self):
        if self.scheme not in (LEX, DEGLEX):
            raise ValueError(f"unknown ordering scheme {self.scheme!r}")
        if sorted(self.precedence) != list(range(len(self.precedence))):
            raise ValueError(f"precedence {self.precedence!r} is not a permutation")
        # rank of a generator: 0 for the greatest
        object.__setattr__(
            self, "_rank", {g: r for r, g in enumerate(self.precedence)}
        )

    _rank: dict = field(init=False, repr=False, compare=False)

    @property
    def ngens(self) -> int:
        return len(self.precedence)

    def sort_key(self, m: Monomial):
        """A key that sorts ascending in this order (max = leading monomial)."""
        if isinstance(m, CommMonomial):
            if m.arity != self.ngens:
                raise RingMismatchError("monomial arity does not match the ordering")
            reordered = tuple(m.exponents[g] for g in self.precedence)
            if self.scheme == LEX:
                return reordered
            return (m.degree, reordered)
        if isinstance(m, Word):
            if self.scheme == LEX:
                raise ValueError("lex is not an admissible ordering on words")
            if any(a >= self.ngens for a in m.letters):
                raise RingMismatchError("word uses generators outside the ordering")
            # higher-precedence letters (smaller rank) must compare greater
            return (m.degree, tuple(-self._rank[a] for a in m.letters))
        raise RingMismatchError(f"not a monomial: {m!r}")

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """Return -1, 0, or 1; 0 only when the monomials are identical."""
        if type(m1) is not type(m2):
            raise RingMismatchError("cannot compare monomials of different kinds")
        k1, k2 = self.sort_key(m1), self.sort_key(m2)
        return (k1 > k2) - (k1 < k2)


def default_order(scheme: str, ngens: int) -> MonomialOrder:
    """Order with declaration precedence: generator 0 is the greatest."""
    return MonomialOrder(scheme, tuple(range(ngens)))


@dataclass
class AdmissibilityReport:
    passed: bool
    pairs_checked: int
    failures: list[str]

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail"
        lines = [f"admissibility {status} ({self.pairs_checked} comparisons)"]
        lines.extend(self.failures)
        return "\n".join(lines)


def _monomials_up_to(kind: str, ngens: int, max_degree: int):
    if kind == COMMUTATIVE:
        out = []
        for degree in range(max_degree + 1):
            for combo in itertools.combinations_with_replacement(range(ngens), degree):
                exps = [0] * ngens
                for g in combo:
                    exps[g] += 1
                out.append(CommMonomial(exps))
        # combinations_with_replacement repeats nothing, so these are distinct
        return out
    return [
        Word(w)
        for degree in range(max_degree + 1)
        for w in itertools.product(range(ngens), repeat=degree)
    ]


def check_admissibility(
    order: MonomialOrder, kind: str, sample_degree: int, max_failures: int = 5
) -> AdmissibilityReport:
    """Exhaustively verify totality and multiplicativity at desk scale.

    Checks all monomials of degree <= sample_degree in at most 3 generators:
    comparisons must be antisymmetric and zero only on identical monomials,
    and m1 < m2 must imply m1*m3 < m2*m3 (both sides, for words).
    """
    if sample_degree < 1:
        raise ValueError("sample_degree must be >= 1")
    ngens = min(order.ngens, 3)
    probe = order if ngens == order.ngens else MonomialOrder(
        order.scheme, tuple(g for g in order.precedence if g < ngens)
    )
    monos = _monomials_up_to(kind, ngens, sample_degree)
    failures: list[str] = []
    checked = 0

    def record(message: str) -> None:
        if len(failures) < max_failures:
            failures.append(message)

    for m1, m2 in itertools.combinations(monos, 2):
        checked += 1
        c = probe.compare(m1, m2)
        if c == 0:
            record(f"totality: distinct monomials compare equal: {m1!r}, {m2!r}")
            continue
        if probe.compare(m2, m1) != -c:
            record(f"antisymmetry violated on {m1!r}, {m2!r}")
            continue
        lo, hi = (m1, m2) if c < 0 else (m2, m1)
        for m3 in monos:
            if m3.is_one:
                continue
            checked += 1
            if probe.compare(lo * m3, hi * m3) != LESS:
                record(
                    f"multiplicativity violated: {lo!r} < {hi!r} but not on the "
                    f"right by {m3!r}"
                )
                break
            if kind == NONCOMMUTATIVE and probe.compare(m3 * lo, m3 * hi) != LESS:
                record(
                    f"multiplicativity violated: {lo!r} < {hi!r} but not on the "
                    f"left by {m3!r}"
                )
                break
    for m in monos:
        checked += 1
        if probe.compare(m, m) != EQUAL:
            record(f"reflexive comparison nonzero for {m!r}")
    return AdmissibilityReport(not failures, checked, failures)
