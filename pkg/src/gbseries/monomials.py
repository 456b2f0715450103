"""Monomials of both kinds: exponent vectors and words in free generators.

Both classes are immutable value objects; arithmetic returns new instances.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import RingMismatchError

COMMUTATIVE = "commutative"
NONCOMMUTATIVE = "noncommutative"


class CommMonomial:
    """A commutative monomial x1^e1 * ... * xn^en as its exponent vector."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: Iterable[int]):
        exps = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps!r}")
        self.exponents = exps

    @classmethod
    def one(cls, ngens: int) -> CommMonomial:
        return cls((0,) * ngens)

    @property
    def arity(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(self.exponents, weights))

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def _check_arity(self, other: CommMonomial) -> None:
        if not isinstance(other, CommMonomial):
            raise RingMismatchError(f"expected a commutative monomial, got {other!r}")
        if len(self.exponents) != len(other.exponents):
            raise RingMismatchError("monomials have different generator counts")

    def __mul__(self, other: CommMonomial) -> CommMonomial:
        self._check_arity(other)
        return CommMonomial(a + b for a, b in zip(self.exponents, other.exponents))

    def divides(self, other: CommMonomial) -> bool:
        self._check_arity(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: CommMonomial) -> CommMonomial:
        """Exact quotient self / other; raises if other does not divide self."""
        self._check_arity(other)
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        return CommMonomial(a - b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: CommMonomial) -> CommMonomial:
        self._check_arity(other)
        return CommMonomial(max(a, b) for a, b in zip(self.exponents, other.exponents))

    def is_coprime_with(self, other: CommMonomial) -> bool:
        self._check_arity(other)
        return all(a == 0 or b == 0 for a, b in zip(self.exponents, other.exponents))

    def __eq__(self, other) -> bool:
        return isinstance(other, CommMonomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash((CommMonomial, self.exponents))

    def __repr__(self) -> str:
        return f"CommMonomial({self.exponents!r})"


class Word:
    """A monomial of the free algebra: a finite sequence of generator indices."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        lets = tuple(int(a) for a in letters)
        if any(a < 0 for a in lets):
            raise ValueError(f"negative generator index in {lets!r}")
        self.letters = lets

    @classmethod
    def one(cls) -> Word:
        return cls(())

    @property
    def degree(self) -> int:
        return len(self.letters)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return sum(weights[a] for a in self.letters)

    @property
    def is_one(self) -> bool:
        return not self.letters

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            raise RingMismatchError(f"expected a word, got {other!r}")
        return Word(self.letters + other.letters)

    def prefix(self, length: int) -> Word:
        return Word(self.letters[:length])

    def suffix(self, length: int) -> Word:
        return Word(self.letters[len(self.letters) - length:])

    def occurrences(self, factor: Word) -> tuple[int, ...]:
        """All start positions where `factor` occurs in self as a contiguous factor."""
        f = factor.letters
        if not f:
            return tuple(range(len(self.letters) + 1))
        w = self.letters
        n, m = len(w), len(f)
        return tuple(i for i in range(n - m + 1) if w[i:i + m] == f)

    def contains_factor(self, factor: Word) -> bool:
        f = factor.letters
        if not f:
            return True
        w = self.letters
        m = len(f)
        return any(w[i:i + m] == f for i in range(len(w) - m + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((Word, self.letters))

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"


Monomial = CommMonomial | Word


def monomial_kind(m: Monomial) -> str:
    if isinstance(m, CommMonomial):
        return COMMUTATIVE
    if isinstance(m, Word):
        return NONCOMMUTATIVE
    raise RingMismatchError(f"not a monomial: {m!r}")
