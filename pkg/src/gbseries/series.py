"""Truncated power series and Hilbert series of graded quotient algebras.

Coefficients are exact integers (they are dimensions of graded pieces).
Every series carries an explicit truncation degree and arithmetic never
reads past it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .algebra import Polynomial, RingContext
from .commutative import GroebnerBasis
from .errors import GradingError, SaturationError
from .monomials import COMMUTATIVE, CommMonomial, Word
from .noncommutative import CompletionResult
from .presentation import Presentation, format_polynomial


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficients c_0..c_D of a formal power series cut at D."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a truncated series needs at least c_0")
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @classmethod
    def zero(cls, truncation_degree: int) -> TruncatedSeries:
        return cls((0,) * (truncation_degree + 1))

    @classmethod
    def unit(cls, truncation_degree: int) -> TruncatedSeries:
        return cls((1,) + (0,) * truncation_degree)

    @classmethod
    def monomial(cls, degree: int, truncation_degree: int, coefficient: int = 1) -> TruncatedSeries:
        coeffs = [0] * (truncation_degree + 1)
        if degree <= truncation_degree:
            coeffs[degree] = coefficient
        return cls(coeffs)

    @property
    def truncation_degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def _check_degree(self, other: TruncatedSeries) -> None:
        if self.truncation_degree != other.truncation_degree:
            raise ValueError("truncation degrees differ")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_degree(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_degree(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-a for a in self.coefficients))

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_degree(other)
        degree = self.truncation_degree
        out = [0] * (degree + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(degree + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def inverse(self) -> TruncatedSeries:
        """Multiplicative inverse via the standard recurrence; needs c_0 = +-1."""
        c0 = self.coefficients[0]
        if c0 not in (1, -1):
            raise ValueError("constant term must be a unit (+1 or -1)")
        degree = self.truncation_degree
        out = [0] * (degree + 1)
        out[0] = c0
        for n in range(1, degree + 1):
            acc = sum(self.coefficients[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -c0 * acc
        return TruncatedSeries(tuple(out))

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coefficients) + ")"


def geometric_factor(step: int, truncation_degree: int) -> TruncatedSeries:
    """(1 - t^step)^{-1}: ones at every multiple of step."""
    if step < 1:
        raise ValueError("step must be >= 1")
    return TruncatedSeries(
        tuple(1 if d % step == 0 else 0 for d in range(truncation_degree + 1))
    )


def polynomial_algebra_series(degrees: Iterable[int], truncation_degree: int) -> TruncatedSeries:
    """Hilbert series of a polynomial algebra with the given generator degrees."""
    out = TruncatedSeries.unit(truncation_degree)
    for w in degrees:
        out = out * geometric_factor(w, truncation_degree)
    return out


def exterior_algebra_series(degrees: Iterable[int], truncation_degree: int) -> TruncatedSeries:
    """Hilbert series of an exterior algebra: product of (1 + t^degree)."""
    out = TruncatedSeries.unit(truncation_degree)
    for w in degrees:
        out = out * (TruncatedSeries.unit(truncation_degree)
                     + TruncatedSeries.monomial(w, truncation_degree))
    return out


def free_algebra_series(degrees: Sequence[int], truncation_degree: int) -> TruncatedSeries:
    """Hilbert series of a free associative algebra: (1 - sum t^degree)^{-1}."""
    inv = TruncatedSeries.unit(truncation_degree)
    for w in degrees:
        inv = inv - TruncatedSeries.monomial(w, truncation_degree)
    return inv.inverse()


def free_product_series(ha: TruncatedSeries, hb: TruncatedSeries) -> TruncatedSeries:
    """Series of the free product: inverse of (ha^{-1} + hb^{-1} - 1)."""
    if ha[0] != 1 or hb[0] != 1:
        raise ValueError("free product factors must have constant term 1")
    unit = TruncatedSeries.unit(ha.truncation_degree)
    return (ha.inverse() + hb.inverse() - unit).inverse()


class FactorAutomaton:
    """Finite-state device whose degree-d walks from the root are exactly
    the words of degree d avoiding every obstruction as a factor.

    States are the proper prefixes of the (factor-minimal) obstruction set;
    a transition appends one letter and falls back to the longest suffix
    that is still a prefix of some obstruction.
    """

    def __init__(self, obstructions: Iterable[Word], ngens: int):
        self.ngens = ngens
        minimal = _minimal_factors(obstructions)
        self.dead_root = any(f.is_one for f in minimal)
        blockers = {f.letters for f in minimal if not f.is_one}
        prefixes = {()}
        for f in blockers:
            for k in range(1, len(f)):
                prefixes.add(f[:k])
        self.states = sorted(prefixes, key=lambda p: (len(p), p))
        index = {p: i for i, p in enumerate(self.states)}
        self.transitions: list[list[int | None]] = []
        for state in self.states:
            row: list[int | None] = []
            for a in range(ngens):
                w = state + (a,)
                target: int | None = None
                for start in range(len(w) + 1):
                    suffix = w[start:]
                    if suffix in blockers:
                        target = None
                        break
                    if suffix in index:
                        target = index[suffix]
                        break
                row.append(target)
            self.transitions.append(row)

    def counts(self, max_degree: int, weights: Sequence[int] | None = None) -> list[int]:
        """Number of normal words per degree, 0..max_degree."""
        weights = list(weights) if weights is not None else [1] * self.ngens
        if self.dead_root:
            return [0] * (max_degree + 1)
        table = [[0] * len(self.states) for _ in range(max_degree + 1)]
        table[0][0] = 1
        for degree in range(max_degree + 1):
            level = table[degree]
            for state, count in enumerate(level):
                if count == 0:
                    continue
                for a in range(self.ngens):
                    target = self.transitions[state][a]
                    nd = degree + weights[a]
                    if target is not None and nd <= max_degree:
                        table[nd][target] += count
        return [sum(level) for level in table]


def _minimal_factors(words: Iterable[Word]) -> list[Word]:
    """Drop any word containing another of the set as a factor."""
    unique = sorted(set(words), key=lambda w: (w.degree, w.letters))
    out: list[Word] = []
    for w in unique:
        if not any(w.contains_factor(f) for f in out):
            out.append(w)
    return out


def check_homogeneous(presentation: Presentation) -> None:
    """Raise GradingError naming the first inhomogeneous relation."""
    for f in presentation.relations:
        if f.homogeneous_degree() is None:
            raise GradingError(
                "relation is not homogeneous for the generator degrees: "
                + format_polynomial(f)
            )


def _leading_monomials(presentation: Presentation, basis):
    ring = presentation.ring
    if basis is None:
        basis = []
    if isinstance(basis, GroebnerBasis):
        return basis.leading_monomials()
    if isinstance(basis, CompletionResult):
        return basis.leading_words()
    out = []
    for item in basis:
        if isinstance(item, Polynomial):
            out.append(item.leading_monomial(ring.order))
        else:
            ring.check_monomial(item)
            out.append(item)
    return out


def series_from_normal_words(
    presentation: Presentation, basis, max_degree: int
) -> TruncatedSeries:
    """Hilbert series by counting normal monomials/words per weighted degree.

    `basis` supplies the leading terms: a GroebnerBasis, a CompletionResult,
    or a plain list of monomials/words (leading terms of a monomial ideal,
    which is complete by itself).  A CompletionResult must be saturated or
    completed at least to max_degree, otherwise leading words above its
    bound could be missing and the count would silently overestimate.
    """
    check_homogeneous(presentation)
    if isinstance(basis, CompletionResult):
        if not basis.saturated and basis.complete_to_degree < max_degree:
            raise SaturationError(
                f"basis complete only to degree {basis.complete_to_degree}, "
                f"not saturated; cannot certify counts to degree {max_degree}"
            )
    ring = presentation.ring
    lts = _leading_monomials(presentation, basis)
    if ring.kind == COMMUTATIVE:
        return _commutative_counts(ring, lts, max_degree)
    relevant = [w for w in lts if ring.weighted_degree(w) <= max_degree]
    automaton = FactorAutomaton(relevant, ring.ngens)
    counts = automaton.counts(max_degree, ring.degrees)
    return TruncatedSeries(tuple(counts))


def _commutative_counts(
    ring: RingContext, lts: Sequence[CommMonomial], max_degree: int
) -> TruncatedSeries:
    counts = [0] * (max_degree + 1)
    if any(m.is_one for m in lts):
        return TruncatedSeries(tuple(counts))

    weights = ring.degrees

    def walk(index: int, exps: list[int], degree: int) -> None:
        if index == ring.ngens:
            m = CommMonomial(exps)
            if not any(lt.divides(m) for lt in lts):
                counts[degree] += 1
            return
        w = weights[index]
        e = 0
        while degree + e * w <= max_degree:
            exps[index] = e
            walk(index + 1, exps, degree + e * w)
            e += 1
        exps[index] = 0

    walk(0, [0] * ring.ngens, 0)
    return TruncatedSeries(tuple(counts))
