"""Two-sided reduction and degree-bounded completion in free algebras.

Completion in a free algebra need not terminate, so the engine processes
every overlap whose overlap word fits under an explicit degree bound and
reports whether anything had to be skipped above it.  When nothing was
skipped the returned basis is a complete Groebner basis (`saturated`);
otherwise its leading words are still exact up to the bound, which is what
the counting layers rely on.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, RingContext
from .errors import GradingError, NotReducibleError, ZeroPolynomialError
from .monomials import NONCOMMUTATIVE, Word
from .ordering import MonomialOrder


def find_factor(w: Word, f: Word) -> tuple[int, ...]:
    """All positions at which f occurs in w as a contiguous factor."""
    if f.is_one:
        raise ValueError("factor must be nonempty")
    return w.occurrences(f)


@dataclass(frozen=True)
class Overlap:
    """A proper suffix-prefix overlap between two leading words.

    With u the leading word in the `first` role and v in the `second`,
    the witness is u * right == left * v, both sides the overlap word,
    and left is strictly shorter than u.
    """

    first: int
    second: int
    left: Word
    right: Word
    word: Word

    @property
    def kind(self) -> str:
        return "self-overlap" if self.first == self.second else "overlap"

    @property
    def degree(self) -> int:
        return self.word.degree


def _suffix_prefix_overlaps(u: Word, v: Word) -> list[tuple[Word, Word, Word]]:
    out = []
    for k in range(1, min(u.degree, v.degree)):
        if u.letters[u.degree - k:] == v.letters[:k]:
            left = Word(u.letters[:u.degree - k])
            right = Word(v.letters[k:])
            out.append((left, right, u * right))
    return out


def enumerate_overlaps(f: Polynomial, g: Polynomial, order: MonomialOrder) -> list[Overlap]:
    """All proper suffix-prefix overlaps of lt(f) with lt(g), both role
    orders; containments are left to reduction and not reported."""
    u = f.leading_monomial(order)
    v = g.leading_monomial(order)
    if f == g:
        return [Overlap(0, 0, left, right, word)
                for left, right, word in _suffix_prefix_overlaps(u, u)]
    overlaps = [Overlap(0, 1, left, right, word)
                for left, right, word in _suffix_prefix_overlaps(u, v)]
    overlaps.extend(Overlap(1, 0, left, right, word)
                    for left, right, word in _suffix_prefix_overlaps(v, u))
    return overlaps


def reduce_once(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Cancel lt(f) using the leftmost occurrence of lt(g) inside it."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("reduction needs nonzero polynomials")
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    positions = find_factor(lm_f, lm_g)
    if not positions:
        raise NotReducibleError(f"lt({g!r}) is not a factor of lt({f!r})")
    i = positions[0]
    left = lm_f.prefix(i)
    right = Word(lm_f.letters[i + lm_g.degree:])
    return f - g.term_multiple(lc_f / lc_g, left=left, right=right)


def _pick_reducer(m: Word, reducers, order):
    best = None
    for index, g in enumerate(reducers):
        lm = g.leading_monomial(order)
        positions = m.occurrences(lm)
        if positions:
            key = (order.sort_key(lm), index)
            if best is None or key < best[0]:
                best = (key, g, lm, positions[0])
    return best


def normal_form(f: Polynomial, reducers, order: MonomialOrder) -> Polynomial:
    """Fully reduce every term of f; no term of the result contains any
    reducer's leading word as a factor."""
    reducers = [g for g in reducers if not g.is_zero]
    r = f
    while not r.is_zero:
        step = None
        for m in sorted(r.terms, key=order.sort_key, reverse=True):
            found = _pick_reducer(m, reducers, order)
            if found is not None:
                step = (m, *found[1:])
                break
        if step is None:
            return r
        m, g, lm_g, position = step
        left = m.prefix(position)
        right = Word(m.letters[position + lm_g.degree:])
        r = r - g.term_multiple(r.terms[m] / g.coefficient(lm_g), left=left, right=right)
    return r


def s_polynomial(
    f: Polynomial, g: Polynomial, overlap: Overlap, order: MonomialOrder | None = None
) -> Polynomial:
    """(1/lc) f * right - (1/lc) left * g for the overlap's role order."""
    pair = (f, g)
    a = pair[overlap.first]
    b = pair[overlap.second]
    order = order or a.ring.order
    lm_a, lc_a = a.leading_term(order)
    lm_b, lc_b = b.leading_term(order)
    if lm_a * overlap.right != overlap.word or overlap.left * lm_b != overlap.word:
        raise ValueError("invalid overlap witness for these polynomials")
    if overlap.left.degree >= lm_a.degree:
        raise ValueError("invalid overlap witness: left cofactor too long")
    return a.term_multiple(Fraction(1) / lc_a, right=overlap.right) - b.term_multiple(
        Fraction(1) / lc_b, left=overlap.left
    )


@dataclass(frozen=True)
class CompletionResult:
    basis: tuple[Polynomial, ...]
    complete_to_degree: int
    saturated: bool
    order: MonomialOrder

    @property
    def ring(self) -> RingContext:
        return self.basis[0].ring

    def leading_words(self) -> list[Word]:
        return [g.leading_monomial(self.order) for g in self.basis]

    @property
    def is_trivial(self) -> bool:
        return any(g.is_constant and not g.is_zero for g in self.basis)


class _TrivialIdeal(Exception):
    pass


def complete_to_degree(
    relations, max_degree: int, order: MonomialOrder | None = None
) -> CompletionResult:
    """Run completion, resolving every overlap with overlap word of degree
    <= max_degree.

    The surviving elements are monic and inter-reduced: their leading words
    form an antichain under the factor relation and every tail is normal.
    Leading words of degree <= max_degree agree with those of the full
    (possibly infinite) Groebner basis.
    """
    relations = list(relations)
    if not relations:
        raise ValueError("at least one relation is required")
    if any(f.is_zero for f in relations):
        raise ValueError("zero relation")
    ring = relations[0].ring
    if ring.kind != NONCOMMUTATIVE:
        raise ValueError("completion needs a noncommutative ring")
    if not ring.naturally_graded:
        raise GradingError("Groebner computation requires all generator degrees = 1")
    for f in relations:
        if f.ring != ring:
            raise ValueError("relations live in different rings")
    order = order or ring.order
    top = max(f.leading_monomial(order).degree for f in relations)
    if max_degree < top:
        raise ValueError(
            f"max_degree {max_degree} is below the largest relation degree {top}"
        )

    entries: dict[int, Polynomial] = {}
    pending: deque[Polynomial] = deque(relations)
    heap: list[tuple[int, int, int, int, Overlap]] = []
    skipped: list[tuple[int, int]] = []
    next_id = 0
    seq = 0

    def integrate(f: Polynomial) -> None:
        nonlocal next_id, seq
        h = normal_form(f, list(entries.values()), order)
        if h.is_zero:
            return
        if h.is_constant:
            raise _TrivialIdeal
        h = h.monic(order)
        lm = h.leading_monomial(order)
        for other_id in list(entries):
            g = entries[other_id]
            if g.leading_monomial(order).contains_factor(lm):
                del entries[other_id]
                pending.append(g)
        new_id = next_id
        next_id += 1
        candidates = [
            Overlap(new_id, new_id, left, right, word)
            for left, right, word in _suffix_prefix_overlaps(lm, lm)
        ]
        for other_id, g in entries.items():
            lm_g = g.leading_monomial(order)
            candidates.extend(
                Overlap(new_id, other_id, left, right, word)
                for left, right, word in _suffix_prefix_overlaps(lm, lm_g)
            )
            candidates.extend(
                Overlap(other_id, new_id, left, right, word)
                for left, right, word in _suffix_prefix_overlaps(lm_g, lm)
            )
        entries[new_id] = h
        for overlap in candidates:
            if overlap.degree <= max_degree:
                seq += 1
                heapq.heappush(
                    heap, (overlap.degree, seq, overlap.first, overlap.second, overlap)
                )
            else:
                skipped.append((overlap.first, overlap.second))

    try:
        while pending or heap:
            if pending:
                integrate(pending.popleft())
                continue
            _, _, ia, ib, overlap = heapq.heappop(heap)
            if ia not in entries or ib not in entries:
                continue
            a, b = entries[ia], entries[ib]
            local = Overlap(0, 0 if ia == ib else 1, overlap.left, overlap.right, overlap.word)
            integrate(s_polynomial(a, b, local, order))
    except _TrivialIdeal:
        return CompletionResult((ring.constant(1),), max_degree, True, order)

    basis = []
    ordered = [entries[i] for i in sorted(entries)]
    for i, g in enumerate(ordered):
        others = ordered[:i] + ordered[i + 1:]
        basis.append(normal_form(g, others, order).monic(order))
    basis.sort(key=lambda g: order.sort_key(g.leading_monomial(order)))
    saturated = not any(ia in entries and ib in entries for ia, ib in skipped)
    return CompletionResult(tuple(basis), max_degree, saturated, order)


def normal_words(lts, ngens: int, max_degree: int,
                 order: MonomialOrder | None = None) -> list[list[Word]]:
    """Per degree d <= max_degree, every word avoiding all of lts as a factor.

    Redundant members of lts are tolerated.  Within a degree, words come
    greatest first under the order (declaration precedence by default).
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    obstructions = [f.letters for f in lts]
    if any(not f for f in obstructions):
        return [[] for _ in range(max_degree + 1)]
    out: list[list[Word]] = [[] for _ in range(max_degree + 1)]
    out[0].append(Word())

    def blocked(letters: tuple[int, ...]) -> bool:
        # prefixes are already clean, so only check occurrences at the end
        n = len(letters)
        return any(
            n >= len(f) and letters[n - len(f):] == f for f in obstructions
        )

    frontier = [()]
    for degree in range(1, max_degree + 1):
        new_frontier = []
        for stem in frontier:
            for a in range(ngens):
                candidate = stem + (a,)
                if not blocked(candidate):
                    new_frontier.append(candidate)
        frontier = new_frontier
        out[degree] = [Word(w) for w in frontier]
    if order is not None:
        for level in out:
            level.sort(key=order.sort_key, reverse=True)
    return out


def diamond_report(result: CompletionResult) -> list[tuple[int, int, Polynomial]]:
    """Overlap S-polynomials (overlap word within the bound) that fail to
    reduce to zero; empty means the truncated diamond criterion holds."""
    order = result.order
    failures = []
    basis = result.basis
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            for overlap in enumerate_overlaps(basis[i], basis[j], order):
                if overlap.degree > result.complete_to_degree:
                    continue
                r = normal_form(s_polynomial(basis[i], basis[j], overlap, order), basis, order)
                if not r.is_zero:
                    failures.append((i, j, r))
    return failures
