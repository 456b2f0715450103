"""Buchberger completion and normal forms in commutative polynomial rings.

Pair selection is first-in-first-out with the coprime-leading-term skip;
reducers for a term are chosen smallest-leading-term-first, then by
insertion index, so every run is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from .algebra import Polynomial, RingContext
from .errors import GradingError, NotReducibleError, ZeroPolynomialError
from .monomials import COMMUTATIVE, CommMonomial
from .ordering import MonomialOrder


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = False

    @property
    def ring(self) -> RingContext:
        return self.elements[0].ring

    def leading_monomials(self) -> list[CommMonomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    @property
    def is_trivial(self) -> bool:
        """True when the ideal is the whole ring (basis is {1})."""
        return any(g.is_constant and not g.is_zero for g in self.elements)


def divides(m1: CommMonomial, m2: CommMonomial) -> tuple[bool, CommMonomial | None]:
    """Whether m1 | m2; on success also the quotient q with m2 = q * m1."""
    if m1.divides(m2):
        return True, m2 / m1
    return False, None


def _require_commutative(relations) -> RingContext:
    ring = relations[0].ring
    if ring.kind != COMMUTATIVE:
        raise ValueError("commutative Groebner routines need a commutative ring")
    if not ring.naturally_graded:
        raise GradingError("Groebner computation requires all generator degrees = 1")
    for f in relations:
        if f.ring != ring:
            raise ValueError("relations live in different rings")
    return ring


def reduce_once(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """One reduction step of f by g: cancel lt(f) using a multiple of g."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("reduction needs nonzero polynomials")
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    ok, quotient = divides(lm_g, lm_f)
    if not ok:
        raise NotReducibleError(f"lt({g!r}) does not divide lt({f!r})")
    return f - g.term_multiple(lc_f / lc_g, left=quotient)


def _pick_reducer(m, reducers, order):
    best = None
    for index, g in enumerate(reducers):
        lm = g.leading_monomial(order)
        if lm.divides(m):
            key = (order.sort_key(lm), index)
            if best is None or key < best[0]:
                best = (key, g, lm)
    return best


def normal_form(f: Polynomial, reducers, order: MonomialOrder) -> Polynomial:
    """Fully reduce every term of f modulo the reducers.

    The result has no term divisible by any reducer's leading monomial, and
    f minus the result lies in the ideal the reducers generate.
    """
    reducers = [g for g in reducers if not g.is_zero]
    r = f
    while not r.is_zero:
        step = None
        for m in sorted(r.terms, key=order.sort_key, reverse=True):
            found = _pick_reducer(m, reducers, order)
            if found is not None:
                step = (m, found[1], found[2])
                break
        if step is None:
            return r
        m, g, lm_g = step
        r = r - g.term_multiple(r.terms[m] / g.coefficient(lm_g), left=m / lm_g)
    return r


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Cancellation combination over the least common multiple of the lts."""
    lm_f, lc_f = f.leading_term(order)
    lm_g, lc_g = g.leading_term(order)
    lcm = lm_f.lcm(lm_g)
    return f.term_multiple(Fraction(1) / lc_f, left=lcm / lm_f) - g.term_multiple(
        Fraction(1) / lc_g, left=lcm / lm_g
    )


def _trivial_basis(ring: RingContext, order: MonomialOrder) -> GroebnerBasis:
    return GroebnerBasis((ring.constant(1),), order, reduced=True)


def buchberger(relations, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Complete the relations to a Groebner basis of the ideal they generate."""
    relations = list(relations)
    if not relations:
        raise ValueError("at least one relation is required")
    if any(f.is_zero for f in relations):
        raise ValueError("zero relation")
    ring = _require_commutative(relations)
    order = order or ring.order

    basis: list[Polynomial] = []
    pairs: deque[tuple[int, int]] = deque()

    def add(h: Polynomial) -> None:
        index = len(basis)
        basis.append(h.monic(order))
        pairs.extend((i, index) for i in range(index))

    for f in relations:
        h = normal_form(f, basis, order)
        if h.is_zero:
            continue
        if h.is_constant:
            return _trivial_basis(ring, order)
        add(h)
    while pairs:
        i, j = pairs.popleft()
        lm_i = basis[i].leading_monomial(order)
        lm_j = basis[j].leading_monomial(order)
        if lm_i.is_coprime_with(lm_j):
            continue
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h.is_zero:
            continue
        if h.is_constant:
            return _trivial_basis(ring, order)
        add(h)
    return GroebnerBasis(tuple(basis), order)


def reduce_basis(basis: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis: monic elements, minimal lts, normal tails."""
    order = basis.order
    if basis.is_trivial:
        return _trivial_basis(basis.ring, order)
    by_lt = sorted(basis.elements, key=lambda g: order.sort_key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in by_lt:
        lm = g.leading_monomial(order)
        if not any(h.leading_monomial(order).divides(lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    return GroebnerBasis(tuple(reduced), order, reduced=True)


def is_member(f: Polynomial, basis: GroebnerBasis) -> bool:
    return normal_form(f, basis.elements, order=basis.order).is_zero


def normal_monomials(basis: GroebnerBasis, max_degree: int) -> list[list[CommMonomial]]:
    """Per degree d <= max_degree, the monomials no leading term divides.

    Within a degree, monomials come greatest first under the basis order.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    order = basis.order
    ngens = basis.ring.ngens
    lts = basis.leading_monomials()
    out = []
    for degree in range(max_degree + 1):
        level = []
        for combo in combinations_with_replacement(range(ngens), degree):
            exps = [0] * ngens
            for g in combo:
                exps[g] += 1
            m = CommMonomial(exps)
            if not any(lt.divides(m) for lt in lts):
                level.append(m)
        level.sort(key=order.sort_key, reverse=True)
        out.append(level)
    return out


def diamond_report(basis: GroebnerBasis) -> list[tuple[int, int, Polynomial]]:
    """Pairs whose S-polynomial does not reduce to zero; empty means the
    diamond-lemma criterion holds and the elements form a Groebner basis."""
    order = basis.order
    failures = []
    for i in range(len(basis.elements)):
        for j in range(i, len(basis.elements)):
            s = s_polynomial(basis.elements[i], basis.elements[j], order)
            r = normal_form(s, basis.elements, order)
            if not r.is_zero:
                failures.append((i, j, r))
    return failures
