"""Ring contexts and exact rational polynomials over both monomial kinds.

Coefficients are `fractions.Fraction`: the divisions by leading
coefficients performed during reduction must be exact, or chains of
reductions would not terminate where they should.

All values are immutable after construction and every operation is a pure
function, so polynomials can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import RingMismatchError, ZeroPolynomialError
from .monomials import COMMUTATIVE, NONCOMMUTATIVE, CommMonomial, Monomial, Word
from .ordering import DEGLEX, LEX, MonomialOrder, default_order

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class RingContext:
    """The ambient ring: kind, named generators, degrees, and term order.

    Generator precedence for the ordering is the declaration order
    (first generator is the greatest).  Degrees default to 1; weighted
    degrees only matter for Hilbert series, never for Groebner runs.
    """

    kind: str
    generators: tuple[str, ...]
    degrees: tuple[int, ...] = ()
    order_scheme: str = DEGLEX

    def __post_init__(self):
        if self.kind not in (COMMUTATIVE, NONCOMMUTATIVE):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("generator names must be unique")
        if not gens:
            raise ValueError("at least one generator is required")
        object.__setattr__(self, "generators", gens)
        degrees = tuple(self.degrees) or (1,) * len(gens)
        if len(degrees) != len(gens):
            raise ValueError("one degree per generator is required")
        if any(d < 1 for d in degrees):
            raise ValueError("generator degrees must be >= 1")
        object.__setattr__(self, "degrees", degrees)
        if self.order_scheme == LEX and self.kind == NONCOMMUTATIVE:
            raise ValueError("lex unsupported for noncommutative rings")
        if self.order_scheme not in (LEX, DEGLEX):
            raise ValueError(f"unknown ordering scheme {self.order_scheme!r}")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def order(self) -> MonomialOrder:
        return default_order(self.order_scheme, self.ngens)

    @property
    def naturally_graded(self) -> bool:
        return all(d == 1 for d in self.degrees)

    def gen_index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise ValueError(f"unknown generator {name!r}") from None

    def one_monomial(self) -> Monomial:
        if self.kind == COMMUTATIVE:
            return CommMonomial.one(self.ngens)
        return Word.one()

    def monomial(self, spec) -> Monomial:
        """Build a monomial: exponent map/vector (commutative) or letter
        sequence by name/index (words)."""
        if self.kind == COMMUTATIVE:
            if isinstance(spec, Mapping):
                exps = [0] * self.ngens
                for name, e in spec.items():
                    exps[self.gen_index(name)] = e
                return CommMonomial(exps)
            return CommMonomial(spec)
        letters = [
            a if isinstance(a, int) else self.gen_index(a) for a in spec
        ]
        if any(a >= self.ngens for a in letters):
            raise ValueError("generator index out of range")
        return Word(letters)

    def check_monomial(self, m: Monomial) -> None:
        if self.kind == COMMUTATIVE:
            if not isinstance(m, CommMonomial) or m.arity != self.ngens:
                raise RingMismatchError(f"{m!r} does not belong to {self}")
        else:
            if not isinstance(m, Word) or any(a >= self.ngens for a in m.letters):
                raise RingMismatchError(f"{m!r} does not belong to {self}")

    def weighted_degree(self, m: Monomial) -> int:
        return m.weighted_degree(self.degrees)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def constant(self, c: Coefficient) -> Polynomial:
        return Polynomial(self, {self.one_monomial(): Fraction(c)})

    def variable(self, name: str) -> Polynomial:
        i = self.gen_index(name)
        if self.kind == COMMUTATIVE:
            m = self.monomial({name: 1})
        else:
            m = Word((i,))
        return Polynomial(self, {m: Fraction(1)})

    def polynomial(self, terms: Iterable[tuple[Coefficient, Monomial]]) -> Polynomial:
        acc: dict[Monomial, Fraction] = {}
        for c, m in terms:
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        return Polynomial(self, acc)


class Polynomial:
    """A finite map monomial -> nonzero rational, tagged by its ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingContext, terms: Mapping[Monomial, Coefficient]):
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            ring.check_monomial(m)
            c = Fraction(c)
            if c:
                clean[m] = c
        self.ring = ring
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(m.is_one for m in self.terms)

    def support(self) -> list[Monomial]:
        return list(self.terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def _check_ring(self, other: Polynomial) -> None:
        if not isinstance(other, Polynomial) or other.ring != self.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return Polynomial(self.ring, acc)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def scale(self, c: Coefficient) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self.ring, {m: c * v for m, v in self.terms.items()})

    def term_multiple(
        self,
        c: Coefficient = 1,
        left: Monomial | None = None,
        right: Monomial | None = None,
    ) -> Polynomial:
        """c * left * self * right.

        For commutative rings the sides are interchangeable; for words they
        are the two explicit cofactors of a two-sided monomial multiple.
        """
        one = self.ring.one_monomial()
        left = one if left is None else left
        right = one if right is None else right
        self.ring.check_monomial(left)
        self.ring.check_monomial(right)
        c = Fraction(c)
        acc: dict[Monomial, Fraction] = {}
        for m, v in self.terms.items():
            key = left * m * right
            acc[key] = acc.get(key, Fraction(0)) + c * v
        return Polynomial(self.ring, acc)

    def leading_term(self, order: MonomialOrder | None = None) -> tuple[Monomial, Fraction]:
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        order = order or self.ring.order
        m = max(self.terms, key=order.sort_key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        _, lc = self.leading_term(order)
        if lc == 1:
            return self
        return self.scale(Fraction(1) / lc)

    @property
    def degree(self) -> int:
        """Largest natural (unweighted) degree in the support; -1 for zero."""
        return max((m.degree for m in self.terms), default=-1)

    def homogeneous_degree(self) -> int | None:
        """The common weighted degree of all terms, or None if mixed."""
        degs = {self.ring.weighted_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None if degs else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self) -> str:
        from .presentation import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"
