"""Parse and print algebra presentations.

The input format is line based, one directive per line, `#` starts a
comment, blank lines are skipped, LF and CRLF both accepted:

    ring commutative|noncommutative
    vars <name> <name> ...          # precedence order, first = greatest
    deg <name> <positive int>       # optional, default 1
    order lex|deglex                # optional, default deglex
    rel <expression>                # any number of lines

Directives must appear in that order (deg/order may interleave).  An
expression is a sum of terms; a term is rational literals and powered
variables joined by `*`.  Adjacency without `*` is not accepted: in a free
algebra `xy` the product order is significant, so it must be spelled
`x*y`.  Exponents are positive integers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, RingContext
from .errors import PresentationError
from .monomials import COMMUTATIVE, NONCOMMUTATIVE, CommMonomial, Monomial, Word
from .ordering import DEGLEX, LEX, MonomialOrder


@dataclass(frozen=True)
class Presentation:
    """A ring together with the relations cutting out the quotient algebra."""

    ring: RingContext
    relations: tuple[Polynomial, ...]


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<number>\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^])"
    r"|(?P<bad>.)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


def _lex_line(line: str, line_no: int) -> list[_Token]:
    hash_pos = line.find("#")
    if hash_pos >= 0:
        line = line[:hash_pos]
    tokens = []
    for match in _TOKEN_RE.finditer(line):
        kind = match.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise PresentationError(
                f"unexpected character {match.group()!r}", line_no, match.start() + 1
            )
        tokens.append(_Token(kind, match.group(), match.start() + 1))
    return tokens


class _RelationParser:
    """Recursive descent over one `rel` line's tokens."""

    def __init__(self, tokens: list[_Token], line_no: int, ring: RingContext):
        self.tokens = tokens
        self.line_no = line_no
        self.ring = ring
        self.pos = 0

    def error(self, message: str, token: _Token | None = None) -> PresentationError:
        if token is None:
            column = self.tokens[-1].column + len(self.tokens[-1].text) if self.tokens else 1
            return PresentationError(message, self.line_no, column)
        return PresentationError(message, self.line_no, token.column)

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> _Token | None:
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise self.error("empty relation")
        terms = []
        sign = self._leading_sign()
        while True:
            terms.append(self._term(sign))
            tok = self.take()
            if tok is None:
                break
            if tok.kind == "op" and tok.text in "+-":
                sign = 1 if tok.text == "+" else -1
            else:
                raise self.error("expected '+', '-', or end of line", tok)
        poly = self.ring.polynomial(terms)
        if poly.is_zero:
            raise PresentationError("relation is zero", self.line_no, self.tokens[0].column)
        return poly

    def _leading_sign(self) -> int:
        tok = self.peek()
        if tok is not None and tok.kind == "op" and tok.text in "+-":
            self.take()
            return 1 if tok.text == "+" else -1
        return 1

    def _term(self, sign: int) -> tuple[Fraction, Monomial]:
        coeff = Fraction(sign)
        exps = [0] * self.ring.ngens
        letters: list[int] = []
        while True:
            coeff = self._factor(coeff, exps, letters)
            tok = self.peek()
            if tok is not None and tok.kind == "op" and tok.text == "*":
                self.take()
                continue
            break
        if self.ring.kind == COMMUTATIVE:
            return coeff, CommMonomial(exps)
        return coeff, Word(letters)

    def _factor(self, coeff: Fraction, exps: list[int], letters: list[int]) -> Fraction:
        tok = self.take()
        if tok is None:
            raise self.error("expected a coefficient or variable")
        if tok.kind == "number":
            nxt = self.peek()
            if nxt is not None and nxt.kind == "op" and nxt.text == "^":
                raise self.error("'^' applies to variables only", nxt)
            return coeff * Fraction(tok.text)
        if tok.kind != "name":
            raise self.error("expected a coefficient or variable", tok)
        try:
            index = self.ring.gen_index(tok.text)
        except ValueError:
            raise self.error(f"unknown variable {tok.text!r}", tok) from None
        exponent = 1
        nxt = self.peek()
        if nxt is not None and nxt.kind == "op" and nxt.text == "^":
            self.take()
            etok = self.take()
            if etok is None or etok.kind != "number" or "/" in etok.text:
                raise self.error("exponent must be a positive integer", etok or nxt)
            exponent = int(etok.text)
            if exponent == 0:
                raise self.error("exponent must be positive", etok)
        if self.ring.kind == COMMUTATIVE:
            exps[index] += exponent
        else:
            letters.extend([index] * exponent)
        return coeff


def parse_presentation(text: str) -> Presentation:
    """Parse a presentation file; errors carry line and column."""
    kind = None
    gens: tuple[str, ...] | None = None
    degrees: dict[str, int] = {}
    scheme = None
    relations: list[Polynomial] = []
    ring: RingContext | None = None

    def build_ring(line_no: int) -> RingContext:
        nonlocal ring
        if kind is None:
            raise PresentationError("ring kind not declared", line_no, 1)
        if gens is None:
            raise PresentationError("vars not declared", line_no, 1)
        if ring is None:
            degs = tuple(degrees.get(name, 1) for name in gens)
            ring = RingContext(kind, gens, degs, scheme or DEGLEX)
        return ring

    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    for line_no, raw in enumerate(lines, start=1):
        tokens = _lex_line(raw, line_no)
        if not tokens:
            continue
        head = tokens[0]
        if head.kind != "name":
            raise PresentationError("expected a directive", line_no, head.column)
        directive = head.text
        body = tokens[1:]
        if directive == "ring":
            if kind is not None:
                raise PresentationError("duplicate ring directive", line_no, head.column)
            if len(body) != 1 or body[0].text not in (COMMUTATIVE, NONCOMMUTATIVE):
                raise PresentationError(
                    "expected 'ring commutative' or 'ring noncommutative'",
                    line_no,
                    body[0].column if body else head.column + len(head.text),
                )
            kind = body[0].text
        elif directive == "vars":
            if kind is None:
                raise PresentationError("ring must be declared before vars", line_no, head.column)
            if gens is not None:
                raise PresentationError("duplicate vars directive", line_no, head.column)
            if not body:
                raise PresentationError("vars needs at least one name", line_no, head.column)
            names = []
            for tok in body:
                if tok.kind != "name":
                    raise PresentationError("expected a variable name", line_no, tok.column)
                if tok.text in names:
                    raise PresentationError(f"duplicate variable {tok.text!r}", line_no, tok.column)
                names.append(tok.text)
            gens = tuple(names)
        elif directive == "deg":
            if gens is None:
                raise PresentationError("vars must be declared before deg", line_no, head.column)
            if relations:
                raise PresentationError("deg must precede relations", line_no, head.column)
            if len(body) != 2 or body[0].kind != "name" or body[1].kind != "number":
                raise PresentationError("expected 'deg <name> <positive int>'", line_no, head.column)
            if body[0].text not in gens:
                raise PresentationError(f"unknown variable {body[0].text!r}", line_no, body[0].column)
            if "/" in body[1].text or int(body[1].text) < 1:
                raise PresentationError("degree must be a positive integer", line_no, body[1].column)
            degrees[body[0].text] = int(body[1].text)
        elif directive == "order":
            if scheme is not None:
                raise PresentationError("duplicate order directive", line_no, head.column)
            if relations:
                raise PresentationError("order must precede relations", line_no, head.column)
            if len(body) != 1 or body[0].text not in (LEX, DEGLEX):
                raise PresentationError(
                    "expected 'order lex' or 'order deglex'",
                    line_no,
                    body[0].column if body else head.column + len(head.text),
                )
            if body[0].text == LEX and kind == NONCOMMUTATIVE:
                raise PresentationError(
                    "lex unsupported for noncommutative rings", line_no, body[0].column
                )
            scheme = body[0].text
        elif directive == "rel":
            relations.append(_RelationParser(body, line_no, build_ring(line_no)).parse())
        else:
            raise PresentationError(f"unknown directive {directive!r}", line_no, head.column)

    return Presentation(build_ring(len(lines)), tuple(relations))


def format_monomial(m: Monomial, ring: RingContext) -> str:
    """Render a monomial with `*` products and `^` powers; 1 for the unit."""
    ring.check_monomial(m)
    parts = []
    if isinstance(m, CommMonomial):
        for name, e in zip(ring.generators, m.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
    else:
        run_letter, run_len = None, 0
        for a in list(m.letters) + [None]:
            if a == run_letter:
                run_len += 1
                continue
            if run_letter is not None:
                name = ring.generators[run_letter]
                parts.append(name if run_len == 1 else f"{name}^{run_len}")
            run_letter, run_len = a, 1
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, order: MonomialOrder | None = None) -> str:
    """Render with terms in strictly decreasing order; parses back to p."""
    if p.is_zero:
        return "0"
    order = order or p.ring.order
    pieces = []
    for m in sorted(p.terms, key=order.sort_key, reverse=True):
        c = p.terms[m]
        mag = abs(c)
        mono = format_monomial(m, p.ring)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{' - ' if c < 0 else ' + '}{body}")
    return "".join(pieces)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """Parse one relation expression against an existing ring."""
    tokens = _lex_line(text, 1)
    return _RelationParser(tokens, 1, ring).parse()
