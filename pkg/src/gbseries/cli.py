"""Command-line front end.

Subcommands: gb, hilbert, chains, normal-words, check.  Output is
deterministic and diffable; `--format records` emits one machine-readable
fact per line.  Exit codes: 0 ok, 1 check failure or method disagreement,
2 parse/usage errors, 3 grading errors, 4 basis not saturated for the
requested degree.
"""

from __future__ import annotations

import argparse
import sys

from . import chains as chains_mod
from . import commutative, noncommutative, series
from .algebra import Polynomial, RingContext
from .chains import ObstructionSet
from .errors import GradingError, PresentationError, SaturationError
from .monomials import COMMUTATIVE, NONCOMMUTATIVE
from .presentation import Presentation, format_monomial, format_polynomial, parse_presentation
from .series import TruncatedSeries

DEFAULT_MAX_DEGREE = 12
_TEXT_WORD_CAP = 50
_TEXT_CHAIN_CAP = 10


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="gbseries",
        description="Groebner bases and Hilbert series of finitely presented algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="presentation file")
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE,
                       help=f"truncation/completion degree (default {DEFAULT_MAX_DEGREE})")
        p.add_argument("--gb-degree", type=int, default=None,
                       help="completion bound override (default: --max-degree)")
        p.add_argument("--order", choices=["lex", "deglex"], default=None,
                       help="override the file's term order")
        p.add_argument("--format", choices=["text", "records"], default="text",
                       dest="output_format")

    p_gb = sub.add_parser("gb", help="compute a (reduced) Groebner basis")
    common(p_gb)
    p_gb.add_argument("--reduced", action="store_true",
                      help="reduce the commutative basis (noncommutative output is always inter-reduced)")

    p_h = sub.add_parser("hilbert", help="compute the Hilbert series")
    common(p_h)
    p_h.add_argument("--method", choices=["normal-words", "chains", "closed-form", "all"],
                     default="normal-words")

    p_c = sub.add_parser("chains", help="enumerate chains and the series they give")
    common(p_c)

    p_n = sub.add_parser("normal-words", help="list normal words/monomials per degree")
    common(p_n)

    p_k = sub.add_parser("check", help="verify diamond lemma and the chain-series identity")
    common(p_k)

    return parser.parse_args(argv)


def _load(args) -> Presentation:
    try:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise PresentationError(f"cannot read input: {exc}", 0, 0) from exc
    pres = parse_presentation(text)
    if args.order and args.order != pres.ring.order_scheme:
        ring = RingContext(pres.ring.kind, pres.ring.generators,
                           pres.ring.degrees, args.order)
        pres = Presentation(ring, tuple(Polynomial(ring, f.terms) for f in pres.relations))
    if args.max_degree < 1:
        raise ValueError("--max-degree must be >= 1")
    return pres


def _completion_bound(args) -> int:
    return args.gb_degree if args.gb_degree is not None else args.max_degree


def _compute_basis(pres: Presentation, args):
    """None when there are no relations, else a GroebnerBasis/CompletionResult."""
    if not pres.relations:
        return None
    if pres.ring.kind == COMMUTATIVE:
        return commutative.buchberger(pres.relations, pres.ring.order)
    return noncommutative.complete_to_degree(
        pres.relations, _completion_bound(args), pres.ring.order
    )


def _require_counting_degree(basis, max_degree: int) -> None:
    if isinstance(basis, noncommutative.CompletionResult):
        if not basis.saturated and basis.complete_to_degree < max_degree:
            raise SaturationError(
                f"basis complete only to degree {basis.complete_to_degree} and not "
                f"saturated; counts to degree {max_degree} are not certified"
            )


def _sorted_elements(basis) -> list[Polynomial]:
    if basis is None:
        return []
    order = basis.order
    return sorted(basis.elements if hasattr(basis, "elements") else basis.basis,
                  key=lambda g: order.sort_key(g.leading_monomial(order)))


def _cmd_gb(pres: Presentation, args) -> int:
    basis = _compute_basis(pres, args)
    if pres.ring.kind == COMMUTATIVE and basis is not None and args.reduced:
        basis = commutative.reduce_basis(basis)
    lines = []
    records = []
    for index, g in enumerate(_sorted_elements(basis)):
        text = format_polynomial(g, pres.ring.order)
        lines.append(text)
        records.append(f"basis {index} {text}")
    if pres.ring.kind == NONCOMMUTATIVE:
        saturated = basis.saturated if basis is not None else True
        bound = basis.complete_to_degree if basis is not None else _completion_bound(args)
        lines.append(f"saturated: {'true' if saturated else 'false'}")
        lines.append(f"complete to degree: {bound}")
        records.append(f"saturated {'true' if saturated else 'false'}")
    print("\n".join(records if args.output_format == "records" else lines))
    return 0


def _rational_form(h: TruncatedSeries) -> str | None:
    """Render 1/(polynomial) when the inverse visibly terminates within D."""
    if h[0] != 1:
        return None
    inverse = h.inverse()
    support = [d for d, c in enumerate(inverse.coefficients) if c]
    last = max(support, default=0)
    if last > h.truncation_degree // 2:
        return None
    if last == 0:
        return "1"
    parts = []
    for d in support:
        c = inverse[d]
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            t = "t" if d == 1 else f"t^{d}"
            body = t if mag == 1 else f"{mag}{t}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"{' - ' if c < 0 else ' + '}{body}")
    return f"1/({''.join(parts)})"


def _series_lines(h: TruncatedSeries) -> list[str]:
    lines = [f"H[{d}] = {c}" for d, c in enumerate(h.coefficients)]
    form = _rational_form(h)
    if form is not None:
        lines.append(f"H = {form}")
    return lines


def _obstruction_set(pres: Presentation, basis) -> ObstructionSet:
    lts = basis.leading_words() if basis is not None else []
    return ObstructionSet(tuple(lts), pres.ring.ngens)


def _hilbert_by_method(pres: Presentation, args, method: str, basis) -> TruncatedSeries:
    if method == "normal-words":
        if basis is None:
            return series.series_from_normal_words(pres, [], args.max_degree)
        return series.series_from_normal_words(pres, basis, args.max_degree)
    if method == "chains":
        if pres.ring.kind != NONCOMMUTATIVE:
            raise ValueError("--method chains applies to noncommutative presentations")
        series.check_homogeneous(pres)
        _require_counting_degree(basis, args.max_degree)
        return chains_mod.hilbert_from_chains(
            _obstruction_set(pres, basis), args.max_degree
        )
    if method == "closed-form":
        if pres.relations:
            raise ValueError("--method closed-form applies to relation-free presentations")
        if pres.ring.kind == COMMUTATIVE:
            return series.polynomial_algebra_series(pres.ring.degrees, args.max_degree)
        return series.free_algebra_series(pres.ring.degrees, args.max_degree)
    raise ValueError(f"unknown method {method!r}")


def _cmd_hilbert(pres: Presentation, args) -> int:
    methods = [args.method]
    if args.method == "all":
        methods = ["normal-words"]
        if pres.ring.kind == NONCOMMUTATIVE:
            methods.append("chains")
        if not pres.relations:
            methods.append("closed-form")
    basis = _compute_basis(pres, args)
    if not pres.relations:
        pass
    elif "normal-words" in methods:
        _require_counting_degree(basis, args.max_degree)
    results = [(m, _hilbert_by_method(pres, args, m, basis)) for m in methods]
    agree = all(h == results[0][1] for _, h in results)
    out: list[str] = []
    if args.output_format == "records":
        if agree:
            out.extend(f"hilbert {d} {c}" for d, c in enumerate(results[0][1].coefficients))
    else:
        for m, h in results:
            if len(results) > 1:
                out.append(f"method {m}:")
            out.extend(_series_lines(h))
    print("\n".join(out))
    if not agree:
        print("DISAGREEMENT: Hilbert series methods differ", file=sys.stderr)
        return 1
    return 0


def _cmd_chains(pres: Presentation, args) -> int:
    if pres.ring.kind != NONCOMMUTATIVE:
        raise ValueError("chains apply to noncommutative presentations")
    series.check_homogeneous(pres)
    basis = _compute_basis(pres, args)
    _require_counting_degree(basis, args.max_degree)
    obstructions = _obstruction_set(pres, basis)
    table = chains_mod.enumerate_chains(obstructions, args.max_degree - 1, args.max_degree)
    ring = pres.ring
    lines = []
    records = []
    for level in sorted(table):
        by_degree: dict[int, list] = {}
        for chain in table[level]:
            by_degree.setdefault(chain.degree, []).append(chain)
        for degree in sorted(by_degree):
            group = by_degree[degree]
            records.append(f"chain {level} {degree} {len(group)}")
            words = [format_monomial(c.word, ring) for c in group]
            shown = words[:_TEXT_CHAIN_CAP]
            suffix = " ..." if len(words) > len(shown) else ""
            lines.append(
                f"chain n={level} degree={degree} count={len(group)}: "
                + " ".join(shown) + suffix
            )
    h = chains_mod.hilbert_from_chains(obstructions, args.max_degree)
    if args.output_format == "records":
        records.extend(f"hilbert {d} {c}" for d, c in enumerate(h.coefficients))
        print("\n".join(records))
    else:
        lines.extend(_series_lines(h))
        print("\n".join(lines))
    return 0


def _cmd_normal_words(pres: Presentation, args) -> int:
    basis = _compute_basis(pres, args)
    ring = pres.ring
    if ring.kind == COMMUTATIVE:
        if basis is None:
            # relation-free ring: nothing to avoid
            levels = _free_commutative_levels(ring, args.max_degree)
        else:
            levels = commutative.normal_monomials(basis, args.max_degree)
    else:
        _require_counting_degree(basis, args.max_degree)
        lts = basis.leading_words() if basis is not None else []
        levels = noncommutative.normal_words(
            lts, ring.ngens, args.max_degree, ring.order
        )
    lines = []
    records = []
    for degree, level in enumerate(levels):
        words = [format_monomial(m, ring) for m in level]
        records.extend(f"normal {degree} {w}" for w in words)
        shown = words[:_TEXT_WORD_CAP]
        suffix = " ..." if len(words) > len(shown) else ""
        lines.append(f"degree {degree} ({len(words)}): " + " ".join(shown) + suffix)
    print("\n".join(records if args.output_format == "records" else lines))
    return 0


def _free_commutative_levels(ring: RingContext, max_degree: int):
    from itertools import combinations_with_replacement

    from .monomials import CommMonomial

    out = []
    for degree in range(max_degree + 1):
        level = []
        for combo in combinations_with_replacement(range(ring.ngens), degree):
            exps = [0] * ring.ngens
            for g in combo:
                exps[g] += 1
            level.append(CommMonomial(exps))
        level.sort(key=ring.order.sort_key, reverse=True)
        out.append(level)
    return out


def _cmd_check(pres: Presentation, args) -> int:
    basis = _compute_basis(pres, args)
    lines = []
    ok = True
    if basis is None:
        lines.append("diamond: pass (no relations)")
    else:
        if pres.ring.kind == COMMUTATIVE:
            failures = commutative.diamond_report(basis)
            members = [
                f for f in pres.relations
                if not commutative.is_member(f, basis)
            ]
        else:
            failures = noncommutative.diamond_report(basis)
            members = [
                f for f in pres.relations
                if not noncommutative.normal_form(f, basis.basis, basis.order).is_zero
            ]
        if failures:
            ok = False
            lines.append(f"diamond: FAIL ({len(failures)} S-polynomials do not reduce to 0)")
        else:
            lines.append("diamond: pass")
        if members:
            ok = False
            lines.append(f"inputs: FAIL ({len(members)} relations do not reduce to 0)")
        else:
            lines.append("inputs: pass")
    if pres.ring.kind != NONCOMMUTATIVE:
        lines.append("euler: skipped (commutative presentation)")
    elif any(f.homogeneous_degree() is None for f in pres.relations):
        lines.append("euler: skipped (inhomogeneous relations)")
    else:
        degree = args.max_degree
        if basis is not None and not basis.saturated:
            degree = min(degree, basis.complete_to_degree)
        obstructions = _obstruction_set(pres, basis)
        report = chains_mod.euler_identity_check(obstructions, degree)
        if report.passed:
            lines.append(f"euler: pass (residuals zero to degree {degree})")
        else:
            ok = False
            lines.append(f"euler: FAIL (residuals {list(report.residuals)})")
    print("\n".join(lines))
    return 0 if ok else 1


_COMMANDS = {
    "gb": _cmd_gb,
    "hilbert": _cmd_hilbert,
    "chains": _cmd_chains,
    "normal-words": _cmd_normal_words,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    args = _parse_args(argv)
    try:
        pres = _load(args)
        return _COMMANDS[args.command](pres, args)
    except PresentationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GradingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SaturationError as exc:
        print(f"error: {exc} (raise --max-degree / --gb-degree)", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
