"""Command-line front end.

Exit codes: 0 success, 1 domain failure (invalid input geometry, not Kaehler,
failed check), 2 usage or parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import documents
from .documents import Document, DocumentError
from .fan import InvalidFan
from .groebner import InfiniteDimensional, NonNovikovCoefficient
from .novikov import format_rational, render
from .parser import ParseError, parse
from .polytope import PolytopeError
from .presentation import chen_ruan_presentation, quantum_presentation
from .relations import NoIntegerDecomposition, NotKaehler, is_fano, primitive_collections
from .seidel import NotFano, VectorsDoNotSumToZero, verify_composition


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


def _dump(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2, ensure_ascii=False)
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _read(source: str) -> Document:
    if source == "-":
        text = sys.stdin.read()
    else:
        path = Path(source)
        if path.exists():
            text = path.read_text("utf-8")
        else:
            try:
                return documents.load_document(documents.bundled(path.name))
            except KeyError:
                raise UsageError(f"cannot read {source}") from None
    return documents.read_document(text)


def _realize(doc: Document) -> Document:
    """Normal fan of the document, checked for validity."""
    try:
        doc = documents.realize(doc)
    except PolytopeError as e:
        raise DomainError(f"polytope: {e}") from e
    violations = doc.fan.validate()
    if violations:
        raise DomainError("invalid fan: " + "; ".join(violations))
    return doc


def _lambdas(doc: Document, args):
    if doc.lambdas is None:
        raise UsageError("this command needs lambdas in the input")
    scale = Fraction(args.lambda_scale)
    if scale <= 0:
        raise UsageError("--lambda-scale must be positive")
    return tuple(scale * x for x in doc.lambdas)


def _one_based(cone):
    return [i + 1 for i in sorted(cone)]


# -- subcommands --------------------------------------------------------------

def cmd_validate(args) -> tuple[dict, int]:
    doc = _read(args.input)
    violations = []
    try:
        doc = documents.realize(doc)
    except PolytopeError as e:
        violations.append(f"{type(e).__name__.lower()}: {e}")
    if not violations:
        violations = doc.fan.validate()
    if violations:
        return {"valid": False, "violations": violations}, 1
    return {"valid": True}, 0


def cmd_info(args):
    doc = _realize(_read(args.input))
    fan = doc.fan
    N = fan.nrays
    out = {
        "rays": [list(y) for y in fan.rays],
        "labels": list(fan.labels),
        "box": [
            {"vector": list(e.vector), "cone": _one_based(e.cone),
             "age": format_rational(e.age), "order": e.order}
            for e in fan.twisted_sectors()
        ],
        "gen": [list(g.vector) for g in fan.extended[N:]],
        "ages": [format_rational(a) for a in fan.ages],
        "orders": [g.order for g in fan.extended],
        "primitive_collections": [[k + 1 for k in I] for I in primitive_collections(fan)],
        "fano": is_fano(fan, args.fano_criterion),
    }
    return out, 0


def cmd_fan(args):
    doc = _realize(_read(args.input))
    fan = doc.fan
    body = {
        "rays": [list(y) for y in fan.rays],
        "labels": list(fan.labels),
        "max_cones": [_one_based(c) for c in fan.max_cones],
    }
    if doc.lambdas is not None:
        body["lambdas"] = [format_rational(x) for x in doc.lambdas]
    out = {"fan": body}
    if doc.polytope is not None:
        out["vertices"] = [
            {"point": [format_rational(x) for x in v.point], "facets": _one_based(v.active)}
            for v in doc.polytope.vertices()
        ]
    return out, 0


def _quantum(doc, args):
    return quantum_presentation(doc.fan, _lambdas(doc, args), args.fano_criterion)


def cmd_presentation(args):
    doc = _realize(_read(args.input))
    if args.classical:
        pres = chen_ruan_presentation(doc.fan)
    else:
        pres = _quantum(doc, args)
    if args.pretty:
        return pres.pretty(), 0
    return pres.to_json(), 0


def cmd_nf(args):
    doc = _realize(_read(args.input))
    pres = _quantum(doc, args)
    p = parse(args.expr, pres.nvars)
    precision = None
    if args.precision is not None:
        try:
            precision = Fraction(args.precision)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --precision {args.precision!r}") from None
    return render(pres.groebner().normal_form(p, precision), pres.degrees), 0


def cmd_verify(args):
    doc = _realize(_read(args.input))
    try:
        vectors = json.loads(args.vectors)
    except json.JSONDecodeError as e:
        raise UsageError(f"vectors must be a JSON list of integer vectors: {e}") from None
    if not isinstance(vectors, list) or not all(
        isinstance(v, list) and len(v) == doc.fan.dim and all(isinstance(x, int) for x in v) for v in vectors
    ):
        raise UsageError(f"vectors must be a JSON list of length-{doc.fan.dim} integer vectors")
    lambdas = _lambdas(doc, args)
    try:
        ok = verify_composition(doc.fan, lambdas, vectors, criterion=args.fano_criterion)
    except ValueError as e:
        if isinstance(e, (VectorsDoNotSumToZero, NotFano, NotKaehler)):
            raise
        raise DomainError(str(e)) from e
    return ("true" if ok else "false"), (0 if ok else 1)


COMMANDS = {
    "validate": cmd_validate,
    "info": cmd_info,
    "fan": cmd_fan,
    "presentation": cmd_presentation,
    "nf": cmd_nf,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON or plain text")
    common.add_argument("--lambda-scale", default="1", metavar="P/Q",
                        help="multiply every lambda by this rational")
    common.add_argument("--fano-criterion", choices=("y", "b"), default="y",
                        help="anticanonical support values at y_i (default) or at b_i")

    parser = argparse.ArgumentParser(
        prog="orbiqh", description="Chen-Ruan and quantum cohomology presentations of toric orbifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("input", help="JSON document, a bundled name, or '-' for stdin")
        return p

    add("validate", "check the polytope or fan")
    add("info", "box elements, extended generators, ages, primitive collections")
    add("fan", "dump the (normal) stacky fan")
    p = add("presentation", "ring presentation as JSON")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--classical", action="store_true", help="Chen-Ruan presentation")
    mode.add_argument("--quantum", action="store_true", help="quantum presentation (default)")
    p = add("nf", "normal form of an expression in the quantum ring")
    p.add_argument("expr")
    p.add_argument("--precision", metavar="P/Q",
                   help="expand Novikov series coefficients modulo T^P (needed off the Fano case)")
    p = add("verify", "check a zero-sum composition of Seidel elements")
    p.add_argument("vectors", help='JSON list of generators, e.g. "[[0,-1],[0,1]]"')
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        try:
            Fraction(args.lambda_scale)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad --lambda-scale {args.lambda_scale!r}") from None
        result, code = COMMANDS[args.command](args)
    except ParseError as e:
        print(e.caret(), file=sys.stderr)
        return 2
    except (UsageError, DocumentError) as e:
        print(f"orbiqh: error: {e}", file=sys.stderr)
        return 2
    except (DomainError, InvalidFan, PolytopeError, NotKaehler, NotFano, VectorsDoNotSumToZero,
            NoIntegerDecomposition, InfiniteDimensional, NonNovikovCoefficient) as e:
        print(f"orbiqh: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    text = result if isinstance(result, str) else _dump(result, args.pretty)
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
