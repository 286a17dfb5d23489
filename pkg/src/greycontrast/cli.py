"""Command-line front-end.

Subcommands map one-to-one onto the library: contrast/gradation vectors,
the exact solver (pruned search or enumeration oracle), enchained value
sets, the restricted bipartite solvers, maximality verification, and the
chromatic number.  JSON goes to --out, a text summary to stdout otherwise;
everything is deterministic, so repeated runs are byte-identical.

Exit codes:
    0  success
    2  usage error
    3  input file not found / unreadable
    4  malformed input (graph, greyscale, fixed tones, values, rationals);
       stderr carries the specific error code, e.g. error[E_SELF_LOOP]
    5  domain/precondition error (non-bipartite graph, bad k, wrong shape)
    6  search budget exceeded
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .enchained import export_dict, maximal_enchained_set
from .errors import (
    BudgetExceededError,
    DomainError,
    FixedToneError,
    GreycontrastError,
    GreyscaleError,
    ImproperColouringError,
    RationalError,
)
from .foundation import Graph, chromatic_number, parse_graph, parse_rational
from .greyscale import (
    Greyscale,
    contrast_vector,
    gradation_vector,
    parse_greyscale,
    verify_max_conditions,
)
from .rmacg import RestrictedResult, parse_fixed_tones, solve_restricted
from .solver import (
    MaxContrastResult,
    SearchConfig,
    oracle_max_contrast,
    solve_max_contrast,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_IO = 3
EXIT_FORMAT = 4
EXIT_DOMAIN = 5
EXIT_BUDGET = 6

_FORMAT_ERRORS = (GreyscaleError, RationalError, FixedToneError)


def _strict(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _compact(value: Fraction) -> str:
    return str(value)


def _vector_text(tones) -> str:
    return "(" + ", ".join(_compact(t) for t in tones) + ")"


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(path: str) -> Graph:
    return parse_graph(_read_file(path))


def _load_values(path: str) -> tuple[Fraction, ...]:
    text = _read_file(path).strip()
    if text.startswith("{") or text.startswith("["):
        data = json.loads(text)
        if isinstance(data, dict):
            data = data.get("values")
        if not isinstance(data, list):
            raise RationalError("values file must hold a JSON array or a 'values' key")
        tokens = data
    else:
        tokens = text.split()
    if not tokens:
        raise RationalError("values file is empty")
    return tuple(sorted({parse_rational(str(tok)) for tok in tokens}))


def _witness_json(witness: Greyscale) -> dict:
    return {str(v): _strict(t) for v, t in enumerate(witness.tones)}


def _solve_json(result: MaxContrastResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "vector": [_strict(t) for t in result.vector],
        "witness": _witness_json(result.witness),
        "value_set": [_strict(t) for t in result.value_set],
        "nodes": result.nodes,
        "chromatic_number": result.chromatic_number,
    }


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_contrast(args) -> int:
    g = _load_graph(args.graph)
    f = parse_greyscale(_read_file(args.greyscale), g.n)
    vector = contrast_vector(g, f)
    payload: dict = {
        "schema_version": SCHEMA_VERSION,
        "vector": [_strict(t) for t in vector],
    }
    lines = [f"contrast: {_vector_text(vector)}"]
    if args.gradation:
        grad = gradation_vector(g, f)
        payload["gradation"] = [_strict(t) for t in grad]
        lines.append(f"gradation: {_vector_text(grad)}")
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    values = None if args.values == "auto" else _load_values(args.values)
    if args.oracle:
        vset = values
        if vset is None:
            chi = chromatic_number(g)
            if chi == 2:
                vset = (Fraction(0), Fraction(1))
            else:
                vset = maximal_enchained_set(chi - 1).values
        result = oracle_max_contrast(g, vset, budget=args.budget, jobs=args.jobs)
        mode = "oracle"
    else:
        cfg = SearchConfig(values=values, budget=args.budget, jobs=args.jobs)
        result = solve_max_contrast(g, cfg)
        mode = "pruned-search"
    payload = _solve_json(result)
    lines = [
        f"vector: {_vector_text(result.vector)}",
        f"witness: {_vector_text(result.witness.tones)}",
        f"chromatic number: {result.chromatic_number}",
        f"nodes: {result.nodes} ({mode})",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_fk(args) -> int:
    es = maximal_enchained_set(args.k)
    payload = {"schema_version": SCHEMA_VERSION, **export_dict(es, args.strata)}
    guard = (
        "literal new-value guard agrees with the strict fixpoint"
        if not es.guard_divergence
        else "literal new-value guard would have stopped early"
    )
    lines = [
        "F_{} = {{{}}} ({} values)".format(
            es.k, ", ".join(_compact(v) for v in es.values), es.cardinality
        ),
        f"saturation: {es.passes} passes; {guard}",
    ]
    if args.strata:
        for i, row in enumerate(es.strata()):
            lines.append(
                "A_{} = {{{}}}".format(i, ", ".join(_compact(v) for v in row))
            )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_rmacg(args) -> int:
    g = _load_graph(args.graph)
    inc = parse_fixed_tones(_read_file(args.fixed), g)
    result: RestrictedResult = solve_restricted(
        g, inc, method=args.method, budget=args.budget
    )
    payload = {
        "schema_version": SCHEMA_VERSION,
        "vector": [_strict(t) for t in result.vector],
        "witness": _witness_json(result.witness),
        "method": result.method,
        "vc_partition": {
            "matched_phi0": list(result.vc.matched_phi0),
            "matched_phi1": list(result.vc.matched_phi1),
        },
    }
    lines = [
        f"vector: {_vector_text(result.vector)}",
        f"witness: {_vector_text(result.witness.tones)}",
        f"method: {result.method}",
        "matched phi0: {} / phi1: {}".format(
            list(result.vc.matched_phi0), list(result.vc.matched_phi1)
        ),
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    f = parse_greyscale(_read_file(args.greyscale), g.n)
    report = verify_max_conditions(g, f)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "passed": report.passed,
        "k": report.k,
        "note": report.NECESSARY_ONLY,
        "violations": [
            {"condition": cond, "witness": str(witness)}
            for cond, witness in report.violations
        ],
    }
    lines = [
        "passed" if report.passed else "failed",
        f"k = {report.k}  ({report.NECESSARY_ONLY})",
    ]
    lines.extend(
        f"violation: {cond} at {witness}" for cond, witness in report.violations
    )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_chromatic(args) -> int:
    g = _load_graph(args.graph)
    print(chromatic_number(g))
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greycontrast",
        description="Exact maximum-contrast greyscales on graphs.",
        epilog="Exit codes:" + __doc__.split("Exit codes:")[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("contrast", help="contrast vector of a greyscale")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--greyscale", required=True, help="greyscale file ('v p/q' lines)")
    p.add_argument("--gradation", action="store_true", help="also print the gradation vector")
    p.add_argument("--out", help="write JSON here instead of printing text")

    p = sub.add_parser("solve", help="maximum contrast vector and witness")
    p.add_argument("--graph", required=True)
    p.add_argument("--values", default="auto",
                   help="'auto' (enchained set for chi-1) or a file of tones")
    p.add_argument("--oracle", action="store_true",
                   help="unpruned enumeration instead of the pruned search")
    p.add_argument("--budget", type=int, default=None, help="node/assignment limit")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker count for the enumeration oracle")
    p.add_argument("--out", help="write JSON here instead of printing text")

    p = sub.add_parser("fk", help="maximal enchained value set F_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strata", action="store_true", help="include the layers A_i")
    p.add_argument("--out", help="write JSON here instead of printing text")

    p = sub.add_parser("rmacg", help="restricted maximum contrast (fixed 0/1 tones)")
    p.add_argument("--graph", required=True)
    p.add_argument("--fixed", required=True, help="fixed-tone file ('v 0' / 'v 1' lines)")
    p.add_argument("--method", default="auto", choices=["auto", "oracle", "constructive"])
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", help="write JSON here instead of printing text")

    p = sub.add_parser("verify", help="necessary maximality conditions of a greyscale")
    p.add_argument("--graph", required=True)
    p.add_argument("--greyscale", required=True)
    p.add_argument("--out", help="write JSON here instead of printing text")

    p = sub.add_parser("chromatic", help="exact chromatic number")
    p.add_argument("--graph", required=True)

    return parser


_HANDLERS = {
    "contrast": _cmd_contrast,
    "solve": _cmd_solve,
    "fk": _cmd_fk,
    "rmacg": _cmd_rmacg,
    "verify": _cmd_verify,
    "chromatic": _cmd_chromatic,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except FileNotFoundError as exc:
        print(f"greycontrast: error[E_FILE_NOT_FOUND]: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"greycontrast: error[E_IO]: {exc}", file=sys.stderr)
        return EXIT_IO
    except BudgetExceededError as exc:
        print(f"greycontrast: error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, ImproperColouringError) as exc:
        print(f"greycontrast: error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _FORMAT_ERRORS as exc:
        print(f"greycontrast: error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except GreycontrastError as exc:
        # remaining parse/validation errors (graph format, ranges, loops...)
        print(f"greycontrast: error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except json.JSONDecodeError as exc:
        print(f"greycontrast: error[E_JSON]: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
