"""Command-line entry point.

Exit status: 0 on success, 1 when a validation or rule check fails, 2 on
usage, input or size-limit errors.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import __version__
from .circuit import Circuit, lower_circuit
from .graphrep import annotate_with_swaps, export_graph, to_restricted_form
from .linalg import format_matrix
from .propcheck import DEFAULT_TOL, diagrams_proportional
from .qasm import ParseError, parse_qasm
from .rules import CATALOG, check_catalog
from .semantics import SizeLimitError, semantics

MAX_QUBITS_CEILING = 14


class CliError(Exception):
    pass


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _max_qubits(text: str) -> int:
    value = int(text)
    if not 1 <= value <= MAX_QUBITS_CEILING:
        raise argparse.ArgumentTypeError(f"must be between 1 and {MAX_QUBITS_CEILING}")
    return value


def _load(path: str, max_qubits: int | None = None) -> Circuit:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}") from exc
    try:
        circuit = parse_qasm(text)
    except ParseError as exc:
        raise CliError(f"{path}:{exc}") from exc
    if max_qubits is not None and circuit.qubits > max_qubits:
        raise CliError(f"{path}: {circuit.qubits} qubits exceeds --max-qubits {max_qubits}")
    return circuit


def cmd_sim(args: argparse.Namespace) -> int:
    c = _load(args.file, args.max_qubits)
    print(format_matrix(semantics(lower_circuit(c), args.max_qubits), args.precision))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    a = _load(args.file1, args.max_qubits)
    b = _load(args.file2, args.max_qubits)
    result = diagrams_proportional(lower_circuit(a), lower_circuit(b), args.tol, args.max_qubits)
    print(result.report())
    return 0 if result else 1


def cmd_lower(args: argparse.Namespace) -> int:
    print(lower_circuit(_load(args.file)))
    return 0


def cmd_to_graph(args: argparse.Namespace) -> int:
    d = lower_circuit(_load(args.file))
    if args.restricted:
        g = annotate_with_swaps(to_restricted_form(d), hadamard_boxes=True)
    else:
        g = annotate_with_swaps(d)
    out = export_graph(g, args.format)
    print(out, end="" if out.endswith("\n") else "\n")
    return 0


def cmd_check_rules(args: argparse.Namespace) -> int:
    try:
        reports = check_catalog(args.samples, args.tol, args.seed, args.rule)
    except KeyError as exc:
        raise CliError(f"{exc.args[0]}; known rules: {', '.join(sorted(CATALOG))}") from exc
    for r in reports:
        print(r.line())
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zxblock", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sim", help="print the matrix of a circuit's diagram")
    p.add_argument("file")
    p.add_argument("--max-qubits", type=_max_qubits, default=12)
    p.add_argument("--precision", type=int, default=4)
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("validate", help="check two circuits are equal up to a scalar")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--max-qubits", type=_max_qubits, default=12)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lower", help="print the block diagram of a circuit")
    p.add_argument("file")
    p.set_defaults(func=cmd_lower)

    p = sub.add_parser("to-graph", help="convert a circuit's diagram to a graph")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--restricted", action="store_true", help="normalize to restricted form first")
    p.set_defaults(func=cmd_to_graph)

    p = sub.add_parser("check-rules", help="numerically check the rewrite-rule catalog")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    p.add_argument("--rule", action="append", help="restrict to this rule (repeatable)")
    p.set_defaults(func=cmd_check_rules)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, SizeLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
