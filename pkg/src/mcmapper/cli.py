"""Command-line interface: gen / map / oracle / experiment.

Exit codes: 0 success, 1 usage error, 2 infeasible input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import benchmarks, experiments, oracle, qasm
from .circuit import decompose_to_2q
from .partitioner import Architecture, RoeeParams, map_circuit
from .slicing import LookaheadParams, slice_circuit

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse default exits 2; we reserve that
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="mcmapper", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a benchmark circuit as QASM")
    gen.add_argument("--family", required=True, choices=benchmarks.FAMILIES)
    gen.add_argument("--size", required=True, type=int)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--out", type=Path, default=None)

    mp = sub.add_parser("map", help="map a QASM circuit onto a multi-core machine")
    mp.add_argument("--in", dest="infile", required=True, type=Path)
    mp.add_argument("--cores", required=True, type=int)
    mp.add_argument("--qpc", required=True, type=int)
    mp.add_argument("--decay", type=float, default=2.0)
    mp.add_argument("--horizon", type=int, default=None)
    mp.add_argument("--metric", choices=("migrations", "swaps"), default="migrations")
    mp.add_argument("--trace", type=Path, default=None)

    exp = sub.add_parser("experiment", help="run a scalability experiment, write CSV")
    exp.add_argument("--kind", required=True, choices=experiments.KINDS)
    exp.add_argument("--benchmark", required=True, choices=benchmarks.FAMILIES)
    exp.add_argument("--widths", type=str, default=None, help="comma-separated qubit counts")
    exp.add_argument("--reps", type=int, default=3)
    exp.add_argument("--out", required=True, type=Path)

    orc = sub.add_parser("oracle", help="exact minimum migrations for a tiny circuit")
    orc.add_argument("--in", dest="infile", required=True, type=Path)
    orc.add_argument("--cores", required=True, type=int)
    orc.add_argument("--qpc", required=True, type=int)
    orc.add_argument("--metric", choices=("migrations", "swaps"), default="migrations")
    return parser


def _cmd_gen(args) -> int:
    circuit = benchmarks.generate(args.family, args.size, seed=args.seed)
    text = qasm.emit_qasm(circuit)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _roee_params(args) -> RoeeParams:
    return RoeeParams(lookahead=LookaheadParams(decay_base=args.decay, horizon=args.horizon))


def _cmd_map(args) -> int:
    circuit = decompose_to_2q(qasm.parse_qasm(args.infile.read_text(encoding="utf-8")))
    arch = Architecture(args.cores, args.qpc)
    if circuit.num_qubits > arch.total_qubits:
        print(f"infeasible: {circuit.num_qubits} qubits on {arch.total_qubits} slots", file=sys.stderr)
        return EXIT_INFEASIBLE
    trace = map_circuit(circuit, arch, _roee_params(args))
    slices = slice_circuit(circuit)
    print(
        f"migrations={trace.total_migrations} swaps={trace.total_paired_swaps} "
        f"slices={len(slices)} runtime_ms={trace.runtime_ms:.3f}"
    )
    if args.trace:
        payload = {
            "metric": args.metric,
            "slices": [sorted(list(p) for p in s.pairs) for s in slices],
            "assignments": [list(a.core_of) for a in trace.assignments],
            "migrations": list(trace.per_slice_migrations),
            "swaps": list(trace.per_slice_paired_swaps),
        }
        args.trace.write_text(json.dumps(payload, indent=1), encoding="utf-8")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    widths: tuple[int, ...] = ()
    if args.widths:
        widths = tuple(int(w) for w in args.widths.split(","))
    cfg = experiments.ExperimentConfig(
        kind=args.kind, benchmark=args.benchmark, widths=widths, repetitions=args.reps
    )
    records = experiments.run_experiment(cfg)
    args.out.mkdir(parents=True, exist_ok=True)
    dest = args.out / f"{args.kind}_{args.benchmark}.csv"
    experiments.write_csv(records, dest)
    print(f"wrote {len(records)} records to {dest}")
    return EXIT_OK


def _cmd_oracle(args) -> int:
    circuit = decompose_to_2q(qasm.parse_qasm(args.infile.read_text(encoding="utf-8")))
    arch = Architecture(args.cores, args.qpc)
    slices = slice_circuit(circuit)
    cost = "migrations" if args.metric == "migrations" else "paired_swaps"
    try:
        result = oracle.optimal_migrations(slices, arch, "free", cost=cost)
    except ValueError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(f"optimal_{args.metric}={result.min_total_migrations}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "gen": _cmd_gen,
        "map": _cmd_map,
        "experiment": _cmd_experiment,
        "oracle": _cmd_oracle,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    raise SystemExit(main())
