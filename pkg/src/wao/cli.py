"""Command-line front end.

Subcommands: solve, bench, history, verify, oracle, complement. DIMACS
ASCII in; JSON (default) or CSV out. Exit codes: 0 success/verified,
1 verification failed, 2 usage or parse errors.

The clique benchmark files describe the complement of the graph whose
independent set is sought, so every subcommand complements the parsed
graph by default; pass --no-complement to work on the file's graph as is.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from dataclasses import asdict
from pathlib import Path

from . import evolution, graph, oracle
from .evolution import BatchResult, GAConfig, best_of_runs
from .fitness_flow import verify_independent_set
from .graph import DimacsParseError, Graph, complement, parse_dimacs, write_dimacs

logger = logging.getLogger("wao")


def _load_graph(path: str, complement_it: bool) -> Graph:
    with open(path, "r", encoding="ascii") as handle:
        parsed = parse_dimacs(handle)
    return complement(parsed) if complement_it else parsed


def _one_based(nodes) -> list[int]:
    return sorted(v + 1 for v in nodes)


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", required=True, help="DIMACS ASCII graph file")
    parser.add_argument(
        "--complement",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="solve the complement of the parsed graph (DIMACS clique files "
        "describe the complement; default: on)",
    )


def _add_solver_arguments(parser: argparse.ArgumentParser, default_runs: int) -> None:
    parser.add_argument("--generations", type=int, default=None,
                        help="generations per run (default: 10n)")
    parser.add_argument("--pop-size", type=int, default=None,
                        help="population size (default: ceil(1.5n))")
    parser.add_argument("--elite-frac", type=float, default=0.05,
                        help="fraction of fittest individuals copied verbatim")
    parser.add_argument("--pc", type=float, default=0.2,
                        help="per-slot probability of crossover over mutation")
    parser.add_argument("--L", type=float, default=15.0, dest="normalization_factor",
                        help="rank-selection weight ratio fittest:least-fit")
    parser.add_argument("--runs", type=int, default=default_runs,
                        help="independent runs; run r uses seed+r-1")
    parser.add_argument("--seed", type=int, default=1, help="seed of the first run")
    parser.add_argument("--target", type=int, default=None,
                        help="stop a run (and the batch) once this set size is reached")
    parser.add_argument("--workers", type=int, default=0,
                        help="threads for fitness evaluation (results are identical "
                        "regardless; default: serial)")


def _config_from_args(args: argparse.Namespace) -> GAConfig:
    return GAConfig(
        generations=args.generations,
        population_size=args.pop_size,
        elite_fraction=args.elite_frac,
        crossover_probability=args.pc,
        normalization_factor=args.normalization_factor,
        rng_seed=args.seed,
        runs=args.runs,
        target=args.target,
    )


def _run_report(run: evolution.RunResult, include_history: bool = True) -> dict:
    report = {
        "seed": run.seed,
        "best_size": run.best_size,
        "best_fitness": run.best_fitness,
        "best_set": _one_based(run.best_set),
        "generation_found": run.generation_found,
        "generations_executed": len(run.history),
        "evaluations": run.evaluations,
        "elapsed_seconds": round(run.elapsed_seconds, 3),
    }
    if include_history:
        report["history"] = list(run.history)
    return report


def _solve_report(
    name: str, solved: Graph, complemented: bool, cfg: GAConfig, batch: BatchResult
) -> dict:
    return {
        "instance": name,
        "n": solved.node_count,
        "m": solved.edge_count,
        "complemented": complemented,
        "config": asdict(cfg),
        "best_size": batch.best_size,
        "best_set": _one_based(batch.best_set),
        "best_run_seed": batch.runs[batch.best_run_index].seed,
        "runs": [_run_report(r) for r in batch.runs],
    }


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_csv(report: dict) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(
        ["instance", "n", "m", "complemented", "L", "run_seed", "best_size",
         "best_fitness", "generation_found", "generations_executed",
         "evaluations", "elapsed_seconds", "best_set"]
    )
    for run in report["runs"]:
        writer.writerow(
            [report["instance"], report["n"], report["m"], report["complemented"],
             report["config"]["normalization_factor"], run["seed"], run["best_size"],
             run["best_fitness"], run["generation_found"],
             run["generations_executed"], run["evaluations"],
             run["elapsed_seconds"], " ".join(map(str, run["best_set"]))]
        )
    return buffer.getvalue()


def cmd_solve(args: argparse.Namespace) -> int:
    solved = _load_graph(args.graph, args.complement)
    cfg = _config_from_args(args)
    batch = best_of_runs(solved, cfg, workers=args.workers)
    offending = verify_independent_set(solved, batch.best_set)
    if offending is not None:
        raise RuntimeError(f"reported set is not independent: edge {offending}")
    report = _solve_report(
        Path(args.graph).stem, solved, args.complement, cfg, batch
    )
    if args.format == "csv":
        _emit(_report_csv(report), args.output)
    else:
        _emit(json.dumps(report, indent=2) + "\n", args.output)
    return 0


def _resolve_manifest_entry(entry: dict, defaults: dict) -> dict:
    merged = dict(defaults)
    merged.update(entry)
    return merged


def cmd_bench(args: argparse.Namespace) -> int:
    manifest_path = Path(args.manifest)
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    base_dir = Path(args.instances_dir) if args.instances_dir else manifest_path.parent
    defaults = {
        "runs": 20,
        "L": [15.0],
        "seed": 1,
        "alpha": None,
        "use_alpha_target": False,
        "complement": True,
    }
    defaults.update(manifest.get("defaults", {}))
    rows: list[dict] = []
    missing: list[str] = []
    for entry in manifest.get("instances", []):
        spec = _resolve_manifest_entry(entry, defaults)
        path = base_dir / spec["file"]
        name = Path(spec["file"]).stem
        if not path.exists():
            logger.warning("missing instance file: %s", path)
            missing.append(str(path))
            continue
        solved = _load_graph(str(path), spec["complement"])
        factors = spec["L"] if isinstance(spec["L"], list) else [spec["L"]]
        for factor in factors:
            target = spec.get("target")
            if target is None and spec["use_alpha_target"]:
                target = spec["alpha"]
            cfg = GAConfig(
                normalization_factor=float(factor),
                rng_seed=spec["seed"],
                runs=spec["runs"],
                target=target,
            )
            started = time.perf_counter()
            batch = best_of_runs(solved, cfg, workers=args.workers)
            elapsed = time.perf_counter() - started
            alpha = spec["alpha"]
            rows.append(
                {
                    "instance": name,
                    "n": solved.node_count,
                    "m": solved.edge_count,
                    "L": factor,
                    "runs_executed": len(batch.runs),
                    "best_size": batch.best_size,
                    "alpha": alpha,
                    "matched_alpha": (batch.best_size >= alpha) if alpha else None,
                    "elapsed_seconds": round(elapsed, 3),
                }
            )
    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer,
            fieldnames=["instance", "n", "m", "L", "runs_executed", "best_size",
                        "alpha", "matched_alpha", "elapsed_seconds"],
        )
        writer.writeheader()
        writer.writerows(rows)
        _emit(buffer.getvalue(), args.output)
    else:
        _emit(json.dumps({"rows": rows, "missing": missing}, indent=2) + "\n",
              args.output)
    if args.plot:
        from .plotting import save_bench_plot

        save_bench_plot(rows, args.plot)
    return 0


def cmd_history(args: argparse.Namespace) -> int:
    solved = _load_graph(args.graph, args.complement)
    cfg = _config_from_args(args)
    batch = best_of_runs(solved, cfg, workers=args.workers)
    chosen = batch.best_run_index if args.run_index is None else args.run_index
    if not (0 <= chosen < len(batch.runs)):
        raise ValueError(f"run index {chosen} outside executed runs")
    history = batch.runs[chosen].history
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["generation", "best_fitness_so_far"])
    for generation, value in enumerate(history, start=1):
        writer.writerow([generation, value])
    _emit(buffer.getvalue(), args.output)
    if args.plot:
        from .plotting import save_history_plot

        name = Path(args.graph).stem
        save_history_plot(
            {f"{name} seed={batch.runs[chosen].seed}": history},
            args.plot,
            title=name,
        )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    solved = _load_graph(args.graph, args.complement)
    tokens = Path(args.certificate).read_text(encoding="ascii").split()
    nodes = []
    for token in tokens:
        value = int(token)
        if not (1 <= value <= solved.node_count):
            raise DimacsParseError(
                f"certificate node {value} outside [1, {solved.node_count}]"
            )
        nodes.append(value - 1)
    offending = verify_independent_set(solved, nodes)
    if offending is None:
        print(f"independent set of size {len(set(nodes))}")
        return 0
    print(f"not independent: edge {offending[0] + 1} {offending[1] + 1}")
    return 1


def cmd_oracle(args: argparse.Namespace) -> int:
    solved = _load_graph(args.graph, args.complement)
    result = oracle.exact_mis(solved, node_budget=args.node_budget)
    report = {
        "instance": Path(args.graph).stem,
        "n": solved.node_count,
        "m": solved.edge_count,
        "complemented": args.complement,
        "alpha": result.alpha,
        "witness": _one_based(result.witness),
        "method": result.method,
    }
    _emit(json.dumps(report, indent=2) + "\n", args.output)
    return 0


def cmd_complement(args: argparse.Namespace) -> int:
    with open(args.graph, "r", encoding="ascii") as handle:
        parsed = parse_dimacs(handle)
    flipped = complement(parsed)
    buffer = io.StringIO()
    write_dimacs(flipped, buffer, comments=[f"complement of {Path(args.graph).name}"])
    _emit(buffer.getvalue(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wao",
        description="Evolutionary maximum-independent-set solver over acyclic "
        "orientations, with a DIMACS benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance, print a report")
    _add_graph_arguments(solve)
    _add_solver_arguments(solve, default_runs=20)
    solve.add_argument("--format", choices=["json", "csv"], default="json")
    solve.add_argument("-o", "--output", default=None, help="write to file instead of stdout")
    solve.set_defaults(func=cmd_solve)

    bench = sub.add_parser("bench", help="run a manifest of instances")
    bench.add_argument("--manifest", required=True, help="JSON manifest file")
    bench.add_argument("--instances-dir", default=None,
                       help="directory of instance files (default: manifest's)")
    bench.add_argument("--workers", type=int, default=0)
    bench.add_argument("--format", choices=["json", "csv"], default="json")
    bench.add_argument("-o", "--output", default=None)
    bench.add_argument("--plot", default=None, help="also render a results figure")
    bench.set_defaults(func=cmd_bench)

    history = sub.add_parser("history", help="per-generation best-fitness CSV")
    _add_graph_arguments(history)
    _add_solver_arguments(history, default_runs=1)
    history.add_argument("--run-index", type=int, default=None,
                         help="which run's history (default: the best run)")
    history.add_argument("-o", "--output", default=None)
    history.add_argument("--plot", default=None, help="also render the curve")
    history.set_defaults(func=cmd_history)

    verify = sub.add_parser("verify", help="check an independent-set certificate")
    _add_graph_arguments(verify)
    verify.add_argument("--certificate", required=True,
                        help="file of whitespace-separated 1-based node ids")
    verify.set_defaults(func=cmd_verify)

    oracle_cmd = sub.add_parser("oracle", help="exact independence number (desk scale)")
    _add_graph_arguments(oracle_cmd)
    oracle_cmd.add_argument("--node-budget", type=int, default=None,
                            help="abort after this many search nodes")
    oracle_cmd.add_argument("-o", "--output", default=None)
    oracle_cmd.set_defaults(func=cmd_oracle)

    complement_cmd = sub.add_parser("complement", help="write the complement graph")
    complement_cmd.add_argument("--graph", required=True)
    complement_cmd.add_argument("-o", "--output", default=None)
    complement_cmd.set_defaults(func=cmd_complement)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DimacsParseError, OSError, ValueError, oracle.OracleSizeError,
            oracle.OracleBudgetError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
