"""
Command line front-end. Exit codes: 0 success, 1 refused audit, 2 configuration error,
3 structural contract violation.
"""
import argparse
import csv
import json
import sys
from pathlib import Path
from typing import List

from monochrome.graphs import (
    AuditBudgetError,
    ConfigError,
    ContractViolation,
    get_regime,
    local_density_audit,
    majority_subgraph,
    mix_seed,
    mono_stats,
)
from monochrome.graphs.adversaries import STRATEGIES
from monochrome.graphs.audits import DEFAULT_AUDIT_BUDGET
from monochrome.graphs.utils import as_seed
from monochrome.tools.converters import (
    read_coloring,
    read_graph,
    write_coloring,
    write_graph,
    write_graph_archive,
)
from monochrome.tools.ingredients import make_colorer, make_sampler
from monochrome.tools.jobs import ExperimentConfig, run_adversarial, run_experiment
from monochrome.tools.jobs.experiment_config import FORMATS, MODELS
from monochrome.tools.records import to_plain
from monochrome.tools.samplers import Sample

ARCHIVE_SUFFIXES = (".h5", ".hdf5")


def get_args(argv: List[str] = None):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", default=None, help="Master seed. Defaults to 0")
    common.add_argument("--out", default=None, help="Output path")
    common.add_argument("--jobs", default=None, type=int, help="Worker processes")
    common.add_argument("--format", default=None, choices=FORMATS, help="Table format")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("--model", default=None, choices=MODELS, help="Random graph model")
    model.add_argument("--r", default=None, type=int, help="Number of colors")
    model.add_argument("--degree", default=None, type=int, help="Pairing degree, 2r+1 by default")
    model.add_argument("--k", default=None, type=int, help="k-out out-degree, r by default")
    model.add_argument("--distinct", default=None, action="store_true",
                       help="Distinct out-neighbours in the k-out model")
    model.add_argument("--simple", default=None, action="store_true",
                       help="Reject pairing graphs until simple")

    parser = argparse.ArgumentParser(
        prog="monochrome",
        description="Colorings of random graphs with small monochromatic components.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    generate = sub.add_parser("generate", parents=[common, model], help="Draw random graphs")
    generate.add_argument("--n", required=True, type=int, help="Vertex count")
    generate.add_argument("--trials", default=1, type=int,
                          help="Number of graphs; more than one needs an .hdf5 output")

    color = sub.add_parser("color", parents=[common, model], help="Color one random graph")
    color.add_argument("--n", default=None, type=int, help="Vertex count")
    color.add_argument("--graph", default=None,
                       help="Color this graph file instead (needs --strategy)")
    color.add_argument("--strategy", default=None, choices=STRATEGIES,
                       help="Use an adversarial strategy instead of the model's coloring")

    audit = sub.add_parser("audit", parents=[common], help="Local density audit of a graph")
    audit.add_argument("--graph", required=True, help="Graph file")
    audit.add_argument("--coloring", default=None,
                       help="Audit the majority color subgraph of this coloring")
    audit.add_argument("--c", required=True, type=float, help="Density cap")
    audit.add_argument("--smax", required=True, type=int, help="Largest set size examined")
    audit.add_argument("--budget", default=DEFAULT_AUDIT_BUDGET, type=int,
                       help=f"Max connected sets enumerated. Defaults to {DEFAULT_AUDIT_BUDGET}")
    audit.add_argument("--reduce", default=False, action="store_true",
                       help="Prune vertices that cannot lie in a dense set first (c >= 1)")

    bound = sub.add_parser("bound", parents=[common], help="Long cycle bound constants")
    bound.add_argument("--model", required=True, choices=("regular", "kout"))
    bound.add_argument("--r", required=True, type=int)
    bound.add_argument("--n", required=True, type=int)

    for name, text in (
        ("experiment", "Monte Carlo scaling sweep"),
        ("adversarial", "Long monochromatic cycle probe"),
    ):
        run = sub.add_parser(name, parents=[common, model], help=text)
        run.add_argument("--config", default=None, help="Flat `key = value` config file")
        run.add_argument("--n-grid", dest="n_grid", default=None, type=int, nargs="+")
        run.add_argument("--trials", default=None, type=int)
        run.add_argument("--strategies", default=None, nargs="+", choices=STRATEGIES)
        run.add_argument("--smax", default=None, type=int)
        run.add_argument("--record-timings", dest="record_timings", default=None,
                         action="store_true")
    return parser.parse_args(argv)


def _seed(args) -> int:
    try:
        return as_seed(0 if args.seed is None else int(args.seed))
    except (TypeError, ValueError) as e:
        raise ConfigError(f"--seed: {e}")


def _config(args, **values) -> ExperimentConfig:
    keys = (
        "model", "r", "degree", "k", "distinct", "simple", "n_grid", "trials", "strategies",
        "smax", "record_timings", "seed", "out", "jobs", "format",
    )
    overrides = {k: getattr(args, k, None) for k in keys}
    if overrides["seed"] is not None:
        overrides["seed"] = _seed(args)
    overrides.update(values)
    if getattr(args, "config", None):
        return ExperimentConfig.from_file(args.config, **overrides)
    return ExperimentConfig(**{k: v for k, v in overrides.items() if v is not None})


def _emit(report: dict, args):
    if args.format == "csv":
        stream = open(args.out, "w", newline="") if args.out else sys.stdout
        writer = csv.DictWriter(stream, fieldnames=list(report))
        writer.writeheader()
        writer.writerow(report)
        if args.out:
            stream.close()
    else:
        text = json.dumps(report, sort_keys=True, indent=2, default=to_plain)
        if args.out:
            Path(args.out).write_text(text + "\n")
        else:
            print(text)


def generate(args):
    cfg = _config(args, n_grid=[args.n], trials=args.trials).validate("sample")
    sampler = make_sampler(**cfg.sampler_config())
    master = _seed(args)
    samples = [
        sampler.sample(args.n, mix_seed(master, args.n, t)) for t in range(args.trials)
    ]
    out = Path(args.out or "graph.txt")
    if out.suffix in ARCHIVE_SUFFIXES:
        write_graph_archive(samples, out)
    elif len(samples) == 1:
        write_graph(samples[0].graph, out)
    else:
        raise ConfigError(f"{args.trials} graphs need an archive output ({ARCHIVE_SUFFIXES})")


def color(args):
    """Writes the coloring to --out and a JSON sidecar next to it."""
    master = _seed(args)
    if args.graph is not None:
        if args.strategy is None:
            raise ConfigError("coloring a graph file needs --strategy")
        graph = read_graph(args.graph)
        cfg = _config(
            args, model="pairing", n_grid=[max(graph.n, 3)], strategies=[args.strategy]
        )
        sample = Sample(graph, "file", graph.n, mix_seed(master, graph.n, 0))
    else:
        if args.n is None:
            raise ConfigError("color needs --n or --graph")
        values = dict(n_grid=[args.n])
        if args.strategy is not None:
            values["strategies"] = [args.strategy]
        cfg = _config(args, **values)
        cfg.validate("experiment" if args.strategy is None else "sample")
        sampler = make_sampler(**cfg.sampler_config())
        sample = sampler.sample(args.n, mix_seed(master, args.n, 0))
    colorer_config = cfg.colorer_config()
    if args.strategy is not None:
        colorer_config.update(colorer_type="adversarial", strategy=args.strategy)
    colorer = make_colorer(**colorer_config)
    result = colorer.color(sample)
    sidecar = result.sidecar()
    sidecar.update(colorer.audit(sample, result))
    stats = mono_stats(sample.graph, result.coloring, colorer.r)
    sidecar.update(max_components=stats.max_orders.tolist(), max_component=stats.max_order)
    out = Path(args.out or "coloring.txt")
    write_coloring(result.coloring, out)
    text = json.dumps(sidecar, sort_keys=True, indent=2, default=to_plain)
    out.with_suffix(".json").write_text(text + "\n")


def audit(args):
    graph = read_graph(args.graph)
    if args.coloring is not None:
        coloring = read_coloring(args.coloring)
        graph = majority_subgraph(graph, coloring, coloring.r)
    report = local_density_audit(graph, args.c, args.smax, args.budget, args.reduce)
    _emit(report.as_dict(), args)


def bound(args):
    try:
        regime = get_regime(args.model, args.r)
    except ValueError as e:
        raise ConfigError(str(e))
    gamma = regime.gamma_n(args.n)
    _emit(
        dict(
            model=args.model,
            r=args.r,
            n=args.n,
            c1=regime.c1,
            c2=regime.c2,
            d=regime.d,
            delta=regime.delta,
            gamma_n=gamma,
            hypothesis_holds=gamma >= 2,
        ),
        args,
    )


def experiment(args):
    records, summary = run_experiment(_config(args))
    for (model, r), fit in summary.fits.items():
        print(f"{model} r={r}: exponent {fit['exponent']:.3f} (r^2 {fit['r2']:.3f})")
    print(f"{len(records)} records written")


def adversarial(args):
    records, _ = run_adversarial(_config(args))
    print(f"{len(records)} records written")


COMMANDS = {
    "generate": generate,
    "color": color,
    "audit": audit,
    "bound": bound,
    "experiment": experiment,
    "adversarial": adversarial,
}


def main(argv: List[str] = None) -> int:
    args = get_args(argv)
    try:
        COMMANDS[args.command](args)
    except ConfigError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return 2
    except ContractViolation as e:
        print(f"contract violation: {e}", file=sys.stderr)
        return 3
    except AuditBudgetError as e:
        print(f"audit refused after {e.count} sets: {e}", file=sys.stderr)
        return 1
    return 0


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
