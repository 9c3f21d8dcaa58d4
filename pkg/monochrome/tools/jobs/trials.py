"""
Per-trial work of the Monte Carlo jobs. Trial functions live at module level and take a
single TrialTask so a multiprocessing pool can ship them to workers.
"""
import math
import time
from multiprocessing import Pool
from typing import Callable, Iterable, List, NamedTuple, Optional

from monochrome.graphs import (
    AuditBudgetError,
    ContractViolation,
    adversarial_color,
    find_long_cycle,
    get_regime,
    is_cycle,
    local_density_audit,
    majority_color,
    majority_subgraph,
    mix_seed,
    mono_stats,
)
from monochrome.graphs.utils import as_seed

from ..colorers import Colorer
from ..records import RecordSink, RunRecord
from ..samplers import Sampler


class TrialTask(NamedTuple):
    sampler: Sampler
    colorer: Optional[Colorer]
    n: int
    trial: int
    seed: int
    options: dict


def make_tasks(cfg, sampler: Sampler, colorer: Colorer = None) -> List[TrialTask]:
    """
    One task per (n, trial) in that order. The graph seed of a trial is
    mix_seed(master, n, trial).
    """
    master = as_seed(cfg.seed)
    options = dict(
        cfg.audit_config(),
        strategies=list(cfg.strategies or []),
        record_timings=cfg.record_timings,
    )
    return [
        TrialTask(sampler, colorer, n, trial, mix_seed(master, n, trial), options)
        for n in cfg.n_grid
        for trial in range(cfg.trials)
    ]


def _identity(task: TrialTask, model: str, r: int) -> dict:
    return dict(model=model, r=r, n=task.n, trial=task.trial, seed=task.seed)


def _component_fields(stats) -> dict:
    return dict(
        max_components=stats.max_orders,
        component_counts=stats.component_counts,
        max_component=stats.max_order,
        max_fraction=stats.max_fraction,
    )


def coloring_trial(task: TrialTask) -> List[RunRecord]:
    """generate -> color -> mono_stats -> audits, as a single record."""
    start = time.perf_counter()
    sample = task.sampler.sample(task.n, task.seed)
    result = task.colorer.color(sample)
    stats = mono_stats(sample.graph, result.coloring, task.colorer.r)
    record = RunRecord(
        kind="coloring",
        **_identity(task, sample.model, task.colorer.r),
        **_component_fields(stats),
        **result.stats,
    )
    record.update(**task.colorer.audit(sample, result))
    if task.options.get("record_timings"):
        record.update(wall_time=time.perf_counter() - start)
    return [record]


def adversarial_trial(task: TrialTask) -> List[RunRecord]:
    """
    Colors one graph with every configured strategy. For each coloring the majority color
    subgraph is audited for local density at c2 up to smax, and the heuristic cycle length
    is compared to the floor the bound gives with locality scale smax. The comparison
    (cycle_ok) is only made when the audit passed, the bound hypothesis holds and the
    subgraph has at least c1 * n edges.
    """
    sample = task.sampler.sample(task.n, task.seed)
    g, r, options = sample.graph, task.sampler.r, task.options
    regime = get_regime(sample.model, r)
    floor = regime.floor_at(options["smax"])
    records = []
    for index, strategy in enumerate(options["strategies"]):
        start = time.perf_counter()
        coloring, used = adversarial_color(g, r, strategy, mix_seed(task.seed, index + 1))
        color = majority_color(coloring, r)
        subgraph = majority_subgraph(g, coloring, r)
        if subgraph.m < math.ceil(g.m / r):
            raise ContractViolation(
                f"majority color has {subgraph.m} of {g.m} edges with r={r}"
            )
        record = RunRecord(
            kind="adversarial",
            strategy=strategy,
            strategy_used=used,
            majority_color=color,
            majority_edges=subgraph.m,
            majority_floor=regime.majority_edges(task.n),
            density_c=regime.c2,
            density_smax=options["smax"],
            hypothesis_holds=floor.holds,
            cycle_floor=floor.value,
            **_identity(task, sample.model, r),
            **_component_fields(mono_stats(g, coloring, r)),
        )
        try:
            audit = local_density_audit(
                subgraph,
                regime.c2,
                options["smax"],
                budget=options["audit_budget"],
                reduce=options["reduce"],
            )
            record.update(
                density_worst_ratio=audit.worst_ratio if audit.exact else None,
                density_passed=audit.passed,
                density_sets=audit.sets_enumerated,
            )
        except AuditBudgetError as e:
            record.update(density_sets=e.count)

        cycle = find_long_cycle(
            subgraph,
            budget=options["cycle_budget"],
            restarts=options["restarts"],
            seed=mix_seed(task.seed, index + 1, 2),
        )
        if cycle is not None and not is_cycle(subgraph, cycle):
            raise ContractViolation(f"cycle search returned a non-cycle for {strategy}")
        length = cycle.length if cycle is not None else 0
        record.update(cycle_length=length)
        # the guarantee needs the global premise too; pigeonhole gives it on (2r+1)-regular
        # and (r+1)-out inputs
        dense = subgraph.m >= regime.majority_edges(task.n) - 1e-9
        if record.density_passed and floor.holds and dense:
            record.update(cycle_ok=length >= floor.value)
        if options.get("record_timings"):
            record.update(wall_time=time.perf_counter() - start)
        records.append(record)
    return records


def execute(
    tasks: Iterable[TrialTask],
    trial_fn: Callable[[TrialTask], List[RunRecord]],
    sink: RecordSink,
    jobs: int = 1,
    on_record: Callable = None,
) -> List[RunRecord]:
    """
    Runs `trial_fn` on every task, serially or in a pool of `jobs` workers. Records reach
    the sink in task order whatever the completion order.

    :param on_record: Optional callable(step, record), e.g. SacredMetricLogger.on_record.
    :return: List[RunRecord]. Everything written to the sink.
    """
    tasks = list(tasks)
    records = []

    def consume(task, batch):
        print(f"### Trial n={task.n}, trial={task.trial} ###")
        for record in batch:
            sink.write(record)
            if on_record is not None:
                on_record(len(records), record)
            records.append(record)

    if jobs == 1:
        for task in tasks:
            consume(task, trial_fn(task))
    else:
        with Pool(jobs) as pool:
            for task, batch in zip(tasks, pool.imap(trial_fn, tasks)):
                consume(task, batch)
    return records
