from typing import List, Tuple

from ..colorers import Colorer
from ..ingredients import get_colorer, get_logger, get_sampler, make_colorer, make_sampler
from ..records import RecordSink, RunRecord, write_table
from ..samplers import Sampler
from ..summary import Summary, summarize
from .experiment_config import ExperimentConfig
from .job import Job
from .trials import coloring_trial, execute, make_tasks


def run_experiment(
    cfg: ExperimentConfig,
    sampler: Sampler = None,
    colorer: Colorer = None,
    on_record=None,
) -> Tuple[List[RunRecord], Summary]:
    """
    Scaling sweep: for every (n, trial) draw a graph, color it, measure monochromatic
    components and run the colorer's audits. Records stream to `cfg.records_path` as they
    complete; the summary table goes to `cfg.summary_path` once every trial has finished.

    :param cfg: ExperimentConfig.
    :param sampler: Optional Sampler. Built from `cfg` when omitted.
    :param colorer: Optional Colorer. Built from `cfg` when omitted.
    :param on_record: Optional callable(step, record).
    :return: (records, summary).
    """
    cfg.validate("experiment")
    sampler = sampler or make_sampler(**cfg.sampler_config())
    colorer = colorer or make_colorer(**cfg.colorer_config())
    tasks = make_tasks(cfg, sampler, colorer)
    with RecordSink(cfg.records_path) as sink:
        records = execute(tasks, coloring_trial, sink, cfg.jobs, on_record)
    summary = summarize(records)
    write_table(summary.table(), cfg.summary_path, cfg.format)
    return records, summary


class ScalingExperiment(Job):
    """Sacred-observed `run_experiment`; sampler and colorer come from their ingredients."""

    sweep = staticmethod(run_experiment)

    def _main(self, run, seed):
        cfg = ExperimentConfig.from_exp_config(self.exp_config)
        sampler = get_sampler(**self.exp_config["sampler_config"])
        colorer = get_colorer(**self.exp_config["colorer_config"])
        logger = get_logger(**self.exp_config["logger_config"])
        _, summary = run_experiment(cfg, sampler, colorer, on_record=logger.on_record)
        logger.on_summary(summary)
        for artifact in (cfg.records_path, cfg.summary_path):
            run.add_artifact(str(artifact))
        return summary.as_dict()
