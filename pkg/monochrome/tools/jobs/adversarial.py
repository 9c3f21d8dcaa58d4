from typing import List, Tuple

from ..ingredients import get_logger, get_sampler, make_sampler
from ..records import RecordSink, RunRecord, write_table
from ..samplers import Sampler
from ..summary import Summary, summarize
from .experiment_config import ExperimentConfig
from .job import Job
from .trials import adversarial_trial, execute, make_tasks


def run_adversarial(
    cfg: ExperimentConfig, sampler: Sampler = None, on_record=None
) -> Tuple[List[RunRecord], Summary]:
    """
    Long cycle probe on (2r+1)-regular pairing graphs or (r+1)-out graphs. Each trial
    produces one record per strategy in `cfg.strategies`.

    No finite run can confirm that EVERY r-coloring has a long monochromatic cycle; the
    strategies are probes and the recorded cycle lengths are observations. `cycle_ok` is
    only set where the density audit passed and the bound's hypothesis holds at smax.

    :return: (records, summary).
    """
    cfg.validate("adversarial")
    sampler = sampler or make_sampler(**cfg.sampler_config())
    tasks = make_tasks(cfg, sampler)
    with RecordSink(cfg.records_path) as sink:
        records = execute(tasks, adversarial_trial, sink, cfg.jobs, on_record)
    summary = summarize(records)
    write_table(summary.table(), cfg.summary_path, cfg.format)
    return records, summary


class AdversarialProbe(Job):
    sweep = staticmethod(run_adversarial)

    def _main(self, run, seed):
        cfg = ExperimentConfig.from_exp_config(self.exp_config)
        sampler = get_sampler(**self.exp_config["sampler_config"])
        logger = get_logger(**self.exp_config["logger_config"])
        _, summary = run_adversarial(cfg, sampler, on_record=logger.on_record)
        logger.on_summary(summary)
        for artifact in (cfg.records_path, cfg.summary_path):
            run.add_artifact(str(artifact))
        return summary.as_dict()
