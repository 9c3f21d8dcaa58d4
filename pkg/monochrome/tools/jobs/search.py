from pathlib import Path

import numpy as np
from sklearn.model_selection import ParameterGrid

from monochrome.graphs import ConfigError

from .experiment_config import ExperimentConfig
from .job import Job


class GridSearch(Job):
    def __init__(self, job: Job, grid: dict, total_points: int = None, *args, **kwargs):
        """
        :param job: ScalingExperiment or AdversarialProbe supplying the base config.
        :param grid: dict. ExperimentConfig keys mapped to lists of values; 'strategy' is
            accepted as shorthand for a one-element 'strategies'.
        :param total_points: Optional int. Stop after this many grid points.
        """
        super().__init__(*args, **kwargs)
        self.job = job
        self.grid = ParameterGrid(grid)
        self.total_points = total_points or np.inf

    def _main(self, run, seed):
        base = ExperimentConfig.from_exp_config(self.job.exp_config)
        results = []
        for i, point in enumerate(self.grid):
            if i >= self.total_points:
                print(f"## Max point count of {self.total_points} exceeded, ending search ##")
                break
            print(f"### Performing grid search on point {i} ###")
            print(f"Config set (not showing defaults): {point}")
            values = dict(point)
            if "strategy" in values:
                values["strategies"] = [values.pop("strategy")]
            values["out"] = str(Path(base.out) / f"point_{i}")
            try:
                _, summary = self.job.sweep(base.replace(**values))
            except ConfigError as e:
                print(
                    f"Error message: {e}\n"
                    f"Encountered {type(e)} in search, skipping configuration..."
                )
                continue
            results.append({"point": point, "fits": summary.as_dict()["fits"]})
            print(f"# Completed search on point {i} #\n")
        return {"points": results}
