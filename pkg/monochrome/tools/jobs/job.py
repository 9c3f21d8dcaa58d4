from abc import ABCMeta, abstractmethod
from copy import deepcopy
from pathlib import Path
from typing import List

from sacred import Experiment
from sacred.observers import FileStorageObserver, MongoObserver, RunObserver

from monochrome.tools.ingredients import (
    colorer_ingredient,
    logger_ingredient,
    sampler_ingredient,
)
from monochrome.tools.jobs import config_defaults as cd


class Job(metaclass=ABCMeta):
    """
    Base class of the sacred-backed jobs. Subclasses implement `_main`; the nested
    `exp_config` (run_config, sampler_config, ...) becomes the sacred config of the run.
    """

    ingredients = [sampler_ingredient, colorer_ingredient, logger_ingredient]

    def __init__(self, exp_config: dict = None, add_defaults: bool = True):
        exp_config = exp_config or dict()
        self.exp_config = self.add_config_defaults(exp_config) if add_defaults else exp_config
        self._experiment = None
        self._observers = None

    @property
    def config_defaults(self) -> dict:
        return {
            name: deepcopy(getattr(cd, name))
            for name in (
                "run_config",
                "sampler_config",
                "colorer_config",
                "audit_config",
                "adversarial_config",
                "logger_config",
            )
        }

    def add_config_defaults(self, ec: dict) -> dict:
        """Fills every missing section, and every missing key of a given section, in place."""
        for name, defaults in self.config_defaults.items():
            section = ec.setdefault(name, defaults)
            for k, v in defaults.items():
                section.setdefault(k, v)
        return ec

    @property
    def default_observers(self) -> List[RunObserver]:
        run_config = self.exp_config["run_config"]
        observers = []
        if run_config.get("storage_dir"):
            observers.append(FileStorageObserver(run_config["storage_dir"]))
        if run_config.get("mongo_url"):
            observers.append(
                MongoObserver(url=run_config["mongo_url"], db_name=run_config["mongo_db"])
            )
        return observers

    def override_observers(self, o: List[RunObserver]):
        """
        Replaces the storage/mongo observers. Has no effect once `experiment` was built.

        :param o: List of sacred RunObservers.
        """
        self._observers = list(o)

    @property
    def experiment(self) -> Experiment:
        if self._experiment is None:
            ex = Experiment(name=self.exp_config.get("name"), ingredients=self.ingredients)
            ex.observers.extend(
                self.default_observers if self._observers is None else self._observers
            )
            ex.add_config(self.exp_config)
            if not self.exp_config["run_config"]["capture_output"]:
                ex.captured_out_filter = lambda *args, **kwargs: "Output capturing turned off."
            self._experiment = ex
        return self._experiment

    @abstractmethod
    def _main(self, run, seed):
        """
        Work of the job.

        :param run: sacred.Run. Used for metric logging.
        :param seed: int. Sacred's own seed; trial seeds come from run_config['seed'].
        :return: dict. Becomes the run result.
        """

    def run(self):
        """
        Runs the job under sacred. With a file observer attached, its run directory is
        stored as run_config['root_dir'].

        :return: sacred.Run of the finished run.
        """

        @self.experiment.main
        def main(_run, _seed):
            observer_dir = getattr(_run.observers[0], "dir", None) if _run.observers else None
            if observer_dir is not None:
                self.exp_config["run_config"]["root_dir"] = Path(observer_dir).absolute()
            return self._main(_run, _seed)

        return self.experiment.run()
