import pytest
from sacred.observers import FileStorageObserver

from monochrome.tools.jobs import Job, ScalingExperiment
from monochrome.tools.jobs.config_defaults import (
    audit_config,
    colorer_config,
    run_config,
    sampler_config,
)


class TestJob:
    def test_default_config(self, clear_logdirs):
        job = ScalingExperiment()
        assert job.exp_config["run_config"] == run_config
        assert job.exp_config["sampler_config"] == sampler_config
        assert job.exp_config["colorer_config"] == colorer_config
        assert job.exp_config["audit_config"] == audit_config

    def test_partial_config_keeps_defaults(self):
        job = ScalingExperiment({"sampler_config": {"model": "kout"}})
        assert job.exp_config["sampler_config"] == {"model": "kout", "r": 2}
        assert job.exp_config["run_config"]["trials"] == run_config["trials"]

    def test_defaults_are_not_shared(self):
        ScalingExperiment().exp_config["run_config"]["n_grid"].append(5)
        assert ScalingExperiment().exp_config["run_config"]["n_grid"] == run_config["n_grid"]

    def test_observers(self, tmp_path):
        job = ScalingExperiment({"run_config": {"storage_dir": str(tmp_path)}})
        observers = job.default_observers
        assert len(observers) == 1 and isinstance(observers[0], FileStorageObserver)
        assert ScalingExperiment({"run_config": {"storage_dir": None}}).default_observers == []

    def test_override_observers(self, tmp_path):
        job = ScalingExperiment()
        replacement = [FileStorageObserver(str(tmp_path))]
        job.override_observers(replacement)
        assert job.experiment.observers == replacement

    def test_is_abstract(self):
        with pytest.raises(TypeError):
            Job()
