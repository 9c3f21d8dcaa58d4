import math

from monochrome.graphs import mix_seed
from monochrome.tools.jobs import ExperimentConfig, ScalingExperiment, run_experiment
from monochrome.tools.records import read_records


class TestRunExperiment:
    def test_hamilton_sum(self, tmp_path):
        cfg = ExperimentConfig(n_grid=[200, 400], trials=2, seed=4, out=str(tmp_path))
        records, summary = run_experiment(cfg)
        assert [(rec.n, rec.trial) for rec in records] == [(200, 0), (200, 1), (400, 0), (400, 1)]
        assert [rec.seed for rec in records] == [
            mix_seed(4, n, t) for n in (200, 400) for t in range(2)
        ]
        assert read_records(cfg.records_path) == records
        assert cfg.summary_path.exists()
        for rec in records:
            assert rec.kind == "coloring" and rec.model == "hamilton-sum"
            assert rec.max_block_size <= math.ceil(rec.n ** 0.7)
            assert rec.max_component == max(rec.max_components)
            assert rec.path_ok is not None
            assert rec.wall_time is None
        assert ("hamilton-sum", 2) in summary.fits

    def test_kout(self, tmp_path):
        cfg = ExperimentConfig(model="kout", n_grid=[1000, 2000], trials=1, out=str(tmp_path))
        records, summary = run_experiment(cfg)
        for rec in records:
            assert rec.estar_size is not None
            assert rec.class_max_order <= rec.n
            assert rec.max_arborescence_order <= rec.n ** 0.85
        assert len(summary.rows) == 2

    def test_kout_estar_rate(self, tmp_path):
        cfg = ExperimentConfig(model="kout", n_grid=[10000], trials=4, out=str(tmp_path))
        records, summary = run_experiment(cfg)
        rate = sum(rec.estar_ok for rec in records) / len(records)
        assert summary.rows[0]["estar_ok_rate"] == rate
        for rec in records:
            assert rec.estar_ok == (rec.estar_size < 10000 ** 0.2)
            assert rec.estar_size <= 10000 ** 0.15 * math.log(10000) + 10000 ** 0.1

    def test_pairing_uses_first_strategy(self, tmp_path):
        cfg = ExperimentConfig(
            model="pairing",
            n_grid=[100],
            trials=2,
            strategies=["uniform-random", "greedy-balanced"],
            out=str(tmp_path),
        )
        records, _ = run_experiment(cfg)
        assert len(records) == 2
        assert {rec.strategy for rec in records} == {"uniform-random"}

    def test_workers_do_not_change_records(self, tmp_path):
        cfg = ExperimentConfig(n_grid=[200, 300], trials=2, out=str(tmp_path / "serial"))
        serial, _ = run_experiment(cfg)
        parallel, _ = run_experiment(cfg.replace(jobs=2, out=str(tmp_path / "pool")))
        assert serial == parallel

    def test_timings(self, tmp_path):
        cfg = ExperimentConfig(n_grid=[100], trials=1, record_timings=True, out=str(tmp_path))
        records, _ = run_experiment(cfg)
        assert records[0].wall_time > 0

    def test_on_record(self, tmp_path):
        steps = []
        cfg = ExperimentConfig(n_grid=[100], trials=3, out=str(tmp_path))
        run_experiment(cfg, on_record=lambda step, rec: steps.append((step, rec.trial)))
        assert steps == [(0, 0), (1, 1), (2, 2)]


class TestScalingExperiment:
    def test_run(self, run_config):
        job = ScalingExperiment({"name": "test", "run_config": run_config})
        run = job.run()
        assert len(run.result["rows"]) == 2
        assert run.result["fits"][0]["model"] == "hamilton-sum"
        assert job.exp_config["run_config"]["root_dir"].exists()
        assert len(read_records(f"{run_config['out']}/records.jsonl")) == 4

    def test_kout_job(self, run_config):
        job = ScalingExperiment(
            {
                "name": "test",
                "run_config": dict(run_config, n_grid=[1000], trials=1),
                "sampler_config": {"model": "kout", "r": 2},
                "colorer_config": {"colorer_type": "kout", "r": 2},
            }
        )
        run = job.run()
        assert run.result["rows"][0]["model"] == "kout"
        assert run.result["fits"] == []
