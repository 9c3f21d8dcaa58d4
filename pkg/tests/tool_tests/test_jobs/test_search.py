from monochrome.tools.jobs import AdversarialProbe, GridSearch, ScalingExperiment


class TestGridSearch:
    GRID_CONFIG = {
        "r": [2, 3],
        "n_grid": [[100, 200]],
    }

    def test_basic_grid_search(self, run_config):
        job = GridSearch(
            job=ScalingExperiment(exp_config={"name": "test", "run_config": run_config}),
            grid=self.GRID_CONFIG,
            exp_config={"name": "test", "run_config": run_config},
        )
        run = job.run()
        points = run.result["points"]
        assert [p["point"]["r"] for p in points] == [2, 3]
        assert [p["fits"][0]["r"] for p in points] == [2, 3]

    def test_total_points(self, run_config):
        job = GridSearch(
            job=ScalingExperiment(exp_config={"name": "test", "run_config": run_config}),
            grid=self.GRID_CONFIG,
            total_points=1,
            exp_config={"name": "test", "run_config": run_config},
        )
        assert len(job.run().result["points"]) == 1

    def test_invalid_points_are_skipped(self, run_config):
        base = {
            "name": "test",
            "run_config": dict(run_config, n_grid=[120], trials=1),
            "sampler_config": {"model": "kout", "r": 2},
            "audit_config": {"smax": 3},
        }
        job = GridSearch(
            job=AdversarialProbe(exp_config=base),
            grid={"k": [2, 3], "strategy": ["greedy-balanced"]},
            exp_config={"name": "test", "run_config": run_config},
        )
        points = job.run().result["points"]
        assert [p["point"]["k"] for p in points] == [3]
