from monochrome.tools.loggers import SacredMetricLogger
from monochrome.tools.records import RunRecord


class FakeRun:
    def __init__(self):
        self.scalars = []
        self.result = None

    def log_scalar(self, name, value, step):
        self.scalars.append((name, value, step))


class TestSacredMetricLogger:
    def test_numeric_fields_only(self):
        run = FakeRun()
        logger = SacredMetricLogger(run)
        rec = RunRecord(model="kout", r=2, n=100, max_components=[9, 4], path_ok=True)
        logger.on_record(0, rec)
        assert ("r", 2, 0) in run.scalars
        assert ("max_components_1", 9, 0) in run.scalars
        assert ("max_components_2", 4, 0) in run.scalars
        assert not [name for name, _, _ in run.scalars if name in ("model", "path_ok")]

    def test_log_rate(self):
        run = FakeRun()
        logger = SacredMetricLogger(run, log_rate=2)
        for step in range(4):
            logger.on_record(step, RunRecord(n=step))
        assert [step for _, _, step in run.scalars] == [0, 2]
