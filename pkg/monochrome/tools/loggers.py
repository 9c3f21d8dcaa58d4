from numbers import Number

from sacred.run import Run


class SacredMetricLogger(object):
    def __init__(self, _run: Run, log_rate: int = 1):
        self.run = _run
        self.log_rate = log_rate

    def on_record(self, step: int, record):
        """Logs every numeric field of a RunRecord; lists are logged per color."""
        if step % self.log_rate != 0:
            return
        for key, value in record.to_dict().items():
            if isinstance(value, bool) or value is None:
                continue
            if isinstance(value, Number):
                self.run.log_scalar("{}".format(key), value=value, step=step)
            elif isinstance(value, list) and all(isinstance(v, Number) for v in value):
                for color, v in enumerate(value, start=1):
                    self.run.log_scalar(f"{key}_{color}", value=v, step=step)

    def on_summary(self, summary):
        self.run.result = summary.as_dict()
