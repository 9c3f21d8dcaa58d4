from copy import deepcopy
from pathlib import Path

from monochrome.graphs import ConfigError
from monochrome.graphs.adversaries import STRATEGIES
from monochrome.graphs.utils import as_seed

from ..converters import read_flat_config
from . import config_defaults as cd

MODELS = ("hamilton-sum", "kout", "pairing")
FORMATS = ("csv", "json")
EXPONENTS = (
    "block_exponent",
    "path_exponent",
    "kout_block_exponent",
    "peel_exponent",
    "estar_exponent",
)
RUN_KEYS = ("n_grid", "trials", "seed", "jobs", "out", "format", "record_timings")
COLORER_FOR_MODEL = {"hamilton-sum": "hamilton", "kout": "kout", "pairing": "adversarial"}


class ExperimentConfig(object):
    def __init__(self, **values):
        """
        Flat experiment description, the common currency of config files, the CLI and the
        sacred jobs. Unset keys take the values in `config_defaults.experiment_config`.

        :param values: any key of `config_defaults.experiment_config`.
        """
        unknown = set(values) - set(cd.experiment_config)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        self.values = deepcopy(cd.experiment_config)
        self.values.update(values)

    def __getattr__(self, name):
        values = self.__dict__.get("values", {})
        if name in values:
            return values[name]
        raise AttributeError(name)

    @classmethod
    def from_file(cls, path, **overrides) -> "ExperimentConfig":
        values = read_flat_config(path)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def replace(self, **values) -> "ExperimentConfig":
        return ExperimentConfig(**dict(self.values, **values))

    def validate(self, kind: str = "experiment") -> "ExperimentConfig":
        """
        :param kind: str. 'experiment', 'adversarial', or 'sample' (model checks only).
        :return: self, when valid.
        :raises ConfigError: naming the first violated condition.
        """
        v = self.values
        if v["model"] not in MODELS:
            raise ConfigError(f"model must be one of {list(MODELS)}, got {v['model']!r}")
        if not isinstance(v["r"], int) or v["r"] < 2:
            raise ConfigError(f"r must be an integer >= 2, got {v['r']!r}")
        grid = v["n_grid"]
        if isinstance(grid, int):
            grid = v["n_grid"] = [grid]
        if not grid or not all(isinstance(n, int) for n in grid):
            raise ConfigError(f"n_grid must be a non-empty list of integers, got {grid!r}")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ConfigError(f"n_grid must be strictly increasing, got {grid}")
        if grid[0] < max(3, v["r"]):
            raise ConfigError(f"n_grid values must be at least max(3, r), got {grid[0]}")
        if not isinstance(v["trials"], int) or v["trials"] < 1:
            raise ConfigError(f"trials must be at least 1, got {v['trials']!r}")
        if not isinstance(v["jobs"], int) or v["jobs"] < 1:
            raise ConfigError(f"jobs must be at least 1, got {v['jobs']!r}")
        if v["format"] not in FORMATS:
            raise ConfigError(f"format must be one of {list(FORMATS)}, got {v['format']!r}")
        try:
            as_seed(v["seed"])
        except (TypeError, ValueError) as e:
            raise ConfigError(str(e))
        strategies = v["strategies"]
        if isinstance(strategies, str):
            strategies = v["strategies"] = [strategies]
        unknown = [s for s in strategies or [] if s not in STRATEGIES]
        if unknown:
            raise ConfigError(f"unknown strategies {unknown}, expected {list(STRATEGIES)}")
        for name in EXPONENTS:
            if not 0 < v[name] < 1:
                raise ConfigError(f"{name} must lie in (0, 1), got {v[name]}")
        if v["smax"] < 1:
            raise ConfigError(f"smax must be at least 1, got {v['smax']}")
        degree = self.degree
        if v["model"] == "pairing" and any((n * degree) % 2 for n in grid):
            raise ConfigError(f"n * d must be even for every n, d={degree}")
        if kind == "experiment":
            if v["model"] == "kout" and self.k != v["r"]:
                raise ConfigError(f"the k-out coloring needs k = r, got k={self.k}")
            if v["model"] == "pairing" and not strategies:
                raise ConfigError("pairing experiments need a coloring strategy")
        elif kind == "sample":
            pass
        elif kind == "adversarial":
            if not strategies:
                raise ConfigError("adversarial runs need at least one strategy")
            if v["model"] == "pairing" and degree != 2 * v["r"] + 1:
                raise ConfigError(f"adversarial pairing runs need d = 2r + 1, got d={degree}")
            elif v["model"] == "kout" and self.k != v["r"] + 1:
                raise ConfigError(f"adversarial k-out runs need k = r + 1, got k={self.k}")
            elif v["model"] == "hamilton-sum":
                raise ConfigError("adversarial runs use the pairing or kout model")
        else:
            raise ValueError(f"unknown validation kind {kind!r}")
        return self

    @property
    def degree(self) -> int:
        """Pairing-model degree; defaults to 2r + 1."""
        return self.values["degree"] or 2 * self.values["r"] + 1

    @property
    def k(self) -> int:
        """k-out out-degree; defaults to r."""
        return self.values["k"] or self.values["r"]

    @property
    def records_path(self) -> Path:
        return Path(self.values["out"]) / "records.jsonl"

    @property
    def summary_path(self) -> Path:
        return Path(self.values["out"]) / f"summary.{self.values['format']}"

    def sampler_config(self) -> dict:
        v = self.values
        config = {"model": v["model"], "r": v["r"]}
        if v["model"] == "pairing":
            config.update(d=self.degree, simple=v["simple"])
        elif v["model"] == "kout":
            config.update(k=self.k, distinct=v["distinct"])
        return config

    def colorer_config(self) -> dict:
        v = self.values
        config = {"colorer_type": COLORER_FOR_MODEL[v["model"]], "r": v["r"]}
        config.update({name: v[name] for name in EXPONENTS})
        if v["model"] == "pairing":
            config["strategy"] = v["strategies"][0]
        return config

    def audit_config(self) -> dict:
        v = self.values
        return {
            "smax": v["smax"],
            "audit_budget": v["audit_budget"],
            "reduce": v["reduce"],
            "cycle_budget": v["cycle_budget"],
            "restarts": v["restarts"],
        }

    def to_exp_config(self) -> dict:
        """Nested sacred config, the shape `Job.add_config_defaults` fills in."""
        v = self.values
        return {
            "name": v["name"],
            "run_config": {
                "n_grid": list(v["n_grid"]),
                "trials": v["trials"],
                "seed": v["seed"],
                "jobs": v["jobs"],
                "out": str(v["out"]),
                "format": v["format"],
                "record_timings": v["record_timings"],
            },
            "sampler_config": self.sampler_config(),
            "colorer_config": self.colorer_config(),
            "audit_config": self.audit_config(),
            "adversarial_config": {"strategies": list(v["strategies"] or [])},
        }

    @classmethod
    def from_exp_config(cls, exp_config: dict) -> "ExperimentConfig":
        run = exp_config["run_config"]
        sampler = exp_config["sampler_config"]
        colorer = exp_config["colorer_config"]
        audit = exp_config["audit_config"]
        strategies = list(exp_config["adversarial_config"]["strategies"])
        if sampler["model"] == "pairing" and colorer.get("strategy"):
            strategies = [colorer["strategy"]] + [
                s for s in strategies if s != colorer["strategy"]
            ]
        values = dict(
            name=exp_config.get("name") or cd.experiment_config["name"],
            model=sampler["model"],
            r=sampler["r"],
            degree=sampler.get("d"),
            k=sampler.get("k"),
            distinct=sampler.get("distinct", False),
            simple=sampler.get("simple", False),
            strategies=strategies,
            smax=audit["smax"],
            audit_budget=audit["audit_budget"],
            reduce=audit["reduce"],
            cycle_budget=audit["cycle_budget"],
            restarts=audit["restarts"],
            **{k: run[k] for k in RUN_KEYS},
            **{name: colorer[name] for name in EXPONENTS if name in colorer},
        )
        return cls(**values)

    def __repr__(self):
        return f"ExperimentConfig({self.values})"
