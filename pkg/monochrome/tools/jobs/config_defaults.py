from monochrome.graphs.adversaries import STRATEGIES
from monochrome.graphs.audits import DEFAULT_AUDIT_BUDGET
from monochrome.graphs.coloring import (
    HAMILTON_BLOCK_EXPONENT,
    HAMILTON_PATH_EXPONENT,
    KOUT_BLOCK_EXPONENT,
    KOUT_ESTAR_EXPONENT,
    KOUT_PEEL_EXPONENT,
)
from monochrome.graphs.cycles import DEFAULT_RESTARTS


# General to all Jobs
run_config = {  # Defines kwargs used when running a job
    "storage_dir": "./sacred_storage",
    "mongo_url": None,
    "mongo_db": "monochrome",
    "capture_output": True,
    "n_grid": [1000, 10000],
    "trials": 10,
    "seed": 0,
    "jobs": 1,
    "out": "./results",
    "format": "csv",
    "record_timings": False,
    "root_dir": None,
}
sampler_config = {  # Passed directly to sampler classes
    "model": "hamilton-sum",
    "r": 2,
}
colorer_config = {  # Passed directly to colorer classes
    "colorer_type": "hamilton",
    "r": 2,
    "block_exponent": HAMILTON_BLOCK_EXPONENT,
    "path_exponent": HAMILTON_PATH_EXPONENT,
    "kout_block_exponent": KOUT_BLOCK_EXPONENT,
    "peel_exponent": KOUT_PEEL_EXPONENT,
    "estar_exponent": KOUT_ESTAR_EXPONENT,
}
audit_config = {  # Local density audit and long cycle search
    "smax": 12,
    "audit_budget": DEFAULT_AUDIT_BUDGET,
    "reduce": True,
    "cycle_budget": None,
    "restarts": DEFAULT_RESTARTS,
}
adversarial_config = {
    "strategies": list(STRATEGIES),
}
logger_config = {  # Passed directly to SacredMetricLogger
    "log_rate": 1,
}

# Flat view used by config files and the command line
experiment_config = {
    "name": "monochrome",
    "model": sampler_config["model"],
    "r": sampler_config["r"],
    "n_grid": run_config["n_grid"],
    "trials": run_config["trials"],
    "seed": run_config["seed"],
    "jobs": run_config["jobs"],
    "out": run_config["out"],
    "format": run_config["format"],
    "record_timings": run_config["record_timings"],
    "strategies": adversarial_config["strategies"],
    "degree": None,
    "k": None,
    "distinct": False,
    "simple": False,
    "block_exponent": HAMILTON_BLOCK_EXPONENT,
    "path_exponent": HAMILTON_PATH_EXPONENT,
    "kout_block_exponent": KOUT_BLOCK_EXPONENT,
    "peel_exponent": KOUT_PEEL_EXPONENT,
    "estar_exponent": KOUT_ESTAR_EXPONENT,
    **audit_config,
}
