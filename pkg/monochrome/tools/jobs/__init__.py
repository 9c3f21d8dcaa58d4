from .job import Job
from .experiment_config import ExperimentConfig
from .experiment import ScalingExperiment, run_experiment
from .adversarial import AdversarialProbe, run_adversarial
from .search import GridSearch
