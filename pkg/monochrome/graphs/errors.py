"""
Exceptions shared by the algorithm layer and the experiment harness
"""


class ConfigError(ValueError):
    """Experiment configuration is invalid."""


class ColoringError(ValueError):
    """Coloring is not total on its graph, or uses colors outside 1..r."""


class ContractViolation(RuntimeError):
    """A deterministic structural guarantee of a coloring or audit failed."""


class SamplingError(RuntimeError):
    """Rejection sampler exhausted its attempt budget."""


class AuditBudgetError(RuntimeError):
    """
    Exhaustive search refused because it would exceed its budget.

    :param message: str. Human readable reason.
    :param count: int. Work done (sets enumerated, vertices) when the guard triggered.
    """

    def __init__(self, message: str, count: int = 0):
        super().__init__(message)
        self.count = count
