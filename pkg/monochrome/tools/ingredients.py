from sacred import Ingredient

from .colorers import AdversarialColorer, HamiltonColorer, KOutColorer
from .loggers import SacredMetricLogger
from .samplers import HamiltonSampler, KOutSampler, PairingSampler


def make_sampler(model: str = "hamilton-sum", **kwargs):
    """
    :param model: str. Defaults to 'hamilton-sum'. Used to specify which random model is
        sampled. Supported identifiers: 'hamilton-sum', 'kout', 'pairing'.
    :param kwargs: kwargs passed directly to Sampler classes
    :return: Sampler object specified by `model`
    """
    if model == "hamilton-sum":
        return HamiltonSampler(**kwargs)
    elif model == "kout":
        return KOutSampler(**kwargs)
    elif model == "pairing":
        return PairingSampler(**kwargs)
    else:
        raise ValueError(
            "arg `model` had value: {} which is not supported. "
            "Check ingredient docs for supported strings "
            "identifiers".format(model)
        )


def make_colorer(colorer_type: str = "hamilton", **kwargs):
    """
    :param colorer_type: str. Defaults to 'hamilton'. Possible values include:
        'hamilton', 'kout', 'adversarial'.
    :param kwargs: kwargs passed directly to Colorer classes
    :return: Colorer object specified by 'colorer_type'
    """
    if colorer_type == "hamilton":
        return HamiltonColorer(**kwargs)
    elif colorer_type == "kout":
        return KOutColorer(**kwargs)
    elif colorer_type == "adversarial":
        return AdversarialColorer(**kwargs)
    else:
        raise ValueError(
            "arg `colorer_type` had value: {} which is not supported. Check "
            "ingredient docs for supported string identifiers".format(colorer_type)
        )


# ===== Sampler Ingredient(s) ===== #
sampler_ingredient = Ingredient("sampler")
get_sampler = sampler_ingredient.capture(make_sampler)

# ===== Colorer Ingredient(s) ===== #
colorer_ingredient = Ingredient("colorer")
get_colorer = colorer_ingredient.capture(make_colorer)

# ===== Logger Ingredient(s) ===== #
logger_ingredient = Ingredient("metric_logger")
get_logger = logger_ingredient.capture(SacredMetricLogger)
