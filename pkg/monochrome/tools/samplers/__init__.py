"""
Sub-package containing all sampler classes
"""
from .sampler import Sample, Sampler
from .hamilton_sampler import HamiltonSampler
from .kout_sampler import KOutSampler
from .pairing_sampler import PairingSampler
