"""
Module containing seeding and small numeric helpers shared by the graph modules
"""
import math

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB


def as_seed(value) -> int:
    """
    :param value: int-like. Candidate seed.
    :return: int. The seed, checked to be a 64-bit unsigned integer.
    """
    seed = int(value)
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed {value} is not a 64-bit unsigned integer")
    return seed


def _splitmix64(x: int) -> int:
    x = (x + GOLDEN_GAMMA) & MASK64
    x = ((x ^ (x >> 30)) * MIX_MULTIPLIER_1) & MASK64
    x = ((x ^ (x >> 27)) * MIX_MULTIPLIER_2) & MASK64
    return x ^ (x >> 31)


def mix_seed(master: int, *keys: int) -> int:
    """
    Derives a child seed from a master seed and any number of integer keys (e.g. n and the
    trial index). Each key is folded in with one splitmix64 round:
    ``state = splitmix64(state xor key)``, starting from ``splitmix64(master)``.

    :param master: int. 64-bit master seed.
    :param keys: ints. Non-negative keys identifying the stream.
    :return: int. 64-bit derived seed.
    """
    state = _splitmix64(as_seed(master))
    for key in keys:
        state = _splitmix64(state ^ (int(key) & MASK64))
    return state


def get_rng(seed) -> np.random.Generator:
    """
    :param seed: int or np.random.Generator. Seeds are fed to numpy's PCG64 bit generator.
    :return: np.random.Generator.
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(as_seed(seed)))


def power(n: int, exponent: float) -> float:
    """n ** exponent as a float."""
    return float(n) ** exponent


def ceil_power(n: int, exponent: float) -> int:
    return int(math.ceil(power(n, exponent)))


def floor_power(n: int, exponent: float) -> int:
    return int(math.floor(power(n, exponent)))
