"""
Closed-form bounds behind the long monochromatic cycle argument.

A graph with at least c1*n edges in which every set S of at most k vertices spans at most
c2*|S| edges contains a cycle of length at least (k/2 - 1)(sqrt(c1/c2) - 1), provided that
quantity is at least 2. In the random models the local sparseness holds for k = delta*n,
with delta given by `sparseness_delta`; the majority color supplies the c1*n edges.
"""
import math
from typing import NamedTuple, Optional

import numpy as np
from scipy.special import logsumexp

MIN_HYPOTHESIS = 2.0


def log_sparseness_delta(d: float, c: float) -> float:
    if not d >= 2:
        raise ValueError(f"need d >= 2, got d={d}")
    if not 1 < c < d:
        raise ValueError(f"need 1 < c < d, got c={c}, d={d}")
    log_base = -math.log(3.0) + c * math.log(c) - (1.0 + c) - c * math.log(d)
    return log_base / (c - 1.0)


def sparseness_delta(d: float, c: float) -> float:
    """
    delta = ((1/3) * c^c / (e^(1+c) * d^c)) ^ (1/(c-1)), the scale below which every vertex
    set of a random d-regular graph spans at most c|S| edges whp. Evaluated in log space;
    values underflow to 0.0 only below ~1e-308.

    :param d: float. Degree, at least 2.
    :param c: float. Density cap, strictly between 1 and d.
    :return: float.
    """
    return math.exp(log_sparseness_delta(d, c))


def sparseness_union_bound(n: int, d: float, c: float, kmax: int) -> float:
    """
    First-moment bound sum_{k=1..kmax} (e^(1+c) d^c / c^c * (k/n)^(c-1))^k on the
    probability that some set of at most kmax vertices spans more than c|S| edges in the
    pairing model. Values above 1 are returned as computed (the bound is then vacuous).
    """
    if not 1 < c < d:
        raise ValueError(f"need 1 < c < d, got c={c}, d={d}")
    if not 1 <= kmax <= n:
        raise ValueError(f"need 1 <= kmax <= n, got kmax={kmax}, n={n}")
    k = np.arange(1, kmax + 1, dtype=np.float64)
    log_term = (1.0 + c) + c * math.log(d) - c * math.log(c)
    log_terms = k * (log_term + (c - 1.0) * np.log(k / n))
    return float(np.exp(logsumexp(log_terms)))


class CycleBoundInput(NamedTuple):
    c1: float
    c2: float
    k: float

    def hypothesis_value(self) -> float:
        return (self.k / 2.0 - 1.0) * (math.sqrt(self.c1 / self.c2) - 1.0)


class CycleBound(NamedTuple):
    value: Optional[float]
    hypothesis: float
    holds: bool


def cycle_bound(bound_input: CycleBoundInput) -> CycleBound:
    """
    :param bound_input: CycleBoundInput with c1 > c2 > 1 and k > 0.
    :return: CycleBound. ``value`` is the guaranteed cycle length
        (k/2 - 1)(sqrt(c1/c2) - 1) when the hypothesis (the same quantity >= 2) holds,
        otherwise None with ``holds`` False.
    """
    c1, c2, k = bound_input
    if not c1 > c2 > 1:
        raise ValueError(f"need c1 > c2 > 1, got c1={c1}, c2={c2}")
    if not k > 0:
        raise ValueError(f"locality scale must be positive, got k={k}")
    hypothesis = bound_input.hypothesis_value()
    holds = hypothesis >= MIN_HYPOTHESIS
    return CycleBound(hypothesis if holds else None, hypothesis, holds)


class LongCycleRegime(NamedTuple):
    """Constants of one model: majority-color density c1, local cap c2, the degree fed to
    `sparseness_delta`, and the resulting delta."""

    model: str
    r: int
    c1: float
    c2: float
    d: int
    delta: float

    def gamma_n(self, n: int) -> float:
        """(delta*n/2 - 1)(sqrt(c1/c2) - 1); negative when delta*n < 2."""
        return CycleBoundInput(self.c1, self.c2, self.delta * n).hypothesis_value()

    def majority_edges(self, n: int) -> float:
        """Edge count every majority-color subgraph reaches: c1 * n."""
        return self.c1 * n

    def floor_at(self, k: float) -> CycleBound:
        """The cycle guarantee with locality scale k in place of delta*n."""
        return cycle_bound(CycleBoundInput(self.c1, self.c2, k))


def gamma_regular(r: int) -> LongCycleRegime:
    """(2r+1)-regular graphs colored with r colors: c1 = 1 + 1/(2r), c2 = 1 + 1/(4r)."""
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    c1 = 1.0 + 1.0 / (2 * r)
    c2 = 1.0 + 1.0 / (4 * r)
    d = 2 * r + 1
    return LongCycleRegime("regular", r, c1, c2, d, sparseness_delta(d, c2))


def gamma_kout(r: int) -> LongCycleRegime:
    """
    (r+1)-out graphs colored with r colors: (r+1)n edges, c1 = 1 + 1/r, c2 = 1 + 1/(2r).
    delta is evaluated at the average degree d = 2(r+1).
    """
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    c1 = 1.0 + 1.0 / r
    c2 = 1.0 + 1.0 / (2 * r)
    d = 2 * (r + 1)
    return LongCycleRegime("kout", r, c1, c2, d, sparseness_delta(d, c2))


def get_regime(model: str, r: int) -> LongCycleRegime:
    if model in ("regular", "pairing"):
        return gamma_regular(r)
    elif model == "kout":
        return gamma_kout(r)
    else:
        raise ValueError(
            f"arg `model` had value: {model} which is not supported. "
            "Only ['regular', 'pairing', 'kout'] are supported."
        )
