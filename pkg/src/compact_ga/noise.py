"""Additive centered Gaussian posterior noise with fresh-sample semantics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import RandomSource


@dataclass(frozen=True)
class NoiseSpec:
    """Variance of the Gaussian perturbation added to every fitness evaluation."""

    variance: float = 0.0

    def __post_init__(self):
        if self.variance < 0:
            raise ValueError(f"variance must be >= 0, got {self.variance}")

    @property
    def sigma(self) -> float:
        return math.sqrt(self.variance)


def noisy_eval(
    f: Callable[[np.ndarray], float],
    x: np.ndarray,
    spec: NoiseSpec,
    rng: RandomSource,
) -> float:
    """Perceived fitness f(x) + D with D freshly drawn from N(0, variance).

    Every call resamples D. Zero variance short-circuits without consuming a
    Gaussian draw, so noise-free traces match a build without this layer;
    equal-seed runs at different variances are therefore unrelated streams.
    """
    value = float(f(x))
    if spec.variance == 0.0:
        return value
    return value + spec.sigma * rng.generator.standard_normal()
