"""The four pseudo-Boolean test functions and optimum detection.

All four functions attain their unique maximum at the all-ones string, which
is what optimum detection relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

ONEMAX = "onemax"
LEADINGONES = "leadingones"
JUMP = "jump"
DLB = "dlb"

KINDS = (ONEMAX, LEADINGONES, JUMP, DLB)


@dataclass(frozen=True)
class BenchmarkSpec:
    kind: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown benchmark {self.kind!r}, expected one of {KINDS}")
        if self.n < 1:
            raise ValueError(f"dimension must be positive, got n={self.n}")
        if self.kind == JUMP:
            if self.k is None:
                raise ValueError("jump requires a jump size k")
            if not 1 <= self.k <= self.n:
                raise ValueError(f"jump size must satisfy 1 <= k <= n, got k={self.k}, n={self.n}")
        elif self.k is not None:
            raise ValueError(f"{self.kind} takes no jump size")
        if self.kind == DLB and self.n % 2 != 0:
            raise ValueError(f"dlb requires an even dimension, got n={self.n}")


def one_max(x: np.ndarray) -> int:
    """Number of one-bits."""
    return int(np.sum(x))


def leading_ones(x: np.ndarray) -> int:
    """Length of the maximal all-ones prefix."""
    x = np.asarray(x)
    zeros = np.flatnonzero(x == 0)
    return int(zeros[0]) if zeros.size else x.shape[0]


def jump(x: np.ndarray, k: int) -> int:
    """OneMax with a width-k low-fitness valley just below the optimum.

    With m one-bits out of n: k + m if m <= n - k or m = n, else n - m.
    The unique maximum n + k is attained only by the all-ones string.
    """
    x = np.asarray(x)
    n = x.shape[0]
    if not 1 <= k <= n:
        raise ValueError(f"jump size must satisfy 1 <= k <= n, got k={k}, n={n}")
    m = int(np.sum(x))
    if m <= n - k or m == n:
        return k + m
    return n - m


def dlb(x: np.ndarray) -> int:
    """Deceptive leading blocks over non-overlapping 2-bit blocks, left to right.

    Each leading 11-block adds 2; the first non-11 block adds 1 if it is 00,
    else 0; everything after it adds nothing.
    """
    x = np.asarray(x)
    n = x.shape[0]
    if n % 2 != 0:
        raise ValueError(f"dlb requires an even dimension, got n={n}")
    f = 0
    for i in range(0, n, 2):
        if x[i] == 1 and x[i + 1] == 1:
            f += 2
        else:
            if x[i] == 0 and x[i + 1] == 0:
                f += 1
            break
    return f


def evaluate(spec: BenchmarkSpec, x: np.ndarray) -> int:
    """True (noiseless) fitness of x under spec."""
    if spec.kind == ONEMAX:
        return one_max(x)
    if spec.kind == LEADINGONES:
        return leading_ones(x)
    if spec.kind == JUMP:
        return jump(x, spec.k)
    return dlb(x)


def fitness_function(spec: BenchmarkSpec) -> Callable[[np.ndarray], int]:
    """The spec's fitness as a plain callable."""
    return lambda x: evaluate(spec, x)


def optimum_fitness(spec: BenchmarkSpec) -> int:
    """The global maximum value (attained only at the all-ones string)."""
    return spec.n + spec.k if spec.kind == JUMP else spec.n


def is_optimum(spec: BenchmarkSpec, x: np.ndarray) -> bool:
    """True iff x attains the global maximum, judged on true fitness."""
    x = np.asarray(x)
    if x.shape[0] != spec.n:
        raise ValueError(f"dimension mismatch: spec.n={spec.n}, len(x)={x.shape[0]}")
    return evaluate(spec, x) == optimum_fitness(spec)
