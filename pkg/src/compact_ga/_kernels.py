"""Jitted inner loops for cGA runs.

These mirror the pure-numpy operations in `model`, `benchmarks`, and `noise`
bit for bit: numba's np.random.Generator support draws from the same PCG64
state with the same algorithms, so a kernel run and an equivalent
sample/evaluate/update loop written against the public API produce identical
traces. The test suite pins this equivalence.

Draw order per generation: n uniforms for the first individual, n for the
second, then (only if sigma > 0 and no optimum was sampled) one Gaussian per
individual.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import benchmarks

KIND_ONEMAX = 0
KIND_LEADINGONES = 1
KIND_JUMP = 2
KIND_DLB = 3

_KIND_CODES = {
    benchmarks.ONEMAX: KIND_ONEMAX,
    benchmarks.LEADINGONES: KIND_LEADINGONES,
    benchmarks.JUMP: KIND_JUMP,
    benchmarks.DLB: KIND_DLB,
}


def kind_code(kind: str) -> int:
    return _KIND_CODES[kind]


@njit(cache=True)
def _fitness(kind, x, m, n, k):
    if kind == KIND_ONEMAX:
        return m
    if kind == KIND_LEADINGONES:
        f = 0
        for j in range(n):
            if x[j] != 1:
                break
            f += 1
        return f
    if kind == KIND_JUMP:
        if m <= n - k or m == n:
            return k + m
        return n - m
    # dlb; n is even
    f = 0
    for i in range(0, n, 2):
        if x[i] == 1 and x[i + 1] == 1:
            f += 2
        else:
            if x[i] == 0 and x[i + 1] == 0:
                f += 1
            break
    return f


@njit(cache=True)
def run_bounded(freqs, mu, kind, k, fmax, sigma, max_gens, rng, hit_out):
    """Run up to max_gens cGA generations on freqs (mutated in place).

    Returns (success, generations_run). Success is declared the first
    generation either sampled individual attains fitness fmax, judged on true
    fitness before noise and before the update; the run stops there and the
    optimal sample is copied into hit_out.
    """
    n = freqs.shape[0]
    lo = 1.0 / n
    hi = 1.0 - 1.0 / n
    step = 1.0 / mu
    x1 = np.empty(n, np.int8)
    x2 = np.empty(n, np.int8)
    for g in range(1, max_gens + 1):
        m1 = 0
        for j in range(n):
            if rng.random() < freqs[j]:
                x1[j] = 1
                m1 += 1
            else:
                x1[j] = 0
        m2 = 0
        for j in range(n):
            if rng.random() < freqs[j]:
                x2[j] = 1
                m2 += 1
            else:
                x2[j] = 0
        f1 = _fitness(kind, x1, m1, n, k)
        f2 = _fitness(kind, x2, m2, n, k)
        if f1 == fmax or f2 == fmax:
            src = x1 if f1 == fmax else x2
            for j in range(n):
                hit_out[j] = src[j]
            return True, g
        if sigma > 0.0:
            p1 = f1 + sigma * rng.standard_normal()
            p2 = f2 + sigma * rng.standard_normal()
        else:
            p1 = float(f1)
            p2 = float(f2)
        if p1 >= p2:
            for j in range(n):
                d = x1[j] - x2[j]
                if d != 0:
                    v = freqs[j] + d * step
                    freqs[j] = min(max(v, lo), hi)
        else:
            for j in range(n):
                d = x2[j] - x1[j]
                if d != 0:
                    v = freqs[j] + d * step
                    freqs[j] = min(max(v, lo), hi)
    return False, max_gens


@njit(cache=True)
def drift_first_hit(freqs, mu, max_gens, rng):
    """Generations until the frequency of neutral bit 0 first reaches a margin.

    Fitness is the one-count of bits 1..n-1, so bit 0 carries no signal and
    its frequency performs an unbiased +-1/mu walk. There is no optimum
    termination. Returns -1 if no margin was reached within max_gens.
    """
    n = freqs.shape[0]
    lo = 1.0 / n
    hi = 1.0 - 1.0 / n
    step = 1.0 / mu
    x1 = np.empty(n, np.int8)
    x2 = np.empty(n, np.int8)
    for g in range(1, max_gens + 1):
        m1 = 0
        for j in range(n):
            if rng.random() < freqs[j]:
                x1[j] = 1
                if j > 0:
                    m1 += 1
            else:
                x1[j] = 0
        m2 = 0
        for j in range(n):
            if rng.random() < freqs[j]:
                x2[j] = 1
                if j > 0:
                    m2 += 1
            else:
                x2[j] = 0
        if m1 >= m2:
            w, l = x1, x2
        else:
            w, l = x2, x1
        hit = False
        for j in range(n):
            d = w[j] - l[j]
            if d != 0:
                v = freqs[j] + d * step
                # crossing or exactly landing on a margin means the clamped
                # value equals the margin
                if j == 0 and (v <= lo or v >= hi):
                    hit = True
                freqs[j] = min(max(v, lo), hi)
        if hit:
            return g
    return -1
