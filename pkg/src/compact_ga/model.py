"""Probabilistic model of the cGA: frequency vector, sampling, margin-clamped update."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Fixed generator algorithm; recorded in output metadata. Reproducibility is
# guaranteed within one build, not across numpy versions.
GENERATOR_ALGORITHM = "PCG64"


class RandomSource:
    """Seeded random stream with deterministic child derivation.

    Wraps a numpy PCG64 generator seeded through a SeedSequence. Children are
    derived from (seed, spawn key) so that e.g. restart round 3 of a run always
    sees the same stream regardless of how much randomness earlier rounds
    consumed.
    """

    def __init__(self, seed: int, key: tuple[int, ...] = ()):
        self.seed = int(seed)
        self.key = tuple(int(i) for i in key)
        self._seq = np.random.SeedSequence(self.seed, spawn_key=self.key)
        self.generator = np.random.Generator(np.random.PCG64(self._seq))

    def child(self, *indices: int) -> "RandomSource":
        """Independent stream deterministically derived from this source's identity."""
        return RandomSource(self.seed, self.key + tuple(indices))

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed}, key={self.key})"


@dataclass(frozen=True)
class CgaParams:
    """Problem dimension and hypothetical population size.

    mu is a real >= 1: geometric population schedules produce non-integral
    values, and only the step size 1/mu enters the update.
    """

    n: int
    mu: float

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"dimension must be >= 2, got n={self.n}")
        if self.mu < 1:
            raise ValueError(f"population size must be >= 1, got mu={self.mu}")


def margins(n: int) -> tuple[float, float]:
    """Clamp interval [1/n, 1 - 1/n] for dimension n."""
    lo = 1.0 / n
    return lo, 1.0 - lo


def init_frequencies(n: int) -> np.ndarray:
    """Fresh frequency vector, every entry exactly 1/2."""
    if n < 2:
        raise ValueError(f"dimension must be >= 2, got n={n}")
    return np.full(n, 0.5)


def sample(freqs: np.ndarray, rng: RandomSource) -> np.ndarray:
    """Draw one individual; bit j is 1 with probability freqs[j].

    Consumes exactly len(freqs) uniform draws from rng.
    """
    u = rng.generator.random(freqs.shape[0])
    return (u < freqs).astype(np.int8)


def update(freqs: np.ndarray, winner: np.ndarray, loser: np.ndarray, mu: float) -> np.ndarray:
    """Move frequencies by 1/mu toward the winner, clamped into the margins.

    Returns clamp(freqs + (winner - loser)/mu, 1/n, 1 - 1/n) as a new array.
    Positions where winner and loser agree are unchanged.
    """
    n = freqs.shape[0]
    if winner.shape[0] != n or loser.shape[0] != n:
        raise ValueError(
            f"dimension mismatch: freqs has {n} entries, winner {winner.shape[0]}, loser {loser.shape[0]}"
        )
    lo, hi = margins(n)
    step = (winner.astype(np.float64) - loser.astype(np.float64)) * (1.0 / mu)
    return np.clip(freqs + step, lo, hi)
