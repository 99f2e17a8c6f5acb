"""Seeded random complexes.

Every candidate d-simplex on ``1..n`` has a rank (its position in
lexicographic order). Inclusion and weight draws are a pure function of
``(seed, rank, stream)`` through the SplitMix64 finalizer, so the output does
not depend on the platform, the Python version, or the enumeration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .complex import WeightedComplex
from .errors import ConfigInvalid

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

# draw streams
INCLUDE = 0
WEIGHT = 1


def mix64(x: int) -> int:
    """SplitMix64 output function."""
    x = (x + GOLDEN) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def draw(seed: int, rank: int, stream: int) -> int:
    """64-bit draw keyed by ``(seed, rank, stream)``."""
    return mix64(mix64(seed) ^ ((rank << 1) | stream))


def unit(seed: int, rank: int, stream: int) -> float:
    """Uniform float in [0, 1) with 53 bits of precision."""
    return (draw(seed, rank, stream) >> 11) * 2.0**-53


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    d: int
    p: float
    weight_low: float = 1.0
    weight_high: float = 10.0
    integer_weights: bool = False
    seed: int = 0

    def check(self) -> None:
        if not (isinstance(self.d, int) and isinstance(self.n, int) and 1 <= self.d < self.n):
            raise ConfigInvalid(f"need integers with 1 <= d < n, got d={self.d}, n={self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ConfigInvalid(f"p must lie in [0, 1], got {self.p}")
        lo, hi = self.weight_low, self.weight_high
        if not (math.isfinite(lo) and math.isfinite(hi)) or not 0 <= lo <= hi:
            raise ConfigInvalid(f"need finite 0 <= weight_low <= weight_high, got [{lo}, {hi}]")
        if self.integer_weights and math.ceil(lo) > math.floor(hi):
            raise ConfigInvalid(f"no integer in [{lo}, {hi}]")
        if not 0 <= self.seed <= MASK64:
            raise ConfigInvalid(f"seed must be an unsigned 64-bit integer, got {self.seed}")


def generate(cfg: GeneratorConfig) -> WeightedComplex:
    """Include each of the C(n, d+1) candidates independently with probability ``p``.

    Weights are uniform on ``[weight_low, weight_high]``; with
    ``integer_weights`` they are uniform over the integers in that range.
    """
    cfg.check()
    seed = cfg.seed
    lo, hi = cfg.weight_low, cfg.weight_high
    if cfg.integer_weights:
        ilo = math.ceil(lo)
        span = math.floor(hi) - ilo + 1
    top = {}
    for rank, tau in enumerate(combinations(range(1, cfg.n + 1), cfg.d + 1)):
        if unit(seed, rank, INCLUDE) >= cfg.p:
            continue
        u = unit(seed, rank, WEIGHT)
        if cfg.integer_weights:
            top[tau] = float(ilo + min(int(u * span), span - 1))
        else:
            top[tau] = lo + (hi - lo) * u
    return WeightedComplex(cfg.d, cfg.n, top)
