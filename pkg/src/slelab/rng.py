"""Deterministic seeding: one counter-based stream per (base seed, index)."""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def generator_for(seed: int, index: int | None = None) -> np.random.Generator:
    """Philox generator for a base seed, or for sample `index` under that seed.

    Identical (seed, index) always yields the identical stream, independent
    of how samples are batched across workers.
    """
    ss = np.random.SeedSequence(
        entropy=int(seed) & _MASK64,
        spawn_key=() if index is None else (int(index),),
    )
    return np.random.Generator(np.random.Philox(ss))
