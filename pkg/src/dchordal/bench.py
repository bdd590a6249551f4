"""Timing harness for the 3-colouring loop."""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Sequence

from .coloring import three_color
from .generators import Family, GenSpec, generate


@dataclass(frozen=True)
class BenchRow:
    n: int
    m: int
    time_ms: float


def time_three_color(G, repeats: int = 5) -> float:
    """Median wall time of ``three_color(G)`` in milliseconds, garbage collector paused."""
    samples = []
    for _ in range(repeats):
        gc.collect()
        gc.disable()
        try:
            t0 = time.perf_counter()
            three_color(G)
            samples.append((time.perf_counter() - t0) * 1e3)
        finally:
            gc.enable()
    return statistics.median(samples)


def benchmark(
    family: Family | str,
    sizes: Sequence[int],
    seed: int,
    density: float = 0.0,
    repeats: int = 5,
) -> list[BenchRow]:
    rows = []
    for i, n in enumerate(sizes):
        G = generate(GenSpec(n, density, seed + i, family))
        rows.append(BenchRow(n, G.m, time_three_color(G, repeats)))
    return rows
