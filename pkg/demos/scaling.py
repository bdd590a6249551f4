"""Timing the colouring on growing inputs.

Doubling n should roughly double the time; the printed ratios make the
linear behaviour visible.
"""

from dchordal import Family
from dchordal.bench import benchmark

rows = benchmark(Family.LOCALLY_CONNECTED_BLOCKS, [25_000, 50_000, 100_000, 200_000], seed=1)
prev = None
for r in rows:
    ratio = "" if prev is None else f"  x{r.time_ms / prev:.2f}"
    print(f"n={r.n:>7} m={r.m:>7} {r.time_ms:8.1f} ms{ratio}")
    prev = r.time_ms
