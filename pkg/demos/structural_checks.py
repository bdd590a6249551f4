"""Checking the structural statements on a batch of generated graphs.

Each check returns a verdict (holds / violated / not_applicable) and a
small report; here we tally the verdicts over a seeded batch.
"""

from collections import Counter

from dchordal import Family, GenSpec, generate
from dchordal.checks import run_check
from dchordal.graph import wheel

batch = [generate(GenSpec(n, d, seed, Family.K4_FREE_DUALLY_CHORDAL))
         for seed, (n, d) in enumerate([(n, d) for n in range(5, 11) for d in (0.3, 0.6, 1.0)] * 5)]

for name in ("tree", "theorem3", "lemma3", "lemma4"):
    tally = Counter(run_check(G, name)[0] for G in batch)
    print(f"{name:10s}", dict(tally))

# One report in full: an odd wheel is K4-free but imperfect, hence not 3-colourable.
print(run_check(wheel(5), "theorem3"))
