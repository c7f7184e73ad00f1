"""Run a small theorem census and print what it found.

``python3 demos/census_summary.py [n_max] [random_rounds]``

Defaults (n <= 5, 200 random split graphs) finish in a few seconds.  The
full acceptance run uses n <= 7 and 10^4 random graphs; see the README.
"""

import sys
import time

from splitnull.harness.census import census_verify

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 5
rounds = int(sys.argv[2]) if len(sys.argv) > 2 else 200

t0 = time.time()
report = census_verify(n_max, rounds, seed=1, compose_pairs=50, square_max_k=2)
print(f"census n<={n_max}, {rounds} random rounds: {time.time() - t0:.1f}s")
print(f"   graphs {report.graphs_examined}, split {report.split_count}, "
      f"(graph, s-partition) pairs {report.partitions_examined}")

busiest = sorted(report.theorems.items(), key=lambda kv: -kv[1]["pass"])[:8]
print("   most exercised statements:")
for tid, counts in busiest:
    print(f"      {tid:40s} pass {counts['pass']:6d}  n/a {counts['not_applicable']:6d}")

for name, t in report.tallies.items():
    print(f"   tally {name}: {t['hits']} of {t['examined']}, e.g. {t['witnesses'][:3]}")

failures = report.failures()
print("   failures:", failures or "none")
sys.exit(0 if report.ok else 1)
