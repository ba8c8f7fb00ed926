#!/usr/bin/env python3
"""Running the verification suites programmatically.

Each suite replays one structural fact at desk scale and returns a report
with a failure list (empty on success) and a JSON form for archiving.  The
same suites are reachable from the command line via `permrank verify`.
"""

import json

import permrank as pr

# Rank invariance under the five basic operations, 200 random trials.
report = pr.verify_invariance(3, pr.PrimeField(3), trials=200, seed=42)
print(f"invariance: ok={report.ok} cases={report.cases} ({report.seconds:.2f}s)")

# Every canonical preserver over F_3 at n=3 passes the exhaustive check.
# 4608 operators, each tested against all 19683 matrices; takes a few
# seconds for k=1 (the k=2 run is bigger, see the acceptance suite).
report = pr.verify_forward_exhaustive(3, 1, 3)
print(f"forward exhaustive: ok={report.ok} cases={report.cases} ({report.seconds:.2f}s)")

# Structural and exhaustive routes agree on random bijective operators.
report = pr.verify_converse_sampled(3, 1, 3, trials=40, seed=42)
print(f"converse sampled: ok={report.ok} cases={report.cases}")

# Threshold-subgraph component structure plus weight cross-validation.
report = pr.verify_theta(5, 2)
print(f"theta: ok={report.ok} cases={report.cases}")

# Rank lifting on random rank-(k-1) rationals.
report = pr.verify_density_chain(3, 2, trials=25, seed=42)
print(f"density: ok={report.ok} cases={report.cases}")

# Reports serialize deterministically (timing excluded by default, so two
# runs with the same seed are byte-identical).
print("\nsample report JSON:")
print(json.dumps(report.to_json_dict(), indent=2)[:400], "...")
