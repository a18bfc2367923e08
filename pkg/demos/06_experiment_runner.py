"""
Driving sweeps through the experiment runner
============================================

The same runs are available from the shell as ``salie-lab <kind> ...``.
"""

import sys

from salie_lab.experiments import ExperimentSpec, emit, run

spec = ExperimentSpec.from_text("""
kind = type2-sweep
q = 1009, 10007
shifts = random:2:1
M = q^0.25, q^0.5
N = q^0.5
seeds = 2
seed = 99
""")
print(spec.to_text())

report = run(spec, threads=4)
print(report.summary)
sys.stdout.write(emit(report, "csv").decode())
