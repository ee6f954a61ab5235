"""Time the chart and sequential variants of contribution B on the golden families.

    python3 scripts/bench_variants.py [job ...]

Defaults to every discriminant job in golden/.
"""

import sys
import time
from pathlib import Path

from eids.cli import parse_job
from eids.discriminant import contribution_B, contribution_B_charted
from eids.model import VersalFamily

root = Path(__file__).resolve().parent.parent
jobs = [Path(p) for p in sys.argv[1:]] or sorted((root / "golden").glob("*discriminant.job"))

for job in jobs:
    spec = parse_job(job.read_text())
    F = VersalFamily.declared(spec.matrix, spec.variables, spec.params, spec.minor_size)
    t0 = time.perf_counter()
    a = contribution_B_charted(F)
    t1 = time.perf_counter()
    b = contribution_B(F)
    t2 = time.perf_counter()
    print(f"{job.stem:<28} charted {t1 - t0:7.1f}s  sequential {t2 - t1:7.1f}s  equal={a == b}", flush=True)
