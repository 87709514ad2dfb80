"""Symbolic results against the truncated left regular representation.

For every catalog family: monomial products, diagonal norms and the
non-vanishing of projections, each compared on a ball of radius 3.

Run with ``python3 demos/oracle_agreement.py [radius]``.
"""

from __future__ import annotations

import sys
import time

from rightlcm import catalog
from rightlcm.suite import run_suite

radius = int(sys.argv[1]) if len(sys.argv) > 1 else 3
for name in catalog.CATALOG:
    start = time.perf_counter()
    res = run_suite(catalog.get(name), radius=radius, pairs=60, norms=20, projections=10)
    print(f"{name:16s} {res.summary()}  [{time.perf_counter() - start:.1f}s]")
