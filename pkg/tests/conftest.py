from __future__ import annotations

import pytest

from rightlcm import catalog
from rightlcm.core import monoid_of, shortlex_ball

FAMILIES = list(catalog.CATALOG)
SEMIDIRECT = ["zxn", "sum-z-23", "shift-n2", "shift-n-z2", "f2", "f3", "poly-q", "z2-partial"]
SELFSIM = ["odometer", "lamplighter", "fixed-letter"]


def ball(name, radius=2):
    """Elements of the catalog family (in its unitisation if it has no identity)."""
    return shortlex_ball(monoid_of(catalog.get(name)), radius)


@pytest.fixture(params=FAMILIES)
def family(request):
    return request.param, catalog.get(request.param)


# criterion number -> (passed, detail); filled by test_acceptance.py
RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
