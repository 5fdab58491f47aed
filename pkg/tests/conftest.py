from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

EXTENDED = os.environ.get("FORD_EXTENDED") == "1"


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="extended check; set FORD_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
