from __future__ import annotations

import itertools
import random

import pytest

from mtframsey.graph import Graph
from mtframsey.mtfgen import MtfGenerator


def labelled_graphs(n: int):
    """Every labelled graph on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(a, b) for a, b in itertools.combinations(range(n), 2) if rng.random() < p])


def random_perm(n: int, rng: random.Random) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@pytest.fixture(scope="session")
def mtf_by_order() -> dict[int, list[Graph]]:
    """All mtf graphs on 1..13 vertices, from one generator run."""
    out: dict[int, list[Graph]] = {}
    MtfGenerator(13, lambda g, kind: out.setdefault(g.n, []).append(g), visit_all_orders=True).run()
    return out


# -- acceptance reporting: one PASS/FAIL line per criterion ------------------

_CRITERIA: dict[str, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    name = getattr(report, "criterion", None)
    if name is None:
        return
    if report.when == "call" or report.failed:
        prev_ok = _CRITERIA.get(name, (name, True))[1]
        _CRITERIA[name] = (name, prev_ok and report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in sorted(_CRITERIA.values()):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
