import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from racg_growth.graph import SimplicialGraph, cycle_graph, generate_family


def two_squares() -> SimplicialGraph:
    return cycle_graph(4).disjoint_union(cycle_graph(4))


def corpus() -> dict[str, SimplicialGraph]:
    graphs = {f"discrete:{n}": generate_family(f"discrete:{n}") for n in range(1, 6)}
    for spec in ("cycle:5", "cycle:8", "complete_bipartite:3,3", "cycle:3",
                 "triangle_double:1", "petersen", "triangle_double:2"):
        graphs[spec] = generate_family(spec)
    graphs["2xC4"] = two_squares()
    return graphs


CORPUS = corpus()


@pytest.fixture(params=sorted(CORPUS), ids=sorted(CORPUS))
def corpus_graph(request):
    return request.param, CORPUS[request.param]


_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria[number] = (title, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict = _criteria[number]
        terminalreporter.write_line(f"[{verdict}] criterion {number:>2}: {title}")
