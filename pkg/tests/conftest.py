import pytest
from hypothesis import assume, strategies as st

from hyperec.hypergraph import Hypergraph, is_connected, parse_hyperedge_list
from hyperec.synthetic import random_connected_hypergraph

SUNFLOWER_TEXT = "1 2\n1 3 4\n1 5 6 7\n"


@pytest.fixture
def sunflower():
    return parse_hyperedge_list(SUNFLOWER_TEXT)


def corpus():
    """Small connected hypergraphs shared by the solver and centrality suites."""
    hs = [parse_hyperedge_list(SUNFLOWER_TEXT)]
    hs.append(Hypergraph.from_edges([[1, 2]]))
    hs.append(Hypergraph.from_edges([[1, 2, 3]]))
    hs.append(Hypergraph.from_edges([[1, 2], [2, 3], [3, 4], [4, 1]]))  # bipartite cycle
    hs.append(Hypergraph.from_edges([[1, 2, 3], [3, 4, 5, 6], [6, 7]]))
    hs.append(Hypergraph.from_edges([[1, 2, 3], [3, 4, 5, 6, 7]]))  # s = lcm(2, 4) = 4
    for seed, sizes in enumerate([(2, 3, 4), (2, 3), (3,), (2, 4), (3, 4), (2, 3, 4)] * 3):
        hs.append(random_connected_hypergraph(6 + 3 * seed, sizes, extra_edges=seed, seed=seed))
    return hs


@st.composite
def hypergraphs(draw, max_n=8, max_size=4, connected=False):
    n = draw(st.integers(2, max_n))
    edges = draw(
        st.lists(st.sets(st.integers(1, n), min_size=2, max_size=min(max_size, n)), min_size=1, max_size=8)
    )
    H = Hypergraph.from_edges(edges)
    if connected:
        assume(is_connected(H))
    return H


# --- acceptance reporting -------------------------------------------------


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion covered by the test")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    number, text = marker.args
    entry = item.config._criteria.setdefault(number, {"text": text, "ok": True, "tests": []})
    entry["ok"] = entry["ok"] and rep.passed
    entry["tests"].append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    crit = getattr(config, "_criteria", {})
    if not crit:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(crit):
        entry = crit[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {entry['text']} [checks: {len(entry['tests'])}]")
