from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tokensign import SignedGraph, SwitchingVector, switch

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@st.composite
def signed_graphs(draw, min_n=1, max_n=7, min_edges=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    labels = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=len(pairs), max_size=len(pairs)))
    edges = tuple((u, v, s) for (u, v), s in zip(pairs, labels) if s)
    if len(edges) < min_edges:
        edges = tuple((u, v, 1) for u, v in pairs[:min_edges])
    return SignedGraph(n, edges)


@st.composite
def switchings(draw, n):
    return SwitchingVector(tuple(draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))))


@st.composite
def balanced_graphs(draw, min_n=1, max_n=7):
    g = draw(signed_graphs(min_n, max_n)).underlying()
    return switch(g, draw(switchings(g.n)))


@st.composite
def graph_and_switching(draw, min_n=1, max_n=7):
    g = draw(signed_graphs(min_n, max_n))
    return g, draw(switchings(g.n))


@st.composite
def graph_and_perm(draw, min_n=1, max_n=7):
    g = draw(signed_graphs(min_n, max_n))
    perm = draw(st.permutations(range(1, g.n + 1)))
    return g, perm


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
