import os

import pytest

from regpow import _kernels
from regpow.graphs import from_edge_list


def pytest_collection_modifyitems(config, items):
    if os.environ.get("REGPOW_RUN_HEAVY") == "1":
        return
    skip = pytest.mark.skip(reason="heavy computation; set REGPOW_RUN_HEAVY=1 to run")
    for item in items:
        if "heavy" in item.keywords:
            item.add_marker(skip)


def graph_from_labels(pairs, isolated=()):
    """Build a graph from label pairs; ids follow first appearance."""
    ids = {}

    def vid(t):
        if t not in ids:
            ids[t] = len(ids)
        return ids[t]

    idpairs = [(vid(a), vid(b)) for a, b in pairs]
    iso = [vid(t) for t in isolated]
    return from_edge_list(idpairs, isolated=iso, labels={v: k for k, v in ids.items()})


def labels_of(g, vertices):
    return sorted(g.label(v) for v in vertices)


def cycle_graph(n):
    return from_edge_list([(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_edge_list([(i, i + 1) for i in range(n - 1)])


# 7-vertex graph whose biggest matching is not induced; nu = 2
FIG1_EDGES = [
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x1", "x5"),
    ("x2", "x5"), ("x3", "x5"), ("x1", "x6"), ("x4", "x7"),
]

# the running unicyclic example: C5 with three rooted trees
FIG2_EDGES = [
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x1", "x5"),
    ("x1", "y1"), ("x1", "y2"), ("x2", "y3"), ("x2", "y6"),
    ("y3", "y4"), ("y4", "y5"), ("x5", "y7"),
]

# C5 with a forest of three whisker paths (the dotted-edge colon example)
FIG3_EDGES = [
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x1", "x5"),
    ("x1", "y1"), ("y1", "y2"), ("x2", "y3"), ("y3", "y4"),
    ("x5", "y5"), ("y5", "y6"),
]

# the bicyclic graph whose powers break the linear formula
BICYCLIC_EDGES = [
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x1", "x5"),
    ("x1", "x6"), ("x6", "x7"), ("x6", "x8"), ("x8", "x9"), ("x9", "x10"),
    ("x10", "x11"), ("x11", "x12"), ("x12", "x8"),
]


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warmup()


@pytest.fixture
def fig1():
    return graph_from_labels(FIG1_EDGES)


@pytest.fixture
def fig2():
    return graph_from_labels(FIG2_EDGES)


@pytest.fixture
def fig3():
    return graph_from_labels(FIG3_EDGES)


@pytest.fixture
def bicyclic():
    return graph_from_labels(BICYCLIC_EDGES)


def by_label(g):
    return {g.label(v): v for v in g.vertices}
