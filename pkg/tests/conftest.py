import itertools

import pytest
from hypothesis import strategies as st

from layoutgap.graph import is_valid_layout, make_dag, make_graph
from layoutgap.measures import cost


def complete(n):
    return make_graph(n, itertools.combinations(range(n), 2))


def path(n):
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def chain(n):
    return make_dag(n, [(i, i + 1) for i in range(n - 1)])


def permutation_extremes(g, kind):
    """(min, max) of ``cost`` over every valid permutation."""
    values = [cost(g, perm, kind) for perm in itertools.permutations(range(g.n))
              if is_valid_layout(g, perm)]
    return min(values), max(values)


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return make_graph(n, chosen)


@st.composite
def dags(draw, min_n=1, max_n=7):
    """Random DAGs under a random relabelling, so edges do not always point upwards."""
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(range(g.n)))
    return make_dag(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c4():
    return cycle(4)
