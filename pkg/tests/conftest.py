import itertools

import pytest
from hypothesis import strategies as st

from rslab.graphs import Graph, build_graph


@st.composite
def small_graphs(draw, min_n=0, max_n=6, connected=False):
    n = draw(st.integers(min_value=max(min_n, 2 if connected else 0), max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = build_graph(n, [p for p, keep in zip(pairs, mask) if keep])
    if connected and not g.is_connected():
        # chain the components together deterministically
        comps = g.components()
        extra = [(comps[i][0], comps[i + 1][0]) for i in range(len(comps) - 1)]
        g = build_graph(n, list(g.edges) + extra)
    return g


def all_graphs_on(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def permutations_of(n):
    return itertools.permutations(range(n))


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    eb = b.edge_set()
    for perm in permutations_of(a.n):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in eb for u, v in a.edges):
            return True
    return False


def brute_force_automorphisms(g: Graph):
    es = g.edge_set()
    out = []
    for perm in permutations_of(g.n):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in es for u, v in g.edges):
            out.append(perm)
    return out


@pytest.fixture(scope="session")
def graphs_n4():
    return list(all_graphs_on(4))
