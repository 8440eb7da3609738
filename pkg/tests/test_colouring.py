import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_graphs_on, small_graphs
from rslab.colouring import EdgeColouring, is_proper
from rslab.engine import ColouringSearch, count_proper_colourings, find_rainbow_copy
from rslab.errors import MissingEdgeColourError
from rslab.graphs import build_graph
from rslab.patterns import PatternSpec

TRIANGLE = build_graph(3, [(0, 1), (0, 2), (1, 2)])


def test_is_proper_examples():
    assert is_proper(TRIANGLE, EdgeColouring(TRIANGLE, (1, 2, 3)))
    assert not is_proper(TRIANGLE, EdgeColouring(TRIANGLE, (1, 1, 2)))
    k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    matchings = EdgeColouring(k4, (1, 2, 3, 3, 2, 1))
    assert is_proper(k4, matchings)


def test_missing_colour_errors():
    with pytest.raises(MissingEdgeColourError):
        EdgeColouring(TRIANGLE, (1, 2))
    with pytest.raises(MissingEdgeColourError):
        EdgeColouring.from_map(TRIANGLE, {(0, 1): 1, (0, 2): 2})
    other = build_graph(3, [(0, 1)])
    with pytest.raises(MissingEdgeColourError):
        is_proper(TRIANGLE, EdgeColouring(other, (1,)))


def test_colour_lookup_and_classes():
    c = EdgeColouring(TRIANGLE, (1, 2, 1))
    assert c.colour_of(2, 1) == 1
    assert c.colour_count == 2
    assert c.classes() == {1: ((0, 1), (1, 2)), 2: ((0, 2),)}


def test_json_roundtrip():
    c = EdgeColouring(TRIANGLE, (1, 2, 3))
    assert EdgeColouring.from_json_dict(c.to_json_dict()) == c


def _restricted_growth_strings(m):
    def rec(i, maxu, cur):
        if i == m:
            yield tuple(cur)
            return
        for c in range(1, maxu + 2):
            cur.append(c)
            yield from rec(i + 1, max(maxu, c), cur)
            cur.pop()
    yield from rec(0, 0, [])


def _brute_count(g):
    # independent oracle: all restricted-growth strings that are matching partitions
    count = 0
    for cols in _restricted_growth_strings(len(g.edges)):
        if is_proper(g, EdgeColouring(g, cols)):
            count += 1
    return count


def test_count_pairwise_adjacent_graphs():
    assert count_proper_colourings(TRIANGLE) == 1
    for k in (3, 4, 5):
        star = build_graph(k + 1, [(0, i) for i in range(1, k + 1)])
        assert count_proper_colourings(star) == 1


def test_count_two_disjoint_edges():
    assert count_proper_colourings(build_graph(4, [(0, 1), (2, 3)])) == 2


def test_count_matches_restricted_growth_oracle():
    for n in range(5):
        for g in all_graphs_on(n):
            assert count_proper_colourings(g) == _brute_count(g)


@given(small_graphs(max_n=5))
@settings(max_examples=40)
def test_search_yields_proper_colourings(g):
    search = ColouringSearch(g, None, None)
    seen = set()
    for cols in search.run():
        c = EdgeColouring(g, cols) if cols else None
        if cols:
            assert is_proper(g, c)
            assert c.partition() not in seen
            seen.add(c.partition())
    assert search.exhausted


@given(small_graphs(min_n=4, max_n=6), st.data())
@settings(max_examples=40)
def test_merging_colours_never_creates_rainbow(g, data):
    # a rainbow copy after merging two classes was already rainbow before
    if not g.edges:
        return
    search = ColouringSearch(g, None, None)
    cols = next(iter(search.run()))
    c = EdgeColouring(g, cols)
    pattern = PatternSpec.path(4)
    if find_rainbow_copy(g, c, pattern) is not None:
        return
    values = sorted(set(cols))
    c1 = data.draw(st.sampled_from(values))
    c2 = data.draw(st.sampled_from(values))
    if c1 == c2:
        return
    merged = c.merge(c1, c2)
    assert find_rainbow_copy(g, merged, pattern) is None
