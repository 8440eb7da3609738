import pytest

from conftest import all_graphs_on
from rslab.canon import canonical_form
from rslab.errors import CacheMismatchError, InvalidParameterError
from rslab.graphs import from_graph6
from rslab.oracle import (
    CensusRecord,
    enumerate_graphs,
    enumerate_graphs_by_edges,
    enumerate_trees,
    load_cached_record,
    prsat_number,
    sat_number,
    ssat_number,
    store_record,
)
from rslab.patterns import PatternSpec

P4 = PatternSpec.path(4)
P5 = PatternSpec.path(5)


# -- enumeration -------------------------------------------------------------------


def test_class_counts_small_orders():
    assert len(list(enumerate_graphs(1))) == 1
    assert len(list(enumerate_graphs(2))) == 2
    assert len(list(enumerate_graphs(3))) == 4
    assert len(list(enumerate_graphs(4))) == 11
    assert len(list(enumerate_graphs(5))) == 34


def test_class_count_n6():
    assert len(list(enumerate_graphs(6))) == 156


def test_class_count_n7():
    assert len(list(enumerate_graphs(7))) == 1044


def test_edge_cap():
    got = list(enumerate_graphs(3, edge_cap=1))
    assert len(got) == 2
    assert [len(g.edges) for g in got] == [0, 1]


def test_representatives_are_canonical_and_distinct():
    seen = set()
    for g in enumerate_graphs(5):
        form = canonical_form(g)
        assert form not in seen
        seen.add(form)
        assert g.to_graph6().encode() == form  # stored as its own canonical labelling


def test_enumeration_matches_labelled_dedup():
    for n in range(1, 6):
        labelled = {canonical_form(g) for g in all_graphs_on(n)}
        enumerated = {canonical_form(g) for g in enumerate_graphs(n)}
        assert labelled == enumerated


@pytest.mark.slow
def test_enumeration_matches_labelled_dedup_n6():
    labelled = {canonical_form(g) for g in all_graphs_on(6)}
    assert len(labelled) == 156
    assert labelled == {canonical_form(g) for g in enumerate_graphs(6)}


def test_levels_are_by_edge_count():
    for m, level in enumerate(enumerate_graphs_by_edges(4)):
        for g in level:
            assert len(g.edges) == m


def test_tree_counts():
    assert [len(enumerate_trees(n)) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_trees_are_trees():
    for t in enumerate_trees(7):
        assert t.is_tree()


# -- censuses ----------------------------------------------------------------------


def test_sat_census_p4_order6():
    # the perfect matching is P4-saturated: every non-edge joins two of its
    # edges and closes a 4-vertex path
    rec = sat_number(6, P4)
    assert rec.value == 3
    assert rec.exact
    (witness,) = rec.witnesses
    g = from_graph6(witness)
    assert sorted(len(c) for c in g.components()) == [2, 2, 2]
    assert rec.verify()


def test_sat_census_t5star_order7():
    rec = sat_number(7, PatternSpec.subdivided_star(5))
    assert rec.value == 5
    assert rec.verify()


def test_ssat_below_sat():
    for n in (4, 5, 6):
        assert ssat_number(n, P4).value <= sat_number(n, P4).value


def test_prsat_census_small():
    rec = prsat_number(5, P4, budget=10**6)
    assert rec.exact
    assert rec.value is not None
    assert rec.verify()


def test_prsat_census_matches_formula_n7():
    rec = prsat_number(7, P4, budget=10**7)
    assert rec.value == 5 and rec.exact


def test_edge_capped_census_returns_none_when_nothing_qualifies():
    rec = prsat_number(5, P5, budget=10**6, edge_cap=3)
    assert rec.value is None and rec.exact
    assert rec.total_graphs_examined == 8  # classes with <= 3 edges on 5 vertices


def test_tiny_budget_resolves_small_orders_via_escalation():
    rec = prsat_number(4, P4, budget=1)
    assert rec.exact and rec.value == 6  # only the complete graph qualifies


def test_prsat_census_order5_value():
    rec = prsat_number(5, P4, budget=10**6)
    assert rec.value == 4
    # the 4-leaf star is among the minimum witnesses
    assert any(
        sorted(from_graph6(w).degrees()) == [1, 1, 1, 1, 4] for w in rec.witnesses
    )


def test_unresolved_classes_poison_the_record():
    # dense classes cannot finish even one colouring descent at this budget
    rec = prsat_number(6, PatternSpec.path(6), budget=1, edge_cap=13)
    assert rec.value is None
    assert not rec.exact
    assert rec.unresolved


def test_workers_match_sequential():
    seq = prsat_number(5, P4, budget=10**6)
    par = prsat_number(5, P4, budget=10**6, workers=2)
    assert (seq.value, seq.witnesses) == (par.value, par.witnesses)


def test_cutoffs_enforced():
    with pytest.raises(InvalidParameterError):
        sat_number(10, P4)
    with pytest.raises(InvalidParameterError):
        prsat_number(9, P4)


# -- cache -------------------------------------------------------------------------


def test_cache_write_and_reload(tmp_path):
    rec = prsat_number(5, P4, budget=10**6, cache_dir=tmp_path)
    assert (tmp_path / "census-prsat.jsonl").exists()
    again = prsat_number(5, P4, budget=10**6, cache_dir=tmp_path)
    assert again == rec
    loaded = load_cached_record(tmp_path, rec.key())
    assert loaded == rec


def test_cache_mismatch_refused(tmp_path):
    rec = sat_number(5, P4, cache_dir=tmp_path)
    fake = CensusRecord(
        n=rec.n, pattern=rec.pattern, quantity=rec.quantity,
        value=(rec.value or 0) + 1, exact=True, witnesses=("D??",),
        unresolved=(), total_graphs_examined=1, budget=None,
        nodes_explored=0, edge_cap=None,
    )
    with pytest.raises(CacheMismatchError):
        store_record(tmp_path, fake)
    store_record(tmp_path, fake, force=True)  # explicit overwrite allowed
    assert load_cached_record(tmp_path, rec.key()).value == fake.value


def test_record_json_roundtrip():
    rec = sat_number(5, P4)
    assert CensusRecord.from_json_dict(rec.to_json_dict()) == rec


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("RSLAB_CACHE", str(tmp_path))
    sat_number(4, P4)
    assert (tmp_path / "census-sat.jsonl").exists()


def test_star_pattern_censuses_collapse():
    # rainbow conditions add nothing for star patterns
    k13 = PatternSpec.star(3)
    for n in range(4, 8):
        pr = prsat_number(n, k13, budget=10**7)
        st = sat_number(n, k13)
        assert pr.exact and pr.value == st.value
