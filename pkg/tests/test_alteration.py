import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ffree.alteration import (
    EPSILON,
    InapplicableFamilyError,
    WeightedFamily,
    alteration_graph,
    check_family_condition,
    clique_union_family,
    fractional_trial,
    greedy_maximal_packing,
    lemma2_trial,
    lemma_constants,
    min_family_edges,
    random_family,
    refute_certificate,
)
from ffree.graphs import LabeledGraph, PRESETS, parse_pattern
from ffree.sampling import Seed, sample_gnp
from ffree.subiso import contains_copy, enumerate_copies


TRIANGLE = PRESETS["triangle"]
C4 = PRESETS["C4"]
K4 = PRESETS["K4"]
P3 = PRESETS["P3"]


def test_constants_examples():
    assert EPSILON == pytest.approx(1.0 / (6 * math.e ** 2))
    assert lemma_constants(TRIANGLE, 10).delta == pytest.approx(1 / 12)
    assert lemma_constants(C4, 10).delta == pytest.approx(1 / 16)
    assert lemma_constants(P3, 10).delta == pytest.approx(1 / 9)
    c = lemma_constants(TRIANGLE, 100)
    # m2(triangle) = 2, so the admissible ceiling is eps * 100^(-1/2)
    assert c.admissible_p_max == pytest.approx(EPSILON / 10)


def test_packing_k4_worked_example():
    # complete graph on 4 vertices packs exactly one triangle under the
    # lexicographic copy order, leaving a star at vertex 3
    g = LabeledGraph.complete(4)
    result = greedy_maximal_packing(g, TRIANGLE)
    assert len(result.copies) == 1
    assert result.copies[0].vertex_image == (0, 1, 2)
    remaining = sorted(result.altered.edges())
    assert remaining == [(0, 3), (1, 3), (2, 3)]
    assert not contains_copy(result.altered, TRIANGLE)


def test_packing_disjointness_and_maximality_k5():
    g = LabeledGraph.complete(5)
    result = greedy_maximal_packing(g, TRIANGLE)
    seen = 0
    for c in result.copies:
        assert c.edge_mask & seen == 0
        seen |= c.edge_mask
    assert seen == result.packed_edges
    assert not contains_copy(result.altered, TRIANGLE)


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 9), st.floats(0.1, 0.9), st.integers(0, 2**62),
       st.sampled_from(["triangle", "C4", "K4", "P4"]))
def test_packing_properties(n, p, master, name):
    pattern = PRESETS[name]
    g = sample_gnp(n, p, Seed(master), purpose="pack-prop")
    result = greedy_maximal_packing(g, pattern)
    seen = 0
    for c in result.copies:
        assert c.edge_mask & ~g.bits == 0       # copies live in the source
        assert c.edge_mask & seen == 0          # pairwise edge-disjoint
        seen |= c.edge_mask
    assert result.altered.bits == g.bits & ~seen
    # deleting the packed copies removes every copy of the packing pattern
    assert not contains_copy(result.altered, pattern)


def test_alteration_graph_in_regime_flag():
    s = Seed(5)
    c = lemma_constants(TRIANGLE, 30)
    lo = alteration_graph(30, c.admissible_p_max * 0.5, TRIANGLE, s)
    hi = alteration_graph(30, c.admissible_p_max * 2.0, TRIANGLE, s)
    assert lo.in_regime and not hi.in_regime
    assert not contains_copy(lo.altered, TRIANGLE)
    assert not contains_copy(hi.altered, TRIANGLE)


def test_family_condition_examples():
    n, p = 20, 0.3
    delta = lemma_constants(TRIANGLE, n).delta
    dense = WeightedFamily.unit((LabeledGraph.complete(n),))
    assert check_family_condition(dense, p, delta)
    edgeless = WeightedFamily.unit((LabeledGraph.empty(n),))
    assert not check_family_condition(edgeless, p, delta)


def test_family_weight_validation():
    g = LabeledGraph.complete(4)
    with pytest.raises(ValueError):
        WeightedFamily((g,), (0.5, 0.5))
    with pytest.raises(ValueError):
        WeightedFamily((g,), (-1.0,))


def test_lemma2_trial_identity_and_schema():
    n, p = 40, 0.2
    fam = WeightedFamily.unit((LabeledGraph.complete(n),))
    rec = lemma2_trial(n, p, TRIANGLE, fam, Seed(11))
    d = rec.to_dict()
    assert set(d) == {"seed", "trial_index", "n", "p", "in_regime",
                      "hits", "hit_all", "missed_weight"}
    h = d["hits"][0]
    assert set(h) == {"h_index", "e_H", "shared_raw", "event_E",
                      "touched_copies", "event_D", "shared_altered"}
    # the conditional-hit identity: both events imply a surviving shared edge
    if h["event_E"] and h["event_D"]:
        assert h["shared_altered"] >= 1
    assert rec.hit_all == (rec.missed_weight == 0.0)


def test_lemma2_hit_rate_on_dense_family():
    # at n=40, p=0.2 a family of complete-graph complements minus a few
    # edges is hit essentially always
    n, p, k = 40, 0.2, 3
    delta = lemma_constants(TRIANGLE, n).delta
    e_min = min_family_edges(k, p, delta)
    fam = random_family(n, k, e_min, Seed(17))
    assert check_family_condition(fam, p, delta)
    hits = sum(lemma2_trial(n, p, TRIANGLE, fam, Seed(17), i).hit_all
               for i in range(50))
    assert hits >= 45


def test_refute_empty_family_trivial():
    fam = WeightedFamily((), ())
    res = refute_certificate(fam, TRIANGLE, 10, 0.2, 5, Seed(0))
    assert res.success
    assert res.graph == LabeledGraph.empty(10)


def test_refute_rejects_thin_family():
    fam = WeightedFamily.unit((LabeledGraph.complete(8),))
    # complement of a complete graph is edgeless, so the condition on the
    # complement family cannot hold
    with pytest.raises(InapplicableFamilyError):
        refute_certificate(fam, TRIANGLE, 8, 0.2, 5, Seed(0))


def test_refute_produces_escape_graph():
    n, p, k = 40, 0.2, 3
    delta = lemma_constants(TRIANGLE, n).delta
    e_min = min_family_edges(k, p, delta)
    full = n * (n - 1) // 2
    gen = Seed(23).stream("refute-fam")
    # members whose complements have at least e_min edges
    from ffree.alteration import random_member
    members = tuple(random_member(n, full - e_min, gen) for _ in range(k))
    fam = WeightedFamily.unit(members)
    res = refute_certificate(fam, TRIANGLE, n, p, 30, Seed(23))
    assert res.success
    g = res.graph
    assert not contains_copy(g, TRIANGLE)
    for m in fam.members:
        assert g.bits & ~m.bits != 0  # not a subgraph of any member


def test_fractional_trial_reduces_to_unit_weights():
    n, p = 30, 0.25
    fam = WeightedFamily.unit((LabeledGraph.complete(n),))
    rec = fractional_trial(n, p, TRIANGLE, fam, 10, Seed(3))
    assert rec.missed_weight in (0.0, 1.0)


def test_min_family_edges_monotone():
    delta = lemma_constants(TRIANGLE, 50).delta
    assert min_family_edges(3, 0.2, delta) == math.ceil(math.log(6) / (delta * 0.2))
    assert min_family_edges(10, 0.2, delta) >= min_family_edges(3, 0.2, delta)


def test_clique_union_family_members_shape():
    fam = clique_union_family(9, parts=[3, 3, 3])
    assert len(fam.members) == 1
    assert fam.members[0].edge_count == 9
