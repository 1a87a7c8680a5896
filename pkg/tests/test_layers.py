import pytest
from hypothesis import given, settings, strategies as st

from lefcat.category import Identity, build_category, build_functor, identity_functor
from lefcat.generate import generate_random
from lefcat.layers import (TheoremViolated, check_fixed_morphism_theorem, delete_layer,
                           delete_layers_leq, fixed_chain_search, layer, layered_lefschetz,
                           layered_lefschetz_values, restricted_map)
from lefcat.nerve import nerve, subdivision

from oracles import brute_chains


def test_layers_of_parallel_pair(parallel_pair):
    sd = subdivision(parallel_pair)
    assert layer(sd, 0) == {0, 1}
    assert layer(sd, 1) == {2, 3}
    assert layer(sd, 2) == frozenset()


def test_layer_deletion(parallel_pair):
    sd = subdivision(parallel_pair)
    assert delete_layers_leq(sd, -1) == sd
    top = delete_layers_leq(sd, 0)
    assert len(top) == 2 and top.degree == (1, 1)
    assert top.relations() == []
    assert len(delete_layers_leq(sd, 1)) == 0
    assert delete_layer(sd, 1).degree == (0, 0)


def test_restricted_identity(chain3):
    for i in range(3):
        dom = restricted_map(identity_functor(chain3), i)
        assert [dom.base.degree[a] for a in dom.elements] == \
            [d for d in dom.base.degree if d > i]
        assert dom.map == tuple(range(len(dom.elements)))


def test_restricted_strict(layered_functor):
    dom = restricted_map(layered_functor, 0)
    assert len(dom.elements) == sum(1 for d in dom.base.degree if d >= 1)
    assert not dom.diverges


def test_layered_fixture_layered_number(layered_functor):
    assert layered_lefschetz_values(layered_functor, 0) == (1, 1, 1)
    dom = restricted_map(layered_functor, 0)
    fixed = [a for a in range(len(dom.poset)) if dom.map[a] == a]
    pairs = [(a, b) for a in fixed for b in fixed if dom.poset.less(a, b)]
    assert (len(fixed), len(pairs)) == (4, 3)


def test_layered_fixture_fixed_arrows(layered_functor):
    names = layered_functor.source.morphism_names
    found = {names[c[0]] for c in fixed_chain_search(layered_functor, 1)}
    assert {"beta", "gb"} <= found


def test_layered_identity_parallel_pair(parallel_pair):
    assert layered_lefschetz(identity_functor(parallel_pair), 0) == 2


def test_layered_empty_domain(parallel_pair):
    assert layered_lefschetz(identity_functor(parallel_pair), 1) == 0


def test_fixed_chain_search(parallel_pair, swap_functor, chain3):
    assert fixed_chain_search(identity_functor(chain3), 1) == [(0,), (1,), (2,)]
    assert fixed_chain_search(identity_functor(chain3), 2) == [(0, 1)]
    assert fixed_chain_search(identity_functor(chain3), 3) == []
    for k in (1, 2, 3):
        assert fixed_chain_search(swap_functor, k) == []
    with pytest.raises(ValueError):
        fixed_chain_search(swap_functor, 0)


def test_check_layered(layered_functor):
    report = check_fixed_morphism_theorem(layered_functor, 0)
    assert report.layered_L == 1 and report.theorem_holds
    assert report.chain_counts[1] == 3


def test_check_swap(swap_functor):
    report = check_fixed_morphism_theorem(swap_functor, 0)
    assert report.layered_L == 0 and report.theorem_holds
    assert report.chain_counts == {1: 0}


def test_check_identity_chains(chain3):
    report = check_fixed_morphism_theorem(identity_functor(chain3), 1)
    assert report.chain_counts == {1: 3, 2: 1}
    assert report.layered_L == 1


def test_non_strict_orbit_closure():
    # 0 -> 1 -> 2 with F(1) = 0: the edge b: 1 -> 2 maps to ba, a collapses
    cat = build_category(3, [(0, 1), (1, 2), (0, 2)], {(1, 0): 2})
    F = build_functor(cat, cat, [0, 0, 2], [Identity(0), 2, 2])
    dom = restricted_map(F, 0)
    sd = dom.base
    # the 1-simplex a drops to a vertex, so it leaves the domain
    assert sd.index(nerve(cat).simplices[1][0]) not in dom.elements
    # the 2-simplex (a, b) drops to the edge ba, which stays
    assert dom.literal_is_self_map
    assert layered_lefschetz(F, 0) == 1


def test_violation_message(layered_functor, monkeypatch):
    import lefcat.layers as mod
    monkeypatch.setattr(mod, "fixed_chain_search", lambda F, k, T=None: [])
    with pytest.raises(TheoremViolated):
        check_fixed_morphism_theorem(layered_functor, 0)


def _brute_fixed_chains(F, k):
    return [c for c in brute_chains(F.source, k) if all(F.morphism_map[m] == m for m in c)]


seeds = st.integers(min_value=0, max_value=100_000)
collapse = st.sampled_from([0.0, 0.2, 0.5])


@settings(max_examples=80, deadline=None)
@given(seeds, collapse, st.sampled_from([0, 1, 2]))
def test_fixed_morphism_theorem_property(seed, p, i):
    F = generate_random(seed, 6, 14, p)
    report = check_fixed_morphism_theorem(F, i, raise_on_violation=False)
    assert report.theorem_holds
    for k in range(1, i + 2):
        assert report.chain_counts[k] == len(_brute_fixed_chains(F, k))
    dom = restricted_map(F, i)
    if F.strict:
        assert len(dom.elements) == sum(1 for d in dom.base.degree if d > i)
    assert all(dom.base.degree[a] > i for a in dom.elements)
    assert dom.poset.is_order_preserving(dom.map)


@settings(max_examples=40, deadline=None)
@given(seeds, collapse)
def test_fixed_chains_closed_under_faces(seed, p):
    F = generate_random(seed, 6, 14, p)
    cat = F.source
    for k in range(2, 5):
        fixed = set(fixed_chain_search(F, k))
        smaller = set(fixed_chain_search(F, k - 1))
        for c in fixed:
            assert c[1:] in smaller and c[:-1] in smaller
            for j in range(1, k):
                assert c[:j - 1] + (cat.compose_table[c[j], c[j - 1]],) + c[j + 1:] in smaller


def test_cutoff_must_be_nonnegative(layered_functor):
    with pytest.raises(ValueError):
        check_fixed_morphism_theorem(layered_functor, -1)
