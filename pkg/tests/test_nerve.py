import pytest
from hypothesis import given, settings, strategies as st

from lefcat.category import (Identity, build_category, build_functor, compose_functors,
                             identity_functor, poset_reflection, terminal_category)
from lefcat.generate import generate_random
from lefcat.nerve import (Simplex, check_simplicial_identities, compose_trisp_maps,
                          face_poset, induced_trisp_map, nerve, order_complex,
                          subdivision, subdivision_map)

from oracles import brute_chains


def test_nerve_terminal():
    T = nerve(terminal_category())
    assert T.counts() == [1]


def test_nerve_parallel_pair(parallel_pair):
    T = nerve(parallel_pair)
    assert T.counts() == [2, 2]
    # d_0 drops the first object (leaves the target), d_1 leaves the source
    assert T.faces[1] == ((1, 0), (1, 0))


def test_nerve_chain3(chain3):
    T = nerve(chain3)
    assert T.counts() == [3, 3, 1]
    assert T.simplices[2] == (Simplex(2, (0, 1)),)
    d0, d1, d2 = (T.simplices[1][i] for i in T.faces[2][0])
    assert (d0, d1, d2) == (Simplex(1, (1,)), Simplex(1, (2,)), Simplex(1, (0,)))


def test_induced_map_identity(chain3):
    tm = induced_trisp_map(identity_functor(chain3))
    for level in tm.source.simplices:
        for s in level:
            assert tm(s) == (s, False)


def test_induced_map_swap(swap_functor):
    tm = induced_trisp_map(swap_functor)
    assert tm(Simplex(0, (0,))).simplex == Simplex(0, (0,))
    assert tm(Simplex(1, (0,))).simplex == Simplex(1, (1,))
    assert tm(Simplex(1, (1,))).simplex == Simplex(1, (0,))


def test_induced_map_collapse(chain3):
    F = build_functor(chain3, chain3, [0, 0, 2], [Identity(0), 2, 2])
    tm = induced_trisp_map(F)
    assert tm(Simplex(1, (0,))) == (Simplex(0, (0,)), True)
    assert tm(Simplex(2, (0, 1))) == (Simplex(1, (2,)), True)


def test_face_poset_small(parallel_pair, chain3):
    P = face_poset(nerve(terminal_category()))
    assert len(P) == 1 and P.degree == (0,)
    P = face_poset(nerve(parallel_pair))
    assert sorted(P.degree) == [0, 0, 1, 1]
    for e in (2, 3):
        assert P.down(e) == {0, 1}
    P = subdivision(chain3)
    assert len(P) == 7
    top = [a for a in range(7) if P.degree[a] == 2]
    assert len(top) == 1 and P.down(top[0]) == set(range(6))


def test_subdivision_map_swap(parallel_pair, swap_functor):
    sd = subdivision(parallel_pair)
    f = subdivision_map(swap_functor, sd)
    assert f == (0, 1, 3, 2)
    assert subdivision_map(identity_functor(terminal_category())) == (0,)


def test_order_complex():
    antichain = build_category(2, [], {})
    assert order_complex(antichain).counts() == [2]
    assert order_complex(build_category(2, [(0, 1)], {})).counts() == [2, 1]


def test_order_complex_reflection_of_d(d_category):
    assert order_complex(poset_reflection(d_category)).counts() == [4, 4]


def test_order_complex_rejects_non_thin(parallel_pair):
    with pytest.raises(ValueError):
        order_complex(parallel_pair)


seeds = st.integers(min_value=0, max_value=10_000)
collapse = st.sampled_from([0.0, 0.2, 0.6])


@settings(max_examples=60, deadline=None)
@given(seeds, collapse)
def test_nerve_against_brute_force(seed, p):
    cat = generate_random(seed, 5, 10, p).source
    T = nerve(cat)
    assert T.counts()[0] == cat.n_objects
    if len(T.simplices) > 1:
        assert T.counts()[1] == cat.n_morphisms
    for k, level in enumerate(T.simplices):
        assert [s.key for s in level] == brute_chains(cat, k)
    assert not brute_chains(cat, len(T.simplices))
    assert check_simplicial_identities(T)


@settings(max_examples=40, deadline=None)
@given(seeds, collapse)
def test_face_poset_is_graded(seed, p):
    cat = generate_random(seed, 5, 10, p).source
    sd = subdivision(cat)
    assert sd.is_graded()
    assert sd.rank_function() == list(sd.degree)
    # sd of a poset: the face poset of an order complex
    sd2 = face_poset(order_complex(sd))
    assert sd2.is_graded()


@settings(max_examples=40, deadline=None)
@given(seeds, collapse)
def test_subdivision_map_order_preserving(seed, p):
    F = generate_random(seed, 5, 10, p)
    sd = subdivision(F.source)
    f = subdivision_map(F, sd)
    assert sd.is_order_preserving(f)
    for a in range(len(sd)):
        assert sd.degree[f[a]] <= sd.degree[a]
        if F.strict:
            assert sd.degree[f[a]] == sd.degree[a]


@settings(max_examples=60, deadline=None)
@given(seeds, collapse)
def test_fixed_simplices_downward_closed(seed, p):
    F = generate_random(seed, 6, 14, p)
    sd = subdivision(F.source)
    f = subdivision_map(F, sd)
    for a in range(len(sd)):
        if f[a] == a:
            assert all(f[b] == b for b in sd.down(a))


@settings(max_examples=40, deadline=None)
@given(seeds, collapse)
def test_trisp_map_functorial(seed, p):
    F = generate_random(seed, 5, 10, p)
    T = nerve(F.source)
    f = induced_trisp_map(F, T, T)
    ff = induced_trisp_map(compose_functors(F, F), T, T)
    assert compose_trisp_maps(f, f).images == ff.images
    ident = induced_trisp_map(identity_functor(F.source), T, T)
    assert all(im == (s, False) for lv, il in zip(T.simplices, ident.images)
               for s, im in zip(lv, il))
