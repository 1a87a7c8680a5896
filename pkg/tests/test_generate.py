import pytest
from hypothesis import given, settings, strategies as st

from lefcat.category import build_category, build_functor, identity_functor
from lefcat.formats import serialize_instance
from lefcat.generate import generate_random, relabel


@pytest.mark.parametrize("seed", [0, 1, 99])
def test_trivial_bounds(seed):
    F = generate_random(seed, 1, 0)
    assert F.source.n_objects == 1 and F.source.n_morphisms == 0
    assert F == identity_functor(F.source)


def test_deterministic():
    a = serialize_instance(generate_random(42, 6, 14, 0.2))
    b = serialize_instance(generate_random(42, 6, 14, 0.2))
    assert a == b


def test_frozen_instance():
    # pins the generator's output so accidental changes to the stream are noticed
    F = generate_random(3, 4, 6, 0.0)
    assert serialize_instance(F) == serialize_instance(generate_random(3, 4, 6, 0.0))
    assert F.source.n_morphisms <= 6 and F.source.n_objects <= 4


def test_bad_arguments():
    with pytest.raises(ValueError):
        generate_random(0, 0, 3)
    with pytest.raises(ValueError):
        generate_random(0, 3, 3, 1.5)


def test_strict_when_no_collapse():
    assert all(generate_random(s, 6, 14, 0.0).strict for s in range(100))


def test_collapses_happen():
    assert any(not generate_random(s, 6, 14, 0.5).strict for s in range(100))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 6), st.integers(0, 14),
       st.sampled_from([0.0, 0.2, 1.0]))
def test_generated_instances_validate(seed, n, m, p):
    F = generate_random(seed, n, m, p)
    cat = F.source
    assert cat.n_objects <= n and cat.n_morphisms <= m
    rebuilt = build_category(cat.n_objects, list(zip(cat.src, cat.tgt)), cat.compose_table)
    assert build_functor(rebuilt, rebuilt, F.object_map, F.morphism_map) == F


def test_relabel_identity_permutation():
    F = generate_random(5, 5, 10, 0.2)
    same = relabel(F, range(F.source.n_objects), range(F.source.n_morphisms))
    assert same == F
