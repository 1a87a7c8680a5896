"""Seeded random acyclic categories with random endofunctors.

A category is built as the free category on a random multigraph DAG,
quotiented by merging random parallel composites and closing the merge
under composition. Composition is then concatenation of paths, so it is
associative and closed by construction.
"""

from __future__ import annotations

import random
from typing import Sequence

from .category import Category, Functor, Identity, build_category, build_functor


class GenerationFailed(RuntimeError):
    pass


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        if b < a:
            a, b = b, a
        self.parent[b] = a
        return True


def _paths(n, gens, limit):
    """All non-empty composable generator paths, or None past ``limit``."""
    out_of = [[] for _ in range(n)]
    for e, (s, _) in enumerate(gens):
        out_of[s].append(e)
    paths = [(e,) for e in range(len(gens))]
    frontier = list(paths)
    while frontier:
        frontier = [p + (e,) for p in frontier for e in out_of[gens[p[-1]][1]]]
        paths.extend(frontier)
        if len(paths) > limit:
            return None
    return paths


def _close(paths, index, gens, uf):
    """Close the equivalence in ``uf`` under pre- and post-composition."""
    changed = True
    while changed:
        changed = False
        seen = {}
        for p in paths:
            cp = uf.find(index[p])
            for q_side in ("r", "l"):
                for e in range(len(gens)):
                    if q_side == "r" and gens[p[-1]][1] == gens[e][0]:
                        q = p + (e,)
                    elif q_side == "l" and gens[e][1] == gens[p[0]][0]:
                        q = (e,) + p
                    else:
                        continue
                    key = (cp, q_side, e)
                    cq = uf.find(index[q])
                    other = seen.setdefault(key, cq)
                    if uf.find(other) != cq and uf.union(other, cq):
                        changed = True


def _random_category(rng: random.Random, max_objects: int, max_morphisms: int):
    n = max(rng.randint(1, max_objects), rng.randint(1, max_objects))
    labels = rng.sample(range(n), n)  # topological position -> object id
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    most = min(max_morphisms, len(pairs) + 2)
    n_gens = rng.randint(min(n - 1, most), most) if pairs else 0
    gens = sorted(rng.choice(pairs) for _ in range(n_gens))
    paths = _paths(n, gens, 4 * max_morphisms + 16)
    if paths is None:
        return None
    paths.sort(key=lambda p: (len(p), p))
    index = {p: i for i, p in enumerate(paths)}
    uf = _UnionFind(len(paths))
    endpoints = [(gens[p[0]][0], gens[p[-1]][1]) for p in paths]
    merge_rate = rng.random()
    by_ends = {}
    for i, ends in enumerate(endpoints):
        by_ends.setdefault(ends, []).append(i)
    for group in by_ends.values():
        for i in group[1:]:
            if len(paths[i]) > 1 and rng.random() < merge_rate:
                uf.union(rng.choice(group), i)
    _close(paths, index, gens, uf)

    def count():
        return len({uf.find(i) for i in range(len(paths))})

    # merge further until the morphism budget is met
    while count() > max_morphisms:
        parallel = [g for g in by_ends.values() if len({uf.find(i) for i in g}) > 1]
        if not parallel:
            return None
        group = rng.choice(parallel)
        classes = sorted({uf.find(i) for i in group})
        a, b = rng.sample(classes, 2)
        uf.union(a, b)
        _close(paths, index, gens, uf)

    roots = sorted({uf.find(i) for i in range(len(paths))})
    mor_id = {r: k for k, r in enumerate(roots)}
    cls = [mor_id[uf.find(i)] for i in range(len(paths))]
    morph_ends = [(labels[endpoints[r][0]], labels[endpoints[r][1]]) for r in roots]
    table = {}
    for p in paths:
        for q in paths:
            if endpoints[index[p]][1] == endpoints[index[q]][0]:
                table[cls[index[q]], cls[index[p]]] = cls[index[p + q]]
    cat = build_category(n, morph_ends, table)
    gen_class = [cls[index[(e,)]] for e in range(len(gens))]
    return cat, labels, gens, paths, index, cls, gen_class


def _random_functor(rng, cat: Category, labels, gens, paths, index, cls, gen_class,
                    collapse_probability: float):
    n = cat.n_objects
    reach = [set() for _ in range(n)]  # strictly above, by object id
    for m in cat.morphisms:
        reach[cat.src[m]].add(cat.tgt[m])
    fmap = {}
    for pos in range(n):
        x = labels[pos]
        preds = sorted({labels[s] for (s, t) in gens if t == pos})
        ok = [y for y in range(n)
              if all(fmap[p] == y or y in reach[fmap[p]] for p in preds)]
        collapse = [y for y in ok if any(fmap[p] == y for p in preds)]
        proper = [y for y in ok if y not in collapse]
        if collapse and rng.random() < collapse_probability:
            fmap[x] = rng.choice(collapse)
        elif proper:
            fmap[x] = x if x in proper and rng.random() < 0.4 else rng.choice(proper)
        elif collapse and collapse_probability > 0:
            fmap[x] = rng.choice(collapse)
        else:
            return None
    object_map = [fmap[x] for x in range(n)]
    gen_image = []
    for e, (s, t) in enumerate(gens):
        fs, ft = object_map[labels[s]], object_map[labels[t]]
        if fs == ft:
            gen_image.append(Identity(fs))
            continue
        hom = cat.hom(fs, ft)
        own = gen_class[e]
        gen_image.append(own if own in hom and rng.random() < 0.5 else rng.choice(hom))
    images: dict[int, object] = {}
    for p in paths:
        image = gen_image[p[0]]
        for e in p[1:]:
            image = cat.compose(gen_image[e], image)
        k = cls[index[p]]
        if images.setdefault(k, image) != image:
            return None
    return build_functor(cat, cat, object_map, [images[m] for m in cat.morphisms])


def generate_random(seed: int, max_objects: int, max_morphisms: int,
                    collapse_probability: float = 0.0, attempts: int = 200) -> Functor:
    """A random endofunctor of a random acyclic category, determined by ``seed``."""
    if max_objects < 1 or max_morphisms < 0:
        raise ValueError("need at least one object and a non-negative morphism budget")
    if not 0.0 <= collapse_probability <= 1.0:
        raise ValueError("collapse probability must lie in [0, 1]")
    rng = random.Random(seed)
    for _ in range(attempts):
        built = _random_category(rng, max_objects, max_morphisms)
        if built is None:
            continue
        for _ in range(20):
            F = _random_functor(rng, *built, collapse_probability)
            if F is not None:
                return F
    raise GenerationFailed(f"no instance after {attempts} attempts (seed {seed})")


def relabel(F: Functor, object_perm: Sequence[int], morphism_perm: Sequence[int]) -> Functor:
    """Conjugate an endofunctor by renumbering objects and morphisms.

    ``object_perm[old] = new`` and likewise for morphisms.
    """
    cat = F.source
    inv_o = sorted(range(cat.n_objects), key=lambda x: object_perm[x])
    inv_m = sorted(range(cat.n_morphisms), key=lambda m: morphism_perm[m])
    ends = [(object_perm[cat.src[m]], object_perm[cat.tgt[m]]) for m in inv_m]
    table = {(morphism_perm[g], morphism_perm[f]): morphism_perm[h]
             for (g, f), h in cat.compose_table.items()}
    new = build_category(cat.n_objects, ends, table)

    def move(image):
        if isinstance(image, Identity):
            return Identity(object_perm[image.at])
        return morphism_perm[image]

    return build_functor(new, new, [object_perm[F.object_map[x]] for x in inv_o],
                         [move(F.morphism_map[m]) for m in inv_m])
