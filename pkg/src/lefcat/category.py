"""Finite acyclic categories and functors between them.

Objects and non-identity morphisms are dense integer ids. Identities are
never stored; a morphism image that is an identity is written ``Identity(x)``.
"""

from __future__ import annotations

import graphlib
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union


class CategoryError(ValueError):
    """Base class for invalid category or functor data.

    ``where`` optionally names the offending item (a morphism id, a pair of
    ids, ...) so that front ends can map it back to a source location.
    """

    def __init__(self, message: str, where=None):
        super().__init__(message)
        self.where = where


class EndoMorphism(CategoryError):
    pass


class CycleDetected(CategoryError):
    pass


class BadComposite(CategoryError):
    pass


class NonAssociative(CategoryError):
    pass


class MissingComposite(CategoryError):
    pass


class EndpointMismatch(CategoryError):
    pass


class CompositionNotPreserved(CategoryError):
    pass


class SourceTargetMismatch(CategoryError):
    pass


class NotEndofunctor(CategoryError):
    pass


@dataclass(frozen=True, order=True)
class Identity:
    """The identity morphism of object ``at``."""

    at: int

    def __repr__(self):
        return f"id({self.at})"


MorphismRef = Union[int, Identity]


@dataclass(frozen=True)
class Category:
    n_objects: int
    src: tuple[int, ...]
    tgt: tuple[int, ...]
    compose_table: Mapping[tuple[int, int], int]
    object_names: tuple[str, ...] | None = field(default=None, compare=False)
    morphism_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __hash__(self):
        return hash((self.n_objects, self.src, self.tgt,
                     tuple(sorted(self.compose_table.items()))))

    @property
    def n_morphisms(self) -> int:
        return len(self.src)

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(len(self.src))

    def compose(self, g: MorphismRef, f: MorphismRef) -> MorphismRef:
        """Return ``g . f`` (apply ``f`` first); identities act neutrally."""
        if isinstance(f, Identity):
            if self.source(g) != f.at:
                raise BadComposite(f"{g!r} . {f!r} not composable", (g, f))
            return g
        if isinstance(g, Identity):
            if self.tgt[f] != g.at:
                raise BadComposite(f"{g!r} . {f!r} not composable", (g, f))
            return f
        try:
            return self.compose_table[g, f]
        except KeyError:
            raise BadComposite(f"{g} . {f} not composable", (g, f)) from None

    def source(self, m: MorphismRef) -> int:
        return m.at if isinstance(m, Identity) else self.src[m]

    def target(self, m: MorphismRef) -> int:
        return m.at if isinstance(m, Identity) else self.tgt[m]

    def hom(self, x: int, y: int) -> list[int]:
        """Non-identity morphisms ``x -> y``."""
        return [m for m in self.morphisms if self.src[m] == x and self.tgt[m] == y]

    def out_morphisms(self, x: int) -> list[int]:
        return [m for m in self.morphisms if self.src[m] == x]

    def composable_pairs(self) -> Iterable[tuple[int, int]]:
        """All pairs ``(g, f)`` with ``tgt(f) == src(g)``."""
        outgoing = [[] for _ in self.objects]
        for m in self.morphisms:
            outgoing[self.src[m]].append(m)
        for f in self.morphisms:
            for g in outgoing[self.tgt[f]]:
                yield g, f

    def object_name(self, x: int) -> str:
        return self.object_names[x] if self.object_names else str(x)

    def morphism_name(self, m: int) -> str:
        return self.morphism_names[m] if self.morphism_names else f"m{m}"


def _check_acyclic(n_objects, src, tgt):
    graph = {x: set() for x in range(n_objects)}
    for s, t in zip(src, tgt):
        graph[t].add(s)
    try:
        tuple(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as exc:
        cycle = exc.args[1]
        raise CycleDetected(f"morphisms form a directed cycle through objects {cycle}",
                            tuple(cycle)) from None


def build_category(n_objects: int,
                   morphism_endpoints: Sequence[tuple[int, int]],
                   composition_table: Mapping[tuple[int, int], int],
                   object_names=None, morphism_names=None) -> Category:
    """Validate raw data and return an immutable :class:`Category`.

    ``composition_table[g, f] = h`` means ``g . f = h``. Every composable pair
    of stored morphisms must have an entry.
    """
    if n_objects < 0:
        raise CategoryError("negative object count")
    src = tuple(int(s) for s, _ in morphism_endpoints)
    tgt = tuple(int(t) for _, t in morphism_endpoints)
    n_mor = len(src)
    for m, (s, t) in enumerate(zip(src, tgt)):
        if not (0 <= s < n_objects and 0 <= t < n_objects):
            raise CategoryError(f"morphism {m} has an endpoint outside 0..{n_objects - 1}", m)
        if s == t:
            raise EndoMorphism(f"morphism {m} is a non-identity endomorphism of {s}", m)
    _check_acyclic(n_objects, src, tgt)

    table = {}
    for (g, f), h in composition_table.items():
        if not all(0 <= i < n_mor for i in (g, f, h)):
            raise BadComposite(f"composite {g} . {f} = {h} references an unknown morphism",
                               (g, f))
        if tgt[f] != src[g]:
            raise BadComposite(f"{g} . {f}: target of {f} is not the source of {g}", (g, f))
        if src[h] != src[f] or tgt[h] != tgt[g]:
            raise BadComposite(f"{g} . {f} = {h}: endpoints of {h} do not match", (g, f))
        table[int(g), int(f)] = int(h)

    cat = Category(n_objects, src, tgt, table,
                   tuple(object_names) if object_names is not None else None,
                   tuple(morphism_names) if morphism_names is not None else None)
    for g, f in cat.composable_pairs():
        if (g, f) not in table:
            raise MissingComposite(f"composable pair {g} . {f} has no composite", (g, f))

    outgoing = [[] for _ in range(n_objects)]
    for m in range(n_mor):
        outgoing[src[m]].append(m)
    for (g, f), gf in table.items():
        for h in outgoing[tgt[g]]:
            if table[h, gf] != table[table[h, g], f]:
                raise NonAssociative(f"({h} . {g}) . {f} differs from {h} . ({g} . {f})",
                                     (h, g, f))
    return cat


def terminal_category() -> Category:
    return build_category(1, [], {})


@dataclass(frozen=True)
class Functor:
    source: Category
    target: Category
    object_map: tuple[int, ...]
    morphism_map: tuple[MorphismRef, ...]

    def __call__(self, item: MorphismRef) -> MorphismRef:
        if isinstance(item, Identity):
            return Identity(self.object_map[item.at])
        return self.morphism_map[item]

    @property
    def is_endofunctor(self) -> bool:
        return self.source == self.target

    @property
    def strict(self) -> bool:
        """True iff no non-identity morphism is sent to an identity."""
        return not any(isinstance(m, Identity) for m in self.morphism_map)


def build_functor(source: Category, target: Category,
                  object_map: Sequence[int],
                  morphism_map: Sequence[MorphismRef]) -> Functor:
    object_map = tuple(int(y) for y in object_map)
    morphism_map = tuple(m if isinstance(m, Identity) else int(m) for m in morphism_map)
    if len(object_map) != source.n_objects:
        raise CategoryError("object map is not total on the source objects")
    if len(morphism_map) != source.n_morphisms:
        raise CategoryError("morphism map is not total on the source morphisms")
    for x, y in enumerate(object_map):
        if not 0 <= y < target.n_objects:
            raise CategoryError(f"object {x} maps outside the target", x)
    for m, image in enumerate(morphism_map):
        if isinstance(image, Identity):
            if not 0 <= image.at < target.n_objects:
                raise CategoryError(f"morphism {m} maps to an unknown identity", m)
        elif not 0 <= image < target.n_morphisms:
            raise CategoryError(f"morphism {m} maps outside the target", m)
        want = (object_map[source.src[m]], object_map[source.tgt[m]])
        have = (target.source(image), target.target(image))
        if want != have:
            raise EndpointMismatch(
                f"morphism {m} maps to {image!r} with endpoints {have}, expected {want}", m)
    for (g, f), h in source.compose_table.items():
        if target.compose(morphism_map[g], morphism_map[f]) != morphism_map[h]:
            raise CompositionNotPreserved(
                f"image of {g} . {f} is not the composite of the images", (g, f))
    return Functor(source, target, object_map, morphism_map)


def identity_functor(cat: Category) -> Functor:
    return Functor(cat, cat, tuple(cat.objects), tuple(cat.morphisms))


def compose_functors(G: Functor, F: Functor) -> Functor:
    """``G . F``: apply ``F`` first."""
    if F.target != G.source:
        raise SourceTargetMismatch("target of the first functor is not the source of the second")
    object_map = tuple(G.object_map[y] for y in F.object_map)
    morphism_map = tuple(G(image) for image in F.morphism_map)
    return Functor(F.source, G.target, object_map, morphism_map)


@dataclass(frozen=True)
class FixedData:
    fixed_objects: frozenset[int]
    fixed_morphisms: frozenset[int]
    fixed_subcategory: Category
    # ambient ids of the subcategory's objects / morphisms, by sub id
    object_embedding: tuple[int, ...]
    morphism_embedding: tuple[int, ...]


def _require_endo(F: Functor):
    if not F.is_endofunctor:
        raise NotEndofunctor("functor is not an endofunctor")


def fixed_data(F: Functor) -> FixedData:
    _require_endo(F)
    cat = F.source
    objs = tuple(x for x in cat.objects if F.object_map[x] == x)
    mors = tuple(m for m in cat.morphisms if F.morphism_map[m] == m)
    obj_index = {x: i for i, x in enumerate(objs)}
    mor_index = {m: i for i, m in enumerate(mors)}
    endpoints = [(obj_index[cat.src[m]], obj_index[cat.tgt[m]]) for m in mors]
    table = {}
    for g, f in itertools.product(mors, repeat=2):
        if cat.tgt[f] == cat.src[g]:
            table[mor_index[g], mor_index[f]] = mor_index[cat.compose_table[g, f]]
    names = ([cat.object_name(x) for x in objs] if cat.object_names else None)
    mnames = ([cat.morphism_name(m) for m in mors] if cat.morphism_names else None)
    sub = build_category(len(objs), endpoints, table, names, mnames)
    return FixedData(frozenset(objs), frozenset(mors), sub, objs, mors)


def is_poset(cat: Category) -> bool:
    """True iff every hom-set has at most one element."""
    pairs = list(zip(cat.src, cat.tgt))
    return len(pairs) == len(set(pairs))


def thin_category(n_objects: int, relations: Iterable[tuple[int, int]],
                  object_names=None) -> Category:
    """Category of a poset given by its strict relations ``x < y``.

    The relation must already be transitively closed and acyclic; the result
    is built without re-running the associativity check, which holds by
    construction for a thin category.
    """
    pairs = sorted(set(relations))
    index = {p: i for i, p in enumerate(pairs)}
    above = [[] for _ in range(n_objects)]
    for (x, y) in pairs:
        above[x].append(y)
    table = {}
    for (x, y), f in index.items():
        for z in above[y]:
            try:
                table[index[y, z], f] = index[x, z]
            except KeyError:
                raise CategoryError(f"relation is not transitive at {x} < {y} < {z}") from None
    for (x, y) in pairs:
        if x == y:
            raise EndoMorphism(f"relation {x} < {x} is reflexive", (x, y))
    src = tuple(p[0] for p in pairs)
    tgt = tuple(p[1] for p in pairs)
    _check_acyclic(n_objects, src, tgt)
    return Category(n_objects, src, tgt, table,
                    tuple(object_names) if object_names is not None else None)


def poset_reflection(cat: Category) -> Category:
    """R(C): the thin category on the objects, ``x < y`` iff there is an arrow."""
    names = cat.object_names
    return thin_category(cat.n_objects, zip(cat.src, cat.tgt), names)


def poset_reflection_map(F: Functor) -> Functor:
    """R(F): acts as ``F`` on objects, between the reflected posets."""
    source = poset_reflection(F.source)
    target = source if F.is_endofunctor else poset_reflection(F.target)
    lookup = {(target.src[m], target.tgt[m]): m for m in target.morphisms}
    images = []
    for m in source.morphisms:
        x, y = F.object_map[source.src[m]], F.object_map[source.tgt[m]]
        images.append(Identity(x) if x == y else lookup[x, y])
    return Functor(source, target, F.object_map, tuple(images))
