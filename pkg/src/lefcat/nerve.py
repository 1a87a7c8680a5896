"""Nerves, face posets and subdivisions of acyclic categories."""

from __future__ import annotations

import graphlib
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, NamedTuple, Sequence

from .category import (Category, CategoryError, Functor, Identity, is_poset,
                       thin_category)


class Simplex(NamedTuple):
    """A simplex of a nerve.

    ``key`` is ``(x,)`` for the vertex at object ``x`` and the tuple of
    morphism ids ``(m_1, ..., m_k)`` of a composable chain otherwise.
    """

    dim: int
    key: tuple[int, ...]

    def __repr__(self):
        if self.dim == 0:
            return f"<{self.key[0]}>"
        return "(" + ",".join(map(str, self.key)) + ")"


class SimplexImage(NamedTuple):
    simplex: Simplex  # the reduced image chain
    degenerate: bool


@dataclass(frozen=True)
class Trisp:
    """A regular trisp: simplices by dimension plus face maps.

    ``faces[k][i]`` lists the indices (in dimension ``k - 1``) of the faces
    ``d_0, ..., d_k`` of simplex ``i`` of dimension ``k``.
    """

    simplices: tuple[tuple[Simplex, ...], ...]
    faces: tuple[tuple[tuple[int, ...], ...], ...]

    @cached_property
    def _index(self):
        return [{s: i for i, s in enumerate(level)} for level in self.simplices]

    def index(self, s: Simplex) -> int:
        return self._index[s.dim][s]

    def __contains__(self, s) -> bool:
        return s.dim < len(self.simplices) and s in self._index[s.dim]

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(level) for level in self.simplices]

    def all_simplices(self) -> list[Simplex]:
        return [s for level in self.simplices for s in level]


def chain_vertices(cat: Category, s: Simplex) -> tuple[int, ...]:
    """Objects ``x_0, ..., x_k`` of a nerve simplex."""
    if s.dim == 0:
        return s.key
    return (cat.src[s.key[0]],) + tuple(cat.tgt[m] for m in s.key)


def chain_faces(cat: Category, s: Simplex) -> tuple[Simplex, ...]:
    """``d_0 .. d_k``: drop the first object, compose at an inner object, drop the last."""
    chain = s.key
    k = s.dim
    if k == 1:
        m = chain[0]
        return Simplex(0, (cat.tgt[m],)), Simplex(0, (cat.src[m],))
    out = [Simplex(k - 1, chain[1:])]
    for j in range(1, k):
        joined = cat.compose_table[chain[j], chain[j - 1]]
        out.append(Simplex(k - 1, chain[:j - 1] + (joined,) + chain[j + 1:]))
    out.append(Simplex(k - 1, chain[:-1]))
    return tuple(out)


def nerve(cat: Category) -> Trisp:
    levels = [[Simplex(0, (x,)) for x in cat.objects]]
    chains = sorted((m,) for m in cat.morphisms)
    outgoing = [[] for _ in cat.objects]
    for m in cat.morphisms:
        outgoing[cat.src[m]].append(m)
    k = 1
    while chains:
        levels.append([Simplex(k, c) for c in chains])
        chains = sorted(c + (m,) for c in chains for m in outgoing[cat.tgt[c[-1]]])
        k += 1
    index = [{s: i for i, s in enumerate(level)} for level in levels]
    faces = [tuple(() for _ in levels[0])]
    for k in range(1, len(levels)):
        faces.append(tuple(tuple(index[k - 1][d] for d in chain_faces(cat, s))
                           for s in levels[k]))
    return Trisp(tuple(tuple(level) for level in levels), tuple(faces))


def check_simplicial_identities(T: Trisp) -> bool:
    """``d_i d_j = d_{j-1} d_i`` for ``i < j`` on every simplex of dimension >= 2."""
    for k in range(2, len(T.simplices)):
        for face in T.faces[k]:
            for j in range(k + 1):
                for i in range(j):
                    if T.faces[k - 1][face[j]][i] != T.faces[k - 1][face[i]][j - 1]:
                        return False
    return True


def image_simplex(F: Functor, s: Simplex) -> SimplexImage:
    """Image of a nerve simplex, with identity images dropped from the chain."""
    if s.dim == 0:
        return SimplexImage(Simplex(0, (F.object_map[s.key[0]],)), False)
    images = [F.morphism_map[m] for m in s.key]
    reduced = tuple(m for m in images if not isinstance(m, Identity))
    degenerate = len(reduced) < len(images)
    if not reduced:
        return SimplexImage(Simplex(0, (F.object_map[F.source.src[s.key[0]]],)), True)
    return SimplexImage(Simplex(len(reduced), reduced), degenerate)


@dataclass(frozen=True)
class TrispMap:
    source: Trisp
    target: Trisp
    images: tuple[tuple[SimplexImage, ...], ...]

    def __call__(self, s: Simplex) -> SimplexImage:
        return self.images[s.dim][self.source.index(s)]


def induced_trisp_map(F: Functor, source: Trisp | None = None,
                      target: Trisp | None = None) -> TrispMap:
    source = source if source is not None else nerve(F.source)
    if target is None:
        target = source if F.is_endofunctor else nerve(F.target)
    images = tuple(tuple(image_simplex(F, s) for s in level) for level in source.simplices)
    return TrispMap(source, target, images)


def compose_trisp_maps(g: TrispMap, f: TrispMap) -> TrispMap:
    """``g . f`` on simplices; a degenerate step makes the composite degenerate."""
    images = []
    for level in f.images:
        row = []
        for image in level:
            second = g(image.simplex)
            row.append(SimplexImage(second.simplex, image.degenerate or second.degenerate))
        images.append(tuple(row))
    return TrispMap(f.source, g.target, tuple(images))


@dataclass(frozen=True)
class GradedPoset:
    """A finite poset with a degree per element.

    ``up[i]`` is the strict upper set of element ``i`` and ``covers[i]`` the
    elements covering it.
    """

    elements: tuple[Hashable, ...]
    degree: tuple[int, ...]
    up: tuple[frozenset[int], ...]
    covers: tuple[frozenset[int], ...]

    def __len__(self):
        return len(self.elements)

    @cached_property
    def _index(self):
        return {e: i for i, e in enumerate(self.elements)}

    def index(self, element) -> int:
        return self._index[element]

    def less(self, a: int, b: int) -> bool:
        return b in self.up[a]

    def leq(self, a: int, b: int) -> bool:
        return a == b or b in self.up[a]

    def down(self, b: int) -> frozenset[int]:
        return frozenset(a for a in range(len(self)) if b in self.up[a])

    def relations(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(len(self)) for b in sorted(self.up[a])]

    def minimal(self) -> list[int]:
        has_below = set().union(*self.up) if self.elements else set()
        return [a for a in range(len(self)) if a not in has_below]

    def is_graded(self) -> bool:
        """Degree rises by exactly one along every covering relation."""
        return all(self.degree[b] == self.degree[a] + 1
                   for a in range(len(self)) for b in self.covers[a])

    def rank_function(self) -> list[int]:
        """Length of the longest chain from a minimal element up to each element."""
        order = sorted(range(len(self)), key=lambda a: len(self.down(a)))
        height = [0] * len(self)
        for b in order:
            for a in self.down(b):
                height[b] = max(height[b], height[a] + 1)
        return height

    def subposet(self, keep) -> GradedPoset:
        """Induced subposet on ``keep`` (element indices); degrees are kept as they are."""
        keep = sorted(set(keep))
        new = {old: i for i, old in enumerate(keep)}
        up = [frozenset(new[b] for b in self.up[a] if b in new) for a in keep]
        return GradedPoset(tuple(self.elements[a] for a in keep),
                           tuple(self.degree[a] for a in keep),
                           tuple(up), _covers(up))

    def is_order_preserving(self, f: Sequence[int]) -> bool:
        return all(self.leq(f[a], f[b]) for a, b in self.relations())

    def fixed_subposet(self, f: Sequence[int]) -> tuple[GradedPoset, list[int]]:
        fixed = [a for a in range(len(self)) if f[a] == a]
        return self.subposet(fixed), fixed

    def as_category(self) -> Category:
        return thin_category(len(self), self.relations())


def _covers(up):
    return tuple(frozenset(b for b in up[a] if not any(b in up[c] for c in up[a]))
                 for a in range(len(up)))


def graded_poset(elements: Sequence[Hashable], degree: Sequence[int],
                 pairs) -> GradedPoset:
    """Poset generated by the relations ``a < b`` in ``pairs`` (element indices)."""
    n = len(elements)
    above = [set() for _ in range(n)]
    for a, b in pairs:
        above[a].add(b)
    graph = {a: above[a] for a in range(n)}
    try:
        order = list(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError:
        raise CategoryError("relation has a cycle") from None
    # static_order yields successors (larger elements) first
    up = [frozenset()] * n
    for a in order:
        reach = set(above[a])
        for b in above[a]:
            reach |= up[b]
        up[a] = frozenset(reach)
    return GradedPoset(tuple(elements), tuple(degree), tuple(up), _covers(up))


def face_poset(T: Trisp) -> GradedPoset:
    elements = T.all_simplices()
    offset = [0]
    for level in T.simplices:
        offset.append(offset[-1] + len(level))
    pairs = [(offset[k - 1] + d, offset[k] + i)
             for k in range(1, len(T.simplices))
             for i, faces in enumerate(T.faces[k]) for d in faces]
    return graded_poset(elements, [s.dim for s in elements], pairs)


def subdivision(cat: Category) -> GradedPoset:
    """sd(C): the face poset of the nerve."""
    return face_poset(nerve(cat))


def subdivision_map(F: Functor, sd_source: GradedPoset | None = None,
                    sd_target: GradedPoset | None = None) -> tuple[int, ...]:
    """sd(F) as a tuple of element indices: each chain goes to its reduced image."""
    sd_source = sd_source if sd_source is not None else subdivision(F.source)
    if sd_target is None:
        sd_target = sd_source if F.is_endofunctor else subdivision(F.target)
    return tuple(sd_target.index(image_simplex(F, s).simplex) for s in sd_source.elements)


def poset_map_functor(P: GradedPoset, f: Sequence[int],
                      thin: Category | None = None) -> Functor:
    """An order-preserving self-map of ``P`` as an endofunctor of its thin category."""
    thin = thin if thin is not None else P.as_category()
    lookup = {(thin.src[m], thin.tgt[m]): m for m in thin.morphisms}
    images = []
    for m in thin.morphisms:
        a, b = f[thin.src[m]], f[thin.tgt[m]]
        if a == b:
            images.append(Identity(a))
        else:
            try:
                images.append(lookup[a, b])
            except KeyError:
                raise CategoryError("map is not order-preserving") from None
    return Functor(thin, thin, tuple(f), tuple(images))


def order_complex(P) -> Trisp:
    """Strict chains of a poset (a :class:`GradedPoset` or a thin category)."""
    if isinstance(P, Category):
        if not is_poset(P):
            raise CategoryError("category is not thin")
        return nerve(P)
    return nerve(P.as_category())
