"""Layer deletion in subdivisions and the fixed-morphism check."""

from __future__ import annotations

from dataclasses import dataclass

from .category import Functor, NotEndofunctor
from .lefschetz import MethodMismatch, TheoremViolated, poset_fixed_euler, poset_lefschetz_pair
from .nerve import GradedPoset, nerve, subdivision, subdivision_map


def layer(P: GradedPoset, i: int) -> frozenset[int]:
    return frozenset(a for a in range(len(P)) if P.degree[a] == i)


def delete_layers_leq(P: GradedPoset, i: int) -> GradedPoset:
    """Drop every element of degree ``<= i``; the rest keep their degrees."""
    return P.subposet(a for a in range(len(P)) if P.degree[a] > i)


def delete_layer(P: GradedPoset, i: int) -> GradedPoset:
    return P.subposet(a for a in range(len(P)) if P.degree[a] != i)


@dataclass(frozen=True)
class LayeredDomain:
    base: GradedPoset
    cutoff: int
    elements: tuple[int, ...]  # indices into base
    poset: GradedPoset  # induced subposet on elements
    map: tuple[int, ...]  # self-map, in poset indices
    # one-step deletion of the preimage of the low layers
    literal_elements: tuple[int, ...]
    literal_is_self_map: bool

    @property
    def diverges(self) -> bool:
        return self.literal_elements != self.elements


def restricted_map(F: Functor, i: int, sd: GradedPoset | None = None,
                   sd_map=None) -> LayeredDomain:
    """sd(F) restricted to the largest invariant subset of elements of degree > i.

    For strict functors degrees are preserved and this is every element of
    degree > i. Otherwise elements are removed until no image leaves the set.
    """
    if not F.is_endofunctor:
        raise NotEndofunctor("layer restriction needs an endofunctor")
    sd = sd if sd is not None else subdivision(F.source)
    f = sd_map if sd_map is not None else subdivision_map(F, sd)
    high = {a for a in range(len(sd)) if sd.degree[a] > i}
    literal = {a for a in high if f[a] in high}
    keep = set(high)
    while True:
        shrunk = {a for a in keep if f[a] in keep}
        if shrunk == keep:
            break
        keep = shrunk
    elements = tuple(sorted(keep))
    poset = sd.subposet(elements)
    position = {a: n for n, a in enumerate(elements)}
    self_map = tuple(position[f[a]] for a in elements)
    return LayeredDomain(sd, i, elements, poset, self_map, tuple(sorted(literal)),
                         all(f[a] in literal for a in literal))


def layered_lefschetz_values(F: Functor, i: int, domain: LayeredDomain | None = None):
    """``(hopf, homology, chi of fixed subposet)`` for the restricted map."""
    domain = domain if domain is not None else restricted_map(F, i)
    hopf, hom = poset_lefschetz_pair(domain.poset, domain.map)
    return hopf, hom, poset_fixed_euler(domain.poset, domain.map)


def layered_lefschetz(F: Functor, i: int, domain: LayeredDomain | None = None) -> int:
    hopf, hom, chi = layered_lefschetz_values(F, i, domain)
    if not hopf == hom == chi:
        raise MethodMismatch(f"layered Lefschetz number: chain {hopf}, homology {hom}, "
                             f"fixed-subposet chi {chi}")
    return hopf


def fixed_chain_search(F: Functor, k: int, T=None) -> list[tuple[int, ...]]:
    """All composable ``k``-chains of non-identity morphisms fixed one by one by ``F``."""
    if k < 1:
        raise ValueError("chain length must be at least 1")
    T = T if T is not None else nerve(F.source)
    if k >= len(T.simplices):
        return []
    return [s.key for s in T.simplices[k]
            if all(F.morphism_map[m] == m for m in s.key)]


@dataclass(frozen=True)
class FixedMorphismReport:
    cutoff: int
    layered_L: int
    # k -> first witnesses (lexicographic) and the total count
    fixed_chains_by_length: dict[int, tuple[tuple[int, ...], ...]]
    chain_counts: dict[int, int]
    theorem_holds: bool
    domain_size: int
    literal_domain_size: int
    literal_is_self_map: bool
    strict: bool


def check_fixed_morphism_theorem(F: Functor, i: int, *, max_witnesses: int = 5,
                                 raise_on_violation: bool = True) -> FixedMorphismReport:
    if i < 0:
        raise ValueError("cutoff must be non-negative")
    domain = restricted_map(F, i)
    L = layered_lefschetz(F, i, domain)
    T = nerve(F.source)
    witnesses, counts = {}, {}
    for k in range(1, i + 2):
        chains = fixed_chain_search(F, k, T)
        counts[k] = len(chains)
        witnesses[k] = tuple(chains[:max_witnesses])
    holds = L == 0 or all(counts.values())
    report = FixedMorphismReport(i, L, witnesses, counts, holds, len(domain.elements),
                                 len(domain.literal_elements), domain.literal_is_self_map,
                                 F.strict)
    if raise_on_violation and not holds:
        from .formats import serialize_instance
        raise TheoremViolated(f"layered Lefschetz number {L} at cutoff {i} but no fixed "
                              "chains of some length", serialize_instance(F))
    return report
