"""Lefschetz and R-Lefschetz numbers of endofunctors and the fixed-object check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .category import (Functor, fixed_data, poset_reflection, poset_reflection_map,
                       thin_category, NotEndofunctor)
from .homology import chain_complex, chain_map, euler_char, hopf_lefschetz, homology_lefschetz
from .nerve import (GradedPoset, Simplex, induced_trisp_map, nerve, order_complex,
                    poset_map_functor, subdivision, subdivision_map)


class MethodMismatch(RuntimeError):
    """Chain-level and homology-level Lefschetz numbers disagree (internal error)."""


class TheoremViolated(AssertionError):
    """A checked identity failed; ``counterexample`` holds the instance as text."""

    def __init__(self, message: str, counterexample: str = ""):
        super().__init__(message)
        self.counterexample = counterexample


def lefschetz_pair(F: Functor, T=None) -> tuple[int, int]:
    """``(hopf, homology)`` Lefschetz numbers of the nerve map of an endofunctor."""
    if not F.is_endofunctor:
        raise NotEndofunctor("Lefschetz numbers need an endofunctor")
    T = T if T is not None else nerve(F.source)
    f = chain_map(induced_trisp_map(F, T, T))
    return hopf_lefschetz(f), homology_lefschetz(f)


def _agree(pair, what):
    if pair[0] != pair[1]:
        raise MethodMismatch(f"{what}: chain-level {pair[0]} != homology-level {pair[1]}")
    return pair[0]


def lefschetz_number(F: Functor) -> int:
    return _agree(lefschetz_pair(F), "L(F)")


def r_lefschetz_pair(F: Functor) -> tuple[int, int]:
    return lefschetz_pair(poset_reflection_map(F))


def r_lefschetz_number(F: Functor) -> int:
    """Lefschetz number of R(F) on the order complex of R(C)."""
    return _agree(r_lefschetz_pair(F), "L_R(F)")


def poset_lefschetz_pair(P: GradedPoset, f: Sequence[int],
                         homology: bool = True) -> tuple[int, int | None]:
    """Lefschetz number of an order-preserving self-map, both ways.

    With ``homology=False`` only the chain-level value is computed and the
    second entry is ``None``.
    """
    G = poset_map_functor(P, f)
    T = nerve(G.source)
    cmap = chain_map(induced_trisp_map(G, T, T))
    return hopf_lefschetz(cmap), (homology_lefschetz(cmap) if homology else None)


def poset_fixed_euler(P: GradedPoset, f: Sequence[int]) -> int:
    """chi of the order complex of the fixed subposet."""
    fixed, _ = P.fixed_subposet(f)
    return euler_char(order_complex(fixed))


def sd_lefschetz_number(F: Functor, sd=None, sd_map=None, homology: bool = True) -> int:
    """L(sd(F)) with sd(F) taken as a self-map of the poset sd(C)."""
    sd = sd if sd is not None else subdivision(F.source)
    sd_map = sd_map if sd_map is not None else subdivision_map(F, sd)
    hopf, hom = poset_lefschetz_pair(sd, sd_map, homology)
    if hom is not None:
        _agree((hopf, hom), "L(sd F)")
    return hopf


def fixed_downward_closed(sd: GradedPoset, sd_map: Sequence[int]) -> bool:
    """Every face of an element fixed by sd(F) is fixed too."""
    for a in range(len(sd)):
        if sd_map[a] == a and any(sd_map[b] != b for b in sd.down(a)):
            return False
    return True


@dataclass(frozen=True)
class LefschetzReport:
    L: int
    L_R: int
    chi_fixed_subcategory: int
    chi_fixed_poset: int
    fixed_objects: tuple[int, ...]
    strict: bool
    identities_checked: tuple[tuple[str, bool], ...]
    L_methods: tuple[int, int] = (0, 0)
    L_R_methods: tuple[int, int] = (0, 0)
    L_sd: int | None = None
    fixed_morphisms: tuple[int, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return all(ok for _, ok in self.identities_checked)

    def failures(self) -> list[str]:
        return [name for name, ok in self.identities_checked if not ok]


def check_fixed_object_theorem(F: Functor, *, sd_homology: bool = True,
                               raise_on_violation: bool = True) -> LefschetzReport:
    """Evaluate every identity of the fixed-object theorem on one endofunctor.

    Checked: both Lefschetz numbers by two methods, ``L_R(F) = chi(R(C)^R(F))``,
    ``L(F) = chi(C^F)``, ``L(F) = L(sd F)``, ``L(sd F) = chi(sd(C)^sd(F))``,
    ``sd(C)^sd(F) = sd(C^F)`` elementwise, ``chi(sd(C^F)) = chi(C^F)``, the
    downward closure of fixed chains, and that a nonzero Lefschetz number
    comes with a fixed object.
    """
    if not F.is_endofunctor:
        raise NotEndofunctor("the fixed-object theorem concerns endofunctors")
    cat = F.source
    T = nerve(cat)
    L_pair = lefschetz_pair(F, T)
    RF = poset_reflection_map(F)
    L_R_pair = lefschetz_pair(RF)
    L, L_R = L_pair[0], L_R_pair[0]

    fixed = fixed_data(F)
    chi_fixed = euler_char(nerve(fixed.fixed_subcategory))

    R = RF.source
    fixed_R = [x for x in R.objects if RF.object_map[x] == x]
    rel = [(fixed_R.index(R.src[m]), fixed_R.index(R.tgt[m])) for m in R.morphisms
           if R.src[m] in fixed_R and R.tgt[m] in fixed_R]
    chi_fixed_R = euler_char(nerve(thin_category(len(fixed_R), rel)))

    sd = subdivision(cat)
    sd_map = subdivision_map(F, sd)
    L_sd = sd_lefschetz_number(F, sd, sd_map, homology=sd_homology)
    sd_fixed = {sd.elements[a] for a in range(len(sd)) if sd_map[a] == a}
    sub_nerve = nerve(fixed.fixed_subcategory)
    emb_o, emb_m = fixed.object_embedding, fixed.morphism_embedding
    sd_of_fixed = {Simplex(0, (emb_o[s.key[0]],)) if s.dim == 0
                   else Simplex(s.dim, tuple(emb_m[m] for m in s.key))
                   for s in sub_nerve.all_simplices()}
    chi_sd_fixed = euler_char(order_complex(subdivision(fixed.fixed_subcategory)))

    objects = tuple(x for x in cat.objects if F.object_map[x] == x)
    found = bool(objects)
    identities = (
        ("L(F): chain level = homology level", L_pair[0] == L_pair[1]),
        ("L_R(F): chain level = homology level", L_R_pair[0] == L_R_pair[1]),
        ("L_R(F) = chi(R(C)^R(F))", L_R == chi_fixed_R),
        ("L(F) = chi(C^F)", L == chi_fixed),
        ("L(F) = L(sd F)", L == L_sd),
        ("L(sd F) = chi(sd(C)^sd(F))", L_sd == poset_fixed_euler(sd, sd_map)),
        ("sd(C)^sd(F) = sd(C^F)", sd_fixed == sd_of_fixed),
        ("chi(sd(C^F)) = chi(C^F)", chi_sd_fixed == chi_fixed),
        ("fixed chains are closed under faces", fixed_downward_closed(sd, sd_map)),
        ("F and R(F) fix the same objects", tuple(fixed_R) == objects),
        ("L != 0 or L_R != 0 implies a fixed object", found or (L == 0 and L_R == 0)),
    )
    report = LefschetzReport(L, L_R, chi_fixed, chi_fixed_R, objects, F.strict, identities,
                             L_pair, L_R_pair, L_sd, tuple(sorted(fixed.fixed_morphisms)))
    if raise_on_violation and not report.holds:
        from .formats import serialize_instance
        raise TheoremViolated("fixed-object theorem check failed: "
                              + ", ".join(report.failures()), serialize_instance(F))
    return report
