"""Run every checked identity over a corpus of seeded random instances."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .category import Functor
from .formats import instance_digest, parse_instance, serialize_instance
from .generate import generate_random
from .homology import betti, chain_complex, chain_map, euler_char, euler_from_homology
from .layers import check_fixed_morphism_theorem
from .lefschetz import MethodMismatch, TheoremViolated, check_fixed_object_theorem
from .nerve import (check_simplicial_identities, induced_trisp_map, nerve, order_complex,
                    subdivision)

COLLAPSE_LEVELS = (0.0, 0.2)


def instance_seed(seed: int, i: int) -> int:
    return seed * 1_000_003 + i


@dataclass
class InstanceResult:
    seed: int
    collapse: float
    digest: str
    n_objects: int
    n_morphisms: int
    strict: bool
    L: int | None = None
    L_R: int | None = None
    layered: dict[int, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"seed": self.seed, "collapse": self.collapse, "digest": self.digest,
                "objects": self.n_objects, "morphisms": self.n_morphisms,
                "strict": self.strict, "L": self.L, "L_R": self.L_R,
                "layered_L": {str(k): v for k, v in sorted(self.layered.items())},
                "violations": self.violations}


def check_instance(F: Functor, seed: int = 0, collapse: float = 0.0,
                   cutoffs=(0, 1), betti_max_objects: int = 5) -> InstanceResult:
    cat = F.source
    res = InstanceResult(seed, collapse, instance_digest(F), cat.n_objects, cat.n_morphisms,
                         F.strict)
    bad = res.violations
    try:
        report = check_fixed_object_theorem(F, raise_on_violation=False)
        res.L, res.L_R = report.L, report.L_R
        bad.extend(report.failures())
        for i in cutoffs:
            fm = check_fixed_morphism_theorem(F, i, raise_on_violation=False)
            res.layered[i] = fm.layered_L
            if not fm.theorem_holds:
                bad.append(f"fixed chains missing at cutoff {i}")
    except (MethodMismatch, TheoremViolated) as exc:
        bad.append(f"{type(exc).__name__}: {exc}")

    T = nerve(cat)
    cc = chain_complex(T)
    if not check_simplicial_identities(T):
        bad.append("simplicial identities")
    if euler_char(T) != euler_from_homology(cc):
        bad.append("chi: simplex count != homology")
    if not chain_map(induced_trisp_map(F, T, T), cc).commutes():
        bad.append("chain map does not commute")
    if cat.n_objects <= betti_max_objects:
        if betti(order_complex(subdivision(cat))) != betti(cc):
            bad.append("subdivision changes Betti numbers")
    if parse_instance(serialize_instance(F)) != F:
        bad.append("serialization round trip")
    return res


@dataclass
class SelfcheckResult:
    seed: int
    results: list[InstanceResult]

    @property
    def violations(self) -> list[InstanceResult]:
        return [r for r in self.results if r.violations]

    def to_dict(self) -> dict:
        return {"seed": self.seed, "count": len(self.results),
                "violating_seeds": [r.seed for r in self.violations],
                "instances": [r.to_dict() for r in self.results]}

    @property
    def digest(self) -> str:
        text = json.dumps(self.to_dict(), sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()


def run_selfcheck(count: int, seed: int, max_objects: int = 6, max_morphisms: int = 14,
                  collapse_levels=COLLAPSE_LEVELS, cutoffs=(0, 1),
                  betti_max_objects: int = 5) -> SelfcheckResult:
    results = []
    for i in range(count):
        s = instance_seed(seed, i)
        p = collapse_levels[i % len(collapse_levels)]
        F = generate_random(s, max_objects, max_morphisms, p)
        results.append(check_instance(F, s, p, cutoffs, betti_max_objects))
    return SelfcheckResult(seed, results)
