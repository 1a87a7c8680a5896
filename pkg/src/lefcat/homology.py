"""Rational homology of trisps, chain maps and Lefschetz traces.

Boundary matrices are kept as sparse integer columns. Ranks, cycles and
boundaries come from a column reduction (the one used for persistent
homology) done with fraction-free integer steps; traces on homology are
extracted with exact :class:`~fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .linalg import Matrix
from .nerve import Trisp, TrispMap


class NonCommuting(RuntimeError):
    """A chain map failed to commute with the boundary (internal error)."""


@dataclass(frozen=True, eq=False)
class ChainComplex:
    sizes: tuple[int, ...]
    # boundaries[k][i]: {row index in dim k-1: coefficient}; boundaries[0] is all empty
    boundaries: tuple[tuple[dict[int, int], ...], ...]

    @property
    def top(self) -> int:
        return len(self.sizes) - 1

    def boundary_matrix(self, k: int) -> Matrix:
        """``d_k`` as an ``n_{k-1} x n_k`` matrix (empty shapes outside the range)."""
        rows = self.sizes[k - 1] if 1 <= k <= self.top + 1 else 0
        cols = self.sizes[k] if 0 <= k <= self.top else 0
        m = Matrix(rows, cols)
        if k >= 1 and k <= self.top:
            for j, column in enumerate(self.boundaries[k]):
                for i, c in column.items():
                    m[i, j] = c
        return m

    @cached_property
    def reduction(self) -> _Reduction:
        return _Reduction(self)

    def ranks(self) -> list[int]:
        """``rank d_k`` for ``k = 0 .. top`` (``d_0 = 0``)."""
        return [self.reduction.rank(k) for k in range(self.top + 1)]

    def is_complex(self) -> bool:
        for k in range(2, self.top + 1):
            for column in self.boundaries[k]:
                total: dict[int, int] = {}
                for i, c in column.items():
                    for r, d in self.boundaries[k - 1][i].items():
                        total[r] = total.get(r, 0) + c * d
                if any(total.values()):
                    return False
        return True


def chain_complex(T: Trisp) -> ChainComplex:
    """Simplicial chains with ``d(s) = sum_j (-1)^j d_j(s)``."""
    boundaries = [tuple({} for _ in T.simplices[0])] if T.simplices else []
    for k in range(1, len(T.simplices)):
        level = []
        for faces in T.faces[k]:
            column: dict[int, int] = {}
            for j, face in enumerate(faces):
                column[face] = column.get(face, 0) + (-1) ** j
            level.append({i: c for i, c in column.items() if c})
        boundaries.append(tuple(level))
    cc = ChainComplex(tuple(T.counts()), tuple(boundaries))
    if not cc.is_complex():
        raise NonCommuting("boundary of a boundary is not zero")
    return cc


def _normalize(*vectors):
    g = 0
    for v in vectors:
        for c in v.values():
            g = gcd(g, c)
            if g == 1:
                return
    if g > 1:
        for v in vectors:
            for i in v:
                v[i] //= g


def _combine(a, x, b, y):
    """``a*x - b*y`` for sparse integer vectors, dropping zeros."""
    out = {i: a * c for i, c in x.items()}
    for i, c in y.items():
        value = out.get(i, 0) - b * c
        if value:
            out[i] = value
        else:
            out.pop(i, None)
    return out


class _Reduction:
    """Column reduction of every boundary matrix.

    For each degree ``k`` this records the reduced non-zero columns of
    ``d_k`` keyed by their lowest (largest-index) row, and a basis of the
    cycles ``Z_k`` whose vectors have pairwise distinct largest indices.
    """

    def __init__(self, cc: ChainComplex):
        self.cc = cc
        top = cc.top
        # by_low[k]: {row index in dim k-1: reduced boundary column of d_k}
        self.by_low: list[dict[int, dict[int, int]]] = [{} for _ in range(top + 2)]
        self.cycles: list[list[dict[int, int]]] = [[] for _ in range(top + 1)]
        if top >= 0:
            self.cycles[0] = [{i: 1} for i in range(cc.sizes[0])]
        for k in range(1, top + 1):
            by_low = self.by_low[k]
            for j, column in enumerate(cc.boundaries[k]):
                r = dict(column)
                v = {j: 1}
                while r:
                    low = max(r)
                    pivot = by_low.get(low)
                    if pivot is None:
                        break
                    pr, pv = pivot
                    a, b = pr[low], r[low]
                    r = _combine(a, r, b, pr)
                    v = _combine(a, v, b, pv)
                    _normalize(r, v)
                if r:
                    by_low[max(r)] = (r, v)
                else:
                    self.cycles[k].append(v)

    def rank(self, k: int) -> int:
        return len(self.by_low[k]) if 0 <= k < len(self.by_low) else 0

    def betti(self) -> list[int]:
        sizes = self.cc.sizes
        return [sizes[k] - self.rank(k) - self.rank(k + 1) for k in range(len(sizes))]

    @cached_property
    def homology_basis(self) -> list[list[dict[int, int]]]:
        """Cycles whose classes form a basis of ``H_k``.

        A cycle is kept when its largest index is not the low of any reduced
        column of ``d_{k+1}``; together with those columns the kept cycles
        form an echelon basis of ``Z_k``.
        """
        basis = []
        for k, cycles in enumerate(self.cycles):
            lows = self.by_low[k + 1]
            kept = [z for z in cycles if max(z) not in lows]
            if len(kept) != self.betti()[k]:
                raise ArithmeticError("cycle basis does not match the homology rank")
            basis.append(kept)
        return basis

    def coordinates(self, k: int, vector: dict[int, Fraction]) -> list[Fraction]:
        """Coordinates of a ``k``-cycle in the homology basis of degree ``k``."""
        reps = self.homology_basis[k]
        tops = {max(z): i for i, z in enumerate(reps)}
        lows = self.by_low[k + 1]
        coords = [Fraction(0)] * len(reps)
        v = {i: Fraction(c) for i, c in vector.items() if c}
        while v:
            t = max(v)
            if t in tops:
                i = tops[t]
                w = reps[i]
                lam = v[t] / w[t]
                coords[i] += lam
            elif t in lows:
                w = lows[t][0]
                lam = v[t] / w[t]
            else:
                raise NonCommuting(f"vector is not a cycle in degree {k}")
            for idx, c in w.items():
                value = v.get(idx, 0) - lam * c
                if value:
                    v[idx] = value
                else:
                    v.pop(idx, None)
        return coords


def betti(T: Trisp | ChainComplex) -> list[int]:
    """Rational Betti numbers (unreduced) by degree."""
    cc = T if isinstance(T, ChainComplex) else chain_complex(T)
    return cc.reduction.betti()


def euler_char(T: Trisp) -> int:
    return sum((-1) ** k * n for k, n in enumerate(T.counts()))


def euler_from_homology(T: Trisp | ChainComplex) -> int:
    return sum((-1) ** k * b for k, b in enumerate(betti(T)))


@dataclass(frozen=True, eq=False)
class ChainMap:
    """A self-map of a chain complex sending basis chains to basis chains or to zero.

    ``images[k][i]`` is the index of the image of simplex ``i`` in degree
    ``k``, or ``None`` when the image is degenerate.
    """

    complex: ChainComplex
    images: tuple[tuple[int | None, ...], ...]

    def matrix(self, k: int) -> Matrix:
        n = self.complex.sizes[k]
        m = Matrix(n, n)
        for i, j in enumerate(self.images[k]):
            if j is not None:
                m[j, i] = 1
        return m

    def apply(self, k: int, vector: dict) -> dict:
        out: dict = {}
        for i, c in vector.items():
            j = self.images[k][i]
            if j is not None:
                value = out.get(j, 0) + c
                if value:
                    out[j] = value
                else:
                    out.pop(j)
        return out

    def traces(self) -> list[int]:
        return [sum(1 for i, j in enumerate(level) if i == j) for level in self.images]

    def commutes(self) -> bool:
        boundaries = self.complex.boundaries
        for k in range(1, self.complex.top + 1):
            for i, column in enumerate(boundaries[k]):
                left = self.apply(k - 1, column)
                j = self.images[k][i]
                right = dict(boundaries[k][j]) if j is not None else {}
                if left != right:
                    return False
        return True


def chain_map(tmap: TrispMap, cc: ChainComplex | None = None) -> ChainMap:
    """Chain-level map of a trisp self-map; degenerate images go to zero."""
    if tmap.source is not tmap.target and tmap.source != tmap.target:
        raise ValueError("chain maps are only built for self-maps")
    T = tmap.source
    cc = cc if cc is not None else chain_complex(T)
    images = tuple(tuple(None if im.degenerate else T.index(im.simplex) for im in level)
                   for level in tmap.images)
    f = ChainMap(cc, images)
    if not f.commutes():
        raise NonCommuting("induced chain map does not commute with the boundary")
    return f


def hopf_lefschetz(f: ChainMap) -> int:
    """Alternating sum of chain-level traces."""
    return sum((-1) ** k * t for k, t in enumerate(f.traces()))


def homology_traces(f: ChainMap) -> list[Fraction]:
    red = f.complex.reduction
    out = []
    for k, reps in enumerate(red.homology_basis):
        total = Fraction(0)
        for i, z in enumerate(reps):
            total += red.coordinates(k, f.apply(k, z))[i]
        out.append(total)
    return out


def homology_lefschetz(f: ChainMap) -> int:
    """``sum_k (-1)^k trace(H_k(f))`` over the rationals."""
    total = sum((-1) ** k * t for k, t in enumerate(homology_traces(f)))
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Lefschetz number {total}")
    return int(total)
