"""Independent reference computations used by the tests."""

import itertools
from fractions import Fraction

from lefcat.linalg import Matrix, kernel_basis, rank, solve


def brute_chains(cat, k):
    """Composable k-chains by enumerating all k-tuples of morphisms."""
    if k == 0:
        return [(x,) for x in cat.objects]
    return sorted(c for c in itertools.product(cat.morphisms, repeat=k)
                  if all(cat.tgt[c[i]] == cat.src[c[i + 1]] for i in range(k - 1)))


def dense_betti(cc):
    ranks = [rank(cc.boundary_matrix(k)) for k in range(cc.top + 2)]
    return [cc.sizes[k] - ranks[k] - ranks[k + 1] for k in range(cc.top + 1)]


def dense_homology_traces(f):
    """Trace of H_k(f) via a dense basis: boundaries first, then completing cycles."""
    cc = f.complex
    traces = []
    for k in range(cc.top + 1):
        n = cc.sizes[k]
        Z = kernel_basis(cc.boundary_matrix(k)) if k > 0 else \
            [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
        nxt = cc.boundary_matrix(k + 1)
        B = [list(col) for col in zip(*nxt.data)] if nxt.cols and nxt.rows else []
        basis = []
        for v in B:
            if rank(Matrix.from_rows(basis + [v], n)) > len(basis):
                basis.append(v)
        n_b = len(basis)
        for z in Z:
            if rank(Matrix.from_rows(basis + [z], n)) > len(basis):
                basis.append(z)
        F = f.matrix(k)
        M = Matrix.from_rows(basis, n).transpose() if basis else None
        total = Fraction(0)
        for i in range(n_b, len(basis)):
            image = F.apply(basis[i])
            total += solve(M, image)[i]
        traces.append(total)
    return traces
