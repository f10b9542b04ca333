"""Dense and sparse exact linear algebra over a FieldSpec.

Matrices are lists of rows of FieldElement.  Everything here is deterministic:
Gaussian elimination always pivots on the first nonzero column, so nullspace
vectors and solutions are reproducible across runs.
"""

from __future__ import annotations

from .ffield import FieldSpec


class LinearSolveError(ValueError):
    """Inconsistent or underdetermined linear system."""


def identity(F: FieldSpec, d: int):
    return [[F.one if i == j else F.zero for j in range(d)] for i in range(d)]


def mat_mul(A, B, F: FieldSpec):
    n, m, r = len(A), len(B), len(B[0])
    out = [[F.zero] * r for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for k in range(m):
            a = Ai[k]
            if a.val:
                Bk = B[k]
                row = out[i]
                for j in range(r):
                    b = Bk[j]
                    if b.val:
                        row[j] = row[j] + a * b
    return out


def mat_vec(A, v, F: FieldSpec):
    return [sum((a * x for a, x in zip(row, v) if a.val and x.val),
                start=F.zero) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def trace(A, F: FieldSpec):
    t = F.zero
    for i, row in enumerate(A):
        t = t + row[i]
    return t


def nullspace(rows, ncols: int, F: FieldSpec):
    """Basis of the right nullspace of the given (dense) row list.

    Each basis vector is scaled so its first nonzero coordinate is 1.
    """
    # row echelon form
    ech = []
    pivots = []  # pivot column per echelon row
    for row in rows:
        row = list(row)
        for prow, pcol in zip(ech, pivots):
            c = row[pcol]
            if c.val:
                for j in range(pcol, ncols):
                    if prow[j].val:
                        row[j] = row[j] - c * prow[j]
        pcol = next((j for j in range(ncols) if row[j].val), None)
        if pcol is None:
            continue
        inv = row[pcol].inverse()
        row = [x * inv for x in row]
        ech.append(row)
        pivots.append(pcol)
    # back substitution to reduced echelon form
    for i in range(len(ech) - 1, -1, -1):
        for ii in range(i):
            c = ech[ii][pivots[i]]
            if c.val:
                ech[ii] = [a - c * b for a, b in zip(ech[ii], ech[i])]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for prow, pcol in zip(ech, pivots):
            v[pcol] = -prow[f]
        lead = next(x for x in v if x.val)
        inv = lead.inverse()
        basis.append([x * inv for x in v])
    return basis


def solve_sparse_unique(eqs, ncols: int, F: FieldSpec):
    """Solve a sparse linear system with a unique solution.

    `eqs` is a list of (row, rhs) where row maps column index -> coefficient.
    Raises LinearSolveError("inconsistent") or ("underdetermined").
    """
    pivots = {}  # col -> (row dict normalized with pivot coeff 1, rhs)

    for row, rhs in eqs:
        row = {c: v for c, v in row.items() if v.val}
        # reduce against the (mutually reduced) pivot rows
        while True:
            hit = [c for c in row if c in pivots]
            if not hit:
                break
            c = min(hit)
            prow, prhs = pivots[c]
            f = row[c]
            for pc, pv in prow.items():
                nv = row.get(pc, F.zero) - f * pv
                if nv.val:
                    row[pc] = nv
                elif pc in row:
                    del row[pc]
            rhs = rhs - f * prhs
        if not row:
            if rhs.val:
                raise LinearSolveError("inconsistent")
            continue
        pcol = min(row)
        inv = row[pcol].inverse()
        row = {c: v * inv for c, v in row.items()}
        rhs = rhs * inv
        # keep the pivot set fully reduced
        for oc, (orow, orhs) in list(pivots.items()):
            f = orow.get(pcol)
            if f is not None and f.val:
                for pc, pv in row.items():
                    nv = orow.get(pc, F.zero) - f * pv
                    if nv.val:
                        orow[pc] = nv
                    elif pc in orow:
                        del orow[pc]
                pivots[oc] = (orow, orhs - f * rhs)
        pivots[pcol] = (row, rhs)

    if len(pivots) < ncols:
        raise LinearSolveError("underdetermined")
    sol = [F.zero] * ncols
    for c, (row, rhs) in pivots.items():
        # fully reduced + full rank: each pivot row is {c: 1}
        sol[c] = rhs
    return sol
