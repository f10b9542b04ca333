"""Finite-dimensional Hopf algebras as structure-constant data.

A HopfData carries the full tuple (H, m, u, Delta, eps, S) over a FieldSpec:

  * mult[i][j]   -- sparse vector {index: coeff} with e_i * e_j expanded
  * unit         -- sparse vector for 1_H
  * comult[i]    -- sparse tensor {(j, k): coeff} with Delta(e_i)
  * counit[i]    -- FieldElement
  * antipode     -- dense d x d matrix; column j holds the coordinates of
                    S(e_j) (the column convention is used everywhere)

`validate` checks the seven axioms exhaustively on basis tuples; failures are
returned as data, never raised.  Sweedler power matrices are cached on the
instance, so computing a whole indicator sequence is linear in n_max.
"""

from __future__ import annotations

from .ffield import FieldSpec, FieldElement
from . import linalg
from .linalg import LinearSolveError


# -- sparse vector / tensor helpers (dict index -> FieldElement) ------------

def vaxpy(acc: dict, v: dict, c: FieldElement):
    """acc += c * v, in place, dropping zeros."""
    if not c.val:
        return acc
    for i, x in v.items():
        n = acc.get(i)
        n = c * x if n is None else n + c * x
        if n.val:
            acc[i] = n
        elif i in acc:
            del acc[i]
    return acc


def vec_equal(a: dict, b: dict) -> bool:
    return {i: x.val for i, x in a.items() if x.val} == \
           {i: x.val for i, x in b.items() if x.val}


class HopfData:
    """A Hopf algebra given by structure constants over a fixed field.

    Treated as immutable once built (builders fill `antipode` last); the only
    mutable state is the Sweedler-power cache, written monotonically.
    """

    def __init__(self, field: FieldSpec, dim: int, basis_labels,
                 mult, unit, comult, counit, antipode=None):
        self.field = field
        self.dim = dim
        self.basis_labels = list(basis_labels)
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.presentation = None  # set by catalog builders
        self._power_cols = {}     # n -> list of columns of P_n

    # -- products ------------------------------------------------------------

    def mult_basis(self, i: int, j: int) -> dict:
        return self.mult[i][j]

    def mult_vec(self, u: dict, v: dict) -> dict:
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                vaxpy(out, self.mult[i][j], a * b)
        return out

    def comult_vec(self, v: dict) -> dict:
        out = {}
        for i, a in v.items():
            vaxpy(out, self.comult[i], a)
        return out

    def counit_vec(self, v: dict) -> FieldElement:
        e = self.field.zero
        for i, a in v.items():
            e = e + a * self.counit[i]
        return e

    def tensor_mult(self, t1: dict, t2: dict) -> dict:
        """Product in H (x) H of two sparse tensors {(a, b): coeff}."""
        out = {}
        for (a1, b1), c1 in t1.items():
            for (a2, b2), c2 in t2.items():
                c = c1 * c2
                if not c.val:
                    continue
                for r1, m1 in self.mult[a1][a2].items():
                    cm = c * m1
                    if not cm.val:
                        continue
                    for r2, m2 in self.mult[b1][b2].items():
                        key = (r1, r2)
                        n = out.get(key)
                        n = cm * m2 if n is None else n + cm * m2
                        if n.val:
                            out[key] = n
                        elif key in out:
                            del out[key]
        return out

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        def coeffs(x):
            return x.coeffs

        mult = [[i, j, t, coeffs(c)]
                for i in range(self.dim) for j in range(self.dim)
                for t, c in sorted(self.mult[i][j].items())]
        comult = [[i, j, k, coeffs(c)]
                  for i in range(self.dim)
                  for (j, k), c in sorted(self.comult[i].items())]
        d = {
            "field": self.field.to_dict(),
            "dim": self.dim,
            "basis_labels": self.basis_labels,
            "mult": mult,
            "comult": comult,
            "unit": [coeffs(self.unit.get(i, self.field.zero))
                     for i in range(self.dim)],
            "counit": [coeffs(c) for c in self.counit],
            "antipode": [[coeffs(x) for x in row] for row in self.antipode],
        }
        if self.presentation is not None:
            d["presentation"] = self.presentation.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "HopfData":
        from .ffield import make_field
        fd = d["field"]
        F = make_field(fd["p"], fd["k"])
        if list(F.modulus) != list(fd["modulus"]):
            F = FieldSpec(fd["p"], fd["k"], fd["modulus"])
        dim = d["dim"]
        el = F.from_coeffs
        mult = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, t, c in d["mult"]:
            mult[i][j][t] = el(c)
        comult = [{} for _ in range(dim)]
        for i, j, k, c in d["comult"]:
            comult[i][(j, k)] = el(c)
        unit = {i: el(c) for i, c in enumerate(d["unit"]) if any(c)}
        counit = [el(c) for c in d["counit"]]
        antipode = [[el(c) for c in row] for row in d["antipode"]]
        return cls(F, dim, d["basis_labels"], mult, unit, comult, counit,
                   antipode)


# ---------------------------------------------------------------------------
# axiom validation
# ---------------------------------------------------------------------------

def validate(H: HopfData):
    """Check the seven Hopf axioms exhaustively on basis tuples.

    Returns a list of failure descriptions (empty iff H is a Hopf algebra).
    """
    F, d = H.field, H.dim
    failures = []

    def basis(i):
        return {i: F.one}

    # 1) associativity on all basis triples
    for i in range(d):
        for j in range(d):
            vij = H.mult[i][j]
            for k in range(d):
                left = {}
                for l, c in vij.items():
                    vaxpy(left, H.mult[l][k], c)
                right = {}
                for l, c in H.mult[j][k].items():
                    vaxpy(right, H.mult[i][l], c)
                if not vec_equal(left, right):
                    failures.append(f"associativity at (i,j,k)=({i},{j},{k})")
    # 2) unitality
    for i in range(d):
        if not vec_equal(H.mult_vec(H.unit, basis(i)), basis(i)):
            failures.append(f"unitality (left) at i={i}")
        if not vec_equal(H.mult_vec(basis(i), H.unit), basis(i)):
            failures.append(f"unitality (right) at i={i}")
    # 3) coassociativity
    for i in range(d):
        left, right = {}, {}
        for (j, k), c in H.comult[i].items():
            for (a, b), cc in H.comult[j].items():
                key = (a, b, k)
                left[key] = left.get(key, F.zero) + c * cc
            for (a, b), cc in H.comult[k].items():
                key = (j, a, b)
                right[key] = right.get(key, F.zero) + c * cc
        if not vec_equal(left, right):
            failures.append(f"coassociativity at i={i}")
    # 4) counitality
    for i in range(d):
        lv, rv = {}, {}
        for (j, k), c in H.comult[i].items():
            vaxpy(lv, basis(k), c * H.counit[j])
            vaxpy(rv, basis(j), c * H.counit[k])
        if not (vec_equal(lv, basis(i)) and vec_equal(rv, basis(i))):
            failures.append(f"counitality at i={i}")
    # 5) Delta is an algebra map
    if not vec_equal(H.comult_vec(H.unit),
                     {(a, b): ca * cb for a, ca in H.unit.items()
                      for b, cb in H.unit.items()}):
        failures.append("bialgebra: Delta(1) != 1 (x) 1")
    for i in range(d):
        di = H.comult[i]
        for j in range(d):
            prod = H.tensor_mult(di, H.comult[j])
            direct = {}
            for t, c in H.mult[i][j].items():
                for key, cc in H.comult[t].items():
                    n = direct.get(key, F.zero) + c * cc
                    if n.val:
                        direct[key] = n
                    elif key in direct:
                        del direct[key]
            if not vec_equal(prod, direct):
                failures.append(f"bialgebra: Delta not multiplicative at (i,j)=({i},{j})")
    # 6) eps is an algebra map
    if H.counit_vec(H.unit) != F.one:
        failures.append("bialgebra: eps(1) != 1")
    for i in range(d):
        for j in range(d):
            if H.counit_vec(H.mult[i][j]) != H.counit[i] * H.counit[j]:
                failures.append(f"bialgebra: eps not multiplicative at (i,j)=({i},{j})")
    # 7) antipode axiom, both sides
    if H.antipode is None:
        failures.append("antipode: missing")
    else:
        S = H.antipode
        for i in range(d):
            lv, rv = {}, {}
            for (j, k), c in H.comult[i].items():
                sj = {a: S[a][j] for a in range(d) if S[a][j].val}
                sk = {a: S[a][k] for a in range(d) if S[a][k].val}
                vaxpy(lv, H.mult_vec(sj, {k: F.one}), c)
                vaxpy(rv, H.mult_vec({j: F.one}, sk), c)
            target = {a: H.counit[i] * c for a, c in H.unit.items()}
            target = {a: c for a, c in target.items() if c.val}
            if not vec_equal(lv, target):
                failures.append(f"antipode (left) at i={i}")
            if not vec_equal(rv, target):
                failures.append(f"antipode (right) at i={i}")
    return failures


# ---------------------------------------------------------------------------
# dual and tensor constructions
# ---------------------------------------------------------------------------

def dual(H: HopfData) -> HopfData:
    """The dual Hopf algebra on the dual basis (transposed structure)."""
    F, d = H.field, H.dim
    mult = [[{} for _ in range(d)] for _ in range(d)]
    for i in range(d):
        for (j, k), c in H.comult[i].items():
            mult[j][k][i] = c
    comult = [{} for _ in range(d)]
    for j in range(d):
        for k in range(d):
            for i, c in H.mult[j][k].items():
                comult[i][(j, k)] = c
    unit = {i: c for i, c in enumerate(H.counit) if c.val}
    counit = [H.unit.get(i, F.zero) for i in range(d)]
    antipode = linalg.transpose(H.antipode)
    labels = [f"{l}*" for l in H.basis_labels]
    return HopfData(F, d, labels, mult, unit, comult, counit, antipode)


def tensor(H1: HopfData, H2: HopfData) -> HopfData:
    """Componentwise tensor product, paired-basis ordering (a, b) -> a*d2 + b."""
    if H1.field != H2.field:
        raise ValueError("field mismatch")
    F = H1.field
    d1, d2 = H1.dim, H2.dim
    d = d1 * d2

    def idx(a, b):
        return a * d2 + b

    mult = [[{} for _ in range(d)] for _ in range(d)]
    for a1 in range(d1):
        for b1 in range(d2):
            for a2 in range(d1):
                for b2 in range(d2):
                    out = mult[idx(a1, b1)][idx(a2, b2)]
                    for r1, c1 in H1.mult[a1][a2].items():
                        for r2, c2 in H2.mult[b1][b2].items():
                            c = c1 * c2
                            if c.val:
                                out[idx(r1, r2)] = c
    comult = [{} for _ in range(d)]
    for a in range(d1):
        for b in range(d2):
            out = comult[idx(a, b)]
            for (j1, k1), c1 in H1.comult[a].items():
                for (j2, k2), c2 in H2.comult[b].items():
                    c = c1 * c2
                    if c.val:
                        out[(idx(j1, j2), idx(k1, k2))] = c
    unit = {}
    for a, c1 in H1.unit.items():
        for b, c2 in H2.unit.items():
            c = c1 * c2
            if c.val:
                unit[idx(a, b)] = c
    counit = [H1.counit[a] * H2.counit[b]
              for a in range(d1) for b in range(d2)]
    antipode = [[F.zero] * d for _ in range(d)]
    for a1 in range(d1):
        for a2 in range(d1):
            s1 = H1.antipode[a1][a2]
            if not s1.val:
                continue
            for b1 in range(d2):
                for b2 in range(d2):
                    s2 = H2.antipode[b1][b2]
                    if s2.val:
                        antipode[idx(a1, b1)][idx(a2, b2)] = s1 * s2
    labels = [f"{l1}(x){l2}" for l1 in H1.basis_labels
              for l2 in H2.basis_labels]
    return HopfData(F, d, labels, mult, unit, comult, counit, antipode)


# ---------------------------------------------------------------------------
# Sweedler powers and indicators
# ---------------------------------------------------------------------------

def _power_columns(H: HopfData, n: int):
    """Columns of the n-th Sweedler power matrix P_n, cached on H."""
    F, d = H.field, H.dim
    cached = H._power_cols.get(n)
    if cached is not None:
        return cached
    if 0 not in H._power_cols:
        unit_col = [H.unit.get(r, F.zero) for r in range(d)]
        H._power_cols[0] = [
            [H.counit[i] * x for x in unit_col] for i in range(d)]
    m = max(k for k in H._power_cols if k <= n)
    cols = H._power_cols[m]
    for step in range(m + 1, n + 1):
        new = []
        for b in range(d):
            acc = {}
            for (j, k), c in H.comult[b].items():
                colj = cols[j]
                for a in range(d):
                    ca = colj[a]
                    if ca.val:
                        vaxpy(acc, H.mult[a][k], c * ca)
            new.append([acc.get(r, F.zero) for r in range(d)])
        cols = new
        H._power_cols[step] = cols
    return H._power_cols[n]


def sweedler_power_map(H: HopfData, n: int):
    """Matrix of P_n (rows), computed by P_0 = u o eps,
    P_n = m o (P_{n-1} (x) id) o Delta."""
    return linalg.transpose(_power_columns(H, n))


def sweedler_power_element(H: HopfData, h, n: int) -> dict:
    """h^{[n]} as a sparse vector; h may be a sparse dict or dense list."""
    if not isinstance(h, dict):
        h = {i: c for i, c in enumerate(h) if c.val}
    cols = _power_columns(H, n)
    out = {}
    for b, c in h.items():
        col = cols[b]
        vaxpy(out, {r: col[r] for r in range(H.dim) if col[r].val}, c)
    return out


def indicator_trace(H: HopfData, n: int) -> FieldElement:
    """The n-th indicator Tr(S o P_{n-1})."""
    if n < 1:
        raise ValueError("indicator index must be >= 1")
    cols = _power_columns(H, n - 1)
    S = H.antipode
    t = H.field.zero
    for i in range(H.dim):
        col = cols[i]
        Si = S[i]
        for a in range(H.dim):
            if col[a].val and Si[a].val:
                t = t + Si[a] * col[a]
    return t


# ---------------------------------------------------------------------------
# antipode solver
# ---------------------------------------------------------------------------

def solve_antipode(H: HopfData):
    """The unique matrix S with m o (S (x) id) o Delta = u o eps.

    Set up as a sparse linear system in the d^2 entries of S; the right-sided
    axiom is then checked, not imposed.  Raises ValueError("no antipode") or
    ValueError("not unique") when the input is not a Hopf algebra.
    """
    F, d = H.field, H.dim
    # unknown u = j*d + a  <=>  S[a][j]  (column j, coordinate a)
    eqs = []
    for b in range(d):
        rowdicts = [dict() for _ in range(d)]
        for (j, k), c in H.comult[b].items():
            for a in range(d):
                for t, mcoef in H.mult[a][k].items():
                    coef = c * mcoef
                    if not coef.val:
                        continue
                    rd = rowdicts[t]
                    u = j * d + a
                    n = rd.get(u, F.zero) + coef
                    if n.val:
                        rd[u] = n
                    elif u in rd:
                        del rd[u]
        for t in range(d):
            rhs = H.counit[b] * H.unit.get(t, F.zero)
            eqs.append((rowdicts[t], rhs))
    try:
        sol = linalg.solve_sparse_unique(eqs, d * d, F)
    except LinearSolveError as e:
        if "inconsistent" in str(e):
            raise ValueError("no antipode") from e
        raise ValueError("not unique") from e
    S = [[sol[j * d + a] for j in range(d)] for a in range(d)]
    # right-sided axiom is a theorem for Hopf algebras; verify it here
    for i in range(d):
        rv = {}
        for (j, k), c in H.comult[i].items():
            sk = {a: S[a][k] for a in range(d) if S[a][k].val}
            vaxpy(rv, H.mult_vec({j: F.one}, sk), c)
        target = {a: H.counit[i] * c for a, c in H.unit.items()}
        target = {a: c for a, c in target.items() if c.val}
        if not vec_equal(rv, target):
            raise ValueError("no antipode")
    return S


# ---------------------------------------------------------------------------
# symmetry predicates
# ---------------------------------------------------------------------------

def is_commutative(H: HopfData) -> bool:
    return all(vec_equal(H.mult[i][j], H.mult[j][i])
               for i in range(H.dim) for j in range(i + 1, H.dim))


def is_cocommutative(H: HopfData) -> bool:
    for i in range(H.dim):
        flipped = {(k, j): c for (j, k), c in H.comult[i].items()}
        if not vec_equal(flipped, H.comult[i]):
            return False
    return True
