"""Construction of the pq-dimensional pointed Hopf algebras from presentations.

Every algebra here is generated by a grouplike g (order q) and a skew-primitive
x (x^p reduced by a family-specific rule), with basis {g^i x^j : 0 <= i < q,
0 <= j < p} ordered lexicographically by (i, j).  Note the relations force
i < q and j < p; some printed sources swap the two ranges.

Families (delta in {0, 1}, branch selected by whether q | p-1):

  f1   k[g,x]/(g^q-1, x^p-delta*x),            x primitive
  f2   q∤p-1: k<g,x>/(g^q-1, x^p, xg-xi*gx),   x primitive, delta = 0 forced
       q|p-1: k<g,x>/(g^q-1, x^p-delta*x, gx-xi*xg)
  f3   k[g,x]/(g^q-1, x^p-delta*(1-g^p)),      Delta(x) = x(x)1 + g(x)x
  f4   q∤p-1: k<g,x>/(g^q-1, x^p-x, gx-xg-g+g^2),  Delta(x) = x(x)1 + g(x)x
       q|p-1: k[g,x]/(g^q-1, x^p-x),               Delta(x) = x(x)1 + g(x)x

plus the graded algebras grA, grB, grC and the two building blocks
(group algebra of Z/q, primitive block k[x]/(x^p - delta*x)).

Multiplication tables are produced by normal-form rewriting of words in
{g, x}; comultiplication and counit are specified on generators only and
extended multiplicatively; the antipode is always obtained from the axiom
solver, then the whole structure is re-validated.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Optional

from .ffield import (FieldSpec, FieldElement, is_prime, make_field,
                     required_degree, primitive_qth_root)
from .hopf_core import HopfData, solve_antipode, validate, vaxpy

FAMILIES = ("f1", "f2", "f3", "f4")
GRADED = ("grA", "grB", "grC")

_PARTNER = {"f1": "grA", "f2": "grC", "f3": "grB", "f4": "grB"}


@dataclass(frozen=True)
class Presentation:
    """Metadata of a constructed algebra, embedded in serialized output."""
    family: str
    p: int
    q: int
    delta: int
    q_divides_pm1: bool
    field: FieldSpec
    xi: Optional[FieldElement]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "q": self.q,
            "delta": self.delta,
            "q_divides_pm1": self.q_divides_pm1,
            "field": self.field.to_dict(),
            "xi": None if self.xi is None else self.xi.coeffs,
        }


@dataclass(frozen=True)
class RewriteRules:
    """Rewrite system of one presentation.

    swap: replacements for the substring "xg" as (coefficient, word) pairs.
    xp:   normal-form expansion of x^p as {(i, j): coefficient}.
    g^q -> 1 is implicit.
    """
    field: FieldSpec
    p: int
    q: int
    swap: tuple
    xp: tuple  # of ((i, j), coeff)


def graded_partner(family: str) -> str:
    """The associated graded algebra tag of a family."""
    if family not in _PARTNER:
        raise ValueError(f"unknown family {family!r}")
    return _PARTNER[family]


# ---------------------------------------------------------------------------
# normal-form rewriting
# ---------------------------------------------------------------------------

def _as_word(word) -> str:
    if isinstance(word, str):
        if set(word) - {"g", "x"}:
            raise ValueError("word may only contain generators 'g' and 'x'")
        return word
    out = []
    for gen, mult in word:
        if gen not in ("g", "x") or mult < 0:
            raise ValueError("bad word entry")
        out.append(gen * mult)
    return "".join(out)


def normal_form(word, rules: RewriteRules) -> dict:
    """Reduce a word over {g, x} to a linear combination of basis monomials.

    Returns {(i, j): coeff} with 0 <= i < q and 0 <= j < p.  Each commutation
    step either removes an (x, g) inversion or lowers the x-degree, and the
    exponent reductions lower degree, so the worklist terminates.
    """
    F, p, q = rules.field, rules.p, rules.q
    out = {}
    stack = [(F.one, _as_word(word))]
    while stack:
        c, w = stack.pop()
        pos = w.find("xg")
        if pos >= 0:
            pre, suf = w[:pos], w[pos + 2:]
            for rc, repl in rules.swap:
                stack.append((c * rc, pre + repl + suf))
            continue
        cut = w.find("x")
        if cut < 0:
            a, b = len(w), 0
        else:
            a, b = cut, len(w) - cut
        a %= q
        if b >= p:
            base = "g" * a + "x" * (b - p)
            for (i, j), rc in rules.xp:
                stack.append((c * rc, base + "g" * i + "x" * j))
            continue
        key = (a, b)
        n = out.get(key, F.zero) + c
        if n.val:
            out[key] = n
        elif key in out:
            del out[key]
    return out


# ---------------------------------------------------------------------------
# presentation setup
# ---------------------------------------------------------------------------

def _check_pq(p: int, q: int):
    if not (is_prime(p) and is_prime(q)):
        raise ValueError("p and q must be prime")
    if p == q:
        raise ValueError("p = q not allowed")


def _field_with_root(p: int, q: int, xi: Optional[FieldElement]):
    """The smallest GF(p^k) containing a primitive q-th root of unity."""
    if xi is not None:
        return xi.spec, xi
    F = make_field(p, required_degree(p, q))
    return F, primitive_qth_root(F, q)


def _rules(family, p, q, delta, F, xi) -> tuple:
    """(rules, x_is_skew) for one family/branch; delta admissibility checked."""
    one = F.one
    q_div = (p - 1) % q == 0
    swap_comm = ((one, "gx"),)
    if family == "f1":
        return RewriteRules(F, p, q, swap_comm,
                            (((0, 1), F.embed(delta)),) if delta else ()), False
    if family == "f2":
        if q_div:
            # relation gx = xi*xg, i.e. xg -> xi^{-1} gx
            swap = ((xi.inverse(), "gx"),)
            xp = (((0, 1), F.embed(delta)),) if delta else ()
        else:
            if delta:
                raise ValueError("inadmissible delta: family 2 with q not "
                                 "dividing p-1 has fixed relation x^p = 0")
            swap = ((xi, "gx"),)
            xp = ()
        return RewriteRules(F, p, q, swap, xp), False
    if family == "f3":
        xp = ()
        if delta:
            # x^p -> delta*(1 - g^p), with g^p already reduced mod g^q = 1
            xp = (((0, 0), one), ((p % q, 0), -one))
        return RewriteRules(F, p, q, swap_comm, xp), True
    if family == "f4":
        if delta:
            raise ValueError("inadmissible delta: family 4 has no delta")
        if q_div:
            swap = swap_comm
        else:
            # relation gx - xg - g + g^2 = 0, i.e. xg -> gx - g + g^2
            swap = ((one, "gx"), (-one, "g"), (one, "gg"))
        return RewriteRules(F, p, q, swap, (((0, 1), one),)), True
    if family == "grA":
        return RewriteRules(F, p, q, swap_comm, ()), False
    if family == "grB":
        return RewriteRules(F, p, q, swap_comm, ()), True
    if family == "grC":
        return RewriteRules(F, p, q, ((xi, "gx"),), ()), False
    raise ValueError(f"unknown family {family!r}")


def _needs_xi(family, p, q) -> bool:
    return family in ("f2", "grC")


def _label(i, j):
    parts = []
    if i:
        parts.append("g" if i == 1 else f"g^{i}")
    if j:
        parts.append("x" if j == 1 else f"x^{j}")
    return " ".join(parts) if parts else "1"


def family4_collapse_witness(p: int, q: int) -> tuple:
    """The two inequivalent reductions of x*g^q under the family-4 rules
    (q not dividing p-1), as normal-form dicts of integer coefficients.

    The printed presentation k<g,x>/(g^q-1, x^p-x, gx-xg-g+g^2) satisfies
    x*g^k = g^k*x + k*(g^{k+1} - g^k), so x*g^q = x + q*(g - 1).  With q
    invertible mod p this puts g - 1 in the ideal: the quotient collapses to
    dimension p and no pq-dimensional Hopf algebra with these relations
    exists.  The witness returns (reduction of "x"+"g"*q, reduction of "x");
    they differ exactly by q*(g - 1).
    """
    _check_pq(p, q)
    if (p - 1) % q == 0:
        raise ValueError("witness applies to the q not dividing p-1 branch")
    F = make_field(p, 1)
    rules, _ = _rules("f4", p, q, 0, F, None)
    a = {k: v.val for k, v in normal_form("x" + "g" * q, rules).items()}
    b = {k: v.val for k, v in normal_form("x", rules).items()}
    return a, b


def _build_pq(family, p, q, delta, xi) -> HopfData:
    _check_pq(p, q)
    if family == "f4" and (p - 1) % q != 0:
        raise ValueError(
            "inconsistent presentation: family 4 with q not dividing p-1 "
            "collapses (x*g^q = x + q*(g-1), so the relations force g = 1 "
            "and the quotient has dimension p, not p*q); "
            "see family4_collapse_witness")
    if _needs_xi(family, p, q):
        F, xi = _field_with_root(p, q, xi)
    else:
        F, xi = make_field(p, 1), None
    rules, skew = _rules(family, p, q, delta, F, xi)
    d = p * q

    def idx(i, j):
        return i * p + j

    labels = [_label(i, j) for i in range(q) for j in range(p)]
    mult = [[None] * d for _ in range(d)]
    for i1 in range(q):
        for j1 in range(p):
            for i2 in range(q):
                for j2 in range(p):
                    nf = normal_form("g" * i1 + "x" * j1 + "g" * i2 + "x" * j2,
                                     rules)
                    mult[idx(i1, j1)][idx(i2, j2)] = \
                        {idx(a, b): c for (a, b), c in nf.items()}
    unit = {0: F.one}
    counit = [F.one if j == 0 else F.zero for i in range(q) for j in range(p)]

    # Delta on generators, extended multiplicatively in H (x) H
    gamma = idx(1 % q, 0) if skew else 0
    dx = {(idx(0, 1), 0): F.one, (gamma, idx(0, 1)): F.one}
    comult = [None] * d
    H = HopfData(F, d, labels, mult, unit, comult, counit)
    for i in range(q):
        t = {(idx(i, 0), idx(i, 0)): F.one}  # Delta(g^i) = g^i (x) g^i
        comult[idx(i, 0)] = t
        for j in range(1, p):
            t = H.tensor_mult(t, dx)
            comult[idx(i, j)] = t

    H.antipode = solve_antipode(H)
    failures = validate(H)
    if failures:
        raise AssertionError(f"constructed {family}({p},{q},delta={delta}) "
                             f"is not a Hopf algebra: {failures[:3]}")
    H.presentation = Presentation(family, p, q, delta, (p - 1) % q == 0, F, xi)
    return H


# ---------------------------------------------------------------------------
# public builders (cached; HopfData is immutable once returned)
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _build_cached(family, p, q, delta, xi_key):
    xi = None
    if xi_key is not None:
        spec_p, spec_k, val = xi_key
        xi = make_field(spec_p, spec_k).element(val)
    return _build_pq(family, p, q, delta, xi)


def _xi_key(xi):
    return None if xi is None else (xi.spec.p, xi.spec.k, xi.val)


def build_family(family: str, p: int, q: int, delta: int = 0,
                 xi: Optional[FieldElement] = None) -> HopfData:
    """One of the four classified families; branch chosen from q | p-1."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    return _build_cached(family, p, q, delta, _xi_key(xi))


def build_graded(which: str, p: int, q: int,
                 xi: Optional[FieldElement] = None) -> HopfData:
    """One of the graded algebras grA, grB, grC."""
    if which not in GRADED:
        raise ValueError(f"unknown graded algebra {which!r}")
    return _build_cached(which, p, q, 0, _xi_key(xi))


@functools.lru_cache(maxsize=None)
def build_group_algebra(q: int, p: int) -> HopfData:
    """Group algebra of Z/q over GF(p)."""
    return _build_group_algebra(q, p)


@functools.lru_cache(maxsize=None)
def build_prim_algebra(p: int, delta: int = 0) -> HopfData:
    """k[x]/(x^p - delta*x) over GF(p), with x primitive."""
    if delta not in (0, 1):
        raise ValueError("delta must be 0 or 1")
    return _build_prim_algebra(p, delta)


def _build_group_algebra(q: int, p: int) -> HopfData:
    _check_pq(p, q)
    F = make_field(p, 1)
    labels = [_label(i, 0) for i in range(q)]
    mult = [[{(i + j) % q: F.one} for j in range(q)] for i in range(q)]
    unit = {0: F.one}
    comult = [{(i, i): F.one} for i in range(q)]
    counit = [F.one] * q
    H = HopfData(F, q, labels, mult, unit, comult, counit)
    H.antipode = solve_antipode(H)
    assert not validate(H)
    H.presentation = Presentation("groupalg", p, q, 0, (p - 1) % q == 0, F, None)
    return H


def _build_prim_algebra(p: int, delta: int) -> HopfData:
    F = make_field(p, 1)
    labels = [_label(0, j) for j in range(p)]
    mult = [[None] * p for _ in range(p)]
    for i in range(p):
        for j in range(p):
            s = i + j
            if s < p:
                mult[i][j] = {s: F.one}
            else:
                # x^s = x^{s-p} * x^p = delta * x^{s-p+1}
                mult[i][j] = {s - p + 1: F.embed(delta)} if delta else {}
    unit = {0: F.one}
    comult = []
    for j in range(p):
        t = {}
        for k in range(j + 1):
            c = F.embed(math.comb(j, k))
            if c.val:
                t[(j - k, k)] = c
        comult.append(t)
    counit = [F.one if j == 0 else F.zero for j in range(p)]
    H = HopfData(F, p, labels, mult, unit, comult, counit)
    H.antipode = solve_antipode(H)
    assert not validate(H)
    H.presentation = Presentation("primalg", p, 0, delta, False, F, None)
    return H
