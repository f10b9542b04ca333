"""Indicator sequences, period detection, and machine verification of the
congruence theorem, the closed-form power lemma, the dual/tensor/graded
invariance properties, and the constrained multinomial identity.

All expected values are congruences mod p: computed indicator values are
mapped into the prime subfield (a value outside it would be reported, not
silently coerced) and compared with chi_p(n)*chi_q(n) or chi_p(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .ffield import FieldElement, in_prime_subfield, element_order
from .hopf_core import (HopfData, dual, tensor, indicator_trace,
                        sweedler_power_element, is_commutative,
                        is_cocommutative, vec_equal)
from .integrals import indicator_integral, DegeneratePairingError
from . import catalog
from .catalog import (build_family, build_graded, build_group_algebra,
                      build_prim_algebra, graded_partner, FAMILIES)


def chi(r: int, n: int) -> int:
    """Character function of the prime r: r if r | n, else 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return r if n % r == 0 else 1


def predicted_indicator(H: HopfData, p: int, q: int, n: int) -> int:
    """Predicted residue of the n-th indicator mod p."""
    if is_commutative(H) and is_cocommutative(H):
        return (chi(p, n) * chi(q, n)) % p
    return chi(p, n) % p


@dataclass
class IndicatorEntry:
    n: int
    value: FieldElement
    value_as_residue: Optional[int]
    predicted_residue: Optional[int]
    methods_agree: Optional[bool]
    matches_prediction: Optional[bool]


@dataclass
class IndicatorReport:
    algebra: dict
    method: str
    entries: list = dataclass_field(default_factory=list)
    detected_period: Optional[int] = None

    def all_match(self) -> bool:
        return all(e.matches_prediction is not False for e in self.entries)

    def all_agree(self) -> bool:
        return all(e.methods_agree is not False for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "method": self.method,
            "detected_period": self.detected_period,
            "entries": [{
                "n": e.n,
                "value": e.value.coeffs,
                "value_int": e.value.val,
                "value_as_residue": e.value_as_residue,
                "predicted_residue": e.predicted_residue,
                "methods_agree": e.methods_agree,
                "matches_prediction": e.matches_prediction,
            } for e in self.entries],
        }


def _algebra_meta(H: HopfData) -> dict:
    meta = {"dim": H.dim, "field": H.field.to_dict()}
    if H.presentation is not None:
        meta.update(H.presentation.to_dict())
    return meta


def indicator_sequence(H: HopfData, n_max: int,
                       method: str = "both") -> IndicatorReport:
    """Indicators nu_1 .. nu_{n_max} with per-entry bookkeeping.

    method "both" computes the trace and the integral value for every n and
    records their agreement; predictions are filled in only for the
    pq-dimensional catalog algebras.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if method not in ("trace", "integral", "both"):
        raise ValueError(f"unknown method {method!r}")
    pres = H.presentation
    predict = (pres is not None and pres.family in FAMILIES + catalog.GRADED
               and H.dim == pres.p * pres.q)
    report = IndicatorReport(_algebra_meta(H), method)
    for n in range(1, n_max + 1):
        agree = None
        if method == "integral":
            value = indicator_integral(H, n)
        else:
            value = indicator_trace(H, n)
            if method == "both":
                agree = (indicator_integral(H, n) == value)
        residue = in_prime_subfield(value)
        predicted = matches = None
        if predict:
            predicted = predicted_indicator(H, pres.p, pres.q, n)
            matches = (residue == predicted)
        report.entries.append(IndicatorEntry(n, value, residue, predicted,
                                             agree, matches))
    report.detected_period = detect_period(report)
    return report


def detect_period(report: IndicatorReport) -> Optional[int]:
    """Smallest T <= n_max/2 with nu_{n+T} = nu_n over the tested window.

    A candidate over the window, never a proof of minimality.
    """
    values = [e.value for e in report.entries]
    n_max = len(values)
    for T in range(1, n_max // 2 + 1):
        if all(values[i] == values[i + T] for i in range(n_max - T)):
            return T
    return None


# ---------------------------------------------------------------------------
# closed-form power lemma
# ---------------------------------------------------------------------------

def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multinomial(ks) -> int:
    out, s = 1, 0
    for k in ks:
        s += k
        out *= math.comb(s, k)
    return out


def verify_lemma_part1(p: int, q: int, i: int, n: int) -> bool:
    """(g^i x^{p-1})^{[n+1]} in grB against its multinomial closed form.

    The closed form is evaluated with both exponent conventions (weights
    n, n-1, ..., 1 and weights 1, 2, ..., n on k_1..k_n); the two sums must
    agree with each other and with the computed Sweedler power.
    """
    H = build_graded("grB", p, q)
    F = H.field
    e = {i * p + (p - 1): F.one}
    lhs = sweedler_power_element(H, e, n + 1)
    rhs_desc, rhs_asc = {}, {}
    for ks in _compositions(p - 1, n + 1):
        c = F.embed(_multinomial(ks))
        if not c.val:
            continue
        w_desc = sum((n - t) * ks[t] for t in range(n))
        w_asc = sum((t + 1) * ks[t] for t in range(n))
        for acc, w in ((rhs_desc, w_desc), (rhs_asc, w_asc)):
            key = (((n + 1) * i + w) % q) * p + (p - 1)
            v = acc.get(key, F.zero) + c
            if v.val:
                acc[key] = v
            elif key in acc:
                del acc[key]
    return vec_equal(rhs_desc, rhs_asc) and vec_equal(lhs, rhs_asc)


def verify_lemma_part2(p: int, q: int, i: int, n: int) -> bool:
    """(g^i x^{p-1})^{[n+1]} in grC against the geometric-sum closed form
    (xi^{in} + ... + xi^i + 1)^{p-1} g^{(n+1)i} x^{p-1}."""
    H = build_graded("grC", p, q)
    F = H.field
    xi = H.presentation.xi
    e = {i * p + (p - 1): F.one}
    lhs = sweedler_power_element(H, e, n + 1)
    s = F.zero
    for t in range(n + 1):
        s = s + xi ** (i * t)
    scalar = s ** (p - 1)
    rhs = {(((n + 1) * i) % q) * p + (p - 1): scalar}
    rhs = {k: v for k, v in rhs.items() if v.val}
    return vec_equal(lhs, rhs)


# ---------------------------------------------------------------------------
# constrained multinomial identity
# ---------------------------------------------------------------------------

def corollary_sum(p: int, q: int, n: int) -> int:
    """The constrained multinomial sum, as a residue mod p.

    Sum of q * multinomial(p-1; k_1..k_n) over compositions of p-1 with
    k_1 + 2 k_2 + ... + (n-1) k_{n-1} congruent to 1-p mod q.  Callers compare
    the result against n^{p-1} mod p.
    """
    if n <= 1 or n % q != 0:
        raise ValueError("precondition violated: need n > 1 and q | n")
    target = (1 - p) % q
    m = p - 1
    # exact dynamic program over (total used, weight mod q); position t
    # contributes weight t*k_t for t < n and nothing for t = n, and the
    # multinomial coefficient factors as a product of binomials C(s, k_t)
    dp = {(0, 0): 1}
    for t in range(1, n + 1):
        w_coef = t % q if t < n else 0
        nxt = {}
        for (s, w), acc in dp.items():
            for k in range(m - s + 1):
                key = (s + k, (w + w_coef * k) % q)
                nxt[key] = nxt.get(key, 0) + acc * math.comb(s + k, k)
        dp = nxt
    total = sum(acc for (s, w), acc in dp.items()
                if s == m and w == target)
    return (q * total) % p


# ---------------------------------------------------------------------------
# whole-theorem verification
# ---------------------------------------------------------------------------

def admissible_deltas(family: str, p: int, q: int) -> tuple:
    if family == "f1" or family == "f3":
        return (0, 1)
    if family == "f2":
        return (0, 1) if (p - 1) % q == 0 else (0,)
    if family == "f4":
        return (0,)
    raise ValueError(f"unknown family {family!r}")


def verify_main_theorem(p: int, q: int, n_max: Optional[int] = None) -> dict:
    """Check prediction match, cross-method agreement and graded-partner
    equality for every admissible (family, delta) at this (p, q).

    Failures become report entries; nothing raises.
    """
    if n_max is None:
        n_max = 4 * p * q
    results = []
    for family in FAMILIES:
        for delta in admissible_deltas(family, p, q):
            partner_tag = graded_partner(family)
            try:
                H = build_family(family, p, q, delta)
            except ValueError as exc:
                results.append({
                    "family": family,
                    "delta": delta,
                    "graded_partner": partner_tag,
                    "n_max": n_max,
                    "ok": False,
                    "failures": [f"construction failed: {exc}"],
                    "detected_period": None,
                })
                continue
            rep = indicator_sequence(H, n_max, method="both")
            partner = build_graded(partner_tag, p, q)
            prep = indicator_sequence(partner, n_max, method="trace")
            failures = []
            for e, pe in zip(rep.entries, prep.entries):
                if not e.matches_prediction:
                    failures.append(
                        f"n={e.n}: value residue {e.value_as_residue} != "
                        f"predicted {e.predicted_residue}")
                if not e.methods_agree:
                    failures.append(f"n={e.n}: trace and integral disagree")
                if e.value != pe.value:
                    failures.append(
                        f"n={e.n}: nu_n differs from graded partner "
                        f"{partner_tag}")
            results.append({
                "family": family,
                "delta": delta,
                "graded_partner": partner_tag,
                "n_max": n_max,
                "ok": not failures,
                "failures": failures,
                "detected_period": rep.detected_period,
            })
    return {"p": p, "q": q, "n_max": n_max,
            "all_ok": all(r["ok"] for r in results), "results": results}


def verify_xi_independence(family: str, p: int, q: int) -> bool:
    """Indicator sequences must not depend on which primitive q-th root of
    unity the construction picks."""
    if family not in ("f2", "grC"):
        raise ValueError("family does not use a root of unity")
    build = (lambda xi: build_family(family, p, q, 0, xi=xi)) \
        if family == "f2" else (lambda xi: build_graded(family, p, q, xi=xi))
    H0 = build(None)
    F = H0.field
    roots = [x for x in F.elements()
             if x.val and x != F.one and x ** q == F.one]
    n_max = 2 * p * q
    reference = None
    for xi in roots:
        seq = [indicator_trace(build(xi), n) for n in range(1, n_max + 1)]
        if reference is None:
            reference = seq
        elif seq != reference:
            return False
    return True
