"""Left integrals in H and H*, pairing normalization, and the integral-based
indicator formula.

A left integral in H is a vector L with h*L = eps(h)*L for all h; the solution
space is one-dimensional for a finite-dimensional Hopf algebra, and we scale
the spanning vector so its first nonzero coordinate (in basis order) is 1.
The indicator formula reads the n-th indicator off as lam(L^{[n]}) once the
pairing is normalized to lam(L) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffield import FieldElement
from . import linalg
from .hopf_core import HopfData, dual, sweedler_power_element


class DegeneratePairingError(ValueError):
    """lam(L) = 0: the integral formula is unusable for this pairing."""


@dataclass
class IntegralPair:
    Lambda: dict            # sparse vector in H
    lam: list               # dense covector on H
    normalized: bool


def _span_to_vector(basis, dim, F):
    if len(basis) != 1:
        raise ValueError(
            f"integral space dimension != 1 (got {len(basis)})")
    return basis[0]


def left_integral(H: HopfData) -> dict:
    """Spanning left integral of H, first nonzero coordinate scaled to 1.

    Computed as the nullspace of the stacked system (L_{e_i} - eps(e_i) Id)
    over all basis elements, where L_h is left multiplication by h.
    """
    F, d = H.field, H.dim
    rows = []
    for i in range(d):
        ei = H.counit[i]
        for c in range(d):
            row = [F.zero] * d
            for j in range(d):
                row[j] = H.mult[i][j].get(c, F.zero)
            row[c] = row[c] - ei
            if any(x.val for x in row):
                rows.append(row)
    basis = linalg.nullspace(rows, d, F)
    v = _span_to_vector(basis, d, F)
    return {i: x for i, x in enumerate(v) if x.val}


def left_integral_dual(H: HopfData) -> list:
    """Left integral of H* read back as a functional on H (dense covector)."""
    lam = left_integral(dual(H))
    return [lam.get(i, H.field.zero) for i in range(H.dim)]


def evaluate(lam: list, v: dict) -> FieldElement:
    """Pair a covector with a sparse vector."""
    out = lam[0].spec.zero
    for i, c in v.items():
        out = out + lam[i] * c
    return out


def normalize_pair(Lambda: dict, lam: list) -> IntegralPair:
    """Rescale lam so that lam(Lambda) = 1."""
    if not Lambda or not any(x.val for x in lam):
        raise ValueError("integrals must be nonzero")
    val = evaluate(lam, Lambda)
    if not val.val:
        raise DegeneratePairingError(
            "degenerate pairing: lam(Lambda) = 0; fall back to the trace "
            "formula")
    inv = val.inverse()
    return IntegralPair(Lambda, [x * inv for x in lam], True)


def integral_pair(H: HopfData) -> IntegralPair:
    """Normalized (Lambda, lam) for H, cached on the instance."""
    pair = getattr(H, "_integral_pair", None)
    if pair is None:
        pair = normalize_pair(left_integral(H), left_integral_dual(H))
        H._integral_pair = pair
    return pair


def indicator_integral(H: HopfData, n: int) -> FieldElement:
    """The n-th indicator as lam(Lambda^{[n]}) with lam(Lambda) = 1."""
    if n < 1:
        raise ValueError("indicator index must be >= 1")
    pair = integral_pair(H)
    return evaluate(pair.lam, sweedler_power_element(H, pair.Lambda, n))
