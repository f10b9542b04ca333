"""Exact-arithmetic engine for pq-dimensional pointed Hopf algebras in
characteristic p and their higher indicator sequences."""

from .ffield import (FieldSpec, FieldElement, make_field, required_degree,
                     primitive_qth_root, element_order, in_prime_subfield,
                     embed_int)
from .hopf_core import (HopfData, validate, dual, tensor, sweedler_power_map,
                        sweedler_power_element, indicator_trace,
                        solve_antipode, is_commutative, is_cocommutative)
from .integrals import (IntegralPair, DegeneratePairingError, left_integral,
                        left_integral_dual, normalize_pair, indicator_integral)
from .catalog import (Presentation, RewriteRules, normal_form, build_family,
                      build_graded, build_group_algebra, build_prim_algebra,
                      graded_partner, FAMILIES, GRADED)
from .analysis import (chi, predicted_indicator, indicator_sequence,
                       detect_period, verify_lemma_part1, verify_lemma_part2,
                       corollary_sum, verify_main_theorem,
                       verify_xi_independence, IndicatorReport)

__all__ = [
    "FieldSpec", "FieldElement", "make_field", "required_degree",
    "primitive_qth_root", "element_order", "in_prime_subfield", "embed_int",
    "HopfData", "validate", "dual", "tensor", "sweedler_power_map",
    "sweedler_power_element", "indicator_trace", "solve_antipode",
    "is_commutative", "is_cocommutative",
    "IntegralPair", "DegeneratePairingError", "left_integral",
    "left_integral_dual", "normalize_pair", "indicator_integral",
    "Presentation", "RewriteRules", "normal_form", "build_family",
    "build_graded", "build_group_algebra", "build_prim_algebra",
    "graded_partner", "FAMILIES", "GRADED",
    "chi", "predicted_indicator", "indicator_sequence", "detect_period",
    "verify_lemma_part1", "verify_lemma_part2", "corollary_sum",
    "verify_main_theorem", "verify_xi_independence", "IndicatorReport",
]

__version__ = "0.1.0"
