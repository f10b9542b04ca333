"""Structure-constant Hopf algebra core: validation, duals, tensor products,
Sweedler powers, antipode solving, serialization."""

import pytest

from pqhopf.hopf_core import (HopfData, validate, dual, tensor,
                              sweedler_power_map, sweedler_power_element,
                              indicator_trace, solve_antipode,
                              is_commutative, is_cocommutative, vec_equal)
from pqhopf.catalog import (build_family, build_graded, build_group_algebra,
                            build_prim_algebra)


def test_group_algebra_axioms():
    H = build_group_algebra(3, 2)
    assert H.dim == 3
    assert validate(H) == []
    assert is_commutative(H) and is_cocommutative(H)


def test_prim_algebra_axioms():
    for delta in (0, 1):
        H = build_prim_algebra(3, delta)
        assert validate(H) == []
        assert is_commutative(H) and is_cocommutative(H)


def test_validate_reports_corruption():
    H = build_group_algebra(3, 2)
    bad = HopfData.from_dict(H.to_dict())
    # break associativity: g*g should be g^2, point it at 1 instead
    bad.mult[1][1] = {0: bad.field.one}
    msgs = validate(bad)
    assert msgs
    assert any("associativity" in m or "antipode" in m or "coassoc" in m
               or "algebra map" in m for m in msgs)


def test_validate_reports_broken_counit():
    H = build_group_algebra(3, 2)
    bad = HopfData.from_dict(H.to_dict())
    bad.counit[1] = bad.field.zero
    assert any("counit" in m or "algebra map" in m for m in validate(bad))


def test_dual_is_involution_on_structure():
    for H in (build_group_algebra(5, 3), build_family("f2", 3, 2, 1)):
        D = dual(dual(H))
        assert D.dim == H.dim
        for i in range(H.dim):
            for j in range(H.dim):
                assert vec_equal(D.mult[i][j], H.mult[i][j])
            assert vec_equal(D.comult[i], H.comult[i])
            assert D.counit[i] == H.counit[i]
        assert D.antipode == H.antipode


def test_dual_swaps_commutativity():
    H = build_family("f2", 3, 2, 0)   # noncommutative, cocommutative: no
    assert not is_commutative(H)
    D = dual(H)
    assert not is_cocommutative(D)
    assert validate(D) == []


def test_tensor_of_blocks_is_hopf():
    G = build_group_algebra(3, 2)
    P = build_prim_algebra(2, 0)
    T = tensor(G, P)
    assert T.dim == 6
    assert validate(T) == []


def test_sweedler_power_against_literal_iteration():
    # P_n(h) computed by literally expanding Delta n-1 times and multiplying
    H = build_family("f2", 3, 2, 1)
    F = H.field

    def literal(h, n):
        if n == 0:
            return {k: v * H.counit_vec(h) for k, v in H.unit.items()}
        # tensors of length n, then multiply left to right
        tensors = {(i,): c for i, c in h.items()}
        for _ in range(n - 1):
            nxt = {}
            for word, c in tensors.items():
                last = {word[-1]: F.one}
                for (a, b), d in H.comult_vec(last).items():
                    key = word[:-1] + (a, b)
                    v = nxt.get(key, F.zero) + c * d
                    if v.val:
                        nxt[key] = v
                    elif key in nxt:
                        del nxt[key]
            tensors = nxt
        out = {}
        for word, c in tensors.items():
            prod = {word[0]: F.one}
            for idx in word[1:]:
                prod = H.mult_vec(prod, {idx: F.one})
            for k, v in prod.items():
                s = out.get(k, F.zero) + c * v
                if s.val:
                    out[k] = s
                elif k in out:
                    del out[k]
        return out

    for n in range(0, 5):
        for i in range(H.dim):
            e = {i: F.one}
            assert vec_equal(sweedler_power_element(H, e, n), literal(e, n))


def test_sweedler_power_one_is_identity():
    H = build_graded("grB", 2, 3)
    P1 = sweedler_power_map(H, 1)
    for j in range(H.dim):
        col = [P1[i][j] for i in range(H.dim)]
        assert all((c.val == (i == j)) for i, c in enumerate(col))


def test_indicator_trace_group_algebra_all_one():
    H = build_group_algebra(3, 2)
    for n in range(1, 13):
        assert indicator_trace(H, n) == H.field.one


def test_solve_antipode_matches_stored():
    H = build_family("f3", 3, 2, 1)
    S = solve_antipode(H)
    assert S == H.antipode


def test_solve_antipode_fails_without_one():
    H = build_group_algebra(3, 2)
    crippled = HopfData.from_dict(H.to_dict())
    # destroy the convolution unit so no antipode can exist
    crippled.comult[0] = {}
    with pytest.raises(ValueError):
        solve_antipode(crippled)


def test_json_round_trip_preserves_everything():
    H = build_family("f2", 3, 2, 1)
    d = H.to_dict()
    H2 = HopfData.from_dict(d)
    assert H2.to_dict() == {k: v for k, v in d.items()
                            if k != "presentation"}
    assert validate(H2) == []
    for n in range(1, 8):
        assert indicator_trace(H2, n) == indicator_trace(H, n)
