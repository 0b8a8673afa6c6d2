"""Numerical ladder models: relations, star forms, duality, crosschecks."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionring.errors import BadParameter, IllConditioned
from fusionring.uqnumeric import (
    QInt,
    RepMatrices,
    build_pi,
    build_u,
    check_star,
    fusion_crosscheck,
    full_verification,
    intertwiner_space,
    q_int,
    tensor_rep,
    unitarizability_witness,
    verify_conjugate_equations,
    verify_permutation_intertwiner,
)

from oracles import QINT_AT_MINUS_HALF

Q_VALUES = (Fraction(-1, 2), Fraction(-2, 3))


def test_q_integers_match_hand_values():
    for k, expected in QINT_AT_MINUS_HALF.items():
        got = q_int(k, Fraction(-1, 2))
        assert got == expected
        assert isinstance(got, Fraction)
    assert QInt.at(3, Fraction(-1, 2)).value == Fraction(21, 4)


def test_q_int_rejects_degenerate_points():
    for bad in (0, 1, -1, Fraction(1)):
        with pytest.raises(BadParameter):
            q_int(2, bad)


@settings(max_examples=40)
@given(
    st.integers(min_value=0, max_value=12),
    st.fractions(min_value=Fraction(-4), max_value=Fraction(4)).filter(
        lambda f: f not in (0, 1, -1)
    ),
)
def test_q_int_symmetries(k, q):
    # balanced q-integers are invariant under q -> 1/q and pick up
    # (-1)^(k+1) under q -> -q; both exact over Fractions
    assert q_int(k, q) == q_int(k, 1 / q)
    assert q_int(k, -q) == (-1) ** (k + 1) * q_int(k, q)


def test_frozen_level_one_model():
    rep = build_u(1, 1, Fraction(-1, 2))
    np.testing.assert_allclose(rep.E, [[0, 1j], [0, 0]], atol=1e-15)
    np.testing.assert_allclose(rep.F, [[0, 0], [1j, 0]], atol=1e-15)
    half = 0.5**0.5
    np.testing.assert_allclose(np.diag(rep.K), [-half, 2 * half], atol=1e-15)


def test_frozen_level_two_k_matrix():
    rep = build_u(1, 2, Fraction(-1, 2))
    np.testing.assert_allclose(np.diag(rep.K), [-0.5, 1.0, -2.0], atol=1e-15)
    sign_flipped = build_u(-1, 2, Fraction(-1, 2))
    np.testing.assert_allclose(np.diag(sign_flipped.K), [0.5, -1.0, 2.0], atol=1e-15)


def test_level_zero_models_are_the_signs():
    for sign in (1, -1):
        rep = build_u(sign, 0, Fraction(-1, 2))
        assert rep.dim == 1
        assert rep.K[0, 0] == sign
        assert rep.E[0, 0] == 0 and rep.F[0, 0] == 0


def test_relations_hold_for_all_small_models():
    for q in Q_VALUES:
        for n in range(7):
            for sign in (1, -1):
                rep = build_u(sign, n, q)
                assert rep.max_relation_residual() <= 1e-12


def test_star_structure_of_the_models():
    for q in Q_VALUES:
        for n in range(7):
            for sign in (1, -1):
                rep = build_u(sign, n, q)
                assert check_star(rep).ok
                if n >= 1:
                    assert not check_star(rep, form="su2").ok


def test_bad_parameters_are_rejected():
    q = Fraction(-1, 2)
    with pytest.raises(BadParameter):
        build_u(2, 1, q)
    with pytest.raises(BadParameter):
        build_u(1, 1, Fraction(1, 2))  # these models need q < 0
    with pytest.raises(BadParameter):
        build_pi(0.5, 1, q)  # not a fourth root of unity
    with pytest.raises(BadParameter):
        build_pi(1, -1, q)
    with pytest.raises(BadParameter):
        build_pi(1, 1, 1j)
    with pytest.raises(BadParameter):
        build_pi(1, 1, q, t_branch="other")
    with pytest.raises(BadParameter):
        check_star(build_u(1, 1, q), form="sl2")


def test_wrong_parity_twist_blocks_any_star_form():
    # real twist on an odd level makes K imaginary at q < 0
    for form in ("su2", "su11"):
        wit = unitarizability_witness(1, 1, Fraction(-1, 2), form=form)
        assert wit.verdict == "obstruction"
        assert wit.evidence["kind"] == "k_spectrum"


def test_compact_form_is_obstructed_at_negative_q():
    for n in range(1, 7):
        w = 1j if n % 2 else 1
        wit = unitarizability_witness(w, n, Fraction(-1, 2), form="su2")
        assert wit.verdict == "obstruction"
        assert wit.evidence["kind"] == "ef_spectrum"


def test_compact_form_works_at_positive_q():
    wit = unitarizability_witness(1, 3, Fraction(1, 2), form="su2")
    assert wit.unitarizable
    base = build_pi(1, 3, Fraction(1, 2))
    T = wit.T
    T_inv = np.diag(1 / np.diag(T))
    E, F = T @ base.E @ T_inv, T @ base.F @ T_inv
    assert np.max(np.abs(E.conj().T - F)) <= 1e-12


def test_witness_transform_realizes_the_noncompact_star():
    wit = unitarizability_witness(1j, 3, Fraction(-1, 2), form="su11")
    assert wit.unitarizable
    base = build_pi(1j, 3, Fraction(-1, 2))
    T = wit.T
    T_inv = np.diag(1 / np.diag(T))
    E, F = T @ base.E @ T_inv, T @ base.F @ T_inv
    assert np.max(np.abs(E.conj().T + F)) <= 1e-12


def test_schur_dimensions():
    q = Fraction(-1, 2)
    a = build_u(1, 2, q)
    b = build_u(-1, 3, q)
    self_space = intertwiner_space(a, a)
    assert self_space.dim == 1
    basis = self_space.basis[0]
    np.testing.assert_allclose(basis, basis[0, 0] * np.eye(3), atol=1e-12)
    assert intertwiner_space(a, b).dim == 0


def test_intertwiner_basis_satisfies_the_equations():
    q = Fraction(-1, 2)
    big = tensor_rep(build_u(1, 1, q), build_u(1, 1, q))
    for sign, k, expect in ((-1, 0, 1), (-1, 2, 1), (1, 1, 0)):
        cand = build_u(sign, k, q)
        space = intertwiner_space(cand, big)
        assert space.dim == expect
        for T in space.basis:
            for x_small, x_big in ((cand.E, big.E), (cand.F, big.F), (cand.K, big.K)):
                assert np.max(np.abs(T @ x_small - x_big @ T)) <= 1e-9


def _hand_rep(E, F, K):
    return RepMatrices(
        n=None,
        E=np.asarray(E, dtype=complex),
        F=np.asarray(F, dtype=complex),
        K=np.asarray(K, dtype=complex),
        K_inv=np.diag(1 / np.diag(np.asarray(K, dtype=complex))),
        q=-0.5,
        w=1,
        form_tag="sl2",
    )


def test_rank_decision_refuses_tolerance_straddling():
    rep = _hand_rep([[0, 1], [0, 0]], np.zeros((2, 2)), np.diag([1.0, 1.0 + 1e-9]))
    with pytest.raises(IllConditioned, match="flips"):
        intertwiner_space(rep, rep)


def test_rank_decision_refuses_small_gaps():
    a = _hand_rep([[0, 1], [0, 0]], np.zeros((2, 2)), np.diag([1.0, 1.0 + 2e-8]))
    shifted = np.array([[0, 1], [0, 0]]) + 3e-11 * np.eye(2)
    b = _hand_rep(shifted, np.zeros((2, 2)), np.diag([1.0, 1.0 + 2e-8]))
    with pytest.raises(IllConditioned, match="gap"):
        intertwiner_space(a, b)


def test_tensor_factors_must_share_parameters():
    with pytest.raises(BadParameter):
        tensor_rep(build_u(1, 1, Fraction(-1, 2)), build_u(1, 1, Fraction(-2, 3)))
    with pytest.raises(BadParameter):
        tensor_rep(
            build_u(1, 1, Fraction(-1, 2)),
            build_u(1, 1, Fraction(-1, 2), t_branch="conjugate"),
        )


def test_conjugate_equations_scalar():
    for q in Q_VALUES:
        rep = verify_conjugate_equations(q)
        assert rep.ok
        assert abs(rep.c - (-abs(float(q)))) <= 1e-12
        assert abs(rep.norm_sq - (1 + float(q)) ** 2 + 2 * float(q)) <= 1e-12


def test_permutation_intertwiner_small_levels():
    for n in range(4):
        rep = verify_permutation_intertwiner(n, Fraction(-1, 2))
        assert rep.ok
        assert rep.residual == 0.0
        assert rep.hom_dim == 1


def test_fusion_crosscheck_small_window():
    rep = fusion_crosscheck(2, Fraction(-1, 2))
    assert rep.ok
    assert rep.pairs_checked == 36
    assert rep.mismatches == []


def test_full_verification_both_branches():
    for branch in ("principal", "conjugate"):
        rep = full_verification(Fraction(-1, 2), 3, t_branch=branch)
        assert rep.ok, rep.to_dict()
    names = [name for name, _ok, _d in full_verification(Fraction(-1, 2), 2).checks]
    assert names == [
        "relations",
        "star",
        "compact-form obstruction",
        "conjugate equations",
        "permutation intertwiner",
        "fusion crosscheck",
    ]
