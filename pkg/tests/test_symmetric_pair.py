"""
Testes de pares simétricos: involuções, decomposição 𝔨 ⊕ 𝔭 e Casimir
"""

from fractions import Fraction

import pytest

from backend.linalg_exact import SparseRatMatrix
from backend.lie_core import CartanSpecError
from backend.symmetric_pair import (
    DominanceError,
    InvolutionError,
    casimir_duality_residual,
    casimir_on_p,
    casimir_scalar,
    contravariance_on_generators,
    grading_holds,
    jacobi_holds,
    load_pair,
    parse_involution_spec,
    parse_pair,
    perturbed,
    sigma_is_automorphism,
    sigma_squared_is_identity,
    weights_act_correctly,
    weyl_dimension,
)

PAIRS = ["a1_switch", "a1_signs", "a2_switch", "b2_signs"]


# ==================== LEITURA ====================

def test_parse_switch_and_signs():
    inv = parse_involution_spec("A2:switch")
    assert inv.is_switch
    assert str(inv.ambient_spec()) == "A2xA2"
    inv = parse_involution_spec("B2:signs=+-")
    assert inv.signs == (1, -1)
    assert str(inv) == "B2:signs=+-"


@pytest.mark.parametrize("text,position", [
    ("A1", 2),
    ("A1:foo", 3),
    ("A1:signs=x", 9),
    ("A2:signs=-", 9),
    ("A1:signs=+", 9),
])
def test_involution_errors(text, position):
    with pytest.raises(InvolutionError) as exc:
        parse_involution_spec(text)
    assert exc.value.position == position


def test_bad_cartan_type():
    with pytest.raises(CartanSpecError):
        parse_involution_spec("Z9:switch")
    with pytest.raises(InvolutionError):
        parse_pair("Z9:switch")


# ==================== DECOMPOSIÇÃO ====================

@pytest.mark.parametrize("name,dim_k,dim_p,rank", [
    ("a1_switch", 3, 3, 1),
    ("a1_signs", 1, 2, 1),
    ("a2_switch", 8, 8, 2),
    ("b2_signs", 6, 4, 2),
])
def test_dimensions(request, name, dim_k, dim_p, rank):
    sp = request.getfixturevalue(name)
    assert (sp.dim_k, sp.dim_p, sp.rank) == (dim_k, dim_p, rank)
    assert sp.dim_k + sp.dim_p == sp.g.dim


def test_switch_weights(a1_switch):
    assert a1_switch.p_weights == [(1,), (0,), (-1,)]
    assert a1_switch.delta0_pos == [(1,)]


def test_inner_sl2_weights(a1_signs):
    assert a1_signs.p_weights == [(1,), (-1,)]
    assert a1_signs.delta0_pos == []
    assert a1_signs.k_labels == ["h1"]


def test_b2_inner_roots(b2_signs):
    assert b2_signs.delta0_pos == [(1, 0), (1, 2)]
    assert set(b2_signs.p_weights) == {(0, 1), (1, 1), (0, -1), (-1, -1)}


@pytest.mark.parametrize("name", PAIRS)
def test_structural_checks(request, name):
    sp = request.getfixturevalue(name)
    assert sigma_squared_is_identity(sp)
    assert sigma_is_automorphism(sp)
    assert grading_holds(sp)
    assert weights_act_correctly(sp)
    assert contravariance_on_generators(sp)
    assert jacobi_holds(sp)


# ==================== CASIMIR ====================

@pytest.mark.parametrize("name", PAIRS)
def test_casimir_dual_bases(request, name):
    assert casimir_duality_residual(request.getfixturevalue(name)) == 0


def test_inner_sl2_casimir_is_h_times_h_over_8(a1_signs):
    assert a1_signs.killing_k.get(0, 0) == 8
    assert a1_signs.casimir.coefficients.get(0, 0) == Fraction(1, 8)
    assert a1_signs.casimir.dual_basis == ({0: Fraction(1, 8)},)


def test_switch_killing_doubles(a1_switch):
    # h + h' tem κ = 8 + 8
    assert a1_switch.killing_k.get(1, 1) == 16
    assert a1_switch.pairing((1,), (1,)) == Fraction(1, 4)


@pytest.mark.parametrize("name", PAIRS)
def test_casimir_on_p_is_one_half(request, name):
    sp = request.getfixturevalue(name)
    assert casimir_on_p(sp) == SparseRatMatrix.scalar(sp.dim_p, Fraction(1, 2))


def test_casimir_commutes_with_k(a2_switch):
    omega = casimir_on_p(a2_switch)
    for i in range(a2_switch.dim_k):
        m = a2_switch.action_matrix_p(i)
        assert omega @ m == m @ omega


def test_casimir_scalars(a1_switch, a1_signs, a2_switch):
    assert casimir_scalar(a1_switch, (1,)) == Fraction(1, 2)
    assert casimir_scalar(a1_switch, (0,)) == 0
    assert casimir_scalar(a1_signs, (1,)) == Fraction(1, 2)
    assert casimir_scalar(a1_signs, (-1,)) == Fraction(1, 2)
    assert casimir_scalar(a2_switch, (1, 1)) == Fraction(1, 2)


def test_casimir_scalar_rejects_non_dominant(a1_switch):
    with pytest.raises(DominanceError):
        casimir_scalar(a1_switch, (-1,))
    with pytest.raises(DominanceError):
        casimir_scalar(a1_switch, (1, 0))


def test_weyl_dimensions(a1_switch, a1_signs, a2_switch, b2_signs):
    assert weyl_dimension(a1_switch, (1,)) == 3
    assert weyl_dimension(a1_switch, (0,)) == 1
    assert weyl_dimension(a1_signs, (-1,)) == 1
    assert weyl_dimension(a2_switch, (1, 1)) == 8
    assert weyl_dimension(b2_signs, (1, 1)) == 4


# ==================== CONTROLE NEGATIVO ====================

def test_perturbed_breaks_jacobi(a1_switch):
    bad = perturbed(a1_switch)
    assert bad.perturbation == (0, 1)
    assert not jacobi_holds(bad)
    assert jacobi_holds(a1_switch)
    assert a1_switch.perturbation is None


def test_load_pair_negative_control():
    assert load_pair("A1:switch").perturbation is None
    assert load_pair("A1:switch", negative_control=True).perturbation is not None
