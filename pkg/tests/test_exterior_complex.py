"""
Testes do complexo exterior Λ^(p,s)𝔲⁻
"""

from fractions import Fraction

import pytest

from backend.config import RunConfig
from backend.exterior_complex import (
    LoopVector,
    adjoint_residual,
    basis_descriptor,
    bidegree_basis,
    boundary_matrix,
    boundary_squared_residual,
    canonical,
    casimir_matrix,
    coboundary_matrix,
    complex_for,
    d_matrix,
    finite_basis,
    finite_side_casimir,
    gram_matrix,
    identify,
    kernel_identity,
    laplacian_matrix,
    lemma_cycle_check,
    spin_formula_residual,
    spin_vector,
    tau_theta,
    verify_garland_formula,
)
from backend.linalg_exact import SparseRatMatrix, is_positive_definite
from backend.symmetric_pair import perturbed

HALF = Fraction(1, 2)

SMALL_BIDEGREES = [(p, Fraction(t, 2)) for p in range(4) for t in range(p, 5)]
FULL_GRID = RunConfig(pair="A2:switch", p_max=3, s_max=Fraction(3)).bidegrees()


def lv(energy, index):
    return LoopVector(Fraction(energy), index)


# ==================== BASES ====================

@pytest.mark.parametrize("p,s,dim", [
    (0, 0, 1),
    (0, HALF, 0),
    (1, HALF, 3),
    (1, 1, 3),
    (2, 1, 3),
    (2, Fraction(3, 2), 9),
    (3, Fraction(3, 2), 1),
    (2, HALF, 0),
])
def test_switch_sl2_dimensions(a1_switch, p, s, dim):
    assert bidegree_basis(a1_switch, p, s).dim == dim


def test_invalid_bidegree(a1_switch):
    with pytest.raises(ValueError):
        bidegree_basis(a1_switch, 1, Fraction(1, 3))


def test_canonical_sign():
    a, b = lv(-1, 0), lv(Fraction(-1, 2), 2)
    assert canonical((b, a)) == (-1, (a, b))
    assert canonical((a, a)) == (0, None)


def test_basis_descriptor(a1_signs):
    assert basis_descriptor(a1_signs, 1, 1) == [[["h1", "-1"]]]


# ==================== BORDO ====================

def test_inner_sl2_boundary(a1_signs):
    """∂₂(e_{−½} ∧ f_{−½}) = −h_{−1}"""
    cx = complex_for(a1_signs)
    mono = (lv(Fraction(-1, 2), 0), lv(Fraction(-1, 2), 1))
    assert cx.basis(2, 1).basis == (mono,)
    assert cx.boundary_of(mono) == {(lv(-1, 0),): -1}
    assert boundary_matrix(a1_signs, 2, 1) == SparseRatMatrix.from_dense([[-1]])


def test_boundary_vanishes_in_degree_one(a1_switch):
    bd = boundary_matrix(a1_switch, 1, HALF)
    assert bd.shape == (0, 3)
    assert bd.is_zero()


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs"])
@pytest.mark.parametrize("p,s", SMALL_BIDEGREES)
def test_boundary_squares_to_zero(request, name, p, s):
    sp = request.getfixturevalue(name)
    assert boundary_squared_residual(sp, p, s).is_zero()


# ==================== FORMA E ADJUNTA ====================

def test_gram_of_empty_monomial(a1_switch):
    assert gram_matrix(a1_switch, 0, 0) == SparseRatMatrix.identity(1)


def test_inner_sl2_gram_and_adjoint(a1_signs):
    assert gram_matrix(a1_signs, 1, 1).get(0, 0) == 8
    assert gram_matrix(a1_signs, 2, 1).get(0, 0) == 16
    assert coboundary_matrix(a1_signs, 2, 1).get(0, 0) == -HALF


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs"])
@pytest.mark.parametrize("p,s", SMALL_BIDEGREES)
def test_gram_positive_and_adjoint_exact(request, name, p, s):
    sp = request.getfixturevalue(name)
    if bidegree_basis(sp, p, s).dim:
        assert is_positive_definite(gram_matrix(sp, p, s))
    assert adjoint_residual(sp, p, s).is_zero()


# ==================== GARLAND ====================

@pytest.mark.parametrize("name", ["a1_switch", "a1_signs"])
@pytest.mark.parametrize("p,s", SMALL_BIDEGREES)
def test_garland_formula(request, name, p, s):
    ok, residual = verify_garland_formula(request.getfixturevalue(name), p, s)
    assert ok
    assert residual.is_zero()


@pytest.mark.parametrize("p,s", [(1, HALF), (2, 1), (2, Fraction(3, 2)), (3, Fraction(3, 2))])
def test_garland_formula_rank_two(a2_switch, b2_signs, p, s):
    assert verify_garland_formula(a2_switch, p, s)[0]
    assert verify_garland_formula(b2_signs, p, s)[0]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["a2_switch", "b2_signs"])
@pytest.mark.parametrize("p,s", FULL_GRID)
def test_garland_formula_full_grid(request, name, p, s):
    ok, residual = verify_garland_formula(request.getfixturevalue(name), p, s)
    assert ok
    assert residual.is_zero()


def test_garland_fails_for_perturbed_bracket(a1_switch):
    ok, residual = verify_garland_formula(perturbed(a1_switch), 2, 1)
    assert not ok
    assert residual.nnz > 0


def test_laplacian_on_highest_degree(a1_switch):
    # Ω = ½ em Λ²𝔭 ≅ 𝔭 e d = −1
    assert laplacian_matrix(a1_switch, 2, 1) == SparseRatMatrix.scalar(3, Fraction(1, 4))
    assert laplacian_matrix(a1_switch, 1, HALF).is_zero()


def test_scaling_and_casimir(a1_switch):
    assert d_matrix(a1_switch, 2, Fraction(3, 2)) == SparseRatMatrix.scalar(9, Fraction(-3, 2))
    assert casimir_matrix(a1_switch, 1, HALF) == SparseRatMatrix.scalar(3, HALF)
    assert casimir_matrix(a1_switch, 0, 0).is_zero()


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "b2_signs"])
@pytest.mark.parametrize("p,s", [(0, 0), (1, HALF), (1, 1), (2, 1), (2, Fraction(3, 2))])
def test_kernel_identity(request, name, p, s):
    assert kernel_identity(request.getfixturevalue(name), p, s)


# ==================== LADO FINITO ====================

@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "b2_signs"])
def test_finite_side_matches_loop_side(request, name):
    sp = request.getfixturevalue(name)
    for p in range(sp.dim_p + 1):
        space = bidegree_basis(sp, p, Fraction(p, 2))
        assert [identify(m) for m in space.basis] == finite_basis(sp, p)
        assert finite_side_casimir(sp, p) == casimir_matrix(sp, p, Fraction(p, 2))


def test_identify_rejects_integer_energy():
    with pytest.raises(ValueError):
        identify((lv(-1, 0),))


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "a2_switch", "b2_signs"])
def test_spin_formula(request, name):
    assert spin_formula_residual(request.getfixturevalue(name)) == 0


def test_inner_sl2_spin_vector(a1_signs):
    mono = (lv(Fraction(-1, 2), 0), lv(Fraction(-1, 2), 1))
    assert spin_vector(a1_signs, 0) == {mono: -HALF}
    assert tau_theta(a1_signs, 0) == {mono: Fraction(-1, 4)}


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "a2_switch"])
def test_cycles_are_commuting_monomials(request, name):
    sp = request.getfixturevalue(name)
    for p in range(min(sp.dim_p, 3) + 1):
        assert lemma_cycle_check(sp, p)
