"""
Testes da enumeração de subespaços abelianos 𝔟₀-estáveis
"""

from fractions import Fraction

import pytest

from backend.abelian_enum import (
    bruteforce_stable_subsets,
    enumerate_abelian_bstable,
    is_abelian,
    is_b0_stable,
    max_abelian_dimension,
    nonzero_weight_indices,
    peterson_count,
    raisings,
    subspaces_of_dim,
)
from backend.exterior_complex import LoopVector, complex_for
from backend.symmetric_pair import build_pair

HALF = Fraction(1, 2)


def index_of(sp, weight):
    return sp.p_weights.index(tuple(Fraction(x) for x in weight))


def upper_closure(sp, phi):
    closed = set(phi)
    pending = list(phi)
    while pending:
        for image in raisings(sp, pending.pop()):
            for j in image:
                if j not in closed:
                    closed.add(j)
                    pending.append(j)
    return closed


@pytest.mark.parametrize("name,count", [
    ("a1_switch", 2),
    ("a1_signs", 3),
    ("a2_switch", 4),
    ("b2_signs", 2),
])
def test_counts(request, name, count):
    assert len(enumerate_abelian_bstable(request.getfixturevalue(name))) == count


def test_switch_sl2_subspaces(a1_switch):
    found = enumerate_abelian_bstable(a1_switch)
    assert [a.weights for a in found] == [(), ((1,),)]
    assert found[0].mu == ()
    assert found[0].to_dict(1) == {'dim': 0, 'weights': [], 'mu': [0]}
    assert found[1].to_dict(1) == {'dim': 1, 'weights': ['α1'], 'mu': [1]}


def test_inner_sl2_subspaces(a1_signs):
    weights = {a.weights for a in enumerate_abelian_bstable(a1_signs)}
    assert weights == {(), ((1,),), ((-1,),)}
    assert not is_abelian(a1_signs, (0, 1))


@pytest.mark.parametrize("pair_text,count", [
    ("A1:switch", 2),
    ("A2:switch", 4),
    ("B2:switch", 4),
    ("G2:switch", 4),
    pytest.param("A3:switch", 8, marks=pytest.mark.slow),
])
def test_peterson_count(pair_text, count):
    found, expected = peterson_count(build_pair(pair_text))
    assert found == expected == count


def test_b0_stability_in_sl3(a2_switch):
    theta = index_of(a2_switch, (1, 1))
    alpha1 = index_of(a2_switch, (1, 0))
    assert is_b0_stable(a2_switch, (theta,))
    assert not is_b0_stable(a2_switch, (alpha1,))
    assert is_b0_stable(a2_switch, (theta, alpha1))
    assert is_abelian(a2_switch, (theta, alpha1))


def test_zero_weight_vectors_are_never_stable(a1_switch):
    zero = index_of(a1_switch, (0,))
    assert zero not in nonzero_weight_indices(a1_switch)
    assert not is_b0_stable(a1_switch, (zero,))


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "a2_switch", "b2_signs"])
def test_matches_brute_force(request, name):
    sp = request.getfixturevalue(name)
    found = {a.phi for a in enumerate_abelian_bstable(sp)}
    assert set(bruteforce_stable_subsets(sp)) == found
    assert set(bruteforce_stable_subsets(sp, include_zero_weights=False)) == found


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "a2_switch", "b2_signs"])
def test_abelian_upper_closures_are_listed(request, name):
    sp = request.getfixturevalue(name)
    found = {a.phi for a in enumerate_abelian_bstable(sp)}
    nonzero = set(nonzero_weight_indices(sp))
    for phi in found:
        for j in nonzero - set(phi):
            closed = upper_closure(sp, set(phi) | {j})
            if closed <= nonzero and is_abelian(sp, tuple(sorted(closed))):
                assert tuple(sorted(closed)) in found


def test_max_dimension(a1_switch, a2_switch):
    assert max_abelian_dimension(a1_switch, 0)
    assert max_abelian_dimension(a1_switch, 1)
    assert not max_abelian_dimension(a1_switch, 2)
    assert max_abelian_dimension(a2_switch, 2)
    assert not max_abelian_dimension(a2_switch, 3)
    with pytest.raises(ValueError):
        max_abelian_dimension(a1_switch, 4)


def test_subspaces_of_dim(a2_switch):
    two = subspaces_of_dim(a2_switch, 2)
    assert len(two) == 2
    assert {a.mu for a in two} == {(2, 1), (1, 2)}


@pytest.mark.parametrize("name", ["a1_switch", "a1_signs", "a2_switch", "b2_signs"])
def test_generators_are_cycles(request, name):
    sp = request.getfixturevalue(name)
    cx = complex_for(sp)
    for a in enumerate_abelian_bstable(sp):
        mono = tuple(LoopVector(-HALF, j) for j in a.v_a)
        assert cx.boundary_of(mono) == {}


def test_hat_phi(a2_switch):
    top = subspaces_of_dim(a2_switch, 1)[0]
    assert top.weights == ((1, 1),)
    assert top.hat_phi() == [((-1, -1), HALF)]
