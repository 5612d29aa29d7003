"""
Testes de sistemas de raízes, base de Chevalley e forma de Killing
"""

from fractions import Fraction
from itertools import product

import pytest

from backend.lie_core import (
    CartanSpecError,
    build_lie_algebra,
    build_root_system,
    cartan_matrix,
    chevalley_anti_involution,
    jacobi_residual,
    killing_invariance_residual,
    parse_cartan_spec,
)


# ==================== TIPO DE CARTAN ====================

def test_parse_product_and_case():
    assert parse_cartan_spec("A1xA1").factors == (('A', 1), ('A', 1))
    assert parse_cartan_spec("b2").factors == (('B', 2),)
    assert str(parse_cartan_spec("g2")) == "G2"


@pytest.mark.parametrize("text,position", [
    ("Z9", 0),
    ("A0", 1),
    ("E5", 1),
    ("A1x", 3),
    ("A1xQ2", 3),
    ("", 0),
])
def test_parse_errors_report_position(text, position):
    with pytest.raises(CartanSpecError) as exc:
        parse_cartan_spec(text)
    assert exc.value.position == position


def test_cartan_matrix_g2():
    assert cartan_matrix(parse_cartan_spec("G2")) == [[2, -3], [-1, 2]]


def test_cartan_matrix_is_block_diagonal():
    a = cartan_matrix(parse_cartan_spec("A1xA2"))
    assert a[0][1:] == [0, 0]
    assert a[1][1:] == [2, -1]


# ==================== RAÍZES ====================

@pytest.mark.parametrize("text,count", [
    ("A1", 1), ("A2", 3), ("A3", 6), ("B2", 4), ("C3", 9), ("D4", 12), ("G2", 6), ("A1xA1", 2),
])
def test_positive_root_counts(text, count):
    assert len(build_root_system(parse_cartan_spec(text)).positive_roots) == count


def test_a2_roots_ordered_by_height():
    rs = build_root_system(parse_cartan_spec("A2"))
    assert rs.positive_roots == ((1, 0), (0, 1), (1, 1))
    assert rs.highest_roots == [(1, 1)]


def test_g2_highest_root():
    rs = build_root_system(parse_cartan_spec("G2"))
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert rs.highest_roots == [(3, 2)]


def test_highest_root_per_component():
    rs = build_root_system(parse_cartan_spec("A1xA2"))
    assert rs.highest_roots == [(1, 0, 0), (0, 1, 1)]


# ==================== BASE DE CHEVALLEY ====================

def test_sl2_brackets():
    cb, _ = build_lie_algebra("A1")
    e, h, f = 0, 1, 2
    assert cb.labels == ["e(α1)", "h1", "f(α1)"]
    assert cb.bracket_basis(e, f) == {h: 1}
    assert cb.bracket_basis(h, e) == {e: 2}
    assert cb.bracket_basis(h, f) == {f: -2}


def test_a2_structure_constants():
    cb, _ = build_lie_algebra("A2")
    n = cb.structure_constant((1, 0), (0, 1))
    assert n in (1, -1)
    assert cb.structure_constant((0, 1), (1, 0)) == -n
    assert cb.structure_constant((1, 0), (1, 1)) == 0


@pytest.mark.parametrize("text", ["A2", "B2", "G2"])
def test_jacobi_identity(text):
    cb, _ = build_lie_algebra(text)
    for i, j, k in product(range(cb.dim), repeat=3):
        assert jacobi_residual(cb, i, j, k) == {}


def test_g2_structure_constants_match_root_strings():
    cb, _ = build_lie_algebra("G2")
    rs = cb.root_system
    roots = list(rs.positive_roots) + [tuple(-x for x in r) for r in rs.positive_roots]
    for a in roots:
        for b in roots:
            s = tuple(x + y for x, y in zip(a, b))
            if not rs.is_root(s):
                continue
            # |N_{a,b}| = p + 1, p maior inteiro com b − p·a raiz
            p = 0
            while rs.is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
                p += 1
            assert abs(cb.structure_constant(a, b)) == p + 1


def test_anti_involution_swaps_e_and_f():
    cb, _ = build_lie_algebra("A2")
    tau = chevalley_anti_involution(cb)
    assert tau[cb.root_index[(1, 1)]] == cb.root_index[(-1, -1)]
    assert tau[cb.h_index(0)] == cb.h_index(0)
    assert all(tau[tau[i]] == i for i in range(cb.dim))


# ==================== FORMA DE KILLING ====================

def test_sl2_killing_values():
    cb, kf = build_lie_algebra("A1")
    assert kf.gram.get(1, 1) == 8
    assert kf.gram.get(0, 2) == 4
    assert kf.gram.get(0, 0) == 0
    assert kf.pairing((1,), (1,)) == Fraction(1, 2)


def test_sl3_killing_on_roots():
    _, kf = build_lie_algebra("A2")
    assert kf.pairing((1, 0), (1, 0)) == Fraction(1, 3)
    assert kf.pairing((1, 0), (0, 1)) == Fraction(-1, 6)


def test_killing_is_symmetric_and_invariant():
    cb, kf = build_lie_algebra("A2")
    assert kf.gram.is_symmetric()
    for i, j, k in product(range(cb.dim), repeat=3):
        assert killing_invariance_residual(cb, kf, i, j, k) == 0


def test_b2_root_lengths():
    _, kf = build_lie_algebra("B2")
    long_sq = kf.pairing((1, 0), (1, 0))
    short_sq = kf.pairing((0, 1), (0, 1))
    assert long_sq == 2 * short_sq
    assert long_sq == Fraction(1, 3)
