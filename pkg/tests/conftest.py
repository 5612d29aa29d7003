"""
Fixtures compartilhadas: pares simétricos pequenos construídos uma vez por sessão
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from backend.symmetric_pair import build_pair  # noqa: E402


@pytest.fixture(scope="session")
def a1_switch():
    """sl₂ ⊕ sl₂ com a troca: 𝔨 ≅ 𝔭 ≅ sl₂"""
    return build_pair("A1:switch")


@pytest.fixture(scope="session")
def a1_signs():
    """sl₂ com sinal −: 𝔨 = ℂh, 𝔭 = ℂe ⊕ ℂf"""
    return build_pair("A1:signs=-")


@pytest.fixture(scope="session")
def a2_switch():
    return build_pair("A2:switch")


@pytest.fixture(scope="session")
def b2_signs():
    """so(5) ⊃ so(4): dim 𝔭 = 4"""
    return build_pair("B2:signs=+-")
