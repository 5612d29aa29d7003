"""
Módulo de Subespaços Abelianos
Enumeração dos subespaços abelianos 𝔟₀-estáveis de 𝔭 gerados por vetores
peso e contagem de Peterson no caso adjunto
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .symmetric_pair import SymmetricPair
from .utils import format_weight

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

# Φ como tupla ordenada de índices de 𝔭 com peso não nulo
WeightSubset = Tuple[int, ...]


@dataclass(frozen=True)
class AbelianSubspace:
    """Subespaço 𝔦 = ⊕_{α∈Φ} 𝔭_α com o gerador decomponível v_𝔦"""
    phi: WeightSubset
    weights: Tuple[Tuple[Fraction, ...], ...]
    is_abelian: bool
    is_b0_stable: bool

    @property
    def dim(self) -> int:
        return len(self.phi)

    @property
    def mu(self) -> Tuple[Fraction, ...]:
        """Σ_{α∈Φ} α"""
        if not self.weights:
            return ()
        return tuple(sum(col, Fraction(0)) for col in zip(*self.weights))

    @property
    def v_a(self) -> WeightSubset:
        """Monômio de Λᵖ𝔭 (coeficiente 1) com os vetores de Φ em ordem crescente"""
        return self.phi

    def hat_phi(self) -> List[Tuple[Tuple[Fraction, ...], Fraction]]:
        """Φ̂ = {½δ − α}: pares (parte finita, coeficiente de δ)"""
        return [(tuple(-x for x in w), HALF) for w in self.weights]

    def to_dict(self, rank: int) -> Dict:
        mu = self.mu or tuple(Fraction(0) for _ in range(rank))
        return {
            'dim': self.dim,
            'weights': [format_weight(w) for w in self.weights],
            'mu': list(mu),
        }


def nonzero_weight_indices(sp: SymmetricPair) -> List[int]:
    """Índices de 𝔭 com peso não nulo; cada peso tem multiplicidade um"""
    idx = [j for j, w in enumerate(sp.p_weights) if any(w)]
    seen = set()
    for j in idx:
        if sp.p_weights[j] in seen:
            raise AssertionError(f"Peso {format_weight(sp.p_weights[j])} com multiplicidade > 1")
        seen.add(sp.p_weights[j])
    return idx


def raisings(sp: SymmetricPair, j: int) -> List[Dict[int, Fraction]]:
    """Imagens [x_β, p_j] não nulas para β ∈ Δ₀⁺"""
    out = []
    for beta in sp.delta0_pos:
        v = sp.kp.get((sp.k_root_index[beta], j))
        if v:
            out.append(v)
    return out


def is_abelian(sp: SymmetricPair, phi: Sequence[int]) -> bool:
    """[𝔭_α, 𝔭_β] = 0 para todos α, β ∈ Φ"""
    return all(not sp.pp.get((a, b)) for a, b in combinations(phi, 2))


def is_b0_stable(sp: SymmetricPair, phi: Sequence[int]) -> bool:
    """
    [𝔟₀, 𝔦] ⊆ 𝔦 verificado pelos colchetes com x_β, β ∈ Δ₀⁺

    Uma imagem com peso zero sai do espaço gerado pelos vetores de Φ.
    """
    members = set(phi)
    for j in phi:
        for image in raisings(sp, j):
            if not set(image) <= members:
                return False
    return True


def _make(sp: SymmetricPair, phi: Sequence[int]) -> AbelianSubspace:
    phi = tuple(sorted(phi))
    return AbelianSubspace(
        phi=phi,
        weights=tuple(sp.p_weights[j] for j in phi),
        is_abelian=is_abelian(sp, phi),
        is_b0_stable=is_b0_stable(sp, phi),
    )


def enumerate_abelian_bstable(sp: SymmetricPair) -> List[AbelianSubspace]:
    """
    Busca em profundidade sobre conjuntos superiores do poset de elevação

    Os pesos são visitados em altura decrescente, de modo que toda elevação
    de um candidato já foi decidida; poda na primeira falha de comutação.
    """
    cached = sp.cache.get('abelian')
    if cached is not None:
        return cached

    order = sorted(nonzero_weight_indices(sp), key=lambda j: (-sum(sp.p_weights[j]), sp.p_weights[j]))
    ups = {j: raisings(sp, j) for j in order}
    found: List[WeightSubset] = []

    def dfs(k: int, chosen: List[int], members: set):
        if k == len(order):
            found.append(tuple(sorted(chosen)))
            return
        j = order[k]
        dfs(k + 1, chosen, members)
        if all(set(image) <= members for image in ups[j]) and all(not sp.pp.get((j, a)) for a in chosen):
            chosen.append(j)
            members.add(j)
            dfs(k + 1, chosen, members)
            members.discard(j)
            chosen.pop()

    dfs(0, [], set())
    result = [_make(sp, phi) for phi in sorted(found, key=lambda phi: (len(phi), phi))]
    sp.cache['abelian'] = result
    logger.info("%s: %d subespaços abelianos 𝔟₀-estáveis", sp.label, len(result))
    return result


def max_abelian_dimension(sp: SymmetricPair, p: int) -> bool:
    """Existe subespaço abeliano 𝔟₀-estável de dimensão p?"""
    if not 0 <= p <= sp.dim_p:
        raise ValueError(f"p = {p} fora de [0, {sp.dim_p}]")
    return any(a.dim == p for a in enumerate_abelian_bstable(sp))


def subspaces_of_dim(sp: SymmetricPair, p: int) -> List[AbelianSubspace]:
    return [a for a in enumerate_abelian_bstable(sp) if a.dim == p]


def peterson_count(sp: SymmetricPair) -> Tuple[int, int]:
    """(contagem, 2^posto); a igualdade só é afirmada no caso switch"""
    return len(enumerate_abelian_bstable(sp)), 2 ** sp.rank


def bruteforce_stable_subsets(sp: SymmetricPair, include_zero_weights: bool = True) -> List[WeightSubset]:
    """
    Todos os subconjuntos da base de 𝔭 que geram subespaço abeliano e
    𝔟₀-estável, incluindo direções de Cartan se pedido (dim 𝔭 pequena)
    """
    pool = list(range(sp.dim_p)) if include_zero_weights else nonzero_weight_indices(sp)
    out = []
    for r in range(len(pool) + 1):
        for phi in combinations(pool, r):
            if is_abelian(sp, phi) and is_b0_stable(sp, phi):
                out.append(tuple(phi))
    return out
