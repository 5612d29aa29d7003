"""
Módulo do Grupo de Weyl Afim
Raízes reais de L̂(𝔤,σ), raízes simples Π̂, corraízes, ρ = ½Λ₀ + ρ₀,
reflexões, conjuntos de inversão e busca de w_𝔦 com N(w_𝔦) = Φ̂_𝔦
"""

import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .abelian_enum import AbelianSubspace
from .symmetric_pair import SymmetricPair
from .utils import format_affine

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class RootBoundError(ValueError):
    """Raiz fora do limite de valores de d armazenado"""


class IsotropicRootError(ValueError):
    """Reflexão em raiz imaginária"""


class NonReducedWordError(ValueError):
    """Palavra não reduzida"""


class PeelingStalledError(ValueError):
    """Nenhuma raiz simples no conjunto alvo"""


class WeylMismatchError(ValueError):
    """As duas avaliações de w(ρ) − ρ discordam"""


@dataclass(frozen=True, order=True)
class AffineWeight:
    """μ̄ + aδ + bΛ₀ em coordenadas (parte finita, coef. de δ, coef. de Λ₀)"""
    finite: Tuple[Fraction, ...]
    delta: Fraction = Fraction(0)
    lambda0: Fraction = Fraction(0)

    def __add__(self, other: 'AffineWeight') -> 'AffineWeight':
        return AffineWeight(tuple(a + b for a, b in zip(self.finite, other.finite)),
                            self.delta + other.delta, self.lambda0 + other.lambda0)

    def __neg__(self) -> 'AffineWeight':
        return AffineWeight(tuple(-a for a in self.finite), -self.delta, -self.lambda0)

    def __sub__(self, other: 'AffineWeight') -> 'AffineWeight':
        return self + (-other)

    def scale(self, c) -> 'AffineWeight':
        c = Fraction(c)
        return AffineWeight(tuple(a * c for a in self.finite), self.delta * c, self.lambda0 * c)

    def is_zero(self) -> bool:
        return not any(self.finite) and not self.delta and not self.lambda0

    def __str__(self) -> str:
        return format_affine(self.finite, self.delta, self.lambda0)

    def to_dict(self) -> Dict:
        return {'finite': list(self.finite), 'delta': self.delta, 'lambda0': self.lambda0}


def make_weight(finite: Sequence, delta=0, lambda0=0) -> AffineWeight:
    return AffineWeight(tuple(Fraction(x) for x in finite), Fraction(delta), Fraction(lambda0))


@dataclass(frozen=True)
class WeylWord:
    """Palavra em reflexões simples com conjunto de inversão"""
    word: Tuple[int, ...]
    inversions: Tuple[AffineWeight, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def to_dict(self) -> Dict:
        return {'word': list(self.word), 'inversions': [str(r) for r in self.inversions]}


class AffineRootSet:
    """Raízes positivas até o limite de d, raízes simples e dados de corraízes"""

    def __init__(self, sp: SymmetricPair, d_bound: Fraction):
        self.sp = sp
        self.d_bound = Fraction(d_bound)
        self.rank = sp.rank
        self.delta0 = set(sp.delta0_pos) | {tuple(-x for x in w) for w in sp.delta0_pos}
        self.p_nonzero = {w for w in sp.p_weights if any(w)}
        self.zero_p_mult = sum(1 for w in sp.p_weights if not any(w))
        self.real_positive: List[AffineWeight] = []
        self.imaginary: List[Tuple[AffineWeight, int]] = []
        self._enumerate()
        self.positive_set: Set[AffineWeight] = set(self.real_positive)
        self.simple_roots: List[AffineWeight] = self._find_simple()
        self.rho = AffineWeight(tuple(sp.rho0), Fraction(0), HALF)

    # ==================== ENUMERAÇÃO ====================

    def _enumerate(self):
        zero = tuple(Fraction(0) for _ in range(self.rank))
        for w in self.sp.delta0_pos:
            self.real_positive.append(AffineWeight(tuple(w), Fraction(0)))
        s = HALF
        while s <= self.d_bound:
            if s.denominator == 1:
                finite = sorted(self.delta0)
                mult = self.rank
            else:
                finite = sorted(self.p_nonzero)
                mult = self.zero_p_mult
            for w in finite:
                self.real_positive.append(AffineWeight(tuple(w), s))
            if mult:
                self.imaginary.append((AffineWeight(zero, s), mult))
            s += HALF

    def _find_simple(self) -> List[AffineWeight]:
        candidates = set(self.real_positive) | {im for im, _ in self.imaginary}
        simple = []
        for r in self.real_positive:
            if r.delta > 1:
                continue
            decomposable = any((r - q) in candidates for q in candidates if q != r)
            if not decomposable:
                simple.append(r)
        simple.sort(key=lambda r: (0 if r.delta > 0 else 1, r.delta, sum(r.finite), r.finite))
        if len(simple) != self.rank + 1:
            raise RootBoundError(f"Encontradas {len(simple)} raízes simples; esperadas {self.rank + 1}")
        return simple

    # ==================== FORMA E CORRAÍZES ====================

    def pair(self, a: AffineWeight, b: AffineWeight) -> Fraction:
        """(μ̄+aδ+bΛ₀, μ̄'+a'δ+b'Λ₀) = (μ̄,μ̄') + ab' + a'b"""
        return self.sp.pairing(a.finite, b.finite) + a.delta * b.lambda0 + b.delta * a.lambda0

    def coroot_value(self, lam: AffineWeight, i: int) -> Fraction:
        """λ(α_i^∨) = 2(λ, α_i)/(α_i, α_i)"""
        a = self.simple_roots[i]
        return 2 * self.pair(lam, a) / self.pair(a, a)

    def coroot_value_explicit(self, lam: AffineWeight, i: int) -> Fraction:
        """α_i^∨ = (2s_i/(ᾱ_i,ᾱ_i)) c + h_{ᾱ_i}, com λ(c) = coef. de Λ₀"""
        a = self.simple_roots[i]
        norm = self.sp.pairing(a.finite, a.finite)
        return 2 * a.delta * lam.lambda0 / norm + 2 * self.sp.pairing(lam.finite, a.finite) / norm

    def is_positive(self, r: AffineWeight) -> bool:
        """Pertinência a Δ̂⁺ para raízes reais"""
        if r.lambda0:
            return False
        if r.delta > self.d_bound:
            raise RootBoundError(f"Raiz {r} além do limite d ≤ {self.d_bound}")
        if r.delta < 0:
            return False
        return r in self.positive_set

    def is_root(self, r: AffineWeight) -> bool:
        return self.is_positive(r) or self.is_positive(-r)

    # ==================== GRUPO DE WEYL ====================

    def reflect_simple(self, lam: AffineWeight, i: int) -> AffineWeight:
        return lam - self.simple_roots[i].scale(self.coroot_value(lam, i))

    def apply_word(self, word: Sequence[int], lam: AffineWeight) -> AffineWeight:
        """w(λ) = s_{i1}(s_{i2}(…s_{ik}(λ)))"""
        for i in reversed(word):
            lam = self.reflect_simple(lam, i)
        return lam

    def apply_inverse(self, word: Sequence[int], lam: AffineWeight) -> AffineWeight:
        for i in word:
            lam = self.reflect_simple(lam, i)
        return lam

    def inversion_set(self, word: Sequence[int]) -> WeylWord:
        """N(s_{i1}…s_{ik}) = {α_{i1}, s_{i1}α_{i2}, …} com verificação de redução"""
        inv: List[AffineWeight] = []
        seen = set()
        for k, i in enumerate(word):
            r = self.apply_word(word[:k], self.simple_roots[i])
            if not self.is_positive(r) or r in seen:
                raise NonReducedWordError(f"Palavra {list(word)} não reduzida na posição {k}")
            seen.add(r)
            inv.append(r)
        return WeylWord(tuple(word), tuple(inv))

    def in_w_prime(self, word: Sequence[int]) -> bool:
        """w⁻¹(Δ₀⁺) ⊆ Δ̂⁺"""
        for beta in self.sp.delta0_pos:
            if not self.is_positive(self.apply_inverse(word, AffineWeight(tuple(beta), Fraction(0)))):
                return False
        return True

    def reduced_words(self, max_length: int) -> List[WeylWord]:
        """Um representante reduzido por elemento, por busca em largura"""
        out = [WeylWord((), ())]
        seen = {self.rho}
        queue = deque([()])
        while queue:
            word = queue.popleft()
            if len(word) == max_length:
                continue
            for i in range(len(self.simple_roots)):
                cand = word + (i,)
                image = self.apply_word(cand, self.rho)
                if image in seen:
                    continue
                try:
                    ww = self.inversion_set(cand)
                except NonReducedWordError:
                    continue
                seen.add(image)
                out.append(ww)
                queue.append(cand)
        return out


def build_affine_roots(sp: SymmetricPair, d_bound=Fraction(3)) -> AffineRootSet:
    d_bound = Fraction(d_bound)
    if d_bound < 1:
        raise RootBoundError("d_bound deve ser ≥ 1")
    cached = sp.cache.get(('affine', d_bound))
    if cached is not None:
        return cached
    roots = AffineRootSet(sp, d_bound)
    sp.cache[('affine', d_bound)] = roots
    logger.info("%s: Π̂ = [%s]", sp.label, ", ".join(str(r) for r in roots.simple_roots))
    return roots


def reflect(lam: AffineWeight, root: AffineWeight, roots: AffineRootSet) -> AffineWeight:
    """s_α(λ) = λ − (2(λ,α)/(α,α)) α"""
    norm = roots.pair(root, root)
    if norm == 0:
        raise IsotropicRootError(f"Raiz isotrópica {root}")
    return lam - root.scale(2 * roots.pair(lam, root) / norm)


def inversion_set(roots: AffineRootSet, word: Sequence[int]) -> FrozenSet[AffineWeight]:
    return frozenset(roots.inversion_set(tuple(word)).inversions)


def hat_phi(subspace: AbelianSubspace) -> FrozenSet[AffineWeight]:
    return frozenset(AffineWeight(fin, d) for fin, d in subspace.hat_phi())


def find_w_for_subspace(roots: AffineRootSet, subspace: AbelianSubspace) -> WeylWord:
    """
    Descasca o alvo: escolhe α_i ∈ T, troca T por s_i(T ∖ {α_i}) e repete

    O resultado w = s_{i1}…s_{ik} tem N(w) = Φ̂_𝔦.
    """
    target = set(hat_phi(subspace))
    simple_pos = {r: i for i, r in enumerate(roots.simple_roots)}
    word: List[int] = []
    while target:
        pick = next((simple_pos[r] for r in sorted(target) if r in simple_pos), None)
        if pick is None:
            raise PeelingStalledError(f"Descascamento parado em {sorted(str(r) for r in target)}")
        rest = target - {roots.simple_roots[pick]}
        target = set()
        for r in rest:
            image = roots.reflect_simple(r, pick)
            if not roots.is_positive(image):
                raise PeelingStalledError(f"Reflexão de {r} saiu de Δ̂⁺")
            target.add(image)
        word.append(pick)
    return roots.inversion_set(tuple(word))


def w_rho_minus_rho(roots: AffineRootSet, word: Sequence[int]) -> AffineWeight:
    """w(ρ) − ρ por ação direta e por −Σ_{N(w)} α; as duas devem coincidir"""
    direct = roots.apply_word(word, roots.rho) - roots.rho
    total = make_weight([0] * roots.rank)
    for r in roots.inversion_set(tuple(word)).inversions:
        total = total - r
    if direct != total:
        raise WeylMismatchError(f"w(ρ)−ρ = {direct} mas −ΣN(w) = {total}")
    return direct


def rho_checks(roots: AffineRootSet) -> Dict:
    """ρ(α_i^∨) por ambas as fórmulas e ρ(d)"""
    values = [roots.coroot_value(roots.rho, i) for i in range(len(roots.simple_roots))]
    explicit = [roots.coroot_value_explicit(roots.rho, i) for i in range(len(roots.simple_roots))]
    return {
        'rho_coroot': values,
        'rho_coroot_explicit': explicit,
        'rho_d': roots.rho.delta,
        'ok': all(v == 1 for v in values) and values == explicit and roots.rho.delta == 0,
    }


def inversion_sets_determine_elements(roots: AffineRootSet, max_length: int) -> bool:
    """Palavras reduzidas de mesmo N(w) representam o mesmo elemento"""
    by_set: Dict[FrozenSet[AffineWeight], AffineWeight] = {}
    by_elem: Dict[AffineWeight, FrozenSet[AffineWeight]] = {}

    def words(length):
        if length == 0:
            yield ()
            return
        for w in words(length - 1):
            for i in range(len(roots.simple_roots)):
                yield w + (i,)

    for length in range(max_length + 1):
        for w in words(length):
            try:
                n = frozenset(roots.inversion_set(w).inversions)
            except NonReducedWordError:
                continue
            image = roots.apply_word(w, roots.rho)
            if by_set.setdefault(n, image) != image:
                return False
            if by_elem.setdefault(image, n) != n:
                return False
            if len(n) != len(w):
                return False
    return True
