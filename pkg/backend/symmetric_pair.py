"""
Módulo de Pares Simétricos
Decomposição 𝔤 = 𝔨 ⊕ 𝔭 de uma involução, dados de raízes de 𝔨, pesos de 𝔭,
elemento de Casimir e forma induzida em 𝔥₀*
"""

import copy
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .lie_core import (
    CartanSpec,
    CartanSpecError,
    ChevalleyBasis,
    KillingForm,
    apply_index_map,
    build_chevalley_basis,
    build_root_system,
    chevalley_anti_involution,
    killing_form,
    parse_cartan_spec,
)
from .linalg_exact import RatVector, SingularMatrixError, SparseRatMatrix, inverse, vec_add
from .utils import format_weight

logger = logging.getLogger(__name__)

Weight = Tuple[Fraction, ...]


class InvolutionError(ValueError):
    """Involução inválida ou não suportada"""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (posição {position})"
        super().__init__(message)
        self.position = position


class DominanceError(ValueError):
    """Peso não dominante integral para Δ₀⁺"""


# ==================== INVOLUÇÃO ====================

@dataclass(frozen=True)
class Involution:
    """Involução switch em 𝔰⊕𝔰 ou involução interna por sinais ε nas raízes simples"""
    kind: str
    base: CartanSpec
    signs: Tuple[int, ...] = ()

    @property
    def is_switch(self) -> bool:
        return self.kind == 'switch'

    def ambient_spec(self) -> CartanSpec:
        """Tipo de Cartan de 𝔤 (duplicado no caso switch)"""
        if self.is_switch:
            return CartanSpec(self.base.factors * 2)
        return self.base

    def __str__(self) -> str:
        if self.is_switch:
            return f"{self.base}:switch"
        return f"{self.base}:signs=" + "".join('+' if e > 0 else '-' for e in self.signs)


def parse_involution_spec(text: str) -> Involution:
    """
    Lê "A2:switch" ou "B2:signs=+-"

    O número de sinais deve ser o posto de 𝔤; todos os sinais + dariam 𝔭 = 0.
    """
    text = (text or "").strip()
    if ':' not in text:
        raise InvolutionError("Esperado '<tipo>:switch' ou '<tipo>:signs=...'", len(text))
    head, tail = text.split(':', 1)
    base = parse_cartan_spec(head)
    offset = len(head) + 1
    kind = tail.strip().lower()
    if kind == 'switch':
        return Involution('switch', base)
    if kind.startswith('signs='):
        raw = tail.strip()[len('signs='):]
        signs = []
        for k, ch in enumerate(raw):
            if ch == '+':
                signs.append(1)
            elif ch == '-':
                signs.append(-1)
            else:
                raise InvolutionError(f"Sinal inválido '{ch}'", offset + len('signs=') + k)
        if len(signs) != base.rank:
            raise InvolutionError(f"Esperados {base.rank} sinais, recebidos {len(signs)}", offset + len('signs='))
        if all(e > 0 for e in signs):
            raise InvolutionError("Involução trivial: todos os sinais + dão 𝔭 = 0", offset + len('signs='))
        return Involution('signs', base, tuple(signs))
    raise InvolutionError(f"Involução desconhecida '{tail}'", offset)


def parse_pair(text: str) -> Involution:
    """Alias usado pela linha de comando; erros de Cartan viram InvolutionError"""
    try:
        return parse_involution_spec(text)
    except CartanSpecError as e:
        raise InvolutionError(str(e)) from e


# ==================== CASIMIR ====================

@dataclass(frozen=True)
class CasimirElement:
    """Bases duais de 𝔨 para (·,·)|_𝔨: b'_i = Σ_j c_ji k_j"""
    coefficients: SparseRatMatrix
    dual_basis: Tuple[RatVector, ...]

    def terms(self) -> List[Tuple[int, int, Fraction]]:
        """Termos (i, j, c_ij) de Ω = Σ c_ij k_i k_j"""
        return [(i, j, c) for (i, j), c in sorted(self.coefficients.entries.items())]


# ==================== PAR SIMÉTRICO ====================

class SymmetricPair:
    """
    𝔤 = 𝔨 ⊕ 𝔭 com tabelas de colchetes nas bases de 𝔨 e 𝔭

    Pesos são dados em coordenadas de raízes de referência: as raízes de 𝔤
    (caso interno) ou de 𝔰 (caso switch). Cada vetor da base de 𝔨 ou 𝔭 tem um
    índice pivô em 𝔤 com coeficiente 1, usado para ler coordenadas.
    """

    def __init__(self, involution: Involution, g: ChevalleyBasis, killing: KillingForm):
        self.involution = involution
        self.g = g
        self.killing = killing
        self.tau = chevalley_anti_involution(g)
        self.sigma = self._sigma_map()
        self.perturbation: Optional[Tuple[int, int]] = None
        self.cache: Dict = {}

        self._split()
        self.dim_k = len(self.k_basis)
        self.dim_p = len(self.p_basis)

        self.h0_indices = [i for i, w in enumerate(self.k_weights) if not any(w)]
        self.rank = len(self.h0_indices)
        self.delta0_pos: List[Weight] = [w for w in self.k_weights if any(w) and _is_positive(w)]
        self.delta0_pos.sort(key=lambda w: (sum(w), tuple(-x for x in w)))
        self.k_root_index: Dict[Weight, int] = {w: i for i, w in enumerate(self.k_weights) if any(w)}
        self.delta0_simple: List[Weight] = _indecomposables(self.delta0_pos)
        self.p_weights_set = set(self.p_weights)

        self.form = self._h0_dual_form()
        self.rho0: Weight = tuple(sum((w[i] for w in self.delta0_pos), Fraction(0)) / 2
                                  for i in range(self.rank))

        self.kk: Dict[Tuple[int, int], RatVector] = {}
        self.kp: Dict[Tuple[int, int], RatVector] = {}
        self.pp: Dict[Tuple[int, int], RatVector] = {}
        self._bracket_tables()

        self.tau_k = [self.coords_k(apply_index_map(self.tau, v)) for v in self.k_basis]
        self.tau_p = [self.coords_p(apply_index_map(self.tau, v)) for v in self.p_basis]
        self.killing_k = self._gram(self.k_basis)
        self.killing_p = self._gram(self.p_basis)
        self.form_k = self._letter_form(self.k_basis)
        self.form_p = self._letter_form(self.p_basis)

        logger.info("Par %s: dim 𝔨 = %d, dim 𝔭 = %d, posto = %d", involution, self.dim_k, self.dim_p, self.rank)

    # ==================== CONSTRUÇÃO ====================

    @property
    def is_switch(self) -> bool:
        return self.involution.is_switch

    @property
    def label(self) -> str:
        return str(self.involution)

    def _partner(self, idx: int) -> int:
        g = self.g
        d = self.involution.base.rank
        if g.is_cartan(idx):
            i = idx - g.n_pos
            return g.h_index(i + d if i < d else i - d)
        w = g.weights[idx]
        if any(w[:d]):
            shifted = tuple([0] * d) + tuple(w[:d])
        else:
            shifted = tuple(w[d:]) + tuple([0] * d)
        return g.root_index[shifted]

    def _sigma_map(self) -> List[Tuple[int, int]]:
        g = self.g
        out = []
        for idx in range(g.dim):
            if self.involution.is_switch:
                out.append((self._partner(idx), 1))
            else:
                sign = 1
                for e, c in zip(self.involution.signs, g.weights[idx]):
                    if e < 0 and c % 2:
                        sign = -sign
                out.append((idx, sign))
        return out

    def apply_sigma(self, u: RatVector) -> RatVector:
        out: RatVector = {}
        for i, x in u.items():
            j, s = self.sigma[i]
            out[j] = out.get(j, 0) + s * x
        return {i: x for i, x in out.items() if x}

    def _split(self):
        g = self.g
        one = Fraction(1)
        if self.involution.is_switch:
            d = self.involution.base.rank
            first = [idx for idx in range(g.dim)
                     if (g.is_cartan(idx) and idx - g.n_pos < d)
                     or (not g.is_cartan(idx) and any(g.weights[idx][:d]))]
            self.k_basis = [{i: one, self._partner(i): one} for i in first]
            self.p_basis = [{i: one, self._partner(i): -one} for i in first]
            self.k_pivots = list(first)
            self.p_pivots = list(first)
            self.k_labels = [f"k:{g.labels[i]}" for i in first]
            self.p_labels = [f"p:{g.labels[i]}" for i in first]
            self.k_weights = [tuple(Fraction(x) for x in g.weights[i][:d]) for i in first]
            self.p_weights = list(self.k_weights)
            self.ref_embed = lambda mu: tuple(mu) + tuple([0] * d)
        else:
            plus = [idx for idx in range(g.dim) if self.sigma[idx][1] > 0]
            minus = [idx for idx in range(g.dim) if self.sigma[idx][1] < 0]
            self.k_basis = [{i: one} for i in plus]
            self.p_basis = [{i: one} for i in minus]
            self.k_pivots = plus
            self.p_pivots = minus
            self.k_labels = [g.labels[i] for i in plus]
            self.p_labels = [g.labels[i] for i in minus]
            self.k_weights = [tuple(Fraction(x) for x in g.weights[i]) for i in plus]
            self.p_weights = [tuple(Fraction(x) for x in g.weights[i]) for i in minus]
            self.ref_embed = lambda mu: tuple(mu)
        if not self.p_basis:
            raise InvolutionError("𝔭 = 0: involução trivial")

    def _coords(self, vec: RatVector, basis, pivots, name: str) -> RatVector:
        coords = {j: vec[piv] for j, piv in enumerate(pivots) if vec.get(piv)}
        rebuilt: RatVector = {}
        for j, c in coords.items():
            rebuilt = vec_add(rebuilt, basis[j], c)
        if rebuilt != {i: x for i, x in vec.items() if x}:
            raise InvolutionError(f"Vetor fora de 𝔨/𝔭: esperado em {name}")
        return coords

    def coords_k(self, vec: RatVector) -> RatVector:
        return self._coords(vec, self.k_basis, self.k_pivots, '𝔨')

    def coords_p(self, vec: RatVector) -> RatVector:
        return self._coords(vec, self.p_basis, self.p_pivots, '𝔭')

    def h0_vectors(self) -> List[RatVector]:
        return [self.k_basis[i] for i in self.h0_indices]

    def weight_on_h0(self, mu: Sequence, i: int) -> Fraction:
        """μ(H_i) para o i-ésimo vetor de 𝔥₀"""
        emb = self.ref_embed(mu)
        rs = self.g.root_system
        total = Fraction(0)
        for idx, c in self.h0_vectors()[i].items():
            total += c * sum(Fraction(emb[j]) * rs.cartan_matrix[idx - self.g.n_pos][j] for j in range(len(emb)))
        return total

    def _h0_dual_form(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """F = Wᵀ K_H⁻¹ W com W[i][j] = α_j(H_i)"""
        n = self.rank
        unit = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
        w = [[self.weight_on_h0(unit[j], i) for j in range(n)] for i in range(n)]
        hs = self.h0_vectors()
        kh = SparseRatMatrix.from_dense([[self.killing.value(a, b) for b in hs] for a in hs])
        try:
            kh_inv = inverse(kh).to_dense()
        except SingularMatrixError as e:
            raise InvolutionError("Forma de Killing degenerada em 𝔥₀") from e
        return tuple(
            tuple(sum((w[k][i] * kh_inv[k][l] * w[l][j] for k in range(n) for l in range(n)), Fraction(0))
                  for j in range(n))
            for i in range(n)
        )

    def _bracket_tables(self):
        g = self.g
        for i, a in enumerate(self.k_basis):
            for j, b in enumerate(self.k_basis):
                v = self.coords_k(g.bracket(a, b))
                if v:
                    self.kk[(i, j)] = v
            for j, b in enumerate(self.p_basis):
                v = self.coords_p(g.bracket(a, b))
                if v:
                    self.kp[(i, j)] = v
        for i, a in enumerate(self.p_basis):
            for j, b in enumerate(self.p_basis):
                v = self.coords_k(g.bracket(a, b))
                if v:
                    self.pp[(i, j)] = v

    def _gram(self, basis) -> SparseRatMatrix:
        n = len(basis)
        return SparseRatMatrix(n, n, {(i, j): self.killing.value(basis[i], basis[j])
                                      for i in range(n) for j in range(n)})

    def _letter_form(self, basis) -> Dict[Tuple[int, int], Fraction]:
        """(x, τ y) nos vetores da base"""
        out = {}
        for i, a in enumerate(basis):
            for j, b in enumerate(basis):
                v = self.killing.value(a, apply_index_map(self.tau, b))
                if v:
                    out[(i, j)] = v
        return out

    # ==================== COLCHETES EM 𝔨 ⊕ 𝔭 ====================

    def bracket_split(self, u: Tuple[RatVector, RatVector], v: Tuple[RatVector, RatVector]):
        """Colchete de elementos dados como (coords em 𝔨, coords em 𝔭)"""
        uk, up = u
        vk, vp = v
        out_k: RatVector = {}
        out_p: RatVector = {}
        for i, x in uk.items():
            for j, y in vk.items():
                b = self.kk.get((i, j))
                if b:
                    out_k = vec_add(out_k, b, x * y)
            for j, y in vp.items():
                b = self.kp.get((i, j))
                if b:
                    out_p = vec_add(out_p, b, x * y)
        for i, x in up.items():
            for j, y in vk.items():
                b = self.kp.get((j, i))
                if b:
                    out_p = vec_add(out_p, b, -x * y)
            for j, y in vp.items():
                b = self.pp.get((i, j))
                if b:
                    out_k = vec_add(out_k, b, x * y)
        return out_k, out_p

    def action_matrix_p(self, i: int) -> SparseRatMatrix:
        """Matriz de ad(k_i) em 𝔭"""
        entries = {}
        for (a, j), v in self.kp.items():
            if a == i:
                for r, c in v.items():
                    entries[(r, j)] = c
        return SparseRatMatrix(self.dim_p, self.dim_p, entries)

    def action_matrix_k(self, i: int) -> SparseRatMatrix:
        """Matriz de ad(k_i) em 𝔨"""
        entries = {}
        for (a, j), v in self.kk.items():
            if a == i:
                for r, c in v.items():
                    entries[(r, j)] = c
        return SparseRatMatrix(self.dim_k, self.dim_k, entries)

    # ==================== FORMA EM 𝔥₀* ====================

    def pairing(self, mu: Sequence, eta: Sequence) -> Fraction:
        total = Fraction(0)
        for i, x in enumerate(mu):
            if x:
                for j, y in enumerate(eta):
                    if y:
                        total += Fraction(x) * Fraction(y) * self.form[i][j]
        return total

    def is_dominant(self, xi: Sequence) -> bool:
        for beta in self.delta0_simple:
            c = 2 * self.pairing(xi, beta) / self.pairing(beta, beta)
            if c < 0 or c.denominator != 1:
                return False
        return True

    # ==================== CASIMIR ====================

    @property
    def casimir(self) -> CasimirElement:
        cached = self.cache.get('casimir')
        if cached is None:
            cached = casimir_element(self)
            self.cache['casimir'] = cached
        return cached

    def __repr__(self) -> str:
        return f"SymmetricPair({self.label}, dim 𝔨={self.dim_k}, dim 𝔭={self.dim_p})"


def _is_positive(w: Sequence) -> bool:
    return all(x >= 0 for x in w) and any(w)


def _indecomposables(positive: List[Weight]) -> List[Weight]:
    pos = set(positive)
    out = []
    for w in positive:
        if not any(tuple(a - b for a, b in zip(w, v)) in pos for v in positive):
            out.append(w)
    return out


def build_ambient(inv: Involution) -> Tuple[ChevalleyBasis, KillingForm]:
    cb = build_chevalley_basis(build_root_system(inv.ambient_spec()))
    return cb, killing_form(cb)


def apply_involution(inv: Involution, g: Optional[ChevalleyBasis] = None,
                     killing: Optional[KillingForm] = None) -> SymmetricPair:
    """Separa os autoespaços ±1 de σ e monta os dados de 𝔨 e 𝔭"""
    if g is None:
        g, killing = build_ambient(inv)
    elif killing is None:
        killing = killing_form(g)
    sp = SymmetricPair(inv, g, killing)
    if not sigma_squared_is_identity(sp):
        raise InvolutionError("σ² ≠ id")
    return sp


def build_pair(text: str) -> SymmetricPair:
    """Atalho: especificação textual → par simétrico"""
    return apply_involution(parse_pair(text))


# ==================== OPERAÇÕES ====================

def casimir_element(sp: SymmetricPair) -> CasimirElement:
    """Bases duais de 𝔨 para a restrição de κ; c = (K_𝔨)⁻¹"""
    try:
        c = inverse(sp.killing_k)
    except SingularMatrixError as e:
        raise InvolutionError("Forma de Killing degenerada em 𝔨") from e
    dual = tuple({j: c.get(j, i) for j in range(sp.dim_k) if c.get(j, i)} for i in range(sp.dim_k))
    return CasimirElement(coefficients=c, dual_basis=dual)


def casimir_duality_residual(sp: SymmetricPair) -> Fraction:
    """Σ |(b_i, b'_j) − δ_ij|"""
    total = Fraction(0)
    for i in range(sp.dim_k):
        for j in range(sp.dim_k):
            v = sum((sp.killing_k.get(i, l) * c for l, c in sp.casimir.dual_basis[j].items()), Fraction(0))
            total += abs(v - (1 if i == j else 0))
    return total


def casimir_on_p(sp: SymmetricPair) -> SparseRatMatrix:
    """Ω_𝔨 agindo em 𝔭"""
    mats = [sp.action_matrix_p(i) for i in range(sp.dim_k)]
    out = SparseRatMatrix.zero(sp.dim_p, sp.dim_p)
    for i, j, c in sp.casimir.terms():
        out = out + (mats[i] @ mats[j]).scale(c)
    return out


def casimir_scalar(sp: SymmetricPair, xi: Sequence) -> Fraction:
    """(ξ, ξ) + 2(ρ₀, ξ) para ξ dominante integral"""
    xi = tuple(Fraction(x) for x in xi)
    if len(xi) != sp.rank:
        raise DominanceError(f"Peso com {len(xi)} coordenadas; esperado {sp.rank}")
    if not sp.is_dominant(xi):
        raise DominanceError(f"Peso {format_weight(xi)} não é dominante integral")
    return sp.pairing(xi, xi) + 2 * sp.pairing(sp.rho0, xi)


def weyl_dimension(sp: SymmetricPair, xi: Sequence) -> int:
    """Fórmula de Weyl sobre Δ₀⁺ (1 quando Δ₀⁺ = ∅)"""
    xi = tuple(Fraction(x) for x in xi)
    shifted = tuple(a + b for a, b in zip(xi, sp.rho0))
    dim = Fraction(1)
    for beta in sp.delta0_pos:
        dim *= sp.pairing(shifted, beta) / sp.pairing(sp.rho0, beta)
    if dim.denominator != 1:
        raise DominanceError(f"Dimensão de Weyl não inteira para {format_weight(xi)}")
    return int(dim)


def inner_product_h0_dual(sp: SymmetricPair) -> Tuple[Tuple[Fraction, ...], ...]:
    return sp.form


def sigma_squared_is_identity(sp: SymmetricPair) -> bool:
    return all(sp.apply_sigma(sp.apply_sigma({i: Fraction(1)})) == {i: Fraction(1)} for i in range(sp.g.dim))


def sigma_is_automorphism(sp: SymmetricPair) -> bool:
    """σ[x,y] = [σx,σy] e (σx,σy) = (x,y) em todos os pares da base"""
    g = sp.g
    for i in range(g.dim):
        si = sp.apply_sigma({i: Fraction(1)})
        for j in range(g.dim):
            sj = sp.apply_sigma({j: Fraction(1)})
            if sp.apply_sigma(g.bracket_basis(i, j)) != g.bracket(si, sj):
                return False
            if sp.killing.value(si, sj) != sp.killing.gram.get(i, j):
                return False
    return True


def grading_holds(sp: SymmetricPair) -> bool:
    """[𝔨,𝔨] ⊆ 𝔨, [𝔨,𝔭] ⊆ 𝔭, [𝔭,𝔭] ⊆ 𝔨 recalculados no nível de 𝔤"""
    g = sp.g
    try:
        for a in sp.k_basis:
            for b in sp.k_basis:
                sp.coords_k(g.bracket(a, b))
            for b in sp.p_basis:
                sp.coords_p(g.bracket(a, b))
        for a in sp.p_basis:
            for b in sp.p_basis:
                sp.coords_k(g.bracket(a, b))
    except InvolutionError:
        return False
    return True


def weights_act_correctly(sp: SymmetricPair) -> bool:
    """[H_i, p_j] = μ_j(H_i) p_j para todo vetor de 𝔭"""
    for a, hi in enumerate(sp.h0_indices):
        for j, mu in enumerate(sp.p_weights):
            expected = sp.weight_on_h0(mu, a)
            got = sp.kp.get((hi, j), {})
            if got != ({j: expected} if expected else {}):
                return False
    return True


def contravariance_residual(sp: SymmetricPair, a: RatVector, x: RatVector, y: RatVector) -> Fraction:
    """
    {[a,x], y} − {x, [σ₀(a), y]} com {u, v} = (u, τ v) e σ₀ = τ na parte finita

    Equivale a {[a,x],y} + {x,[ω(a),y]} = 0 para a involução de Chevalley
    ω = −τ; o mesmo vale para a forma nos laços pois σ₀(a_r) = τ(a)_{−r}.
    """
    g = sp.g
    tau = sp.tau

    def form(u, v):
        return sp.killing.value(u, apply_index_map(tau, v))

    return form(g.bracket(a, x), y) - form(x, g.bracket(apply_index_map(tau, a), y))


def chevalley_generators(sp: SymmetricPair) -> List[RatVector]:
    """e_i, h_i, f_i de 𝔤"""
    g = sp.g
    out = []
    for r in g.root_system.simple_roots:
        out.append({g.root_index[r]: Fraction(1)})
        out.append({g.root_index[tuple(-x for x in r)]: Fraction(1)})
    for i in range(g.rank):
        out.append({g.h_index(i): Fraction(1)})
    return out


def contravariance_on_generators(sp: SymmetricPair) -> bool:
    gens = chevalley_generators(sp)
    return all(contravariance_residual(sp, a, x, y) == 0 for a in gens for x in gens for y in gens)


def jacobi_split_residual(sp: SymmetricPair, u, v, w):
    """Resíduo de Jacobi com as tabelas de 𝔨 ⊕ 𝔭 (sensível a perturbações)"""
    def add(p, q):
        return vec_add(p[0], q[0]), vec_add(p[1], q[1])

    r = sp.bracket_split(u, sp.bracket_split(v, w))
    r = add(r, sp.bracket_split(v, sp.bracket_split(w, u)))
    r = add(r, sp.bracket_split(w, sp.bracket_split(u, v)))
    return r


def split_basis(sp: SymmetricPair):
    """Base de 𝔨 ⊕ 𝔭 como pares (coords em 𝔨, coords em 𝔭)"""
    one = Fraction(1)
    return ([({i: one}, {}) for i in range(sp.dim_k)]
            + [({}, {j: one}) for j in range(sp.dim_p)])


def jacobi_holds(sp: SymmetricPair) -> bool:
    basis = split_basis(sp)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            for c in range(b + 1, len(basis)):
                rk, rp = jacobi_split_residual(sp, basis[a], basis[b], basis[c])
                if rk or rp:
                    return False
    return True


def perturbed(sp: SymmetricPair) -> SymmetricPair:
    """
    Cópia de controle negativo: dobra um colchete [p_a, p_b] ∈ 𝔨

    Killing, Casimir e Gram ficam intactos; só as tabelas de 𝔭 × 𝔭 mudam.
    """
    keys = sorted(k for k in sp.pp if k[0] < k[1])
    if not keys:
        raise InvolutionError("Nenhum colchete [𝔭,𝔭] não nulo para perturbar")
    a, b = keys[0]
    clone = copy.copy(sp)
    clone.pp = dict(sp.pp)
    clone.pp[(a, b)] = {k: 2 * v for k, v in sp.pp[(a, b)].items()}
    clone.pp[(b, a)] = {k: 2 * v for k, v in sp.pp[(b, a)].items()}
    clone.cache = {'casimir': sp.casimir}
    clone.perturbation = (a, b)
    logger.warning("Controle negativo: colchete [%s, %s] dobrado", sp.p_labels[a], sp.p_labels[b])
    return clone


def load_pair(pair_text: str, negative_control: bool = False) -> SymmetricPair:
    """Par da linha de comando, perturbado quando o controle negativo está ativo"""
    sp = build_pair(pair_text)
    return perturbed(sp) if negative_control else sp
