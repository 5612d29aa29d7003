"""
Módulo do Complexo Exterior
Álgebra exterior bigraduada Λ^(p,s)𝔲⁻: bases de monômios, bordo de
Chevalley-Eilenberg, Gram da forma contravariante, adjunta, Laplaciano,
Casimir e ação do elemento de escala
"""

import logging
import threading
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from .linalg_exact import (
    SparseRatMatrix,
    gram_adjoint,
    inverse,
    nullspace,
    span_equal,
    vec_add,
)
from .symmetric_pair import SymmetricPair
from .utils import format_rational

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class LoopVector(NamedTuple):
    """x_r = tʳ⊗x: energia inteira ↔ vetor de 𝔨, semi-inteira ↔ vetor de 𝔭"""
    energy: Fraction
    index: int

    @property
    def in_k(self) -> bool:
        return self.energy.denominator == 1


ExtMonomial = Tuple[LoopVector, ...]
ExtVector = Dict[ExtMonomial, Fraction]


class BidegreeSpace(NamedTuple):
    p: int
    s: Fraction
    basis: Tuple[ExtMonomial, ...]
    position: Dict[ExtMonomial, int]

    @property
    def dim(self) -> int:
        return len(self.basis)


def canonical(letters: Sequence[LoopVector]) -> Tuple[int, Optional[ExtMonomial]]:
    """Ordena as letras devolvendo o sinal da permutação (0 se houver repetição)"""
    if len(set(letters)) < len(letters):
        return 0, None
    sign = 1
    n = len(letters)
    for a in range(n):
        for b in range(a + 1, n):
            if letters[a] > letters[b]:
                sign = -sign
    return sign, tuple(sorted(letters))


def wedge(u: ExtVector, v: ExtVector) -> ExtVector:
    """Produto exterior de vetores indexados por monômios"""
    out: ExtVector = {}
    for m1, a in u.items():
        for m2, b in v.items():
            sign, mono = canonical(m1 + m2)
            if sign:
                out[mono] = out.get(mono, 0) + sign * a * b
    return {m: c for m, c in out.items() if c}


def _det(mat: List[List[Fraction]]) -> Fraction:
    n = len(mat)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in mat]
    det = Fraction(1)
    for col in range(n):
        sel = next((i for i in range(col, n) if m[i][col] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != col:
            m[col], m[sel] = m[sel], m[col]
            det = -det
        piv = m[col][col]
        det *= piv
        for i in range(col + 1, n):
            f = m[i][col] / piv
            if f:
                for j in range(col, n):
                    m[i][j] -= f * m[col][j]
    return det


class ExteriorComplex:
    """Construtor de matrizes por bidegradação com cache"""

    def __init__(self, sp: SymmetricPair):
        self.sp = sp
        self.lock = threading.Lock()  # Lock para escrita no cache
        self._cache: Dict = {}

    def _cached(self, key, builder: Callable):
        if key in self._cache:
            return self._cache[key]
        value = builder()
        with self.lock:
            return self._cache.setdefault(key, value)

    # ==================== LETRAS ====================

    def letter_weight(self, x: LoopVector):
        return self.sp.k_weights[x.index] if x.in_k else self.sp.p_weights[x.index]

    def letter_label(self, x: LoopVector) -> str:
        return self.sp.k_labels[x.index] if x.in_k else self.sp.p_labels[x.index]

    def weight(self, mono: ExtMonomial):
        w = [Fraction(0)] * self.sp.rank
        for x in mono:
            for i, c in enumerate(self.letter_weight(x)):
                w[i] += c
        return tuple(w)

    def _pool(self, max_energy: Fraction) -> List[LoopVector]:
        """Letras com energia em [−max_energy, −½], ordenadas"""
        out = []
        r = max_energy
        while r >= HALF:
            count = self.sp.dim_k if r.denominator == 1 else self.sp.dim_p
            out.extend(LoopVector(-r, i) for i in range(count))
            r -= HALF
        return out

    def bracket_letters(self, x: LoopVector, y: LoopVector) -> List[Tuple[LoopVector, Fraction]]:
        """[x_r, y_t] = [x, y]_{r+t}; o termo central não aparece em 𝔲⁻"""
        sp = self.sp
        energy = x.energy + y.energy
        if energy >= 0:
            raise AssertionError("Colchete em 𝔲⁻ com energia não negativa")
        if x.in_k and y.in_k:
            v = sp.kk.get((x.index, y.index), {})
        elif x.in_k:
            v = sp.kp.get((x.index, y.index), {})
        elif y.in_k:
            v = {j: -c for j, c in sp.kp.get((y.index, x.index), {}).items()}
        else:
            v = sp.pp.get((x.index, y.index), {})
        return [(LoopVector(energy, j), c) for j, c in sorted(v.items())]

    def letter_form(self, x: LoopVector, y: LoopVector) -> Fraction:
        """{x_r, y_t} = δ_{r,t} (x, τ y)"""
        if x.energy != y.energy:
            return Fraction(0)
        table = self.sp.form_k if x.in_k else self.sp.form_p
        return table.get((x.index, y.index), Fraction(0))

    # ==================== BASES ====================

    def basis(self, p: int, s) -> BidegreeSpace:
        s = Fraction(s)
        return self._cached(('basis', p, s), lambda: self._build_basis(p, s))

    def _build_basis(self, p: int, s: Fraction) -> BidegreeSpace:
        if p < 0 or s < 0 or (2 * s).denominator != 1:
            raise ValueError(f"Bidegradação inválida ({p}, {s})")
        monos: List[ExtMonomial] = []
        if p == 0:
            if s == 0:
                monos.append(())
        elif s >= p * HALF:
            pool = self._pool(s - (p - 1) * HALF)

            def rec(start: int, chosen: List[LoopVector], budget: Fraction):
                left = p - len(chosen)
                if left == 0:
                    if budget == 0:
                        monos.append(tuple(chosen))
                    return
                for k in range(start, len(pool)):
                    x = pool[k]
                    mag = -x.energy
                    if mag > budget - (left - 1) * HALF:
                        continue
                    if left == 1 and mag != budget:
                        continue
                    chosen.append(x)
                    rec(k + 1, chosen, budget - mag)
                    chosen.pop()

            rec(0, [], s)
        basis = tuple(monos)
        logger.debug("Λ^(%d,%s): dim %d", p, format_rational(s), len(basis))
        return BidegreeSpace(p, s, basis, {m: i for i, m in enumerate(basis)})

    # ==================== BORDO ====================

    def boundary_of(self, mono: ExtMonomial) -> ExtVector:
        out: ExtVector = {}
        p = len(mono)
        for a in range(p):
            for b in range(a + 1, p):
                sign = -1 if (a + b) % 2 else 1
                rest = mono[:a] + mono[a + 1:b] + mono[b + 1:]
                for z, c in self.bracket_letters(mono[a], mono[b]):
                    s2, m = canonical((z,) + rest)
                    if s2:
                        out[m] = out.get(m, 0) + sign * s2 * c
        return {m: c for m, c in out.items() if c}

    def boundary(self, p: int, s) -> SparseRatMatrix:
        """∂_p : Λ^(p,s) → Λ^(p−1,s)"""
        s = Fraction(s)
        return self._cached(('boundary', p, s), lambda: self._build_boundary(p, s))

    def _build_boundary(self, p: int, s: Fraction) -> SparseRatMatrix:
        dom = self.basis(p, s)
        if p == 0:
            return SparseRatMatrix.zero(0, dom.dim)
        cod = self.basis(p - 1, s)
        entries = {}
        for j, mono in enumerate(dom.basis):
            for m, c in self.boundary_of(mono).items():
                entries[(cod.position[m], j)] = c
        return SparseRatMatrix(cod.dim, dom.dim, entries)

    # ==================== GRAM ====================

    def _signature(self, mono: ExtMonomial):
        return tuple(sorted((x.energy, self.letter_weight(x)) for x in mono))

    def gram(self, p: int, s) -> SparseRatMatrix:
        """{X₁∧…∧X_p, Y₁∧…∧Y_p} = det({X_i, Y_j})"""
        s = Fraction(s)
        return self._cached(('gram', p, s), lambda: self._build_gram(p, s))

    def _build_gram(self, p: int, s: Fraction) -> SparseRatMatrix:
        space = self.basis(p, s)
        groups: Dict = {}
        for i, mono in enumerate(space.basis):
            groups.setdefault(self._signature(mono), []).append(i)
        entries = {}
        for members in groups.values():
            for i in members:
                mi = space.basis[i]
                for j in members:
                    mj = space.basis[j]
                    v = _det([[self.letter_form(x, y) for y in mj] for x in mi])
                    if v:
                        entries[(i, j)] = v
        return SparseRatMatrix(space.dim, space.dim, entries)

    # ==================== ADJUNTA E LAPLACIANO ====================

    def coboundary(self, p: int, s) -> SparseRatMatrix:
        """∂*_p : Λ^(p−1,s) → Λ^(p,s), adjunta de ∂_p para {·,·}"""
        s = Fraction(s)
        return self._cached(('coboundary', p, s), lambda: self._build_coboundary(p, s))

    def _build_coboundary(self, p: int, s: Fraction) -> SparseRatMatrix:
        dom = self.basis(p, s)
        if p == 0:
            return SparseRatMatrix.zero(dom.dim, 0)
        return gram_adjoint(self.boundary(p, s), self.gram(p, s), self.gram(p - 1, s))

    def laplacian(self, p: int, s) -> SparseRatMatrix:
        """L_p = ∂_{p+1}∂*_{p+1} + ∂*_p ∂_p"""
        s = Fraction(s)
        return self._cached(('laplacian', p, s), lambda: self._build_laplacian(p, s))

    def _build_laplacian(self, p: int, s: Fraction) -> SparseRatMatrix:
        n = self.basis(p, s).dim
        lap = SparseRatMatrix.zero(n, n)
        if self.basis(p + 1, s).dim:
            lap = lap + self.boundary(p + 1, s) @ self.coboundary(p + 1, s)
        if p >= 1 and self.basis(p - 1, s).dim:
            lap = lap + self.coboundary(p, s) @ self.boundary(p, s)
        return lap

    # ==================== AÇÃO DE 𝔨 E CASIMIR ====================

    def act(self, kidx: int, mono: ExtMonomial) -> ExtVector:
        """Extensão por derivação de ad(k) às letras"""
        key = ('act', kidx, mono)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        sp = self.sp
        out: ExtVector = {}
        for pos, x in enumerate(mono):
            if x.in_k:
                image = sp.kk.get((kidx, x.index), {})
            else:
                image = sp.kp.get((kidx, x.index), {})
            for j, c in image.items():
                letters = mono[:pos] + (LoopVector(x.energy, j),) + mono[pos + 1:]
                sign, m = canonical(letters)
                if sign:
                    out[m] = out.get(m, 0) + sign * c
        out = {m: c for m, c in out.items() if c}
        with self.lock:
            self._cache[key] = out
        return out

    def act_vector(self, kidx: int, vec: ExtVector) -> ExtVector:
        out: ExtVector = {}
        for mono, c in vec.items():
            out = vec_add(out, self.act(kidx, mono), c)
        return out

    def action_matrix(self, kidx: int, p: int, s) -> SparseRatMatrix:
        space = self.basis(p, s)
        entries = {}
        for j, mono in enumerate(space.basis):
            for m, c in self.act(kidx, mono).items():
                entries[(space.position[m], j)] = c
        return SparseRatMatrix(space.dim, space.dim, entries)

    def casimir(self, p: int, s) -> SparseRatMatrix:
        """Ω_𝔨 = Σ c_ij ρ(k_i)ρ(k_j) em Λ^(p,s)"""
        s = Fraction(s)
        return self._cached(('casimir', p, s), lambda: self._build_casimir(p, s))

    def _build_casimir(self, p: int, s: Fraction) -> SparseRatMatrix:
        space = self.basis(p, s)
        terms = self.sp.casimir.terms()
        entries = {}
        for col, mono in enumerate(space.basis):
            total: ExtVector = {}
            inner_cache: Dict[int, ExtVector] = {}
            for i, j, c in terms:
                if j not in inner_cache:
                    inner_cache[j] = self.act(j, mono)
                total = vec_add(total, self.act_vector(i, inner_cache[j]), c)
            for m, c in total.items():
                entries[(space.position[m], col)] = c
        return SparseRatMatrix(space.dim, space.dim, entries)

    def scaling(self, p: int, s) -> SparseRatMatrix:
        """d = −s·I em Λ^(p,s)"""
        s = Fraction(s)
        return SparseRatMatrix.scalar(self.basis(p, s).dim, -s)


# ==================== ACESSO POR PAR ====================

_registry_lock = threading.Lock()


def complex_for(sp: SymmetricPair) -> ExteriorComplex:
    """Complexo associado ao par, criado uma vez e guardado no cache do par"""
    cx = sp.cache.get('exterior')
    if cx is None:
        with _registry_lock:
            cx = sp.cache.get('exterior')
            if cx is None:
                cx = ExteriorComplex(sp)
                sp.cache['exterior'] = cx
    return cx


def bidegree_basis(sp: SymmetricPair, p: int, s) -> BidegreeSpace:
    return complex_for(sp).basis(p, s)


def boundary_matrix(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    return complex_for(sp).boundary(p, s)


def gram_matrix(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    return complex_for(sp).gram(p, s)


def coboundary_matrix(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    return complex_for(sp).coboundary(p, s)


def laplacian_matrix(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    return complex_for(sp).laplacian(p, s)


def casimir_matrix(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    return complex_for(sp).casimir(p, s)


def d_matrix(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    return complex_for(sp).scaling(p, s)


def verify_garland_formula(sp: SymmetricPair, p: int, s) -> Tuple[bool, SparseRatMatrix]:
    """L_p + ½(d + Ω_𝔨) = 0 exatamente; devolve (ok, resíduo)"""
    lap = laplacian_matrix(sp, p, s)
    residual = lap + (d_matrix(sp, p, s) + casimir_matrix(sp, p, s)).scale(HALF)
    ok = residual.is_zero()
    if not ok:
        logger.warning("Fórmula de Garland falhou em (%d, %s): nnz resíduo = %d",
                       p, format_rational(Fraction(s)), residual.nnz)
    return ok, residual


# ==================== LADO FINITO ====================

def finite_basis(sp: SymmetricPair, p: int) -> List[Tuple[int, ...]]:
    """Subconjuntos de índices de 𝔭 em ordem lexicográfica"""
    return list(combinations(range(sp.dim_p), p))


def identify(mono: ExtMonomial) -> Tuple[int, ...]:
    """x¹_{−½}∧…∧xᵖ_{−½} ↦ x¹∧…∧xᵖ"""
    if any(x.energy != -HALF for x in mono):
        raise ValueError("Monômio fora de Λ^(p,p/2)")
    return tuple(x.index for x in mono)


def finite_side_casimir(sp: SymmetricPair, p: int) -> SparseRatMatrix:
    """Ω_𝔨 em Λᵖ𝔭 pelas matrizes de ação em 𝔭"""
    basis = finite_basis(sp, p)
    pos = {m: i for i, m in enumerate(basis)}
    act = {}
    for (i, j), v in sp.kp.items():
        act.setdefault(i, {})[j] = v

    def rho(kidx, vec):
        out = {}
        table = act.get(kidx, {})
        for mono, c in vec.items():
            for slot, a in enumerate(mono):
                for b, coef in table.get(a, {}).items():
                    idx = list(mono)
                    idx[slot] = b
                    if len(set(idx)) < len(idx):
                        continue
                    sign = 1
                    for u in range(len(idx)):
                        for w in range(u + 1, len(idx)):
                            if idx[u] > idx[w]:
                                sign = -sign
                    key = tuple(sorted(idx))
                    out[key] = out.get(key, 0) + sign * coef * c
        return {m: c for m, c in out.items() if c}

    entries = {}
    terms = sp.casimir.terms()
    for col, mono in enumerate(basis):
        total = {}
        for i, j, c in terms:
            total = vec_add(total, rho(i, rho(j, {mono: Fraction(1)})), c)
        for m, c in total.items():
            entries[(pos[m], col)] = c
    return SparseRatMatrix(len(basis), len(basis), entries)


def killing_gram_finite(sp: SymmetricPair, p: int) -> SparseRatMatrix:
    """Extensão por determinante de κ|_𝔭 a Λᵖ𝔭"""
    basis = finite_basis(sp, p)
    groups: Dict = {}
    for i, mono in enumerate(basis):
        groups.setdefault(tuple(sorted(sp.p_weights[a] for a in mono)), []).append(i)
    kp = sp.killing_p
    entries = {}
    for i, mono in enumerate(basis):
        key = tuple(sorted(tuple(-x for x in sp.p_weights[a]) for a in mono))
        for j in groups.get(key, []):
            other = basis[j]
            v = _det([[kp.get(a, b) for b in other] for a in mono])
            if v:
                entries[(i, j)] = v
    return SparseRatMatrix(len(basis), len(basis), entries)


def _p_dual_basis(sp: SymmetricPair) -> List[Dict[int, Fraction]]:
    """p^t com κ(p_u, p^t) = δ_ut"""
    inv = inverse(sp.killing_p)
    return [{s: inv.get(s, t) for s in range(sp.dim_p) if inv.get(s, t)} for t in range(sp.dim_p)]


def spin_vector(sp: SymmetricPair, kidx: int) -> ExtVector:
    """−½ Σ_t [x, p_t]_{−½} ∧ p^t_{−½} em Λ^(2,1)"""
    dual = _p_dual_basis(sp)
    out: ExtVector = {}
    for t in range(sp.dim_p):
        left = {(LoopVector(-HALF, j),): c for j, c in sp.kp.get((kidx, t), {}).items()}
        if not left:
            continue
        right = {(LoopVector(-HALF, j),): c for j, c in dual[t].items()}
        out = vec_add(out, wedge(left, right), -HALF)
    return out


def tau_theta(sp: SymmetricPair, kidx: int) -> ExtVector:
    """τ∘θ(x) = ½ ∂*₂(x_{−1}) = −¼ Σ [x, p_t] ∧ p^t"""
    return {m: c * HALF for m, c in spin_vector(sp, kidx).items()}


def spin_formula_residual(sp: SymmetricPair) -> int:
    """Número de vetores x ∈ 𝔨 em que ∂*₂(x_{−1}) difere da fórmula explícita"""
    cx = complex_for(sp)
    cob = cx.coboundary(2, 1)
    dom = cx.basis(1, 1)
    cod = cx.basis(2, 1)
    bad = 0
    for kidx in range(sp.dim_k):
        col = cob.column(dom.position[(LoopVector(Fraction(-1), kidx),)])
        lhs = {cod.basis[i]: c for i, c in col.items()}
        if lhs != spin_vector(sp, kidx):
            bad += 1
    return bad


# ==================== RESÍDUOS ESTRUTURAIS ====================

def boundary_squared_residual(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    """∂_{p−1} ∂_p"""
    if p < 2:
        return SparseRatMatrix.zero(0, bidegree_basis(sp, p, s).dim)
    return boundary_matrix(sp, p - 1, s) @ boundary_matrix(sp, p, s)


def adjoint_residual(sp: SymmetricPair, p: int, s) -> SparseRatMatrix:
    """∂ᵀ G_cod − G_dom ∂*, nulo se e somente se {∂x, y} = {x, ∂*y}"""
    if p == 0:
        return SparseRatMatrix.zero(bidegree_basis(sp, 0, s).dim, 0)
    bd = boundary_matrix(sp, p, s)
    return bd.transpose() @ gram_matrix(sp, p - 1, s) - gram_matrix(sp, p, s) @ coboundary_matrix(sp, p, s)


def kernel_identity(sp: SymmetricPair, p: int, s) -> bool:
    """Ker L_p = Ker ∂_p ∩ Ker ∂*_{p+1}"""
    n = bidegree_basis(sp, p, s).dim
    stacked = []
    if p >= 1:
        stacked.extend(boundary_matrix(sp, p, s).rows().values())
    if bidegree_basis(sp, p + 1, s).dim:
        stacked.extend(coboundary_matrix(sp, p + 1, s).rows().values())
    joint = nullspace(SparseRatMatrix.from_rows(n, list(stacked)))
    return span_equal(nullspace(laplacian_matrix(sp, p, s)), joint, n)


def lemma_cycle_check(sp: SymmetricPair, p: int) -> bool:
    """∂(v) = 0 ⟺ colchetes dois a dois nulos, para monômios de 𝔭 em energia −½"""
    cx = complex_for(sp)
    for mono in cx.basis(p, Fraction(p, 2)).basis:
        commuting = all(not sp.pp.get((x.index, y.index)) for x, y in combinations(mono, 2))
        if commuting != (not cx.boundary_of(mono)):
            return False
    return True


def basis_descriptor(sp: SymmetricPair, p: int, s) -> List[List[List[str]]]:
    """Monômios como listas [(rótulo, energia)] para exportação JSON"""
    cx = complex_for(sp)
    return [[[cx.letter_label(x), format_rational(x.energy)] for x in mono]
            for mono in cx.basis(p, s).basis]
