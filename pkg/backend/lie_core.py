"""
Módulo de Álgebras de Lie Semissimples
Matriz de Cartan, sistema de raízes, base de Chevalley com constantes de
estrutura inteiras e forma de Killing exata
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg_exact import RatVector, SparseRatMatrix, inverse, vec_add
from .utils import format_weight

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]

RANK_BOUNDS = {
    'A': lambda n: n >= 1,
    'B': lambda n: n >= 2,
    'C': lambda n: n >= 2,
    'D': lambda n: n >= 3,
    'E': lambda n: n in (6, 7, 8),
    'F': lambda n: n == 4,
    'G': lambda n: n == 2,
}


class CartanSpecError(ValueError):
    """Especificação de tipo de Cartan inválida"""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (posição {position})")
        self.position = position


# ==================== TIPO DE CARTAN ====================

@dataclass(frozen=True)
class CartanSpec:
    """Lista de fatores simples (letra, posto)"""
    factors: Tuple[Tuple[str, int], ...]

    @property
    def rank(self) -> int:
        return sum(n for _, n in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{t}{n}" for t, n in self.factors)


def parse_cartan_spec(text: str, offset: int = 0) -> CartanSpec:
    """
    Lê especificações como "A2", "A1xA1", "b2" (sem distinção de caixa)

    offset desloca as posições relatadas nos erros, para quando o texto
    é um trecho de uma especificação maior.
    """
    if not text or not text.strip():
        raise CartanSpecError("Especificação de Cartan vazia", offset)
    factors = []
    pos = 0
    for chunk in text.replace('X', 'x').split('x'):
        start = offset + pos
        if not chunk:
            raise CartanSpecError("Fator vazio", start)
        letter = chunk[0].upper()
        if letter not in RANK_BOUNDS:
            raise CartanSpecError(f"Tipo desconhecido '{chunk[0]}'", start)
        digits = chunk[1:]
        if not digits.isdigit():
            raise CartanSpecError(f"Posto inválido '{digits}'", start + 1)
        n = int(digits)
        if not RANK_BOUNDS[letter](n):
            raise CartanSpecError(f"Posto {n} inválido para o tipo {letter}", start + 1)
        factors.append((letter, n))
        pos += len(chunk) + 1
    return CartanSpec(tuple(factors))


def _simple_cartan(letter: str, n: int) -> List[List[int]]:
    """Matriz de Cartan a_ij = ⟨α_i^∨, α_j⟩ de um fator simples"""
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j):
        a[i][j] = a[j][i] = -1

    if letter in 'ABC':
        for i in range(n - 1):
            link(i, i + 1)
        if letter == 'B':
            a[n - 1][n - 2] = -2
        elif letter == 'C':
            a[n - 2][n - 1] = -2
    elif letter == 'D':
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == 'E':
        # Numeração de Bourbaki: 1-3-4-5-6-7-8 com 2 ligado a 4
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]:
            if j < n:
                link(i, j)
        link(1, 3)
    elif letter == 'F':
        link(0, 1)
        link(1, 2)
        link(2, 3)
        a[2][1] = -2
    elif letter == 'G':
        a[0][1] = -3
        a[1][0] = -1
    return a


def cartan_matrix(spec: CartanSpec) -> List[List[int]]:
    """Matriz de Cartan bloco-diagonal de todos os fatores"""
    n = spec.rank
    a = [[0] * n for _ in range(n)]
    off = 0
    for letter, r in spec.factors:
        block = _simple_cartan(letter, r)
        for i in range(r):
            for j in range(r):
                a[off + i][off + j] = block[i][j]
        off += r
    return a


# ==================== SISTEMA DE RAÍZES ====================

@dataclass(frozen=True)
class RootSystem:
    """Sistema de raízes em coordenadas de raízes simples"""
    spec: CartanSpec
    rank: int
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    simple_roots: Tuple[Root, ...]
    positive_roots: Tuple[Root, ...]
    component: Tuple[int, ...]
    # Forma simetrizada (α_i, α_j) = d_i a_ij, normalizada por componente
    symmetrized: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)

    def is_root(self, c: Root) -> bool:
        return c in self._root_set

    def is_positive(self, c: Root) -> bool:
        return c in self._positive_set

    @property
    def _root_set(self):
        cached = self.__dict__.get('_roots_cache')
        if cached is None:
            cached = frozenset(self.positive_roots) | frozenset(tuple(-x for x in r) for r in self.positive_roots)
            object.__setattr__(self, '_roots_cache', cached)
        return cached

    @property
    def _positive_set(self):
        cached = self.__dict__.get('_pos_cache')
        if cached is None:
            cached = frozenset(self.positive_roots)
            object.__setattr__(self, '_pos_cache', cached)
        return cached

    def inner(self, a: Sequence, b: Sequence) -> Fraction:
        """Forma simetrizada normalizada (usada só em razões)"""
        s = Fraction(0)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        s += x * y * self.symmetrized[i][j]
        return s

    def pair_coroot(self, c: Sequence, i: int) -> int:
        """⟨β, α_i^∨⟩ = Σ_j c_j a_ij"""
        return sum(c[j] * self.cartan_matrix[i][j] for j in range(self.rank))

    def height(self, c: Sequence) -> int:
        return sum(c)

    @property
    def highest_roots(self) -> List[Root]:
        """Raiz máxima de cada componente"""
        best = {}
        for r in self.positive_roots:
            comp = self.component[next(i for i, x in enumerate(r) if x)]
            if comp not in best or self.height(r) > self.height(best[comp]):
                best[comp] = r
        return [best[k] for k in sorted(best)]


def _symmetrizer(a: List[List[int]], component: List[int]) -> List[Fraction]:
    """d_i com d_i a_ij = d_j a_ji, mínimo 1 em cada componente"""
    n = len(a)
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        seen = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
                    seen.append(j)
        low = min(d[k] for k in seen)
        for k in seen:
            d[k] = d[k] / low
    return d


def _components_of(a: List[List[int]]) -> List[int]:
    n = len(a)
    comp = [-1] * n
    c = 0
    for start in range(n):
        if comp[start] >= 0:
            continue
        stack = [start]
        comp[start] = c
        while stack:
            i = stack.pop()
            for j in range(n):
                if a[i][j] != 0 and comp[j] < 0:
                    comp[j] = c
                    stack.append(j)
        c += 1
    return comp


def root_order_key(c: Root):
    """Altura crescente e, na mesma altura, lexicográfica decrescente (α1 antes de α2)"""
    return (sum(c), tuple(-x for x in c))


def build_root_system(spec: CartanSpec) -> RootSystem:
    """
    Gera as raízes positivas por altura usando cadeias de raízes

    β + α_i é raiz se e somente se p − ⟨β, α_i^∨⟩ ≥ 1, onde p é o maior
    inteiro com β − pα_i raiz.
    """
    a = cartan_matrix(spec)
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    positive = set(simple)
    level = list(simple)
    while level:
        nxt = set()
        for beta in level:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in positive:
                        p += 1
                    else:
                        break
                q = p - sum(beta[j] * a[i][j] for j in range(n))
                if q >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in positive:
                        nxt.add(up)
        positive |= nxt
        level = sorted(nxt)

    component = _components_of(a)
    d = _symmetrizer(a, component)
    sym = tuple(tuple(d[i] * a[i][j] for j in range(n)) for i in range(n))
    rs = RootSystem(
        spec=spec,
        rank=n,
        cartan_matrix=tuple(tuple(row) for row in a),
        simple_roots=tuple(simple),
        positive_roots=tuple(sorted(positive, key=root_order_key)),
        component=tuple(component),
        symmetrized=sym,
    )
    logger.debug("Sistema de raízes %s: %d raízes positivas", spec, len(rs.positive_roots))
    return rs


def coroot_coefficients(rs: RootSystem, alpha: Root) -> Tuple[int, ...]:
    """Coeficientes de α^∨ nas corraízes simples: m_j (α_j,α_j)/(α,α)"""
    sign = 1
    if not rs.is_positive(alpha):
        alpha = tuple(-x for x in alpha)
        sign = -1
    norm = rs.inner(alpha, alpha)
    out = []
    for j, m in enumerate(alpha):
        c = Fraction(m) * rs.symmetrized[j][j] / norm
        if c.denominator != 1:
            raise ArithmeticError(f"Corraiz não inteira para {alpha}")
        out.append(sign * int(c))
    return tuple(out)


# ==================== BASE DE CHEVALLEY ====================

class ChevalleyBasis:
    """
    Base {e_α, h_i, f_α} com colchetes exatos

    Índices: 0..P−1 são e_α (raízes positivas na ordem fixa), P..P+n−1 são
    h_i e P+n..2P+n−1 são f_α = e_{−α}. [e_α, f_α] = h_α (a corraiz).
    """

    def __init__(self, rs: RootSystem, structure: Dict[Tuple[Root, Root], int]):
        self.root_system = rs
        self.rank = rs.rank
        self.n_pos = len(rs.positive_roots)
        self.dim = 2 * self.n_pos + self.rank
        self._N = structure

        self.root_index: Dict[Root, int] = {}
        for k, r in enumerate(rs.positive_roots):
            self.root_index[r] = k
            self.root_index[tuple(-x for x in r)] = self.n_pos + self.rank + k

        zero = tuple(0 for _ in range(self.rank))
        self.weights: List[Root] = (list(rs.positive_roots) + [zero] * self.rank
                                    + [tuple(-x for x in r) for r in rs.positive_roots])
        self.labels: List[str] = ([f"e({format_weight(r)})" for r in rs.positive_roots]
                                  + [f"h{i + 1}" for i in range(self.rank)]
                                  + [f"f({format_weight(r)})" for r in rs.positive_roots])
        self.brackets: Dict[Tuple[int, int], RatVector] = self._build_table()

    def h_index(self, i: int) -> int:
        return self.n_pos + i

    def is_cartan(self, idx: int) -> bool:
        return self.n_pos <= idx < self.n_pos + self.rank

    def structure_constant(self, a: Root, b: Root) -> int:
        """N_{a,b} com [e_a, e_b] = N_{a,b} e_{a+b} (zero se a+b não é raiz)"""
        return self._N.get((a, b), 0)

    def coroot_vector(self, alpha: Root) -> RatVector:
        coeffs = coroot_coefficients(self.root_system, alpha)
        return {self.h_index(i): Fraction(c) for i, c in enumerate(coeffs) if c}

    def _build_table(self) -> Dict[Tuple[int, int], RatVector]:
        rs = self.root_system
        n = self.rank
        table: Dict[Tuple[int, int], RatVector] = {}
        for i in range(self.dim):
            for j in range(self.dim):
                hi, hj = self.is_cartan(i), self.is_cartan(j)
                if hi and hj:
                    continue
                if hi:
                    b = self.weights[j]
                    v = rs.pair_coroot(b, i - self.n_pos)
                    if v:
                        table[(i, j)] = {j: Fraction(v)}
                    continue
                if hj:
                    a = self.weights[i]
                    v = rs.pair_coroot(a, j - self.n_pos)
                    if v:
                        table[(i, j)] = {i: Fraction(-v)}
                    continue
                a, b = self.weights[i], self.weights[j]
                s = tuple(x + y for x, y in zip(a, b))
                if not any(s):
                    table[(i, j)] = self.coroot_vector(a)
                    continue
                nab = self._N.get((a, b), 0)
                if nab:
                    table[(i, j)] = {self.root_index[s]: Fraction(nab)}
        return table

    def bracket_basis(self, i: int, j: int) -> RatVector:
        return self.brackets.get((i, j), {})

    def bracket(self, u: RatVector, v: RatVector) -> RatVector:
        """Colchete de vetores esparsos na base de Chevalley"""
        out: RatVector = {}
        for i, x in u.items():
            for j, y in v.items():
                b = self.brackets.get((i, j))
                if b:
                    out = vec_add(out, b, x * y)
        return out

    def ad_matrix(self, u: RatVector) -> SparseRatMatrix:
        """Matriz de ad(u): coluna j = [u, b_j]"""
        cols = [self.bracket(u, {j: Fraction(1)}) for j in range(self.dim)]
        return SparseRatMatrix.from_columns(self.dim, cols)

    def __repr__(self) -> str:
        return f"ChevalleyBasis({self.root_system.spec}, dim={self.dim})"


def _structure_constants(rs: RootSystem) -> Dict[Tuple[Root, Root], int]:
    """
    Constantes N_{a,b} pelo algoritmo dos pares extraespeciais

    Para cada raiz positiva não simples ξ, o par extraespecial (α', β') tem
    α' a menor raiz simples com ξ − α' raiz; fixa-se N_{α',β'} = +(p+1).
    Os demais valores seguem de N_{−a,−b} = −N_{a,b}, das relações
    N_{r,s}/(t,t) = N_{s,t}/(r,r) = N_{t,r}/(s,s) para r+s+t = 0 e da
    identidade de quatro termos para r+s+t+u = 0.
    """
    pos_order = {r: k for k, r in enumerate(rs.positive_roots)}
    roots = rs._root_set
    n = rs.rank

    def neg(r):
        return tuple(-x for x in r)

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    def norm(r):
        return rs.inner(r, r)

    def p_string(beta, alpha):
        p = 0
        cur = beta
        while True:
            cur = tuple(x - y for x, y in zip(cur, alpha))
            if cur in roots:
                p += 1
            else:
                return p

    extraspecial = {}
    for xi in rs.positive_roots:
        if sum(xi) == 1:
            continue
        for i in range(n):
            e = rs.simple_roots[i]
            rest = tuple(x - y for x, y in zip(xi, e))
            if rest in pos_order:
                extraspecial[xi] = (e, rest)
                break

    @lru_cache(maxsize=None)
    def N(a, b) -> Fraction:
        s = add(a, b)
        if s not in roots:
            return Fraction(0)
        a_pos, b_pos = a in pos_order, b in pos_order
        if a_pos and b_pos:
            if pos_order[a] > pos_order[b]:
                return -N(b, a)
            alpha1, beta1 = extraspecial[s]
            if a == alpha1:
                return Fraction(p_string(beta1, alpha1) + 1)
            total = Fraction(0)
            b_minus = tuple(x - y for x, y in zip(b, alpha1))
            if b_minus in roots:
                total -= N(b, neg(alpha1)) * N(a, neg(beta1)) / norm(b_minus)
            a_minus = tuple(x - y for x, y in zip(a, alpha1))
            if a_minus in roots:
                total -= N(neg(alpha1), a) * N(b, neg(beta1)) / norm(a_minus)
            n_neg = -(p_string(beta1, alpha1) + 1)
            return norm(s) * total / n_neg
        if not a_pos and not b_pos:
            return -N(neg(a), neg(b))
        if a_pos:
            t = neg(s)
            if s in pos_order:
                return norm(t) / norm(a) * N(b, t)
            return norm(t) / norm(b) * N(t, a)
        return -N(b, a)

    all_roots = list(rs.positive_roots) + [neg(r) for r in rs.positive_roots]
    table: Dict[Tuple[Root, Root], int] = {}
    for a in all_roots:
        for b in all_roots:
            v = N(a, b)
            if v:
                if v.denominator != 1:
                    raise ArithmeticError(f"Constante de estrutura não inteira N({a},{b}) = {v}")
                table[(a, b)] = int(v)
    return table


def build_chevalley_basis(rs: RootSystem) -> ChevalleyBasis:
    cb = ChevalleyBasis(rs, _structure_constants(rs))
    logger.debug("Base de Chevalley de %s: dim %d", rs.spec, cb.dim)
    return cb


def chevalley_anti_involution(cb: ChevalleyBasis) -> Tuple[int, ...]:
    """τ nos índices da base: e_α ↔ f_α, h_i fixo"""
    tau = []
    for idx in range(cb.dim):
        if cb.is_cartan(idx):
            tau.append(idx)
        else:
            w = cb.weights[idx]
            tau.append(cb.root_index[tuple(-x for x in w)])
    return tuple(tau)


def apply_index_map(mapping: Sequence[int], u: RatVector) -> RatVector:
    return {mapping[i]: x for i, x in u.items()}


# ==================== FORMA DE KILLING ====================

@dataclass(frozen=True)
class KillingForm:
    """Gram de κ(x,y) = tr(ad x ad y) e forma induzida em 𝔥*"""
    gram: SparseRatMatrix
    h_gram: Tuple[Tuple[Fraction, ...], ...]
    dual_form: Tuple[Tuple[Fraction, ...], ...]

    def value(self, u: RatVector, v: RatVector) -> Fraction:
        total = Fraction(0)
        rows = self.gram.rows()
        for i, x in u.items():
            row = rows.get(i)
            if row:
                for j, y in v.items():
                    g = row.get(j)
                    if g:
                        total += x * y * g
        return total

    def pairing(self, mu: Sequence, eta: Sequence) -> Fraction:
        """(μ, η) na forma induzida, em coordenadas de raízes simples"""
        total = Fraction(0)
        for i, x in enumerate(mu):
            if x:
                for j, y in enumerate(eta):
                    if y:
                        total += Fraction(x) * Fraction(y) * self.dual_form[i][j]
        return total


def killing_form(cb: ChevalleyBasis) -> KillingForm:
    """
    κ(b_i, b_j) = Σ_m coeficiente de b_m em [b_i, [b_j, b_m]]

    A forma em 𝔥* é F = Aᵀ K_h⁻¹ A, com A a matriz de Cartan e K_h o
    bloco de Gram nos h_i.
    """
    ad = {}
    for (i, m), v in cb.brackets.items():
        ad.setdefault(i, {})[m] = v
    entries = {}
    for i in range(cb.dim):
        ad_i = ad.get(i, {})
        for j in range(cb.dim):
            ad_j = ad.get(j, {})
            tr = Fraction(0)
            for m, inner in ad_j.items():
                for k, c in inner.items():
                    back = ad_i.get(k)
                    if back:
                        tr += c * back.get(m, 0)
            if tr:
                entries[(i, j)] = tr
    gram = SparseRatMatrix(cb.dim, cb.dim, entries)

    n = cb.rank
    hs = [cb.h_index(i) for i in range(n)]
    kh = gram.submatrix(hs, hs)
    kh_inv = inverse(kh).to_dense()
    a = cb.root_system.cartan_matrix
    # (α_i, α_j) = Σ_{k,l} a_ki (K_h⁻¹)_kl a_lj
    dual = tuple(
        tuple(sum((a[k][i] * kh_inv[k][l] * a[l][j] for k in range(n) for l in range(n)), Fraction(0))
              for j in range(n))
        for i in range(n)
    )
    kf = KillingForm(gram=gram, h_gram=tuple(tuple(r) for r in kh.to_dense()), dual_form=dual)
    logger.debug("Forma de Killing de %s calculada (nnz=%d)", cb.root_system.spec, gram.nnz)
    return kf


# ==================== RESÍDUOS ESTRUTURAIS ====================

def jacobi_residual(cb: ChevalleyBasis, i: int, j: int, k: int) -> RatVector:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]] para elementos da base"""
    x, y, z = ({i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)})
    r = cb.bracket(x, cb.bracket(y, z))
    r = vec_add(r, cb.bracket(y, cb.bracket(z, x)))
    r = vec_add(r, cb.bracket(z, cb.bracket(x, y)))
    return r


def killing_invariance_residual(cb: ChevalleyBasis, kf: KillingForm, i: int, j: int, k: int) -> Fraction:
    """([x,y],z) + (y,[x,z])"""
    x, y, z = ({i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)})
    return kf.value(cb.bracket(x, y), z) + kf.value(y, cb.bracket(x, z))


def build_lie_algebra(spec_text: str) -> Tuple[ChevalleyBasis, KillingForm]:
    """Atalho: texto → (base de Chevalley, forma de Killing)"""
    cb = build_chevalley_basis(build_root_system(parse_cartan_spec(spec_text)))
    return cb, killing_form(cb)
