"""
Módulo de Álgebra Linear Exata
Matrizes esparsas sobre racionais de precisão arbitrária: posto, núcleo,
inversão por blocos, adjunta de Gram e certificação de positividade
"""

import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .config import DENSE_THRESHOLD
from .utils import format_rational

logger = logging.getLogger(__name__)

# Vetor esparso: índice → racional não nulo (comprimento dado pelo contexto)
RatVector = Dict[int, Fraction]


class SingularMatrixError(ValueError):
    """Matriz singular onde se exigia inversão"""


class NonSymmetricMatrixError(ValueError):
    """Matriz não simétrica onde se exigia simetria"""


class SparseRatMatrix:
    """Matriz esparsa com entradas Fraction; zeros nunca são armazenados"""

    __slots__ = ('nrows', 'ncols', 'entries', '_rows', '_cols')

    def __init__(self, nrows: int, ncols: int, entries: Optional[Dict[Tuple[int, int], object]] = None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: Dict[Tuple[int, int], Fraction] = {}
        self._rows = None
        self._cols = None
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"Entrada ({i}, {j}) fora de uma matriz {nrows}×{ncols}")
            v = Fraction(v)
            if v:
                self.entries[(i, j)] = v

    # ==================== CONSTRUÇÃO ====================

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> 'SparseRatMatrix':
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> 'SparseRatMatrix':
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n: int, c) -> 'SparseRatMatrix':
        return cls(n, n, {(i, i): c for i in range(n)})

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> 'SparseRatMatrix':
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        return cls(nrows, ncols, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v})

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[RatVector]) -> 'SparseRatMatrix':
        """Monta a matriz cuja j-ésima coluna é columns[j]"""
        return cls(nrows, len(columns), {(i, j): v for j, col in enumerate(columns) for i, v in col.items()})

    @classmethod
    def from_rows(cls, ncols: int, rows: Sequence[RatVector]) -> 'SparseRatMatrix':
        return cls(len(rows), ncols, {(i, j): v for i, row in enumerate(rows) for j, v in row.items()})

    # ==================== ACESSO ====================

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def get(self, i: int, j: int) -> Fraction:
        return self.entries.get((i, j), Fraction(0))

    def rows(self) -> Dict[int, RatVector]:
        """Linhas não nulas como dicionários coluna → valor"""
        if self._rows is None:
            rows: Dict[int, RatVector] = {}
            for (i, j), v in self.entries.items():
                rows.setdefault(i, {})[j] = v
            self._rows = rows
        return self._rows

    def columns(self) -> Dict[int, RatVector]:
        """Colunas não nulas como dicionários linha → valor"""
        if self._cols is None:
            cols: Dict[int, RatVector] = {}
            for (i, j), v in self.entries.items():
                cols.setdefault(j, {})[i] = v
            self._cols = cols
        return self._cols

    def column(self, j: int) -> RatVector:
        return dict(self.columns().get(j, {}))

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> 'SparseRatMatrix':
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        sub = {}
        for (i, j), v in self.entries.items():
            if i in rpos and j in cpos:
                sub[(rpos[i], cpos[j])] = v
        return SparseRatMatrix(len(rows), len(cols), sub)

    # ==================== ARITMÉTICA ====================

    def transpose(self) -> 'SparseRatMatrix':
        return SparseRatMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    @property
    def T(self) -> 'SparseRatMatrix':
        return self.transpose()

    def __matmul__(self, other: 'SparseRatMatrix') -> 'SparseRatMatrix':
        if self.ncols != other.nrows:
            raise ValueError(f"Dimensões incompatíveis: {self.shape} @ {other.shape}")
        other_rows = other.rows()
        out: Dict[Tuple[int, int], Fraction] = {}
        for i, row in self.rows().items():
            acc: Dict[int, Fraction] = {}
            for k, a in row.items():
                for j, b in other_rows.get(k, {}).items():
                    acc[j] = acc.get(j, 0) + a * b
            for j, v in acc.items():
                if v:
                    out[(i, j)] = v
        return SparseRatMatrix(self.nrows, other.ncols, out)

    def __add__(self, other: 'SparseRatMatrix') -> 'SparseRatMatrix':
        if self.shape != other.shape:
            raise ValueError(f"Dimensões incompatíveis: {self.shape} + {other.shape}")
        out = dict(self.entries)
        for key, v in other.entries.items():
            out[key] = out.get(key, 0) + v
        return SparseRatMatrix(self.nrows, self.ncols, out)

    def __neg__(self) -> 'SparseRatMatrix':
        return self.scale(-1)

    def __sub__(self, other: 'SparseRatMatrix') -> 'SparseRatMatrix':
        return self + (-other)

    def scale(self, c) -> 'SparseRatMatrix':
        c = Fraction(c)
        return SparseRatMatrix(self.nrows, self.ncols, {k: v * c for k, v in self.entries.items()})

    def apply(self, vec: RatVector) -> RatVector:
        """Produto matriz · vetor esparso"""
        cols = self.columns()
        out: Dict[int, Fraction] = {}
        for j, x in vec.items():
            for i, a in cols.get(j, {}).items():
                out[i] = out.get(i, 0) + a * x
        return {i: v for i, v in out.items() if v}

    def is_zero(self) -> bool:
        return not self.entries

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        return all(self.entries.get((j, i)) == v for (i, j), v in self.entries.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseRatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    __hash__ = None

    def __repr__(self) -> str:
        return f"SparseRatMatrix({self.nrows}×{self.ncols}, nnz={self.nnz})"


# ==================== VETORES ====================

def vec_add(u: RatVector, v: RatVector, c=1) -> RatVector:
    """u + c·v"""
    out = dict(u)
    for i, x in v.items():
        y = out.get(i, 0) + c * x
        if y:
            out[i] = y
        else:
            out.pop(i, None)
    return out


def vec_scale(u: RatVector, c) -> RatVector:
    c = Fraction(c)
    return {i: x * c for i, x in u.items()} if c else {}


def bilinear(u: RatVector, g: SparseRatMatrix, v: RatVector) -> Fraction:
    """uᵀ G v"""
    gv = g.apply(v)
    return sum((x * gv.get(i, 0) for i, x in u.items()), Fraction(0))


# ==================== ELIMINAÇÃO ====================

def _integer_row(row: RatVector) -> Dict[int, int]:
    """Multiplica a linha pelo mmc dos denominadores e remove o conteúdo"""
    den = 1
    for v in row.values():
        den = den * v.denominator // gcd(den, v.denominator)
    ints = {j: int(v * den) for j, v in row.items()}
    return _primitive(ints)


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _sparse_echelon(rows: List[RatVector]) -> List[Tuple[int, Dict[int, int]]]:
    """
    Eliminação sem frações com escolha de pivô de Markowitz

    Cada passo combina r ← p·r − r[c]·pivô em inteiros e divide pelo
    conteúdo; o pivô de cada coluna é a linha candidata mais esparsa.
    """
    active = [_integer_row(r) for r in rows if r]
    echelon: List[Tuple[int, Dict[int, int]]] = []
    while active:
        col = min(min(r) for r in active)
        candidates = [k for k, r in enumerate(active) if col in r]
        k_piv = min(candidates, key=lambda k: (len(active[k]), k))
        pivot = active[k_piv]
        pv = pivot[col]
        remaining = []
        for k, r in enumerate(active):
            if k == k_piv:
                continue
            rv = r.get(col)
            if rv is None:
                remaining.append(r)
                continue
            new = {j: pv * v for j, v in r.items()}
            for j, v in pivot.items():
                x = new.get(j, 0) - rv * v
                if x:
                    new[j] = x
                else:
                    new.pop(j, None)
            if new:
                remaining.append(_primitive(new))
        echelon.append((col, pivot))
        active = remaining
    return echelon


def _dense_rref(rows: List[RatVector], ncols: int) -> Tuple[List[int], List[RatVector]]:
    """Gauss-Jordan denso sobre Fraction"""
    mat = []
    for r in rows:
        line = [Fraction(0)] * ncols
        for j, v in r.items():
            line[j] = Fraction(v)
        mat.append(line)
    pivots: List[int] = []
    prow = 0
    for col in range(ncols):
        sel = next((i for i in range(prow, len(mat)) if mat[i][col] != 0), None)
        if sel is None:
            continue
        mat[prow], mat[sel] = mat[sel], mat[prow]
        inv = 1 / mat[prow][col]
        mat[prow] = [x * inv for x in mat[prow]]
        for i in range(len(mat)):
            if i != prow and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[prow])]
        pivots.append(col)
        prow += 1
        if prow == len(mat):
            break
    reduced = [{j: v for j, v in enumerate(mat[i]) if v} for i in range(len(pivots))]
    return pivots, reduced


def rref_rows(rows: List[RatVector], ncols: int,
              dense_threshold: int = DENSE_THRESHOLD) -> Tuple[List[int], List[RatVector]]:
    """
    Forma escalonada reduzida canônica das linhas dadas

    Returns:
        (colunas pivô em ordem crescente, linhas reduzidas com pivô 1)
    """
    if ncols <= dense_threshold:
        return _dense_rref(rows, ncols)

    echelon = _sparse_echelon(rows)
    echelon.sort(key=lambda item: item[0])
    pivots = [c for c, _ in echelon]
    reduced: List[RatVector] = []
    for c, r in echelon:
        pv = r[c]
        reduced.append({j: Fraction(v, pv) for j, v in r.items()})
    # Substituição reversa para zerar acima dos pivôs
    for a in range(len(reduced) - 1, -1, -1):
        c = pivots[a]
        row_a = reduced[a]
        for b in range(a):
            f = reduced[b].get(c)
            if f:
                reduced[b] = vec_add(reduced[b], row_a, -f)
    return pivots, reduced


def row_echelon(m: SparseRatMatrix) -> Tuple[List[int], List[RatVector]]:
    """Forma escalonada reduzida das linhas de m"""
    rows = m.rows()
    return rref_rows([rows[i] for i in sorted(rows)], m.ncols)


def rank(m: SparseRatMatrix) -> int:
    pivots, _ = row_echelon(m)
    return len(pivots)


def nullspace(m: SparseRatMatrix) -> List[RatVector]:
    """
    Base canônica do núcleo exato de m

    Um vetor por coluna livre f: v[f] = 1 e v[pivô] = −R[pivô][f].
    Lista vazia se e somente se m é injetiva.
    """
    pivots, reduced = row_echelon(m)
    pivot_set = set(pivots)
    basis: List[RatVector] = []
    for f in range(m.ncols):
        if f in pivot_set:
            continue
        v: RatVector = {f: Fraction(1)}
        for pc, row in zip(pivots, reduced):
            x = row.get(f)
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


# ==================== SUBESPAÇOS ====================

def span_basis(vectors: Iterable[RatVector], length: int) -> List[RatVector]:
    """Base canônica (escalonada reduzida) do espaço gerado"""
    _, reduced = rref_rows([v for v in vectors if v], length)
    return reduced


def span_rank(vectors: Iterable[RatVector], length: int) -> int:
    return len(span_basis(vectors, length))


def span_equal(u: Sequence[RatVector], v: Sequence[RatVector], length: int) -> bool:
    """Compara dois subespaços pelas bases escalonadas reduzidas"""
    return span_basis(u, length) == span_basis(v, length)


def in_span(vec: RatVector, space: Sequence[RatVector], length: int) -> bool:
    return span_rank(list(space) + [vec], length) == span_rank(space, length)


def intersection_dimension(u: Sequence[RatVector], v: Sequence[RatVector], length: int) -> int:
    return span_rank(u, length) + span_rank(v, length) - span_rank(list(u) + list(v), length)


def column_space(m: SparseRatMatrix) -> List[RatVector]:
    cols = m.columns()
    return span_basis([cols[j] for j in sorted(cols)], m.nrows)


def orthogonal_complement(space: Sequence[RatVector], gram: SparseRatMatrix) -> List[RatVector]:
    """{y : xᵀ G y = 0 para todo x em space}"""
    rows = [gram.transpose().apply(x) for x in space]
    constraint = SparseRatMatrix.from_rows(gram.ncols, [r for r in rows if r])
    return nullspace(constraint)


# ==================== BLOCOS ====================

def _components(m: SparseRatMatrix) -> List[List[int]]:
    """Componentes conexas do grafo de adjacência de uma matriz quadrada"""
    parent = list(range(m.nrows))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j) in m.entries:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: Dict[int, List[int]] = {}
    for i in range(m.nrows):
        groups.setdefault(find(i), []).append(i)
    return [groups[k] for k in sorted(groups)]


def _dense_inverse(block: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(block)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(block)]
    for col in range(n):
        sel = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if sel is None:
            raise SingularMatrixError("Matriz singular")
        aug[col], aug[sel] = aug[sel], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def inverse(m: SparseRatMatrix) -> SparseRatMatrix:
    """Inversa exata, bloco a bloco sobre as componentes conexas"""
    if not m.is_square():
        raise SingularMatrixError(f"Matriz {m.nrows}×{m.ncols} não é quadrada")
    out = {}
    for comp in _components(m):
        block = m.submatrix(comp, comp).to_dense()
        inv = _dense_inverse(block)
        for a, i in enumerate(comp):
            for b, j in enumerate(comp):
                if inv[a][b]:
                    out[(i, j)] = inv[a][b]
    return SparseRatMatrix(m.nrows, m.ncols, out)


def solve(m: SparseRatMatrix, b: RatVector) -> RatVector:
    """Resolve m·x = b para m quadrada e não singular"""
    return inverse(m).apply(b)


def gram_adjoint(a: SparseRatMatrix, gram_dom: SparseRatMatrix, gram_cod: SparseRatMatrix) -> SparseRatMatrix:
    """
    Adjunta de a: dom → cod em relação às formas de Gram

    A* = G_dom⁻¹ Aᵀ G_cod, de modo que ⟨A x, y⟩_cod = ⟨x, A* y⟩_dom.
    """
    if gram_dom.shape != (a.ncols, a.ncols) or gram_cod.shape != (a.nrows, a.nrows):
        raise ValueError("Matrizes de Gram incompatíveis com o operador")
    if a.is_zero():
        return SparseRatMatrix.zero(a.ncols, a.nrows)
    return inverse(gram_dom) @ (a.transpose() @ gram_cod)


def _block_pivots(block: List[List[Fraction]], semidefinite: bool) -> bool:
    """Eliminação simétrica; verifica o sinal dos pivôs"""
    n = len(block)
    mat = [list(r) for r in block]
    for k in range(n):
        d = mat[k][k]
        if d < 0:
            return False
        if d == 0:
            if not semidefinite:
                return False
            if any(mat[k][j] != 0 for j in range(k + 1, n)):
                return False
            continue
        for i in range(k + 1, n):
            f = mat[i][k] / d
            if f:
                for j in range(k, n):
                    mat[i][j] -= f * mat[k][j]
    return True


def is_positive_definite(g: SparseRatMatrix) -> bool:
    """
    Positividade pelos menores principais líderes (pivôs de Gauss)

    A matriz é decomposta nas componentes conexas e cada bloco é testado;
    a conclusão não depende da ordem dos índices.
    """
    if not g.is_symmetric():
        raise NonSymmetricMatrixError("is_positive_definite exige matriz simétrica")
    for comp in _components(g):
        if not _block_pivots(g.submatrix(comp, comp).to_dense(), semidefinite=False):
            return False
    return True


def is_positive_semidefinite_wrt(gram: SparseRatMatrix, m: SparseRatMatrix) -> bool:
    """Certifica que m é G-simétrica e G-semidefinida positiva (G·m ⪰ 0)"""
    s = gram @ m
    if not s.is_symmetric():
        return False
    for comp in _components(s):
        if not _block_pivots(s.submatrix(comp, comp).to_dense(), semidefinite=True):
            return False
    return True


# ==================== FORMATO DE DESPEJO ====================

def dump_matrix(m: SparseRatMatrix) -> str:
    """Cabeçalho "rows cols nnz" e uma linha "row col num/den" por entrada"""
    lines = [f"{m.nrows} {m.ncols} {m.nnz}"]
    for (i, j) in sorted(m.entries):
        lines.append(f"{i} {j} {format_rational(m.entries[(i, j)])}")
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> SparseRatMatrix:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    nrows, ncols, nnz = (int(x) for x in lines[0].split())
    entries = {}
    for ln in lines[1:]:
        i, j, v = ln.split()
        entries[(int(i), int(j))] = Fraction(v)
    if len(entries) != nnz:
        raise ValueError(f"Esperadas {nnz} entradas, lidas {len(entries)}")
    return SparseRatMatrix(nrows, ncols, entries)
