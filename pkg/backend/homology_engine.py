"""
Módulo do Motor de Homologia
Núcleo do Laplaciano, vetores de peso máximo, decomposição isotípica e as
verificações de ponta a ponta em Λ^(p,s)𝔲⁻ e Λᵖ𝔭
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .abelian_enum import (
    AbelianSubspace,
    enumerate_abelian_bstable,
    is_abelian,
    is_b0_stable,
    max_abelian_dimension,
    subspaces_of_dim,
)
from .affine_weyl import (
    AffineWeight,
    IsotropicRootError,
    NonReducedWordError,
    PeelingStalledError,
    RootBoundError,
    WeylMismatchError,
    build_affine_roots,
    find_w_for_subspace,
    hat_phi,
    inversion_sets_determine_elements,
    rho_checks,
    w_rho_minus_rho,
)
from .config import MAX_GENERATION_DIM, RunConfig
from .exterior_complex import (
    ExtVector,
    LoopVector,
    adjoint_residual,
    bidegree_basis,
    boundary_matrix,
    boundary_squared_residual,
    casimir_matrix,
    coboundary_matrix,
    complex_for,
    finite_basis,
    finite_side_casimir,
    gram_matrix,
    identify,
    kernel_identity,
    killing_gram_finite,
    laplacian_matrix,
    lemma_cycle_check,
    spin_formula_residual,
    tau_theta,
    verify_garland_formula,
    wedge,
)
from .linalg_exact import (
    RatVector,
    SparseRatMatrix,
    bilinear,
    column_space,
    in_span,
    intersection_dimension,
    is_positive_definite,
    is_positive_semidefinite_wrt,
    nullspace,
    orthogonal_complement,
    span_basis,
    span_equal,
    span_rank,
    vec_add,
)
from .symmetric_pair import (
    DominanceError,
    SymmetricPair,
    casimir_duality_residual,
    casimir_scalar,
    contravariance_on_generators,
    grading_holds,
    jacobi_holds,
    sigma_is_automorphism,
    sigma_squared_is_identity,
    weights_act_correctly,
    weyl_dimension,
)
from .utils import format_rational, format_weight

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

Weight = Tuple[Fraction, ...]

# Falhas que indicam violação de teorema (não erro de uso)
VERIFICATION_ERRORS = (
    DominanceError,
    IsotropicRootError,
    NonReducedWordError,
    PeelingStalledError,
    RootBoundError,
    WeylMismatchError,
)


class NotStableError(ValueError):
    """Subespaço não estável pela ação de 𝔨"""


# ==================== TIPOS ====================

@dataclass
class IsotypicComponent:
    """Componente L(ξ)^m de um 𝔨-módulo"""
    highest_weight: Weight
    multiplicity: int
    dimension: int
    casimir: Fraction
    vectors: List[RatVector] = field(default_factory=list, repr=False)

    def to_dict(self) -> Dict:
        return {
            'hw': format_weight(self.highest_weight),
            'dim': self.dimension,
            'multiplicity': self.multiplicity,
            'casimir': self.casimir,
        }


@dataclass
class HodgeReport:
    """Resumo de Ker L_p em (p, s) com os vereditos dos teoremas"""
    pair: str
    p: int
    s: Fraction
    dim_harmonic: int
    components: List[IsotypicComponent]
    ideals_matched: List[Dict] = field(default_factory=list)
    verdicts: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    @property
    def consistent(self) -> bool:
        return sum(c.multiplicity * c.dimension for c in self.components) == self.dim_harmonic

    def to_dict(self) -> Dict:
        return {
            'pair': self.pair,
            'p': self.p,
            's': self.s,
            'dim_harmonic': self.dim_harmonic,
            'components': [c.to_dict() for c in self.components],
            'ideals_matched': self.ideals_matched,
            'verdicts': dict(sorted(self.verdicts.items())),
        }


# ==================== AUXILIARES ====================

def _check_degree(sp: SymmetricPair, p: int):
    if not 0 <= p <= sp.dim_p:
        raise ValueError(f"p = {p} fora de [0, {sp.dim_p}]")


def _weights_by_position(sp: SymmetricPair, p: int, s) -> List[Weight]:
    cx = complex_for(sp)
    return [cx.weight(m) for m in cx.basis(p, s).basis]


def _shift(m: SparseRatMatrix, c) -> SparseRatMatrix:
    """m − c·I"""
    return m - SparseRatMatrix.scalar(m.nrows, c)


def _to_coords(vec: ExtVector, position: Dict) -> RatVector:
    return {position[m]: c for m, c in vec.items() if c}


def is_eigenvector(m: SparseRatMatrix, v: RatVector, c) -> bool:
    """m·v = c·v, comparando vetores esparsos sem entradas nulas"""
    return not vec_add(m.apply(v), v, -c)


def v_a_vector(sp: SymmetricPair, subspace: AbelianSubspace) -> RatVector:
    """v_𝔞 = ∧_{α∈Φ} p_α em energia −½, como coordenadas de Λ^(p,p/2)"""
    p = subspace.dim
    mono = tuple(LoopVector(-HALF, j) for j in sorted(subspace.phi))
    return {bidegree_basis(sp, p, Fraction(p, 2)).position[mono]: Fraction(1)}


def _finite_transport(sp: SymmetricPair, p: int) -> List[int]:
    """Posição em Λ^(p,p/2) → índice na base lexicográfica de Λᵖ𝔭"""
    finite_pos = {m: i for i, m in enumerate(finite_basis(sp, p))}
    return [finite_pos[identify(m)] for m in bidegree_basis(sp, p, Fraction(p, 2)).basis]


def _weight_blocks(weights: Sequence[Weight]) -> Dict[Weight, List[int]]:
    blocks: Dict[Weight, List[int]] = {}
    for i, w in enumerate(weights):
        blocks.setdefault(w, []).append(i)
    return blocks


# ==================== NÚCLEO DO LAPLACIANO ====================

def harmonic_space(sp: SymmetricPair, p: int, s) -> List[RatVector]:
    """
    Base exata de Ker L_p ∩ Λ^(p,s)

    L_p comuta com 𝔥₀, então o núcleo é calculado bloco a bloco por peso;
    se houver entradas entre blocos o núcleo é calculado na matriz inteira.
    """
    s = Fraction(s)
    key = ('harmonic', p, s)
    cached = sp.cache.get(key)
    if cached is not None:
        return cached

    lap = laplacian_matrix(sp, p, s)
    weights = _weights_by_position(sp, p, s)
    blocks = _weight_blocks(weights)
    crossing = any(weights[i] != weights[j] for (i, j) in lap.entries)
    if crossing:
        logger.warning("L_%d mistura pesos em (%d, %s)", p, p, format_rational(s))
        basis = nullspace(lap)
    else:
        basis = []
        for w in sorted(blocks):
            idx = blocks[w]
            for v in nullspace(lap.submatrix(idx, idx)):
                basis.append({idx[k]: c for k, c in v.items()})

    if s == Fraction(p, 2) and not cycles_match_harmonic(sp, p, basis):
        logger.warning("Ker L_%d ≠ Ker ∂_%d em (%d, %s)", p, p, p, format_rational(s))
    sp.cache[key] = basis
    return basis


def cycles_match_harmonic(sp: SymmetricPair, p: int, harmonic: Optional[List[RatVector]] = None) -> bool:
    """Em s = p/2 vale ∂*_{p+1} = 0, logo Ker L_p = Ker ∂_p"""
    s = Fraction(p, 2)
    if harmonic is None:
        harmonic = harmonic_space(sp, p, s)
    n = bidegree_basis(sp, p, s).dim
    if p == 0:
        cycles = [{i: Fraction(1)} for i in range(n)]
    else:
        cycles = nullspace(boundary_matrix(sp, p, s))
    return span_equal(harmonic, cycles, n)


# ==================== PESO MÁXIMO ====================

def is_k_stable(sp: SymmetricPair, space: Sequence[RatVector], p: int, s) -> bool:
    cx = complex_for(sp)
    n = cx.basis(p, s).dim
    base = span_rank(space, n)
    if base == n:
        return True
    for kidx in range(sp.dim_k):
        act = cx.action_matrix(kidx, p, s)
        images = [act.apply(v) for v in space]
        if span_rank(list(space) + images, n) != base:
            return False
    return True


def highest_weight_vectors(sp: SymmetricPair, space: Sequence[RatVector], p: int, s) -> List[Tuple[Weight, RatVector]]:
    """
    Núcleo conjunto dos operadores de elevação simples em cada espaço de peso

    Com Δ₀⁺ = ∅ não há condição de elevação e todo vetor peso é máximo.
    """
    s = Fraction(s)
    if not is_k_stable(sp, space, p, s):
        raise NotStableError(f"Subespaço de Λ^({p},{format_rational(s)}) não é 𝔨-estável")

    cx = complex_for(sp)
    n = cx.basis(p, s).dim
    weights = _weights_by_position(sp, p, s)
    raising = [cx.action_matrix(sp.k_root_index[beta], p, s) for beta in sp.delta0_simple]

    projections: Dict[Weight, List[RatVector]] = {}
    for v in space:
        parts: Dict[Weight, RatVector] = {}
        for i, c in v.items():
            parts.setdefault(weights[i], {})[i] = c
        for w, part in parts.items():
            projections.setdefault(w, []).append(part)

    out: List[Tuple[Weight, RatVector]] = []
    for w in sorted(projections, reverse=True):
        block = span_basis(projections[w], n)
        if not block:
            continue
        if not raising:
            out.extend((w, b) for b in block)
            continue
        # colunas: (E_β b_k) empilhados para todo β
        columns = []
        for b in block:
            col: RatVector = {}
            for r, e in enumerate(raising):
                for i, c in e.apply(b).items():
                    col[r * n + i] = c
            columns.append(col)
        system = SparseRatMatrix.from_columns(len(raising) * n, columns)
        for coeffs in nullspace(system):
            vec: RatVector = {}
            for k, c in coeffs.items():
                for i, x in block[k].items():
                    vec[i] = vec.get(i, 0) + c * x
            vec = {i: x for i, x in vec.items() if x}
            if vec:
                out.append((w, vec))
    return out


def isotypic_decomposition(sp: SymmetricPair, space: Sequence[RatVector], p: int, s) -> List[IsotypicComponent]:
    hw = highest_weight_vectors(sp, space, p, s)
    grouped: Dict[Weight, List[RatVector]] = {}
    for w, v in hw:
        grouped.setdefault(w, []).append(v)
    components = []
    for w in sorted(grouped, reverse=True):
        components.append(IsotypicComponent(
            highest_weight=w,
            multiplicity=len(grouped[w]),
            dimension=weyl_dimension(sp, w),
            casimir=casimir_scalar(sp, w),
            vectors=grouped[w],
        ))
    total = sum(c.multiplicity * c.dimension for c in components)
    if total != span_rank(space, bidegree_basis(sp, p, s).dim):
        logger.warning("Decomposição incompleta em Λ^(%d,%s): %d", p, format_rational(Fraction(s)), total)
    return components


def decompose_exterior_power(sp: SymmetricPair, p: int) -> List[IsotypicComponent]:
    """Decomposição isotípica de Λᵖ𝔭 ≅ Λ^(p,p/2)"""
    key = ('decomposition', p)
    cached = sp.cache.get(key)
    if cached is None:
        n = bidegree_basis(sp, p, Fraction(p, 2)).dim
        cached = isotypic_decomposition(sp, [{i: Fraction(1)} for i in range(n)], p, Fraction(p, 2))
        sp.cache[key] = cached
    return cached


def eigenspace(sp: SymmetricPair, p: int, c) -> List[RatVector]:
    """Ker(Ω_𝔨 − c·I) em Λᵖ𝔭"""
    return nullspace(_shift(casimir_matrix(sp, p, Fraction(p, 2)), c))


# ==================== TEOREMAS ====================

def verify_eigen(sp: SymmetricPair, p: int) -> Tuple[bool, Dict]:
    """Todo autovalor de Ω_𝔨 em Λᵖ𝔭 é ≤ p/2, com igualdade se e só se há abeliano de dim p"""
    _check_degree(sp, p)
    bound = Fraction(p, 2)
    report: Dict = {'p': p, 'bound': bound}
    try:
        comps = decompose_exterior_power(sp, p)
    except VERIFICATION_ERRORS + (NotStableError,) as e:
        report['error'] = str(e)
        return False, report

    scalars = [c.casimir for c in comps]
    max_scalar = max(scalars) if scalars else None
    report['max_casimir'] = max_scalar
    report['components'] = [c.to_dict() for c in comps]

    bounded = all(c <= bound for c in scalars)
    has_abelian = max_abelian_dimension(sp, p)
    attained = bound in scalars
    report['abelian_witness'] = has_abelian

    eig_ok = True
    for value in sorted(set(scalars)):
        expected = sum(c.multiplicity * c.dimension for c in comps if c.casimir == value)
        if len(eigenspace(sp, p, value)) != expected:
            eig_ok = False
            report.setdefault('eigenspace_mismatch', []).append(value)

    omega = casimir_matrix(sp, p, bound)
    v_ok = True
    for a in subspaces_of_dim(sp, p):
        v = v_a_vector(sp, a)
        if not is_eigenvector(omega, v, bound):
            v_ok = False
            report.setdefault('v_a_failures', []).append(format_weight(a.mu))

    checks = {
        'bounded': bounded,
        'equality_iff_abelian': attained == has_abelian,
        'eigenspaces': eig_ok,
        'v_a_eigen': v_ok,
    }
    report['checks'] = checks
    ok = all(checks.values())
    if not ok:
        logger.warning("❌ eigen falhou em %s, p = %d: %s", sp.label, p, checks)
    return ok, report


def _ideal_entry(roots, sp: SymmetricPair, a: AbelianSubspace) -> Tuple[bool, Dict]:
    entry = a.to_dict(sp.rank)
    try:
        ww = find_w_for_subspace(roots, a)
        entry['word'] = list(ww.word)
        checks = {
            'inversion_set': frozenset(ww.inversions) == hat_phi(a),
            'length': ww.length == a.dim,
            'w_prime': roots.in_w_prime(ww.word),
        }
        shift = w_rho_minus_rho(roots, ww.word)
        expected = AffineWeight(a.mu or tuple(Fraction(0) for _ in range(sp.rank)), -HALF * a.dim)
        checks['w_rho'] = shift == expected
        entry['w_rho_minus_rho'] = str(shift)
    except VERIFICATION_ERRORS as e:
        entry['error'] = str(e)
        return False, entry
    entry['checks'] = checks
    return all(checks.values()), entry


def verify_w(sp: SymmetricPair, d_bound=Fraction(3), word_length: int = 2) -> Tuple[bool, Dict]:
    """Correspondência 𝔦 ↦ w_𝔦 com N(w_𝔦) = Φ̂_𝔦 e recíproca em palavras curtas"""
    report: Dict = {'ideals': []}
    try:
        roots = build_affine_roots(sp, d_bound)
    except VERIFICATION_ERRORS as e:
        report['error'] = str(e)
        return False, report

    ok = True
    ideals = enumerate_abelian_bstable(sp)
    for a in ideals:
        passed, entry = _ideal_entry(roots, sp, a)
        p = a.dim
        v = v_a_vector(sp, a)
        omega = casimir_matrix(sp, p, Fraction(p, 2))
        entry['omega_eigen'] = is_eigenvector(omega, v, Fraction(p, 2))
        passed = passed and entry['omega_eigen']
        entry['recheck'] = is_abelian(sp, a.phi) and is_b0_stable(sp, a.phi)
        passed = passed and entry['recheck']
        entry['ok'] = passed
        ok = ok and passed
        report['ideals'].append(entry)

    # recíproca: w ∈ Ŵ′ curto com N(w) ⊆ {½δ − α}
    known = {frozenset(a.weights) for a in ideals}
    unmatched = []
    try:
        for ww in roots.reduced_words(word_length):
            if not roots.in_w_prime(ww.word):
                continue
            if not all(r.delta == HALF and r.lambda0 == 0 for r in ww.inversions):
                continue
            phi = frozenset(tuple(-x for x in r.finite) for r in ww.inversions)
            if phi not in known:
                unmatched.append(list(ww.word))
        report['inversion_sets_determine'] = inversion_sets_determine_elements(roots, word_length)
        report['rho'] = rho_checks(roots)
    except VERIFICATION_ERRORS as e:
        report['error'] = str(e)
        return False, report
    report['unmatched_words'] = unmatched
    ok = ok and not unmatched and report['inversion_sets_determine'] and report['rho']['ok']
    if not ok:
        logger.warning("❌ w falhou em %s", sp.label)
    return ok, report


def verify_image_identity(sp: SymmetricPair, p: int) -> bool:
    """(Ker L_p)^⟂ = Im ∂*_p em (p, p/2)"""
    s = Fraction(p, 2)
    harmonic = harmonic_space(sp, p, s)
    n = bidegree_basis(sp, p, s).dim
    perp = orthogonal_complement(harmonic, gram_matrix(sp, p, s))
    return span_equal(perp, column_space(coboundary_matrix(sp, p, s)), n)


def verify_GL_bidegree(sp: SymmetricPair, p: int, d_bound=Fraction(3)) -> Tuple[bool, Dict]:
    """Ker L_p em (p, p/2) = ⊕ L(μ̄_i), sem multiplicidade, sobre os abelianos de dim p"""
    _check_degree(sp, p)
    s = Fraction(p, 2)
    report: Dict = {'p': p}
    try:
        harmonic = harmonic_space(sp, p, s)
        comps = isotypic_decomposition(sp, harmonic, p, s)
        roots = build_affine_roots(sp, d_bound)
    except VERIFICATION_ERRORS + (NotStableError,) as e:
        report['error'] = str(e)
        return False, report

    ideals = subspaces_of_dim(sp, p)
    zero = tuple(Fraction(0) for _ in range(sp.rank))
    expected = sorted(a.mu or zero for a in ideals)
    found = sorted(c.highest_weight for c in comps)
    report['dim_harmonic'] = len(harmonic)
    report['components'] = [c.to_dict() for c in comps]

    checks = {
        'multiplicity_free': all(c.multiplicity == 1 for c in comps),
        'weights_match': found == expected,
        'weyl_dimensions': sum(weyl_dimension(sp, mu) for mu in expected) == len(harmonic),
        'cycles': cycles_match_harmonic(sp, p, harmonic),
        'image': verify_image_identity(sp, p),
    }

    # Ker(Ω − p/2) no lado finito, transportado por x_{−½} ↦ x
    transport = _finite_transport(sp, p)
    back = {f: i for i, f in enumerate(transport)}
    finite_kernel = nullspace(_shift(finite_side_casimir(sp, p), s))
    lifted = [{back[f]: c for f, c in v.items()} for v in finite_kernel]
    checks['casimir_kernel'] = span_equal(lifted, harmonic, len(transport))

    hw_vectors = {}
    for c in comps:
        hw_vectors.setdefault(c.highest_weight, []).extend(c.vectors)
    matched = []
    mu_ok = True
    v_ok = True
    for a in ideals:
        mu = a.mu or zero
        entry = {'mu': format_weight(mu)}
        try:
            ww = find_w_for_subspace(roots, a)
            entry['word'] = list(ww.word)
            if w_rho_minus_rho(roots, ww.word) != AffineWeight(mu, -s):
                mu_ok = False
        except VERIFICATION_ERRORS as e:
            entry['error'] = str(e)
            mu_ok = False
        if not in_span(v_a_vector(sp, a), hw_vectors.get(mu, []), len(transport)):
            v_ok = False
        matched.append(entry)
    checks['mu_is_w_rho'] = mu_ok
    checks['v_a_highest'] = v_ok

    report['ideals_matched'] = matched
    report['checks'] = checks
    ok = all(checks.values())
    if not ok:
        logger.warning("❌ GL falhou em %s, p = %d: %s", sp.label, p, checks)
    return ok, report


def verify_finito(sp: SymmetricPair, p: int) -> Tuple[bool, Dict]:
    """Λᵖ𝔭 = A_p ⊕ J_p ortogonal com A_p = Ker(Ω − p/2) e J_p = Im ∂*_p"""
    _check_degree(sp, p)
    s = Fraction(p, 2)
    space = bidegree_basis(sp, p, s)
    n = space.dim
    a_p = eigenspace(sp, p, s)
    j_p = column_space(coboundary_matrix(sp, p, s))

    gram = gram_matrix(sp, p, s)
    transport = _finite_transport(sp, p)
    killing = killing_gram_finite(sp, p)

    def to_finite(v):
        return {transport[i]: c for i, c in v.items()}

    checks = {
        'dimension': len(a_p) + len(j_p) == comb(sp.dim_p, p) == n,
        'trivial_intersection': intersection_dimension(a_p, j_p, n) == 0,
        'orthogonal_gram': all(bilinear(a, gram, j) == 0 for a in a_p for j in j_p),
        'orthogonal_killing': all(bilinear(to_finite(a), killing, to_finite(j)) == 0 for a in a_p for j in j_p),
    }

    if p >= 2:
        rest = bidegree_basis(sp, p - 2, Fraction(p - 2, 2)).basis
        spanning = []
        for kidx in range(sp.dim_k):
            t = tau_theta(sp, kidx)
            if not t:
                continue
            for mono in rest:
                w = wedge(t, {mono: Fraction(1)})
                if w:
                    spanning.append({space.position[m]: c for m, c in w.items()})
        checks['spin_generates_image'] = span_equal(spanning, j_p, n)
    else:
        checks['spin_generates_image'] = not j_p

    report = {'p': p, 'dim_A': len(a_p), 'dim_J': len(j_p), 'binomial': comb(sp.dim_p, p), 'checks': checks}
    ok = all(checks.values())
    if not ok:
        logger.warning("❌ finito falhou em %s, p = %d: %s", sp.label, p, checks)
    return ok, report


def generation_check(sp: SymmetricPair) -> Tuple[bool, Dict]:
    """Σ_k (τθ𝔨)^∧k ∧ A_{p−2k} esgota Λᵖ𝔭 para todo p"""
    if sp.dim_p > MAX_GENERATION_DIM:
        raise ValueError(f"dim 𝔭 = {sp.dim_p} acima de {MAX_GENERATION_DIM}")
    cx = complex_for(sp)
    thetas = [t for t in (tau_theta(sp, k) for k in range(sp.dim_k)) if t]
    spans: Dict[int, List[ExtVector]] = {}
    dims = {}
    ok = True
    for p in range(sp.dim_p + 1):
        s = Fraction(p, 2)
        space = cx.basis(p, s)
        vectors = [{space.basis[i]: c for i, c in v.items()} for v in eigenspace(sp, p, s)]
        if p >= 2:
            for t in thetas:
                for b in spans[p - 2]:
                    w = wedge(t, b)
                    if w:
                        vectors.append(w)
        coords = span_basis([_to_coords(v, space.position) for v in vectors], space.dim)
        spans[p] = [{space.basis[i]: c for i, c in v.items()} for v in coords]
        dims[p] = len(coords)
        if len(coords) != comb(sp.dim_p, p):
            ok = False
    if not ok:
        logger.warning("❌ geração falhou em %s: %s", sp.label, dims)
    return ok, {'dims': dims, 'binomials': {p: comb(sp.dim_p, p) for p in dims}}


# ==================== GRADES E ESTRUTURA ====================

def verify_garland_grid(sp: SymmetricPair, bidegrees: Sequence[Tuple[int, Fraction]]) -> Tuple[bool, List[Dict]]:
    rows = []
    ok = True
    for p, s in bidegrees:
        passed, residual = verify_garland_formula(sp, p, s)
        rows.append({'p': p, 's': s, 'dim': bidegree_basis(sp, p, s).dim,
                     'residual_nnz': residual.nnz, 'ok': passed})
        ok = ok and passed
    return ok, rows


def verify_structure(sp: SymmetricPair, bidegrees: Sequence[Tuple[int, Fraction]]) -> Tuple[bool, Dict]:
    """Oráculos estruturais: Jacobi, ∂² = 0, adjunta, positividade, σ e Casimir"""
    checks = {
        'jacobi': jacobi_holds(sp),
        'sigma_squared': sigma_squared_is_identity(sp),
        'sigma_automorphism': sigma_is_automorphism(sp),
        'grading': grading_holds(sp),
        'weights': weights_act_correctly(sp),
        'contravariance': contravariance_on_generators(sp),
        'casimir_duality': casimir_duality_residual(sp) == 0,
        'spin_formula': spin_formula_residual(sp) == 0,
    }
    failures = []
    for p, s in bidegrees:
        tag = f"({p},{format_rational(s)})"
        if bidegree_basis(sp, p, s).dim == 0:
            continue
        gram = gram_matrix(sp, p, s)
        local = {
            'boundary_squared': boundary_squared_residual(sp, p, s).is_zero(),
            'adjoint': adjoint_residual(sp, p, s).is_zero(),
            'gram_positive': is_positive_definite(gram),
            'laplacian_psd': is_positive_semidefinite_wrt(gram, laplacian_matrix(sp, p, s)),
            'kernel_identity': kernel_identity(sp, p, s),
        }
        if s == Fraction(p, 2):
            local['cycle_lemma'] = lemma_cycle_check(sp, p)
        failures.extend(f"{name}{tag}" for name, passed in local.items() if not passed)
    checks['bidegrees'] = not failures
    report = {'checks': checks, 'failures': failures}
    ok = all(checks.values())
    if not ok:
        logger.warning("❌ estrutura falhou em %s: %s", sp.label, failures or checks)
    return ok, report


# ==================== RELATÓRIOS ====================

def hodge_report(sp: SymmetricPair, p: int, d_bound=Fraction(3), w_verdict: Optional[bool] = None,
                 results: Optional[Dict] = None) -> HodgeReport:
    """Relatório em (p, p/2); reaproveita resultados já calculados por run_all"""
    s = Fraction(p, 2)
    results = results or _run_degree(sp, RunConfig(pair=sp.label, d_bound=Fraction(d_bound)), p)
    eigen_ok = results['eigen'][0]
    gl_ok, gl = results['gl']
    finito_ok = results['finito'][0]
    garland_ok, _ = verify_garland_formula(sp, p, s)
    harmonic = harmonic_space(sp, p, s)
    try:
        comps = isotypic_decomposition(sp, harmonic, p, s)
    except VERIFICATION_ERRORS + (NotStableError,):
        comps = []
    verdicts = {'eigen': eigen_ok, 'GL': gl_ok, 'finito': finito_ok, 'garland': garland_ok}
    if w_verdict is not None:
        verdicts['w'] = w_verdict
    return HodgeReport(
        pair=sp.label, p=p, s=s, dim_harmonic=len(harmonic), components=comps,
        ideals_matched=gl.get('ideals_matched', []), verdicts=verdicts,
    )


def _degrees(sp: SymmetricPair, config: RunConfig) -> List[int]:
    return list(range(min(config.p_max, sp.dim_p) + 1))


def _run_degree(sp: SymmetricPair, config: RunConfig, p: int) -> Dict:
    out = {}
    if config.which in ('eigen', 'all'):
        out['eigen'] = verify_eigen(sp, p)
    if config.which in ('gl', 'all'):
        out['gl'] = verify_GL_bidegree(sp, p, config.d_bound)
    if config.which in ('finito', 'all'):
        out['finito'] = verify_finito(sp, p)
    return out


def run_all(sp: SymmetricPair, config: RunConfig) -> Tuple[bool, Dict]:
    """
    Executa as verificações selecionadas em config.which

    Tarefas por grau p rodam em paralelo (config.jobs); o relatório é
    montado em ordem de p, independente da ordem de término.
    """
    which = config.which
    verdicts: Dict[str, bool] = {}
    report: Dict = {'pair': sp.label}
    bidegrees = config.bidegrees()

    # dados compartilhados montados antes da execução paralela
    enumerate_abelian_bstable(sp)
    complex_for(sp)

    if which in ('garland', 'all'):
        verdicts['garland'], report['garland'] = verify_garland_grid(sp, bidegrees)
    if which in ('structure', 'all'):
        verdicts['structure'], report['structure'] = verify_structure(sp, bidegrees)
    if which in ('w', 'all'):
        verdicts['w'], report['w'] = verify_w(sp, config.d_bound, config.word_length)

    degrees = _degrees(sp, config)
    if which in ('eigen', 'gl', 'finito', 'all'):
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            futures = {p: pool.submit(_run_degree, sp, config, p) for p in degrees}
            results = {p: futures[p].result() for p in sorted(futures)}
        for name, label in (('eigen', 'eigen'), ('gl', 'GL'), ('finito', 'finito')):
            if which not in (name, 'all'):
                continue
            verdicts[label] = all(results[p][name][0] for p in degrees)
            report[name] = [results[p][name][1] for p in degrees]

    if which in ('finito', 'all'):
        if sp.dim_p <= MAX_GENERATION_DIM:
            verdicts['generation'], report['generation'] = generation_check(sp)
        else:
            logger.info("Verificação de geração omitida: dim 𝔭 = %d", sp.dim_p)

    if which == 'all':
        w_ok = verdicts.get('w')
        report['reports'] = [hodge_report(sp, p, config.d_bound, w_ok, results[p]).to_dict() for p in degrees]

    report['verdicts'] = dict(sorted(verdicts.items()))
    passed = all(verdicts.values())
    report['passed'] = passed
    if passed:
        logger.info("✅ %s: todas as verificações passaram", sp.label)
    else:
        failed = [k for k, v in verdicts.items() if not v]
        logger.warning("❌ %s: falhas em %s", sp.label, ", ".join(sorted(failed)))
    return passed, report
