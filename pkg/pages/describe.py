"""
Módulo de Descrição do Par
Dimensões, raízes de 𝔨, pesos de 𝔭, raízes simples afins e dados de ρ
"""

import logging
from typing import Dict, Tuple

from backend.affine_weyl import build_affine_roots, rho_checks
from backend.config import RunConfig
from backend.symmetric_pair import SymmetricPair, load_pair
from backend.utils import format_affine, format_rational, format_weight, rows_to_dataframe, write_output

logger = logging.getLogger(__name__)


def describe_pair(sp: SymmetricPair, d_bound) -> Dict:
    """Dados estruturais de um par simétrico"""
    roots = build_affine_roots(sp, d_bound)
    rho = rho_checks(roots)
    return {
        'pair': sp.label,
        'dim_g': sp.g.dim,
        'dim_k': sp.dim_k,
        'dim_p': sp.dim_p,
        'rank': sp.rank,
        'delta0_positive': [format_weight(w) for w in sp.delta0_pos],
        'p_weights': [format_weight(w) for w in sp.p_weights],
        'simple_roots': [
            {'index': i, 'root': str(r), 's': r.delta, 'finite': list(r.finite)}
            for i, r in enumerate(roots.simple_roots)
        ],
        'rho': {
            'value': format_affine(roots.rho.finite, roots.rho.delta, roots.rho.lambda0),
            'coroot_values': rho['rho_coroot'],
            'd_value': rho['rho_d'],
            'ok': rho['ok'],
        },
        'imaginary': [{'root': str(r), 'multiplicity': m} for r, m in roots.imaginary],
    }


def cmd_describe(config: RunConfig) -> Tuple[int, Dict]:
    """Comando describe: sempre retorna código 0 para pares válidos"""
    sp = load_pair(config.pair, config.negative_control)
    report = describe_pair(sp, config.d_bound)

    summary = rows_to_dataframe([
        {'campo': 'par', 'valor': report['pair']},
        {'campo': 'dim g', 'valor': report['dim_g']},
        {'campo': 'dim k', 'valor': report['dim_k']},
        {'campo': 'dim p', 'valor': report['dim_p']},
        {'campo': 'posto', 'valor': report['rank']},
        {'campo': '|Π̂|', 'valor': len(report['simple_roots'])},
        {'campo': 'ρ', 'valor': report['rho']['value']},
        {'campo': 'ρ(α_i^∨) = 1', 'valor': '✓' if report['rho']['ok'] else '✗'},
    ])
    frames = {
        'Resumo': summary,
        'Raizes de k': rows_to_dataframe([{'raiz': w} for w in report['delta0_positive']], ['raiz']),
        'Pesos de p': rows_to_dataframe([{'peso': w} for w in report['p_weights']], ['peso']),
        'Raizes simples': rows_to_dataframe(
            [{'i': r['index'], 'raiz': r['root'], 's_i': format_rational(r['s'])} for r in report['simple_roots']],
            ['i', 'raiz', 's_i'],
        ),
    }
    write_output(report, frames, config.format, config.out)
    return 0, report
