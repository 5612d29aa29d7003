"""
Módulo de Subespaços Abelianos
Lista os subespaços abelianos 𝔟₀-estáveis com palavras de Weyl e a contagem de Peterson
"""

import logging
from typing import Dict, Tuple

from backend.abelian_enum import enumerate_abelian_bstable, peterson_count
from backend.affine_weyl import build_affine_roots, find_w_for_subspace, w_rho_minus_rho
from backend.config import RunConfig
from backend.homology_engine import VERIFICATION_ERRORS
from backend.symmetric_pair import SymmetricPair, load_pair
from backend.utils import format_weight, rows_to_dataframe, write_output

logger = logging.getLogger(__name__)


def abelian_report(sp: SymmetricPair, d_bound) -> Dict:
    roots = build_affine_roots(sp, d_bound)
    entries = []
    for a in enumerate_abelian_bstable(sp):
        entry = a.to_dict(sp.rank)
        try:
            ww = find_w_for_subspace(roots, a)
            entry['word'] = list(ww.word)
            entry['w_rho_minus_rho'] = str(w_rho_minus_rho(roots, ww.word))
        except VERIFICATION_ERRORS as e:
            logger.warning("⚠️ Sem palavra para %s: %s", entry['weights'], e)
            entry['word'] = None
            entry['w_rho_minus_rho'] = None
        entries.append(entry)

    count, expected = peterson_count(sp)
    report = {'pair': sp.label, 'count': count, 'subspaces': entries}
    if sp.is_switch:
        report['peterson'] = {'count': count, 'expected': expected, 'ok': count == expected}
    return report


def peterson_verdict(report: Dict) -> str:
    """Texto "= 2^n ✓" ou "≠ 2^n ✗"; vazio fora do caso switch"""
    info = report.get('peterson')
    if not info:
        return ""
    n = info['expected'].bit_length() - 1
    return f"= 2^{n} ✓" if info['ok'] else f"≠ 2^{n} ✗"


def cmd_abelian(config: RunConfig) -> Tuple[int, Dict]:
    sp = load_pair(config.pair, config.negative_control)
    report = abelian_report(sp, config.d_bound)

    rows = [{
        'dim': e['dim'],
        'pesos': ", ".join(e['weights']) or "∅",
        'mu': format_weight(e['mu']),
        'palavra': "" if e['word'] is None else str(e['word']),
        'w(ρ)-ρ': e['w_rho_minus_rho'] or "",
    } for e in report['subspaces']]
    totals = [{'total': report['count'], 'peterson': peterson_verdict(report)}]
    frames = {
        'Subespacos': rows_to_dataframe(rows, ['dim', 'pesos', 'mu', 'palavra', 'w(ρ)-ρ']),
        'Contagem': rows_to_dataframe(totals, ['total', 'peterson']),
    }
    write_output(report, frames, config.format, config.out)
    return 0, report
