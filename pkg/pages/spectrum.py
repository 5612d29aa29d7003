"""
Módulo de Espectro
Autovalores de Ω_𝔨 em Λᵖ𝔭 comparados com a cota p/2 e testemunhas abelianas
"""

import logging
from fractions import Fraction
from typing import Dict, Tuple

from backend.abelian_enum import subspaces_of_dim
from backend.config import RunConfig
from backend.homology_engine import decompose_exterior_power
from backend.symmetric_pair import SymmetricPair, load_pair
from backend.utils import format_rational, format_weight, rows_to_dataframe, write_output

logger = logging.getLogger(__name__)


def spectrum_row(sp: SymmetricPair, p: int) -> Dict:
    comps = decompose_exterior_power(sp, p)
    witnesses = [", ".join(format_weight(w) for w in a.weights) or "∅" for a in subspaces_of_dim(sp, p)]
    return {
        'p': p,
        'components': [c.to_dict() for c in comps],
        'max_casimir': max(c.casimir for c in comps),
        'bound': Fraction(p, 2),
        'witnesses': witnesses,
    }


def cmd_spectrum(config: RunConfig) -> Tuple[int, Dict]:
    sp = load_pair(config.pair, config.negative_control)
    rows = [spectrum_row(sp, p) for p in range(min(config.p_max, sp.dim_p) + 1)]
    report = {'pair': sp.label, 'rows': rows}

    summary = [{
        'p': r['p'],
        'max': format_rational(r['max_casimir']),
        'cota p/2': format_rational(r['bound']),
        'testemunhas': "; ".join(r['witnesses']) or "-",
    } for r in rows]
    detail = [{'p': r['p'], **c} for r in rows for c in r['components']]
    frames = {
        'Espectro': rows_to_dataframe(summary, ['p', 'max', 'cota p/2', 'testemunhas']),
        'Isotipicos': rows_to_dataframe(detail, ['p', 'hw', 'dim', 'multiplicity', 'casimir']),
    }
    write_output(report, frames, config.format, config.out)
    return 0, report
