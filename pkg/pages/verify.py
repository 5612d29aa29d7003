"""
Módulo de Verificação
Executa as verificações selecionadas e define o código de saída
"""

import logging
from typing import Dict, List, Tuple

from backend.config import RunConfig
from backend.homology_engine import run_all
from backend.symmetric_pair import load_pair
from backend.utils import rows_to_dataframe, write_output

logger = logging.getLogger(__name__)


def _component_rows(report: Dict) -> List[Dict]:
    rows = []
    for hodge in report.get('reports', []):
        for comp in hodge['components']:
            rows.append({'p': hodge['p'], 's': hodge['s'], 'hw': comp['hw'],
                         'dim': comp['dim'], 'casimir': comp['casimir']})
    return rows


def cmd_verify(config: RunConfig) -> Tuple[int, Dict]:
    """Código 0 se todos os vereditos passam, 1 caso contrário"""
    sp = load_pair(config.pair, config.negative_control)
    passed, report = run_all(sp, config)
    if sp.perturbation is not None:
        a, b = sp.perturbation
        report['perturbation'] = {'bracket': [sp.p_labels[a], sp.p_labels[b]]}

    verdicts = [{'verificação': k, 'resultado': '✅' if v else '❌'} for k, v in report['verdicts'].items()]
    frames = {'Vereditos': rows_to_dataframe(verdicts, ['verificação', 'resultado'])}
    if 'garland' in report:
        frames['Garland'] = rows_to_dataframe(report['garland'], ['p', 's', 'dim', 'residual_nnz', 'ok'])
    if 'structure' in report and report['structure']['failures']:
        frames['Falhas estruturais'] = rows_to_dataframe(
            [{'falha': f} for f in report['structure']['failures']], ['falha'])
    components = _component_rows(report)
    if components:
        frames['Componentes'] = rows_to_dataframe(components, ['p', 's', 'hw', 'dim', 'casimir'])

    write_output(report, frames, config.format, config.out)
    return (0 if passed else 1), report
