"""
Backend Package
Verificação exata da homologia de 𝔲⁻ e dos subespaços abelianos de pares simétricos
"""

from .abelian_enum import AbelianSubspace, enumerate_abelian_bstable, peterson_count
from .affine_weyl import AffineWeight, build_affine_roots, find_w_for_subspace
from .config import RunConfig
from .exterior_complex import complex_for, verify_garland_formula
from .homology_engine import HodgeReport, IsotypicComponent, run_all
from .lie_core import CartanSpecError, build_lie_algebra, parse_cartan_spec
from .symmetric_pair import InvolutionError, SymmetricPair, build_pair, perturbed
from .utils import emit_json, export_to_excel, import_from_excel, parse_json

__version__ = "1.0.0"
__all__ = [
    'AbelianSubspace',
    'AffineWeight',
    'CartanSpecError',
    'HodgeReport',
    'InvolutionError',
    'IsotypicComponent',
    'RunConfig',
    'SymmetricPair',
    'build_affine_roots',
    'build_lie_algebra',
    'build_pair',
    'complex_for',
    'emit_json',
    'enumerate_abelian_bstable',
    'export_to_excel',
    'find_w_for_subspace',
    'import_from_excel',
    'parse_cartan_spec',
    'parse_json',
    'perturbed',
    'peterson_count',
    'run_all',
    'verify_garland_formula',
]
