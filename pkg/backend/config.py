"""
Módulo de Configuração
Parâmetros padrão e configuração de execução da linha de comando
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

# Limites padrão da verificação em escala de mesa
P_MAX = 4
S_MAX = Fraction(3)
D_BOUND = Fraction(3)
WORD_LENGTH = 2

# Até este número de colunas a eliminação usa o caminho denso
DENSE_THRESHOLD = 64

# Maior dim 𝔭 para a qual a álgebra exterior inteira é montada
MAX_GENERATION_DIM = 10

OUTPUT_FORMATS = ('table', 'json', 'xlsx')
VERIFY_TARGETS = ('garland', 'eigen', 'w', 'gl', 'finito', 'structure', 'all')


def to_half_integer(value) -> Fraction:
    """Converte texto ou número em racional de ½ℤ"""
    x = Fraction(str(value)) if not isinstance(value, Fraction) else value
    if (2 * x).denominator != 1:
        raise ValueError(f"Valor {value} não pertence a ½ℤ")
    return x


@dataclass(frozen=True)
class RunConfig:
    """Configuração de uma execução da linha de comando"""
    pair: str
    p_max: int = P_MAX
    s_max: Fraction = S_MAX
    d_bound: Fraction = D_BOUND
    format: str = 'table'
    out: Optional[str] = None
    which: str = 'all'
    jobs: int = 1
    word_length: int = WORD_LENGTH
    negative_control: bool = False
    verbose: bool = False

    def validate(self) -> Tuple[bool, str]:
        """Valida a configuração, retornando (ok, mensagem)"""
        if not self.pair:
            return False, "Informe o par simétrico com --pair"
        if self.p_max < 0:
            return False, "--pmax deve ser ≥ 0"
        if (2 * self.s_max).denominator != 1 or self.s_max < 0:
            return False, "--smax deve ser um elemento não negativo de ½ℤ"
        if self.d_bound < 1:
            return False, "--dbound deve ser ≥ 1"
        if self.format not in OUTPUT_FORMATS:
            return False, f"Formato desconhecido: {self.format}"
        if self.format == 'xlsx' and not self.out:
            return False, "O formato xlsx exige --out"
        if self.which not in VERIFY_TARGETS:
            return False, f"Verificação desconhecida: {self.which}"
        if self.jobs < 1:
            return False, "--jobs deve ser ≥ 1"
        return True, "Configuração válida"

    @property
    def full_coverage(self) -> bool:
        """Indica se s_max cobre todas as bidegradações (p, p/2) com p ≤ p_max"""
        return self.s_max >= Fraction(self.p_max, 2)

    def bidegrees(self):
        """Lista as bidegradações (p, s) com p ≤ p_max e p/2 ≤ s ≤ s_max"""
        result = []
        for p in range(self.p_max + 1):
            s = Fraction(p, 2)
            while s <= self.s_max:
                result.append((p, s))
                s += Fraction(1, 2)
        return result
