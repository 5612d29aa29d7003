"""
Módulo de Utilitários
Formatação de racionais e pesos, serialização JSON e exportação de relatórios
"""

import io
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

logger = logging.getLogger(__name__)


def format_rational(value) -> str:
    """Formata racional como "num/den" (inteiros sem denominador)"""
    x = Fraction(value)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Converte "num/den" de volta em Fraction"""
    return Fraction(text.strip())


def format_weight(coords: Sequence, symbol: str = "α") -> str:
    """
    Formata um peso dado em coordenadas de raízes simples

    Exemplos: (1, 1) → "α1+α2", (0, -1) → "-α2", (0, 0) → "0",
    (3, 2) → "3α1+2α2", (1/2, 0) → "1/2α1"
    """
    parts = []
    for i, c in enumerate(coords, start=1):
        c = Fraction(c)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        coef = "" if mag == 1 else format_rational(mag)
        parts.append(f"{sign}{coef}{symbol}{i}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def format_affine(finite: Sequence, delta, lambda0=0) -> str:
    """Formata sδ + ᾱ + bΛ₀"""
    parts = []
    delta = Fraction(delta)
    if delta != 0:
        parts.append(("" if delta == 1 else format_rational(delta)) + "δ")
    bar = format_weight(finite)
    if bar != "0":
        if parts and not bar.startswith("-"):
            parts.append("+")
        parts.append(bar)
    lambda0 = Fraction(lambda0)
    if lambda0 != 0:
        if parts and lambda0 > 0:
            parts.append("+")
        parts.append(format_rational(lambda0) + "Λ0")
    return "".join(parts) if parts else "0"


def to_jsonable(obj: Any) -> Any:
    """Converte recursivamente racionais, tuplas e conjuntos para JSON"""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(v) for v in obj), key=str)
    if hasattr(obj, 'to_dict'):
        return to_jsonable(obj.to_dict())
    raise TypeError(f"Objeto não serializável: {type(obj).__name__}")


def emit_json(report: Dict) -> str:
    """Serializa um relatório de forma determinística"""
    return json.dumps(to_jsonable(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> Dict:
    """Lê um relatório emitido por emit_json"""
    return json.loads(text)


def rows_to_dataframe(rows: List[Dict], columns: Optional[List[str]] = None) -> pd.DataFrame:
    """Monta um DataFrame com racionais já formatados"""
    df = pd.DataFrame([to_jsonable(r) for r in rows], columns=columns)
    return df


def render_table(title: str, df: pd.DataFrame) -> str:
    """Renderiza uma tabela com título para o terminal"""
    if df.empty:
        body = "(vazio)"
    else:
        body = df.to_string(index=False)
    return f"== {title} ==\n{body}\n"


def export_to_excel(dataframes: Dict[str, pd.DataFrame]) -> bytes:
    """
    Exporta múltiplos DataFrames para um arquivo Excel

    Args:
        dataframes: Dicionário com nome da aba e DataFrame

    Returns:
        Bytes do arquivo Excel
    """
    buffer = io.BytesIO()

    with pd.ExcelWriter(buffer, engine='openpyxl') as writer:
        for sheet_name, df in dataframes.items():
            # Excel limita nomes de aba a 31 caracteres
            df.to_excel(writer, sheet_name=sheet_name[:31], index=False)

    return buffer.getvalue()


def import_from_excel(file_data: bytes, expected_columns: List[str], sheet_name=0) -> tuple:
    """
    Importa uma aba de relatório de um arquivo Excel

    Returns:
        tuple: (sucesso: bool, dados: DataFrame ou mensagem de erro)
    """
    try:
        df = pd.read_excel(io.BytesIO(file_data), sheet_name=sheet_name, dtype=str)

        missing_cols = set(expected_columns) - set(df.columns)
        if missing_cols:
            return False, f"Colunas faltantes: {', '.join(sorted(missing_cols))}"

        return True, df

    except Exception as e:
        return False, f"Erro ao ler arquivo: {str(e)}"


def write_output(report: Dict, frames: Dict[str, pd.DataFrame], fmt: str,
                 out: Optional[str] = None) -> str:
    """
    Emite o relatório no formato pedido

    table e json vão para a saída padrão (ou para --out); xlsx exige --out.
    Retorna o texto emitido (vazio para xlsx).
    """
    if fmt == 'json':
        text = emit_json(report)
    elif fmt == 'table':
        text = "".join(render_table(name, df) for name, df in frames.items())
    elif fmt == 'xlsx':
        data = export_to_excel(frames)
        Path(out).write_bytes(data)
        logger.info("Relatório Excel gravado em %s", out)
        return ""
    else:
        raise ValueError(f"Formato desconhecido: {fmt}")

    if out:
        Path(out).write_text(text, encoding='utf-8')
        logger.info("Relatório gravado em %s", out)
    else:
        print(text, end="")
    return text
