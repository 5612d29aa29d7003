"""
Ponto de entrada da linha de comando
Comandos: describe | abelian | verify | spectrum
"""

import argparse
import logging
import sys
from typing import List, Optional

from backend.config import D_BOUND, OUTPUT_FORMATS, P_MAX, S_MAX, VERIFY_TARGETS, RunConfig, to_half_integer
from backend.lie_core import CartanSpecError
from backend.symmetric_pair import InvolutionError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

COMMANDS = ('describe', 'abelian', 'verify', 'spectrum')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='app.py',
        description="Homologia de 𝔲⁻ e subespaços abelianos de pares simétricos, em aritmética exata",
    )
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--pair', required=True, help='Ex.: "A2:switch" ou "B2:signs=+-"')
    parser.add_argument('--pmax', type=int, default=P_MAX)
    parser.add_argument('--smax', type=to_half_integer, default=S_MAX)
    parser.add_argument('--dbound', type=to_half_integer, default=D_BOUND)
    parser.add_argument('--format', choices=OUTPUT_FORMATS, default='table')
    parser.add_argument('--out', default=None)
    parser.add_argument('--which', choices=VERIFY_TARGETS, default='all')
    parser.add_argument('--jobs', type=int, default=1)
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--negative-control', action='store_true', help=argparse.SUPPRESS)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        pair=args.pair,
        p_max=args.pmax,
        s_max=args.smax,
        d_bound=args.dbound,
        format=args.format,
        out=args.out,
        which=args.which,
        jobs=args.jobs,
        negative_control=args.negative_control,
        verbose=args.verbose,
    )


def dispatch(command: str, config: RunConfig):
    if command == 'describe':
        from pages.describe import cmd_describe
        return cmd_describe(config)
    elif command == 'abelian':
        from pages.abelian import cmd_abelian
        return cmd_abelian(config)
    elif command == 'verify':
        from pages.verify import cmd_verify
        return cmd_verify(config)
    elif command == 'spectrum':
        from pages.spectrum import cmd_spectrum
        return cmd_spectrum(config)
    raise ValueError(f"Comando desconhecido: {command}")


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal da aplicação"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )

    config = config_from_args(args)
    ok, message = config.validate()
    if not ok:
        print(f"❌ {message}", file=sys.stderr)
        return EXIT_USAGE

    try:
        code, _ = dispatch(args.command, config)
    except (CartanSpecError, InvolutionError) as e:
        print(f"❌ Erro na especificação do par: {e}", file=sys.stderr)
        return EXIT_USAGE

    if code == EXIT_OK:
        logger.info("✅ %s concluído para %s", args.command, config.pair)
    else:
        print(f"❌ Verificação falhou para {config.pair}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
