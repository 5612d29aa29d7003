"""
Testes da linha de comando: códigos de saída, JSON determinístico e exportação Excel
"""

from fractions import Fraction

import pytest

from app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main
from backend.config import RunConfig, to_half_integer
from backend.utils import (
    emit_json,
    format_affine,
    format_rational,
    format_weight,
    import_from_excel,
    parse_json,
    parse_rational,
    to_jsonable,
)


def run_json(capsys, *argv):
    code = main(list(argv) + ['--format', 'json'])
    out = capsys.readouterr().out
    return code, parse_json(out), out


# ==================== DESCRIBE ====================

def test_describe_switch_sl2(capsys):
    code, report, _ = run_json(capsys, 'describe', '--pair', 'A1:switch')
    assert code == EXIT_OK
    assert (report['dim_g'], report['dim_k'], report['dim_p'], report['rank']) == (6, 3, 3, 1)
    assert [r['root'] for r in report['simple_roots']] == ['1/2δ-α1', 'α1']
    assert report['rho']['ok'] is True
    assert report['rho']['coroot_values'] == ['1', '1']


def test_describe_inner_sl2(capsys):
    code, report, _ = run_json(capsys, 'describe', '--pair', 'A1:signs=-')
    assert code == EXIT_OK
    assert (report['dim_k'], report['dim_p']) == (1, 2)
    assert report['delta0_positive'] == []
    assert report['p_weights'] == ['α1', '-α1']


@pytest.mark.parametrize("pair", ['Z9:switch', 'A1', 'A2:signs=+', 'A1:signs=-+'])
def test_bad_pair_is_usage_error(capsys, pair):
    assert main(['describe', '--pair', pair]) == EXIT_USAGE
    assert 'Erro' in capsys.readouterr().err


def test_xlsx_requires_out(capsys):
    assert main(['describe', '--pair', 'A1:switch', '--format', 'xlsx']) == EXIT_USAGE


def test_non_half_integer_smax_rejected():
    with pytest.raises(SystemExit) as exc:
        main(['verify', '--pair', 'A1:switch', '--smax', '1/3'])
    assert exc.value.code == 2


def test_negative_control_hidden_from_help():
    assert '--negative-control' not in build_parser().format_help()


# ==================== ABELIAN ====================

def test_abelian_sl3_peterson(capsys):
    code, report, _ = run_json(capsys, 'abelian', '--pair', 'A2:switch')
    assert code == EXIT_OK
    assert report['count'] == 4
    assert report['peterson'] == {'count': 4, 'expected': 4, 'ok': True}
    dims = sorted(s['dim'] for s in report['subspaces'])
    assert dims == [0, 1, 2, 2]
    top = next(s for s in report['subspaces'] if s['dim'] == 1)
    assert top['weights'] == ['α1+α2']
    assert top['w_rho_minus_rho'] == '-1/2δ+α1+α2'


def test_abelian_table_shows_verdict(capsys):
    assert main(['abelian', '--pair', 'A2:switch']) == EXIT_OK
    out = capsys.readouterr().out
    assert '== Subespacos ==' in out
    assert '= 2^2 ✓' in out


def test_abelian_inner_has_no_peterson(capsys):
    code, report, _ = run_json(capsys, 'abelian', '--pair', 'A1:signs=-')
    assert code == EXIT_OK
    assert report['count'] == 3
    assert 'peterson' not in report


# ==================== VERIFY ====================

def test_verify_all_switch_sl2(capsys):
    code, report, _ = run_json(capsys, 'verify', '--pair', 'A1:switch', '--pmax', '3', '--smax', '2')
    assert code == EXIT_OK
    assert report['passed'] is True
    assert all(report['verdicts'].values())


@pytest.mark.parametrize("which", ['garland', 'eigen', 'w', 'gl', 'finito', 'structure'])
def test_verify_single_target(capsys, which):
    code, report, _ = run_json(capsys, 'verify', '--pair', 'A1:signs=-', '--which', which,
                               '--pmax', '2', '--smax', '2')
    assert code == EXIT_OK
    assert report['passed'] is True


def test_verify_negative_control_fails(capsys):
    code, report, _ = run_json(capsys, 'verify', '--pair', 'A1:switch', '--which', 'garland',
                               '--smax', '2', '--pmax', '3', '--negative-control')
    assert code == EXIT_FAILED
    assert report['verdicts'] == {'garland': False}
    assert report['perturbation']['bracket'] == ['p:e(α1)', 'p:h1']
    assert any(not row['ok'] for row in report['garland'])


def test_verify_output_is_deterministic(capsys):
    argv = ['verify', '--pair', 'A1:switch', '--which', 'eigen', '--pmax', '3']
    _, _, first = run_json(capsys, *argv)
    _, _, second = run_json(capsys, *argv, '--jobs', '2')
    assert first == second


# ==================== SPECTRUM ====================

def test_spectrum_switch_sl2(capsys):
    code, report, _ = run_json(capsys, 'spectrum', '--pair', 'A1:switch')
    assert code == EXIT_OK
    rows = report['rows']
    assert [r['p'] for r in rows] == [0, 1, 2, 3]
    assert rows[0]['max_casimir'] == '0'
    assert rows[0]['witnesses'] == ['∅']
    assert rows[1]['max_casimir'] == '1/2'
    assert rows[1]['bound'] == '1/2'
    assert rows[1]['witnesses'] == ['α1']
    assert rows[2]['witnesses'] == []


def test_spectrum_sl3_degree_two(capsys):
    _, report, _ = run_json(capsys, 'spectrum', '--pair', 'A2:switch', '--pmax', '2')
    row = report['rows'][2]
    assert row['max_casimir'] == '1'
    assert sorted(row['witnesses']) == ['α1, α1+α2', 'α2, α1+α2']


# ==================== ARQUIVOS ====================

def test_json_out_file(tmp_path):
    out = tmp_path / 'describe.json'
    assert main(['describe', '--pair', 'A1:switch', '--format', 'json', '--out', str(out)]) == EXIT_OK
    assert parse_json(out.read_text(encoding='utf-8'))['dim_p'] == 3


def test_xlsx_export_round_trip(tmp_path):
    out = tmp_path / 'abelian.xlsx'
    assert main(['abelian', '--pair', 'A2:switch', '--format', 'xlsx', '--out', str(out)]) == EXIT_OK
    ok, df = import_from_excel(out.read_bytes(), ['dim', 'pesos', 'mu'], sheet_name='Subespacos')
    assert ok, df
    assert len(df) == 4
    assert sorted(df['dim']) == ['0', '1', '2', '2']

    ok, message = import_from_excel(out.read_bytes(), ['inexistente'], sheet_name='Subespacos')
    assert not ok
    assert 'inexistente' in message


def test_import_from_excel_invalid_bytes():
    ok, message = import_from_excel(b'nada', ['dim'])
    assert not ok
    assert message.startswith('Erro ao ler arquivo')


# ==================== UTILITÁRIOS ====================

@pytest.mark.parametrize("value,text", [
    (Fraction(1, 2), '1/2'), (Fraction(-3), '-3'), (0, '0'), (Fraction(7, 4), '7/4'),
])
def test_format_rational(value, text):
    assert format_rational(value) == text
    assert parse_rational(text) == value


@pytest.mark.parametrize("coords,text", [
    ((1, 1), 'α1+α2'), ((0, -1), '-α2'), ((0, 0), '0'), ((3, 2), '3α1+2α2'), ((Fraction(1, 2), 0), '1/2α1'),
])
def test_format_weight(coords, text):
    assert format_weight(coords) == text


def test_format_affine():
    assert format_affine((-1,), Fraction(1, 2)) == '1/2δ-α1'
    assert format_affine((1,), 1) == 'δ+α1'
    assert format_affine((0,), 0, Fraction(1, 2)) == '1/2Λ0'
    assert format_affine((0,), 0) == '0'


def test_emit_json_sorted_and_exact():
    text = emit_json({'b': Fraction(1, 3), 'a': (1, 2), 1: True})
    assert text.endswith('\n')
    assert parse_json(text) == to_jsonable({'b': Fraction(1, 3), 'a': (1, 2), 1: True})
    assert text.index('"1"') < text.index('"a"') < text.index('"b"')


def test_to_half_integer():
    assert to_half_integer('3/2') == Fraction(3, 2)
    with pytest.raises(ValueError):
        to_half_integer('1/3')


def test_run_config_validation():
    assert RunConfig(pair='A1:switch').validate()[0]
    assert not RunConfig(pair='').validate()[0]
    assert not RunConfig(pair='A1:switch', d_bound=Fraction(1, 2)).validate()[0]
    assert not RunConfig(pair='A1:switch', jobs=0).validate()[0]
    assert RunConfig(pair='A1:switch', p_max=4, s_max=2).full_coverage
    assert not RunConfig(pair='A1:switch', p_max=4, s_max=Fraction(3, 2)).full_coverage


def test_bidegrees():
    assert RunConfig(pair='A1:switch', p_max=1, s_max=1).bidegrees() == [
        (0, 0), (0, Fraction(1, 2)), (0, 1), (1, Fraction(1, 2)), (1, 1)]
