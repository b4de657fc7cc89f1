"""End-to-end checks of the command-line interface.

Commands run in-process through cli.main so output and exit codes can
be asserted exactly.  Usage failures raised by argparse surface as
SystemExit; failures detected later return the code.
"""

import json

import pytest

from qreals import cli
from qreals.cli import main
from qreals.identities import IdentityCase, SuiteReport


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as stop:
        code = stop.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# eval

def test_eval_rational_defaults_to_ratfun(capsys):
    code, out, _ = run(capsys, 'eval', '52/23')
    assert code == 0
    assert out == ('[52/23]_q = (1 + 3q + 5q^2 + 7q^3 + 8q^4 + 8q^5 + 7q^6'
                   ' + 6q^7 + 4q^8 + 2q^9 + q^10)'
                   ' / (1 + 2q + 3q^2 + 4q^3 + 4q^4 + 3q^5 + 3q^6 + 2q^7'
                   ' + q^8)\n')


def test_eval_integer_ratfun(capsys):
    code, out, _ = run(capsys, 'eval', '4', '--form', 'ratfun')
    assert code == 0
    assert out == '[4]_q = 1 + q + q^2 + q^3\n'


def test_eval_periodic_defaults_to_series(capsys):
    code, out, _ = run(capsys, 'eval', '[2;(2)]', '--prec', '14')
    assert code == 0
    assert out == ('[[2;(2)]]_q = 1 + q + q^4 - 2q^6 + q^7 + 4q^8 - 5q^9'
                   ' - 7q^10 + 18q^11 + 7q^12 - 55q^13 + O(q^14)\n')


def test_eval_rational_series_form(capsys):
    code, out, _ = run(capsys, 'eval', '5/2', '--form', 'series',
                       '--prec', '6')
    assert code == 0
    assert out.startswith('[5/2]_q = 1 + q + q^3 - q^4 + q^5 + O(q^6)')


def test_eval_irrational_ratfun_is_domain_error(capsys):
    code, _, err = run(capsys, 'eval', '[2;(2)]', '--form', 'ratfun')
    assert code == 2
    assert 'rational arguments only' in err


def test_eval_unparseable_value_is_usage_error(capsys):
    code, _, err = run(capsys, 'eval', 'three-ish')
    assert code == 1
    assert 'cannot parse' in err


# ---------------------------------------------------------------------------
# binom / brace / gamma

def test_binom_rational(capsys):
    code, out, _ = run(capsys, 'binom', '5/2', '2')
    assert code == 0
    assert out == ('binom(5/2, 2)_q = (1 + 3q + 4q^2 + 4q^3 + 2q^4 + q^5)'
                   ' / (1 + 3q + 3q^2 + q^3)\n')


def test_binom_irrational_is_series(capsys):
    code, out, _ = run(capsys, 'binom', '[2;(2)]', '1', '--prec', '6')
    assert code == 0
    assert 'O(q^6)' in out


def test_brace_half(capsys):
    code, out, _ = run(capsys, 'brace', '1/2')
    assert code == 0
    assert out == '{1/2}_q = (1 + q^2) / (1 + q)\n'


def test_gamma_half(capsys):
    code, out, _ = run(capsys, 'gamma', '1/2', '--prec', '8')
    assert code == 0
    assert out == ('gamma_q(1/2) = q^-1 + 3/2 - (1/8)q - (13/16)q^2'
                   ' + (91/128)q^3 - (171/256)q^4 + (779/1024)q^5'
                   ' - (3373/2048)q^6 + (107155/32768)q^7 + O(q^8)\n')


def test_gamma_pole_is_domain_error(capsys):
    code, _, err = run(capsys, 'gamma', '0')
    assert code == 2
    assert 'pole' in err


def test_gamma_irrational_is_domain_error(capsys):
    code, _, _ = run(capsys, 'gamma', '[2;(2)]')
    assert code == 2


# ---------------------------------------------------------------------------
# series

def test_series_positive_family(capsys):
    code, out, _ = run(capsys, 'series', 'B', '5/3', '--xdeg', '3',
                       '--prec', '6')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'B_{5/3}(q, x):'
    assert lines[1] == '[x^0]  1 + O(q^6)'
    assert lines[2] == '[x^1]  1 + q^2 - q^4 + q^5 + O(q^6)'
    assert lines[-1] == '+ O(x^4)'


def test_series_negative_family(capsys):
    code, out, _ = run(capsys, 'series', 'b', '1/2', '--xdeg', '2',
                       '--prec', '5')
    assert code == 0
    assert out.startswith('b_{1/2}(q, x):')


def test_series_bad_family_is_usage(capsys):
    code, _, _ = run(capsys, 'series', 'C', '1/2')
    assert code == 1


# ---------------------------------------------------------------------------
# snake

def test_snake_paths(capsys):
    code, out, _ = run(capsys, 'snake', 'paths', '5/2')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == '5 paths for 5/2:'
    weights = [int(line.rsplit(' ', 1)[1]) for line in lines[1:6]]
    assert sorted(weights) == [0, 1, 1, 2, 3]
    assert lines[-1] == 'weight polynomial = 1 + 2q + q^2 + q^3'


def test_snake_paths_with_minimum_ups(capsys):
    code, out, _ = run(capsys, 'snake', 'paths', '5/2', '1')
    assert code == 0
    assert out.splitlines()[-1] == 'weight polynomial = q + q^2 + q^3'


def test_snake_tuples(capsys):
    code, out, _ = run(capsys, 'snake', 'tuples', '5/2', '2')
    assert code == 0
    assert '15 tuples' in out
    assert 'class sizes: 5, 3' in out


def test_snake_tuples_need_length(capsys):
    code, _, err = run(capsys, 'snake', 'tuples', '5/2')
    assert code == 2
    assert 'tuple length' in err


def test_snake_graph(capsys):
    code, out, _ = run(capsys, 'snake', 'graph', '5/2')
    assert code == 0
    assert 'SnakeGraph(5/2' in out
    assert 'numerator = 1 + 2q + q^2 + q^3' in out
    assert 'denominator = 1 + q' in out


def test_snake_graph_rejects_length(capsys):
    code, _, _ = run(capsys, 'snake', 'graph', '5/2', '2')
    assert code == 2


def test_snake_needs_value_above_one(capsys):
    code, _, _ = run(capsys, 'snake', 'paths', '1/2')
    assert code == 2


# ---------------------------------------------------------------------------
# identity

def test_identity_run_single(capsys):
    code, out, _ = run(capsys, 'identity', 'run', '--filter',
                       'CHU_VANDERMONDE', '--trials', '3')
    assert code == 0
    assert 'CHU_VANDERMONDE' in out
    assert '0 unexpected' in out


def test_identity_run_unknown_name_is_usage(capsys):
    code, _, err = run(capsys, 'identity', 'run', '--filter', 'NOPE')
    assert code == 1
    assert 'unknown identity' in err


def test_identity_failure_exit_code(capsys, monkeypatch):
    bad = IdentityCase(identity='PASCAL_A', binding={'alpha': '5/2', 'k': 2},
                       mode='exact', equal=False, expect_equal=True)
    report = SuiteReport(seed=7, trials=1, precision=32, xdeg=5,
                         cases=(bad,))
    monkeypatch.setattr(cli, 'run_suite', lambda *a, **k: report)
    code, out, _ = run(capsys, 'identity', 'run')
    assert code == 4
    assert 'UNEXPECTED' in out


# ---------------------------------------------------------------------------
# flags and envelope

def test_json_envelope_round_trips(capsys):
    for argv in (('eval', '52/23'), ('gamma', '1/2', '--prec', '6'),
                 ('snake', 'tuples', '5/2', '2'),
                 ('identity', 'run', '--filter', 'PASCAL_A',
                  '--trials', '2')):
        code, out, _ = run(capsys, *argv, '--format', 'json')
        assert code == 0
        payload = json.loads(out)
        assert json.dumps(payload, sort_keys=True) == out.strip()
        assert set(payload) == {'command', 'input', 'precision', 'result'}


def test_json_eval_payload_shape(capsys):
    _, out, _ = run(capsys, 'eval', '5/2', '--format', 'json')
    payload = json.loads(out)
    assert payload['command'] == 'eval'
    assert payload['input'] == {'value': '5/2', 'form': 'ratfun'}
    assert payload['result']['value'] == {
        'e': 0, 'num': [1, 2, 1, 1], 'den': [1, 1]}


def test_output_is_deterministic(capsys):
    first = run(capsys, 'identity', 'run', '--filter', 'RIORDAN_PRODUCT',
                '--trials', '4', '--format', 'json')
    second = run(capsys, 'identity', 'run', '--filter', 'RIORDAN_PRODUCT',
                 '--trials', '4', '--format', 'json')
    assert first == second


def test_env_precision_default(capsys, monkeypatch):
    monkeypatch.setenv('QREAL_PREC', '6')
    code, out, _ = run(capsys, 'gamma', '1/2')
    assert code == 0
    assert out.endswith('O(q^6)\n')
    # an explicit flag still wins
    code, out, _ = run(capsys, 'gamma', '1/2', '--prec', '5')
    assert out.endswith('O(q^5)\n')


def test_latex_rendering(capsys):
    _, out, _ = run(capsys, 'eval', '5/2', '--latex')
    assert out == '[5/2]_q = \\frac{1 + 2q + q^{2} + q^{3}}{1 + q}\n'
    _, out, _ = run(capsys, 'gamma', '1/2', '--prec', '5', '--latex')
    assert 'q^{-1} + \\frac{3}{2}' in out
    _, out, _ = run(capsys, 'series', 'B', '1/2', '--xdeg', '1',
                    '--prec', '4', '--latex')
    assert '\\left(' in out and 'O(x^{2})' in out


def test_timing_flag_adds_line(capsys):
    _, out, _ = run(capsys, 'eval', '5/2', '--timing')
    assert out.splitlines()[-1].startswith('time:')
    _, out, _ = run(capsys, 'eval', '5/2', '--format', 'json', '--timing')
    assert 'seconds' in json.loads(out)


def test_prec_must_be_positive(capsys):
    code, _, _ = run(capsys, 'eval', '5/2', '--prec', '0')
    assert code == 1


def test_no_arguments_is_usage(capsys):
    code, _, _ = run(capsys)
    assert code == 1


def test_unknown_command_is_usage(capsys):
    code, _, _ = run(capsys, 'transmogrify', '5/2')
    assert code == 1
