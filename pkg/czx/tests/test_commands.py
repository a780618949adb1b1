import json
from io import StringIO

import pytest
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from czx import suites
from czx.certificates import Certificate


def run(*args, **kwargs):
    out = StringIO()
    call_command(*args, stdout=out, **kwargs)
    return out.getvalue()


@pytest.mark.parametrize('model, word, expected', [
    ('cz', ['(1,2)', '(4,7)'], '(3,7)'),
    ('s3', ['(2,5)', 'z:1'], 'z:4'),
    ('s1', ['e1', 'e1'], 'e1'),
    ('s2:k=6,n=2', ['g:6', '(0,0)'], '(-6,0)'),
    ('s5:k=6,n=2', ['g:6', 'g:-12'], 'g:-6'),
    ('cz', ['(1,2)', '(4,7)', '(-1,-1)'], '(3,7)'),
])
def test_eval(model, word, expected):
    assert run('cz_eval', *word, model=model).strip() == expected


@pytest.mark.parametrize('model, word', [
    ('s3', ['e1']),
    ('cz', ['(1,2']),
    ('s2:k=6,n=4', ['(0,0)']),
    ('s2:k=6,n=2', ['g:5']),
    ('s7', ['(0,0)']),
])
def test_eval_errors(model, word):
    with pytest.raises(CommandError) as excinfo:
        run('cz_eval', *word, model=model)
    assert excinfo.value.returncode == 2


@pytest.mark.parametrize('pairs, expected', [
    ('((1,1),(2,2))', 'sigma k=0 quotient=Z'),
    ('((0,0),(0,0))', 'identity'),
    ('((4,0),(1,0));((6,0),(0,0))', 'sigma k=3 quotient=Z/3Z'),
])
def test_classify_congruence(pairs, expected):
    assert run('cz_classify_congruence', pairs).strip() == expected


def test_classify_congruence_error():
    with pytest.raises(CommandError) as excinfo:
        run('cz_classify_congruence', '((1,1),2)')
    assert excinfo.value.returncode == 2


def test_verify_assoc():
    report = json.loads(run('cz_verify', model='cz', window='-2:2', suites=['assoc']))
    assert report['tool'] == 'cz_verify'
    assert report['status'] == 'pass'
    assert report['config']['model'] == 'cz'
    assert report['config']['window'] == '-2:2'
    assert report['config']['suites'] == ['assoc']
    assert list(report) == ['tool', 'version', 'generated_at', 'config', 'status', 'suites']
    suite, = report['suites']
    assert suite['name'] == 'assoc'
    assert suite['status'] == 'pass'
    assert suite['checked'] == 25 ** 3
    assert suite['violations'] == 0


def test_verify_default_window(settings):
    settings.CZX_DEFAULT_WINDOW = '-1:1'
    report = json.loads(run('cz_verify', suites=['idempotents']))
    assert report['config']['window'] == '-1:1'


def test_verify_yaml(tmp_path):
    path = tmp_path / 'report.yml'
    out = run('cz_verify', model='s3', window='-1:1', suites=['idempotents'], report_format='yaml', out=str(path))
    assert out == ''
    content = path.read_text()
    assert 'status: pass' in content
    assert 'tool: cz_verify' in content


@pytest.mark.parametrize('options', [
    {'model': 's2:k=6,n=4'},
    {'model': 'cz', 'window': '0:0', 'suites': ['assoc']},
    {'model': 'cz', 'window': '3:1'},
    {'model': 'cz', 'suites': ['unknown']},
    {'model': 'cz', 'tail_bound': 0},
])
def test_verify_invalid_config(options):
    with pytest.raises(CommandError) as excinfo:
        run('cz_verify', **options)
    assert excinfo.value.returncode == 2


def test_verify_failure(monkeypatch):
    def broken(cfg):
        cert = Certificate('assoc')
        cert.check(False, lambda: {'check': 'associativity', 'model': 'cz', 'word': ['(0,0)'] * 3})
        return cert

    monkeypatch.setitem(suites.SUITES, 'assoc', broken)
    out = StringIO()
    with pytest.raises(CommandError) as excinfo:
        call_command('cz_verify', model='cz', window='-1:1', suites=['assoc'], stdout=out)
    assert excinfo.value.returncode == 1
    report = json.loads(out.getvalue())
    assert report['status'] == 'fail'
    assert report['suites'][0]['counterexamples'][0]['check'] == 'associativity'


def test_verify_unwritable_report(tmp_path):
    path = tmp_path / 'missing' / 'report.json'
    with pytest.raises(CommandError) as excinfo:
        run('cz_verify', model='cz', window='-1:1', suites=['idempotents'], out=str(path))
    assert excinfo.value.returncode == 2
    assert str(excinfo.value).startswith('cannot write report to %s' % path)


def test_installed_apps():
    assert settings.INSTALLED_APPS[:2] == ['rest_framework', 'czx']
    assert not [app for app in settings.INSTALLED_APPS if app.startswith('django.contrib')]
