import re
from typing import List, Tuple

from .core import CzElement, Window
from .exceptions import CzError, FormError
from .models import E1, ExtElement, IdealGroup, ModelSpec, UnitGroup

INT = r'[+-]?\d+'
CZ_RE = re.compile(r'^\(\s*(%s)\s*,\s*(%s)\s*\)$' % (INT, INT))
WINDOW_RE = re.compile(r'^\s*(%s)\s*:\s*(%s)\s*$' % (INT, INT))
MODEL_RE = re.compile(r'^\s*(cz|s[1-5])\s*(?::\s*(.*?))?\s*$')
PAIR_RE = re.compile(r'^\(\s*(\([^()]*\))\s*,\s*(\([^()]*\))\s*\)$')

MODEL_PARAMS = {
    's2': {'k', 'n'},
    's5': {'k', 'n'},
    's1': {'m1', 'step', 'seq'},
    's4': {'m1', 'step', 'seq'},
}


def parse_int(value: str, field: str = '') -> int:
    try:
        return int(str(value).strip())
    except (TypeError, ValueError):
        raise FormError(field, 'Expected an integer, got %r.' % value)


def parse_element(text: str, field: str = 'element') -> CzElement:
    """разбирает элемент 𝒞_ℤ вида "(a,b)", например "(-3,7)" """
    match = CZ_RE.match(str(text).strip())
    if not match:
        raise FormError(field, 'Expected an element of the form (a,b), got %r.' % text)
    try:
        return CzElement(int(match.group(1)), int(match.group(2)))
    except CzError as e:
        raise FormError(field, str(e))


def parse_ext_element(text: str, m: ModelSpec, field: str = 'element') -> ExtElement:
    """
    Разбирает элемент модели: "(a,b)", "e1", "g:<value>" (value кратно k), "z:<n>".
    Сорт элемента должен быть допустим в модели m.
    """
    text = str(text).strip()
    if text == 'e1':
        x = E1
    elif text.startswith('g:'):
        value = parse_int(text[2:], field)
        if not m.k or value % m.k:
            raise FormError(field, 'Unit group value %d is not a multiple of k in model %s.' % (value, m))
        x = UnitGroup(value // m.k)
    elif text.startswith('z:'):
        x = IdealGroup(parse_int(text[2:], field))
    else:
        x = parse_element(text, field)
    try:
        return m.validate(x)
    except CzError as e:
        raise FormError(field, str(e))


def parse_window(text: str, field: str = 'window') -> Window:
    """"lo:hi" -> Window"""
    match = WINDOW_RE.match(str(text))
    if not match:
        raise FormError(field, 'Expected a window of the form lo:hi, got %r.' % text)
    try:
        return Window(int(match.group(1)), int(match.group(2)))
    except CzError as e:
        raise FormError(field, str(e))


def parse_model(text: str, field: str = 'model') -> ModelSpec:
    """
    Разбирает описание модели: "cz", "s1", "s2:k=<k>,n=<n>", "s3", "s4", "s5:k=<k>,n=<n>";
    для s1/s4 допускается "s1:m1=<отрицательное>,step=<положительное>" либо явное начало
    последовательности "s1:seq=-1/-2/-4,step=3" (дальше m_i убывают с шагом step).
    """
    match = MODEL_RE.match(str(text).lower())
    if not match:
        raise FormError(field, 'Unknown model %r.' % text)
    name, tail = match.group(1), match.group(2)

    params = {}
    for chunk in filter(None, (tail or '').split(',')):
        key, sep, value = chunk.partition('=')
        key = key.strip()
        if not sep or key not in MODEL_PARAMS.get(name, ()):
            raise FormError(field, 'Unexpected parameter %r for model %s.' % (chunk.strip(), name))
        if key == 'seq':
            params[key] = tuple(parse_int(v, field) for v in value.split('/'))
        else:
            params[key] = parse_int(value, field)

    kwargs = {'model': ModelSpec.model_from_str(name)}
    if name in ('s2', 's5'):
        missing = {'k', 'n'} - set(params)
        if missing:
            raise FormError(field, 'Model %s needs parameters %s.' % (name, ', '.join(sorted(missing))))
        kwargs.update(k=params['k'], n_div=params['n'])
    else:
        kwargs.update(params)
    try:
        return ModelSpec(**kwargs)
    except CzError as e:
        raise FormError(field, str(e))


def parse_pairs(text: str, field: str = 'pairs') -> List[Tuple[CzElement, CzElement]]:
    """"((1,1),(2,2));((4,0),(1,0))" -> список пар"""
    chunks = [chunk.strip() for chunk in str(text).split(';') if chunk.strip()]
    if not chunks:
        raise FormError(field, 'Expected at least one pair.')
    ret = []
    for chunk in chunks:
        match = PAIR_RE.match(chunk)
        if not match:
            raise FormError(field, 'Expected a pair of the form ((a,b),(c,d)), got %r.' % chunk)
        ret.append((parse_element(match.group(1), field), parse_element(match.group(2), field)))
    return ret
