"""GAP/QPA scripts presenting the trivial extension of an incidence algebra.

For a poset with distinct least and greatest elements, ``T(k[P])`` is the
path algebra of the Hasse quiver with one extra arrow ``w`` from the top to
the bottom, modulo

* the differences of parallel paths of the Hasse quiver,
* ``alpha * c_l`` and ``c_l * alpha`` for every arrow ``alpha`` composable
  with the cycle ``c_l`` through ``w`` based at ``l``,
* ``p(a, top) * w * p(bottom, b)`` for incomparable ``a`` and ``b``.

QPA composes paths left to right, like the rest of this package.
"""
import logging
import re

from trivext.field import asfield
from trivext.poset import PosetError

logger = logging.getLogger(__name__)

CYCLE_ARROW = 'w'


def _paths(p, labels, x, y):
    """All Hasse paths from `x` to `y` as lists of arrow labels."""
    if x == y:
        return [[]]
    out = []
    for z in p.upper_covers[x]:
        if p.leq[z, y]:
            out += [[labels[(x, z)]] + rest for rest in _paths(p, labels, z, y)]
    return out


def _word(arrows):
    return '*'.join(arrows)


def qpa_relations(p):
    """Relations of the bound quiver presentation as GAP expressions.

    Raises
    ------
    PosetError
        If `p` lacks a least or greatest element, or they coincide.

    """
    if not p.is_bounded() or p.size < 2:
        raise PosetError('QPA export needs a poset with distinct least and '
                         'greatest elements')
    top, bottom = p.top, p.bottom
    labels = {(i, j): f'a{k}' for k, (i, j) in enumerate(p.covers)}

    def path(x, y):
        return _paths(p, labels, x, y)[0]

    rels = []
    for x in range(p.size):
        for y in range(p.size):
            if x != y and p.leq[x, y]:
                first, *others = _paths(p, labels, x, y)
                rels += [f'{_word(q)} - {_word(first)}' for q in others]

    cycle = [path(l, top) + [CYCLE_ARROW] + path(bottom, l)
             for l in range(p.size)]
    arrows = [(i, j, labels[(i, j)]) for i, j in p.covers]
    arrows.append((top, bottom, CYCLE_ARROW))
    seen = set()
    for s, t, label in arrows:
        for word in (_word([label] + cycle[t]), _word(cycle[s] + [label])):
            if word not in seen:
                seen.add(word)
                rels.append(word)

    for a in range(p.size):
        for b in range(p.size):
            if not p.comparable(a, b):
                rels.append(_word(path(a, top) + [CYCLE_ARROW]
                                  + path(bottom, b)))
    return rels


def export_qpa(p, field=None, max_steps=60):
    """GAP script building ``T(k[P])`` in QPA and checking its simples.

    Parameters
    ----------
    p : :class:`~trivext.Poset`
        Bounded poset with distinct least and greatest elements.
    field : :class:`~trivext.Field`, int or str, optional
        Default is the rationals.
    max_steps : int, optional
        Syzygy budget of the generated ``CheckSimplePeriodicity`` call.

    Returns
    -------
    script : str

    Raises
    ------
    PosetError
        If `p` is not bounded.

    Examples
    --------
    .. code:: pycon

        >>> script = trivext.export_qpa(trivext.named_poset('chain', 2))
        >>> 'a0*w*a0' in script
        True

    """
    field = asfield(field)
    rels = qpa_relations(p)
    gap_field = 'Rationals' if field.characteristic == 0 \
        else f'GF({field.characteristic})'
    arrows = [f'[{i + 1}, {j + 1}, "a{k}"]' for k, (i, j) in enumerate(p.covers)]
    arrows.append(f'[{p.top + 1}, {p.bottom + 1}, "{CYCLE_ARROW}"]')
    lines = [
        '# Trivial extension of an incidence algebra',
        '# vertices: ' + ', '.join(f'v{k + 1}={name}'
                                   for k, name in enumerate(p.names)),
        'LoadPackage("qpa");',
        f'Q := Quiver({p.size}, [{", ".join(arrows)}]);',
        f'KQ := PathAlgebra({gap_field}, Q);',
        'AssignGeneratorVariables(KQ);',
        'rels := [',
        ',\n'.join(f'  {r}' for r in rels),
        '];',
        'A := KQ/rels;',
        '',
        'CheckSimplePeriodicity := function(A, maxsteps)',
        '  local result, S, M, i, n;',
        '  result := [];',
        '  for S in SimpleModules(A) do',
        '    M := S;',
        '    n := fail;',
        '    for i in [1..maxsteps] do',
        '      M := 1stSyzygy(M);',
        '      if Dimension(M) = 0 then break; fi;',
        '      if Dimension(M) = 1 then n := i; break; fi;',
        '    od;',
        '    Add(result, n);',
        '  od;',
        '  return result;',
        'end;',
        '',
        f'Print(CheckSimplePeriodicity(A, {int(max_steps)}), "\\n");',
    ]
    logger.info('exported %d relations for %d vertices', len(rels), p.size)
    return '\n'.join(lines) + '\n'


_STRING = re.compile(r'"(?:[^"\\\n]|\\.)*"')
_COMMENT = re.compile(r'#[^\n]*')
_WORD = re.compile(r'\b[A-Za-z_0-9]+\b')
_PAIRS = {')': '(', ']': '[', '}': '{'}
_BLOCKS = (('function', 'end'), ('do', 'od'), ('if', 'fi'))


def lint_gap(text):
    """Grammar-level checks of a GAP script.

    Checks string termination, bracket balance, the nesting of
    ``function``/``end``, ``do``/``od`` and ``if``/``fi`` and that the last
    statement is terminated by a semicolon.

    Returns
    -------
    problems : list of str
        Empty when no problem was found.

    """
    problems = []
    body = _COMMENT.sub('', _STRING.sub('""', text))
    if body.count('"') % 2:
        problems.append('unterminated string')
    stack = []
    for lineno, line in enumerate(body.splitlines(), 1):
        for ch in line:
            if ch in '([{':
                stack.append((ch, lineno))
            elif ch in _PAIRS:
                if not stack or stack[-1][0] != _PAIRS[ch]:
                    problems.append(f'line {lineno}: unbalanced {ch!r}')
                else:
                    stack.pop()
    problems += [f'line {lineno}: unclosed {ch!r}' for ch, lineno in stack]

    words = _WORD.findall(body)
    opened = []
    for word in words:
        for start, stop in _BLOCKS:
            if word == start:
                opened.append(start)
            elif word == stop:
                if not opened or opened[-1] != start:
                    problems.append(f'unexpected {stop!r}')
                else:
                    opened.pop()
    problems += [f'{word!r} block is never closed' for word in opened]

    stripped = body.strip()
    if stripped and not stripped.endswith(';'):
        problems.append('last statement is not terminated by ";"')
    return problems
