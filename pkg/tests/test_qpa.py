import re

import pytest

import trivext
from trivext.qpa import qpa_relations

ARROW = re.compile(r'\[\d+, \d+, "\w+"\]')


def test_chain_relations():
    rels = qpa_relations(trivext.named_poset('chain', 2))
    assert rels == ['a0*w*a0', 'w*a0*w']


def test_chain_script():
    script = trivext.export_qpa(trivext.named_poset('chain', 2))
    assert 'Quiver(2, [[1, 2, "a0"], [2, 1, "w"]]);' in script
    assert 'PathAlgebra(Rationals, Q);' in script
    assert 'a0*w*a0' in script
    assert trivext.lint_gap(script) == []


def test_boolean_relations():
    rels = qpa_relations(trivext.named_poset('boolean', 2))
    assert 'a1*a3 - a0*a2' in rels
    assert 'a2*w*a1' in rels
    assert 'a3*w*a0' in rels
    assert len(rels) == len(set(rels))


def test_boolean_script():
    script = trivext.export_qpa(trivext.named_poset('boolean', 2), field=2)
    assert len(ARROW.findall(script)) == 5
    assert 'PathAlgebra(GF(2), Q);' in script
    assert 'CheckSimplePeriodicity(A, 60)' in script
    assert trivext.lint_gap(script) == []


@pytest.mark.parametrize('family, n', [('fdl3', None), ('tamari', 4),
                                       ('lattice11a', None)])
def test_scripts_lint_clean(family, n):
    script = trivext.export_qpa(trivext.named_poset(family, n), max_steps=10)
    assert trivext.lint_gap(script) == []
    assert 'CheckSimplePeriodicity(A, 10)' in script


@pytest.mark.parametrize('family, n', [('antichain', 2), ('chain', 1)])
def test_unbounded_posets_rejected(family, n):
    with pytest.raises(trivext.PosetError):
        trivext.export_qpa(trivext.named_poset(family, n))


@pytest.mark.parametrize('text, fragment', [
    ('f := function(x)\n  return x;\n', 'never closed'),
    ('for i in [1..3] do\n  Print(i);\nod', 'terminated'),
    ('x := [1, 2;\n', 'unclosed'),
    ('x := (1 + 2));\n', 'unbalanced'),
    ('s := "abc;\n', 'string'),
    ('if x then y := 1; od;\n', 'unexpected'),
])
def test_lint_gap_problems(text, fragment):
    problems = trivext.lint_gap(text)
    assert any(fragment in p for p in problems)


def test_lint_gap_ignores_strings_and_comments():
    text = 'Print("(do [if", "\\n"); # unbalanced ) in a comment\n'
    assert trivext.lint_gap(text) == []
