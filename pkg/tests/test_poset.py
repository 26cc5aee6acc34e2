import logging

import numpy as np
import pytest

import trivext
from trivext.poset import (
    BoundError,
    CycleError,
    DuplicateCoverError,
    UnknownElementError,
    down_sets,
)

M3 = 'z < a\nz < b\nz < c\na < t\nb < t\nc < t\n'
N5 = 'z < a\na < b\nb < t\nz < c\nc < t\n'


def _is_chain(p):
    return p.size == len(p.covers) + 1 and \
        all(len(c) <= 1 for c in p.upper_covers)


def test_parse_poset():
    p = trivext.parse_poset('a < b')
    assert p.covers == ((0, 1),)
    assert p.names == ('a', 'b')


def test_parse_declared_antichain():
    p = trivext.parse_poset('elem a\nelem b\nelem c  # three\n')
    assert p.size == 3
    assert p.covers == ()


@pytest.mark.parametrize('text, error', [
    ('a < b\nb < a\n', CycleError),
    ('a < a\n', CycleError),
    ('elem a\nelem b\na < c\n', UnknownElementError),
    ('a < b\na < b\n', DuplicateCoverError),
    ('elem a\nelem a\n', trivext.PosetError),
    ('a <= b\n', trivext.PosetError),
    ('elem\n', trivext.PosetError),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        trivext.parse_poset(text)


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        trivext.parse_poset('a < b\nb < a\n')


def test_redundant_relation_is_dropped(caplog):
    with caplog.at_level(logging.WARNING):
        p = trivext.parse_poset('a < b\nb < c\na < c\n')
    assert p.covers == ((0, 1), (1, 2))
    assert 'transitivity' in caplog.text


def test_constructor_rejects_redundant_covers():
    with pytest.raises(trivext.PosetError):
        trivext.Poset(3, [(0, 1), (1, 2), (0, 2)])
    p = trivext.Poset.from_relations(3, [(0, 1), (1, 2), (0, 2)])
    assert p.covers == ((0, 1), (1, 2))


def test_constructor_rejects_bad_covers():
    with pytest.raises(trivext.PosetError):
        trivext.Poset(2, [(0, 2)])
    with pytest.raises(CycleError):
        trivext.Poset(2, [(0, 0)])
    with pytest.raises(DuplicateCoverError):
        trivext.Poset(2, [(0, 1), (0, 1)])


def test_leq_is_read_only():
    p = trivext.named_poset('chain', 3)
    assert p.leq[0, 2]
    with pytest.raises(ValueError):
        p.leq[2, 0] = True


def test_bounds():
    b2 = trivext.named_poset('boolean', 2)
    assert b2.bottom == 0
    assert b2.top == 3
    assert b2.is_bounded()
    a2 = trivext.named_poset('antichain', 2)
    assert a2.bottom is None and a2.top is None
    assert not a2.is_bounded()
    assert not a2.comparable(0, 1)


def test_join_and_meet_tables():
    b2 = trivext.named_poset('boolean', 2)
    assert b2.join_table[1, 2] == 3
    assert b2.meet_table[1, 2] == 0
    assert trivext.named_poset('antichain', 2).join_table[0, 1] == -1


def test_linear_extension_respects_order():
    p = trivext.named_poset('tamari', 4)
    position = {x: k for k, x in enumerate(p.linear_extension())}
    assert all(position[i] < position[j] for i, j in p.covers)


def test_hasse_quiver():
    q = trivext.named_poset('boolean', 2).hasse_quiver()
    assert q.vertex_count == 4
    assert len(q.arrows) == 4


def test_interval_count():
    assert trivext.named_poset('boolean', 2).interval_count() == 9
    assert trivext.named_poset('chain', 4).interval_count() == 10


def test_relabel():
    p = trivext.named_poset('chain', 3)
    q = trivext.relabel(p, [2, 1, 0])
    assert q.covers == ((1, 0), (2, 1))
    assert q.names == ('2', '1', '0')
    with pytest.raises(trivext.PosetError):
        trivext.relabel(p, [0, 0, 1])


def test_format_poset():
    p = trivext.parse_poset(N5)
    q = trivext.parse_poset(trivext.format_poset(p))
    assert q == p
    assert q.names == p.names


@pytest.mark.parametrize('family, n, size', [
    ('antichain', 3, 8),
    ('chain', 3, 4),
    ('boolean', 3, 20),
    ('boolean', 0, 2),
])
def test_order_ideals_size(family, n, size):
    j = trivext.order_ideals(trivext.named_poset(family, n))
    assert j.size == size
    assert trivext.is_distributive_lattice(j)


def test_order_ideals_of_chain_is_chain():
    j = trivext.order_ideals(trivext.named_poset('chain', 3))
    assert _is_chain(j)
    assert j.names[0] == '{}'


def test_order_ideals_bound():
    with pytest.raises(BoundError):
        trivext.order_ideals(trivext.named_poset('antichain', 21))


def test_down_sets_are_sorted():
    masks = down_sets(trivext.named_poset('antichain', 2))
    assert masks == [0, 1, 2, 3]


@pytest.mark.parametrize('text, expected', [
    (M3, False),
    (N5, False),
    ('a < b\nb < c\n', True),
    ('elem a\nelem b\n', False),
])
def test_is_distributive_lattice(text, expected):
    check = trivext.is_distributive_lattice(trivext.parse_poset(text))
    assert bool(check) is expected
    assert bool(check.reasons) is not expected


def test_non_lattice_reasons_mention_join():
    check = trivext.is_distributive_lattice(trivext.named_poset('antichain', 2))
    assert any('join' in r for r in check.reasons)


def test_join_irreducibles():
    j = trivext.join_irreducibles(trivext.named_poset('boolean', 3))
    assert j.size == 3
    assert j.covers == ()


@pytest.mark.parametrize('family, n, size, distributive', [
    ('chain', 5, 5, True),
    ('antichain', 4, 4, False),
    ('boolean', 2, 4, True),
    ('tamari', 3, 5, False),
    ('tamari', 4, 14, False),
    ('fdl3', None, 20, True),
    ('lattice11a', None, 11, True),
    ('lattice11b', None, 11, True),
])
def test_named_poset(family, n, size, distributive):
    p = trivext.named_poset(family, n)
    assert p.size == size
    assert bool(trivext.is_distributive_lattice(p)) is distributive


def test_tamari_is_a_lattice():
    p = trivext.named_poset('tamari', 4)
    assert np.all(p.join_table >= 0)
    assert np.all(p.meet_table >= 0)


def test_named_poset_errors():
    with pytest.raises(ValueError):
        trivext.named_poset('pentagon', 3)
    with pytest.raises(BoundError):
        trivext.named_poset('tamari', 7)
    with pytest.raises(BoundError):
        trivext.named_poset('chain')
