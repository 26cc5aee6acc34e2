import math

import numpy as np
import pytest

import trivext

TYPES = trivext.all_dynkin_types(10)


@pytest.mark.parametrize('name, h', [('A1', 2), ('A2', 3), ('D4', 6),
                                     ('E6', 12), ('E7', 18), ('E8', 30)])
def test_coxeter_number(name, h):
    assert trivext.coxeter_number(trivext.DynkinType.parse(name)) == h


@pytest.mark.parametrize('family, rank', [('D', 3), ('E', 9), ('B', 2),
                                          ('A', 0)])
def test_invalid_dynkin_type(family, rank):
    with pytest.raises(ValueError):
        trivext.DynkinType(family, rank)


def test_parse_dynkin_type():
    t = trivext.DynkinType.parse('e6')
    assert t == trivext.DynkinType('E', 6)
    assert str(t) == 'E6'
    with pytest.raises(ValueError):
        trivext.DynkinType.parse('D')


def test_all_dynkin_types():
    types = trivext.all_dynkin_types(8)
    assert len(types) == 16
    assert [str(t) for t in types[:2]] == ['A1', 'A2']
    assert str(types[-1]) == 'E8'


@pytest.mark.parametrize('name, cydim', [('A1', (0, 1)), ('A2', (1, 3)),
                                         ('D4', (2, 3)), ('D5', (6, 8)),
                                         ('E7', (8, 9))])
def test_cydim_dynkin(name, cydim):
    assert tuple(trivext.cydim_dynkin(trivext.DynkinType.parse(name))) == cydim


@pytest.mark.parametrize('dims, expected', [
    ([(1, 3), (1, 3)], (2, 3)),
    ([(2, 3), (8, 9)], (14, 9)),
    ([(1, 3)], (1, 3)),
])
def test_tensor_cydim(dims, expected):
    assert tuple(trivext.tensor_cydim(dims)) == expected


def test_tensor_cydim_empty():
    with pytest.raises(ValueError):
        trivext.tensor_cydim([])


@pytest.mark.parametrize('cydim, field, period', [
    ((1, 3), 'q', 4),
    ((1, 3), 2, 4),
    ((2, 3), 'q', 10),
    ((2, 3), 2, 5),
    ((6, 8), 'q', 14),
])
def test_minimal_period_trivext(cydim, field, period):
    assert trivext.minimal_period_trivext(cydim, field) == period


@pytest.mark.parametrize('d, cydim, expected', [(1, (1, 3), (2, 1)),
                                                (2, (2, 3), (1, 4))])
def test_dct_parameters(d, cydim, expected):
    assert trivext.dct_parameters(d, cydim) == expected


def test_dct_parameters_random():
    rng = np.random.default_rng(11)
    for _ in range(20):
        d, m, ell = (int(x) for x in rng.integers(1, 20, size=3))
        g = math.gcd(ell + m, d + 1)
        assert trivext.dct_parameters(d, (m, ell)) == \
            (g, ((d + 1) * ell - (ell + m)) // g)
    with pytest.raises(ValueError):
        trivext.dct_parameters(0, (1, 3))


@pytest.mark.parametrize('name, field, period', [
    ('A1', 'q', 2), ('A1', 2, 1), ('A2', 'q', 4), ('A3', 'q', 6),
    ('D4', 'q', 10), ('D4', 2, 5), ('D5', 2, 14), ('E8', 2, 29),
])
def test_expected_period_dynkin(name, field, period):
    t = trivext.DynkinType.parse(name)
    assert trivext.expected_period_dynkin(t, field) == period


@pytest.mark.parametrize('t', TYPES, ids=str)
@pytest.mark.parametrize('field', ['q', 2, 3])
def test_dynkin_period_from_cydim(t, field):
    assert trivext.expected_period_dynkin(t, field) == \
        trivext.minimal_period_trivext(trivext.cydim_dynkin(t), field)


@pytest.mark.parametrize('t', TYPES, ids=str)
def test_cydim_parity(t):
    m, ell = trivext.cydim_dynkin(t)
    assert (ell + 1) % 2 == 0 or m % 2 == 0


@pytest.mark.parametrize('n', range(1, 9))
@pytest.mark.parametrize('field', ['q', 2])
def test_boolean_lattice_periods(n, field):
    c = trivext.tensor_cydim([(1, 3)] * n)
    expected = n + 3 if n % 2 or field == 2 else 2 * (n + 3)
    assert trivext.minimal_period_trivext(c, field) == expected


@pytest.mark.parametrize('t', trivext.all_dynkin_types(8), ids=str)
@pytest.mark.parametrize('power', [1, 2, 3, 4])
@pytest.mark.parametrize('field', ['q', 2])
def test_expected_period_tensor(t, power, field):
    c = trivext.tensor_cydim([trivext.cydim_dynkin(t)] * power)
    assert trivext.expected_period_tensor(t, power, field) == \
        trivext.minimal_period_trivext(c, field)


def test_expected_period_tensor_a2():
    a2 = trivext.DynkinType('A', 2)
    assert trivext.expected_period_tensor(a2, 2, 'q') == 10
    assert trivext.expected_period_tensor(a2, 2, 2) == 5
    with pytest.raises(ValueError):
        trivext.expected_period_tensor(a2, 0)


def test_tamari_cydim():
    assert tuple(trivext.tamari_cydim(3)) == (6, 8)
    assert trivext.minimal_period_trivext(trivext.tamari_cydim(3)) == 14
    with pytest.raises(ValueError):
        trivext.tamari_cydim(0)


def test_preprojective_period():
    assert trivext.preprojective_period(1, (1, 3)) == 6
    with pytest.raises(ValueError):
        trivext.preprojective_period(1, (5, 3))


@pytest.mark.parametrize('name, arrows', [
    ('A3', ((0, 1, 'a0'), (1, 2, 'a1'))),
    ('D4', ((0, 1, 'a0'), (1, 2, 'a1'), (1, 3, 'a2'))),
    ('E6', ((0, 1, 'a0'), (1, 2, 'a1'), (2, 3, 'a2'), (3, 4, 'a3'),
            (2, 5, 'a4'))),
])
def test_dynkin_quiver(name, arrows):
    q = trivext.dynkin_quiver(trivext.DynkinType.parse(name))
    assert q.arrows == arrows


def test_alternating_orientation():
    q = trivext.dynkin_quiver(trivext.DynkinType('A', 4), 'alternating')
    assert q.arrows == ((0, 1, 'a0'), (2, 1, 'a1'), (2, 3, 'a2'))
    with pytest.raises(ValueError):
        trivext.dynkin_quiver(trivext.DynkinType('A', 4), 'sideways')


@pytest.mark.parametrize('name, coefficients', [
    ('A2', (1, 1, 1)),
    ('A4', (1, 1, 1, 1, 1)),
    ('D4', (1, 1, 0, 1, 1)),
])
def test_dynkin_coxeter_polynomial(name, coefficients):
    t = trivext.DynkinType.parse(name)
    p = trivext.dynkin_coxeter_polynomial(t)
    assert p == trivext.IntPolynomial(coefficients)
    assert trivext.matching_dynkin_types(p) == [t]


def test_no_matching_dynkin_type():
    assert trivext.matching_dynkin_types(trivext.IntPolynomial((1, -2, 1))) \
        == []
    assert trivext.matching_dynkin_types(trivext.IntPolynomial((1,))) == []
