import pytest

import trivext
from trivext.core import IDEMPOTENT, BasisElement


def _two_cycle_algebra():
    # 0 -a-> 1 -b-> 0 with ab = ba = 0; Cartan matrix [[1, 1], [1, 1]]
    basis = [BasisElement(0, 0, 0, IDEMPOTENT), BasisElement(1, 1, 1, IDEMPOTENT),
             BasisElement(2, 0, 1), BasisElement(3, 1, 0)]
    mult = {(0, 0): {0: 1}, (1, 1): {1: 1}, (0, 2): {2: 1}, (2, 1): {2: 1},
            (1, 3): {3: 1}, (3, 0): {3: 1}}
    return trivext.BasedAlgebra(trivext.Field(0), basis, mult)


def test_coxeter_a2(kA2):
    assert trivext.coxeter_matrix(kA2).tolist() == [[0, 1], [-1, -1]]
    assert str(trivext.coxeter_polynomial(kA2)) == 'x^2 + x + 1'
    assert trivext.coxeter_periodicity(kA2) == 3


def test_coxeter_data(kA2):
    data = trivext.coxeter_data(kA2)
    assert data.cartan.tolist() == [[1, 1], [0, 1]]
    assert data.coxeter == trivext.coxeter_matrix(kA2)
    assert data.char_polynomial == trivext.IntPolynomial((1, 1, 1))
    assert data.period == 3


def test_kronecker_not_periodic(kronecker):
    a = trivext.path_algebra(kronecker)
    assert str(trivext.coxeter_polynomial(a)) == 'x^2 - 2*x + 1'
    assert trivext.coxeter_periodicity(a) is None


def test_singular_cartan():
    with pytest.raises(trivext.SingularCartanError):
        trivext.coxeter_matrix(_two_cycle_algebra())


@pytest.mark.parametrize('t', trivext.all_dynkin_types(8), ids=str)
def test_dynkin_coxeter_matrices(t):
    a = trivext.path_algebra(trivext.dynkin_quiver(t))
    c = trivext.coxeter_matrix(a)
    ell = trivext.cydim_dynkin(t).ell
    assert trivext.matrix_power(c, 2 * ell).is_identity()
    assert trivext.coxeter_periodicity(a) == trivext.coxeter_number(t)


@pytest.mark.parametrize('name', ['A4', 'D5', 'E6'])
def test_orientation_does_not_change_coxeter_polynomial(name):
    t = trivext.DynkinType.parse(name)
    linear = trivext.path_algebra(trivext.dynkin_quiver(t, 'linear'))
    alternating = trivext.path_algebra(trivext.dynkin_quiver(t, 'alternating'))
    assert trivext.coxeter_polynomial(linear) == \
        trivext.coxeter_polynomial(alternating)


def test_boolean_square_is_periodic():
    a = trivext.incidence_algebra(trivext.named_poset('boolean', 2))
    assert trivext.coxeter_periodicity(a) is not None


@pytest.mark.parametrize('family, polynomial', [
    ('lattice11a', 'x^11 + x^10 + x^9 + x^2 + x + 1'),
    ('lattice11b', 'x^11 + x^10 - x^6 - x^5 + x + 1'),
])
def test_eleven_element_lattice_polynomials(family, polynomial):
    a = trivext.incidence_algebra(trivext.named_poset(family))
    p = trivext.coxeter_polynomial(a)
    assert str(p) == polynomial
    assert trivext.matching_dynkin_types(p) == []
    assert trivext.coxeter_periodicity(a) is not None


@pytest.mark.parametrize('t', trivext.all_dynkin_types(5), ids=str)
def test_coxeter_period_is_minimal(t):
    a = trivext.path_algebra(trivext.dynkin_quiver(t))
    c = trivext.coxeter_matrix(a)
    N = trivext.coxeter_periodicity(a)
    assert trivext.matrix_power(c, N).is_identity()
    for j in range(1, N):
        assert not trivext.matrix_power(c, j).is_identity()


def test_kronecker_powers_never_return(kronecker):
    c = trivext.coxeter_matrix(trivext.path_algebra(kronecker))
    assert trivext.cyclotomic_periodicity(trivext.char_poly(c), 2) is None
    for j in range(1, 30):
        assert not trivext.matrix_power(c, j).is_identity()
