import numpy as np
import pytest

import trivext


@pytest.mark.parametrize('bad', [1, 4, -3, 9])
def test_field_rejects_non_prime(bad):
    with pytest.raises(ValueError):
        trivext.Field(bad)


@pytest.mark.parametrize('tag, characteristic', [
    (None, 0), ('q', 0), ('Q', 0), ('0', 0), ('2', 2), ('GF(3)', 3), (5, 5)
])
def test_asfield(tag, characteristic):
    assert trivext.asfield(tag).characteristic == characteristic


def test_field_to_python():
    q = trivext.Field(0)
    assert q.to_python(q(1) / q(2)) == '1/2'
    assert q.to_python(q(4)) == 4
    f3 = trivext.Field(3)
    assert f3.to_python(f3(-1)) == 2


def test_kernel_over_q_and_gf2():
    m = [[1, 1], [1, 1]]
    assert trivext.kernel_basis(trivext.matrix(m)).tolist() == [[1, -1]]
    assert trivext.kernel_basis(trivext.matrix(m, field=2)).tolist() == [[1, 1]]


def test_kernel_of_identity_is_empty():
    assert trivext.kernel_basis(trivext.eye(3)).shape == (0, 3)


def test_left_kernel():
    m = trivext.matrix([[1, 2], [2, 4]])
    k = trivext.left_kernel_basis(m)
    assert k.shape == (1, 2)
    assert (k @ m).is_zero()


def test_rref():
    r, pivots = trivext.rref(trivext.matrix([[2, 4, 2], [1, 2, 3]]))
    assert pivots == (0, 2)
    assert r.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_rank():
    assert trivext.rank(trivext.matrix([[1, 2], [2, 4]])) == 1
    assert trivext.rank(trivext.zeros((2, 3))) == 0


def test_determinant():
    assert trivext.determinant(trivext.matrix([[2, 1], [1, 2]])) == 3
    assert trivext.determinant(trivext.matrix([[2, 1], [1, 2]], field=3)) == 0


def test_inverse():
    m = trivext.matrix([[1, 1], [0, 1]])
    assert trivext.inverse(m).tolist() == [[1, -1], [0, 1]]
    assert (m @ trivext.inverse(m)).is_identity()


def test_inverse_singular():
    with pytest.raises(ValueError):
        trivext.inverse(trivext.matrix([[1, 1], [1, 1]]))


def test_matrix_power():
    c = trivext.matrix([[0, 1], [-1, -1]])
    assert trivext.matrix_power(c, 3).is_identity()
    assert trivext.matrix_power(c, 0).is_identity()
    with pytest.raises(ValueError):
        trivext.matrix_power(c, -1)


def test_matmul_field_mismatch():
    with pytest.raises(ValueError):
        trivext.eye(2) @ trivext.eye(2, field=2)


def test_matmul_shape_mismatch():
    with pytest.raises(ValueError):
        trivext.zeros((2, 3)) @ trivext.zeros((2, 3))


def test_sparse_input_needs_shape():
    with pytest.raises(ValueError):
        trivext.matrix({0: {1: 1}})
    m = trivext.matrix({0: {1: 1}}, shape=(2, 2))
    assert m.tolist() == [[0, 1], [0, 0]]


def test_to_numpy():
    m = trivext.matrix([[1, -2], [0, 3]])
    assert np.array_equal(m.to_numpy(), np.array([[1, -2], [0, 3]]))
    with pytest.raises(ValueError):
        half = trivext.Field(0)(1) / 2
        trivext.matrix([[half]]).to_numpy()


@pytest.mark.parametrize('field', [0, 2, 3])
def test_random_kernels_are_annihilated(field):
    rng = np.random.default_rng(1)
    for _ in range(20):
        rows, cols = rng.integers(1, 6, size=2)
        m = trivext.matrix(rng.integers(-2, 3, size=(rows, cols)).tolist(),
                           field=field)
        k = trivext.kernel_basis(m)
        assert (m @ k.T).is_zero()
        assert k.nrows + trivext.rank(m) == cols
