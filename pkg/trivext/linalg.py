"""Exact sparse linear algebra over the rationals and prime fields.

Every matrix in trivext is a :class:`matrix`: a thin immutable wrapper around
a sparse sympy ``DomainMatrix`` that remembers its :class:`~trivext.Field`.
Vectors are 1-row matrices or plain ``{column: value}`` dicts, depending on
what the caller finds convenient.
"""
import numpy as np
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from trivext.field import Field, asfield


class matrix:
    """Exact matrix over a :class:`~trivext.Field`.

    Parameters
    ----------
    data : list of lists or dict of dicts
        Entries, either dense (a list of rows) or sparse (``{i: {j: value}}``).
        Entries are converted into the field.
    field : :class:`~trivext.Field`, int or str, optional
        Ground field. Default is the rationals.
    shape : tuple of ints, optional
        Required for sparse input; inferred from dense input.

    Examples
    --------
    .. code:: pycon

        >>> m = trivext.matrix([[1, 1], [1, 1]], field=2)
        >>> trivext.kernel_basis(m).tolist()
        [[1, 1]]

    """
    __slots__ = ('_rep', '_field')

    def __init__(self, data, field=None, shape=None):
        field = asfield(field)
        K = field.domain
        if isinstance(data, dict):
            if shape is None:
                raise ValueError('shape is required for sparse input')
            rows, cols = shape
            sdm = {}
            for i, row in data.items():
                r = {j: K.convert(v) for j, v in row.items()}
                r = {j: v for j, v in r.items() if v}
                if r:
                    sdm[i] = r
        else:
            data = [list(row) for row in data]
            rows = len(data)
            cols = len(data[0]) if rows else (shape[1] if shape else 0)
            if any(len(row) != cols for row in data):
                raise ValueError('All rows must have the same length')
            if shape is not None and tuple(shape) != (rows, cols):
                raise ValueError(f'Data of shape {(rows, cols)} does not '
                                 f'match shape {tuple(shape)}')
            sdm = {}
            for i, row in enumerate(data):
                r = {}
                for j, v in enumerate(row):
                    v = K.convert(v)
                    if v:
                        r[j] = v
                if r:
                    sdm[i] = r
        self._rep = DomainMatrix(sdm, (rows, cols), K)
        self._field = field

    @classmethod
    def _wrap(cls, rep, field):
        out = cls.__new__(cls)
        out._rep = rep.to_sparse()
        out._field = field
        return out

    @classmethod
    def from_rows(cls, rows, ncols, field):
        """Build a matrix from sparse row dicts already in the field."""
        sdm = {i: dict(r) for i, r in enumerate(rows) if r}
        out = cls.__new__(cls)
        out._rep = DomainMatrix(sdm, (len(rows), ncols), field.domain)
        out._field = field
        return out

    @property
    def rep(self):
        """Underlying sparse sympy ``DomainMatrix``."""
        return self._rep

    @property
    def field(self):
        return self._field

    @property
    def shape(self):
        return self._rep.shape

    @property
    def nrows(self):
        return self._rep.shape[0]

    @property
    def ncols(self):
        return self._rep.shape[1]

    @property
    def T(self):
        """Transpose."""
        return matrix._wrap(self._rep.transpose(), self._field)

    def row(self, i):
        """Sparse ``{column: value}`` view of row `i`."""
        if not 0 <= i < self.nrows:
            raise IndexError(f'row {i} out of range for shape {self.shape}')
        return dict(self._rep.rep.get(i, {}))

    def rows(self):
        """List of sparse row dicts."""
        sdm = self._rep.rep
        return [dict(sdm.get(i, {})) for i in range(self.nrows)]

    def items(self):
        """Iterate over ``(i, j, value)`` for every nonzero entry."""
        for i, row in sorted(self._rep.rep.items()):
            for j, v in sorted(row.items()):
                yield i, j, v

    def __getitem__(self, key):
        i, j = key
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f'index {key} out of range for shape {self.shape}')
        return self._rep.rep.get(i, {}).get(j, self._field.zero)

    def _check(self, other, op):
        if not isinstance(other, matrix):
            return NotImplemented
        if other._field != self._field:
            raise ValueError(f'Cannot {op} matrices over {self._field} '
                             f'and {other._field}')
        return None

    def __matmul__(self, other):
        if self._check(other, 'multiply') is NotImplemented:
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f'shapes {self.shape} and {other.shape} not '
                             f'aligned')
        if 0 in self.shape or 0 in other.shape:
            return zeros((self.nrows, other.ncols), self._field)
        return matrix._wrap(self._rep.matmul(other._rep), self._field)

    def __add__(self, other):
        if self._check(other, 'add') is NotImplemented:
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f'shapes {self.shape} and {other.shape} differ')
        return matrix._wrap(self._rep.add(other._rep), self._field)

    def __sub__(self, other):
        if self._check(other, 'subtract') is NotImplemented:
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f'shapes {self.shape} and {other.shape} differ')
        return matrix._wrap(self._rep.sub(other._rep), self._field)

    def __neg__(self):
        return matrix._wrap(self._rep.neg(), self._field)

    def scale(self, c):
        """Multiply every entry by the field scalar `c`."""
        c = self._field(c)
        if not c:
            return zeros(self.shape, self._field)
        sdm = {i: {j: c * v for j, v in r.items()}
               for i, r in self._rep.rep.items()}
        return matrix.from_rows([sdm.get(i, {}) for i in range(self.nrows)],
                                self.ncols, self._field)

    def __eq__(self, other):
        if not isinstance(other, matrix):
            return NotImplemented
        return (self._field == other._field and self.shape == other.shape
                and _clean(self._rep.rep) == _clean(other._rep.rep))

    __hash__ = None

    def is_zero(self):
        return not _clean(self._rep.rep)

    def is_identity(self):
        n, m = self.shape
        if n != m:
            return False
        one = self._field.one
        sdm = _clean(self._rep.rep)
        return len(sdm) == n and all(r == {i: one} for i, r in sdm.items())

    def is_integral(self):
        """True when every entry is an integer (always true over GF(p))."""
        if self._field.characteristic:
            return True
        K = self._field.domain
        return all(K.denom(v) == 1 for _, _, v in self.items())

    def select(self, rows=None, cols=None):
        """Submatrix on the given row and column index lists (in order)."""
        rows = range(self.nrows) if rows is None else list(rows)
        cols = range(self.ncols) if cols is None else list(cols)
        position = {c: k for k, c in enumerate(cols)}
        sdm = self._rep.rep
        out = []
        for i in rows:
            r = sdm.get(i, {})
            out.append({position[j]: v for j, v in r.items() if j in position})
        return matrix.from_rows(out, len(position), self._field)

    def tolist(self):
        """Dense nested list of JSON-friendly entries."""
        f = self._field
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, j, v in self.items():
            out[i][j] = f.to_python(v)
        return out

    def to_numpy(self):
        """Integer numpy array of the entries.

        Raises
        ------
        ValueError
            If some entry is not an integer.

        """
        if not self.is_integral():
            raise ValueError('Matrix has non-integral entries')
        out = np.zeros(self.shape, dtype=np.int64)
        K = self._field.domain
        for i, j, v in self.items():
            out[i, j] = int(K.to_sympy(v))
        if self._field.characteristic:
            out %= self._field.characteristic
        return out

    def __repr__(self):
        return f'matrix({self.tolist()}, field={self._field.tag!r})'


def _clean(sdm):
    return {i: {j: v for j, v in r.items() if v}
            for i, r in sdm.items() if any(r.values())}


def asmatrix(a, field=None):
    """Convert the input to a :class:`matrix`.

    Existing matrices over the requested field are returned as-is; numpy
    integer arrays and nested lists are converted entrywise.
    """
    if isinstance(a, matrix):
        if field is not None and asfield(field) != a.field:
            raise ValueError(f'Matrix is over {a.field}, not {field}')
        return a
    if isinstance(a, np.ndarray):
        if a.ndim != 2:
            raise ValueError(f'Expected a 2-d array, got {a.ndim}-d')
        return matrix([[int(v) for v in row] for row in a], field=field,
                      shape=a.shape)
    if isinstance(a, (list, tuple)):
        return matrix(a, field=field)
    raise TypeError(f'Cannot create matrix from {a.__class__.__name__}')


def zeros(shape, field=None):
    """Return the zero matrix of the given shape."""
    field = asfield(field)
    return matrix.from_rows([{}] * shape[0], shape[1], field)


def eye(n, field=None):
    """Return the n x n identity matrix."""
    field = asfield(field)
    return matrix.from_rows([{i: field.one} for i in range(n)], n, field)


def vstack(blocks, ncols=None, field=None):
    """Stack matrices vertically.

    `ncols` and `field` are only needed when `blocks` may be empty.
    """
    blocks = list(blocks)
    if not blocks:
        return zeros((0, ncols or 0), field)
    f = blocks[0].field
    n = blocks[0].ncols
    rows = []
    for b in blocks:
        if b.ncols != n:
            raise ValueError('All blocks must have the same number of columns')
        rows.extend(b.rows())
    return matrix.from_rows(rows, n, f)


def rref(m):
    """Reduced row echelon form.

    Pivots are unit entries, chosen leftmost first, so the result depends only
    on the row space of `m`.

    Returns
    -------
    r : :class:`matrix`
        Nonzero rows of the reduced echelon form of `m`.
    pivots : tuple of ints
        Pivot column of each row of `r`.

    """
    m = asmatrix(m)
    if 0 in m.shape or m.is_zero():
        return zeros((0, m.ncols), m.field), ()
    r, pivots = m.rep.rref()
    pivots = tuple(pivots)
    out = matrix._wrap(r, m.field)
    return out.select(rows=range(len(pivots))), pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Basis of the right null space ``{v : m v = 0}``.

    Parameters
    ----------
    m : :class:`matrix`

    Returns
    -------
    k : :class:`matrix`
        Matrix whose rows form the basis, itself in reduced row echelon form,
        so the result is reproducible bit for bit.

    Examples
    --------
    .. code:: pycon

        >>> trivext.kernel_basis(trivext.eye(3)).shape
        (0, 3)

    """
    m = asmatrix(m)
    f = m.field
    n = m.ncols
    r, pivots = rref(m)
    free = [j for j in range(n) if j not in set(pivots)]
    if not free:
        return zeros((0, n), f)
    rows = r.rows()
    vectors = []
    for j in free:
        v = {j: f.one}
        for row, p in zip(rows, pivots):
            c = row.get(j)
            if c:
                v[p] = -c
        vectors.append(v)
    return rref(matrix.from_rows(vectors, n, f))[0]


def left_kernel_basis(m):
    """Basis of ``{v : v m = 0}`` as the rows of a reduced echelon matrix."""
    return kernel_basis(asmatrix(m).T)


def determinant(m):
    m = asmatrix(m)
    if m.nrows != m.ncols:
        raise ValueError(f'Determinant of non-square matrix {m.shape}')
    if m.nrows == 0:
        return m.field.one
    return m.rep.to_dense().det()


def inverse(m):
    """Exact inverse of a square matrix.

    Raises
    ------
    ValueError
        If `m` is not square or is singular.

    """
    m = asmatrix(m)
    if m.nrows != m.ncols:
        raise ValueError(f'Cannot invert non-square matrix {m.shape}')
    if m.nrows == 0:
        return m
    if not determinant(m):
        raise ValueError('Matrix is singular')
    return matrix._wrap(m.rep.to_dense().inv(), m.field)


def matrix_power(m, k):
    """Raise a square matrix to a nonnegative integer power by squaring."""
    m = asmatrix(m)
    if m.nrows != m.ncols:
        raise ValueError(f'Cannot raise non-square matrix {m.shape} to a power')
    if k < 0:
        raise ValueError('Negative powers are not supported, use inverse')
    result = eye(m.nrows, m.field)
    base = m
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def integer_rep(m):
    """Dense ``DomainMatrix`` over ZZ for an integral rational matrix."""
    m = asmatrix(m)
    if m.field.characteristic:
        raise ValueError('Integer representation requires a rational matrix')
    if not m.is_integral():
        raise ValueError('Matrix has non-integral entries')
    return m.rep.to_dense().convert_to(ZZ)


def as_rational(a):
    """Integer numpy array or nested list as a :class:`matrix` over Q."""
    return asmatrix(a, Field(0))
