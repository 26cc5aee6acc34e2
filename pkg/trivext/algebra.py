"""Constructions of based algebras: path, incidence and trivial extension
algebras, tensor products, opposite and enveloping algebras, and their
Cartan data.
"""
import logging

import numpy as np

from trivext.core import (
    IDEMPOTENT,
    RADICAL,
    AlgebraError,
    BasedAlgebra,
    BasisElement,
    Quiver,
)
from trivext.field import asfield
from trivext.linalg import as_rational, matrix

logger = logging.getLogger(__name__)


def path_algebra(q, field=None):
    """Path algebra of an acyclic quiver.

    Parameters
    ----------
    q : :class:`~trivext.Quiver`
        Acyclic quiver.
    field : :class:`~trivext.Field`, int or str, optional
        Ground field. Default is the rationals.

    Returns
    -------
    a : :class:`~trivext.BasedAlgebra`
        Basis: the trivial paths ``e_v`` (indices ``0 .. n-1``) followed by
        the paths of positive length, shortest first.

    Raises
    ------
    AlgebraError
        If `q` has an oriented cycle.

    Examples
    --------
    .. code:: pycon

        >>> q = trivext.Quiver(2, ((0, 1, 'a'),))
        >>> trivext.path_algebra(q).dim
        3

    """
    field = asfield(field)
    paths = q.paths()
    n = q.vertex_count
    basis = [BasisElement(v, v, v, IDEMPOTENT, 0, f'e{q.vertex_names[v]}')
             for v in range(n)]
    index = {}
    for p in paths:
        k = len(basis)
        index[p] = k
        label = '*'.join(q.arrows[a][2] for a in p)
        basis.append(BasisElement(k, q.arrows[p[0]][0], q.arrows[p[-1]][1],
                                  RADICAL, 0, label))
    mult = {}
    for b in basis:
        mult[(b.source, b.index)] = {b.index: 1}
        mult[(b.index, b.target)] = {b.index: 1}
    for p in paths:
        for p2 in paths:
            if q.arrows[p[-1]][1] == q.arrows[p2[0]][0]:
                mult[(index[p], index[p2])] = {index[p + p2]: 1}
    return BasedAlgebra(field, basis, mult, name=f'kQ{n}')


def incidence_algebra(p, field=None):
    """Incidence algebra k[P] of a finite poset.

    The basis consists of the intervals ``[x, y]`` with ``x <= y``; the
    product is ``[x, y][y, z] = [x, z]`` and every other product of intervals
    is zero. Idempotents ``[x, x]`` come first, in element order.

    Parameters
    ----------
    p : :class:`~trivext.Poset`
    field : :class:`~trivext.Field`, int or str, optional

    Examples
    --------
    .. code:: pycon

        >>> trivext.incidence_algebra(trivext.named_poset('boolean', 2)).dim
        9

    """
    field = asfield(field)
    n = p.size
    names = p.names
    leq = p.leq
    basis = [BasisElement(x, x, x, IDEMPOTENT, 0, f'[{names[x]}]')
             for x in range(n)]
    index = {(x, x): x for x in range(n)}
    for x, y in zip(*np.nonzero(leq)):
        x, y = int(x), int(y)
        if x != y:
            k = len(basis)
            index[(x, y)] = k
            basis.append(BasisElement(k, x, y, RADICAL, 0,
                                      f'[{names[x]},{names[y]}]'))
    mult = {}
    for (x, y), i in index.items():
        for z in np.flatnonzero(leq[y]):
            mult[(i, index[(y, int(z))])] = {index[(x, int(z))]: 1}
    return BasedAlgebra(field, basis, mult, name=f'k[P{n}]')


def semisimple_algebra(n, field=None):
    """The algebra k^n: n orthogonal idempotents and nothing else."""
    return path_algebra(Quiver(n), field)


def trivial_extension(a):
    """Trivial extension algebra T(A) = A + DA.

    The product is ``(a, f)(b, g) = (ab, ag + fb)`` with the bimodule actions
    ``(b.f)(x) = f(xb)`` and ``(f.b)(x) = f(bx)`` on the dual space.

    Parameters
    ----------
    a : :class:`~trivext.BasedAlgebra`

    Returns
    -------
    t : :class:`~trivext.BasedAlgebra`
        Basis: the basis of `a` in degree 0, then the dual basis ``b_i*`` in
        degree 1 at index ``a.dim + i``. ``b_i*`` runs from ``target(b_i)`` to
        ``source(b_i)`` and is a radical element.

    Examples
    --------
    .. code:: pycon

        >>> k = trivext.semisimple_algebra(1)
        >>> trivext.trivial_extension(k).dim
        2

    """
    D = a.dim
    basis = list(a.basis)
    for b in a.basis:
        basis.append(BasisElement(D + b.index, b.target, b.source, RADICAL, 1,
                                  f'{b.label}*', dual=b.index))
    mult = a.table()
    for (k, i), combo in a.items():
        for j, c in combo.items():
            # b_i . b_j* picks up c^j_{k,i} on b_k*
            row = mult.setdefault((i, D + j), {})
            row[D + k] = row.get(D + k, 0) + c
    for (i, k), combo in a.items():
        for j, c in combo.items():
            row = mult.setdefault((D + j, i), {})
            row[D + k] = row.get(D + k, 0) + c
    return BasedAlgebra(a.field, basis, mult, name=f'T({a.name})')


def tensor_product(a, b):
    """Tensor product algebra ``A (x) B`` over the common field.

    Basis element ``x_i (x) y_j`` has index ``i * b.dim + j`` and runs between
    vertices ``(v, w) -> v * b.vertex_count + w``.

    Raises
    ------
    AlgebraError
        If the fields differ.

    """
    if a.field != b.field:
        raise AlgebraError(f'Cannot tensor algebras over {a.field} and '
                           f'{b.field}')
    nb = b.vertex_count
    db = b.dim
    basis = []
    for x in a.basis:
        for y in b.basis:
            kind = IDEMPOTENT if x.is_idempotent() and y.is_idempotent() \
                else RADICAL
            basis.append(BasisElement(x.index * db + y.index,
                                      x.source * nb + y.source,
                                      x.target * nb + y.target,
                                      kind, x.degree + y.degree,
                                      f'{x.label}|{y.label}'))
    mult = {}
    b_products = list(b.items())
    for (i, i2), ca in a.items():
        for (j, j2), cb in b_products:
            row = {}
            for k, s in ca.items():
                for l, t in cb.items():
                    row[k * db + l] = s * t
            mult[(i * db + j, i2 * db + j2)] = row
    return BasedAlgebra(a.field, basis, mult, name=f'{a.name}(x){b.name}')


def tensor_power(a, t):
    """``a (x) a (x) ... (x) a`` with `t` factors."""
    if t < 1:
        raise ValueError(f'Tensor power needs t >= 1, got {t}')
    out = a
    for _ in range(t - 1):
        out = tensor_product(out, a)
    return out


def opposite(a):
    """Opposite algebra; the vertex order is preserved."""
    basis = [BasisElement(b.index, b.target, b.source, b.kind, b.degree,
                          b.label, b.dual) for b in a.basis]
    mult = {(j, i): dict(combo) for (i, j), combo in a.items()}
    return BasedAlgebra(a.field, basis, mult, name=f'{a.name}^op')


def enveloping(a):
    """Enveloping algebra ``A^e = A (x) A^op``.

    Right ``A^e``-modules are ``A``-bimodules. Vertex ``(i, j)`` of ``A^e`` has
    index ``i * n + j``.
    """
    out = tensor_product(a, opposite(a))
    out.name = f'{a.name}^e'
    return out


def _cartan_counts(a):
    n = a.vertex_count
    U = np.zeros((n, n), dtype=np.int64)
    for b in a.basis:
        U[b.source, b.target] += 1
    return U


def cartan_matrix(a):
    """Cartan matrix ``U[i, j] = dim e_i A e_j`` as an integer matrix over Q.

    Examples
    --------
    .. code:: pycon

        >>> q = trivext.Quiver(2, ((0, 1, 'a'),))
        >>> trivext.cartan_matrix(trivext.path_algebra(q)).tolist()
        [[1, 1], [0, 1]]

    """
    return as_rational(_cartan_counts(a))


def repetitive_cartan(a, r):
    """Cartan matrix of the r-fold trivial extension of `a`.

    The result is the ``r x r`` block matrix with the Cartan matrix ``U`` of
    `a` on the block diagonal and ``U^T`` (the Cartan matrix of the dual
    bimodule) on the block subdiagonal and in the top right corner. For
    ``r = 1`` this is the Cartan matrix ``U + U^T`` of the trivial extension.
    """
    if r < 1:
        raise ValueError(f'r must be a positive integer, got {r}')
    U = _cartan_counts(a)
    n = U.shape[0]
    out = np.zeros((r * n, r * n), dtype=np.int64)
    for k in range(r):
        out[k*n:(k+1)*n, k*n:(k+1)*n] += U
        if k + 1 < r:
            out[(k+1)*n:(k+2)*n, k*n:(k+1)*n] += U.T
    out[0:n, (r-1)*n:r*n] += U.T
    return as_rational(out)


def symmetrizing_form(a):
    """Gram matrix of the symmetrizing form of a trivial extension.

    For ``T(A)`` the form is ``<(a, f), (b, g)> = f(b) + g(a)``, which equals
    the sum of the coefficients of the dual idempotents in the product. The
    form is symmetric, associative and nondegenerate.

    Raises
    ------
    AlgebraError
        If `a` has no dual basis elements.

    """
    traces = {b.index for b in a.basis
              if b.dual is not None and a.basis[b.dual].is_idempotent()}
    if not traces:
        raise AlgebraError(f'{a.name} does not carry dual basis data')
    f = a.field
    rows = []
    for i in range(a.dim):
        row = {}
        for j, combo in a.left_products[i]:
            c = sum((combo.get(k, f.zero) for k in traces), f.zero)
            if c:
                row[j] = c
        rows.append(row)
    return matrix.from_rows(rows, a.dim, f)
