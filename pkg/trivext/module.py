"""Right modules over based algebras, projective covers and syzygies.

A module stores one action block per basis element ``b`` of the algebra: a
``dim M_source(b) x dim M_target(b)`` matrix acting on row vectors, so that
``m . b = m @ block(b)``. Idempotents act by the identity on their vertex and
are never stored.
"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np

from trivext.linalg import (
    determinant,
    kernel_basis,
    left_kernel_basis,
    matrix,
    rref,
    zeros,
)
from trivext.options import OrbitOptions

logger = logging.getLogger(__name__)


class ModuleError(ValueError):
    """Raised for inconsistent module data or invalid module operations."""


class RightModule:
    """Finite-dimensional right module over a :class:`~trivext.BasedAlgebra`.

    Parameters
    ----------
    algebra : :class:`~trivext.BasedAlgebra`
    vertex_dims : sequence of int
        Dimension of ``M e_v`` for every vertex ``v``.
    blocks : dict
        ``{basis index: matrix}`` for the radical basis elements that act
        nontrivially. Each block has shape
        ``(vertex_dims[source], vertex_dims[target])``.
    check : bool, optional
        Verify that the action respects the multiplication on every pair of
        basis elements. Default is False.

    """

    def __init__(self, algebra, vertex_dims, blocks=None, check=False):
        self.algebra = algebra
        self.vertex_dims = tuple(int(d) for d in vertex_dims)
        if len(self.vertex_dims) != algebra.vertex_count:
            raise ModuleError(f'Expected {algebra.vertex_count} vertex '
                              f'dimensions, got {len(self.vertex_dims)}')
        if any(d < 0 for d in self.vertex_dims):
            raise ModuleError('Vertex dimensions must be nonnegative')
        self._blocks = {}
        for b, block in (blocks or {}).items():
            el = algebra.basis[b]
            if el.is_idempotent():
                raise ModuleError(f'Idempotent {b} acts by the identity and '
                                  f'cannot be given a block')
            shape = (self.vertex_dims[el.source], self.vertex_dims[el.target])
            if block.shape != shape:
                raise ModuleError(f'Block of basis element {b} has shape '
                                  f'{block.shape}, expected {shape}')
            if block.field != algebra.field:
                raise ModuleError(f'Block of basis element {b} is over '
                                  f'{block.field}, not {algebra.field}')
            if not block.is_zero():
                self._blocks[b] = block
        if check:
            check_module(self)

    def __repr__(self):
        return (f'RightModule({self.algebra.name!r}, '
                f'dims={list(self.vertex_dims)})')

    @property
    def dim(self):
        return sum(self.vertex_dims)

    total_dim = dim

    def is_zero(self):
        return self.dim == 0

    @property
    def offsets(self):
        return tuple(int(x) for x in np.concatenate(
            ([0], np.cumsum(self.vertex_dims)))[:-1])

    def block(self, b):
        """Action block of basis element `b` (identity for idempotents)."""
        el = self.algebra.basis[b]
        if el.is_idempotent():
            return _identity(self.vertex_dims[el.source], self.algebra.field)
        if b in self._blocks:
            return self._blocks[b]
        return zeros((self.vertex_dims[el.source], self.vertex_dims[el.target]),
                     self.algebra.field)

    def nonzero_blocks(self):
        """Iterate over ``(index, block)`` for nonzero radical actions."""
        return iter(sorted(self._blocks.items()))

    def action(self, b):
        """Full ``dim x dim`` matrix of the action of basis element `b`."""
        el = self.algebra.basis[b]
        off = self.offsets
        rows = [{} for _ in range(self.dim)]
        for i, j, v in self.block(b).items():
            rows[off[el.source] + i][off[el.target] + j] = v
        return matrix.from_rows(rows, self.dim, self.algebra.field)

    def __eq__(self, other):
        if not isinstance(other, RightModule):
            return NotImplemented
        return (self.algebra is other.algebra
                and self.vertex_dims == other.vertex_dims
                and self._blocks.keys() == other._blocks.keys()
                and all(self._blocks[b] == other._blocks[b]
                        for b in self._blocks))

    __hash__ = None


def _identity(n, field):
    return matrix.from_rows([{i: field.one} for i in range(n)], n, field)


def check_module(m):
    """Check that the action of `m` is multiplicative.

    Raises
    ------
    ModuleError
        If ``block(b_i) @ block(b_j)`` differs from the action of
        ``b_i * b_j`` for some composable pair.

    """
    a = m.algebra
    for i in range(a.dim):
        bi = a.basis[i]
        for j in a.by_source[bi.target]:
            lhs = m.block(i) @ m.block(j)
            rhs = zeros(lhs.shape, a.field)
            for k, c in a.product(i, j).items():
                rhs = rhs + m.block(k).scale(c)
            if lhs != rhs:
                raise ModuleError(f'Action does not respect the product of '
                                  f'basis elements {i} and {j}')


def simple_module(a, v):
    """One-dimensional simple module concentrated at vertex `v`."""
    if not 0 <= v < a.vertex_count:
        raise ModuleError(f'Vertex {v} out of range 0..{a.vertex_count - 1}')
    dims = [0] * a.vertex_count
    dims[v] = 1
    return RightModule(a, dims)


def zero_module(a):
    return RightModule(a, [0] * a.vertex_count)


def projective_module(a, v):
    """Indecomposable projective ``P_v = e_v A``.

    Its basis is the algebra basis elements with source `v`; the component at
    vertex ``u`` is spanned by those with target ``u``.
    """
    if not 0 <= v < a.vertex_count:
        raise ModuleError(f'Vertex {v} out of range 0..{a.vertex_count - 1}')
    component = [[] for _ in range(a.vertex_count)]
    for i in a.by_source[v]:
        component[a.basis[i].target].append(i)
    position = {i: k for comp in component for k, i in enumerate(comp)}
    rows = {}
    for i in a.by_source[v]:
        for j, combo in a.left_products[i]:
            if a.basis[j].is_idempotent():
                continue
            block_rows = rows.setdefault(j, {})
            block_rows[position[i]] = {position[k]: c for k, c in combo.items()}
    blocks = {}
    dims = [len(comp) for comp in component]
    for j, block_rows in rows.items():
        el = a.basis[j]
        blocks[j] = matrix.from_rows(
            [block_rows.get(r, {}) for r in range(dims[el.source])],
            dims[el.target], a.field)
    return RightModule(a, dims, blocks)


@dataclass(frozen=True)
class CoverData:
    """Minimal projective cover ``P -> M``.

    Attributes
    ----------
    projective : :class:`RightModule`
        The projective module P.
    multiplicities : tuple of int
        Number of summands ``P_v`` in P for every vertex.
    cover_map : :class:`~trivext.matrix`
        ``dim P x dim M`` matrix of the cover (row vectors).
    kernel : :class:`~trivext.matrix`
        ``dim Omega(M) x dim P`` inclusion of the syzygy into P.
    top_positions : tuple of int
        Basis positions of P holding the generators ``(g, e_v)``; a minimal
        cover has no kernel component there.

    """
    projective: object
    multiplicities: tuple
    cover_map: object
    kernel: object
    top_positions: tuple

    def is_minimal(self):
        """True when the kernel lies in ``P . rad``."""
        cols = set(self.top_positions)
        return not any(j in cols for _, j, _ in self.kernel.items())


class _Presentation:
    # generators of M and the projective they span, one vertex at a time

    def __init__(self, m):
        a = m.algebra
        f = a.field
        n = a.vertex_count
        self.module = m
        self.generators = []
        for u in range(n):
            d = m.vertex_dims[u]
            image = []
            for b in a.by_target[u]:
                if b in m._blocks:
                    image.extend(r for r in m._blocks[b].rows() if r)
            if image:
                _, pivots = rref(matrix.from_rows(image, d, f))
            else:
                pivots = ()
            pivots = set(pivots)
            self.generators.append([j for j in range(d) if j not in pivots])
        self.multiplicities = tuple(len(g) for g in self.generators)
        # basis of P at vertex t: (u, j, x) with x in e_u A e_t
        self.basis = [[] for _ in range(n)]
        for u in range(n):
            for j in self.generators[u]:
                for x in a.by_source[u]:
                    self.basis[a.basis[x].target].append((u, j, x))
        self.position = [{key: k for k, key in enumerate(comp)}
                         for comp in self.basis]

    def images(self, t):
        """Rows ``g . x`` in ``M e_t`` for the basis of P at vertex t."""
        m = self.module
        a = m.algebra
        rows = []
        for u, j, x in self.basis[t]:
            if a.basis[x].is_idempotent():
                rows.append({j: a.field.one})
            elif x in m._blocks:
                rows.append(m._blocks[x].row(j))
            else:
                rows.append({})
        return matrix.from_rows(rows, m.vertex_dims[t], a.field)

    def act(self, t, vector, b):
        """Right action of basis element `b` on a vector of P at vertex t."""
        a = self.module.algebra
        target = a.basis[b].target
        out = {}
        for k, c in vector.items():
            u, j, x = self.basis[t][k]
            for y, cy in a.product(x, b).items():
                pos = self.position[target][(u, j, y)]
                out[pos] = out.get(pos, a.field.zero) + c * cy
        return {k: c for k, c in out.items() if c}


def _syzygy_blocks(p, kernels):
    a = p.module.algebra
    f = a.field
    # kernels are in reduced echelon form: the pivot is the first entry
    pivots = [tuple(min(r) for r in K.rows()) for K in kernels]
    blocks = {}
    for b in a.radical:
        el = a.basis[b]
        s, t = el.source, el.target
        if not kernels[s].nrows or not kernels[t].nrows:
            continue
        rows = []
        for vector in kernels[s].rows():
            w = p.act(s, vector, b)
            rows.append({r: w[col] for r, col in enumerate(pivots[t])
                         if col in w})
        block = matrix.from_rows(rows, kernels[t].nrows, f)
        if not block.is_zero():
            blocks[b] = block
    return blocks


def _resolve_step(m):
    p = _Presentation(m)
    kernels = [left_kernel_basis(p.images(t)) for t in range(len(p.basis))]
    dims = [K.nrows for K in kernels]
    omega = RightModule(m.algebra, dims, _syzygy_blocks(p, kernels))
    logger.debug('cover multiplicities %s, syzygy dims %s',
                 p.multiplicities, dims)
    return p, kernels, omega


def projective_cover(m):
    """Minimal projective cover of a nonzero module.

    The top ``M / M rad`` is computed exactly: at every vertex the image of
    the radical is put in echelon form and the non-pivot unit vectors are the
    generators. The cover sends ``(g, x)`` to ``g . x``.

    Parameters
    ----------
    m : :class:`RightModule`

    Returns
    -------
    cover : :class:`CoverData`

    Raises
    ------
    ModuleError
        If `m` is zero.

    Examples
    --------
    .. code:: pycon

        >>> t = trivext.trivial_extension(trivext.semisimple_algebra(1))
        >>> cover = trivext.projective_cover(trivext.simple_module(t, 0))
        >>> cover.projective.dim, cover.kernel.nrows
        (2, 1)

    """
    if m.is_zero():
        raise ModuleError('The zero module has no projective cover')
    a = m.algebra
    f = a.field
    p, kernels, _ = _resolve_step(m)
    n = a.vertex_count

    # P as a module: its component at t is indexed by p.basis[t]
    dims = [len(comp) for comp in p.basis]
    blocks = {}
    for b in a.radical:
        el = a.basis[b]
        s, t = el.source, el.target
        if not dims[s] or not dims[t]:
            continue
        rows = [p.act(s, {k: f.one}, b) for k in range(dims[s])]
        block = matrix.from_rows(rows, dims[t], f)
        if not block.is_zero():
            blocks[b] = block
    projective = RightModule(a, dims, blocks)

    p_off = projective.offsets
    m_off = m.offsets
    cover_rows = []
    kernel_rows = []
    top = []
    for t in range(n):
        for k, (u, j, x) in enumerate(p.basis[t]):
            if a.basis[x].is_idempotent():
                top.append(p_off[t] + k)
        for row in p.images(t).rows():
            cover_rows.append({m_off[t] + c: v for c, v in row.items()})
        for row in kernels[t].rows():
            kernel_rows.append({p_off[t] + c: v for c, v in row.items()})
    return CoverData(projective, p.multiplicities,
                     matrix.from_rows(cover_rows, m.dim, f),
                     matrix.from_rows(kernel_rows, projective.dim, f),
                     tuple(top))


def syzygy(m):
    """Syzygy ``Omega(M)``: the kernel of the minimal projective cover.

    The kernel basis is the canonical reduced echelon basis at every vertex,
    so the result is deterministic. The syzygy of the zero module is the zero
    module.

    Examples
    --------
    .. code:: pycon

        >>> t = trivext.trivial_extension(trivext.semisimple_algebra(1))
        >>> trivext.syzygy(trivext.simple_module(t, 0)).dim
        1

    """
    if m.is_zero():
        logger.warning('syzygy of the zero module requested, returning zero')
        return zero_module(m.algebra)
    return _resolve_step(m)[2]


def projective_dimension(m, max_steps=200):
    """Length of the minimal projective resolution of `m`.

    Returns None when no syzygy vanishes within `max_steps` steps.
    """
    for step in range(max_steps + 1):
        if m.is_zero():
            return max(step - 1, 0)
        m = syzygy(m)
    return None


def global_dimension(a, max_steps=200):
    """Maximum projective dimension of the simple modules, or None."""
    out = 0
    for v in range(a.vertex_count):
        pd = projective_dimension(simple_module(a, v), max_steps)
        if pd is None:
            return None
        out = max(out, pd)
    return out


ISOMORPHIC = 'isomorphic'
NON_ISOMORPHIC = 'non-isomorphic'
UNKNOWN = 'unknown'


@dataclass(frozen=True)
class IsoResult:
    """Outcome of :func:`modules_isomorphic`.

    `certificate` holds one invertible matrix per vertex when `status` is
    ``'isomorphic'``; `reason` explains the other outcomes.
    """
    status: str
    certificate: tuple = None
    reason: str = ''

    def __bool__(self):
        return self.status == ISOMORPHIC


def hom_basis(m, n):
    """Basis of ``Hom(M, N)`` as tuples of per-vertex matrices.

    A homomorphism is a family ``phi_v: M e_v -> N e_v`` with
    ``block_M(b) @ phi_t == phi_s @ block_N(b)`` for every radical ``b``.
    """
    a = m.algebra
    f = a.field
    n_vert = a.vertex_count
    offset = []
    total = 0
    for v in range(n_vert):
        offset.append(total)
        total += m.vertex_dims[v] * n.vertex_dims[v]

    def var(v, i, j):
        return offset[v] + i * n.vertex_dims[v] + j

    equations = []
    for b in a.radical:
        el = a.basis[b]
        s, t = el.source, el.target
        dms, dnt = m.vertex_dims[s], n.vertex_dims[t]
        if not dms or not dnt:
            continue
        bm = m._blocks.get(b)
        bn = n._blocks.get(b)
        if bm is None and bn is None:
            continue
        bm_rows = bm.rows() if bm is not None else [{}] * dms
        bn_cols = {}
        if bn is not None:
            for i, q, c in bn.items():
                bn_cols.setdefault(q, []).append((i, c))
        for p in range(dms):
            for q in range(dnt):
                eq = {}
                for i, c in bm_rows[p].items():
                    key = var(t, i, q)
                    eq[key] = eq.get(key, f.zero) + c
                for j, c in bn_cols.get(q, ()):
                    key = var(s, p, j)
                    eq[key] = eq.get(key, f.zero) - c
                eq = {k: c for k, c in eq.items() if c}
                if eq:
                    equations.append(eq)
    if total == 0:
        return []
    if equations:
        solutions = kernel_basis(matrix.from_rows(equations, total, f)).rows()
    else:
        solutions = [{k: f.one} for k in range(total)]
    out = []
    for sol in solutions:
        maps = []
        for v in range(n_vert):
            dm, dn = m.vertex_dims[v], n.vertex_dims[v]
            rows = [{j: sol[var(v, i, j)] for j in range(dn)
                     if var(v, i, j) in sol} for i in range(dm)]
            maps.append(matrix.from_rows(rows, dn, f))
        out.append(tuple(maps))
    return out


def _combine(basis, coefficients, field):
    maps = []
    for v in range(len(basis[0])):
        acc = basis[0][v].scale(0)
        for h, c in zip(basis, coefficients):
            if c:
                acc = acc + h[v].scale(c)
        maps.append(acc)
    return tuple(maps)


def _invertible(maps):
    return all(determinant(phi) for phi in maps if phi.nrows)


def modules_isomorphic(m, n, options=None):
    """Search for an isomorphism ``M -> N``.

    Parameters
    ----------
    m, n : :class:`RightModule`
        Modules over the same algebra.
    options : :class:`~trivext.OrbitOptions`, optional
        Supplies the random sample budget, the seed and the size limit for
        exhaustive search over prime fields.

    Returns
    -------
    result : :class:`IsoResult`
        ``'isomorphic'`` with a verified certificate, ``'non-isomorphic'``
        when an invariant differs, or ``'unknown'`` when the search budget
        ran out.

    Notes
    -----
    Over GF(p) the space ``Hom(M, N)`` is searched exhaustively when it has
    at most `exhaustive_limit` elements. Otherwise seeded random integer
    combinations are tried. Non-isomorphism is reported when the dimension
    vectors differ, when ``Hom(M, N) = 0``, or when
    ``dim Hom(M, N) != dim Hom(M, M)``.

    """
    if m.algebra is not n.algebra:
        raise ModuleError('Modules over different algebras cannot be compared')
    options = options or OrbitOptions()
    f = m.algebra.field
    if m.vertex_dims != n.vertex_dims:
        return IsoResult(NON_ISOMORPHIC, reason='dimension vectors differ')
    if m == n:
        return IsoResult(ISOMORPHIC, tuple(_identity(d, f)
                                           for d in m.vertex_dims),
                         'identical modules')
    if m.is_zero():
        return IsoResult(ISOMORPHIC, tuple(_identity(0, f)
                                           for _ in m.vertex_dims))
    basis = hom_basis(m, n)
    if not basis:
        return IsoResult(NON_ISOMORPHIC, reason='Hom(M, N) is zero')
    r = len(basis)
    p = f.characteristic
    if p and p ** r <= options.exhaustive_limit:
        candidates = itertools.product(range(p), repeat=r)
        exhaustive = True
    else:
        rng = np.random.default_rng(options.seed)
        low, high = (0, p) if p else (-3, 4)
        candidates = (tuple(int(c) for c in rng.integers(low, high, size=r))
                      for _ in range(options.iso_samples))
        exhaustive = False
    for coefficients in candidates:
        if not any(coefficients):
            continue
        phi = _combine(basis, [f(c) for c in coefficients], f)
        if _invertible(phi):
            return IsoResult(ISOMORPHIC, phi)
    if exhaustive:
        return IsoResult(NON_ISOMORPHIC,
                         reason='no invertible map in Hom(M, N)')
    if len(hom_basis(m, m)) != r:
        return IsoResult(NON_ISOMORPHIC,
                         reason='dim Hom(M, N) != dim Hom(M, M)')
    return IsoResult(UNKNOWN, reason=f'no invertible map among '
                                     f'{options.iso_samples} samples')
