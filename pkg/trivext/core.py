"""Quivers, based algebras and their structural invariants."""
import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from trivext.field import asfield
from trivext.linalg import matrix, rref

logger = logging.getLogger(__name__)

IDEMPOTENT = 'idempotent'
RADICAL = 'radical'


class AlgebraError(ValueError):
    """Raised when quiver or algebra data violates a structural invariant."""


@dataclass(frozen=True)
class Quiver:
    """Finite quiver.

    Parameters
    ----------
    vertex_count : int
        Number of vertices, labelled ``0 .. vertex_count-1``.
    arrows : tuple of (int, int, str)
        ``(source, target, label)`` triples. Parallel arrows are allowed,
        labels must be unique.
    vertex_names : tuple of str, optional
        Display names of the vertices. Defaults to ``'0', '1', ...``.

    """
    vertex_count: int
    arrows: tuple = ()
    vertex_names: tuple = None

    def __post_init__(self):
        if self.vertex_count < 1:
            raise AlgebraError('A quiver needs at least one vertex')
        arrows = tuple((int(s), int(t), str(label))
                       for s, t, label in self.arrows)
        object.__setattr__(self, 'arrows', arrows)
        for s, t, label in arrows:
            if not (0 <= s < self.vertex_count and 0 <= t < self.vertex_count):
                raise AlgebraError(f"Arrow '{label}' has an endpoint outside "
                                   f"0..{self.vertex_count - 1}")
        labels = [label for _, _, label in arrows]
        if len(set(labels)) != len(labels):
            raise AlgebraError('Arrow labels must be unique')
        if self.vertex_names is None:
            names = tuple(str(v) for v in range(self.vertex_count))
        else:
            names = tuple(str(v) for v in self.vertex_names)
            if len(names) != self.vertex_count:
                raise AlgebraError('One name per vertex is required')
        object.__setattr__(self, 'vertex_names', names)

    def adjacency(self):
        """Sparse adjacency matrix counting arrows between vertex pairs."""
        n = self.vertex_count
        if not self.arrows:
            return csr_matrix((n, n), dtype=np.int64)
        src = [s for s, _, _ in self.arrows]
        tgt = [t for _, t, _ in self.arrows]
        return csr_matrix((np.ones(len(src), dtype=np.int64), (src, tgt)),
                          shape=(n, n))

    def is_acyclic(self):
        if any(s == t for s, t, _ in self.arrows):
            return False
        count, _ = connected_components(self.adjacency(), directed=True,
                                        connection='strong')
        return count == self.vertex_count

    def paths(self):
        """All paths of positive length as tuples of arrow indices.

        Paths are listed by length, then lexicographically, so path algebra
        bases are reproducible.

        Raises
        ------
        AlgebraError
            If the quiver has an oriented cycle.

        """
        if not self.is_acyclic():
            raise AlgebraError('Quiver has an oriented cycle; its path '
                               'algebra is infinite-dimensional')
        out = [(k,) for k in range(len(self.arrows))]
        layer = out
        while layer:
            nxt = []
            for p in layer:
                end = self.arrows[p[-1]][1]
                for k, (s, _, _) in enumerate(self.arrows):
                    if s == end:
                        nxt.append(p + (k,))
            out.extend(nxt)
            layer = nxt
        return out


def parse_quiver(text):
    """Parse the quiver file format.

    Lines are ``vertex <name>`` declarations or ``[<label>:] <name> -> <name>``
    arrows; ``#`` starts a comment. Unlabelled arrows are called ``a0, a1,
    ...`` in file order. When the file declares vertices, arrows may only use
    declared names; otherwise vertices are created on first use.

    Examples
    --------
    .. code:: pycon

        >>> trivext.parse_quiver('x: 1 -> 2').arrows
        ((0, 1, 'x'),)

    """
    declared = []
    raw_arrows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.startswith('vertex '):
            name = line[len('vertex '):].strip()
            if not name or ' ' in name or name in declared:
                raise AlgebraError(f'line {lineno}: bad vertex declaration '
                                   f'{raw.strip()!r}')
            declared.append(name)
            continue
        label, sep, rest = line.partition(':')
        if not sep:
            label, rest = None, line
        ends = [x.strip() for x in rest.split('->')]
        if len(ends) != 2 or not all(ends) \
                or any(' ' in x for x in ends) \
                or (label is not None and not label.strip()):
            raise AlgebraError(f'line {lineno}: cannot parse {raw.strip()!r}')
        raw_arrows.append((lineno, label and label.strip(), *ends))

    names = list(declared)
    index = {name: k for k, name in enumerate(names)}
    arrows = []
    for k, (lineno, label, s, t) in enumerate(raw_arrows):
        for name in (s, t):
            if name not in index:
                if declared:
                    raise AlgebraError(f'line {lineno}: unknown vertex '
                                       f'{name!r}')
                index[name] = len(names)
                names.append(name)
        arrows.append((index[s], index[t], label or f'a{k}'))
    if not names:
        raise AlgebraError('Quiver file declares no vertices')
    return Quiver(len(names), tuple(arrows), tuple(names))


@dataclass(frozen=True)
class BasisElement:
    """One element of the vertex-bigraded basis of a :class:`BasedAlgebra`.

    The element lies in ``e_source A e_target``. `dual` is set on the degree
    one elements of a trivial extension and names the basis element of the
    original algebra this functional is dual to.
    """
    index: int
    source: int
    target: int
    kind: str = RADICAL
    degree: int = 0
    label: str = ''
    dual: int = None

    def is_idempotent(self):
        return self.kind == IDEMPOTENT


@dataclass(frozen=True)
class CyDim:
    """Fractional Calabi-Yau dimension ``(m, ell)`` with ``ell > 0``."""
    m: int
    ell: int

    def __post_init__(self):
        if int(self.ell) <= 0:
            raise ValueError(f'CyDim needs ell > 0, got {self.ell}')
        object.__setattr__(self, 'm', int(self.m))
        object.__setattr__(self, 'ell', int(self.ell))

    def __iter__(self):
        yield self.m
        yield self.ell

    def __str__(self):
        return f'({self.m}, {self.ell})'


class BasedAlgebra:
    """Split-basic finite-dimensional algebra given by structure constants.

    Parameters
    ----------
    field : :class:`~trivext.Field`
        Ground field.
    basis : sequence of :class:`BasisElement`
        Basis in index order. Exactly one idempotent per vertex.
    mult : dict
        ``{(i, j): {k: c}}`` giving ``b_i * b_j = sum c b_k``. Missing pairs
        multiply to zero. Coefficients are converted into the field.
    name : str, optional
        Display name.
    check : bool, optional
        Validate every invariant on construction. Default is True.

    Notes
    -----
    Basis elements compose left to right: ``b_i * b_j`` can only be nonzero
    when ``target(b_i) == source(b_j)``. Projective right modules are
    ``P_v = e_v A``.

    """

    def __init__(self, field, basis, mult, name='', check=True):
        self.field = asfield(field)
        self.basis = tuple(basis)
        K = self.field.domain
        table = {}
        for key, combo in mult.items():
            combo = {k: K.convert(c) for k, c in combo.items()}
            combo = {k: c for k, c in combo.items() if c}
            if combo:
                table[(int(key[0]), int(key[1]))] = combo
        self._mult = table
        self.name = name
        if check:
            validate_algebra(self)

    def __repr__(self):
        return (f'BasedAlgebra({self.name!r}, dim={self.dim}, '
                f'vertices={self.vertex_count}, field={self.field.tag!r})')

    @property
    def dim(self):
        return len(self.basis)

    @cached_property
    def vertex_count(self):
        idem = [b for b in self.basis if b.is_idempotent()]
        return len(idem)

    @cached_property
    def idempotents(self):
        """Basis index of the idempotent at each vertex."""
        out = [None] * self.vertex_count
        for b in self.basis:
            if b.is_idempotent():
                if not 0 <= b.source < self.vertex_count or out[b.source] is not None:
                    raise AlgebraError('Expected exactly one idempotent per '
                                       'vertex')
                out[b.source] = b.index
        return tuple(out)

    @cached_property
    def radical(self):
        """Indices of the radical basis elements."""
        return tuple(b.index for b in self.basis if not b.is_idempotent())

    @cached_property
    def by_source(self):
        out = [[] for _ in range(self.vertex_count)]
        for b in self.basis:
            out[b.source].append(b.index)
        return tuple(tuple(x) for x in out)

    @cached_property
    def by_target(self):
        out = [[] for _ in range(self.vertex_count)]
        for b in self.basis:
            out[b.target].append(b.index)
        return tuple(tuple(x) for x in out)

    @cached_property
    def left_products(self):
        """``left_products[i]`` lists ``(j, b_i * b_j)`` over nonzero products."""
        out = [[] for _ in range(self.dim)]
        for (i, j), combo in sorted(self._mult.items()):
            out[i].append((j, combo))
        return tuple(tuple(x) for x in out)

    def product(self, i, j):
        """``b_i * b_j`` as a sparse ``{k: c}`` dict (do not mutate)."""
        return self._mult.get((i, j), {})

    def items(self):
        """Iterate over ``((i, j), {k: c})`` for all nonzero products."""
        return iter(sorted(self._mult.items()))

    def multiply(self, u, v):
        """Product of two sparse vectors ``{index: coefficient}``."""
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self._mult.get((i, j), {}).items():
                    out[k] = out.get(k, self.field.zero) + a * b * c
        return {k: c for k, c in out.items() if c}

    def table(self):
        """Copy of the structure constants as ``{(i, j): {k: c}}``."""
        return {key: dict(combo) for key, combo in self._mult.items()}


def validate_algebra(a):
    """Check every structural invariant of a :class:`BasedAlgebra`.

    The checks are: one idempotent per vertex, unit and orthogonality of the
    idempotents, vertex compatibility of all products, associativity on
    basis triples, and that the span of the radical elements is a nilpotent
    two-sided ideal.

    Raises
    ------
    AlgebraError
        Naming the first violated invariant.

    """
    if a.dim == 0:
        raise AlgebraError('The zero algebra is not allowed')
    for k, b in enumerate(a.basis):
        if b.index != k:
            raise AlgebraError(f'Basis element at position {k} has index '
                               f'{b.index}')
    idem = a.idempotents
    n = a.vertex_count
    for b in a.basis:
        if not (0 <= b.source < n and 0 <= b.target < n):
            raise AlgebraError(f'Basis element {b.index} has a vertex outside '
                               f'0..{n - 1}')
        if b.is_idempotent() and b.source != b.target:
            raise AlgebraError(f'Idempotent {b.index} must have source equal '
                               f'to target')
    one = a.field.one

    # unit and orthogonality
    for v in range(n):
        for w in range(n):
            expected = {idem[v]: one} if v == w else {}
            if a.product(idem[v], idem[w]) != expected:
                raise AlgebraError(f'Idempotents e_{v}, e_{w} are not '
                                   f'orthogonal')
    for b in a.basis:
        for v in range(n):
            left = a.product(idem[v], b.index)
            right = a.product(b.index, idem[v])
            if left != ({b.index: one} if v == b.source else {}):
                raise AlgebraError(f'e_{v} does not act as the unit on the '
                                   f'left of basis element {b.index}')
            if right != ({b.index: one} if v == b.target else {}):
                raise AlgebraError(f'e_{v} does not act as the unit on the '
                                   f'right of basis element {b.index}')

    # vertex compatibility
    for (i, j), combo in a.items():
        if not (0 <= i < a.dim and 0 <= j < a.dim):
            raise AlgebraError(f'Structure constants mention unknown pair '
                               f'({i}, {j})')
        bi, bj = a.basis[i], a.basis[j]
        if bi.target != bj.source:
            raise AlgebraError(f'Product b_{i} b_{j} is nonzero although '
                               f'target(b_{i}) != source(b_{j})')
        for k in combo:
            if not 0 <= k < a.dim:
                raise AlgebraError(f'Product b_{i} b_{j} involves unknown '
                                   f'index {k}')
            bk = a.basis[k]
            if bk.source != bi.source or bk.target != bj.target:
                raise AlgebraError(f'Product b_{i} b_{j} leaves '
                                   f'e_{bi.source} A e_{bj.target}')

    # associativity, only over composable triples
    for i in range(a.dim):
        for j, ij in a.left_products[i]:
            for k in a.by_source[a.basis[j].target]:
                lhs = a.multiply(ij, {k: one})
                rhs = a.multiply({i: one}, a.product(j, k))
                if lhs != rhs:
                    raise AlgebraError(f'Associativity fails on basis triple '
                                       f'({i}, {j}, {k})')

    # radical is a two-sided ideal
    radical = set(a.radical)
    idem_set = set(idem)
    for (i, j), combo in a.items():
        if (i in radical or j in radical) and idem_set & combo.keys():
            raise AlgebraError(f'Product b_{i} b_{j} of a radical element has '
                               f'an idempotent component')
    if not _radical_is_nilpotent(a):
        raise AlgebraError('The span of the radical elements is not nilpotent')


def _radical_is_nilpotent(a):
    # rad^k is spanned blockwise in e_s A e_t, so track one echelon basis per
    # vertex pair and multiply by radical elements on the right
    f = a.field
    blocks = {}
    for r in a.radical:
        b = a.basis[r]
        blocks.setdefault((b.source, b.target), []).append({r: f.one})
    for _ in range(a.dim + 1):
        if not blocks:
            return True
        nxt = {}
        for (s, u), vectors in blocks.items():
            for v in vectors:
                for r in a.by_source[u]:
                    if a.basis[r].is_idempotent():
                        continue
                    w = a.multiply(v, {r: f.one})
                    if w:
                        nxt.setdefault((s, a.basis[r].target), []).append(w)
        blocks = {}
        for key, vectors in nxt.items():
            echelon, _ = rref(matrix.from_rows(vectors, a.dim, f))
            if echelon.nrows:
                blocks[key] = echelon.rows()
    return not blocks


def is_connected(a):
    """True when the algebra is ring-indecomposable (connected quiver)."""
    n = a.vertex_count
    edges = {(b.source, b.target) for b in a.basis if b.source != b.target}
    if not edges:
        return n == 1
    src, tgt = zip(*sorted(edges))
    graph = csr_matrix((np.ones(len(src)), (src, tgt)), shape=(n, n))
    count, _ = connected_components(graph, directed=True, connection='weak')
    return count == 1
