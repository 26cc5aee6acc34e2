"""Finite posets, order-ideal lattices and named families.

A :class:`Poset` on ``n`` elements is stored as its cover relation together
with the read-only boolean matrix ``leq`` (``leq[i, j]`` iff ``i <= j``).
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from importlib import resources

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from trivext.core import Quiver

logger = logging.getLogger(__name__)


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    pass


class UnknownElementError(PosetError):
    pass


class DuplicateCoverError(PosetError):
    pass


class BoundError(PosetError):
    pass


def _closure(size, relations):
    leq = np.eye(size, dtype=bool)
    if relations:
        lo, hi = zip(*relations)
        graph = csr_matrix((np.ones(len(lo)), (lo, hi)), shape=(size, size))
        leq |= np.isfinite(shortest_path(graph, directed=True,
                                          unweighted=True))
    return leq


def _leq_to_covers(leq):
    lt = leq.copy()
    np.fill_diagonal(lt, False)
    inbetween = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
    child = lt & ~inbetween
    return tuple((int(i), int(j)) for i, j in zip(*np.nonzero(child)))


class Poset:
    """Finite partial order on ``0 .. size-1``.

    Parameters
    ----------
    size : int
        Number of elements.
    covers : sequence of (int, int)
        Cover relations ``(lower, upper)``. They must be irredundant and
        acyclic; use :meth:`from_relations` for arbitrary generating
        relations.
    names : sequence of str, optional
        Element names. Defaults to ``'0', '1', ...``.

    Raises
    ------
    CycleError
        If the relations have an oriented cycle.
    DuplicateCoverError
        If a cover is listed twice.
    PosetError
        If a cover is implied by the others or mentions an unknown index.

    """

    def __init__(self, size, covers=(), names=None):
        self.size = int(size)
        covers = [(int(i), int(j)) for i, j in covers]
        for i, j in covers:
            if not (0 <= i < self.size and 0 <= j < self.size):
                raise PosetError(f'Cover ({i}, {j}) outside 0..{self.size - 1}')
            if i == j:
                raise CycleError(f'Element {i} cannot cover itself')
        if len(set(covers)) != len(covers):
            raise DuplicateCoverError('A cover relation is listed twice')
        leq = _closure(self.size, covers)
        if np.any(leq & leq.T & ~np.eye(self.size, dtype=bool)):
            raise CycleError('Relations contain a cycle')
        reduced = _leq_to_covers(leq)
        if set(reduced) != set(covers):
            raise PosetError('Covers are not irredundant; use '
                             'Poset.from_relations')
        leq.flags.writeable = False
        self.leq = leq
        self.covers = tuple(sorted(covers))
        if names is None:
            names = [str(i) for i in range(self.size)]
        self.names = tuple(str(x) for x in names)
        if len(self.names) != self.size:
            raise PosetError('One name per element is required')

    @classmethod
    def from_relations(cls, size, relations, names=None):
        """Poset generated by arbitrary relations ``(lower, upper)``."""
        relations = [(int(i), int(j)) for i, j in relations]
        if any(i == j for i, j in relations):
            raise CycleError('An element cannot be below itself strictly')
        leq = _closure(size, relations)
        if np.any(leq & leq.T & ~np.eye(size, dtype=bool)):
            raise CycleError('Relations contain a cycle')
        return cls(size, _leq_to_covers(leq), names)

    @classmethod
    def from_leq(cls, leq, names=None):
        leq = np.asarray(leq, dtype=bool)
        return cls(leq.shape[0], _leq_to_covers(leq), names)

    def __repr__(self):
        return f'Poset(size={self.size}, covers={list(self.covers)})'

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.size == other.size and self.covers == other.covers

    def __hash__(self):
        return hash((self.size, self.covers))

    def __len__(self):
        return self.size

    @cached_property
    def lt(self):
        out = self.leq.copy()
        np.fill_diagonal(out, False)
        out.flags.writeable = False
        return out

    @cached_property
    def lower_covers(self):
        out = [[] for _ in range(self.size)]
        for i, j in self.covers:
            out[j].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def upper_covers(self):
        out = [[] for _ in range(self.size)]
        for i, j in self.covers:
            out[i].append(j)
        return tuple(tuple(x) for x in out)

    def minimal(self):
        return [x for x in range(self.size) if not self.lower_covers[x]]

    def maximal(self):
        return [x for x in range(self.size) if not self.upper_covers[x]]

    @property
    def bottom(self):
        """Least element, or None."""
        m = self.minimal()
        return m[0] if len(m) == 1 else None

    @property
    def top(self):
        """Greatest element, or None."""
        m = self.maximal()
        return m[0] if len(m) == 1 else None

    def is_bounded(self):
        return self.size > 0 and self.bottom is not None \
            and self.top is not None

    def comparable(self, x, y):
        return bool(self.leq[x, y] or self.leq[y, x])

    def linear_extension(self):
        """Elements sorted by the number of elements below them, then index."""
        below = self.leq.sum(axis=0)
        return [int(x) for x in np.lexsort((np.arange(self.size), below))]

    def interval_count(self):
        return int(self.leq.sum())

    def hasse_quiver(self):
        """Quiver with one arrow per cover relation."""
        arrows = tuple((i, j, f'a{k}') for k, (i, j) in enumerate(self.covers))
        return Quiver(max(self.size, 1), arrows, self.names or None)

    @cached_property
    def join_table(self):
        """``join_table[i, j]`` is the least upper bound, or -1 if none."""
        return _bound_table(self.leq)

    @cached_property
    def meet_table(self):
        """``meet_table[i, j]`` is the greatest lower bound, or -1 if none."""
        return _bound_table(self.leq.T)


def _bound_table(leq):
    # least element of the common upper set, the way lub tables are built
    # from rows of leq
    n = leq.shape[0]
    out = np.full((n, n), -1, dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            upper = np.flatnonzero(leq[i] & leq[j])
            if upper.size == 0:
                continue
            sub = leq[np.ix_(upper, upper)]
            least = upper[sub.all(axis=1)]
            if least.size == 1:
                out[i, j] = out[j, i] = least[0]
    out.flags.writeable = False
    return out


def relabel(p, permutation):
    """Poset with element ``i`` moved to position ``permutation[i]``."""
    perm = [int(x) for x in permutation]
    if sorted(perm) != list(range(p.size)):
        raise PosetError('Not a permutation of the elements')
    names = [None] * p.size
    for i, k in enumerate(perm):
        names[k] = p.names[i]
    return Poset(p.size, [(perm[i], perm[j]) for i, j in p.covers], names)


def parse_poset(text):
    """Parse the poset file format.

    Lines are either ``elem <name>`` declarations or ``<name> < <name>``
    relations; ``#`` starts a comment. Element order of first appearance
    fixes the indices. When the file declares elements, relations may only
    use declared names; otherwise elements are created on first use.
    Relations implied by transitivity are dropped with a warning.

    Raises
    ------
    CycleError, UnknownElementError, DuplicateCoverError, PosetError

    Examples
    --------
    .. code:: pycon

        >>> trivext.parse_poset('a < b').covers
        ((0, 1),)

    """
    declared = []
    relations = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == 'elem':
            if len(tokens) != 2:
                raise PosetError(f'line {lineno}: expected "elem <name>"')
            if tokens[1] in declared:
                raise PosetError(f'line {lineno}: element {tokens[1]!r} '
                                 f'declared twice')
            declared.append(tokens[1])
        elif len(tokens) == 3 and tokens[1] == '<':
            relations.append((lineno, tokens[0], tokens[2]))
        else:
            raise PosetError(f'line {lineno}: cannot parse {raw.strip()!r}')

    names = list(declared)
    index = {name: k for k, name in enumerate(names)}
    pairs = []
    for lineno, lo, hi in relations:
        for name in (lo, hi):
            if name not in index:
                if declared:
                    raise UnknownElementError(f'line {lineno}: unknown '
                                              f'element {name!r}')
                index[name] = len(names)
                names.append(name)
        pair = (index[lo], index[hi])
        if pair in pairs:
            raise DuplicateCoverError(f'line {lineno}: {lo} < {hi} repeated')
        if pair[0] == pair[1]:
            raise CycleError(f'line {lineno}: {lo} < {lo}')
        pairs.append(pair)
    p = Poset.from_relations(len(names), pairs, names)
    dropped = set(pairs) - set(p.covers)
    if dropped:
        logger.warning('dropped %d relation(s) implied by transitivity',
                       len(dropped))
    return p


def format_poset(p):
    """Write `p` in the poset file format."""
    lines = [f'elem {name}' for name in p.names]
    lines += [f'{p.names[i]} < {p.names[j]}' for i, j in p.covers]
    return '\n'.join(lines) + '\n'


def down_sets(p):
    """Order ideals of `p` as bitmasks, sorted by size and then value."""
    lower = [sum(1 << i for i in p.lower_covers[x]) for x in range(p.size)]
    ideals = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for x in range(p.size):
                if not mask >> x & 1 and lower[x] & ~mask == 0:
                    bigger = mask | 1 << x
                    if bigger not in ideals:
                        ideals.add(bigger)
                        nxt.append(bigger)
        frontier = nxt
    return sorted(ideals, key=lambda m: (bin(m).count('1'), m))


def order_ideals(p, bound=20):
    """Lattice J(P) of down-closed subsets of `p` ordered by inclusion.

    Parameters
    ----------
    p : :class:`Poset`
    bound : int, optional
        Largest accepted size of `p`. Default is 20.

    Raises
    ------
    BoundError
        If `p` has more than `bound` elements.

    Examples
    --------
    .. code:: pycon

        >>> trivext.order_ideals(trivext.named_poset('antichain', 3)).size
        8

    """
    if p.size > bound:
        raise BoundError(f'order_ideals accepts at most {bound} elements, '
                         f'got {p.size}')
    ordered = down_sets(p)
    index = {m: k for k, m in enumerate(ordered)}
    covers = []
    for m in ordered:
        for x in range(p.size):
            if not m >> x & 1 and (m | 1 << x) in index:
                covers.append((index[m], index[m | 1 << x]))
    names = ['{' + ','.join(p.names[x] for x in range(p.size) if m >> x & 1)
             + '}' for m in ordered]
    return Poset(len(ordered), covers, names)


@dataclass(frozen=True)
class DistributivityCheck:
    """Outcome of :func:`is_distributive_lattice`; truthy when it holds."""
    ok: bool
    reasons: tuple = ()

    def __bool__(self):
        return self.ok


def is_distributive_lattice(p, max_reasons=5):
    """Check that `p` is a lattice satisfying ``x ^ (y v z) = (x ^ y) v (x ^ z)``.

    Returns
    -------
    check : :class:`DistributivityCheck`
        Truthy when `p` is a distributive lattice; otherwise the reasons
        list the first failures found.

    """
    if p.size == 0:
        return DistributivityCheck(False, ('empty poset',))
    join, meet = p.join_table, p.meet_table
    reasons = []
    for table, word in ((join, 'join'), (meet, 'meet')):
        missing = np.argwhere(table < 0)
        for i, j in missing[:max_reasons]:
            reasons.append(f'no {word} of {p.names[i]} and {p.names[j]}')
    if reasons:
        return DistributivityCheck(False, tuple(reasons[:max_reasons]))
    n = p.size
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n),
                          indexing='ij')
    lhs = meet[x, join[y, z]]
    rhs = join[meet[x, y], meet[x, z]]
    for i, j, k in np.argwhere(lhs != rhs)[:max_reasons]:
        reasons.append(f'distributivity fails at ({p.names[i]}, '
                       f'{p.names[j]}, {p.names[k]})')
    return DistributivityCheck(not reasons, tuple(reasons))


def join_irreducibles(p):
    """Subposet of elements with exactly one lower cover."""
    keep = [x for x in range(p.size) if len(p.lower_covers[x]) == 1]
    sub = p.leq[np.ix_(keep, keep)]
    return Poset.from_leq(sub, [p.names[x] for x in keep])


def _chain(n):
    return Poset(n, [(i, i + 1) for i in range(n - 1)])


def _antichain(n):
    return Poset(n)


def _boolean(n):
    size = 1 << n
    covers = [(m, m | 1 << i) for m in range(size) for i in range(n)
              if not m >> i & 1]
    names = [''.join(str(i + 1) for i in range(n) if m >> i & 1) or '0'
             for m in range(size)]
    return Poset(size, covers, names)


def _binary_trees(k):
    if k == 0:
        return [None]
    return [(left, right) for i in range(k) for left in _binary_trees(i)
            for right in _binary_trees(k - 1 - i)]


def _right_rotations(t):
    if t is None:
        return []
    left, right = t
    out = []
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    out += [(x, right) for x in _right_rotations(left)]
    out += [(left, x) for x in _right_rotations(right)]
    return out


def _bracketing(t, letters):
    if t is None:
        return next(letters)
    left = _bracketing(t[0], letters)
    right = _bracketing(t[1], letters)
    return f'({left}{right})'


def _tamari(n):
    trees = _binary_trees(n)
    index = {t: k for k, t in enumerate(trees)}
    relations = [(index[t], index[r]) for t in trees
                 for r in _right_rotations(t)]
    names = []
    for t in trees:
        letters = iter('abcdefghijklmnopqrstuvwxyz')
        names.append(_bracketing(t, letters))
    return Poset.from_relations(len(trees), relations, names)


def _fixture(name):
    text = resources.files('trivext.data').joinpath(f'{name}.poset') \
        .read_text(encoding='utf-8')
    return parse_poset(text)


_BOUNDS = {
    'chain': (1, 64),
    'antichain': (1, 64),
    'boolean': (0, 6),
    'tamari': (1, 6),
}

FAMILIES = ('chain', 'antichain', 'boolean', 'tamari', 'fdl3',
            'lattice11a', 'lattice11b')


def named_poset(family, n=None):
    """Poset from a named family.

    Parameters
    ----------
    family : str
        One of ``'chain'``, ``'antichain'``, ``'boolean'`` (subsets of an
        n-set), ``'tamari'`` (bracketings of n+1 letters under right
        rotation, n <= 6), ``'fdl3'`` (order ideals of the Boolean lattice of
        a 3-set, 20 elements), or the shipped size-11 lattices
        ``'lattice11a'`` and ``'lattice11b'``. `n` is ignored for the last
        three.
    n : int, optional

    Examples
    --------
    .. code:: pycon

        >>> trivext.named_poset('tamari', 3).size
        5

    """
    if family == 'fdl3':
        return order_ideals(_boolean(3))
    if family in ('lattice11a', 'lattice11b'):
        return _fixture(family)
    if family not in _BOUNDS:
        raise ValueError(f"Unknown poset family '{family}', expected one of "
                         f"{', '.join(FAMILIES)}")
    lo, hi = _BOUNDS[family]
    if n is None or not lo <= int(n) <= hi:
        raise BoundError(f'{family} needs {lo} <= n <= {hi}, got {n}')
    n = int(n)
    return {'chain': _chain, 'antichain': _antichain, 'boolean': _boolean,
            'tamari': _tamari}[family](n)
