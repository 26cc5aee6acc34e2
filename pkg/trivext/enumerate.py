"""Isomorph-free generation of posets and distributive lattices.

Canonical forms come from colour refinement followed by individualization.
Elements start coloured by the number of elements below and above them, so
every canonical order is a linear extension and the cover matrix in that
order is strictly upper triangular. The form is the least bit string of that
triangle over all leaves of the search tree::

    "<n>:<bits>"   bits[k] = 1 iff element i is covered by element j,
                   (i, j) running over i < j row by row

A rooted form appends ``@<position of the root>``.

Posets are grown one maximal element at a time. A child is kept only when
its new element lies in the automorphism orbit of the last element of its
canonical order, which makes the output one poset per isomorphism class.
"""
import logging
from collections import Counter
from dataclasses import dataclass

from trivext.poset import BoundError, Poset, down_sets, order_ideals, relabel

logger = logging.getLogger(__name__)

MAX_POSET_SIZE = 10
MAX_LATTICE_SIZE = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Encoding of a poset up to isomorphism; ordered by size, then bits.

    Rooted forms also carry the canonical position of the root.
    """
    size: int
    bits: str
    root: int = None

    def __str__(self):
        if self.root is not None:
            return f'{self.size}:{self.bits}@{self.root}'
        return f'{self.size}:{self.bits}'

    @classmethod
    def parse(cls, text):
        size, _, bits = text.partition(':')
        bits, at, root = bits.partition('@')
        try:
            size = int(size)
            root = int(root) if at else None
        except ValueError:
            raise ValueError(f'Malformed canonical form {text!r}') from None
        if len(bits) != size * (size - 1) // 2 or set(bits) - {'0', '1'}:
            raise ValueError(f'Malformed canonical form {text!r}')
        return cls(size, bits, root)


def _refine(colors, lower, upper):
    ncells = len(set(colors))
    while True:
        sig = [(colors[x],
                tuple(sorted(colors[y] for y in lower[x])),
                tuple(sorted(colors[y] for y in upper[x])))
               for x in range(len(colors))]
        ranks = {s: k for k, s in enumerate(sorted(set(sig)))}
        colors = [ranks[s] for s in sig]
        if len(ranks) == ncells:
            return colors
        ncells = len(ranks)


def _individualize(colors, x):
    c = colors[x]
    return [2 * col + (col == c and y != x) for y, col in enumerate(colors)]


class _Search:

    def __init__(self, p):
        self.p = p
        self.lower = p.lower_covers
        self.upper = p.upper_covers
        self.covers = set(p.covers)
        self.twin = [(frozenset(p.lower_covers[x]), frozenset(p.upper_covers[x]))
                     for x in range(p.size)]
        self.best = None
        self.leaves = 0

    def _encode(self, colors):
        order = sorted(range(len(colors)), key=colors.__getitem__)
        n = len(order)
        return ''.join('1' if (order[i], order[j]) in self.covers else '0'
                       for i in range(n) for j in range(i + 1, n))

    def run(self, colors):
        colors = _refine(colors, self.lower, self.upper)
        cells = Counter(colors)
        target = min((c for c, k in cells.items() if k > 1), default=None)
        if target is None:
            self.leaves += 1
            bits = self._encode(colors)
            if self.best is None or bits < self.best[0]:
                self.best = (bits, tuple(colors))
            return
        tried = set()
        for x in range(len(colors)):
            # twins are swapped by an automorphism
            if colors[x] != target or self.twin[x] in tried:
                continue
            tried.add(self.twin[x])
            self.run(_individualize(colors, x))


def _search(p, root=None):
    below = p.leq.sum(axis=0)
    above = p.leq.sum(axis=1)
    colors = [(int(below[x]), int(above[x]), x == root) for x in range(p.size)]
    ranks = {s: k for k, s in enumerate(sorted(set(colors)))}
    search = _Search(p)
    search.run([ranks[s] for s in colors])
    logger.debug('canonical search on %d elements visited %d leaves',
                 p.size, search.leaves)
    return search.best


def canonical_labeling(p):
    """Permutation sending each element to its position in canonical order."""
    if p.size == 0:
        return ()
    return _search(p)[1]


def canonical_form(p, root=None):
    """:class:`CanonicalForm` of `p`.

    Parameters
    ----------
    p : :class:`~trivext.Poset`
    root : int, optional
        Element distinguished before the search. Two rooted forms agree iff
        an isomorphism maps one root to the other.

    Examples
    --------
    .. code:: pycon

        >>> str(trivext.canonical_form(trivext.named_poset('chain', 3)))
        '3:101'

    """
    if p.size == 0:
        return CanonicalForm(0, '')
    bits, colors = _search(p, root)
    return CanonicalForm(p.size, bits, None if root is None else colors[root])


def canonical_poset(p):
    """`p` relabelled into its canonical order."""
    return relabel(p, canonical_labeling(p))


def _children(p):
    n = p.size
    for mask in down_sets(p):
        below = [x for x in range(n) if mask >> x & 1]
        # the new element covers the maximal elements of its down-set
        tops = [x for x in below
                if not any(mask >> y & 1 for y in p.upper_covers[x])]
        yield Poset(n + 1, p.covers + tuple((x, n) for x in tops)), n


def _is_canonical_extension(child, new):
    labeling = canonical_labeling(child)
    last = labeling.index(child.size - 1)
    if last == new:
        return True
    return canonical_form(child, root=new) == canonical_form(child, root=last)


def _walk(p, max_size, prune):
    yield p
    if p.size == max_size:
        return
    seen = set()
    for child, new in _children(p):
        if prune is not None and not prune(child):
            continue
        if not _is_canonical_extension(child, new):
            continue
        form = canonical_form(child)
        if form in seen:
            continue
        seen.add(form)
        yield from _walk(child, max_size, prune)


def enumerate_posets(n, prune=None):
    """Yield one poset from every isomorphism class of `n`-element posets.

    Parameters
    ----------
    n : int
        Number of elements, ``1 <= n <= 10``.
    prune : callable, optional
        Predicate on posets closed under taking subposets obtained by
        deleting a maximal element. Branches failing it are skipped.

    Raises
    ------
    BoundError
        If `n` is out of range.

    Examples
    --------
    .. code:: pycon

        >>> sum(1 for _ in trivext.enumerate_posets(4))
        16

    """
    if not 1 <= n <= MAX_POSET_SIZE:
        raise BoundError(f'enumerate_posets needs 1 <= n <= '
                         f'{MAX_POSET_SIZE}, got {n}')
    for p in _walk(Poset(0), n, prune):
        if p.size == n:
            yield p


def census_distributive_lattices(m):
    """All distributive lattices with `m` elements up to isomorphism.

    Every such lattice is the order-ideal lattice of its poset of
    join-irreducibles, so the posets whose down-set count is exactly `m` are
    generated (adding a maximal element never lowers that count, which bounds
    the search) and their order-ideal lattices returned sorted by
    :class:`CanonicalForm`.

    Raises
    ------
    BoundError
        If `m` is not in ``1 .. 12``.

    Examples
    --------
    .. code:: pycon

        >>> len(trivext.census_distributive_lattices(5))
        3

    """
    if not 1 <= m <= MAX_LATTICE_SIZE:
        raise BoundError(f'census_distributive_lattices needs 1 <= m <= '
                         f'{MAX_LATTICE_SIZE}, got {m}')

    def few_ideals(q):
        return len(down_sets(q)) <= m

    lattices = [order_ideals(p) for p in _walk(Poset(0), m - 1, few_ideals)
                if len(down_sets(p)) == m]
    lattices.sort(key=canonical_form)
    logger.info('%d distributive lattices with %d elements', len(lattices), m)
    return lattices
