"""Closed formulas for Dynkin quivers and trivial extension periods.

These are algebra-free: they only use the Coxeter number of the Dynkin type
and fractional Calabi-Yau dimensions, and serve as an oracle for the
resolution engine.
"""
import math
from dataclasses import dataclass

from trivext.algebra import path_algebra
from trivext.core import CyDim, Quiver
from trivext.coxeter import coxeter_polynomial
from trivext.field import asfield

FAMILIES = ('A', 'D', 'E')


@dataclass(frozen=True)
class DynkinType:
    """Simply-laced Dynkin type ``A_n`` (n >= 1), ``D_n`` (n >= 4) or ``E_n``
    (n in 6, 7, 8).

    Examples
    --------
    .. code:: pycon

        >>> trivext.DynkinType.parse('D4')
        DynkinType(family='D', rank=4)

    """
    family: str
    rank: int

    def __post_init__(self):
        family = str(self.family).upper()
        rank = int(self.rank)
        object.__setattr__(self, 'family', family)
        object.__setattr__(self, 'rank', rank)
        if family not in FAMILIES:
            raise ValueError(f"Unknown Dynkin family '{self.family}'")
        if (family == 'A' and rank < 1) or (family == 'D' and rank < 4) \
                or (family == 'E' and rank not in (6, 7, 8)):
            raise ValueError(f'No Dynkin type {family}{rank}')

    @classmethod
    def parse(cls, text):
        text = text.strip()
        try:
            return cls(text[0], int(text[1:]))
        except (IndexError, ValueError):
            raise ValueError(f"Cannot parse Dynkin type '{text}'") from None

    def __str__(self):
        return f'{self.family}{self.rank}'

    @property
    def special(self):
        """True for A1, D_n with n even, E7 and E8."""
        return (self.family == 'A' and self.rank == 1) \
            or (self.family == 'D' and self.rank % 2 == 0) \
            or (self.family == 'E' and self.rank in (7, 8))


def all_dynkin_types(max_rank=8):
    """Every Dynkin type of rank at most `max_rank`: A, then D, then E."""
    out = [DynkinType('A', n) for n in range(1, max_rank + 1)]
    out += [DynkinType('D', n) for n in range(4, max_rank + 1)]
    out += [DynkinType('E', n) for n in (6, 7, 8) if n <= max_rank]
    return out


def coxeter_number(t):
    """Coxeter number: ``n+1``, ``2(n-1)``, 12, 18 or 30."""
    if t.family == 'A':
        return t.rank + 1
    if t.family == 'D':
        return 2 * (t.rank - 1)
    return {6: 12, 7: 18, 8: 30}[t.rank]


def cydim_dynkin(t):
    """Calabi-Yau dimension of the path algebra of a Dynkin quiver.

    ``(h/2 - 1, h/2)`` for A1, D_even, E7 and E8, and ``(h - 2, h)``
    otherwise, with ``h`` the Coxeter number.
    """
    h = coxeter_number(t)
    if t.special:
        return CyDim(h // 2 - 1, h // 2)
    return CyDim(h - 2, h)


def tensor_cydim(dims):
    """Calabi-Yau dimension of a tensor product of fractionally CY algebras.

    ``ell = lcm(ell_i)`` and ``m = ell * sum(m_i / ell_i)``. Exact only when
    the tensor product is ring-indecomposable.

    Examples
    --------
    .. code:: pycon

        >>> str(trivext.tensor_cydim([trivext.CyDim(1, 3)] * 2))
        '(2, 3)'

    """
    dims = [CyDim(*c) for c in dims]
    if not dims:
        raise ValueError('tensor_cydim needs at least one factor')
    ell = math.lcm(*(c.ell for c in dims))
    m = sum(c.m * (ell // c.ell) for c in dims)
    return CyDim(m, ell)


def minimal_period_trivext(c, field=None):
    """Minimal period of ``T(A)`` for `A` with minimal CY dimension `c`.

    ``ell + m`` when it is even or the field has characteristic 2, twice
    that otherwise.
    """
    m, ell = CyDim(*c)
    s = ell + m
    if s % 2 == 0 or asfield(field).characteristic == 2:
        return s
    return 2 * s


def dct_parameters(d, c):
    """``(g, r)`` with ``g = gcd(ell + m, d + 1)`` and
    ``r = ((d + 1) ell - (ell + m)) / g``."""
    m, ell = CyDim(*c)
    d = int(d)
    if d < 1:
        raise ValueError(f'd must be positive, got {d}')
    g = math.gcd(ell + m, d + 1)
    return g, ((d + 1) * ell - (ell + m)) // g


def expected_period_dynkin(t, field=None):
    """Period of ``T(kQ)`` for a Dynkin quiver ``Q``: ``h - 1`` in
    characteristic 2 for A1, D_even, E7 and E8, else ``2h - 2``."""
    h = coxeter_number(t)
    if t.special and asfield(field).characteristic == 2:
        return h - 1
    return 2 * h - 2


def expected_period_tensor(t, power, field=None):
    """Period of ``T((kQ)^(x power))`` for a Dynkin quiver ``Q`` of type `t`.

    Examples
    --------
    .. code:: pycon

        >>> a2 = trivext.DynkinType('A', 2)
        >>> trivext.expected_period_tensor(a2, 2, 'q')
        10
        >>> trivext.expected_period_tensor(a2, 2, 2)
        5

    """
    power = int(power)
    if power < 1:
        raise ValueError(f'power must be positive, got {power}')
    h = coxeter_number(t)
    s = (h - 2) * power + h
    char2 = asfield(field).characteristic == 2
    if t.special and char2:
        return s // 2
    if not char2 and t.family == 'A' and t.rank % 2 == 0 and power % 2 == 0:
        return 2 * s
    return s


def tamari_cydim(n):
    """Calabi-Yau dimension ``(n(n-1), 2n+2)`` of the n-th Tamari lattice."""
    n = int(n)
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    return CyDim(n * (n - 1), 2 * n + 2)


def preprojective_period(d, c):
    """Period ``(d+2) r`` of the (d+1)-preprojective algebra, where
    ``r = d (d ell - m) / gcd(m, d)`` for an algebra of global dimension at
    most `d` with CY dimension `c`."""
    m, ell = CyDim(*c)
    d = int(d)
    if d < 1:
        raise ValueError(f'd must be positive, got {d}')
    r = d * (d * ell - m) // math.gcd(m, d)
    if r <= 0:
        raise ValueError(f'No positive period for d={d} and CY dimension '
                         f'{CyDim(m, ell)}')
    return (d + 2) * r


def dynkin_quiver(t, orientation='linear'):
    """Quiver of Dynkin type `t`.

    Parameters
    ----------
    t : :class:`DynkinType`
    orientation : {'linear', 'alternating'}
        ``'linear'`` points every arrow away from vertex 0; ``'alternating'``
        reverses every other arrow of that orientation.

    Notes
    -----
    ``A_n`` is the chain ``0 -> 1 -> ... -> n-1``. ``D_n`` is the chain on
    ``0 .. n-3`` with ``n-3`` pointing to both ``n-2`` and ``n-1``. ``E_n``
    is the chain on ``0 .. n-2`` with vertex ``n-1`` attached to vertex 2.

    """
    n = t.rank
    if t.family == 'A':
        edges = [(i, i + 1) for i in range(n - 1)]
    elif t.family == 'D':
        edges = [(i, i + 1) for i in range(n - 3)]
        edges += [(n - 3, n - 2), (n - 3, n - 1)]
    else:
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
    if orientation == 'alternating':
        edges = [(b, a) if k % 2 else (a, b) for k, (a, b) in enumerate(edges)]
    elif orientation != 'linear':
        raise ValueError(f"Unknown orientation '{orientation}'")
    return Quiver(n, tuple((a, b, f'a{k}') for k, (a, b) in enumerate(edges)))


def dynkin_coxeter_polynomial(t):
    """Coxeter polynomial of the path algebra of type `t` over Q."""
    return coxeter_polynomial(path_algebra(dynkin_quiver(t)))


def matching_dynkin_types(p):
    """Dynkin types whose Coxeter polynomial equals `p`."""
    if p.degree < 1:
        return []
    return [t for t in all_dynkin_types(p.degree)
            if t.rank == p.degree and dynkin_coxeter_polynomial(t) == p]
