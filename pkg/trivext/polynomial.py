"""Integer polynomials and the cyclotomic periodicity test."""
import logging
import math
from dataclasses import dataclass

from sympy import Poly, Symbol, cyclotomic_poly, totient
from sympy.polys.domains import ZZ

from trivext.linalg import asmatrix, eye, integer_rep

logger = logging.getLogger(__name__)

x = Symbol('x')


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients, lowest degree first.

    Trailing zero coefficients are stripped on construction so the leading
    coefficient is nonzero unless the polynomial is zero (empty tuple).

    Examples
    --------
    .. code:: pycon

        >>> p = trivext.IntPolynomial((1, 1, 1))
        >>> str(p)
        'x^2 + x + 1'
        >>> p.degree
        2

    """
    coefficients: tuple

    def __post_init__(self):
        c = [int(a) for a in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, 'coefficients', tuple(c))

    @classmethod
    def from_poly(cls, p):
        """Build from a sympy ``Poly`` in one variable."""
        return cls(tuple(int(a) for a in reversed(p.all_coeffs())))

    def as_poly(self):
        """The same polynomial as a sympy ``Poly`` over ZZ."""
        if not self.coefficients:
            return Poly(0, x, domain=ZZ)
        return Poly(list(reversed(self.coefficients)), x, domain=ZZ)

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def is_monic(self):
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, value):
        result = 0
        for a in reversed(self.coefficients):
            result = result * value + a
        return result

    def __str__(self):
        if not self.coefficients:
            return '0'
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            a = self.coefficients[k]
            if a == 0:
                continue
            sign = '-' if a < 0 else '+'
            a = abs(a)
            if k == 0:
                body = str(a)
            else:
                power = 'x' if k == 1 else f'x^{k}'
                body = power if a == 1 else f'{a}*{power}'
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ('-' if first_sign == '-' else '') + first
        for sign, body in terms[1:]:
            out += f' {sign} {body}'
        return out


def char_poly(m):
    """Characteristic polynomial ``det(xI - m)`` of an integer matrix.

    Computed division-free over the integers with sympy's Berkowitz
    recurrence, so no rational arithmetic is involved.

    Parameters
    ----------
    m : :class:`~trivext.matrix`
        Square matrix over Q with integer entries.

    Returns
    -------
    p : :class:`IntPolynomial`
        Monic polynomial of degree ``m.nrows``.

    Examples
    --------
    .. code:: pycon

        >>> str(trivext.char_poly(trivext.matrix([[0, 1], [-1, -1]])))
        'x^2 + x + 1'

    """
    m = asmatrix(m)
    if m.nrows != m.ncols:
        raise ValueError(f'Characteristic polynomial of non-square matrix '
                         f'{m.shape}')
    if m.nrows == 0:
        return IntPolynomial((1,))
    coeffs = integer_rep(m).charpoly()
    return IntPolynomial(tuple(int(a) for a in reversed(coeffs)))


def squarefree_part(p):
    """Return ``p / gcd(p, p')`` normalized to a positive leading coefficient."""
    if p.is_zero():
        raise ValueError('Square-free part of the zero polynomial')
    P = p.as_poly()
    if P.degree() <= 0:
        return IntPolynomial((1,))
    q = P.quo(P.gcd(P.diff(x)))
    if q.LC() < 0:
        q = -q
    return IntPolynomial.from_poly(q)


def cyclotomic_periodicity(p, n):
    """Order of an integer matrix from its minimal polynomial.

    Parameters
    ----------
    p : :class:`IntPolynomial`
        Minimal polynomial of an n x n integer matrix.
    n : int
        Matrix size; ``deg p <= n``.

    Returns
    -------
    N : int or None
        The least N with ``M^N = I`` when `p` is a square-free product of
        cyclotomic polynomials, namely the lcm of their indices. None when
        `p` is not of this form, in which case no power of M is the identity.

    Notes
    -----
    Only cyclotomic polynomials with Euler totient at most ``deg p`` can
    divide `p`, so trial division over those indices is complete.

    Examples
    --------
    .. code:: pycon

        >>> trivext.cyclotomic_periodicity(trivext.IntPolynomial((1, 1, 1)), 2)
        3
        >>> trivext.cyclotomic_periodicity(trivext.IntPolynomial((1, -2, 1)), 2)

    """
    if p.is_zero():
        raise ValueError('Periodicity of the zero polynomial is undefined')
    if p.degree > n:
        raise ValueError(f'Polynomial of degree {p.degree} cannot be the '
                         f'minimal polynomial of a {n} x {n} matrix')
    if p.degree == 0:
        # only the empty matrix has a constant minimal polynomial
        return 1
    remaining = p.as_poly()
    if abs(remaining.LC()) != 1:
        return None
    deg = p.degree
    orders = []
    d = 0
    # totient(d) >= sqrt(d/2), so indices beyond 2*deg^2 never qualify
    while remaining.degree() > 0 and d < 2 * deg * deg + 2:
        d += 1
        if totient(d) > remaining.degree():
            continue
        phi = cyclotomic_poly(d, x, polys=True)
        q, r = remaining.div(phi)
        if not r.is_zero:
            continue
        if q.degree() >= phi.degree() and q.rem(phi).is_zero:
            logger.debug('cyclotomic factor of index %d is repeated', d)
            return None
        remaining = q
        orders.append(d)
    if remaining.degree() != 0 or abs(remaining.LC()) != 1:
        return None
    if not orders:
        return 1
    return math.lcm(*orders)


def polyval_matrix(p, m):
    """Evaluate the integer polynomial `p` at the square matrix `m` (Horner)."""
    m = asmatrix(m)
    n = m.nrows
    result = eye(n, m.field).scale(0)
    for a in reversed(p.coefficients):
        result = result @ m + eye(n, m.field).scale(a)
    return result
