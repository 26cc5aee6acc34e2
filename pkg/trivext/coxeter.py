"""Coxeter matrices, Coxeter polynomials and their periodicity.

A periodic Coxeter matrix is a necessary condition for an algebra of finite
global dimension to be fractionally Calabi-Yau: if the algebra has Calabi-Yau
dimension ``(m, ell)`` then ``c^(2 ell) = 1``. Periodicity is decided exactly
from the cyclotomic structure of the minimal polynomial.
"""
import logging
from dataclasses import dataclass

from trivext.algebra import cartan_matrix
from trivext.linalg import determinant, inverse
from trivext.polynomial import (
    char_poly,
    cyclotomic_periodicity,
    polyval_matrix,
    squarefree_part,
)

logger = logging.getLogger(__name__)


class SingularCartanError(ValueError):
    """Raised when the Cartan matrix is not invertible over Q."""


@dataclass(frozen=True)
class CoxeterData:
    """Cartan matrix, Coxeter matrix, Coxeter polynomial and period."""
    cartan: object
    coxeter: object
    char_polynomial: object
    period: int = None


def coxeter_matrix(a):
    """Coxeter matrix ``-U^-1 U^T`` of the Cartan matrix ``U`` of `a`.

    Raises
    ------
    SingularCartanError
        If the Cartan matrix is singular.

    Examples
    --------
    .. code:: pycon

        >>> q = trivext.Quiver(2, ((0, 1, 'a'),))
        >>> trivext.coxeter_matrix(trivext.path_algebra(q)).tolist()
        [[0, 1], [-1, -1]]

    """
    return _coxeter(cartan_matrix(a), a.name)


def _coxeter(U, name=''):
    if not determinant(U):
        raise SingularCartanError(f'Cartan matrix of {name or "algebra"} is '
                                  f'singular')
    return -(inverse(U) @ U.T)


def coxeter_polynomial(a):
    """Characteristic polynomial of the Coxeter matrix (a derived invariant)."""
    return char_poly(coxeter_matrix(a))


def _period(c, p):
    q = squarefree_part(p)
    # c is diagonalizable iff q annihilates it, and only then can it have
    # finite order
    if not polyval_matrix(q, c).is_zero():
        return None
    return cyclotomic_periodicity(q, c.nrows)


def coxeter_periodicity(a):
    """Least ``N`` with ``c^N = I`` for the Coxeter matrix, or None.

    Examples
    --------
    .. code:: pycon

        >>> q = trivext.Quiver(2, ((0, 1, 'a'),))
        >>> trivext.coxeter_periodicity(trivext.path_algebra(q))
        3

    """
    c = coxeter_matrix(a)
    return _period(c, char_poly(c))


def coxeter_data(a):
    """All Coxeter invariants of `a` at once."""
    U = cartan_matrix(a)
    c = _coxeter(U, a.name)
    p = char_poly(c)
    period = _period(c, p)
    logger.debug('%s: Coxeter polynomial %s, period %s', a.name, p, period)
    return CoxeterData(U, c, p, period)
