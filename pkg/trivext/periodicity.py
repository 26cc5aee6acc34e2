"""Syzygy orbits of simple modules and of the regular bimodule.

An algebra is twisted periodic when some syzygy of its semisimple top is
again semisimple. Over a split-basic algebra the simple modules are
one-dimensional, so ``Omega^t(S_v)`` is simple exactly when it has dimension
one; the orbit search below relies on this and needs no isomorphism test.
Periodicity of the algebra itself, ``Omega^n_{A^e}(A) = A``, is decided on
the regular bimodule with :func:`~trivext.modules_isomorphic`.
"""
import logging
import math
from dataclasses import asdict, dataclass

from trivext.algebra import enveloping
from trivext.linalg import matrix
from trivext.module import (
    ISOMORPHIC,
    UNKNOWN,
    RightModule,
    check_module,
    modules_isomorphic,
    simple_module,
    syzygy,
)
from trivext.options import OrbitOptions

logger = logging.getLogger(__name__)


class GuardError(ValueError):
    """Raised when an input exceeds a configured size guard."""


class PeriodicityVerdict:
    """Base class of the orbit search outcomes."""
    kind = None

    def to_dict(self):
        out = {'kind': self.kind}
        out.update({k: _jsonable(v) for k, v in asdict(self).items()})
        return out

    @property
    def is_periodic(self):
        return self.kind == 'periodic'


def _jsonable(v):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    return v


@dataclass(frozen=True)
class Periodic(PeriodicityVerdict):
    """``Omega^n(S_v) = S_permutation[v]`` for every vertex.

    `per_simple_periods[v]` is the least ``t`` with ``Omega^t(S_v) = S_v``; it
    is None for bimodule orbits, where simples are not observed and the
    permutation is the identity. `unresolved_steps` lists bimodule steps at
    which the isomorphism search returned unknown, so minimality of `n` holds
    only when it is empty.
    """
    n: int
    permutation: tuple
    per_simple_periods: tuple = None
    dim_traces: tuple = ()
    unresolved_steps: tuple = ()
    kind = 'periodic'


@dataclass(frozen=True)
class Diverging(PeriodicityVerdict):
    """Syzygy dimensions kept increasing past half the dimension budget."""
    last_step: int
    dim_trace: tuple
    vertex: int = None
    kind = 'diverging'


@dataclass(frozen=True)
class Inconclusive(PeriodicityVerdict):
    """A budget ran out before the orbit closed."""
    bound_reached: str
    dim_trace: tuple
    vertex: int = None
    kind = 'inconclusive'


@dataclass(frozen=True)
class Vanishing(PeriodicityVerdict):
    """``Omega^step(S_vertex) = 0``: finite projective dimension."""
    vertex: int
    step: int
    dim_trace: tuple
    kind = 'vanishing'


def _is_diverging(trace, options):
    w = options.window
    if len(trace) < w or trace[-1] <= options.dim_cap / 2:
        return False
    tail = trace[-w:]
    return all(x < y for x, y in zip(tail, tail[1:]))


def _advance(m, options):
    m = syzygy(m)
    if options.check_actions:
        check_module(m)
    return m


def simple_orbit(a, v, options=None):
    """Iterate syzygies of ``S_v`` until the first simple or a budget.

    Returns
    -------
    outcome : tuple
        ``(status, step, vertex, trace)`` where `status` is one of
        ``'simple'``, ``'vanishing'``, ``'diverging'``, ``'dim_cap'`` or
        ``'max_steps'`` and `vertex` is the support of the simple reached.

    """
    options = options or OrbitOptions()
    m = simple_module(a, v)
    trace = [1]
    for step in range(1, options.max_steps + 1):
        m = _advance(m, options)
        d = m.dim
        trace.append(d)
        logger.debug('vertex %d step %d dim %d', v, step, d)
        if d == 0:
            return 'vanishing', step, None, tuple(trace)
        if d == 1:
            return 'simple', step, m.vertex_dims.index(1), tuple(trace)
        if _is_diverging(trace, options):
            return 'diverging', step, None, tuple(trace)
        if d > options.dim_cap:
            return 'dim_cap', step, None, tuple(trace)
    return 'max_steps', options.max_steps, None, tuple(trace)


def combine_orbits(outcomes):
    """Turn per-simple orbit outcomes into a :class:`PeriodicityVerdict`.

    `outcomes` lists :func:`simple_orbit` results in vertex order.
    """
    for status in ('vanishing', 'diverging', 'dim_cap', 'max_steps'):
        for v, (s, step, _, trace) in enumerate(outcomes):
            if s != status:
                continue
            if s == 'vanishing':
                return Vanishing(v, step, trace)
            if s == 'diverging':
                return Diverging(step, trace, v)
            return Inconclusive(s, trace, v)

    n_vert = len(outcomes)
    first = [step for _, step, _, _ in outcomes]
    tau = [w for _, _, w, _ in outcomes]
    traces = tuple(trace for _, _, _, trace in outcomes)
    if sorted(tau) != list(range(n_vert)):
        return Inconclusive('simples do not return as a permutation',
                            traces[0], 0)

    # hits of S_v: partial sums of first-return steps along its tau-cycle
    sums = []
    for v in range(n_vert):
        acc, w, partial = 0, v, []
        while True:
            acc += first[w]
            w = tau[w]
            partial.append((acc, w))
            if w == v:
                break
        sums.append(partial)
    periods = tuple(partial[-1][0] for partial in sums)
    residues = [{s % periods[v]: w for s, w in partial}
                for v, partial in enumerate(sums)]
    bound = math.lcm(*periods)
    for n in range(1, bound + 1):
        if all(n % periods[v] in residues[v] for v in range(n_vert)):
            break
    permutation = tuple(residues[v][n % periods[v]] for v in range(n_vert))
    return Periodic(n, permutation, periods, traces)


def syzygy_orbit(a, options=None):
    """Twisted periodicity verdict from the syzygy orbits of all simples.

    Parameters
    ----------
    a : :class:`~trivext.BasedAlgebra`
        Intended to be self-injective; otherwise some syzygy may vanish and
        the verdict is :class:`Vanishing`.
    options : :class:`~trivext.OrbitOptions`, optional

    Returns
    -------
    verdict : :class:`PeriodicityVerdict`
        :class:`Periodic` with the least common ``n`` such that every
        ``Omega^n(S_v)`` is simple, the induced vertex permutation and the
        minimal period of every simple; otherwise :class:`Vanishing`,
        :class:`Diverging` or :class:`Inconclusive`.

    Examples
    --------
    .. code:: pycon

        >>> t = trivext.trivial_extension(trivext.semisimple_algebra(1))
        >>> trivext.syzygy_orbit(t)
        Periodic(n=1, permutation=(0,), per_simple_periods=(1,), ...)

    """
    options = options or OrbitOptions()
    outcomes = [simple_orbit(a, v, options) for v in range(a.vertex_count)]
    verdict = combine_orbits(outcomes)
    logger.info('%s: %s', a.name, verdict.kind)
    return verdict


def regular_bimodule(a, ae=None):
    """`a` as a right module over its enveloping algebra.

    The action is ``m . (x (x) y) = y m x``. The basis element ``b`` of
    ``e_s A e_t`` lies at vertex ``t * n + s`` of ``A^e``.
    """
    ae = ae if ae is not None else enveloping(a)
    n = a.vertex_count
    D = a.dim
    f = a.field
    component = [[] for _ in range(n * n)]
    for b in a.basis:
        component[b.target * n + b.source].append(b.index)
    position = {i: k for comp in component for k, i in enumerate(comp)}
    blocks = {}
    for X in ae.radical:
        el = ae.basis[X]
        x, y = divmod(X, D)
        rows = []
        for i in component[el.source]:
            ym = a.product(y, i)
            ymx = a.multiply(ym, {x: f.one}) if ym else {}
            rows.append({position[k]: c for k, c in ymx.items()})
        if any(rows):
            blocks[X] = matrix.from_rows(rows, len(component[el.target]), f)
    return RightModule(ae, [len(c) for c in component], blocks)


def bimodule_syzygy_orbit(a, options=None):
    """Least ``n`` with ``Omega^n_{A^e}(A) = A`` within the search budget.

    Parameters
    ----------
    a : :class:`~trivext.BasedAlgebra`
        Algebra of dimension at most ``options.bimodule_max_dim``.
    options : :class:`~trivext.OrbitOptions`, optional

    Raises
    ------
    GuardError
        If `a` is larger than the size guard.

    Examples
    --------
    .. code:: pycon

        >>> t = trivext.trivial_extension(trivext.semisimple_algebra(1))
        >>> trivext.bimodule_syzygy_orbit(t).n
        2

    """
    options = options or OrbitOptions()
    if a.dim > options.bimodule_max_dim:
        raise GuardError(f'Bimodule orbit of a {a.dim}-dimensional algebra '
                         f'exceeds the guard of {options.bimodule_max_dim}')
    ae = enveloping(a)
    regular = regular_bimodule(a, ae)
    m = regular
    trace = [m.dim]
    unresolved = []
    for step in range(1, options.max_steps + 1):
        m = _advance(m, options)
        trace.append(m.dim)
        logger.debug('bimodule step %d dim %d', step, m.dim)
        if m.is_zero():
            return Vanishing(None, step, tuple(trace))
        if m.vertex_dims == regular.vertex_dims:
            result = modules_isomorphic(m, regular, options)
            if result.status == ISOMORPHIC:
                if unresolved:
                    logger.warning('period %d found but steps %s were '
                                   'undecided', step, unresolved)
                return Periodic(step, tuple(range(a.vertex_count)), None,
                                (tuple(trace),), tuple(unresolved))
            if result.status == UNKNOWN:
                unresolved.append(step)
        if _is_diverging(trace, options):
            return Diverging(step, tuple(trace))
        if m.dim > options.dim_cap:
            return Inconclusive('dim_cap', tuple(trace))
    return Inconclusive('max_steps', tuple(trace))
