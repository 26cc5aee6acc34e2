"""Census of distributive lattices whose incidence algebras are
fractionally Calabi-Yau candidates.

The pipeline is: every distributive lattice with ``m`` elements, then the
Coxeter screen on its incidence algebra, then the syzygy orbits of the
simples of the trivial extension of the survivors. Orbits run as
independent ``(lattice, simple)`` tasks in a process pool; results are
gathered in task order so the report does not depend on the worker count.
"""
import logging
import multiprocessing as mp
import os
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import starmap

from trivext.algebra import incidence_algebra, trivial_extension
from trivext.coxeter import coxeter_data
from trivext.enumerate import canonical_form, census_distributive_lattices
from trivext.field import Field
from trivext.options import OrbitOptions
from trivext.periodicity import combine_orbits, simple_orbit
from trivext.poset import Poset

logger = logging.getLogger(__name__)

CENSUS_DIM_CAP = 2000


@dataclass(frozen=True)
class LatticeRecord:
    """Census outcome for one lattice.

    `verdict` is None when the Coxeter screen already rules the lattice out.
    """
    canonical_form: str
    size: int
    covers: tuple
    coxeter_polynomial: str
    coxeter_period: int = None
    verdict: object = None

    @property
    def coxeter_periodic(self):
        return self.coxeter_period is not None

    @property
    def simple_periodic(self):
        return self.verdict is not None and self.verdict.is_periodic

    def to_dict(self):
        verdict = self.verdict.to_dict() if self.verdict is not None else None
        return {
            'canonical_form': self.canonical_form,
            'covers': [list(c) for c in self.covers],
            'coxeter_polynomial': self.coxeter_polynomial,
            'coxeter_period': self.coxeter_period,
            'verdict': verdict,
            'per_simple_periods': (verdict or {}).get('per_simple_periods'),
            'dim_traces': (verdict or {}).get('dim_traces'),
        }


@dataclass(frozen=True)
class CensusReport:
    """All lattices of one size with the counts of each pipeline stage."""
    m: int
    field: str
    records: tuple = dc_field(default_factory=tuple)

    @property
    def lattice_count(self):
        return len(self.records)

    @property
    def coxeter_periodic_count(self):
        return sum(r.coxeter_periodic for r in self.records)

    @property
    def simple_periodic_count(self):
        return sum(r.simple_periodic for r in self.records)

    @property
    def counts(self):
        return (self.lattice_count, self.coxeter_periodic_count,
                self.simple_periodic_count)

    def to_dict(self):
        return {
            'm': self.m,
            'field': self.field,
            'lattice_count': self.lattice_count,
            'coxeter_periodic_count': self.coxeter_periodic_count,
            'simple_periodic_count': self.simple_periodic_count,
            'records': [r.to_dict() for r in self.records],
        }


@lru_cache(maxsize=8)
def _trivial_extension(size, covers, characteristic):
    return trivial_extension(incidence_algebra(Poset(size, covers),
                                               Field(characteristic)))


def _orbit_task(size, covers, characteristic, vertex, options):
    # rebuilt from primitive data since domain elements need not pickle
    t = _trivial_extension(size, covers, characteristic)
    return simple_orbit(t, vertex, options)


def _run_tasks(tasks, workers):
    if workers == 1 or len(tasks) <= 1:
        return list(starmap(_orbit_task, tasks))
    ctx = mp.get_context('spawn')
    with ctx.Pool(processes=workers) as pool:
        return pool.starmap(_orbit_task, tasks, chunksize=1)


def run_census(m, field=None, options=None, workers=None):
    """Run the full census for lattices with `m` elements.

    Parameters
    ----------
    m : int
        Lattice size, ``1 <= m <= 12``.
    field : :class:`~trivext.Field`, optional
        Field of the syzygy computations. The Coxeter screen is always done
        over the rationals. Default is the rationals.
    options : :class:`~trivext.OrbitOptions`, optional
        Budgets. Default reads the environment with ``dim_cap=2000``.
    workers : int, optional
        Pool size. Default is the number of CPUs.

    Returns
    -------
    report : :class:`CensusReport`

    """
    field = field if field is not None else Field(0)
    options = options or OrbitOptions.from_env(dim_cap=CENSUS_DIM_CAP)
    workers = workers or os.cpu_count() or 1
    lattices = census_distributive_lattices(m)

    screened = []
    for lattice in lattices:
        data = coxeter_data(incidence_algebra(lattice))
        screened.append((lattice, data))
    survivors = [lattice for lattice, data in screened
                 if data.period is not None]
    logger.info('m=%d: %d lattices, %d with periodic Coxeter matrix', m,
                len(lattices), len(survivors))

    tasks = [(lat.size, lat.covers, field.characteristic, v, options)
             for lat in survivors for v in range(lat.size)]
    logger.debug('dispatching %d orbit tasks to %d workers', len(tasks),
                 workers)
    outcomes = iter(_run_tasks(tasks, workers))

    records = []
    for lattice, data in screened:
        verdict = None
        if data.period is not None:
            verdict = combine_orbits([next(outcomes)
                                      for _ in range(lattice.size)])
            if verdict.kind == 'inconclusive':
                logger.warning('lattice %s: inconclusive (%s)',
                               canonical_form(lattice), verdict.bound_reached)
        records.append(LatticeRecord(str(canonical_form(lattice)),
                                     lattice.size, lattice.covers,
                                     str(data.char_polynomial), data.period,
                                     verdict))
    report = CensusReport(m, field.tag, tuple(records))
    logger.info('m=%d: counts %s', m, report.counts)
    return report
