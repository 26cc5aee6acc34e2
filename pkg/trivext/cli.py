"""Command line interface.

::

    trivext resolve <input> [--te] [--bimodule] [--fields q,2] [--json FILE]
    trivext census <m> [--extended] [--workers N] [--fields q]
    trivext coxeter <input>
    trivext verify-dynkin [--max-rank N] [--fields q,2]
    trivext export-qpa <input> [--output FILE]

An input is a poset or quiver file, a named poset such as ``boolean:2``,
``tamari:3``, ``fdl3`` or ``lattice11a``, or a Dynkin quiver such as
``dynkin:D4`` (optionally ``dynkin:D4:alternating``).

Exit codes: 0 periodic (or success), 3 not periodic (diverging or vanishing
syzygies, or a failed verification), 4 inconclusive, 1 usage error, 2 input
error.
"""
import argparse
import logging
import os
import sys

from trivext import __version__
from trivext import report
from trivext.algebra import incidence_algebra, path_algebra, trivial_extension
from trivext.census import CENSUS_DIM_CAP, run_census
from trivext.core import AlgebraError, parse_quiver
from trivext.coxeter import SingularCartanError, coxeter_data, coxeter_periodicity
from trivext.dynkin import (
    DynkinType,
    all_dynkin_types,
    cydim_dynkin,
    dynkin_quiver,
    expected_period_dynkin,
    matching_dynkin_types,
)
from trivext.field import asfield
from trivext.module import ModuleError, global_dimension
from trivext.options import OrbitOptions
from trivext.periodicity import (
    GuardError,
    bimodule_syzygy_orbit,
    syzygy_orbit,
)
from trivext.poset import FAMILIES, PosetError, named_poset, parse_poset
from trivext.qpa import export_qpa

logger = logging.getLogger(__name__)

DEFAULT_CENSUS_LIMIT = 8


class UsageError(Exception):
    pass


class InputError(ValueError):
    """A command line value that does not name a valid input or option."""


INPUT_ERRORS = (InputError, PosetError, AlgebraError, GuardError,
                SingularCartanError, ModuleError, OSError)


def _checked(fn, *args):
    # argument values reach library constructors that raise plain ValueError
    try:
        return fn(*args)
    except INPUT_ERRORS:
        raise
    except ValueError as e:
        raise InputError(str(e)) from e


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(report.EXIT_USAGE, f'{self.prog}: error: {message}\n')


def _is_quiver_text(text):
    for raw in text.splitlines():
        line = raw.split('#', 1)[0].strip()
        if line.startswith('vertex ') or '->' in line:
            return True
    return False


def load_input(source):
    """Resolve an input argument.

    Returns
    -------
    kind, obj, name : str, Poset or Quiver, str
        `kind` is ``'poset'`` or ``'quiver'``.

    """
    if os.path.isfile(source):
        with open(source, encoding='utf-8') as f:
            text = f.read()
        if _is_quiver_text(text):
            return 'quiver', parse_quiver(text), source
        return 'poset', parse_poset(text), source
    family, _, rest = source.partition(':')
    if family == 'dynkin':
        name, _, orientation = rest.partition(':')
        t = _checked(DynkinType.parse, name)
        q = _checked(dynkin_quiver, t, orientation or 'linear')
        return 'quiver', q, source
    if family in FAMILIES:
        n = _checked(int, rest) if rest else None
        return 'poset', named_poset(family, n), source
    raise InputError(f"'{source}' is neither a file nor a named input")


def _algebra(kind, obj, field):
    if kind == 'poset':
        return incidence_algebra(obj, field)
    return path_algebra(obj, field)


def _fields(text):
    tags = [tag.strip() for tag in text.split(',')]
    return [_checked(asfield, tag) for tag in tags if tag]


def _options(args, **defaults):
    values = dict(defaults)
    values.update({k: getattr(args, k) for k in ('max_steps', 'dim_cap', 'seed')
                   if getattr(args, k, None) is not None})
    return _checked(lambda: OrbitOptions.from_env(**values))


def cmd_resolve(args):
    kind, obj, name = load_input(args.input)
    options = _options(args)
    results, codes = [], []
    algebra = None
    for field in _fields(args.fields):
        algebra = _algebra(kind, obj, field)
        if args.te:
            algebra = trivial_extension(algebra)
        if args.bimodule:
            verdict = bimodule_syzygy_orbit(algebra, options)
        else:
            verdict = syzygy_orbit(algebra, options)
        results.append({'field': field.tag, 'verdict': verdict.to_dict()})
        codes.append(report.verdict_exit_code(verdict.kind))
    data = report.payload('resolve', input=name, algebra=algebra.name,
                          dim=algebra.dim,
                          mode='bimodule' if args.bimodule else 'simple',
                          trivial_extension=args.te, results=results)
    return data, report.first_failure(codes)


def cmd_census(args):
    if args.m > DEFAULT_CENSUS_LIMIT and not args.extended:
        raise UsageError(f'census of size {args.m} is long-running; pass '
                         f'--extended to run it')
    options = _options(args, dim_cap=CENSUS_DIM_CAP)
    results = [run_census(args.m, field, options, args.workers).to_dict()
               for field in _fields(args.fields)]
    return report.payload('census', results=results), report.EXIT_OK


def cmd_coxeter(args):
    kind, obj, name = load_input(args.input)
    algebra = _algebra(kind, obj, None)
    data = coxeter_data(algebra)
    return report.payload(
        'coxeter', input=name, algebra=algebra.name,
        cartan=data.cartan.tolist(), coxeter=data.coxeter.tolist(),
        coxeter_polynomial=str(data.char_polynomial),
        coxeter_period=data.period,
        dynkin_types=[str(t) for t in
                      matching_dynkin_types(data.char_polynomial)],
        global_dimension=global_dimension(algebra, args.max_steps or 200),
    ), report.EXIT_OK


def _check(t, field, what, expected, observed, ok, code):
    return {'type': str(t), 'field': field, 'check': what,
            'expected': expected, 'observed': observed, 'ok': bool(ok),
            'code': report.EXIT_OK if ok else code}


def cmd_verify_dynkin(args):
    options = _options(args)
    checks = []
    for t in _checked(all_dynkin_types, args.max_rank):
        q = dynkin_quiver(t, args.orientation)
        ell = cydim_dynkin(t).ell
        period = coxeter_periodicity(path_algebra(q))
        checks.append(_check(t, 'q', 'Coxeter period divides 2l', 2 * ell,
                             period, period and (2 * ell) % period == 0,
                             report.EXIT_NOT_PERIODIC))
        for field in _fields(args.fields):
            expected = expected_period_dynkin(t, field)
            te = trivial_extension(path_algebra(q, field))
            verdict = syzygy_orbit(te, options)
            n = verdict.n if verdict.is_periodic else None
            checks.append(_check(
                t, field.tag, 'simple orbit period divides', expected,
                n if n is not None else verdict.kind,
                n is not None and expected % n == 0,
                report.verdict_exit_code(verdict.kind) or
                report.EXIT_NOT_PERIODIC))
            if t.rank > args.bimodule_rank:
                continue
            verdict = bimodule_syzygy_orbit(te, options)
            n = verdict.n if verdict.is_periodic else None
            exact = n == expected and not verdict.unresolved_steps
            checks.append(_check(
                t, field.tag, 'bimodule period equals', expected,
                n if n is not None else verdict.kind, exact,
                report.verdict_exit_code(verdict.kind) or
                report.EXIT_NOT_PERIODIC))
    data = report.payload('verify-dynkin', checks=checks)
    return data, report.first_failure(c['code'] for c in checks)


def cmd_export_qpa(args):
    kind, obj, _ = load_input(args.input)
    if kind != 'poset':
        raise PosetError('export-qpa needs a poset input')
    field = _checked(asfield, args.field)
    script = export_qpa(obj, field, args.max_steps or 60)
    if args.output:
        with open(args.output, 'w', encoding='utf-8') as f:
            f.write(script)
    else:
        sys.stdout.write(script)
    return None, report.EXIT_OK


def _budget_arguments(p):
    p.add_argument('--max-steps', type=int, default=None,
                   help='largest syzygy exponent tried')
    p.add_argument('--dim-cap', type=int, default=None,
                   help='syzygy dimension budget')


def build_parser():
    parser = _Parser(prog='trivext', description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for progress, -vv for per-step details')
    common.add_argument('--seed', type=int, default=None,
                        help='seed of the randomized isomorphism search '
                             '(default: TRIVEXT_SEED or 0)')
    common.add_argument('--json', metavar='FILE', default=None,
                        help="write the JSON report to FILE ('-' for stdout)")
    sub = parser.add_subparsers(dest='command', required=True,
                                parser_class=_Parser)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add('resolve', help='syzygy orbits of an algebra')
    p.add_argument('input')
    p.add_argument('--te', action='store_true',
                   help='use the trivial extension of the algebra')
    p.add_argument('--bimodule', action='store_true',
                   help='iterate syzygies of the regular bimodule')
    p.add_argument('--fields', '--field', default='q',
                   help="comma separated fields, e.g. 'q,2,3'")
    _budget_arguments(p)
    p.set_defaults(func=cmd_resolve)

    p = add('census', help='census of distributive lattices')
    p.add_argument('m', type=int)
    p.add_argument('--extended', action='store_true',
                   help=f'allow sizes above {DEFAULT_CENSUS_LIMIT}')
    p.add_argument('--workers', type=int, default=None,
                   help='worker processes (default: number of CPUs)')
    p.add_argument('--fields', '--field', default='q')
    _budget_arguments(p)
    p.set_defaults(func=cmd_census)

    p = add('coxeter', help='Cartan and Coxeter data')
    p.add_argument('input')
    p.add_argument('--max-steps', type=int, default=None,
                   help='budget of the global dimension computation')
    p.set_defaults(func=cmd_coxeter)

    p = add('verify-dynkin',
                       help='check the engine against the Dynkin formulas')
    p.add_argument('--max-rank', type=int, default=8)
    p.add_argument('--bimodule-rank', type=int, default=3,
                   help='largest rank checked with the bimodule orbit')
    p.add_argument('--orientation', choices=('linear', 'alternating'),
                   default='linear')
    p.add_argument('--fields', '--field', default='q,2')
    _budget_arguments(p)
    p.set_defaults(func=cmd_verify_dynkin)

    p = add('export-qpa', help='GAP/QPA script for T(k[P])')
    p.add_argument('input')
    p.add_argument('--field', default='q')
    p.add_argument('--max-steps', type=int, default=None,
                   help='syzygy budget of the generated check')
    p.add_argument('--output', '-o', default=None)
    p.set_defaults(func=cmd_export_qpa)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                        logging.DEBUG)
    logging.basicConfig(level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        data, code = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f'trivext: error: {e}', file=sys.stderr)
        return report.EXIT_USAGE
    except INPUT_ERRORS as e:
        print(f'trivext: {e}', file=sys.stderr)
        return report.EXIT_INPUT
    if data is not None:
        if args.json == '-':
            sys.stdout.write(report.to_json(data))
        else:
            if args.json:
                with open(args.json, 'w', encoding='utf-8') as f:
                    f.write(report.to_json(data))
            sys.stdout.write(report.to_text(data))
    return code


if __name__ == '__main__':
    sys.exit(main())
