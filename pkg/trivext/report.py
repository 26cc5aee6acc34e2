"""JSON reports (schema 1) and the text views derived from them."""
import json

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_NOT_PERIODIC = 3
EXIT_INCONCLUSIVE = 4

_EXIT_CODES = {
    'periodic': EXIT_OK,
    'diverging': EXIT_NOT_PERIODIC,
    'vanishing': EXIT_NOT_PERIODIC,
    'inconclusive': EXIT_INCONCLUSIVE,
}


def verdict_exit_code(kind):
    return _EXIT_CODES[kind]


def first_failure(codes):
    """The first nonzero exit code, or 0."""
    return next((c for c in codes if c), EXIT_OK)


def payload(command, **fields):
    out = {'schema': SCHEMA, 'command': command}
    out.update(fields)
    return out


def to_json(data):
    """Serialize a report deterministically."""
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def _verdict_line(v):
    kind = v['kind']
    if kind == 'periodic':
        text = f"periodic, n={v['n']}, permutation={v['permutation']}"
        if v.get('per_simple_periods') is not None:
            text += f", per-simple periods={v['per_simple_periods']}"
        if v.get('unresolved_steps'):
            text += f", undecided steps={v['unresolved_steps']}"
        return text
    if kind == 'diverging':
        return f"diverging at step {v['last_step']} " \
               f"(dims ...{v['dim_trace'][-5:]})"
    if kind == 'vanishing':
        where = '' if v['vertex'] is None else f" for S{v['vertex']}"
        return f"vanishing syzygy at step {v['step']}{where}"
    return f"inconclusive ({v['bound_reached']})"


def _matrix_lines(rows):
    width = max((len(str(x)) for row in rows for x in row), default=1)
    return ['  ' + ' '.join(str(x).rjust(width) for x in row) for row in rows]


def _text_resolve(data):
    lines = [f"{data['algebra']} (dim {data['dim']}, {data['mode']} orbit)"]
    for result in data['results']:
        lines.append(f"  {result['field']}: "
                     f"{_verdict_line(result['verdict'])}")
    return lines


def _text_census(data):
    lines = []
    for result in data['results']:
        lines.append(f"m={result['m']} over {result['field']}: "
                     f"{result['lattice_count']} lattices, "
                     f"{result['coxeter_periodic_count']} with periodic "
                     f"Coxeter matrix, {result['simple_periodic_count']} "
                     f"with periodic simples")
        for r in result['records']:
            if r['verdict'] is None:
                continue
            lines.append(f"  {r['canonical_form']}  {r['coxeter_polynomial']}"
                         f"  {_verdict_line(r['verdict'])}")
    return lines


def _text_coxeter(data):
    lines = [f"{data['algebra']}", 'Cartan matrix:']
    lines += _matrix_lines(data['cartan'])
    lines.append('Coxeter matrix:')
    lines += _matrix_lines(data['coxeter'])
    lines.append(f"Coxeter polynomial: {data['coxeter_polynomial']}")
    period = data['coxeter_period']
    lines.append(f"Coxeter period: {period if period else 'not periodic'}")
    types = ', '.join(data['dynkin_types']) or 'none'
    lines.append(f'Dynkin types with this polynomial: {types}')
    gldim = data['global_dimension']
    lines.append(f"global dimension: {gldim if gldim is not None else '?'}")
    return lines


def _text_verify(data):
    lines = []
    for check in data['checks']:
        status = 'ok' if check['ok'] else 'FAIL'
        lines.append(f"{status:4} {check['type']:4} {check['field']:2} "
                     f"{check['check']}: expected {check['expected']}, "
                     f"got {check['observed']}")
    failed = sum(not c['ok'] for c in data['checks'])
    lines.append(f"{len(data['checks']) - failed} passed, {failed} failed")
    return lines


_TEXT = {
    'resolve': _text_resolve,
    'census': _text_census,
    'coxeter': _text_coxeter,
    'verify-dynkin': _text_verify,
}


def to_text(data):
    """Human-readable view of a report."""
    return '\n'.join(_TEXT[data['command']](data)) + '\n'
