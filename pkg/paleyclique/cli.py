"""
paleyclique.cli
~~~~~~~~~~~~~~~

Command line front end.

    paleyclique field build --p P --m M
    paleyclique gp omega --q Q --d D [--exhaustive]
    paleyclique gp cliques --q Q --d D --through 0,1 --size Q
    paleyclique verify vlm --q RANGE
    paleyclique verify main --q Q --set SPEC
    paleyclique verify gp --q RANGE --d RANGE --k RANGE
    paleyclique verify subfield --q RANGE
    paleyclique verify plunnecke --q RANGE --samples N
    paleyclique verify redei --p P [--size N]
    paleyclique verify linearity --q RANGE
    paleyclique verify subspace --q Q --set SPEC
    paleyclique verify sweep --q RANGE --samples N
    paleyclique directions --q Q --set SPEC
    paleyclique margin --q Q --set SPEC --order M

Graphs and sets live in F_{q^2}.  RANGE is ``a..b``, a comma list or a
mix of both.  Exit status: 0 when nothing failed, 1 when a verification
FAILed, 2 on usage and input errors (rendered as JSON on stderr).
"""

import io
import sys
import csv
import json
import logging
import argparse
import dataclasses

from . import gf
from . import polys
from . import cayley
from . import config
from . import errors
from . import mulset
from . import reports
from . import geometry
from . import theorems

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def span(text):
    """Inclusive integer spans: ``3..13``, ``3,5,7`` or ``2..4,9``."""
    values = []
    try:
        for part in text.split(','):
            part = part.strip()
            if '..' in part:
                low, high = (int(v) for v in part.split('..', 1))
                if low > high:
                    raise ValueError(part)
                values.extend(range(low, high + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError('bad integer span {!r}'.format(text)) from None
    return values


def codes(text):
    try:
        return [int(c) for c in text.split(',') if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('bad code list {!r}'.format(text)) from None


@dataclasses.dataclass(frozen=True)
class GridSpec:
    """Parameter grid of ``verify gp``, cells in (q, d, k) order."""

    qs: tuple
    ds: tuple
    ks: tuple = (0,)

    def cells(self):
        for q in self.qs:
            for d in self.ds:
                for k in self.ks:
                    yield q, d, k


def _gp_cell(args):
    q, d, k, settings = args
    if polys.prime_power(q) is None:
        return reports.skipped('thm-gp', q, 'not-prime-power', d=d, k=k)
    if d < 2 or (q * q - 1) % d:
        return reports.skipped('thm-gp', q, 'd does not divide q^2 - 1', d=d, k=k)
    try:
        inp = theorems.GpCaseInput(q, d, k)
        return theorems.verify_gp_theorem(inp, settings=settings)
    except errors.Error as exc:
        logger.warning('skipping q=%d d=%d k=%d: %s', q, d, k, exc)
        return reports.skipped('thm-gp', q, '{}: {}'.format(exc.code, exc), d=d, k=k)


def _vlm_cell(args):
    q, settings = args
    return theorems.vlm_verify(q, settings=settings)


def _subfield_cell(args):
    q, settings = args
    return theorems.verify_subfield_sweep(q, settings=settings)


def _linearity_cell(args):
    q, samples, settings = args
    return theorems.verify_grid_linearity(q, samples, settings=settings)


def _plunnecke_cell(args):
    q, samples, seed, settings = args
    return theorems.verify_plunnecke(q, samples, seed, settings=settings)


def _sweep_cell(args):
    q, samples, seed, settings = args
    return theorems.sweep_main_theorem(q, samples, seed, settings=settings)


def _prime_powers(qs, odd=False):
    kept = [q for q in qs if polys.prime_power(q) is not None and (q % 2 or not odd)]
    dropped = sorted(set(qs) - set(kept))
    if dropped:
        logger.debug('ignoring q in %s', dropped)
    return kept


def _square_field(q, settings):
    return gf.field_of_order(q * q, settings=settings)


def _cmd_field_build(args, settings):
    field = gf.build_field(args.p, args.m, settings=settings)
    record = field.summary()
    record['poly_str'] = polys.to_string(field.spec.poly)
    record['g'] = field.g
    return record


def _cmd_gp_omega(args, settings):
    graph = cayley.gp_graph(_square_field(args.q, settings), args.d)
    result = cayley.clique_number(graph, exhaustive=args.exhaustive, jobs=settings.jobs)
    record = {'graph': graph.name}
    record.update(result.to_json())
    return record


def _cmd_gp_cliques(args, settings):
    field = _square_field(args.q, settings)
    graph = cayley.gp_graph(field, args.d)
    anchors = mulset.EltSet.from_codes(field, args.through)
    size = args.q if args.size is None else args.size
    result = cayley.cliques_through(graph, anchors, size, jobs=settings.jobs)
    record = {'graph': graph.name, 'through': anchors.codes(), 'size': size}
    record.update(result.to_json())
    return record


def _cmd_verify_vlm(args, settings):
    qs = _prime_powers(args.q, odd=True)
    return cayley.parallel_map(_vlm_cell, [(q, settings) for q in qs], settings.jobs)


def _cmd_verify_main(args, settings):
    field = _square_field(args.q, settings)
    s = mulset.parse_set_spec(field, args.set)
    return [theorems.verify_main_conclusion(field, s, label=args.set, jobs=settings.jobs)]


def _cmd_verify_gp(args, settings):
    grid = GridSpec(tuple(args.q), tuple(args.d), tuple(args.k))
    cells = [(q, d, k, settings) for q, d, k in grid.cells()]
    return cayley.parallel_map(_gp_cell, cells, settings.jobs)


def _cmd_verify_subfield(args, settings):
    qs = _prime_powers(args.q)
    return cayley.parallel_map(_subfield_cell, [(q, settings) for q in qs], settings.jobs)


def _cmd_verify_plunnecke(args, settings):
    cells = [(q, args.samples, settings.seed, settings) for q in _prime_powers(args.q)]
    return cayley.parallel_map(_plunnecke_cell, cells, settings.jobs)


def _cmd_verify_redei(args, settings):
    return [theorems.verify_redei(args.p, args.size)]


def _cmd_verify_linearity(args, settings):
    cells = [(q, args.samples, settings) for q in _prime_powers(args.q)]
    return cayley.parallel_map(_linearity_cell, cells, settings.jobs)


def _cmd_verify_subspace(args, settings):
    field = _square_field(args.q, settings)
    s = mulset.parse_set_spec(field, args.set)
    return [theorems.verify_subspace_props(field, s, label=args.set,
                                           jobs=settings.jobs, settings=settings)]


def _cmd_verify_sweep(args, settings):
    cells = [(q, args.samples, settings.seed, settings) for q in _prime_powers(args.q)]
    return cayley.parallel_map(_sweep_cell, cells, settings.jobs)


def _cmd_directions(args, settings):
    field = _square_field(args.q, settings)
    a = mulset.parse_set_spec(field, args.set)
    directions = geometry.directions_of(geometry.grid_of(a))
    record = {'q': args.q, 'set': args.set, 'size': len(directions),
              'half_bound': (field.order + 1) // 2}
    record.update(directions.to_json())
    return record


def _cmd_margin(args, settings):
    field = _square_field(args.q, settings)
    s = mulset.parse_set_spec(field, args.set)
    record = {'q': args.q, 'set': args.set}
    record.update(theorems.character_margin(field, s, args.order).to_json())
    return record


def _common_flags():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=('json', 'csv'), default='json',
                        help='output format')
    common.add_argument('--out', default=None, help='write output to this file')
    common.add_argument('--jobs', type=int, default=None,
                        help='worker processes (default: CAYLEY_JOBS or all processors)')
    common.add_argument('--seed', type=int, default=None,
                        help='random seed (default: CAYLEY_SEED or 12345)')
    common.add_argument('--timing', action='store_true',
                        help='record wall-clock times instead of 0')
    common.add_argument('-v', '--verbose', action='count', default=0)
    return common


def build_parser():
    common = _common_flags()
    parser = argparse.ArgumentParser(
        prog='paleyclique',
        description='Exact clique computations in Cayley graphs over finite fields.',
    )
    verbs = parser.add_subparsers(dest='verb', metavar='VERB')
    verbs.required = True

    def leaf(group, name, handler, help_text):
        sub = group.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    field = verbs.add_parser('field', help='finite fields').add_subparsers(dest='action')
    field.required = True
    sub = leaf(field, 'build', _cmd_field_build, 'build F_{p^m}')
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--m', type=int, required=True)

    gp = verbs.add_parser('gp', help='generalized Paley graphs GP(q^2, d)').add_subparsers(dest='action')
    gp.required = True
    sub = leaf(gp, 'omega', _cmd_gp_omega, 'clique number')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--d', type=int, required=True)
    sub.add_argument('--exhaustive', action='store_true', help='list every maximum clique')
    sub = leaf(gp, 'cliques', _cmd_gp_cliques, 'cliques through anchors')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--d', type=int, required=True)
    sub.add_argument('--through', type=codes, default=[0, 1])
    sub.add_argument('--size', type=int, default=None)

    verify = verbs.add_parser('verify', help='theorem instance checks').add_subparsers(dest='action')
    verify.required = True
    sub = leaf(verify, 'vlm', _cmd_verify_vlm, 'Paley graph subfield cliques')
    sub.add_argument('--q', type=span, required=True)
    sub = leaf(verify, 'main', _cmd_verify_main, 'main theorem for one connection set')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--set', required=True)
    sub = leaf(verify, 'gp', _cmd_verify_gp, 'coset union theorem over a grid')
    sub.add_argument('--q', type=span, required=True)
    sub.add_argument('--d', type=span, required=True)
    sub.add_argument('--k', type=span, default=[0])
    sub = leaf(verify, 'subfield', _cmd_verify_subfield, 'subfield criterion over all subspaces')
    sub.add_argument('--q', type=span, required=True)
    sub = leaf(verify, 'plunnecke', _cmd_verify_plunnecke, 'product set inequality')
    sub.add_argument('--q', type=span, required=True)
    sub.add_argument('--samples', type=int, default=1000)
    sub = leaf(verify, 'redei', _cmd_verify_redei, 'direction bound at prime order')
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--size', type=int, default=None)
    sub = leaf(verify, 'linearity', _cmd_verify_linearity, 'linearity of subfield grids')
    sub.add_argument('--q', type=span, required=True)
    sub.add_argument('--samples', type=int, default=5)
    sub = leaf(verify, 'subspace', _cmd_verify_subspace, 'cliques through 0 are subspaces')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--set', required=True)
    sub = leaf(verify, 'sweep', _cmd_verify_sweep, 'main theorem soundness sweep')
    sub.add_argument('--q', type=span, required=True)
    sub.add_argument('--samples', type=int, default=1000)

    sub = leaf(verbs, 'directions', _cmd_directions, 'directions of A x A')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--set', required=True)
    sub = leaf(verbs, 'margin', _cmd_margin, 'character margin of a set')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--set', required=True)
    sub.add_argument('--order', type=int, required=True)
    return parser


def _render_record(record, fmt):
    if fmt == 'json':
        return json.dumps(record, indent=2) + '\n'
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(list(record))
    writer.writerow([json.dumps(v) if isinstance(v, (list, dict)) else v
                     for v in record.values()])
    return buf.getvalue()


def _configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def dispatch(args, stdout=None):
    """Runs a parsed command, returns the exit status."""
    stdout = sys.stdout if stdout is None else stdout
    settings = config.get_settings().replace(jobs=args.jobs, seed=args.seed)
    config.set_settings(settings)

    outcome = args.handler(args, settings)
    if isinstance(outcome, dict):
        if not args.timing and 'elapsed_ms' in outcome:
            outcome['elapsed_ms'] = 0
        reports.write(_render_record(outcome, args.format), args.out, stdout)
        return EXIT_OK

    if not args.timing:
        for report in outcome:
            report.elapsed_ms = 0
    reports.write(reports.emit(outcome, args.format), args.out, stdout)
    if any(r.verdict is reports.Verdict.FAIL for r in outcome):
        return EXIT_FAILED
    return EXIT_OK


def main(argv=None, stdout=None, stderr=None):
    stderr = sys.stderr if stderr is None else stderr
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return dispatch(args, stdout)
    except errors.Error as exc:
        stderr.write(json.dumps(exc.to_dict()) + '\n')
        return EXIT_USAGE
