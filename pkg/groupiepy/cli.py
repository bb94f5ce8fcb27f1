# -*- coding: utf-8 -*-

"""
    groupiepy.cli
    ~~~~~~~~~~~~~

    Command line front end. Exit status is 0 on success, 1 on a runtime or
    I/O failure and 2 on a usage error.
"""

from __future__ import absolute_import

import argparse
import logging
import sys

from . import __version__
from .asymptotics import (balanced_shift_limit, bipartite_unbalanced_limit,
                          finite_size_prediction, gnp_limit, predict_limit)
from .exc import GroupieException, ParameterError, UnsupportedCaseError
from .graph import BIPARTITE, GNP, ModelParams, generate
from .groupie import groupie_report
from .moments import (compare_moments, exact_pair_moments,
                      exact_single_vertex_moments, printed_pair_moments,
                      single_vertex_moments)
from .montecarlo import convergence_sweep, run_trials
from .oracle import HARD_ENUMERATION_LIMIT
from .parser import dump_edge_list, load
from .parser.exc import EdgeListParserError
from .protocol import CSVProtocolFactory, JSONProtocolFactory
from .verify import run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

PROTOCOLS = {
    'json': JSONProtocolFactory(),
    'csv': CSVProtocolFactory(),
}


def size_list(text):
    """Parse ``100,400,1600`` or ``200:100,800:400`` into sizes."""
    sizes = []
    for token in text.split(','):
        token = token.strip()
        try:
            if ':' in token:
                n1, n2 = token.split(':')
                sizes.append((int(n1), int(n2)))
            else:
                sizes.append(int(token))
        except ValueError:
            raise argparse.ArgumentTypeError(
                'invalid size %r in %r' % (token, text))
    if not sizes:
        raise argparse.ArgumentTypeError('no sizes given')
    return sizes


def _model_params(args):
    if args.model == BIPARTITE:
        if args.n1 is None or args.n2 is None:
            raise ParameterError(ParameterError.OUT_OF_RANGE,
                                 'bipartite model needs --n1 and --n2')
        return ModelParams.bipartite(args.n1, args.n2, args.p)
    if args.n is None:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             'gnp model needs --n')
    return ModelParams.gnp(args.n, args.p)


def _echo(args):
    return dict((k, v) for k, v in vars(args).items()
                if k not in ('func', 'verbose', 'jobs'))


def _emit(args, results, fmt='json'):
    proto = PROTOCOLS[fmt].get_protocol(sys.stdout)
    proto.write_envelope(args.command, _echo(args), results,
                         seed=getattr(args, 'seed', None))


def cmd_generate(args):
    graph = generate(_model_params(args), args.seed)
    if args.out:
        with open(args.out, 'w') as fh:
            dump_edge_list(graph, fh)
    else:
        dump_edge_list(graph, sys.stdout)
    return EXIT_OK


def cmd_simulate(args):
    params = _model_params(args)
    estimate = run_trials(params, args.trials, args.seed,
                          keep_trials=args.keep_trials, n_jobs=args.jobs)
    try:
        prediction = predict_limit(params)
    except ParameterError:
        # no limit statement at p in {0, 1} for the bipartite model
        prediction = None
    deviation = None
    if prediction is not None:
        deviation = abs(estimate.mean - prediction.value)

    if args.format == 'csv':
        row = dict(estimate.as_dict(), model=params.variant, n=params.n,
                   n1=params.n1, n2=params.n2, p=params.p,
                   predicted=prediction.value if prediction else None,
                   deviation=deviation)
        _emit(args, row, 'csv')
    else:
        _emit(args, {'estimate': estimate, 'prediction': prediction,
                     'deviation': deviation})
    return EXIT_OK


def cmd_analyze(args):
    report = groupie_report(load(args.input))
    if args.format == 'csv':
        PROTOCOLS['csv'].get_protocol(sys.stdout).write_rows(
            [report], columns=('n', 'e', 'count', 'proportion_value'))
    else:
        _emit(args, report)
    return EXIT_OK


def cmd_moments(args):
    if args.kind == 'single':
        printed = single_vertex_moments(args.n, args.i, args.p)
        exact = exact_single_vertex_moments(args.n, args.i, args.p)
    else:
        printed = printed_pair_moments(args.n, args.i1, args.i2, args.i3,
                                       args.p)
        exact = exact_pair_moments(args.n, args.i1, args.i2, args.i3,
                                   args.p)

    if args.mode == 'printed':
        results = {'printed': printed}
    elif args.mode == 'exact':
        results = {'exact': exact}
    else:
        results = {'printed': printed, 'exact': exact,
                   'discrepancies': compare_moments(printed, exact)}
    _emit(args, results)
    return EXIT_OK


def cmd_limit(args):
    if args.regime == 'gnp':
        prediction = gnp_limit()
    elif args.regime == 'bipartite':
        prediction = bipartite_unbalanced_limit(args.alpha)
    elif args.regime == 'balanced':
        prediction = balanced_shift_limit(args.p, args.c)
    else:
        prediction = finite_size_prediction(args.n, args.p)
    _emit(args, prediction)
    return EXIT_OK


def cmd_sweep(args):
    rows = convergence_sweep(args.model, args.sizes, args.p, args.trials,
                             args.seed, n_jobs=args.jobs)
    if args.out:
        with open(args.out, 'w', newline='') as fh:
            PROTOCOLS['csv'].get_protocol(fh).write_rows(rows)
    _emit(args, rows)
    return EXIT_OK


def cmd_verify(args):
    if args.max_n > HARD_ENUMERATION_LIMIT:
        raise ParameterError(ParameterError.OUT_OF_RANGE,
                             '--max-n is capped at %d, got %d'
                             % (HARD_ENUMERATION_LIMIT, args.max_n))
    suites = run_suites(args.max_n)
    _emit(args, suites)
    for suite in suites:
        if not suite.passed:
            logger.error('suite %s failed: %s', suite.name, suite.detail)
    return EXIT_OK if all(s.passed for s in suites) else EXIT_FAILURE


def _add_model(parser, seed=True):
    parser.add_argument('--model', choices=(GNP, BIPARTITE), default=GNP)
    parser.add_argument('--n', type=int)
    parser.add_argument('--n1', type=int)
    parser.add_argument('--n2', type=int)
    parser.add_argument('--p', type=float, required=True)
    if seed:
        parser.add_argument('--seed', type=int, required=True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='groupiepy',
        description='Groupie vertices in random graphs.')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log at DEBUG level on stderr')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('generate', help='sample a graph as an edge list')
    _add_model(p)
    p.add_argument('--out')
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser('simulate', help='estimate the groupie proportion')
    _add_model(p)
    p.add_argument('--trials', type=int, required=True)
    p.add_argument('--format', choices=sorted(PROTOCOLS), default='json')
    p.add_argument('--keep-trials', action='store_true')
    p.add_argument('--jobs', type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('analyze', help='classify the groupies of a file')
    p.add_argument('--input', required=True)
    p.add_argument('--format', choices=sorted(PROTOCOLS), default='json')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('moments', help='conditional moments')
    kinds = p.add_subparsers(dest='kind')
    kinds.required = True
    single = kinds.add_parser('single')
    single.add_argument('--n', type=int, required=True)
    single.add_argument('--i', type=int, required=True)
    pair = kinds.add_parser('pair')
    pair.add_argument('--n', type=int, required=True)
    for name in ('--i1', '--i2', '--i3'):
        pair.add_argument(name, type=int, required=True)
    for k in (single, pair):
        k.add_argument('--p', type=float, required=True)
        k.add_argument('--mode', choices=('printed', 'exact', 'both'),
                       default='printed')
        k.set_defaults(func=cmd_moments)

    p = sub.add_parser('limit', help='limit predictions')
    regimes = p.add_subparsers(dest='regime')
    regimes.required = True
    r = regimes.add_parser('gnp')
    r.set_defaults(func=cmd_limit)
    r = regimes.add_parser('bipartite')
    r.add_argument('--alpha', type=float, required=True)
    r.set_defaults(func=cmd_limit)
    r = regimes.add_parser('balanced')
    r.add_argument('--p', type=float, required=True)
    r.add_argument('--c', type=int, required=True)
    r.set_defaults(func=cmd_limit)
    r = regimes.add_parser('finite')
    r.add_argument('--n', type=int, required=True)
    r.add_argument('--p', type=float, required=True)
    r.set_defaults(func=cmd_limit)

    p = sub.add_parser('sweep', help='convergence table')
    p.add_argument('--model', choices=(GNP, BIPARTITE), default=GNP)
    p.add_argument('--sizes', type=size_list, required=True)
    p.add_argument('--p', type=float, required=True)
    p.add_argument('--trials', type=int, required=True)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--out')
    p.add_argument('--jobs', type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser('verify', help='exhaustive property suites')
    p.add_argument('--max-n', type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s')

    try:
        return args.func(args)
    except (ParameterError, UnsupportedCaseError) as e:
        logger.error('%s', e)
        sys.stderr.write('%s: error: %s\n' % (parser.prog, e))
        return EXIT_USAGE
    except EdgeListParserError as e:
        logger.error('cannot parse %s: %s',
                     getattr(args, 'input', '<input>'), e)
        return EXIT_FAILURE
    except (GroupieException, OSError) as e:
        logger.error('%s', e)
        return EXIT_FAILURE
    except Exception:
        logger.exception('unexpected failure in %s', args.command)
        return EXIT_FAILURE
