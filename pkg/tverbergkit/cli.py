import json
import logging
import sys
from collections import OrderedDict
from contextlib import contextmanager
from math import factorial

import click

from tverbergkit import ENUMERATION_LIMIT, dump_json, format_rational, verify_all
from tverbergkit.complex import chessboard, deleted_join, join, skeleton
from tverbergkit.exceptions import MalformedInput, SizeExceeded, TverbergKitError
from tverbergkit.formats import (complex_as_dict, complex_from_dict, read_colors, read_points, read_simplicial,
                                 write_points, write_simplicial)
from tverbergkit.homology import (chessboard_column_map, fundamental_cycle_chessboard, fundamental_cycle_sphere,
                                  homology as compute_homology, simplicial_map_degree)
from tverbergkit.models import SearchConstraints
from tverbergkit.snf import is_prime
from tverbergkit.suites import SUITES, run_suite
from tverbergkit.tverberg import candidate_family_count, radon_partition, tverberg_search, witness_configuration

logger = logging.getLogger('tverbergkit')

COMPLEX_KINDS = ('chessboard', 'deleted-join', 'join', 'skeleton', 'witness')


class InputError(click.ClickException):
    """
    Raised if an input file is malformed or a command's arguments are rejected by the library.
    """
    exit_code = 2


@contextmanager
def _library_errors():
    try:
        yield
    except TverbergKitError as e:
        raise InputError(str(e))


def _load_complex(f):
    """
    Reads a complex in the text format, or in JSON if the content starts with `{`.
    """
    content = f.read()
    if content.lstrip().startswith('{'):
        try:
            data = json.loads(content, object_pairs_hook=OrderedDict)
        except ValueError as e:
            raise MalformedInput('invalid JSON: {}'.format(e), getattr(e, 'lineno', None))
        return complex_from_dict(data)
    return read_simplicial(content.splitlines())


def _require(**options):
    missing = sorted(name for name, value in options.items() if value is None)
    if missing:
        raise click.UsageError('missing option(s): {}'.format(', '.join('--{}'.format(name) for name in missing)))


def _parse_prime(ctx, param, value):
    if value is not None and not is_prime(value):
        raise click.BadParameter('expected a prime, got {}'.format(value))
    return value


def _parse_primes(ctx, param, value):
    if value is None:
        return None
    try:
        primes = tuple(int(token) for token in value.split(',') if token.strip())
    except ValueError:
        raise click.BadParameter('expected comma-separated integers, got {}'.format(repr(value)))
    if not primes or any(p < 3 or not is_prime(p) for p in primes):
        raise click.BadParameter('expected primes of at least 3, got {}'.format(repr(value)))
    return primes


@click.group()
@click.option('-v', '--verbose', count=True, help='Log progress to stderr (repeat for debug messages).')
def main(verbose):
    """
    Constructions, homology, exact solvers and verification suites for Tverberg-type problems.
    """
    if verbose:
        logging.basicConfig(stream=sys.stderr, level=logging.DEBUG if verbose > 1 else logging.INFO,
                            format='%(levelname)s %(name)s: %(message)s')


@main.group(name='complex')
def complex_group():
    """
    Builds simplicial complexes.
    """


@complex_group.command()
@click.argument('kind', type=click.Choice(COMPLEX_KINDS))
@click.option('--m', type=int, help='Chessboard rows.')
@click.option('--n', type=int, help='Chessboard columns.')
@click.option('--r', type=int, default=2, show_default=True, help='Number of copies or parts.')
@click.option('--k', type=int, default=2, show_default=True, help='Deleted join parameter.')
@click.option('--dim', type=int, help='Skeleton dimension.')
@click.option('--d', type=int, help='Witness configuration dimension.')
@click.option('--input', 'input_file', type=click.File('r'), help='Complex file.')
@click.option('--other', type=click.File('r'), help='Second complex file, for joins.')
@click.option('--json', 'as_json', is_flag=True, help='Write the JSON mirror instead of the text format.')
@click.option('--output', type=click.File('w'), default='-', help='Output file.')
def build(kind, m, n, r, k, dim, d, input_file, other, as_json, output):
    """
    Builds a complex (or, for "witness", a point configuration) and writes it.
    """
    with _library_errors():
        if kind == 'witness':
            _require(d=d)
            P = witness_configuration(d, r)
            if as_json:
                dump_json(OrderedDict([
                    ('dimension', P.dimension),
                    ('points', [[format_rational(c) for c in point] for point in P]),
                ]), output)
            else:
                write_points(P, output)
            return

        if kind == 'chessboard':
            _require(m=m, n=n)
            K = chessboard(m, n)
        elif kind == 'deleted-join':
            _require(input=input_file)
            K = deleted_join(_load_complex(input_file), r, k)
        elif kind == 'join':
            _require(input=input_file, other=other)
            K = join(_load_complex(input_file), _load_complex(other))
        else:
            _require(input=input_file, dim=dim)
            K = skeleton(_load_complex(input_file), dim)

    if as_json:
        dump_json(complex_as_dict(K), output)
    else:
        write_simplicial(K, output)


@main.command()
@click.option('--input', 'input_file', type=click.File('r'), required=True, help='Complex file.')
@click.option('--prime', type=int, callback=_parse_prime,
              help='Compute with coefficients in the field with this many elements.')
@click.option('--max-degree', type=int, help='Compute only degrees up to this one.')
def homology(input_file, prime, max_degree):
    """
    Writes the homology of a complex as a JSON array.
    """
    with _library_errors():
        summary = compute_homology(_load_complex(input_file), coefficients=prime, max_degree=max_degree)
    dump_json(summary.as_list(), sys.stdout)


@main.command()
@click.option('--prime', type=int, required=True, callback=_parse_prime, help='The number of columns p.')
def degree(prime):
    """
    Writes the degree of the map from the (p - 1)×p chessboard complex to the boundary of the (p - 1)-simplex that
    sends each cell to its column.
    """
    if prime < 3:
        raise click.BadParameter('expected at least 3', param_hint='--prime')
    with _library_errors():
        f, K, L = chessboard_column_map(prime)
        zK, zL = fundamental_cycle_chessboard(prime), fundamental_cycle_sphere(prime - 1)
        value = simplicial_map_degree(f, K, L, zK, zL)
    dump_json(OrderedDict([
        ('prime', prime),
        ('degree', value),
        ('factorial', factorial(prime - 1)),
    ]), sys.stdout)


@main.command()
@click.option('--input', 'input_file', type=click.File('r'), required=True, help='Points file with d + 2 points.')
def radon(input_file):
    """
    Writes a Radon partition certificate.
    """
    with _library_errors():
        certificate = radon_partition(read_points(input_file))
    dump_json(certificate.as_dict(), sys.stdout)


@main.command()
@click.option('--input', 'input_file', type=click.File('r'), required=True, help='Points file.')
@click.option('--r', type=int, required=True, help='Number of parts.')
@click.option('--max-dim', type=int, help='Maximum dimension of each part.')
@click.option('--colors', type=click.File('r'), help='Colors file; parts must be rainbow.')
@click.option('--equal-coeffs', is_flag=True, help='Require equal coefficients color by color.')
@click.option('--exhaustive', is_flag=True,
              help='Refuse searches with more than {} candidate families.'.format(ENUMERATION_LIMIT))
def tverberg(input_file, r, max_dim, colors, equal_coeffs, exhaustive):
    """
    Writes the first Tverberg partition certificate in canonical order, or {"result": "none"}.
    """
    with _library_errors():
        P = read_points(input_file)
        coloring = read_colors(colors) if colors else None
        if exhaustive:
            estimate = candidate_family_count(len(P), r)
            if estimate > ENUMERATION_LIMIT:
                raise SizeExceeded('{} candidate families exceed the limit of {}'.format(estimate, ENUMERATION_LIMIT))
            logger.info('Searching at most {} candidate families'.format(estimate))
        constraints = SearchConstraints(max_face_dimension=max_dim, rainbow=coloring, equal_coefficients=equal_coeffs)
        certificate = tverberg_search(P, r, constraints)

    if certificate is None:
        data = OrderedDict([('result', 'none')])
    else:
        data = certificate.as_dict()
    dump_json(data, sys.stdout)


@main.command()
@click.argument('suite', type=click.Choice(list(SUITES) + ['all']))
@click.option('--seed', type=int, default=0, show_default=True, help='Seed of all randomized checks.')
@click.option('--jobs', type=int, default=1, envvar='TVERBERG_JOBS', show_default=True,
              help='Number of worker processes.')
@click.option('--timing', is_flag=True, help='Report elapsed times.')
@click.option('--human', is_flag=True, help='Write aligned tables instead of JSON.')
@click.option('--primes', callback=_parse_primes, help='Comma-separated primes for degree-factorial.')
@click.option('--dense-rationals', is_flag=True, help='Draw random coordinates with denominators up to 100.')
@click.option('--count', type=int, help='Number of random instances per randomized check.')
@click.pass_context
def verify(ctx, suite, seed, jobs, timing, human, primes, dense_rationals, count):
    """
    Runs a verification suite, or all of them, and exits with 1 if any check fails.
    """
    kwargs = {'primes': primes, 'dense_rationals': dense_rationals}
    if suite == 'all':
        reports = list(verify_all(seed=seed, jobs=jobs, count=count, **kwargs).values())
    else:
        reports = [run_suite(suite, seed=seed, jobs=jobs, count=count, **kwargs)]
    passed = all(report.passed for report in reports)

    stdout = sys.stdout
    if human:
        for report in reports:
            stdout.write(report.human(timing))
    elif suite == 'all':
        dump_json(OrderedDict([
            ('passed', passed),
            ('suites', [report.as_dict(timing) for report in reports]),
        ]), stdout)
    else:
        dump_json(reports[0].as_dict(timing), stdout)

    if not passed:
        ctx.exit(1)


def run(argv=None):
    """
    Runs the command line with the given arguments, and returns the exit code.
    """
    try:
        main.main(args=argv, prog_name='tverbergkit')
    except SystemExit as e:
        if e.code is None:
            return 0
        if isinstance(e.code, int):
            return e.code
        return 1
    return 0
