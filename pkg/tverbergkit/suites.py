"""
Verification suites. Each suite is a list of checks; each check returns its expected value, its observed value, and
whether it passes. Randomized checks derive their random generator from the seed, the suite name and the check's
position, so that a report depends only on its arguments.
"""
import json
import logging
import random
import time
from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product
from math import comb, factorial

from tverbergkit import ALL, DELETED_PRODUCT_CELL_LIMIT, format_rational
from tverbergkit.complex import (are_isomorphic, barycentric_subdivision, chessboard, deleted_join,
                                 deleted_product_cell_count, deleted_product_chain, equivariant_collapse_chessboard,
                                 full_simplex, join, join_all, points, quotient_complex, rainbow_complex, skeleton)
from tverbergkit.exactlp import FeasibilityProblem, beale_problem, feasible, feasible_by_enumeration
from tverbergkit.exceptions import NotACycle, NotAGenerator, NotFree, TverbergKitError
from tverbergkit.homology import (betti_euler_characteristic, chessboard_column_map, euler_characteristic,
                                  fundamental_cycle_chessboard, fundamental_cycle_sphere, homological_connectivity,
                                  homology, is_top_generator, simplicial_map_degree)
from tverbergkit.models import (ChainComplex, Coloring, GroupAction, PointConfiguration, SearchConstraints,
                                SimplicialComplex)
from tverbergkit.snf import IntMatrix, determinant, elementary_divisors, smith_normal_form
from tverbergkit.tverberg import (counting_audit, radon_partition, tverberg_line, tverberg_search,
                                  verify_no_partition, witness_configuration)

logger = logging.getLogger('tverbergkit')

Check = namedtuple('Check', 'id function parameters')
CheckRecord = namedtuple('CheckRecord', 'id parameters expected observed passed elapsed')
Options = namedtuple('Options', 'suite seed count primes dense_rationals')

DEFAULT_PRIMES = (3, 5, 7)

# The six-vertex triangulation of the real projective plane, whose first homology group is Z/2.
PROJECTIVE_PLANE = [
    (0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
    (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5),
]


class Report:
    def __init__(self, suite, records):
        """
        Accepts a suite name and a list of CheckRecord tuples, in check order.
        """
        self.suite = suite
        self.records = list(records)

    def __repr__(self):
        return 'Report(suite={}, records={}, passed={})'.format(repr(self.suite), len(self.records), self.passed)

    @property
    def passed(self):
        return all(record.passed for record in self.records)

    def as_dict(self, timing=False):
        """
        Returns the report as an ordered mapping. Elapsed times are included only if `timing` is true.
        """
        records = []
        for record in self.records:
            data = OrderedDict([
                ('id', record.id),
                ('parameters', record.parameters),
                ('expected', record.expected),
                ('observed', record.observed),
                ('passed', record.passed),
            ])
            if timing:
                data['elapsed_ms'] = round(record.elapsed * 1000, 3)
            records.append(data)
        return OrderedDict([
            ('suite', self.suite),
            ('passed', self.passed),
            ('records', records),
        ])

    def human(self, timing=False):
        """
        Returns the report as an aligned text table.
        """
        headers = ['id', 'result', 'expected', 'observed']
        if timing:
            headers.append('ms')
        rows = []
        for record in self.records:
            row = [record.id, 'pass' if record.passed else 'FAIL', _compact(record.expected),
                   _compact(record.observed)]
            if timing:
                row.append('{:.1f}'.format(record.elapsed * 1000))
            rows.append(row)
        widths = [max(len(row[i]) for row in [headers] + rows) for i in range(len(headers))]
        lines = ['  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in [headers] + rows]
        lines.append('{}: {}'.format(self.suite, 'pass' if self.passed else 'FAIL'))
        return '\n'.join(lines) + '\n'


def _compact(value):
    return json.dumps(value, separators=(',', ':'))


def _execute(check):
    logger.info('Running check {}'.format(check.id))
    start = time.perf_counter()
    try:
        expected, observed, passed = check.function(**check.parameters)
    except TverbergKitError as e:
        logger.warning('Check {} raised {}: {}'.format(check.id, type(e).__name__, e))
        expected, observed, passed = None, 'error: {}: {}'.format(type(e).__name__, e), False
    elapsed = time.perf_counter() - start
    return CheckRecord(check.id, check.parameters, expected, observed, bool(passed), elapsed)


def run_suite(name, seed=0, jobs=1, count=None, primes=None, dense_rationals=False):
    """
    Runs a verification suite, and returns its Report.

    Args:

    * name: A key of `SUITES`.
    * seed: The seed of all randomized checks.
    * jobs: The number of worker processes. Records are in check order, whatever the number of jobs.
    * count: If set, overrides the number of random instances of each randomized check.
    * primes: The primes of the degree-factorial suite.
    * dense_rationals: Whether random coordinates have denominators other than 1.
    """
    options = Options(name, seed, count, tuple(primes or DEFAULT_PRIMES), dense_rationals)
    checks = SUITES[name](options)
    logger.info('Running {} checks of suite {} with {} jobs'.format(len(checks), name, jobs))
    if jobs > 1 and len(checks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            records = list(executor.map(_execute, checks))
    else:
        records = [_execute(check) for check in checks]
    return Report(name, records)


def _batches(options, key, default, size):
    """
    Yields `(id, seed, count)` for each batch of random instances.
    """
    total = default if options.count is None else options.count
    for index, start in enumerate(range(0, total, size)):
        yield ('{}-{:03d}'.format(key, index), '{}:{}:{}:{}'.format(options.seed, options.suite, key, index),
               min(size, total - start))


def random_rational(rng, dense=False):
    """
    Returns a random rational with a numerator in [-100, 100], and a denominator of 1, or in [1, 100] if `dense`.
    """
    return Fraction(rng.randint(-100, 100), rng.randint(1, 100) if dense else 1)


def random_configuration(rng, d, n, dense=False):
    return PointConfiguration([[random_rational(rng, dense) for _ in range(d)] for _ in range(n)])


def random_complex(rng, max_vertices=4):
    """
    Returns a complex on 1 to `max_vertices` vertices, each of which is in some face.
    """
    n = rng.randint(1, max_vertices)
    faces = [[v for v in range(n) if rng.random() < 0.5] for _ in range(rng.randint(1, 3))]
    faces.extend([v] for v in range(n))
    return SimplicialComplex(n, faces)


def _connectivity(value):
    return 'all' if value == ALL else value


def _same(expected, observed):
    return expected, observed, expected == observed


# chessboard-connectivity

def _chessboard_connectivity(m, n):
    nu = min(m, n, (m + n + 1) // 3) - 2
    observed = homological_connectivity(chessboard(m, n), max_degree=max(nu, 0))
    return OrderedDict([('at_least', nu)]), _connectivity(observed), observed >= nu


def _chessboard_homology(m, n, betti):
    summary = homology(chessboard(m, n))
    expected = OrderedDict([('betti', betti), ('torsion_free', True)])
    observed = OrderedDict([('betti', summary.betti), ('torsion_free', summary.is_torsion_free())])
    return _same(expected, observed)


def chessboard_connectivity_suite(options):
    checks = [
        Check('homology-2x3', _chessboard_homology, {'m': 2, 'n': 3, 'betti': [1, 1]}),
        Check('homology-3x4', _chessboard_homology, {'m': 3, 'n': 4, 'betti': [1, 2, 1]}),
    ]
    for m in range(1, 8):
        for n in range(1, 8):
            checks.append(Check('chessboard-{}x{}'.format(m, n), _chessboard_connectivity, {'m': m, 'n': n}))
    return checks


# deleted-join-iso

def _deleted_join_of_join(seed):
    rng = random.Random(seed)
    K, L = random_complex(rng), random_complex(rng)
    r = rng.choice([2, 3])
    left = deleted_join(join(K, L), r)
    right = join(deleted_join(K, r), deleted_join(L, r))
    observed = OrderedDict([
        ('r', r),
        ('facets', [len(K), len(L)]),
        ('isomorphic', are_isomorphic(left, right) is not None),
    ])
    return True, observed, observed['isomorphic']


def _deleted_join_of_simplex(N, r, k):
    K = deleted_join(full_simplex(N), r, k)
    factor = points(r) if k == 2 else skeleton(full_simplex(r - 1), k - 2)
    expected = OrderedDict([
        ('vertices', r * (N + 1)),
        ('dimension', (k - 1) * (N + 1) - 1),
        ('isomorphic', True),
    ])
    observed = OrderedDict([
        ('vertices', len(K.vertices)),
        ('dimension', K.dimension),
        ('isomorphic', are_isomorphic(K, join_all([factor] * (N + 1))) is not None),
    ])
    return _same(expected, observed)


def _facet_stabilizers(N, r):
    K = deleted_join(full_simplex(N), r)
    action = K.actions['symmetric']
    fixed = fixed_full = several_empty = 0
    for facet in K.facets:
        copies = {K.labels[v][0] for v in facet}
        stabilized = any(action.fixes_pointwise(g, facet) for g in action.elements()[1:])
        fixed += stabilized
        if len(copies) == r:
            fixed_full += stabilized
        # A permutation fixes a facet pointwise exactly when it only permutes empty constituents.
        several_empty += r - len(copies) >= 2
    expected = OrderedDict([
        ('automorphism', True),
        ('order', factorial(r)),
        ('fixed_full_facets', 0),
        ('fixed_facets', several_empty),
    ])
    observed = OrderedDict([
        ('automorphism', action.is_automorphism_of(K)),
        ('order', action.order),
        ('fixed_full_facets', fixed_full),
        ('fixed_facets', fixed),
    ])
    return _same(expected, observed)


def deleted_join_iso_suite(options):
    checks = []
    total = 50 if options.count is None else options.count
    for index in range(total):
        seed = '{}:{}:{}'.format(options.seed, options.suite, index)
        checks.append(Check('join-{:03d}'.format(index), _deleted_join_of_join, {'seed': seed}))
    for N in range(4):
        for r in (2, 3):
            checks.append(Check('simplex-N{}-r{}'.format(N, r), _deleted_join_of_simplex, {'N': N, 'r': r, 'k': 2}))
    for N in range(3):
        checks.append(Check('simplex-N{}-r3-k3'.format(N), _deleted_join_of_simplex, {'N': N, 'r': 3, 'k': 3}))
    for N in range(1, 4):
        for r in (2, 3):
            checks.append(Check('free-N{}-r{}'.format(N, r), _facet_stabilizers, {'N': N, 'r': r}))
    return checks


# deleted-product-connectivity

def _deleted_product(N, r):
    C = deleted_product_chain(full_simplex(N), r)
    C.check()
    summary = homology(C).reduced()
    top = N - r + 1
    vanishing = -1
    while vanishing < N - r and summary.vanishes(vanishing + 1):
        vanishing += 1
    expected = OrderedDict([
        ('vanishing_through', N - r),
        ('top_torsion', []),
        ('top_cells', sum((-1) ** j * comb(r, j) * (r - j) ** (N + 1) for j in range(r + 1))),
    ])
    observed = OrderedDict([
        ('vanishing_through', vanishing),
        ('top_torsion', list(summary[top].torsion)),
        ('top_cells', C.rank(top)),
    ])
    return _same(expected, observed)


def deleted_product_connectivity_suite(options):
    checks = []
    for r in (2, 3, 4):
        for N in range(r, 9):
            if deleted_product_cell_count(N + 1, r) <= DELETED_PRODUCT_CELL_LIMIT:
                checks.append(Check('product-N{}-r{}'.format(N, r), _deleted_product, {'N': N, 'r': r}))
    return checks


# degree-factorial

def _degree_factorial(p):
    f, K, L = chessboard_column_map(p)
    degree = simplicial_map_degree(f, K, L, fundamental_cycle_chessboard(p), fundamental_cycle_sphere(p - 1))
    expected = OrderedDict([('abs_degree', factorial(p - 1)), ('residue', p - 1)])
    observed = OrderedDict([('degree', degree), ('abs_degree', abs(degree)), ('residue', abs(degree) % p)])
    passed = observed['abs_degree'] == expected['abs_degree'] and observed['residue'] == expected['residue']
    return expected, observed, passed


def _identity_degree():
    L = skeleton(full_simplex(2), 1)
    z = fundamental_cycle_sphere(2)
    return _same(1, simplicial_map_degree(list(range(3)), L, L, z, z))


def _composition_degree(p):
    f, K, L = chessboard_column_map(p)
    zK, zL = fundamental_cycle_chessboard(p), fundamental_cycle_sphere(p - 1)
    g = [1, 0] + list(range(2, p))
    first = simplicial_map_degree(f, K, L, zK, zL)
    second = simplicial_map_degree(g, L, L, zL, zL)
    composite = simplicial_map_degree([g[w] for w in f], K, L, zK, zL)
    return _same(first * second, composite)


def _chessboard_generator(n):
    try:
        observed = is_top_generator(chessboard(n - 1, n), fundamental_cycle_chessboard(n))
    except (NotACycle, NotAGenerator) as e:
        observed = 'error: {}'.format(e)
    return _same(True, observed)


def degree_factorial_suite(options):
    checks = [Check('degree-p{}'.format(p), _degree_factorial, {'p': p}) for p in options.primes]
    checks.extend([
        Check('identity', _identity_degree, {}),
        Check('composition-p3', _composition_degree, {'p': 3}),
        Check('generator-p3', _chessboard_generator, {'n': 3}),
    ])
    return checks


# radon-random

def _radon_batch(seed, count, dense):
    rng = random.Random(seed)
    verified = 0
    for _ in range(count):
        d = rng.randint(1, 5)
        P = random_configuration(rng, d, d + 2, dense)
        if radon_partition(P).is_valid(P):
            verified += 1
        else:
            logger.warning('Radon certificate does not verify for {}'.format(P.points))
    return _same(count, verified)


def radon_random_suite(options):
    return [Check(id_, _radon_batch, {'seed': seed, 'count': count, 'dense': options.dense_rationals})
            for id_, seed, count in _batches(options, 'batch', 1000, 50)]


# tverberg-random

def _tverberg_batch(seed, d, r, count, dense):
    rng = random.Random(seed)
    verified = 0
    for _ in range(count):
        P = random_configuration(rng, d, (d + 1) * (r - 1) + 1, dense)
        certificate = tverberg_search(P, r)
        if certificate is not None and certificate.is_valid(P):
            verified += 1
        else:
            logger.warning('No verified Tverberg partition into {} parts for {}'.format(r, P.points))
    return _same(count, verified)


def _line_agreement(r, first):
    """
    Compares the line construction with the exhaustive search on every sequence of 2r - 1 values in {0, ..., 3} that
    starts with `first`.
    """
    total = agreed = 0
    for rest in product(range(4), repeat=2 * r - 2):
        values = (first,) + rest
        P = PointConfiguration([(value,) for value in values])
        total += 1
        if tverberg_line(values, r).is_valid(P) and tverberg_search(P, r) is not None:
            agreed += 1
    return _same(total, agreed)


def _radon_agreement(seed, count, dense):
    rng = random.Random(seed)
    agreed = 0
    for _ in range(count):
        d = rng.randint(1, 3)
        P = random_configuration(rng, d, d + 2, dense)
        if radon_partition(P).is_valid(P) and tverberg_search(P, 2) is not None:
            agreed += 1
    return _same(count, agreed)


def tverberg_random_suite(options):
    checks = []
    for d, r in ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)):
        for id_, seed, count in _batches(options, 'd{}-r{}'.format(d, r), 100, 25):
            checks.append(Check(id_, _tverberg_batch, {
                'seed': seed, 'd': d, 'r': r, 'count': count, 'dense': options.dense_rationals}))
    for r in (2, 3, 4):
        for first in range(4):
            checks.append(Check('line-r{}-{}'.format(r, first), _line_agreement, {'r': r, 'first': first}))
    for id_, seed, count in _batches(options, 'radon', 100, 25):
        checks.append(Check(id_, _radon_agreement, {'seed': seed, 'count': count, 'dense': options.dense_rationals}))
    return checks


# witness-none

WITNESS_CASES = ((1, 3), (1, 4), (2, 2), (2, 3), (3, 2))


def _witness_none(d, r):
    return _same(True, verify_no_partition(witness_configuration(d, r), r))


def _witness_plus_one(d, r):
    P = witness_configuration(d, r)
    P = PointConfiguration(list(P) + [tuple(Fraction(1, d + 2) for _ in range(d))])
    certificate = tverberg_search(P, r)
    return _same(True, certificate is not None and certificate.is_valid(P))


def witness_none_suite(options):
    checks = [Check('witness-d{}-r{}'.format(d, r), _witness_none, {'d': d, 'r': r}) for d, r in WITNESS_CASES]
    checks.extend(Check('witness-plus-one-d{}-r{}'.format(d, r), _witness_plus_one, {'d': d, 'r': r})
                  for d, r in WITNESS_CASES)
    return checks


# colored and soberon

def satisfies(certificate, constraints):
    """
    Returns whether a certificate's parts respect the dimension, rainbow and equal-coefficient constraints.
    """
    if constraints.max_face_dimension is not None:
        if any(len(part) > constraints.max_face_dimension + 1 for part in certificate.parts):
            return False
    coloring = constraints.rainbow
    if coloring is not None and not all(coloring.is_rainbow(part) for part in certificate.parts):
        return False
    if constraints.equal_coefficients:
        for color_class in coloring:
            weights = set()
            for part, coefficients in zip(certificate.parts, certificate.coefficients):
                weights.add(next((c for v, c in zip(part, coefficients) if v in color_class), Fraction(0)))
            if len(weights) > 1:
                return False
    return True


def _colored_batch(seed, d, r, sizes, count, dense, max_dim=None, equal=False):
    """
    Searches random configurations whose vertices are randomly split into color classes of the given sizes (no
    coloring if `sizes` is empty).
    """
    rng = random.Random(seed)
    verified = 0
    for _ in range(count):
        n = sum(sizes) if sizes else (d + 2) * (r - 1) + 1
        P = random_configuration(rng, d, n, dense)
        coloring = None
        if sizes:
            vertices = list(range(n))
            rng.shuffle(vertices)
            classes = []
            for size in sizes:
                classes.append(vertices[:size])
                vertices = vertices[size:]
            coloring = Coloring(classes)
        constraints = SearchConstraints(max_face_dimension=max_dim, rainbow=coloring, equal_coefficients=equal)
        certificate = tverberg_search(P, r, constraints)
        if certificate is not None and certificate.is_valid(P) and satisfies(certificate, constraints):
            verified += 1
        else:
            logger.warning('No verified constrained partition for {} with {}'.format(P.points, constraints))
    return _same(count, verified)


def _lovasz_example():
    P = PointConfiguration([(1, 0), (-1, 0), (0, 1), (0, -1), (2, 2), (-2, -2)])
    constraints = SearchConstraints(rainbow=Coloring([[0, 1], [2, 3], [4, 5]]))
    certificate = tverberg_search(P, 2, constraints)
    return _same(True, certificate is not None and certificate.is_valid(P) and satisfies(certificate, constraints))


def _rainbow_isomorphism(sizes):
    classes = []
    start = 0
    for size in sizes:
        classes.append(range(start, start + size))
        start += size
    K = deleted_join(rainbow_complex(Coloring(classes)), 2)
    target = join_all([chessboard(size, 2) for size in sizes])
    return _same(True, are_isomorphic(K, target) is not None)


def _audit(d, r, k, key, holds, colors=None, class_size=None):
    return _same(holds, counting_audit(d, r, k, colors=colors, class_size=class_size)[key])


def colored_suite(options):
    dense = options.dense_rationals
    checks = [Check('lovasz-example', _lovasz_example, {})]
    for d in (1, 2, 3):
        for id_, seed, count in _batches(options, 'lovasz-d{}'.format(d), 100, 25):
            checks.append(Check(id_, _colored_batch, {
                'seed': seed, 'd': d, 'r': 2, 'sizes': [2] * (d + 1), 'count': count, 'dense': dense}))
    cases = (
        ('weak-colored', 2, 2, [3, 2, 2], None),
        ('optimal-colored', 2, 3, [2, 2, 2, 1], None),
        ('van-kampen-flores', 2, 2, [], 1),
        ('colored-van-kampen-flores', 1, 2, [3, 2], None),
    )
    for key, d, r, sizes, max_dim in cases:
        for id_, seed, count in _batches(options, key, 100, 25):
            checks.append(Check(id_, _colored_batch, {
                'seed': seed, 'd': d, 'r': r, 'sizes': sizes, 'count': count, 'dense': dense, 'max_dim': max_dim}))
    for sizes in ([2, 2], [2, 2, 2], [3, 3], [3, 2, 2]):
        checks.append(Check('rainbow-join-{}'.format('-'.join(map(str, sizes))), _rainbow_isomorphism,
                            {'sizes': sizes}))
    audits = (
        (2, 2, 1, 'skeleton_pigeonhole', True, None, None),
        (2, 3, 2, 'skeleton_pigeonhole', True, None, None),
        (2, 3, 1, 'skeleton_pigeonhole', False, None, None),
        (2, 3, 1, 'k_meets_bound', False, None, None),
        (2, 3, 1, 'color_pigeonhole', True, None, None),
        (2, 3, 1, 'color_pigeonhole', True, None, 5),
        (2, 3, 1, 'color_pigeonhole', False, None, 6),
        (1, 2, 1, 'colored_pigeonhole', True, 2, None),
    )
    for d, r, k, key, holds, colors, class_size in audits:
        id_ = 'audit-d{}-r{}-k{}-{}'.format(d, r, k, key)
        if class_size is not None:
            id_ += '-class{}'.format(class_size)
        checks.append(Check(id_, _audit, {
            'd': d, 'r': r, 'k': k, 'key': key, 'holds': holds, 'colors': colors,
            'class_size': class_size}))
    return checks


def _soberon_example():
    P = PointConfiguration([(0,), (2,), (1,), (3,)])
    certificate = tverberg_search(P, 2, SearchConstraints(rainbow=Coloring([[0, 1], [2, 3]]), equal_coefficients=True))
    expected = OrderedDict([
        ('parts', [[0, 3], [1, 2]]),
        ('point', ['3/2']),
        ('coefficients', [['1/2', '1/2'], ['1/2', '1/2']]),
    ])
    return _same(expected, certificate.as_dict() if certificate else None)


def soberon_suite(options):
    checks = [Check('example', _soberon_example, {})]
    for d, r in ((1, 2), (2, 2), (1, 3)):
        classes = (r - 1) * d + 1
        for id_, seed, count in _batches(options, 'd{}-r{}'.format(d, r), 50, 25):
            checks.append(Check(id_, _colored_batch, {
                'seed': seed, 'd': d, 'r': r, 'sizes': [r] * classes, 'count': count,
                'dense': options.dense_rationals, 'equal': True}))
    return checks


# collapse

def _collapse(r):
    result, trace = equivariant_collapse_chessboard(r)
    full = homology(chessboard(r, r))
    expected = OrderedDict([
        ('dimension', r - 2),
        ('steps', factorial(r)),
        ('homology', full.as_list()[:r - 1]),
        ('top_vanishes', True),
        ('row_invariant', True),
    ])
    observed = OrderedDict([
        ('dimension', result.dimension),
        ('steps', len(trace)),
        ('homology', homology(result).as_list()),
        ('top_vanishes', full.vanishes(r - 1)),
        ('row_invariant', result.actions['symmetric'].is_automorphism_of(result)),
    ])
    return _same(expected, observed)


def collapse_suite(options):
    return [Check('collapse-r{}'.format(r), _collapse, {'r': r}) for r in (2, 3, 4, 5)]


# quotient-euler

def _quotient_euler(k, p):
    K = chessboard(k, p)
    action = K.actions['cyclic']
    Q = quotient_complex(K, action)
    expected = OrderedDict([('euler', euler_characteristic(K)), ('fixes_no_simplex', True)])
    observed = OrderedDict([('euler', p * euler_characteristic(Q)), ('fixes_no_simplex', action.fixes_no_simplex(K))])
    return _same(expected, observed)


def _quotient_not_free():
    K = chessboard(2, 3)
    action = GroupAction('cyclic', [tuple(range(K.vertex_count))], order=3)
    try:
        quotient_complex(K, action)
        observed = None
    except NotFree:
        observed = 'NotFree'
    return _same('NotFree', observed)


def quotient_euler_suite(options):
    checks = [Check('quotient-k{}-p{}'.format(k, p), _quotient_euler, {'k': k, 'p': p})
              for p in (3, 5) for k in range(1, p)]
    checks.append(Check('not-free', _quotient_not_free, {}))
    return checks


# snf-props

SAMPLE_COMPLEXES = OrderedDict([
    ('chessboard-3x4', lambda: chessboard(3, 4)),
    ('chessboard-3x5', lambda: chessboard(3, 5)),
    ('chessboard-4x4', lambda: chessboard(4, 4)),
    ('deleted-join-simplex-2-r3', lambda: deleted_join(full_simplex(2), 3)),
    ('deleted-join-simplex-2-r3-k3', lambda: deleted_join(full_simplex(2), 3, 3)),
    ('subdivided-chessboard-2x3', lambda: barycentric_subdivision(chessboard(2, 3))),
    ('collapsed-chessboard-4', lambda: equivariant_collapse_chessboard(4)[0]),
    ('projective-plane', lambda: SimplicialComplex(6, PROJECTIVE_PLANE)),
])


def _snf_batch(seed, count):
    rng = random.Random(seed)
    verified = 0
    for _ in range(count):
        rows, cols = rng.randint(1, 8), rng.randint(1, 8)
        M = IntMatrix.from_dense([[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)])
        D, U, V, Uinv, Vinv = smith_normal_form(M, return_inverses=True)
        diagonal = D.diagonal()
        nonzero = [d for d in diagonal if d]
        if (U @ M @ V == D and D.nnz == len(nonzero) and diagonal[:len(nonzero)] == nonzero and
                all(d > 0 for d in nonzero) and all(b % a == 0 for a, b in zip(nonzero, nonzero[1:])) and
                U @ Uinv == IntMatrix.identity(rows) and V @ Vinv == IntMatrix.identity(cols) and
                abs(determinant(U)) == 1 and abs(determinant(V)) == 1 and
                elementary_divisors(M, method='sparse') == nonzero == elementary_divisors(M, method='dense')):
            verified += 1
        else:
            logger.warning('Smith normal form postconditions fail for {}'.format(M.triplets()))
    return _same(count, verified)


def _boundary_squares(name):
    if name == 'deleted-product-simplex-4-r3':
        C = deleted_product_chain(full_simplex(4), 3)
    else:
        C = ChainComplex.from_complex(SAMPLE_COMPLEXES[name]())
    C.check()
    return _same(True, True)


def _euler_betti(name):
    K = SAMPLE_COMPLEXES[name]()
    integral = homology(K)
    torsion = [t for group in integral for t in group.torsion]
    prime = next(p for p in (2, 3, 5, 7, 11, 13) if not any(t % p == 0 for t in torsion))
    modular = homology(K, coefficients=prime)
    expected = OrderedDict([('euler', euler_characteristic(K)), ('betti', integral.betti)])
    observed = OrderedDict([('euler', betti_euler_characteristic(K, modular)), ('betti', modular.betti)])
    return _same(expected, observed)


def snf_props_suite(options):
    checks = [Check(id_, _snf_batch, {'seed': seed, 'count': count})
              for id_, seed, count in _batches(options, 'snf', 500, 50)]
    for name in list(SAMPLE_COMPLEXES) + ['deleted-product-simplex-4-r3']:
        checks.append(Check('boundary-{}'.format(name), _boundary_squares, {'name': name}))
    for name in SAMPLE_COMPLEXES:
        checks.append(Check('euler-{}'.format(name), _euler_betti, {'name': name}))
    return checks


# lp-oracle

def _lp_batch(seed, count):
    rng = random.Random(seed)
    agreed = 0
    for _ in range(count):
        rows, cols = rng.randint(1, 4), rng.randint(1, 6)
        A = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        b = [rng.randint(-3, 3) for _ in range(rows)]
        P = FeasibilityProblem(A, b, nonnegative=[j for j in range(cols) if rng.random() < 0.7])
        solution, oracle = feasible(P), feasible_by_enumeration(P)
        if ((solution is None) == (oracle is None) and (solution is None or P.is_solution(solution)) and
                (oracle is None or P.is_solution(oracle))):
            agreed += 1
        else:
            logger.warning('Simplex and enumeration disagree on {} with A={} b={}'.format(P, A, b))
    return _same(count, agreed)


def _beale(bound):
    return _same(Fraction(bound) >= Fraction(-5, 4), feasible(beale_problem(Fraction(bound))) is not None)


def lp_oracle_suite(options):
    checks = [Check(id_, _lp_batch, {'seed': seed, 'count': count})
              for id_, seed, count in _batches(options, 'lp', 200, 50)]
    for bound in (Fraction(-2), Fraction(-5, 4), Fraction(-1), Fraction(0)):
        checks.append(Check('beale-{}'.format(format_rational(bound)), _beale, {'bound': format_rational(bound)}))
    return checks


SUITES = OrderedDict([
    ('chessboard-connectivity', chessboard_connectivity_suite),
    ('deleted-join-iso', deleted_join_iso_suite),
    ('deleted-product-connectivity', deleted_product_connectivity_suite),
    ('degree-factorial', degree_factorial_suite),
    ('radon-random', radon_random_suite),
    ('tverberg-random', tverberg_random_suite),
    ('witness-none', witness_none_suite),
    ('colored', colored_suite),
    ('soberon', soberon_suite),
    ('collapse', collapse_suite),
    ('quotient-euler', quotient_euler_suite),
    ('snf-props', snf_props_suite),
    ('lp-oracle', lp_oracle_suite),
])
