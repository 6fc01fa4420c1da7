import json
from collections import OrderedDict
from fractions import Fraction

SIMPLICIAL_HEADER = 'simplicial v1'
POINTS_HEADER = 'points v1'
COLORS_HEADER = 'colors v1'

# Fill ratio at or above which integer matrices are reduced densely.
DENSE_FILL = 0.1

ISOMORPHISM_VERTEX_LIMIT = 40
ENUMERATION_LIMIT = 10 ** 7
DELETED_PRODUCT_CELL_LIMIT = 20000

# Sentinel returned by `homological_connectivity` if every reduced group vanishes.
ALL = float('inf')


def format_rational(value):
    """
    Returns a rational as a `num/den` string, or `num` if the denominator is 1.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '{}/{}'.format(value.numerator, value.denominator)


def dump_json(data, f):
    """
    Writes JSON data to a file-like object, with a fixed layout and a trailing newline.
    """
    json.dump(data, f, indent=2, separators=(',', ': '))
    f.write('\n')


def verify_all(seed=0, jobs=1, count=None, **kwargs):
    """
    Runs every verification suite in order, and returns an ordered mapping of suite names to reports.

    Args:

    * seed: The seed of all randomized checks.
    * jobs: The number of worker processes.
    * count: If set, overrides the number of random instances of each randomized suite.
    """
    from tverbergkit.suites import SUITES, run_suite

    reports = OrderedDict()
    for name in SUITES:
        reports[name] = run_suite(name, seed=seed, jobs=jobs, count=count, **kwargs)
    return reports
