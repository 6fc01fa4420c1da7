"""
Readers and writers of the text and JSON formats.

Text formats ignore blank lines and lines starting with `#`. Readers raise MalformedInput with the 1-based number of
the offending line.
"""
from collections import OrderedDict
from fractions import Fraction

from tverbergkit import COLORS_HEADER, POINTS_HEADER, SIMPLICIAL_HEADER, format_rational
from tverbergkit.exceptions import InvalidComplex, InvalidConfiguration, MalformedInput
from tverbergkit.models import Coloring, GroupAction, PointConfiguration, SimplicialComplex
from tverbergkit.snf import IntMatrix


def _lines(f):
    """
    Yields the line number and the stripped content of each significant line.
    """
    for lineno, line in enumerate(f, 1):
        line = line.strip()
        if line and not line.startswith('#'):
            yield lineno, line


def _integers(line, lineno):
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise MalformedInput('expected integers, got {}'.format(repr(line)), lineno)


def parse_rational(token, lineno=None):
    """
    Returns a rational from a `num/den` or `num` token.
    """
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise MalformedInput('expected a rational, got {}'.format(repr(token)), lineno)


def _header(lines, expected):
    """
    Returns the line number and the fields that follow the expected header.
    """
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise MalformedInput('missing "{}" header'.format(expected), 1)
    if line != expected and not line.startswith(expected + ' '):
        raise MalformedInput('expected "{}" header, got {}'.format(expected, repr(line)), lineno)
    return lineno, line[len(expected):].split()


def read_simplicial(f):
    """
    Reads a complex: a `simplicial v1 <vertex_count>` header, then one facet per line.
    """
    lines = _lines(f)
    lineno, fields = _header(lines, SIMPLICIAL_HEADER)
    if len(fields) != 1:
        raise MalformedInput('expected a vertex count', lineno)
    vertex_count = _integers(fields[0], lineno)[0]

    facets = []
    for lineno, line in lines:
        facet = _integers(line, lineno)
        if any(not 0 <= v < vertex_count for v in facet) or len(set(facet)) != len(facet):
            raise MalformedInput('facet {} is not a set of vertices below {}'.format(facet, vertex_count), lineno)
        facets.append(facet)
    return SimplicialComplex(vertex_count, facets)


def write_simplicial(K, f):
    """
    Writes a complex's header and its nonempty facets in lexicographic order.
    """
    f.write('{} {}\n'.format(SIMPLICIAL_HEADER, K.vertex_count))
    for facet in K.facets:
        if facet:
            f.write(' '.join(str(v) for v in facet) + '\n')


def complex_as_dict(K):
    """
    Returns the JSON mirror of a complex.
    """
    data = OrderedDict([
        ('vertex_count', K.vertex_count),
        ('facets', [list(facet) for facet in K.facets if facet]),
    ])
    if K.labels is not None:
        data['labels'] = [list(label) if isinstance(label, tuple) else label for label in K.labels]
    if K.actions:
        data['action'] = OrderedDict((name, OrderedDict([
            ('kind', action.kind),
            ('generators', [list(generator) for generator in action.generators]),
        ])) for name, action in K.actions.items())
    return data


def complex_from_dict(data):
    """
    Returns a complex from its JSON mirror.
    """
    try:
        labels = data.get('labels')
        if labels is not None:
            labels = [tuple(label) if isinstance(label, list) else label for label in labels]
        actions = OrderedDict((name, GroupAction(action['kind'], action['generators']))
                              for name, action in data.get('action', {}).items())
        return SimplicialComplex(data['vertex_count'], data['facets'], labels=labels, actions=actions)
    except (KeyError, TypeError, InvalidComplex) as e:
        raise MalformedInput('invalid complex: {}'.format(e))


def read_points(f):
    """
    Reads a point configuration: a `points v1 <d> <n>` header, then n lines of d rationals.
    """
    lines = _lines(f)
    lineno, fields = _header(lines, POINTS_HEADER)
    if len(fields) != 2:
        raise MalformedInput('expected a dimension and a number of points', lineno)
    d, n = _integers(' '.join(fields), lineno)

    points = []
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != d:
            raise MalformedInput('expected {} coordinates, got {}'.format(d, len(tokens)), lineno)
        points.append([parse_rational(token, lineno) for token in tokens])
    if len(points) != n:
        raise MalformedInput('expected {} points, got {}'.format(n, len(points)), lineno)
    try:
        return PointConfiguration(points)
    except InvalidConfiguration as e:
        raise MalformedInput(str(e), lineno)


def write_points(P, f):
    f.write('{} {} {}\n'.format(POINTS_HEADER, P.dimension, len(P)))
    for point in P:
        f.write(' '.join(format_rational(c) for c in point) + '\n')


def read_colors(f):
    """
    Reads a coloring: a `colors v1` header, then one color class of vertex indices per line.
    """
    lines = _lines(f)
    lineno, fields = _header(lines, COLORS_HEADER)
    if fields:
        raise MalformedInput('unexpected fields after header', lineno)
    classes = []
    for lineno, line in lines:
        classes.append(_integers(line, lineno))
    try:
        return Coloring(classes)
    except InvalidConfiguration as e:
        raise MalformedInput(str(e), lineno)


def write_colors(coloring, f):
    f.write(COLORS_HEADER + '\n')
    for color_class in coloring:
        f.write(' '.join(str(v) for v in color_class) + '\n')


def write_triplets(rows, cols, triplets, f):
    """
    Writes a matrix's dimensions, then one `row col value` line per nonzero entry. Values may be rational.
    """
    f.write('{} {}\n'.format(rows, cols))
    for i, j, value in triplets:
        f.write('{} {} {}\n'.format(i, j, format_rational(value)))


def read_triplets(f):
    """
    Reads a matrix in triplet format, and returns its dimensions and a mapping of `(row, col)` to rational values.
    """
    lines = _lines(f)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise MalformedInput('missing dimensions', 1)
    dimensions = _integers(line, lineno)
    if len(dimensions) != 2:
        raise MalformedInput('expected two dimensions', lineno)
    rows, cols = dimensions

    entries = OrderedDict()
    for lineno, line in lines:
        tokens = line.split()
        if len(tokens) != 3:
            raise MalformedInput('expected "row col value"', lineno)
        i, j = _integers(' '.join(tokens[:2]), lineno)
        if not (0 <= i < rows and 0 <= j < cols):
            raise MalformedInput('entry ({}, {}) is outside a {}x{} matrix'.format(i, j, rows, cols), lineno)
        entries[(i, j)] = parse_rational(tokens[2], lineno)
    return rows, cols, entries


def read_int_matrix(f):
    """
    Reads an integer matrix in triplet format.
    """
    rows, cols, entries = read_triplets(f)
    for (i, j), value in entries.items():
        if value.denominator != 1:
            raise MalformedInput('entry ({}, {}) is not an integer'.format(i, j))
    return IntMatrix(rows, cols, entries)


def write_int_matrix(M, f):
    write_triplets(M.rows, M.cols, M.triplets(), f)
