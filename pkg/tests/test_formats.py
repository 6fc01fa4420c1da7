from collections import OrderedDict
from fractions import Fraction
from io import StringIO

import pytest

from tverbergkit.complex import chessboard
from tverbergkit.exceptions import MalformedInput
from tverbergkit.formats import (complex_as_dict, complex_from_dict, parse_rational, read_colors, read_int_matrix,
                                 read_points, read_simplicial, read_triplets, write_colors, write_int_matrix,
                                 write_points, write_simplicial)
from tverbergkit.models import Coloring, PointConfiguration, SimplicialComplex
from tverbergkit.snf import IntMatrix


def test_read_simplicial():
    obj = read_simplicial(StringIO('# A triangle and a point\nsimplicial v1 4\n0 1 2\n\n3\n'))

    assert obj == SimplicialComplex(4, [(0, 1, 2), (3,)])


def test_write_simplicial():
    f = StringIO()
    write_simplicial(SimplicialComplex(4, [(3,), (2, 1, 0)]), f)

    assert f.getvalue() == 'simplicial v1 4\n0 1 2\n3\n'


def test_write_simplicial_empty():
    f = StringIO()
    write_simplicial(SimplicialComplex(0, []), f)

    assert f.getvalue() == 'simplicial v1 0\n'
    assert read_simplicial(StringIO(f.getvalue())) == SimplicialComplex(0, [])


@pytest.mark.parametrize('content,message', [
    ('', 'line 1: missing "simplicial v1" header'),
    ('points v1 2 3\n', 'line 1: expected "simplicial v1" header, got \'points v1 2 3\''),
    ('simplicial v1\n', 'line 1: expected a vertex count'),
    ('simplicial v1 3\n0 5\n', 'line 2: facet [0, 5] is not a set of vertices below 3'),
    ('simplicial v1 3\n\n# comment\n0 0\n', 'line 4: facet [0, 0] is not a set of vertices below 3'),
    ('simplicial v1 3\n0 a\n', "line 2: expected integers, got '0 a'"),
])
def test_read_simplicial_malformed(content, message):
    with pytest.raises(MalformedInput) as excinfo:
        read_simplicial(StringIO(content))

    assert str(excinfo.value) == message


def test_complex_as_dict():
    data = complex_as_dict(chessboard(1, 2))

    assert data == OrderedDict([
        ('vertex_count', 2),
        ('facets', [[0], [1]]),
        ('labels', [[1, 1], [1, 2]]),
        ('action', OrderedDict([
            ('cyclic', OrderedDict([('kind', 'cyclic'), ('generators', [[1, 0]])])),
            ('symmetric', OrderedDict([('kind', 'symmetric'), ('generators', [[1, 0]])])),
        ])),
    ])


def test_complex_from_dict():
    K = chessboard(2, 3)

    obj = complex_from_dict(complex_as_dict(K))

    assert obj == K
    assert obj.labels == K.labels
    assert list(obj.actions) == ['cyclic', 'symmetric']
    assert obj.actions['cyclic'].generators == K.actions['cyclic'].generators


def test_complex_from_dict_minimal():
    assert complex_from_dict({'vertex_count': 3, 'facets': [[0, 1], [2]]}) == SimplicialComplex(3, [(0, 1), (2,)])


@pytest.mark.parametrize('data,message', [
    ({'facets': []}, "invalid complex: 'vertex_count'"),
    ({'vertex_count': 2, 'facets': [[0, 2]]}, 'invalid complex: vertex 2 is not in range(2)'),
    ({'vertex_count': 2, 'facets': [[0, 1]], 'action': {'a': {'kind': 'dihedral', 'generators': [[1, 0]]}}},
     "invalid complex: unknown group kind 'dihedral'"),
])
def test_complex_from_dict_malformed(data, message):
    with pytest.raises(MalformedInput) as excinfo:
        complex_from_dict(data)

    assert str(excinfo.value) == message


def test_read_points():
    obj = read_points(StringIO('points v1 2 3\n0 0\n1/2 1\n\n-3 2\n'))

    assert obj == PointConfiguration([(0, 0), (Fraction(1, 2), 1), (-3, 2)])


def test_write_points():
    f = StringIO()
    write_points(PointConfiguration([(0, '1/2'), (-3, '4/2')]), f)

    assert f.getvalue() == 'points v1 2 2\n0 1/2\n-3 2\n'


@pytest.mark.parametrize('content,message', [
    ('points v1 2\n', 'line 1: expected a dimension and a number of points'),
    ('points v1 2 1\n0\n', 'line 2: expected 2 coordinates, got 1'),
    ('points v1 1 1\n1/0\n', "line 2: expected a rational, got '1/0'"),
    ('points v1 1 2\n0\n', 'line 2: expected 2 points, got 1'),
    ('points v1 1 0\n', 'line 1: a point configuration needs at least one point'),
])
def test_read_points_malformed(content, message):
    with pytest.raises(MalformedInput) as excinfo:
        read_points(StringIO(content))

    assert str(excinfo.value) == message
    assert excinfo.value.lineno == int(message.split(':')[0][5:])


def test_read_colors():
    obj = read_colors(StringIO('colors v1\n0 2\n1\n'))

    assert obj.classes == [(0, 2), (1,)]


def test_write_colors():
    f = StringIO()
    write_colors(Coloring([[2, 0], [1]]), f)

    assert f.getvalue() == 'colors v1\n0 2\n1\n'


@pytest.mark.parametrize('content,message', [
    ('colors v1 2\n', 'line 1: unexpected fields after header'),
    ('colors v1\n0 1\n1\n', 'line 3: vertex 1 is in more than one color class'),
])
def test_read_colors_malformed(content, message):
    with pytest.raises(MalformedInput) as excinfo:
        read_colors(StringIO(content))

    assert str(excinfo.value) == message


def test_parse_rational():
    assert parse_rational('3/6') == Fraction(1, 2)
    assert parse_rational('-4') == -4

    with pytest.raises(MalformedInput) as excinfo:
        parse_rational('x', 4)

    assert str(excinfo.value) == "line 4: expected a rational, got 'x'"


def test_write_int_matrix():
    f = StringIO()
    write_int_matrix(IntMatrix.from_dense([[2, 0], [0, -3]]), f)

    assert f.getvalue() == '2 2\n0 0 2\n1 1 -3\n'
    assert read_int_matrix(StringIO(f.getvalue())) == IntMatrix.from_dense([[2, 0], [0, -3]])


def test_read_triplets():
    rows, cols, entries = read_triplets(StringIO('2 3\n0 2 1/2\n1 0 -1\n'))

    assert (rows, cols) == (2, 3)
    assert entries == OrderedDict([((0, 2), Fraction(1, 2)), ((1, 0), -1)])


@pytest.mark.parametrize('content,message', [
    ('', 'line 1: missing dimensions'),
    ('1\n', 'line 1: expected two dimensions'),
    ('1 1\n1 0 3\n', 'line 2: entry (1, 0) is outside a 1x1 matrix'),
    ('1 1\n0 0\n', 'line 2: expected "row col value"'),
    ('1 1\n0 0 1/2\n', 'entry (0, 0) is not an integer'),
])
def test_read_int_matrix_malformed(content, message):
    with pytest.raises(MalformedInput) as excinfo:
        read_int_matrix(StringIO(content))

    assert str(excinfo.value) == message
