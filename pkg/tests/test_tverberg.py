import logging
from collections import OrderedDict
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tverbergkit.exceptions import BadArity, InconsistentConstraints, OverlappingParts, SizeExceeded
from tverbergkit.models import Coloring, PartitionCertificate, PointConfiguration, SearchConstraints
from tverbergkit.tverberg import (candidate_family_count, counting_audit, intersection_point, radon_partition,
                                  tverberg_line, tverberg_search, verify_no_partition, witness_configuration)

half = Fraction(1, 2)

configurations = st.integers(min_value=1, max_value=4).flatmap(lambda d: st.lists(
    st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=7), min_size=d, max_size=d),
    min_size=d + 2, max_size=d + 2))


def test_radon_partition():
    P = PointConfiguration([(0,), (1,), (2,)])

    assert radon_partition(P) == PartitionCertificate([(0, 2), (1,)], (1,), [(half, half), (1,)])


def test_radon_partition_square():
    certificate = radon_partition(fixture())

    assert certificate.parts == [(0, 1), (2, 3)]
    assert certificate.point == (half, half)
    assert certificate.coefficients == [(half, half), (half, half)]


def test_radon_partition_duplicate_points():
    P = PointConfiguration([(0, 0), (0, 0), (3, 7), (9, 1)])

    certificate = radon_partition(P)

    assert certificate.parts == [(0,), (1,)]
    assert certificate.point == (0, 0)
    assert certificate.is_valid(P)


def test_radon_partition_arity():
    with pytest.raises(BadArity) as excinfo:
        radon_partition(PointConfiguration([(0, 0), (1, 0), (0, 1)]))

    assert str(excinfo.value) == 'a Radon partition in dimension 2 needs 4 points, got 3'


@settings(max_examples=100, deadline=None)
@given(configurations)
def test_radon_partition_random(points):
    P = PointConfiguration(points)

    certificate = radon_partition(P)

    assert certificate.is_valid(P)
    assert len(certificate) == 2


def test_tverberg_line():
    assert tverberg_line([0, 1, 2], 2) == PartitionCertificate([(0, 2), (1,)], (1,), [(half, half), (1,)])


def test_tverberg_line_three_parts():
    certificate = tverberg_line([3, 1, 4, 1, 5], 3)

    assert certificate.parts == [(1, 4), (2, 3), (0,)]
    assert certificate.point == (3,)
    assert certificate.coefficients == [(half, half), (Fraction(2, 3), Fraction(1, 3)), (1,)]


def test_tverberg_line_constant():
    certificate = tverberg_line([0] * 5, 3)

    assert certificate.point == (0,)
    assert certificate.is_valid(PointConfiguration([(0,)] * 5))


def test_tverberg_line_arity():
    with pytest.raises(BadArity) as excinfo:
        tverberg_line([0, 1], 2)

    assert str(excinfo.value) == 'a Tverberg partition into 2 parts on a line needs 3 values, got 2'


def test_intersection_point():
    point, coefficients = intersection_point(fixture(), [(0, 1), (2, 3)])

    assert point == (half, half)
    assert coefficients == [(half, half), (half, half)]


def test_intersection_point_absent():
    P = PointConfiguration([(0,), (1,), (2,), (3,)])

    assert intersection_point(P, [(0, 1), (2, 3)]) is None


def test_intersection_point_witness():
    P = witness_configuration(2, 3)

    point, coefficients = intersection_point(P, [(0, 2, 4), (1, 3, 5)])

    assert PartitionCertificate([(0, 2, 4), (1, 3, 5)], point, coefficients).is_valid(P)


@pytest.mark.parametrize('parts,message', [
    ([(0, 1), (1, 2)], 'vertex 1 is in more than one part'),
    ([(0, 1), ()], 'parts must be nonempty'),
    ([(0, 7)], 'vertex 7 is not one of the 4 points'),
])
def test_intersection_point_overlapping(parts, message):
    with pytest.raises(OverlappingParts) as excinfo:
        intersection_point(fixture(), parts)

    assert str(excinfo.value) == message


def test_candidate_family_count():
    assert candidate_family_count(2, 2) == 1
    assert candidate_family_count(3, 2) == 6
    assert candidate_family_count(4, 2) == 25
    assert candidate_family_count(5, 3) == 65


def test_tverberg_search():
    P = PointConfiguration([(0,), (1,), (2,)])

    assert tverberg_search(P, 2) == radon_partition(P)
    assert tverberg_search(P, 2, SearchConstraints(max_face_dimension=0)) is None


def test_tverberg_search_coincident_points():
    P = PointConfiguration([(1, 1), (1, 1), (1, 1), (0, 0), (5, 0), (0, 5), (3, 3)])

    certificate = tverberg_search(P, 3)

    assert certificate.parts == [(0,), (1,), (2,)]
    assert certificate.point == (1, 1)


def test_tverberg_search_rainbow():
    P = PointConfiguration([(1, 0), (-1, 0), (0, 1), (0, -1), (2, 2), (-2, -2)])
    coloring = Coloring([[0, 1], [2, 3], [4, 5]])

    certificate = tverberg_search(P, 2, SearchConstraints(rainbow=coloring))

    assert certificate.is_valid(P)
    assert all(coloring.is_rainbow(part) for part in certificate.parts)


def test_tverberg_search_equal_coefficients(caplog):
    P = PointConfiguration([(0,), (2,), (1,), (3,)])
    constraints = SearchConstraints(rainbow=Coloring([[0, 1], [2, 3]]), equal_coefficients=True)

    with caplog.at_level(logging.INFO):
        certificate = tverberg_search(P, 2, constraints)

    assert certificate.as_dict() == OrderedDict([
        ('parts', [[0, 3], [1, 2]]),
        ('point', ['3/2']),
        ('coefficients', [['1/2', '1/2'], ['1/2', '1/2']]),
    ])
    assert caplog.records[-1].message == 'Searching 2 parts with one vertex of each of 2 colors'


def test_tverberg_search_equal_coefficients_relaxed(caplog):
    P = PointConfiguration([(0,), (5,), (7,), (0,)])
    constraints = SearchConstraints(rainbow=Coloring([[0, 3], [1], [2]]), equal_coefficients=True)

    with caplog.at_level(logging.INFO):
        certificate = tverberg_search(P, 2, constraints)

    assert certificate.parts == [(0,), (1, 2, 3)]
    assert certificate.point == (0,)
    assert certificate.coefficients == [(1,), (0, 0, 1)]
    assert caplog.records[-1].message == 'Relaxing equal-coefficient search to parts with missing colors'


def test_tverberg_search_errors():
    P = fixture()

    with pytest.raises(BadArity) as excinfo:
        tverberg_search(P, 1)

    assert str(excinfo.value) == 'a Tverberg partition needs at least 2 parts, got 1'

    with pytest.raises(InconsistentConstraints):
        tverberg_search(P, 2, SearchConstraints(equal_coefficients=True))


def test_witness_configuration():
    assert list(witness_configuration(2, 3)) == [(0, 0), (0, 0), (1, 0), (1, 0), (0, 1), (0, 1)]
    assert list(witness_configuration(1, 2)) == [(0,), (1,)]
    assert list(witness_configuration(3, 2)) == [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_verify_no_partition(caplog):
    with caplog.at_level(logging.INFO):
        assert verify_no_partition(witness_configuration(1, 2), 2)

    assert caplog.records[-1].message == 'Searching 1 candidate families of 2 points for 2 parts'

    assert verify_no_partition(witness_configuration(2, 3), 3)
    assert verify_no_partition(witness_configuration(1, 4), 4)


def test_verify_no_partition_tverberg_number():
    P = PointConfiguration([(0, 0), (10, 0), (0, 10), (10, 10), (3, 4), (6, 5), (5, 2)])

    assert not verify_no_partition(P, 3)


def test_verify_no_partition_size():
    with pytest.raises(SizeExceeded) as excinfo:
        verify_no_partition(PointConfiguration([(i,) for i in range(16)]), 2)

    assert str(excinfo.value) == '21457825 candidate families exceed the limit of 10000000'


def test_counting_audit():
    assert counting_audit(2, 2, 1) == OrderedDict([
        ('d', 2),
        ('r', 2),
        ('k', 1),
        ('N', 4),
        ('part_sizes', 6),
        ('skeleton_pigeonhole', True),
        ('skeleton_bound', 1),
        ('k_meets_bound', True),
        ('color_class_size', 3),
        ('color_pigeonhole', True),
    ])


def test_counting_audit_bounds():
    report = counting_audit(2, 3, 2)

    assert report['N'] == 8
    assert report['part_sizes'] == 12
    assert report['skeleton_pigeonhole']

    report = counting_audit(2, 3, 1)

    assert report['part_sizes'] == 9
    assert not report['skeleton_pigeonhole']
    assert report['skeleton_bound'] == 2
    assert not report['k_meets_bound']


def test_counting_audit_colors():
    report = counting_audit(1, 2, 1, colors=2)

    assert report['colored_N'] == 4
    assert report['colored_bound'] == 2
    assert report['colored_pigeonhole']
    assert report['colors_meet_bound']


def test_counting_audit_class_size():
    assert counting_audit(2, 3, 1)['color_class_size'] == 5
    assert counting_audit(2, 3, 1, class_size=5)['color_pigeonhole']

    report = counting_audit(2, 3, 1, class_size=6)

    assert report['color_class_size'] == 6
    assert not report['color_pigeonhole']


def fixture():
    return PointConfiguration([(0, 0), (1, 1), (1, 0), (0, 1)])
