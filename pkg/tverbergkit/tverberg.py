import logging
from collections import OrderedDict
from fractions import Fraction
from itertools import combinations
from math import ceil, comb, factorial

from tverbergkit import ENUMERATION_LIMIT
from tverbergkit.exactlp import FeasibilityProblem, feasible, kernel_basis, rational_matrix
from tverbergkit.exceptions import BadArity, OverlappingParts, SizeExceeded
from tverbergkit.models import PartitionCertificate, PointConfiguration, SearchConstraints

logger = logging.getLogger('tverbergkit')


def radon_partition(P):
    """
    Returns a Radon partition of d + 2 points in dimension d.

    A nonzero solution a of `Σ a_i x_i = 0, Σ a_i = 0` splits the points into those with positive and negative
    weights; the common point is `Σ (a_i / A) x_i` over positive weights, where A is their sum. Points with zero weight
    are in neither part.
    """
    d = P.dimension
    if len(P) != d + 2:
        raise BadArity('a Radon partition in dimension {} needs {} points, got {}'.format(d, d + 2, len(P)))

    rows = [[point[axis] for point in P] for axis in range(d)]
    rows.append([1] * len(P))
    a = kernel_basis(rational_matrix(rows))[0]

    positive = tuple(i for i, value in enumerate(a) if value > 0)
    negative = tuple(i for i, value in enumerate(a) if value < 0)
    total = sum(a[i] for i in positive)
    point = tuple(sum(a[i] / total * P[i][axis] for i in positive) for axis in range(d))
    parts = sorted([
        (positive, tuple(a[i] / total for i in positive)),
        (negative, tuple(-a[i] / total for i in negative)),
    ])
    certificate = PartitionCertificate([part for part, _ in parts], point, [coefficients for _, coefficients in parts])
    assert certificate.is_valid(P), 'Radon certificate does not verify'
    return certificate


def tverberg_line(values, r):
    """
    Returns a Tverberg partition of 2r - 1 values on a line into r parts: after a stable sort π, the j-th part is
    {π(j), π(2r - j)} for j < r, and the last part is {π(r)}, whose value is the common point.
    """
    values = [Fraction(value) for value in values]
    if len(values) != 2 * r - 1:
        raise BadArity('a Tverberg partition into {} parts on a line needs {} values, got {}'.format(
            r, 2 * r - 1, len(values)))

    order = sorted(range(len(values)), key=lambda i: values[i])
    middle = order[r - 1]
    c = values[middle]
    parts = []
    coefficients = []
    for j in range(r - 1):
        low, high = order[j], order[2 * r - 2 - j]
        if values[high] == values[low]:
            weight = Fraction(1, 2)
        else:
            weight = (values[high] - c) / (values[high] - values[low])
        pair = sorted([(low, weight), (high, 1 - weight)])
        parts.append(tuple(i for i, _ in pair))
        coefficients.append(tuple(w for _, w in pair))
    parts.append((middle,))
    coefficients.append((Fraction(1),))

    certificate = PartitionCertificate(parts, (c,), coefficients)
    assert certificate.is_valid(PointConfiguration([(value,) for value in values])), 'line certificate does not verify'
    return certificate


def _check_parts(P, parts):
    seen = set()
    for part in parts:
        if not part:
            raise OverlappingParts('parts must be nonempty')
        for vertex in part:
            if not 0 <= vertex < len(P):
                raise OverlappingParts('vertex {} is not one of the {} points'.format(vertex, len(P)))
            if vertex in seen:
                raise OverlappingParts('vertex {} is in more than one part'.format(vertex))
            seen.add(vertex)


def _intersection_problem(P, parts, equalities=()):
    """
    Returns a feasibility problem whose variables are the convex coefficients of each part, in order, followed by the
    coordinates of the common point. `equalities` are pairs of `(part, vertex)` whose coefficients are equal, where
    a vertex of None stands for a coefficient of zero.
    """
    d = P.dimension
    offsets = []
    count = 0
    for part in parts:
        offsets.append(count)
        count += len(part)
    variables = count + d

    def variable(j, vertex):
        return offsets[j] + parts[j].index(vertex)

    A = []
    b = []
    for j, part in enumerate(parts):
        row = [0] * variables
        for vertex in part:
            row[variable(j, vertex)] = 1
        A.append(row)
        b.append(1)
        for axis in range(d):
            row = [0] * variables
            for vertex in part:
                row[variable(j, vertex)] = P[vertex][axis]
            row[count + axis] = -1
            A.append(row)
            b.append(0)
    for (j, u), (k, v) in equalities:
        row = [0] * variables
        if u is not None:
            row[variable(j, u)] += 1
        if v is not None:
            row[variable(k, v)] -= 1
        A.append(row)
        b.append(0)

    return FeasibilityProblem(A, b, nonnegative=range(count)), offsets, count


def _solve_intersection(P, parts, equalities=()):
    problem, offsets, count = _intersection_problem(P, parts, equalities)
    solution = feasible(problem)
    if solution is None:
        return None
    coefficients = [tuple(solution[offset:offset + len(part)]) for offset, part in zip(offsets, parts)]
    return tuple(solution[count:]), coefficients


def intersection_point(P, parts):
    """
    Returns `(point, coefficients)` such that the point is in the convex hull of each part, with the given convex
    coefficients on the part's vertices, or None if the hulls have no common point. Raises OverlappingParts unless the
    parts are pairwise disjoint and nonempty.
    """
    parts = [tuple(part) for part in parts]
    _check_parts(P, parts)
    return _solve_intersection(P, parts)


def _equal_coefficient_pairs(parts, coloring):
    """
    Returns the equalities that give every part the coefficient of the first part on each color, where a part without a
    vertex of that color has a coefficient of zero.
    """
    pairs = []
    for color_class in coloring:
        members = set(color_class)
        representatives = [next((v for v in part if v in members), None) for part in parts]
        if all(v is None for v in representatives):
            continue
        for j in range(1, len(parts)):
            pairs.append(((0, representatives[0]), (j, representatives[j])))
    return pairs


def candidate_family_count(n, r):
    """
    Returns the number of unordered families of r pairwise disjoint nonempty subsets of n vertices.
    """
    return sum((-1) ** j * comb(r, j) * (r + 1 - j) ** n for j in range(r + 1)) // factorial(r)


def _families(P, r, faces):
    """
    Yields families of r pairwise disjoint faces, each family's parts ordered by smallest vertex, in lexicographic
    order. Families whose coordinate bounding boxes don't overlap are skipped.
    """
    n = len(P)
    d = P.dimension
    boxes = {}

    def box(face):
        if face not in boxes:
            boxes[face] = [(min(P[v][axis] for v in face), max(P[v][axis] for v in face)) for axis in range(d)]
        return boxes[face]

    def search(parts, used, bounds):
        if len(parts) == r:
            yield list(parts)
            return
        last = parts[-1][0] if parts else -1
        for face in faces:
            if face[0] <= last or used.intersection(face):
                continue
            # The remaining parts need distinct smallest vertices above this one.
            if sum(1 for v in range(face[0] + 1, n) if v not in used and v not in face) < r - len(parts) - 1:
                continue
            narrowed = [(max(lo, a), min(hi, b)) for (lo, hi), (a, b) in zip(bounds, box(face))]
            if any(lo > hi for lo, hi in narrowed):
                continue
            yield from search(parts + [face], used.union(face), narrowed)

    initial = [(min(point[axis] for point in P), max(point[axis] for point in P)) for axis in range(d)]
    yield from search([], frozenset(), initial)


def _admissible_faces(n, constraints, full_support=False):
    largest = n if constraints.max_face_dimension is None else min(n, constraints.max_face_dimension + 1)
    coloring = constraints.rainbow
    faces = []
    for size in range(1, largest + 1):
        for face in combinations(range(n), size):
            if coloring is not None and not coloring.is_rainbow(face):
                continue
            if full_support and len(face) != len(coloring):
                continue
            faces.append(face)
    return sorted(faces)


def tverberg_search(P, r, constraints=None):
    """
    Returns the first certificate, in canonical order, of r pairwise disjoint admissible faces whose convex hulls have
    a common point, or None if there is none.

    Families are ordered lexicographically, with parts ordered by smallest vertex and faces in lexicographic order.
    With equal coefficients, the search first tries parts with exactly one vertex of each color, and then any rainbow
    parts, where a missing color has a coefficient of zero. Raises InconsistentConstraints if the constraints
    contradict each other.
    """
    if constraints is None:
        constraints = SearchConstraints()
    if r < 2:
        raise BadArity('a Tverberg partition needs at least 2 parts, got {}'.format(r))
    constraints.check(r, len(P))

    passes = [False]
    if constraints.equal_coefficients:
        passes = [True, False]

    for full_support in passes:
        faces = _admissible_faces(len(P), constraints, full_support)
        if full_support:
            logger.info('Searching {} parts with one vertex of each of {} colors'.format(r, len(constraints.rainbow)))
        elif constraints.equal_coefficients:
            logger.info('Relaxing equal-coefficient search to parts with missing colors')
        for parts in _families(P, r, faces):
            equalities = ()
            if constraints.equal_coefficients:
                equalities = _equal_coefficient_pairs(parts, constraints.rainbow)
            found = _solve_intersection(P, parts, equalities)
            if found is not None:
                point, coefficients = found
                certificate = PartitionCertificate(parts, point, coefficients)
                assert certificate.is_valid(P), 'certificate does not verify'
                return certificate
    return None


def witness_configuration(d, r):
    """
    Returns (d + 1)(r - 1) points: the origin and the unit vectors e_1, ..., e_d, each repeated r - 1 times. These
    points have no Tverberg partition into r parts.
    """
    assert d >= 1 and r >= 2, 'witness configuration needs d >= 1 and r >= 2'
    points = []
    for i in range((d + 1) * (r - 1)):
        k = i // (r - 1)
        points.append(tuple(int(axis + 1 == k) for axis in range(d)))
    return PointConfiguration(points)


def verify_no_partition(P, r):
    """
    Returns whether an exhaustive search finds no Tverberg partition into r parts. Raises SizeExceeded if there are
    more than `ENUMERATION_LIMIT` candidate families.
    """
    estimate = candidate_family_count(len(P), r)
    if estimate > ENUMERATION_LIMIT:
        raise SizeExceeded('{} candidate families exceed the limit of {}'.format(estimate, ENUMERATION_LIMIT))
    logger.info('Searching {} candidate families of {} points for {} parts'.format(estimate, len(P), r))
    return tverberg_search(P, r) is None


def counting_audit(d, r, k, colors=None, class_size=None):
    """
    Evaluates the pigeonhole inequalities of the constraint method, and returns an ordered mapping of the quantities
    and whether each inequality holds.

    - Skeleton: with N = (d + 2)(r - 1), if no part had dimension at most k, the parts would use at least r(k + 2) of
      the N + 1 vertices. So some part is in the k-skeleton if r(k + 2) ≥ N + 2, which holds if k ≥ ⌈(r - 1)d / r⌉.
    - Colors: a color class of `class_size` vertices (by default 2r - 1) meets some part at most once if 2r exceeds
      the class size, since r parts that each met it twice would use 2r of its vertices.
    - If `colors` is set, the colored Van Kampen–Flores count with that many color classes: N = (d + colors + 1)(r - 1)
      and `colors * (2r - 1) ≥ N`.
    """
    assert d >= 1 and r >= 2 and k >= 0, 'counting audit needs positive parameters'
    if class_size is None:
        class_size = 2 * r - 1
    N = (d + 2) * (r - 1)
    bound = ceil(Fraction((r - 1) * d, r))
    report = OrderedDict([
        ('d', d),
        ('r', r),
        ('k', k),
        ('N', N),
        ('part_sizes', r * (k + 2)),
        ('skeleton_pigeonhole', r * (k + 2) >= N + 2),
        ('skeleton_bound', bound),
        ('k_meets_bound', k >= bound),
        ('color_class_size', class_size),
        ('color_pigeonhole', 2 * r > class_size),
    ])
    if colors is not None:
        colored_N = (d + colors + 1) * (r - 1)
        report['colors'] = colors
        report['colored_N'] = colored_N
        report['colored_bound'] = bound + 1
        report['colored_pigeonhole'] = colors * (2 * r - 1) >= colored_N
        report['colors_meet_bound'] = colors >= bound + 1
    return report
