from collections import OrderedDict, defaultdict
from fractions import Fraction
from itertools import combinations
from math import gcd

from tverbergkit import format_rational
from tverbergkit.exceptions import (InconsistentConstraints, InvalidCollapse, InvalidComplex,
                                    InvalidConfiguration)
from tverbergkit.snf import IntMatrix


def canonical_face(vertices):
    """
    Returns a face as a strictly increasing tuple of vertex labels.
    """
    face = tuple(sorted(vertices))
    for a, b in zip(face, face[1:]):
        if a == b:
            raise InvalidComplex('face {} repeats vertex {}'.format(face, a))
    return face


class SimplicialComplex:
    def __init__(self, vertex_count, facets, labels=None, actions=None):
        """
        Accepts a vertex count and an iterable of faces, and keeps the inclusion-maximal faces as facets.

        A complex always contains the empty face: if no nonempty face is given, the only facet is `()`.

        Args:

        * vertex_count: Every vertex label is less than this number.
        * facets: An iterable of iterables of vertex labels.
        * labels: An optional list giving the provenance of each vertex, e.g. `(copy, vertex)` pairs.
        * actions: An optional mapping of names to GroupAction objects.
        """
        self.vertex_count = vertex_count
        self.labels = labels
        self.actions = OrderedDict(actions or ())

        if labels is not None and len(labels) != vertex_count:
            raise InvalidComplex('{} labels for {} vertices'.format(len(labels), vertex_count))

        candidates = set()
        for facet in facets:
            face = canonical_face(facet)
            for vertex in face:
                if not 0 <= vertex < vertex_count:
                    raise InvalidComplex('vertex {} is not in range({})'.format(vertex, vertex_count))
            candidates.add(face)

        # Larger faces first, so that a face is kept only if no kept face contains it.
        kept = []
        index = defaultdict(list)
        for face in sorted(candidates, key=lambda face: (-len(face), face)):
            if not face:
                if not kept:
                    kept.append(face)
                continue
            if any(set(face).issubset(kept[i]) for i in index[face[0]]):
                continue
            for vertex in face:
                index[vertex].append(len(kept))
            kept.append(face)

        if not kept:
            kept.append(())

        self.facets = sorted(kept)
        # Maps each vertex to the positions of the facets that contain it.
        position = {face: i for i, face in enumerate(self.facets)}
        self._index = {vertex: {position[kept[i]] for i in positions} for vertex, positions in index.items()}
        self._faces = {}

    def __contains__(self, face):
        face = tuple(sorted(face))
        if not face:
            return True
        if face[0] not in self._index:
            return False
        candidates = set.intersection(*(self._index.get(vertex, set()) for vertex in face))
        return bool(candidates)

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.vertex_count == other.vertex_count and
                self.facets == other.facets)

    def __hash__(self):
        return hash((self.vertex_count, tuple(self.facets)))

    def __iter__(self):
        for facet in self.facets:
            yield facet

    def __len__(self):
        return len(self.facets)

    def __repr__(self):
        return 'SimplicialComplex(vertex_count={}, facets={})'.format(self.vertex_count, repr(self.facets))

    def faces(self, q):
        """
        Returns the faces of dimension `q`, sorted lexicographically. Dimension -1 is the empty face.
        """
        if q < -1:
            return []
        if q not in self._faces:
            found = set()
            for facet in self.facets:
                if len(facet) > q:
                    found.update(combinations(facet, q + 1))
            self._faces[q] = sorted(found)
        return self._faces[q]

    def all_faces(self):
        """
        Yields the nonempty faces by increasing dimension.
        """
        for q in range(self.dimension + 1):
            for face in self.faces(q):
                yield face

    def cofacets_of(self, face):
        """
        Returns the facets that contain the face.
        """
        face = tuple(sorted(face))
        if not face:
            return list(self.facets)
        positions = set.intersection(*(self._index.get(vertex, set()) for vertex in face))
        return [self.facets[i] for i in sorted(positions)]

    @property
    def dimension(self):
        """
        Returns the largest dimension of a facet, or -1 if the complex has only the empty face.
        """
        return max(len(facet) for facet in self.facets) - 1

    @property
    def vertices(self):
        """
        Returns the vertices that belong to some facet.
        """
        return sorted(self._index)

    @property
    def f_vector(self):
        """
        Returns the number of faces in each dimension from 0 to the dimension.
        """
        return [len(self.faces(q)) for q in range(self.dimension + 1)]

    @property
    def pure(self):
        """
        Returns whether all facets have the same dimension.
        """
        return len({len(facet) for facet in self.facets}) == 1

    def label(self, vertex):
        """
        Returns the provenance label of a vertex, or the vertex itself if the complex has no labels.
        """
        if self.labels is None:
            return vertex
        return self.labels[vertex]


class GroupAction:
    def __init__(self, kind, generators, order=None):
        """
        Accepts a group kind ('cyclic' or 'symmetric') and a list of generators, each a tuple that maps each vertex to
        its image. If `order` is set and exceeds the number of distinct permutations the generators produce, the
        group acts with a kernel: some nonidentity elements act as the identity.
        """
        if kind not in ('cyclic', 'symmetric'):
            raise InvalidComplex('unknown group kind {}'.format(repr(kind)))
        self.kind = kind
        self.generators = [tuple(generator) for generator in generators]
        degrees = {len(generator) for generator in self.generators}
        assert len(degrees) <= 1, 'generators act on different vertex sets'
        for generator in self.generators:
            assert sorted(generator) == list(range(len(generator))), 'generator {} is not a permutation'.format(
                generator)
        self.degree = degrees.pop() if degrees else 0
        self.declared_order = order
        self._elements = None

    def __repr__(self):
        return 'GroupAction(kind={}, generators={})'.format(repr(self.kind), repr(self.generators))

    @property
    def identity(self):
        return tuple(range(self.degree))

    def compose(self, g, h):
        """
        Returns the permutation that applies `h` then `g`.
        """
        return tuple(g[h[v]] for v in range(self.degree))

    def inverse(self, g):
        inverse = [0] * self.degree
        for v, image in enumerate(g):
            inverse[image] = v
        return tuple(inverse)

    def elements(self):
        """
        Returns all group elements, identity first, by closing the generators under composition.
        """
        if self._elements is None:
            identity = self.identity
            seen = {identity}
            elements = [identity]
            queue = [identity]
            while queue:
                element = queue.pop(0)
                for generator in self.generators:
                    product = self.compose(generator, element)
                    if product not in seen:
                        seen.add(product)
                        elements.append(product)
                        queue.append(product)
            self._elements = elements
        return self._elements

    @property
    def order(self):
        return len(self.elements())

    def apply(self, g, face):
        """
        Returns the image of a face under a group element, as a sorted tuple.
        """
        return tuple(sorted(g[v] for v in face))

    def orbits(self):
        """
        Returns the vertex orbits, each sorted, ordered by smallest vertex.
        """
        parent = list(range(self.degree))

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for generator in self.generators:
            for v, image in enumerate(generator):
                a, b = find(v), find(image)
                if a != b:
                    parent[max(a, b)] = min(a, b)

        orbits = defaultdict(list)
        for v in range(self.degree):
            orbits[find(v)].append(v)
        return sorted(orbits.values())

    def is_automorphism_of(self, K):
        """
        Returns whether every generator maps facets of the complex onto facets.
        """
        if self.degree != K.vertex_count:
            return False
        facets = set(K.facets)
        return all(self.apply(generator, facet) in facets for generator in self.generators for facet in K.facets)

    def is_faithful(self):
        """
        Returns whether only the identity element acts as the identity permutation.
        """
        return self.declared_order is None or self.declared_order == self.order

    def is_free_on_vertices(self, vertices=None):
        """
        Returns whether no nonidentity element fixes a vertex (by default, any vertex acted on).
        """
        if vertices is None:
            vertices = range(self.degree)
        vertices = list(vertices)
        if vertices and not self.is_faithful():
            return False
        return not any(g[v] == v for g in self.elements()[1:] for v in vertices)

    def fixes_no_simplex(self, K):
        """
        Returns whether no nonidentity element maps a nonempty face of the complex to itself setwise.
        """
        for g in self.elements()[1:]:
            for face in K.all_faces():
                if self.apply(g, face) == face:
                    return False
        return True

    def fixes_pointwise(self, g, face):
        return all(g[v] == v for v in face)

    def induced(self, labels):
        """
        Returns the action induced on a complex whose vertex labels are faces of the acted-on complex, such as a
        barycentric subdivision.
        """
        position = {label: i for i, label in enumerate(labels)}
        generators = [tuple(position[self.apply(generator, label)] for label in labels)
                      for generator in self.generators]
        return GroupAction(self.kind, generators, self.declared_order)


class CollapseTrace:
    def __init__(self, steps=None):
        """
        Accepts an ordered list of elementary collapses, each a pair of a free face and its coface.
        """
        self.steps = [(tuple(free), tuple(coface)) for free, coface in steps or ()]

    def __iter__(self):
        for step in self.steps:
            yield step

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return 'CollapseTrace(steps={})'.format(repr(self.steps))

    def append(self, free, coface):
        self.steps.append((tuple(free), tuple(coface)))

    def replay(self, K):
        """
        Applies the collapses to a complex and returns the result. Raises InvalidCollapse if, at some step, the free
        face is not a face whose only proper coface is the recorded, maximal coface.
        """
        faces = set(K.all_faces())
        vertices = K.vertices

        def immediate_cofaces(face):
            present = set(face)
            return [canonical_face(face + (v,)) for v in vertices
                    if v not in present and canonical_face(face + (v,)) in faces]

        for number, (free, coface) in enumerate(self.steps, 1):
            if free not in faces or coface not in faces:
                raise InvalidCollapse('step {}: {} or {} is not a face'.format(number, free, coface))
            if immediate_cofaces(free) != [coface]:
                raise InvalidCollapse('step {}: {} is not a free face of {}'.format(number, free, coface))
            if immediate_cofaces(coface):
                raise InvalidCollapse('step {}: {} is not maximal'.format(number, coface))
            faces.discard(free)
            faces.discard(coface)

        return SimplicialComplex(K.vertex_count, faces, labels=K.labels, actions=K.actions)


class PointConfiguration:
    def __init__(self, points):
        """
        Accepts a nonempty list of points of equal length, with coordinates convertible to exact rationals.
        """
        self.points = [tuple(Fraction(coordinate) for coordinate in point) for point in points]
        if not self.points:
            raise InvalidConfiguration('a point configuration needs at least one point')
        lengths = {len(point) for point in self.points}
        if len(lengths) != 1:
            raise InvalidConfiguration('points have different dimensions: {}'.format(sorted(lengths)))
        self.dimension = lengths.pop()
        if self.dimension < 1:
            raise InvalidConfiguration('points must have at least one coordinate')

    def __eq__(self, other):
        return isinstance(other, PointConfiguration) and self.points == other.points

    def __getitem__(self, index):
        return self.points[index]

    def __iter__(self):
        for point in self.points:
            yield point

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return 'PointConfiguration(dimension={}, points={})'.format(self.dimension, len(self.points))


class Coloring:
    def __init__(self, classes):
        """
        Accepts a list of color classes, each an iterable of vertex indices.
        """
        self.classes = [tuple(sorted(color_class)) for color_class in classes]
        self._color = {}
        for color, color_class in enumerate(self.classes):
            if not color_class:
                raise InvalidConfiguration('color class {} is empty'.format(color))
            for vertex in color_class:
                if vertex in self._color:
                    raise InvalidConfiguration('vertex {} is in more than one color class'.format(vertex))
                self._color[vertex] = color

    def __iter__(self):
        for color_class in self.classes:
            yield color_class

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return 'Coloring(classes={})'.format(repr(self.classes))

    def color(self, vertex):
        return self._color[vertex]

    def check(self, n):
        """
        Raises InvalidConfiguration unless the classes partition `range(n)`.
        """
        if sorted(self._color) != list(range(n)):
            raise InvalidConfiguration('color classes do not partition the {} vertices'.format(n))

    def is_rainbow(self, face):
        """
        Returns whether the face has at most one vertex of each color.
        """
        colors = [self._color[vertex] for vertex in face]
        return len(colors) == len(set(colors))


class SearchConstraints:
    def __init__(self, require_exact_parts=None, max_face_dimension=None, rainbow=None, equal_coefficients=False):
        """
        Args:

        * require_exact_parts: If set, the number of parts that a search must use.
        * max_face_dimension: If set, parts are faces of at most this dimension.
        * rainbow: If set, a Coloring, and parts are rainbow faces.
        * equal_coefficients: Whether parts must have equal barycentric coordinates color by color.
        """
        self.require_exact_parts = require_exact_parts
        self.max_face_dimension = max_face_dimension
        self.rainbow = rainbow
        self.equal_coefficients = equal_coefficients

    def __repr__(self):
        return 'SearchConstraints(require_exact_parts={}, max_face_dimension={}, rainbow={}, equal_coefficients={})'.format(  # noqa
            self.require_exact_parts, self.max_face_dimension, repr(self.rainbow), self.equal_coefficients)

    def check(self, r, n):
        """
        Raises InconsistentConstraints if the constraints contradict each other or a search for `r` parts among `n`
        vertices.
        """
        if self.equal_coefficients and self.rainbow is None:
            raise InconsistentConstraints('equal coefficients are defined per color class and need a coloring')
        if self.require_exact_parts is not None and self.require_exact_parts != r:
            raise InconsistentConstraints('{} parts required, but {} requested'.format(self.require_exact_parts, r))
        if self.max_face_dimension is not None and self.max_face_dimension < 0:
            raise InconsistentConstraints('maximum face dimension {} is negative'.format(self.max_face_dimension))
        if self.rainbow is not None:
            try:
                self.rainbow.check(n)
            except InvalidConfiguration as e:
                raise InconsistentConstraints(str(e))


class PartitionCertificate:
    def __init__(self, parts, point, coefficients):
        """
        Accepts pairwise-disjoint parts, a common point, and per part the convex coefficients on its vertices.
        """
        self.parts = [tuple(part) for part in parts]
        self.point = tuple(Fraction(coordinate) for coordinate in point)
        self.coefficients = [tuple(Fraction(c) for c in part) for part in coefficients]

    def __eq__(self, other):
        return (isinstance(other, PartitionCertificate) and self.parts == other.parts and
                self.point == other.point and self.coefficients == other.coefficients)

    def __repr__(self):
        return 'PartitionCertificate(parts={}, point={}, coefficients={})'.format(
            repr(self.parts), repr(self.point), repr(self.coefficients))

    def __len__(self):
        return len(self.parts)

    def is_valid(self, configuration):
        """
        Returns whether the certificate verifies by exact arithmetic against the point configuration.
        """
        seen = set()
        if len(self.parts) != len(self.coefficients):
            return False
        for part, coefficients in zip(self.parts, self.coefficients):
            if not part or len(part) != len(coefficients) or seen.intersection(part):
                return False
            if not all(0 <= vertex < len(configuration) for vertex in part):
                return False
            seen.update(part)
            if any(c < 0 for c in coefficients) or sum(coefficients) != 1:
                return False
            for axis in range(configuration.dimension):
                if sum(c * configuration[v][axis] for v, c in zip(part, coefficients)) != self.point[axis]:
                    return False
        return len(self.point) == configuration.dimension

    def as_dict(self):
        """
        Returns the certificate as an ordered mapping, with rationals as `num/den` strings.
        """
        return OrderedDict([
            ('parts', [list(part) for part in self.parts]),
            ('point', [format_rational(c) for c in self.point]),
            ('coefficients', [[format_rational(c) for c in part] for part in self.coefficients]),
        ])


class Chain:
    def __init__(self, degree, coefficients=None):
        """
        Accepts a degree and a mapping of cells (e.g. sorted vertex tuples) to integer coefficients. Zero coefficients
        are dropped, and cells are kept in sorted order.
        """
        self.degree = degree
        self.coefficients = OrderedDict(sorted(
            (tuple(cell), int(value)) for cell, value in (coefficients or {}).items() if value))

    def __eq__(self, other):
        return (isinstance(other, Chain) and self.degree == other.degree and
                self.coefficients == other.coefficients)

    def __getitem__(self, cell):
        return self.coefficients.get(tuple(cell), 0)

    def __iter__(self):
        for cell in self.coefficients:
            yield cell

    def __len__(self):
        return len(self.coefficients)

    def __repr__(self):
        return 'Chain(degree={}, terms={})'.format(self.degree, len(self.coefficients))

    def __add__(self, other):
        assert self.degree == other.degree, 'adding chains of degrees {} and {}'.format(self.degree, other.degree)
        coefficients = dict(self.coefficients)
        for cell, value in other.coefficients.items():
            coefficients[cell] = coefficients.get(cell, 0) + value
        return Chain(self.degree, coefficients)

    def __rmul__(self, factor):
        return Chain(self.degree, {cell: factor * value for cell, value in self.coefficients.items()})

    def boundary(self):
        """
        Returns the simplicial boundary, with the sorted vertex order of each simplex as its positive orientation.
        """
        coefficients = {}
        if self.degree > 0:
            for simplex, value in self.coefficients.items():
                for i in range(len(simplex)):
                    face = simplex[:i] + simplex[i + 1:]
                    coefficients[face] = coefficients.get(face, 0) + (-1) ** i * value
        return Chain(self.degree - 1, coefficients)

    def is_cycle(self):
        return not self.boundary()

    def content(self):
        """
        Returns the gcd of the coefficients, or 0 for the zero chain.
        """
        divisor = 0
        for value in self.coefficients.values():
            divisor = gcd(divisor, value)
        return divisor


class ChainComplex:
    def __init__(self, bases, boundaries):
        """
        Accepts an ordered basis (a list of cells) per degree from 0, and a mapping of each degree q ≥ 1 to the
        IntMatrix of the boundary from degree q to degree q - 1. Missing boundaries are zero.
        """
        self.bases = [list(basis) for basis in bases]
        self.boundaries = dict(boundaries)
        for q, matrix in self.boundaries.items():
            assert (matrix.rows, matrix.cols) == (self.rank(q - 1), self.rank(q)), \
                'boundary {} is {}x{}, expected {}x{}'.format(q, matrix.rows, matrix.cols, self.rank(q - 1),
                                                               self.rank(q))

    def __repr__(self):
        return 'ChainComplex(ranks={})'.format([len(basis) for basis in self.bases])

    @classmethod
    def from_complex(cls, K, max_degree=None):
        """
        Returns the simplicial chain complex of a complex. If `max_degree` is set, stops at degree `max_degree + 1`,
        which suffices for homology up to `max_degree`.
        """
        top = K.dimension
        if max_degree is not None:
            top = min(top, max_degree + 1)
        bases = [K.faces(q) for q in range(top + 1)]
        boundaries = {}
        for q in range(1, top + 1):
            position = {face: i for i, face in enumerate(bases[q - 1])}
            entries = []
            for j, face in enumerate(bases[q]):
                for i in range(len(face)):
                    entries.append((position[face[:i] + face[i + 1:]], j, (-1) ** i))
            boundaries[q] = IntMatrix(len(bases[q - 1]), len(bases[q]), entries)
        return cls(bases, boundaries)

    @property
    def top_degree(self):
        return len(self.bases) - 1

    def rank(self, q):
        """
        Returns the number of cells in degree q.
        """
        if 0 <= q < len(self.bases):
            return len(self.bases[q])
        return 0

    def boundary(self, q):
        """
        Returns the boundary matrix from degree q to degree q - 1.
        """
        if q in self.boundaries:
            return self.boundaries[q]
        return IntMatrix(self.rank(q - 1), self.rank(q))

    def check(self):
        """
        Raises InvalidComplex unless every composite of consecutive boundaries is zero.
        """
        for q in range(2, self.top_degree + 1):
            if not (self.boundary(q - 1) @ self.boundary(q)).is_zero():
                raise InvalidComplex('the boundary of the boundary is not zero in degree {}'.format(q))
