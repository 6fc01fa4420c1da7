import logging
from collections import OrderedDict, namedtuple
from itertools import permutations

from tverbergkit import ALL
from tverbergkit.complex import chessboard, full_simplex, skeleton
from tverbergkit.exceptions import (EmptyComplex, NoIntegerSolution, NotACycle, NotAGenerator,
                                    NotSimplicial)
from tverbergkit.models import Chain, ChainComplex, SimplicialComplex
from tverbergkit.snf import IntMatrix, check_modulus, elementary_divisors, rank, smith_normal_form

logger = logging.getLogger('tverbergkit')

HomologyGroup = namedtuple('HomologyGroup', 'degree betti torsion')


class HomologySummary:
    def __init__(self, groups, modulus=None):
        """
        Accepts a list of HomologyGroup tuples, one per degree from 0, and the prime of the coefficient field, if any.
        """
        self.groups = list(groups)
        self.modulus = modulus

    def __getitem__(self, degree):
        return self.groups[degree]

    def __iter__(self):
        for group in self.groups:
            yield group

    def __len__(self):
        return len(self.groups)

    def __eq__(self, other):
        return isinstance(other, HomologySummary) and (self.groups, self.modulus) == (other.groups, other.modulus)

    def __repr__(self):
        return 'HomologySummary(betti={}, torsion={})'.format(self.betti, self.torsion)

    @property
    def betti(self):
        return [group.betti for group in self.groups]

    @property
    def torsion(self):
        return [group.torsion for group in self.groups]

    def is_torsion_free(self):
        return not any(self.torsion)

    def reduced(self):
        """
        Returns the summary of reduced homology, which has one less rank in degree 0 if the complex is nonempty.
        """
        groups = list(self.groups)
        if groups and groups[0].betti:
            groups[0] = groups[0]._replace(betti=groups[0].betti - 1)
        return HomologySummary(groups, self.modulus)

    def vanishes(self, degree):
        """
        Returns whether the group in the given degree is zero.
        """
        group = self.groups[degree]
        return not group.betti and not group.torsion

    def as_list(self):
        """
        Returns the summary as a list of ordered mappings, one per degree.
        """
        return [OrderedDict([
            ('degree', group.degree),
            ('betti', group.betti),
            ('torsion', list(group.torsion)),
        ]) for group in self.groups]


def homology(C, coefficients=None, max_degree=None):
    """
    Returns the homology of a chain complex or simplicial complex, with integer coefficients or, if `coefficients` is a
    prime p, with coefficients in the field with p elements.

    Over the integers, the betti number in degree q is the nullity of ∂_q less the rank of ∂_(q+1), and the torsion
    coefficients are the elementary divisors of ∂_(q+1) greater than 1. Raises InvalidComplex if ∂∂ ≠ 0, and NotPrime
    if `coefficients` is not a prime.

    Args:

    * C: A ChainComplex or SimplicialComplex.
    * coefficients: None for the integers, or a prime.
    * max_degree: If set, only degrees up to this one are computed.
    """
    if coefficients is not None:
        check_modulus(coefficients)
    if isinstance(C, SimplicialComplex):
        C = ChainComplex.from_complex(C, max_degree)
    C.check()

    top = C.top_degree
    if max_degree is not None:
        top = min(top, max_degree)

    groups = []
    incoming = 0
    for q in range(top + 1):
        outgoing = incoming
        boundary = C.boundary(q + 1)
        if coefficients is not None:
            incoming = rank(boundary, coefficients)
            torsion = []
        else:
            divisors = elementary_divisors(boundary)
            incoming = len(divisors)
            torsion = [d for d in divisors if d > 1]
        groups.append(HomologyGroup(q, C.rank(q) - outgoing - incoming, torsion))
    return HomologySummary(groups, coefficients)


def homological_connectivity(K, max_degree=None):
    """
    Returns the largest c at most the dimension of the complex such that reduced integral homology vanishes in all
    degrees up to c; `ALL` if it vanishes up to the dimension; or -1 if the complex is disconnected.

    If `max_degree` is set, no degree above it is computed, and `max_degree` is returned if all groups up to it vanish.
    Raises EmptyComplex if the complex has no vertices.
    """
    if K.dimension < 0:
        raise EmptyComplex('the connectivity of the empty complex is not defined')

    limit = K.dimension if max_degree is None else min(K.dimension, max_degree)
    summary = homology(K, max_degree=limit).reduced()
    for q in range(limit + 1):
        if not summary.vanishes(q):
            return q - 1
    if limit == K.dimension:
        return ALL
    return limit


def _sign(permutation):
    inversions = sum(1 for a in range(len(permutation)) for b in range(a + 1, len(permutation))
                     if permutation[a] > permutation[b])
    return -1 if inversions % 2 else 1


def fundamental_cycle_chessboard(n):
    """
    Returns the orientation cycle of the (n - 1)×n chessboard complex: the sum over permutations π of n columns of
    sgn π times the face with the cell (i, π(i)) in each of the first n - 1 rows.
    """
    assert n >= 3, 'the chessboard pseudomanifold needs n >= 3'
    coefficients = {}
    for permutation in permutations(range(n)):
        face = tuple(i * n + permutation[i] for i in range(n - 1))
        coefficients[face] = _sign(permutation)
    return Chain(n - 2, coefficients)


def fundamental_cycle_sphere(n):
    """
    Returns the boundary of the n-simplex, which generates the top homology of its boundary complex.
    """
    return Chain(n, {tuple(range(n + 1)): 1}).boundary()


def _top_kernel_rank(K, q):
    """
    Returns the rank of the group of q-cycles of a complex of dimension q.
    """
    facets = K.faces(q)
    ridges = {}
    for i, facet in enumerate(facets):
        for a in range(len(facet)):
            ridges.setdefault(facet[:a] + facet[a + 1:], []).append(i)

    # In a strongly connected pseudomanifold, a cycle is determined by its coefficient on one facet.
    if all(len(cofaces) <= 2 for cofaces in ridges.values()):
        parent = list(range(len(facets)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for cofaces in ridges.values():
            if len(cofaces) == 2:
                a, b = find(cofaces[0]), find(cofaces[1])
                if a != b:
                    parent[a] = b
        if len({find(i) for i in range(len(facets))}) == 1:
            return 1

    return len(facets) - rank(ChainComplex.from_complex(K).boundary(q))


def is_top_generator(K, z):
    """
    Raises NotACycle or NotAGenerator unless the chain generates the top homology group of the complex, and that group
    is infinite cyclic.
    """
    if not z.is_cycle():
        raise NotACycle('the chain of degree {} has a nonzero boundary'.format(z.degree))
    if z.degree != K.dimension:
        raise NotAGenerator('the chain has degree {}, but the complex has dimension {}'.format(z.degree, K.dimension))
    if any(cell not in K for cell in z):
        raise NotAGenerator('the chain is not supported on the complex')
    if z.content() != 1:
        raise NotAGenerator('the coefficients of the chain have gcd {}'.format(z.content()))
    kernel = _top_kernel_rank(K, z.degree)
    if kernel != 1:
        raise NotAGenerator('the top homology has rank {}'.format(kernel))
    return True


def push_forward(f, K, L, z):
    """
    Returns the image of a chain under a vertex map. Degenerate images contribute 0. Raises NotSimplicial if the image
    of a facet of K is not a face of L.
    """
    for facet in K.facets:
        if any(not 0 <= f[v] < L.vertex_count for v in facet) or tuple(sorted({f[v] for v in facet})) not in L:
            raise NotSimplicial('the image of {} is not a face'.format(facet))

    coefficients = {}
    for face, value in z.coefficients.items():
        image = [f[v] for v in face]
        if len(set(image)) < len(image):
            continue
        key = tuple(sorted(image))
        coefficients[key] = coefficients.get(key, 0) + _sign([key.index(w) for w in image]) * value
    return Chain(z.degree, coefficients)


def simplicial_map_degree(f, K, L, zK, zL):
    """
    Returns the integer m such that the image of zK under the vertex map f is homologous to m times zL.

    zK and zL must generate infinite cyclic top homology groups of K and L. The multiple is found by solving
    `m * zL = f(zK)` over the integers through the Smith normal form.
    """
    is_top_generator(K, zK)
    is_top_generator(L, zL)
    if zK.degree != zL.degree:
        raise NoIntegerSolution('the cycles have degrees {} and {}'.format(zK.degree, zL.degree))

    image = push_forward(f, K, L, zK)
    q = zL.degree
    basis = L.faces(q)
    position = {face: i for i, face in enumerate(basis)}

    # zL is in the top degree of L, so there are no boundaries to add and f(zK) must be a multiple of zL itself.
    A = IntMatrix(len(basis), 1, [(position[face], 0, value) for face, value in zL.coefficients.items()])

    D, U, V = smith_normal_form(A)
    target = [image[face] for face in basis]
    rotated = [sum(U[i, k] * target[k] for k in range(len(basis))) for i in range(len(basis))]
    solution = []
    for i, value in enumerate(rotated):
        d = D[i, i] if i < A.cols else 0
        if d:
            if value % d:
                raise NoIntegerSolution('the image is not an integer multiple of the target cycle')
            solution.append(value // d)
        elif value:
            raise NoIntegerSolution('the image is not homologous to a multiple of the target cycle')
    solution.extend([0] * (A.cols - len(solution)))

    degree = sum(V[0, j] * solution[j] for j in range(A.cols))
    logger.info('Degree of map from {} to {} is {}'.format(repr(K), repr(L), degree))
    return degree


def chessboard_column_map(p):
    """
    Returns `(f, K, L)`, where K is the (p - 1)×p chessboard complex, L is the boundary of the (p - 1)-simplex, and f
    maps each cell (i, j) to vertex j.
    """
    K = chessboard(p - 1, p)
    L = skeleton(full_simplex(p - 1), p - 2)
    f = [v % p for v in range(K.vertex_count)]
    return f, K, L


def euler_characteristic(K):
    """
    Returns the alternating sum of the numbers of nonempty faces in each dimension.
    """
    return sum((-1) ** q * count for q, count in enumerate(K.f_vector))


def betti_euler_characteristic(K, summary=None):
    """
    Returns the alternating sum of the rational betti numbers.
    """
    if summary is None:
        summary = homology(K)
    return sum((-1) ** group.degree * group.betti for group in summary)
