import logging
from collections import OrderedDict, deque
from functools import reduce
from itertools import combinations, permutations, product
from math import comb

from tverbergkit import ISOMORPHISM_VERTEX_LIMIT
from tverbergkit.exceptions import NotFree, NotRegular, SizeExceeded
from tverbergkit.models import ChainComplex, CollapseTrace, GroupAction, SimplicialComplex
from tverbergkit.snf import IntMatrix

logger = logging.getLogger('tverbergkit')


def full_simplex(n):
    """
    Returns the n-dimensional simplex on the vertices 0, ..., n.
    """
    return SimplicialComplex(n + 1, [range(n + 1)])


def points(n):
    """
    Returns the complex of n isolated vertices.
    """
    return SimplicialComplex(n, [(v,) for v in range(n)])


def skeleton(K, k):
    """
    Returns the subcomplex of the faces of dimension at most k.
    """
    if k >= K.dimension:
        return K
    faces = K.faces(k) + [facet for facet in K.facets if len(facet) <= k]
    return SimplicialComplex(K.vertex_count, faces, labels=K.labels, actions=K.actions)


def join(K, L):
    """
    Returns the join of two complexes. L's vertices are relabeled by adding K's vertex count.
    """
    offset = K.vertex_count
    facets = [sigma + tuple(v + offset for v in tau) for sigma in K.facets for tau in L.facets]
    labels = None
    if K.labels is not None and L.labels is not None:
        labels = list(K.labels) + list(L.labels)
    return SimplicialComplex(K.vertex_count + L.vertex_count, facets, labels=labels)


def join_all(complexes):
    """
    Returns the iterated join of complexes, from left to right.
    """
    return reduce(join, complexes, SimplicialComplex(0, []))


def rainbow_complex(coloring):
    """
    Returns the complex of faces that have at most one vertex of each color, i.e. the join of the color classes as
    discrete complexes.
    """
    n = max(max(color_class) for color_class in coloring) + 1
    return SimplicialComplex(n, product(*coloring.classes))


def _copy_action(r, n):
    """
    Returns the action of the symmetric group on r copies of n vertices, where vertex `c * n + v` is vertex v of
    copy c.
    """
    def permute(mapping):
        return tuple(mapping[c] * n + v for c in range(r) for v in range(n))

    generators = [permute([(c + 1) % r for c in range(r)])]
    if r > 2:
        generators.insert(0, permute([1, 0] + list(range(2, r))))
    return GroupAction('symmetric', generators)


def deleted_join(K, r, k=2):
    """
    Returns the r-fold k-wise deleted join of a complex, with the action of the symmetric group on its copies.

    A face is a join of faces σ_1, ..., σ_r of K (empty faces allowed), of which every k have empty common
    intersection. Vertex v of copy c (from 1) is vertex `(c - 1) * n + v`, labeled `(c, v)`, where n is K's vertex
    count.
    """
    assert r >= 2 and 2 <= k <= r, 'deleted join needs r >= 2 and 2 <= k <= r'
    n = K.vertex_count
    vertices = K.vertices
    options = [subset for size in range(k) for subset in combinations(range(r), size)]
    facets = []

    def extendable(parts):
        for v in vertices:
            used = sum(v in part for part in parts)
            if used >= k - 1:
                continue
            for c in range(r):
                if v not in parts[c] and tuple(sorted(parts[c] + (v,))) in K:
                    return True
        return False

    def search(position, parts):
        if position == len(vertices):
            if not extendable(parts):
                facets.append(tuple(c * n + v for c in range(r) for v in parts[c]))
            return
        v = vertices[position]
        for subset in options:
            if all(parts[c] + (v,) in K for c in subset):
                search(position + 1, [parts[c] + (v,) if c in subset else parts[c] for c in range(r)])

    search(0, [()] * r)
    labels = [(c + 1, v) for c in range(r) for v in range(n)]
    return SimplicialComplex(r * n, facets, labels=labels, actions={'symmetric': _copy_action(r, n)})


def chessboard(m, n):
    """
    Returns the m×n chessboard complex: cell (i, j) (from 0) is vertex `i * n + j`, labeled `(i + 1, j + 1)`, and faces
    are sets of cells in pairwise distinct rows and columns.

    The complex carries a 'cyclic' action that shifts columns, and a 'symmetric' action of Sym_m × Sym_n.
    """
    assert m >= 1 and n >= 1, 'a chessboard needs at least one row and one column'
    if m <= n:
        facets = [[i * n + j for i, j in enumerate(columns)] for columns in permutations(range(n), m)]
    else:
        facets = [[i * n + j for j, i in enumerate(rows)] for rows in permutations(range(m), n)]
    labels = [(i + 1, j + 1) for i in range(m) for j in range(n)]

    def cells(row_map, column_map):
        return tuple(row_map[i] * n + column_map[j] for i in range(m) for j in range(n))

    rows, columns = list(range(m)), list(range(n))
    shift = [(j + 1) % n for j in columns]
    generators = []
    if m > 1:
        generators.append(cells([(i + 1) % m for i in rows], columns))
        generators.append(cells([1, 0] + rows[2:], columns))
    if n > 1:
        generators.append(cells(rows, shift))
        generators.append(cells(rows, [1, 0] + columns[2:]))
    generators = list(OrderedDict.fromkeys(generators)) or [cells(rows, columns)]

    actions = OrderedDict([
        ('cyclic', GroupAction('cyclic', [cells(rows, shift)])),
        ('symmetric', GroupAction('symmetric', generators)),
    ])
    return SimplicialComplex(m * n, facets, labels=labels, actions=actions)


def deleted_product_cell_count(n, r):
    """
    Returns the number of r-tuples of pairwise disjoint nonempty subsets of n labels, i.e. the number of cells of the
    r-fold deleted product of the simplex on n vertices.
    """
    return sum((-1) ** j * comb(r, j) * (r + 1 - j) ** n for j in range(r + 1))


def deleted_product_chain(K, r, k=2):
    """
    Returns the cellular chain complex of the r-fold k-wise deleted product of a complex.

    Cells are tuples (σ_1, ..., σ_r) of nonempty faces of K of which every k have empty common intersection, in degree
    dim σ_1 + ... + dim σ_r. The boundary follows the graded Leibniz rule, with sign (-1)^(dim σ_1 + ... + dim σ_(i-1))
    on the i-th factor.
    """
    assert r >= 2 and 2 <= k <= r, 'deleted product needs r >= 2 and 2 <= k <= r'
    faces = list(K.all_faces())
    cells = {}

    def search(parts, usage):
        if len(parts) == r:
            degree = sum(len(part) - 1 for part in parts)
            cells.setdefault(degree, []).append(tuple(parts))
            return
        for face in faces:
            if all(usage.get(v, 0) < k - 1 for v in face):
                for v in face:
                    usage[v] = usage.get(v, 0) + 1
                search(parts + [face], usage)
                for v in face:
                    usage[v] -= 1

    search([], {})

    top = max(cells) if cells else -1
    bases = [sorted(cells.get(q, [])) for q in range(top + 1)]
    boundaries = {}
    for q in range(1, top + 1):
        position = {cell: i for i, cell in enumerate(bases[q - 1])}
        entries = []
        for j, cell in enumerate(bases[q]):
            sign = 1
            for i, part in enumerate(cell):
                if len(part) > 1:
                    for a in range(len(part)):
                        face = cell[:i] + (part[:a] + part[a + 1:],) + cell[i + 1:]
                        entries.append((position[face], j, sign * (-1) ** a))
                if len(part) % 2 == 0:
                    sign = -sign
        boundaries[q] = IntMatrix(len(bases[q - 1]), len(bases[q]), entries)
    return ChainComplex(bases, boundaries)


def _signature(K, adjacency, v):
    return (len(adjacency[v]), tuple(sorted(len(facet) for facet in K.cofacets_of((v,)))))


def are_isomorphic(K, L):
    """
    Returns a mapping of K's vertices to L's vertices that carries facets onto facets, or None if there is none.

    The search matches vertices in breadth-first order over the 1-skeleton, pruning on vertex signatures (degree and
    facet sizes), adjacency, and completed facets. Raises SizeExceeded if either complex has more than
    `ISOMORPHISM_VERTEX_LIMIT` vertices.
    """
    for complex_ in (K, L):
        if len(complex_.vertices) > ISOMORPHISM_VERTEX_LIMIT:
            raise SizeExceeded('isomorphism search is limited to {} vertices, got {}'.format(
                ISOMORPHISM_VERTEX_LIMIT, len(complex_.vertices)))

    if len(K.vertices) != len(L.vertices) or len(K) != len(L) or K.f_vector != L.f_vector:
        return None

    def adjacency_of(complex_):
        adjacency = {v: set() for v in complex_.vertices}
        for a, b in complex_.faces(1):
            adjacency[a].add(b)
            adjacency[b].add(a)
        return adjacency

    adjacency_K, adjacency_L = adjacency_of(K), adjacency_of(L)
    signature_K = {v: _signature(K, adjacency_K, v) for v in K.vertices}
    signature_L = {w: _signature(L, adjacency_L, w) for w in L.vertices}
    if sorted(signature_K.values()) != sorted(signature_L.values()):
        return None

    # Breadth-first order, starting each component from its vertex of rarest signature.
    frequency = {}
    for signature in signature_K.values():
        frequency[signature] = frequency.get(signature, 0) + 1
    order = []
    seen = set()
    for start in sorted(K.vertices, key=lambda v: (frequency[signature_K[v]], v)):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(adjacency_K[v]):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)

    facets_L = set(L.facets)
    mapping = {}
    used = set()

    def consistent(v, w):
        for u, image in mapping.items():
            if (u in adjacency_K[v]) != (image in adjacency_L[w]):
                return False
        mapping[v] = w
        try:
            for facet in K.cofacets_of((v,)):
                if all(u in mapping for u in facet):
                    if tuple(sorted(mapping[u] for u in facet)) not in facets_L:
                        return False
            return True
        finally:
            del mapping[v]

    def search(position):
        if position == len(order):
            return True
        v = order[position]
        for w in L.vertices:
            if w not in used and signature_L[w] == signature_K[v] and consistent(v, w):
                mapping[v] = w
                used.add(w)
                if search(position + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if not search(0):
        return None
    assert {tuple(sorted(mapping[v] for v in facet)) for facet in K.facets} == facets_L, 'isomorphism check failed'
    return OrderedDict(sorted(mapping.items()))


def _is_faithful_quotient(K, A, orbit_of):
    """
    Returns whether the orbit map identifies exactly the faces in the same group orbit: every face has its vertices in
    distinct orbits, and each dimension has as many distinct images as face orbits.
    """
    for facet in K.facets:
        if len({orbit_of[v] for v in facet}) != len(facet):
            return False
    for q in range(K.dimension + 1):
        faces = K.faces(q)
        images = {tuple(sorted(orbit_of[v] for v in face)) for face in faces}
        if len(images) * A.order != len(faces):
            return False
    return True


def quotient_complex(K, A):
    """
    Returns the quotient of a complex by a free group action: vertices are vertex orbits, and faces are images of
    faces.

    If the orbit map is not faithful on faces, the complex and the action are barycentrically subdivided once. Raises
    NotFree if a nonidentity element fixes a vertex, and NotRegular if the subdivided quotient is still not faithful.
    """
    if not A.is_free_on_vertices(K.vertices):
        raise NotFree('the action fixes a vertex')

    for attempt in range(2):
        vertices = set(K.vertices)
        orbits = [orbit for orbit in A.orbits() if vertices.intersection(orbit)]
        orbit_of = {v: i for i, orbit in enumerate(orbits) for v in orbit}
        if _is_faithful_quotient(K, A, orbit_of):
            facets = {tuple(sorted(orbit_of[v] for v in facet)) for facet in K.facets}
            labels = [tuple(K.label(v) for v in orbit) for orbit in orbits]
            return SimplicialComplex(len(orbits), facets, labels=labels)
        if attempt:
            break
        logger.info('Quotient of {} by {} action is not faithful, subdividing'.format(repr(K), A.kind))
        K = barycentric_subdivision(K)
        A = A.induced(K.labels)

    raise NotRegular('the quotient is not faithful after one barycentric subdivision')


def equivariant_collapse_chessboard(r):
    """
    Collapses the r×r chessboard complex to a subcomplex of dimension r - 2, and returns the subcomplex and the trace.

    For each facet, in lexicographic order of its row-to-column map, the free face is the facet without its cell in the
    last column. The subcomplex is invariant under permutations of rows.
    """
    assert r >= 2, 'collapse needs r >= 2'
    K = chessboard(r, r)
    trace = CollapseTrace()
    for columns in permutations(range(r)):
        facet = tuple(i * r + j for i, j in enumerate(columns))
        trace.append(tuple(v for v in facet if v % r != r - 1), facet)
    result = trace.replay(K)

    rows = list(range(r))
    generators = [tuple(mapping[i] * r + j for i in rows for j in rows)
                  for mapping in ([(i + 1) % r for i in rows], [1, 0] + rows[2:])]
    result.actions['symmetric'] = GroupAction('symmetric', list(OrderedDict.fromkeys(generators)))
    return result, trace


def barycentric_subdivision(K):
    """
    Returns the barycentric subdivision: vertices are the nonempty faces of K, which are also the labels, and faces are
    chains under inclusion. Group actions on K are carried over.
    """
    labels = list(K.all_faces())
    position = {face: i for i, face in enumerate(labels)}
    facets = set()
    for facet in K.facets:
        for ordering in permutations(facet):
            facets.add(tuple(sorted(position[tuple(sorted(ordering[:i]))] for i in range(1, len(ordering) + 1))))
    actions = OrderedDict((name, action.induced(labels)) for name, action in K.actions.items())
    return SimplicialComplex(len(labels), facets, labels=labels, actions=actions)
