import logging
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

logger = logging.getLogger('tverbergkit')


def rational_matrix(rows, cols=None):
    """
    Returns a 2-dimensional numpy array of exact rationals. `cols` is needed only if there are no rows.
    """
    rows = [[Fraction(value) for value in row] for row in rows]
    if not rows:
        return np.zeros((0, cols or 0), dtype=object)
    array = np.empty((len(rows), len(rows[0])), dtype=object)
    for i, row in enumerate(rows):
        assert len(row) == array.shape[1], 'row {} has {} entries, expected {}'.format(i, len(row), array.shape[1])
        array[i] = row
    return array


def _integer_row(row):
    """
    Returns a rational row scaled to coprime integers, preserving signs.
    """
    row = [Fraction(value) for value in row]
    denominator = 1
    for value in row:
        denominator = denominator * value.denominator // gcd(denominator, value.denominator)
    row = [int(value * denominator) for value in row]
    return _primitive(row)


def _primitive(row):
    divisor = 0
    for value in row:
        divisor = gcd(divisor, value)
    if divisor > 1:
        return [value // divisor for value in row]
    return row


def _reduce(A):
    """
    Returns the fraction-free reduced echelon form of a rational matrix, as integer rows, and its pivot columns. Each
    pivot column is zero outside its pivot row.
    """
    rows = [_integer_row(list(row)) for row in A]
    cols = A.shape[1]
    pivots = []
    top = 0
    for col in range(cols):
        found = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        pivot = rows[top][col]
        for i in range(len(rows)):
            factor = rows[i][col]
            if i != top and factor:
                rows[i] = _primitive([pivot * a - factor * b for a, b in zip(rows[i], rows[top])])
        pivots.append(col)
        top += 1
    return rows[:top], pivots


def rank(A):
    """
    Returns the rank of a rational matrix.
    """
    A = np.asarray(A, dtype=object)
    if not A.size:
        return 0
    return len(_reduce(A)[1])


def kernel_basis(A):
    """
    Returns a basis of the null space of a rational matrix, as tuples of rationals with coprime integer entries. There
    is one vector per non-pivot column, whose entry on that column is positive.
    """
    A = np.asarray(A, dtype=object)
    cols = A.shape[1]
    if not A.shape[0]:
        return [tuple(Fraction(int(i == j)) for i in range(cols)) for j in range(cols)]
    rows, pivots = _reduce(A)
    basis = []
    for free in (col for col in range(cols) if col not in pivots):
        vector = [Fraction(0)] * cols
        vector[free] = Fraction(1)
        for row, col in zip(rows, pivots):
            vector[col] = Fraction(-row[free], row[col])
        vector = [Fraction(value) for value in _integer_row(vector)]
        assert not any(sum(a * v for a, v in zip(row, vector)) for row in A), 'kernel vector is not in the kernel'
        basis.append(tuple(vector))
    return basis


def solve(A, b):
    """
    Returns an exact solution of `A x = b` with free variables set to zero, or None if there is none.
    """
    A = np.asarray(A, dtype=object)
    rows, cols = A.shape
    augmented = np.empty((rows, cols + 1), dtype=object)
    augmented[:, :cols] = A
    augmented[:, cols] = [Fraction(value) for value in b]
    if not rows:
        return tuple(Fraction(0) for _ in range(cols))
    reduced, pivots = _reduce(augmented)
    if pivots and pivots[-1] == cols:
        return None
    solution = [Fraction(0)] * cols
    for row, col in zip(reduced, pivots):
        solution[col] = Fraction(row[cols], row[col])
    return tuple(solution)


class FeasibilityProblem:
    def __init__(self, A, b, nonnegative=None):
        """
        Accepts the equality constraints `A y = b` and the indices of the variables constrained to be nonnegative (by
        default, all of them). The other variables are free.
        """
        self.A = A if isinstance(A, np.ndarray) else rational_matrix(A, len(A[0]) if len(A) else 0)
        self.b = [Fraction(value) for value in b]
        rows, cols = self.A.shape
        assert rows == len(self.b), '{} rows but {} right-hand sides'.format(rows, len(self.b))
        if nonnegative is None:
            nonnegative = range(cols)
        self.nonnegative = frozenset(nonnegative)
        assert all(0 <= j < cols for j in self.nonnegative), 'nonnegative index out of range'

    def __repr__(self):
        return 'FeasibilityProblem(rows={}, cols={}, nonnegative={})'.format(
            self.A.shape[0], self.A.shape[1], sorted(self.nonnegative))

    @property
    def variables(self):
        return self.A.shape[1]

    def is_solution(self, y):
        """
        Returns whether a vector satisfies all equalities and sign constraints exactly.
        """
        if len(y) != self.variables:
            return False
        if any(y[j] < 0 for j in self.nonnegative):
            return False
        return all(sum(a * v for a, v in zip(row, y)) == target for row, target in zip(self.A, self.b))

    def standard_form(self):
        """
        Returns `(A, b, columns)` such that the problem is `A x = b, x ≥ 0, b ≥ 0`, where each free variable is the
        difference of two columns. `columns[j]` lists `(column, sign)` pairs for variable j.
        """
        rows, cols = self.A.shape
        columns = []
        blocks = []
        for j in range(cols):
            columns.append([(len(blocks), 1)])
            blocks.append(self.A[:, j])
            if j not in self.nonnegative:
                columns[j].append((len(blocks), -1))
                blocks.append(-self.A[:, j])
        A = np.empty((rows, len(blocks)), dtype=object)
        for k, block in enumerate(blocks):
            A[:, k] = block
        b = np.array(self.b, dtype=object)
        for i in range(rows):
            if b[i] < 0:
                A[i] = -A[i]
                b[i] = -b[i]
        return A, b, columns

    def recover(self, x, columns):
        """
        Returns the solution of the problem from a solution of its standard form.
        """
        return tuple(sum((sign * x[k] for k, sign in parts), Fraction(0)) for parts in columns)


def feasible(P):
    """
    Returns an exact solution of a feasibility problem, or None if it is infeasible.

    Runs phase 1 of the simplex method on the standard form with one artificial variable per row, with Bland's rule:
    the entering column is the lowest-indexed one with a negative reduced cost, and ties in the ratio test go to the
    lowest-indexed basic variable. The problem is infeasible if the sum of the artificial variables can't reach zero.
    """
    A, b, columns = P.standard_form()
    m, n = A.shape
    if not m:
        return P.recover([Fraction(0)] * n, columns)

    # Columns 0..n-1 are structural, n..n+m-1 artificial, and the last is the right-hand side. The last row holds the
    # reduced costs of the phase 1 objective, and minus its value.
    T = np.empty((m + 1, n + m + 1), dtype=object)
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m, dtype=object) * Fraction(1)
    T[:m, n + m] = b
    T[m] = -T[:m].sum(axis=0)
    T[m, n:n + m] = Fraction(0)
    basis = list(range(n, n + m))

    pivots = 0
    while True:
        entering = next((j for j in range(n + m) if T[m, j] < 0), None)
        if entering is None:
            break
        candidates = [(T[i, -1] / T[i, entering], basis[i], i) for i in range(m) if T[i, entering] > 0]
        # The phase 1 objective is bounded below by zero, so some row limits the entering column.
        assert candidates, 'phase 1 is unbounded'
        leaving = min(candidates)[2]
        T[leaving] = T[leaving] / T[leaving, entering]
        for i in range(m + 1):
            if i != leaving and T[i, entering]:
                T[i] = T[i] - T[i, entering] * T[leaving]
        basis[leaving] = entering
        pivots += 1

    infeasibility = -T[m, -1]
    logger.debug('Phase 1 ended after {} pivots with infeasibility {}'.format(pivots, infeasibility))
    if infeasibility > 0:
        return None

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i, -1]
    y = P.recover(x, columns)
    assert P.is_solution(y), 'phase 1 returned a point that does not satisfy the problem'
    return y


def feasible_by_enumeration(P):
    """
    Returns an exact solution of a feasibility problem, or None if it is infeasible, by trying every basic solution of
    the standard form: every set of linearly independent columns, up to the number of rows.
    """
    A, b, columns = P.standard_form()
    m, n = A.shape
    for size in range(min(m, n) + 1):
        for subset in combinations(range(n), size):
            sub = A[:, list(subset)]
            if size and rank(sub) < size:
                continue
            values = solve(sub, b) if size else (None if any(b) else ())
            if values is None or any(value < 0 for value in values):
                continue
            x = [Fraction(0)] * n
            for k, value in zip(subset, values):
                x[k] = value
            if all(sum(a * v for a, v in zip(row, x)) == target for row, target in zip(A, b)):
                return P.recover(x, columns)
    return None


def beale_problem(bound):
    """
    Returns Beale's cycling example as a feasibility problem, with its objective bounded above by `bound`. It is
    feasible if and only if `bound` is at least -5/4.
    """
    F = Fraction
    A = [
        [F(1, 4), -8, -1, 9, 1, 0, 0, 0],
        [F(1, 2), -12, F(-1, 2), 3, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0, 1, 0],
        [F(-3, 4), 20, F(-1, 2), 6, 0, 0, 0, 1],
    ]
    return FeasibilityProblem(A, [0, 0, 1, bound])
