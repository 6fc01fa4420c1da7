import logging
from collections import defaultdict

import numpy as np

from tverbergkit import DENSE_FILL
from tverbergkit.exceptions import NotPrime

logger = logging.getLogger('tverbergkit')


class IntMatrix:
    def __init__(self, rows, cols, entries=None):
        """
        Accepts dimensions and a mapping of `(row, col)` pairs to arbitrary-precision integers, or an iterable of
        `(row, col, value)` triplets. Zero entries are dropped.
        """
        self.rows = rows
        self.cols = cols
        self.columns = [{} for _ in range(cols)]

        if entries is None:
            entries = ()
        elif hasattr(entries, 'items'):
            entries = ((i, j, value) for (i, j), value in entries.items())

        for i, j, value in entries:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError('entry ({}, {}) is outside a {}x{} matrix'.format(i, j, rows, cols))
            value = int(value)
            if value:
                self.columns[j][i] = value
            else:
                self.columns[j].pop(i, None)

    @classmethod
    def from_dense(cls, array):
        """
        Returns a matrix from a 2-dimensional numpy array or nested list.
        """
        array = np.array(array, dtype=object)
        if array.ndim != 2:
            array = array.reshape((array.shape[0] if array.ndim else 0, 0))
        rows, cols = array.shape
        return cls(rows, cols, ((i, j, array[i, j]) for i in range(rows) for j in range(cols)))

    @classmethod
    def from_columns(cls, rows, columns):
        matrix = cls(rows, len(columns))
        matrix.columns = [{i: value for i, value in column.items() if value} for column in columns]
        return matrix

    @classmethod
    def identity(cls, n):
        return cls(n, n, ((i, i, 1) for i in range(n)))

    def __getitem__(self, index):
        i, j = index
        return self.columns[j].get(i, 0)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and (self.rows, self.cols) == (other.rows, other.cols) and
                self.columns == other.columns)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError('cannot multiply {}x{} by {}x{}'.format(self.rows, self.cols, other.rows, other.cols))
        columns = []
        for column in other.columns:
            product = {}
            for k, factor in column.items():
                for i, value in self.columns[k].items():
                    product[i] = product.get(i, 0) + factor * value
            columns.append(product)
        return IntMatrix.from_columns(self.rows, columns)

    def __repr__(self):
        return 'IntMatrix(rows={}, cols={}, nnz={})'.format(self.rows, self.cols, self.nnz)

    @property
    def nnz(self):
        """
        Returns the number of nonzero entries.
        """
        return sum(len(column) for column in self.columns)

    @property
    def fill(self):
        """
        Returns the share of entries that are nonzero.
        """
        if not self.rows or not self.cols:
            return 0
        return self.nnz / (self.rows * self.cols)

    def is_zero(self):
        return not any(self.columns)

    def dense(self):
        """
        Returns the matrix as a numpy array of Python integers.
        """
        array = np.zeros((self.rows, self.cols), dtype=object)
        for j, column in enumerate(self.columns):
            for i, value in column.items():
                array[i, j] = value
        return array

    def transpose(self):
        return IntMatrix(self.cols, self.rows, ((j, i, value) for i, j, value in self.triplets()))

    def triplets(self):
        """
        Returns the nonzero entries as `(row, col, value)` triplets, ordered by row then column.
        """
        return sorted((i, j, value) for j, column in enumerate(self.columns) for i, value in column.items())

    def diagonal(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def smith_normal_form(M, return_inverses=False):
    """
    Returns `(D, U, V)` such that `U @ M @ V == D`, where D is diagonal with nonnegative entries d_1 | d_2 | ..., and
    U and V are unimodular. If `return_inverses` is true, returns `(D, U, V, Uinv, Vinv)`.

    Each step pivots on an entry of smallest nonzero absolute value in the remaining submatrix.
    """
    D = M.dense()
    m, n = D.shape
    U = np.eye(m, dtype=object)
    V = np.eye(n, dtype=object)
    Uinv = np.eye(m, dtype=object)
    Vinv = np.eye(n, dtype=object)

    # Row operations act on D and U from the left and on Uinv from the right; column operations act on D and V from
    # the right and on Vinv from the left.
    def swap_rows(a, b):
        D[[a, b]] = D[[b, a]]
        U[[a, b]] = U[[b, a]]
        Uinv[:, [a, b]] = Uinv[:, [b, a]]

    def swap_cols(a, b):
        D[:, [a, b]] = D[:, [b, a]]
        V[:, [a, b]] = V[:, [b, a]]
        Vinv[[a, b]] = Vinv[[b, a]]

    def add_row(source, target, factor):
        D[target] += factor * D[source]
        U[target] += factor * U[source]
        Uinv[:, source] -= factor * Uinv[:, target]

    def add_col(source, target, factor):
        D[:, target] += factor * D[:, source]
        V[:, target] += factor * V[:, source]
        Vinv[source] -= factor * Vinv[target]

    for t in range(min(m, n)):
        while True:
            rows, cols = np.nonzero(D[t:, t:] != 0)
            if not len(rows):
                break
            k = min(range(len(rows)), key=lambda k: (abs(D[t + rows[k], t + cols[k]]), rows[k], cols[k]))
            i, j = t + rows[k], t + cols[k]
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)

            pivot = D[t, t]
            cleared = True
            for i in range(t + 1, m):
                if D[i, t]:
                    add_row(t, i, -(D[i, t] // pivot))
                    cleared = cleared and not D[i, t]
            for j in range(t + 1, n):
                if D[t, j]:
                    add_col(t, j, -(D[t, j] // pivot))
                    cleared = cleared and not D[t, j]
            if not cleared:
                continue

            # The pivot must divide every remaining entry. If not, bring an offending row into row t.
            offending = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i, j] % pivot), None)
            if offending is None:
                break
            add_row(offending, t, 1)

        if D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
            Uinv[:, t] = -Uinv[:, t]

    result = tuple(IntMatrix.from_dense(array) for array in (D, U, V))
    if return_inverses:
        result += (IntMatrix.from_dense(Uinv), IntMatrix.from_dense(Vinv))
    return result


def determinant(M):
    """
    Returns the determinant of a square matrix by fraction-free (Bareiss) elimination.
    """
    assert M.rows == M.cols, 'determinant of a {}x{} matrix'.format(M.rows, M.cols)
    A = M.dense()
    n = M.rows
    sign = 1
    previous = 1
    for k in range(n - 1):
        if A[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i, k] != 0), None)
            if swap is None:
                return 0
            A[[k, swap]] = A[[swap, k]]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i, j] = (A[i, j] * A[k, k] - A[i, k] * A[k, j]) // previous
        previous = A[k, k]
    return sign * A[n - 1, n - 1] if n else 1


def _extended_gcd(a, b):
    """
    Returns `(g, s, t)` with `s * a + t * b == g == gcd(a, b) > 0`.
    """
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _combine(x, a, y, b, modulus=None):
    """
    Returns the sparse column `a * x + b * y`.
    """
    result = {}
    for column, factor in ((x, a), (y, b)):
        if not factor:
            continue
        for i, value in column.items():
            result[i] = result.get(i, 0) + factor * value
    if modulus:
        return {i: value % modulus for i, value in result.items() if value % modulus}
    return {i: value for i, value in result.items() if value}


def _echelon(columns, modulus=None):
    """
    Reduces sparse columns by unimodular column operations, until no two nonzero columns share their lowest row.
    Returns a mapping of lowest rows to reduced columns.
    """
    pivots = {}
    for column in columns:
        if modulus:
            column = {i: value % modulus for i, value in column.items() if value % modulus}
        else:
            column = dict(column)
        while column:
            low = max(column)
            if low not in pivots:
                pivots[low] = column
                break
            pivot = pivots[low]
            a, b = pivot[low], column[low]
            if modulus:
                column = _combine(column, 1, pivot, -b * pow(a, modulus - 2, modulus), modulus)
            elif b % a == 0:
                column = _combine(column, 1, pivot, -(b // a))
            else:
                g, s, t = _extended_gcd(a, b)
                pivots[low] = _combine(pivot, s, column, t)
                column = _combine(pivot, b // g, column, -(a // g))
    return pivots


def is_prime(n):
    if n < 2:
        return False
    return all(n % p for p in range(2, int(n ** 0.5) + 1))


def check_modulus(modulus):
    """
    Raises NotPrime unless the modulus is a prime.
    """
    if not isinstance(modulus, int) or not is_prime(modulus):
        raise NotPrime('field coefficients need a prime modulus, got {}'.format(modulus))


def rank(M, modulus=None):
    """
    Returns the rank of the matrix over the rationals, or over the field with `modulus` elements if given (a prime).
    Raises NotPrime if the modulus is not a prime.
    """
    if modulus is not None:
        check_modulus(modulus)
    return len(_echelon(M.columns, modulus))


def _eliminate_units(columns):
    """
    Eliminates entries of absolute value 1 by unimodular row and column operations, choosing each pivot in the
    sparsest row. Returns the number of pivots and the remaining nonzero columns, none of which has a unit entry.
    """
    columns = [dict(column) for column in columns]
    rows = defaultdict(set)
    for j, column in enumerate(columns):
        for i in column:
            rows[i].add(j)
    active = {j for j, column in enumerate(columns) if column}

    pivots = 0
    changed = True
    while changed:
        changed = False
        for p in sorted(active, key=lambda j: (len(columns[j]), j)):
            if p not in active:
                continue
            units = [i for i, value in columns[p].items() if abs(value) == 1]
            if not units:
                continue
            i = min(units, key=lambda k: (len(rows[k]), k))
            pivot = columns[p]
            for j in rows[i] - {p}:
                column = columns[j]
                factor = -column[i] * pivot[i]
                for k, value in pivot.items():
                    entry = column.get(k, 0) + factor * value
                    if entry:
                        column[k] = entry
                        rows[k].add(j)
                    else:
                        column.pop(k, None)
                        rows[k].discard(j)
                if not column:
                    active.discard(j)
            # Row i now has its only entry in the pivot column, so the pivot's row and column split off.
            for k in pivot:
                rows[k].discard(p)
            columns[p] = {}
            active.discard(p)
            pivots += 1
            changed = True
    return pivots, [columns[j] for j in sorted(active)]


def elementary_divisors(M, method=None):
    """
    Returns the nonzero diagonal entries of the Smith normal form, in increasing divisibility order.

    Matrices with a fill of at least `DENSE_FILL` are reduced densely. In sparser matrices, unit entries are eliminated
    first; the rest is column-reduced, the new unit pivots are split off, and only the residual block is reduced
    densely. `method` forces "dense" or "sparse".
    """
    if method is None:
        method = 'dense' if M.fill >= DENSE_FILL else 'sparse'
    if method == 'dense':
        logger.debug('Reducing {}x{} matrix densely (fill {:.3f})'.format(M.rows, M.cols, M.fill))
        return [d for d in smith_normal_form(M)[0].diagonal() if d]

    eliminated, remaining = _eliminate_units(M.columns)
    pivots = _echelon(remaining)
    units = {low: column for low, column in pivots.items() if abs(column[low]) == 1}
    others = [column for low, column in pivots.items() if low not in units]
    logger.debug('Reducing {}x{} matrix sparsely: {} unit pivots, {} residual columns'.format(
        M.rows, M.cols, eliminated + len(units), len(others)))

    # Clear unit rows from the residual columns, highest row first. Subtracting a unit column only changes rows at or
    # below its lowest row, so rows that are already clear stay clear.
    residual = []
    for column in others:
        for low in sorted(units, reverse=True):
            value = column.get(low)
            if value:
                column = _combine(column, 1, units[low], -value * units[low][low])
        residual.append(column)

    rows = sorted({i for column in residual for i in column})
    position = {row: i for i, row in enumerate(rows)}
    block = IntMatrix(len(rows), len(residual), (
        (position[i], j, value) for j, column in enumerate(residual) for i, value in column.items()))
    divisors = [1] * (eliminated + len(units))
    if residual:
        divisors.extend(d for d in smith_normal_form(block)[0].diagonal() if d)
    return sorted(divisors)
