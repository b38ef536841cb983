"""Dense exact matrices over Z and Q.

Entries are stored as tuples of Python ints (or ``Fraction``), so there is
no overflow at any magnitude and values are hashable and immutable.
"""

from fractions import Fraction
from math import gcd
import operator


class _DenseMatrix:
    __slots__ = ("_data", "_ncols")

    @staticmethod
    def _coerce(x):
        raise NotImplementedError

    def __init__(self, rows=(), ncols=None):
        data = tuple(tuple(self._coerce(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for i, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError(
                    f"row {i} has {len(row)} entries, expected {ncols}")
        object.__setattr__(self, "_data", data)
        object.__setattr__(self, "_ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, nrows=None):
        columns = [tuple(c) for c in columns]
        if nrows is None:
            nrows = len(columns[0]) if columns else 0
        return cls([[c[i] for c in columns] for i in range(nrows)],
                   len(columns))

    @property
    def nrows(self):
        return len(self._data)

    @property
    def ncols(self):
        return self._ncols

    @property
    def shape(self):
        return (len(self._data), self._ncols)

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._data[i][j]
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def rows(self):
        return self._data

    def row(self, i):
        return self._data[i]

    def column(self, j):
        return tuple(row[j] for row in self._data)

    def columns(self):
        return [self.column(j) for j in range(self._ncols)]

    def tolist(self):
        return [list(row) for row in self._data]

    @property
    def T(self):
        return type(self)(
            [[row[j] for row in self._data] for j in range(self._ncols)],
            self.nrows)

    def take_columns(self, indices):
        """Submatrix on the given 0-based column indices, in that order."""
        indices = list(indices)
        return type(self)([[row[j] for j in indices] for row in self._data],
                          len(indices))

    def take_rows(self, indices):
        return type(self)([self._data[i] for i in indices], self._ncols)

    def vstack(self, other):
        if other.ncols != self._ncols:
            raise ValueError("column counts differ")
        return type(self)(self._data + other._data, self._ncols)

    def is_zero(self):
        return all(x == 0 for row in self._data for x in row)

    def __eq__(self, other):
        if not isinstance(other, _DenseMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self._ncols, self._data))

    def __neg__(self):
        return type(self)([[-x for x in row] for row in self._data],
                          self._ncols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shapes differ")
        return _result_type(self, other)(
            [[a + b for a, b in zip(r, s)]
             for r, s in zip(self._data, other._data)], self._ncols)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return _result_type(self, scalar)(
            [[scalar * x for x in row] for row in self._data], self._ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, _DenseMatrix):
            return NotImplemented
        if self._ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return _result_type(self, other)(
            [[sum(a * b for a, b in zip(row, col)) for col in cols]
             for row in self._data], other.ncols)

    def apply(self, vector):
        """Matrix-vector product as a tuple."""
        vector = tuple(vector)
        if len(vector) != self._ncols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(row, vector))
                     for row in self._data)

    def rank(self):
        return len(_echelon_pivots(self._data, self._ncols))

    def det(self):
        if self.nrows != self._ncols:
            raise ValueError("determinant of a non-square matrix")
        return _bareiss_det(self._data)

    def __repr__(self):
        return f"{type(self).__name__}({self.tolist()!r})"

    def __str__(self):
        return "\n".join(" ".join(str(x) for x in row) for row in self._data)


class IntMatrix(_DenseMatrix):
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integer entry {x}")
            return x.numerator
        return operator.index(x)


class RatMatrix(_DenseMatrix):
    """Immutable dense matrix of exact rationals in lowest terms."""

    __slots__ = ()

    @staticmethod
    def _coerce(x):
        return Fraction(x)

    def is_integral(self):
        return all(x.denominator == 1 for row in self._data for x in row)

    def to_int(self):
        return IntMatrix(self._data, self._ncols)


def _result_type(a, b):
    if isinstance(a, RatMatrix) or isinstance(b, (RatMatrix, Fraction)):
        return RatMatrix
    return IntMatrix


def _echelon_pivots(rows, ncols):
    """Pivot columns of a row echelon form, via exact fraction-free steps."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for j in range(ncols):
        p = next((i for i in range(r, len(work)) if work[i][j] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r][j]
        for i in range(r + 1, len(work)):
            f = work[i][j]
            if f:
                work[i] = [piv * a - f * b for a, b in zip(work[i], work[r])]
                g = 0
                for a in work[i]:
                    g = gcd(g, a) if isinstance(a, int) else g
                if g > 1:
                    work[i] = [a // g for a in work[i]]
        pivots.append(j)
        r += 1
        if r == len(work):
            break
    return pivots


def _bareiss_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num / prev if isinstance(num, Fraction) else num // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def as_int_matrix(obj, ncols=None):
    """Accept an IntMatrix or a nested sequence of integers."""
    if isinstance(obj, IntMatrix):
        return obj
    if isinstance(obj, RatMatrix):
        return obj.to_int()
    return IntMatrix(obj, ncols)


def primitive(vector):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in vector:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vector)
    return tuple(x // g for x in vector)


def primitive_from_rational(vector):
    """Smallest positive multiple of a rational vector that is integral and
    primitive."""
    den = 1
    for x in vector:
        x = Fraction(x)
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive(tuple(int(Fraction(x) * den) for x in vector))


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))
