"""Hermite and Smith normal forms with unimodular transforms.

Conventions
-----------
``hnf`` is row-style: ``H = U @ A`` with pivot columns strictly increasing,
positive pivots, and every entry above a pivot reduced into ``[0, pivot)``.
Zero rows trail.  This makes ``hnf(A).H`` a canonical representative of the
row lattice of ``A``, so two matrices span the same lattice exactly when the
nonzero parts of their Hermite forms are equal.

``snf`` returns ``S = U @ A @ W`` with ``S`` diagonal, nonnegative and
satisfying the divisibility chain.  ``W_inv`` is tracked alongside ``W``
because saturation needs it and inverting a unimodular matrix exactly after
the fact is wasteful.
"""

from dataclasses import dataclass

from .matrix import IntMatrix, as_int_matrix


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def _elimination(a, b):
    """Coefficients ``(x, y, u, v)`` of a determinant-1 operation sending
    ``(a, b)`` to ``(g, 0)``.  When ``a | b`` this is a plain subtraction, so
    the pivot never gets swapped out (which would let SNF cycle)."""
    if b % a == 0:
        return 1, 0, -(b // a), 1
    g, x, y = xgcd(a, b)
    return x, y, -b // g, a // g


def _combine(rows, r, i, x, y, u, v):
    """rows[r], rows[i] <- x*rows[r] + y*rows[i], u*rows[r] + v*rows[i]."""
    rr, ri = rows[r], rows[i]
    rows[r] = [x * p + y * q for p, q in zip(rr, ri)]
    rows[i] = [u * p + v * q for p, q in zip(rr, ri)]


@dataclass(frozen=True)
class HnfResult:
    H: IntMatrix
    U: IntMatrix

    @property
    def rank(self):
        return sum(1 for row in self.H if any(row))

    def basis(self):
        """Nonzero rows of ``H``: the canonical basis of the row lattice."""
        return IntMatrix(self.H.rows()[:self.rank], self.H.ncols)

    @property
    def pivots(self):
        return tuple(next(j for j, x in enumerate(row) if x)
                     for row in self.H.rows()[:self.rank])


def hnf(A):
    A = as_int_matrix(A)
    m, n = A.shape
    H = [list(row) for row in A]
    U = [list(row) for row in IntMatrix.identity(m)]
    r = 0
    for j in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][j]
            if b == 0:
                continue
            a = H[r][j]
            if a == 0:
                H[r], H[i] = H[i], H[r]
                U[r], U[i] = U[i], U[r]
                continue
            x, y, u, v = _elimination(a, b)
            _combine(H, r, i, x, y, u, v)
            _combine(U, r, i, x, y, u, v)
        p = H[r][j]
        if p == 0:
            continue
        if p < 0:
            H[r] = [-t for t in H[r]]
            U[r] = [-t for t in U[r]]
            p = -p
        for i in range(r):
            q = H[i][j] // p
            if q:
                H[i] = [s - q * t for s, t in zip(H[i], H[r])]
                U[i] = [s - q * t for s, t in zip(U[i], U[r])]
        r += 1
    return HnfResult(IntMatrix(H, n), IntMatrix(U, m))


def hnf_basis(A):
    """Canonical basis (nonzero Hermite rows) of the row lattice of ``A``."""
    return hnf(A).basis()


def in_row_lattice(A, vector):
    """Whether an integer vector lies in the row lattice of ``A``."""
    basis = hnf(A).basis()
    v = list(vector)
    if len(v) != basis.ncols:
        raise ValueError("vector length does not match column count")
    for row in basis:
        j = next(k for k, x in enumerate(row) if x)
        q, rem = divmod(v[j], row[j])
        if rem:
            return False
        if q:
            v = [s - q * t for s, t in zip(v, row)]
    return not any(v)


@dataclass(frozen=True)
class SnfResult:
    S: IntMatrix
    U: IntMatrix
    W: IntMatrix
    W_inv: IntMatrix

    @property
    def diagonal(self):
        return tuple(self.S[i, i] for i in range(min(self.S.shape)))

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def snf(A):
    A = as_int_matrix(A)
    m, n = A.shape
    S = [list(row) for row in A]
    U = [list(row) for row in IntMatrix.identity(m)]
    W = [list(row) for row in IntMatrix.identity(n)]  # stored transposed
    Wi = [list(row) for row in IntMatrix.identity(n)]

    def col_combine(t, j, x, y, u, v):
        # columns t, j <- x*Ct + y*Cj, u*Ct + v*Cj; W tracks the same
        # column operation, W_inv the inverse row operation.
        for row in S:
            a, b = row[t], row[j]
            row[t], row[j] = x * a + y * b, u * a + v * b
        _combine(W, t, j, x, y, u, v)
        # inverse of [[x, u], [y, v]] (det 1) acting on rows t, j of W_inv
        _combine(Wi, t, j, v, -u, -y, x)

    def swap_rows(a, b):
        S[a], S[b] = S[b], S[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in S:
            row[a], row[b] = row[b], row[a]
        W[a], W[b] = W[b], W[a]
        Wi[a], Wi[b] = Wi[b], Wi[a]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if S[i][j] and (best is None or abs(S[i][j]) < best[0]):
                    best = (abs(S[i][j]), i, j)
        if best is None:
            break
        _, bi, bj = best
        swap_rows(t, bi)
        swap_cols(t, bj)
        while True:
            for i in range(t + 1, m):
                b = S[i][t]
                if b == 0:
                    continue
                x, y, u, v = _elimination(S[t][t], b)
                _combine(S, t, i, x, y, u, v)
                _combine(U, t, i, x, y, u, v)
            for j in range(t + 1, n):
                b = S[t][j]
                if b == 0:
                    continue
                col_combine(t, j, *_elimination(S[t][t], b))
            if any(S[i][t] for i in range(t + 1, m)):
                continue
            p = S[t][t]
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            S[t] = [s + q for s, q in zip(S[t], S[bad])]
            U[t] = [s + q for s, q in zip(U[t], U[bad])]
        if S[t][t] < 0:
            S[t] = [-s for s in S[t]]
            U[t] = [-s for s in U[t]]
    return SnfResult(IntMatrix(S, n), IntMatrix(U, m),
                     IntMatrix(W, n).T, IntMatrix(Wi, n))


def invariant_factors(A):
    """Nonzero Smith diagonal entries of ``A`` (ones included)."""
    return tuple(d for d in snf(A).diagonal if d)
