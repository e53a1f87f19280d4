"""Exact integer linear algebra.

Matrices are plain nested sequences of Python ints (row-major); results are
returned as tuples of tuples so they can be hashed and compared.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
LatticeVector = tuple[int, ...]


def _freeze(rows) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def transpose(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def primitive(v: Sequence[int]) -> LatticeVector:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g <= 1:
        return tuple(int(x) for x in v)
    return tuple(int(x) // g for x in v)


def clear_denominators(v: Sequence) -> LatticeVector:
    """Scale a rational vector by a positive integer to a primitive integer vector."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def hnf(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H = U A`` in row echelon
    form: pivots positive, entries above each pivot reduced into
    ``[0, pivot)``, zero rows at the bottom.
    """
    H = [list(map(int, row)) for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine the column below row r into row r
        for i in range(r + 1, m):
            a, b = H[r][c], H[i][c]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [x * s + y * t for s, t in zip(Hr, Hi)]
            H[i] = [-q * s + p * t for s, t in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * s + y * t for s, t in zip(Ur, Ui)]
            U[i] = [-q * s + p * t for s, t in zip(Ur, Ui)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-s for s in H[r]]
            U[r] = [-s for s in U[r]]
        piv = H[r][c]
        for i in range(r):
            q = H[i][c] // piv
            if q:
                H[i] = [s - q * t for s, t in zip(H[i], H[r])]
                U[i] = [s - q * t for s, t in zip(U[i], U[r])]
        r += 1
    return _freeze(H), _freeze(U)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) > 0 and a*x + b*y = g."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    M = [list(map(int, row)) for row in A]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rank(A: Sequence[Sequence]) -> int:
    return len(row_echelon(A))


def row_echelon(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Nonzero rows of the reduced row echelon form over the rationals."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return []
    n = len(M[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return M[:r]


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """A particular rational solution x of A x = b, or None if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R = row_echelon(aug)
    x = [Fraction(0)] * n
    for row in R:
        c = next(j for j, v in enumerate(row) if v != 0)
        if c == n:
            return None
        x[c] = row[n]
    return tuple(x)


def kernel_basis(A: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[LatticeVector]:
    """Basis of the saturated lattice ``{g in Z^cols : A g = 0}``.

    The basis is returned in Hermite normal form, so it is canonical.
    """
    if ncols is None:
        ncols = len(A[0]) if A else 0
    if ncols == 0:
        return []
    if not A:
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    At = transpose(A)
    H, U = hnf(At)
    basis = [U[i] for i in range(len(H)) if not any(H[i])]
    if not basis:
        return []
    Hk, _ = hnf(basis)
    return [row for row in Hk if any(row)]


def cone_index(rays: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by ``rays`` inside its saturation.

    Equals the gcd of the maximal minors of the ray matrix; 1 exactly when
    the rays extend to a lattice basis.
    """
    rays = [tuple(map(int, r)) for r in rays]
    d = len(rays)
    if d == 0:
        return 1
    n = len(rays[0])
    if rank(rays) < d:
        raise ValueError("cone_index needs linearly independent rays")
    g = 0
    for cols in combinations(range(n), d):
        g = gcd(g, det([[r[c] for c in cols] for r in rays]))
        if g == 1:
            break
    return g
