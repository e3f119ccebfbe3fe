"""Exact dense linear algebra over the scalar tower.

Matrices are lists of row lists whose entries are Fractions, QuadExt or
TowerScalar values (mixed with ints/Fractions via coercion).  Everything is
plain Gaussian elimination with exact division; no floating point.
"""

from __future__ import annotations

from fractions import Fraction


def mat(rows):
    return [list(r) for r in rows]


def zeros(n, m):
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = transpose(b)
    out = []
    for i in range(n):
        row = a[i]
        out.append([sum(row[t] * bt[j][t] for t in range(k)) for j in range(m)])
    return out


def mat_vec(a, v):
    return [sum(row[t] * v[t] for t in range(len(v))) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a) -> bool:
    return all(x == 0 for row in a for x in row)


def _pick_pivot(rows, col, start):
    """Row index of a pivot in the column, preferring large rationals."""
    best, best_abs = -1, None
    for i in range(start, len(rows)):
        x = rows[i][col]
        if x == 0:
            continue
        try:
            ax = abs(x)
        except TypeError:
            return i
        if best_abs is None or ax > best_abs:
            best, best_abs = i, ax
    return best


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [list(r) for r in a]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        i = _pick_pivot(m, c, r)
        if i < 0:
            continue
        m[r], m[i] = m[i], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for j in range(nrows):
            if j != r and m[j][c] != 0:
                f = m[j][c]
                m[j] = [x - f * y for x, y in zip(m[j], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a) -> int:
    return len(rref(a)[1])


def nullspace(a):
    """Basis of the right kernel {v : a v = 0}, as a list of vectors."""
    if not a:
        return []
    ncols = len(a[0])
    r, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution of a x = b, or None if the system is inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [list(a[i]) + [b[i]] for i in range(nrows)]
    r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][ncols]
    return x


def solve_matrix(a, b):
    """One solution X of a X = b for matrix right-hand sides, or None."""
    cols = []
    for j in range(len(b[0])):
        x = solve(a, [row[j] for row in b])
        if x is None:
            return None
        cols.append(x)
    return transpose(cols)


def inverse(a):
    n = len(a)
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is not invertible")
    return [row[n:] for row in r]


def det(a):
    """Exact determinant by Gaussian elimination over the scalar field."""
    n = len(a)
    m = [list(r) for r in a]
    d = Fraction(1)
    for c in range(n):
        i = _pick_pivot(m, c, c)
        if i < 0:
            return 0 * d
        if i != c:
            m[c], m[i] = m[i], m[c]
            d = -d
        d = d * m[c][c]
        inv = Fraction(1) / m[c][c]
        for j in range(c + 1, n):
            if m[j][c] != 0:
                f = m[j][c] * inv
                m[j] = [x - f * y for x, y in zip(m[j], m[c])]
    return d


def det_int(a) -> int:
    """Fraction-free Bareiss determinant for integer matrices."""
    n = len(a)
    m = [[int(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    m[c], m[i] = m[i], m[c]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


def leading_principal_minors(a):
    """The n determinants of the upper-left k x k blocks, k = 1..n."""
    return [det([row[:k] for row in a[:k]]) for k in range(1, len(a) + 1)]


def column_span_rank(vectors) -> int:
    """Rank of the span of a list of coordinate vectors."""
    if not vectors:
        return 0
    return rank(mat(vectors))


def in_span(vectors, v) -> bool:
    """Whether v lies in the span of the given vectors."""
    if not vectors:
        return all(x == 0 for x in v)
    return solve(transpose(mat(vectors)), list(v)) is not None


def charpoly(a):
    """Characteristic polynomial of a (monic, x^n first) by Faddeev-LeVerrier.

    Returns the coefficient list [1, c_{n-1}, ..., c_0] of
    det(x I - a) = x^n + c_{n-1} x^{n-1} + ... + c_0.
    """
    n = len(a)
    coeffs = [Fraction(1)]
    m = zeros(n, n)
    for k in range(1, n + 1):
        m = mat_mul(a, m)
        for i in range(n):
            m[i][i] = m[i][i] + coeffs[-1]
        c = -sum(mat_mul(a, m)[i][i] for i in range(n)) / k
        coeffs.append(c)
    return coeffs


def poly_eval(coeffs, x):
    out = 0 * x if not isinstance(x, int) else Fraction(0)
    for c in coeffs:
        out = out * x + c
    return out
