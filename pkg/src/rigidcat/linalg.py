"""Exact linear algebra over the rationals.

Everything in this package that needs a kernel, cokernel or rank goes
through these helpers.  Matrices are lists of lists of Fraction; vectors
are lists of Fraction.  No floating point anywhere.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows, cols):
    return [[ZERO] * cols for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch in mat_mul")
    rows, inner = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = zeros(rows, cols)
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += c * bk[j]
    return out


def mat_vec(a, v):
    if a and len(a[0]) != len(v):
        raise ValueError("shape mismatch in mat_vec")
    out = []
    for row in a:
        s = ZERO
        for c, x in zip(row, v):
            if c and x:
                s += c * x
        out.append(s)
    return out


def vec_add(u, v):
    return [a + b for a, b in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def rref(matrix):
    """Row-reduce a copy of `matrix`; returns (reduced rows, pivot columns)."""
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def rank(matrix):
    return len(rref(matrix)[0])


def kernel_basis(matrix):
    """Basis of the right kernel {v : matrix @ v = 0}."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    red, pivots = rref(matrix)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def row_space_basis(vectors):
    """Reduced basis of the span of the given vectors."""
    red, _ = rref(vectors) if vectors else ([], [])
    return red


def solve(matrix, rhs):
    """One solution of matrix @ x = rhs, or None if inconsistent."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [ZERO] * cols
    for i, p in enumerate(pivots):
        x[p] = red[i][cols]
    return x


def in_span(vectors, v):
    """True iff v lies in the span of `vectors`."""
    if not any(v):
        return True
    if not vectors:
        return False
    cols = [[vec[i] for vec in vectors] for i in range(len(v))]
    return solve(cols, v) is not None


class Subspace:
    """Incrementally built subspace with exact membership tests.

    Rows are kept in reduced echelon form keyed by leading coordinate, so
    `add` and `contains` are both single reduction passes.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rows = {}  # leading index -> reduced vector

    def _reduce(self, v):
        v = list(v)
        for lead in sorted(self.rows):
            if v[lead]:
                f = v[lead]
                row = self.rows[lead]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, v):
        """Add a vector; returns True if it enlarged the subspace."""
        v = self._reduce(v)
        for i, x in enumerate(v):
            if x:
                inv = ONE / x
                v = [a * inv for a in v]
                for lead, row in list(self.rows.items()):
                    if row[i]:
                        f = row[i]
                        self.rows[lead] = [a - f * b for a, b in zip(row, v)]
                self.rows[i] = v
                return True
        return False

    def contains(self, v):
        return not any(self._reduce(v))

    def basis(self):
        return [self.rows[lead] for lead in sorted(self.rows)]

    @property
    def rank(self):
        return len(self.rows)
