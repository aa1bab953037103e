"""Exact integer and rational linear algebra.

Vectors are tuples of ints (lattice) or Fractions (rational).  Matrices are
tuples of row tuples.  Nothing here ever touches a float.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

Matrix = tuple[tuple[int, ...], ...]
LatticeVector = tuple[int, ...]
# points of the dual lattice Hom(N, Z); M is reserved for the generator count
DualLattice = tuple[int, ...]


class ColumnRankDeficient(ValueError):
    pass


class NotFullRank(ValueError):
    pass


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def from_columns(columns: Sequence[Sequence[int]]) -> Matrix:
    """Matrix whose j-th column is ``columns[j]``."""
    return transpose(as_matrix(columns))


def transpose(a):
    if not a:
        return ()
    return tuple(zip(*a))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def is_primitive(v) -> bool:
    return vector_gcd(v) == 1


def lcm_denominators(values) -> int:
    out = 1
    for x in values:
        d = Fraction(x).denominator
        out = out * d // gcd(out, d)
    return out


def determinant(a) -> Fraction:
    """Determinant of a square matrix by fraction-exact elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def rank(a) -> int:
    if not a:
        return 0
    m = [[Fraction(x) for x in row] for row in a]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, rows):
            f = m[i][c] / m[r][c]
            if f:
                for k in range(c, cols):
                    m[i][k] -= f * m[r][k]
        r += 1
        if r == rows:
            break
    return r


def solve_rational(a, b) -> Optional[tuple[Fraction, ...]]:
    """Unique exact solution x of ``a @ x = b``, or None if inconsistent.

    ``a`` must have full column rank; otherwise ColumnRankDeficient.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            raise ColumnRankDeficient(f"column {c} is dependent on earlier columns")
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][cols] != 0 for i in range(r, rows)):
        return None
    return tuple(aug[i][cols] for i in range(cols))


def inverse(a) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = solve_rational(a, e)
        cols.append(x)
    return transpose(cols)


def scaled_inverse(a) -> tuple[Matrix, int]:
    """(adj, d) with a^{-1} = adj / d, adj integral and d > 0."""
    inv = inverse(a)
    d = lcm_denominators(x for row in inv for x in row)
    return tuple(tuple(int(x * d) for x in row) for row in inv), d


def lattice_index(generators: Sequence[Sequence[int]]) -> int:
    """|N / N_sigma| for ``rank`` independent generators of an ambient lattice."""
    gens = as_matrix(generators)
    n = len(gens)
    if n == 0:
        return 1
    if any(len(g) != n for g in gens):
        raise NotFullRank("need exactly rank-many generators")
    d = determinant(gens)
    if d == 0:
        raise NotFullRank("generators are linearly dependent")
    return abs(int(d))


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with D diagonal, U and V unimodular."""

    U: Matrix
    V: Matrix
    diag: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def D(self) -> Matrix:
        rows, cols = self.shape
        return tuple(
            tuple(self.diag[i] if i == j and i < len(self.diag) else 0 for j in range(cols))
            for i in range(rows)
        )

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)


def smith_normal_form(a) -> SmithDecomposition:
    a = as_matrix(a)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(r) for r in a]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):  # row_dst += f * row_src
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in m:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def neg_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    add_row(t, i, -q)
                    if m[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    add_col(t, j, -q)
                    if m[t][j]:
                        done = False
            if done:
                # divisibility: every remaining entry must be a multiple of the pivot
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                     if m[i][j] % m[t][t]),
                    None,
                )
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest nonzero entry of row/column t onto the pivot
            cand = [(abs(m[i][t]), i, t) for i in range(t, rows) if m[i][t]]
            cand += [(abs(m[t][j]), t, j) for j in range(t, cols) if m[t][j]]
            _, i, j = min(cand)
            swap_rows(t, i)
            swap_cols(t, j)
        if m[t][t] < 0:
            neg_row(t)
        t += 1

    diag = tuple(m[i][i] for i in range(min(rows, cols)))
    return SmithDecomposition(as_matrix(u), as_matrix(v), diag, (rows, cols))


def integer_kernel(a) -> list[tuple[int, ...]]:
    """A lattice basis of {x in Z^cols : a @ x = 0}."""
    a = as_matrix(a)
    cols = len(a[0]) if a else 0
    snf = smith_normal_form(a)
    r = snf.rank
    vt = transpose(snf.V)
    return [tuple(vt[j]) for j in range(r, cols)]


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form (unimodular row operations only).

    Pivots are positive and entries above each pivot are reduced into
    ``[0, pivot)``.  Zero rows are dropped.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    cols = len(m[0])
    r = 0
    for c in range(cols):
        while True:
            nz = [(abs(m[i][c]), i) for i in range(r, len(m)) if m[i][c]]
            if not nz:
                break
            _, p = min(nz)
            m[r], m[p] = m[p], m[r]
            clean = True
            for i in range(r + 1, len(m)):
                if m[i][c]:
                    q = m[i][c] // m[r][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    if m[i][c]:
                        clean = False
            if clean:
                break
        if r < len(m) and m[r][c]:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == len(m):
                break
    return [tuple(row) for row in m[:r]]
