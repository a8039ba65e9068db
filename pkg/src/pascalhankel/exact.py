"""Exact dense matrix kernel over the integers and rationals.

Windows of infinite matrices, products, integer powers (including exact
inverses of unimodular triangular matrices), fraction-free determinants,
LDU factorisation, and rank over F_p.  No floating point anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction


class SingularMinorError(ValueError):
    """A leading principal minor vanished where a nonzero one is required."""

    def __init__(self, order: int):
        super().__init__(f"leading principal minor of order {order} is zero")
        self.order = order


def _as_int(x):
    # collapse Fractions with denominator 1 back to int
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable row-major rectangular matrix of exact numbers.

    Entries are Python ints (or Fractions for triangular factors).  Empty
    matrices are allowed; the determinant of the 0x0 matrix is 1.
    """

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @staticmethod
    def from_rows(rows) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return ExactMatrix(n, m, tuple(x for r in rows for x in r))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, tuple(1 if i == j else 0
                                       for i in range(n) for j in range(n)))

    @staticmethod
    def diagonal(values) -> "ExactMatrix":
        values = list(values)
        n = len(values)
        return ExactMatrix(n, n, tuple(values[i] if i == j else 0
                                       for i in range(n) for j in range(n)))

    def get(self, i: int, j: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        e = self.entries
        m = self.cols
        return ExactMatrix(m, self.rows,
                           tuple(e[i * m + j] for j in range(m)
                                 for i in range(self.rows)))

    def submatrix(self, n: int, m: int | None = None) -> "ExactMatrix":
        """Upper-left n x m block."""
        if m is None:
            m = n
        if n > self.rows or m > self.cols:
            raise ValueError("submatrix larger than matrix")
        e = self.entries
        return ExactMatrix(n, m, tuple(e[i * self.cols + j]
                                       for i in range(n) for j in range(m)))

    def is_square(self) -> bool:
        return self.rows == self.cols


def window(gen, n: int, m: int | None = None, k: int = 0) -> ExactMatrix:
    """n x m window of the infinite matrix gen(i, j), columns starting at k."""
    if m is None:
        m = n
    if n < 0 or m < 0 or k < 0:
        raise ValueError("window parameters must be nonnegative")
    return ExactMatrix(n, m, tuple(gen(i, k + j)
                                   for i in range(n) for j in range(m)))


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    brows = b.to_rows()
    out = []
    w = b.cols
    for i in range(a.rows):
        arow = a.entries[i * a.cols:(i + 1) * a.cols]
        acc = [0] * w
        for l, x in enumerate(arow):
            if x:
                br = brows[l]
                if x == 1:
                    acc = [u + v for u, v in zip(acc, br)]
                else:
                    acc = [u + x * v for u, v in zip(acc, br)]
        out.extend(acc)
    return ExactMatrix(a.rows, b.cols, tuple(out))


def _triangular_kind(a: ExactMatrix) -> str | None:
    upper = all(a.get(i, j) == 0 for i in range(a.rows) for j in range(i))
    if upper:
        return "upper"
    lower = all(a.get(i, j) == 0 for i in range(a.rows) for j in range(i + 1, a.cols))
    return "lower" if lower else None


def unimodular_triangular_inverse(a: ExactMatrix) -> ExactMatrix:
    """Exact integer inverse of a triangular matrix with diagonal entries +-1."""
    if not a.is_square():
        raise ValueError("inverse requires a square matrix")
    kind = _triangular_kind(a)
    if kind is None:
        raise ValueError("matrix is not triangular")
    if any(a.get(i, i) not in (1, -1) for i in range(a.rows)):
        raise ValueError("triangular inverse requires diagonal entries +-1")
    if kind == "lower":
        return unimodular_triangular_inverse(a.transpose()).transpose()
    n = a.rows
    rows = a.to_rows()
    inv = [[0] * n for _ in range(n)]
    for j in range(n):
        # solve A x = e_j by back substitution; division is by +-1
        for i in range(j, -1, -1):
            s = (1 if i == j else 0) - sum(rows[i][k] * inv[k][j]
                                           for k in range(i + 1, j + 1))
            inv[i][j] = s * rows[i][i]
    return ExactMatrix.from_rows(inv)


def mat_pow(a: ExactMatrix, e: int) -> ExactMatrix:
    if not a.is_square():
        raise ValueError("power requires a square matrix")
    if e < 0:
        a = unimodular_triangular_inverse(a)
        e = -e
    result = ExactMatrix.identity(a.rows)
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def determinant(a: ExactMatrix):
    """Exact determinant by single-step Bareiss fraction-free elimination."""
    if not a.is_square():
        raise ValueError("determinant requires a square matrix")
    n = a.rows
    if n == 0:
        return 1
    m = a.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        piv = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (piv * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def leading_principal_minors(a: ExactMatrix) -> list:
    """All leading principal minors det(A^(1)), ..., det(A^(n)) in one
    fraction-free pass.  Requires every minor nonzero (no pivoting);
    raises SingularMinorError otherwise.
    """
    if not a.is_square():
        raise ValueError("minors require a square matrix")
    n = a.rows
    m = a.to_rows()
    minors = []
    prev = 1
    for k in range(n):
        piv = m[k][k]
        if piv == 0:
            raise SingularMinorError(k + 1)
        minors.append(piv)
        for i in range(k + 1, n):
            mi = m[i]
            mk = m[k]
            f = mi[k]
            for j in range(k + 1, n):
                mi[j] = (piv * mi[j] - f * mk[j]) // prev
            mi[k] = 0
        prev = piv
    return minors


@dataclass(frozen=True)
class LDUFactors:
    L: ExactMatrix
    D: tuple
    U: ExactMatrix

    def product(self) -> ExactMatrix:
        p = mat_mul(mat_mul(self.L, ExactMatrix.diagonal(self.D)), self.U)
        return ExactMatrix(p.rows, p.cols, tuple(_as_int(x) for x in p.entries))


def ldu_decompose(a: ExactMatrix) -> LDUFactors:
    """Unique A = L diag(D) U with unit-diagonal triangular L, U.

    D_k equals det(A^(k+1))/det(A^(k)); raises SingularMinorError at the
    first vanishing leading principal minor.
    """
    if not a.is_square():
        raise ValueError("LDU requires a square matrix")
    n = a.rows
    u = [[Fraction(x) for x in row] for row in a.to_rows()]
    l = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
         for i in range(n)]
    for k in range(n):
        if u[k][k] == 0:
            raise SingularMinorError(k + 1)
        for i in range(k + 1, n):
            f = u[i][k] / u[k][k]
            l[i][k] = f
            if f:
                u[i] = [x - f * y for x, y in zip(u[i], u[k])]
    d = [u[k][k] for k in range(n)]
    for k in range(n):
        u[k] = [x / d[k] for x in u[k]]
    return LDUFactors(
        ExactMatrix.from_rows([[_as_int(x) for x in row] for row in l]),
        tuple(_as_int(x) for x in d),
        ExactMatrix.from_rows([[_as_int(x) for x in row] for row in u]),
    )


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(a: ExactMatrix, p: int) -> int:
    """Rank of A reduced entrywise mod p, by Gaussian elimination over F_p.

    Pivot choice is the lowest-index nonzero row, so runs are reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    m = [[x % p for x in row] for row in a.to_rows()]
    nrows, ncols = a.rows, a.cols
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(rank + 1, nrows):
            f = m[i][c]
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


# --- serialization ---------------------------------------------------------

def to_json_dict(a: ExactMatrix) -> dict:
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[str(x) for x in a.row(i)] for i in range(a.rows)],
    }


def to_json(a: ExactMatrix) -> str:
    return json.dumps(to_json_dict(a))


def from_json_dict(d: dict) -> ExactMatrix:
    rows = [[int(x) for x in row] for row in d["entries"]]
    m = ExactMatrix.from_rows(rows)
    if m.rows != d["rows"] or m.cols != d["cols"]:
        raise ValueError("declared dimensions do not match entries")
    return m


def from_json(text: str) -> ExactMatrix:
    return from_json_dict(json.loads(text))


def to_csv(a: ExactMatrix) -> str:
    return "\n".join(",".join(str(x) for x in a.row(i)) for i in range(a.rows))


def from_csv(text: str) -> ExactMatrix:
    rows = [[int(x) for x in line.split(",")]
            for line in text.strip().splitlines() if line.strip()]
    return ExactMatrix.from_rows(rows)
