"""Exact sparse linear algebra: rank, kernel dimension, sign comparison.

Matrices are stored as canonical sorted triplet lists over an explicit field
from :mod:`operad_lab.scalars`.  Elimination is exact (Fraction or modular);
a dense path takes over when the matrix is more than a quarter full.
"""

from .scalars import same_field

DENSE_DENSITY = 0.25


class LinalgError(ValueError):
    """Shape mismatch or field mismatch."""


class SparseMatrix:
    """Immutable exact matrix in canonical triplet form.

    Entries are kept sorted by (row, col) with duplicates summed and zeros
    dropped, so two equal matrices always have identical entry lists.
    """

    __slots__ = ("n_rows", "n_cols", "field", "entries")

    def __init__(self, n_rows, n_cols, field, triples=()):
        if n_rows < 0 or n_cols < 0:
            raise LinalgError("negative matrix dimensions")
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.field = field
        acc = {}
        for r, c, v in triples:
            if not (0 <= r < n_rows and 0 <= c < n_cols):
                raise LinalgError(f"entry ({r},{c}) outside {n_rows}x{n_cols}")
            key = (r, c)
            acc[key] = field.add(acc[key], v) if key in acc else v
        self.entries = tuple(
            (r, c, v) for (r, c), v in sorted(acc.items()) if not field.is_zero(v)
        )

    @property
    def nnz(self):
        return len(self.entries)

    @property
    def density(self):
        cells = self.n_rows * self.n_cols
        return 0.0 if cells == 0 else self.nnz / cells

    def to_dense(self):
        rows = [[self.field.zero] * self.n_cols for _ in range(self.n_rows)]
        for r, c, v in self.entries:
            rows[r][c] = v
        return rows

    def transpose(self):
        return SparseMatrix(
            self.n_cols, self.n_rows, self.field, [(c, r, v) for r, c, v in self.entries]
        )

    def rank(self):
        if self.nnz == 0:
            return 0
        if self.density > DENSE_DENSITY:
            return _dense_rank(self.to_dense(), self.field)
        return _sparse_rank(self)

    def kernel_dim(self):
        r = self.rank()
        assert 0 <= r <= min(self.n_rows, self.n_cols)
        return self.n_cols - r

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.n_rows == other.n_rows
            and self.n_cols == other.n_cols
            and same_field(self.field, other.field)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, self.field.signature(), self.entries))

    def __repr__(self):
        return f"SparseMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz}, {self.field.label})"


def _dense_rank(rows, field):
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        sel = None
        for r in range(pivot_row, n_rows):
            if not field.is_zero(rows[r][col]):
                sel = r
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        inv = field.inv(rows[pivot_row][col])
        prow = rows[pivot_row]
        for r in range(pivot_row + 1, n_rows):
            factor = rows[r][col]
            if field.is_zero(factor):
                continue
            factor = field.mul(factor, inv)
            row = rows[r]
            for c in range(col, n_cols):
                row[c] = field.sub(row[c], field.mul(factor, prow[c]))
        pivot_row += 1
        rank += 1
        if pivot_row == n_rows:
            break
    return rank


def _sparse_rank(mat):
    field = mat.field
    rows = {}
    for r, c, v in mat.entries:
        rows.setdefault(r, {})[c] = v
    work = [d for d in rows.values() if d]
    by_col = {}
    for idx, d in enumerate(work):
        for c in d:
            by_col.setdefault(c, set()).add(idx)
    eliminated = [False] * len(work)
    rank = 0
    for col in range(mat.n_cols):
        cands = [i for i in by_col.get(col, ()) if not eliminated[i] and col in work[i]]
        if not cands:
            continue
        pivot = min(cands, key=lambda i: len(work[i]))
        eliminated[pivot] = True
        rank += 1
        prow = work[pivot]
        inv = field.inv(prow[col])
        for i in cands:
            if i == pivot:
                continue
            row = work[i]
            factor = field.mul(row[col], inv)
            for c, v in prow.items():
                nv = field.sub(row.get(c, field.zero), field.mul(factor, v))
                if field.is_zero(nv):
                    row.pop(c, None)
                else:
                    if c not in row:
                        by_col.setdefault(c, set()).add(i)
                    row[c] = nv
    return rank


def equal_up_to_global_sign(a, b):
    """Return +1 if a == b, -1 if a == -b, else None.  Zero matrices give +1."""
    if a.n_rows != b.n_rows or a.n_cols != b.n_cols or not same_field(a.field, b.field):
        return None
    if a.entries == b.entries:
        return 1
    field = a.field
    if len(a.entries) == len(b.entries) and all(
        ra == rb and ca == cb and field.is_zero(field.add(va, vb))
        for (ra, ca, va), (rb, cb, vb) in zip(a.entries, b.entries)
    ):
        return -1
    return None
