"""Dense exact linear algebra over a :class:`~nesthilb.exactcore.field.Field`."""

from dataclasses import dataclass


@dataclass(frozen=True)
class DenseMatrix:
    field: object
    nrows: int
    ncols: int
    entries: tuple  # tuple of row tuples

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        entries = tuple(tuple(field(c) for c in r) for r in rows)
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        if any(len(r) != ncols for r in entries):
            raise ValueError("ragged matrix")
        return cls(field, len(entries), ncols, entries)

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls.from_rows(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n):
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def rows(self):
        return self.entries

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self):
        return DenseMatrix.from_rows(self.field, [list(c) for c in zip(*self.entries)],
                                     self.nrows)


def rref(M):
    """Reduced row-echelon form (same shape, zero rows last) and rank."""
    rows, pivots = M.field.rref_rows([list(r) for r in M.rows], M.ncols)
    rank = len(rows)
    padded = rows + [[0] * M.ncols for _ in range(M.nrows - rank)]
    return DenseMatrix.from_rows(M.field, padded, M.ncols), rank


def rank(M):
    return len(M.field.rref_rows([list(r) for r in M.rows], M.ncols)[0])


def rank_rows(field, rows, ncols):
    return len(field.rref_rows(rows, ncols)[0])


def kernel_rows(field, rows, ncols):
    """Basis of {v : A v = 0} for the matrix with the given rows."""
    red, pivots = field.rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pc in zip(red, pivots):
            if r[free] != 0:
                v[pc] = field.norm(-r[free])
        basis.append(v)
    return basis


def kernel(M):
    return DenseMatrix.from_rows(M.field, kernel_rows(M.field, [list(r) for r in M.rows], M.ncols),
                                 M.ncols)


def solve_rows(field, rows, rhs, ncols):
    """One solution x of A x = rhs (free variables set to zero), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = field.rref_rows(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [0] * ncols
    for r, pc in zip(red, pivots):
        x[pc] = r[ncols]
    return x


class Subspace:
    """A subspace of k^n stored as an rref basis.

    Rows are kept in pivot order; ``pivots[k]`` is the pivot column of
    ``rows[k]``.
    """

    __slots__ = ("field", "n", "rows", "pivots", "_pivset")

    def __init__(self, field, n, rows=(), reduced=False):
        self.field = field
        self.n = n
        if reduced:
            self.rows = [list(r) for r in rows]
            self.pivots = [next(j for j, c in enumerate(r) if c != 0) for r in self.rows]
        else:
            self.rows, self.pivots = field.rref_rows([list(r) for r in rows], n)
        self._pivset = frozenset(self.pivots)

    @classmethod
    def from_echelon(cls, field, n, rows, pivots):
        obj = cls.__new__(cls)
        obj.field = field
        obj.n = n
        obj.rows = rows
        obj.pivots = pivots
        obj._pivset = frozenset(pivots)
        return obj

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vecs):
        return self.field.reduce_rows(vecs, self.rows, self.pivots, self.n)

    def contains(self, vec):
        return not any(self.reduce([vec])[0])

    def contains_all(self, vecs):
        if not vecs:
            return True
        return all(not any(r) for r in self.reduce(vecs))

    def contains_subspace(self, other):
        return self.contains_all(other.rows)

    def extended(self, vecs):
        return Subspace(self.field, self.n, self.rows + [list(v) for v in vecs])

    def free_columns(self):
        return [j for j in range(self.n) if j not in self._pivset]

    def quotient_coords(self, vecs):
        """Coordinates of vectors modulo this subspace, on the free columns."""
        free = self.free_columns()
        return [[r[j] for j in free] for r in self.reduce(vecs)]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.pivots == other.pivots and self.rows == other.rows)

    def __hash__(self):
        return hash((self.n, tuple(self.pivots), tuple(map(tuple, self.rows))))
