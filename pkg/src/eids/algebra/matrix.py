"""Matrices of polynomials over one ring."""

from __future__ import annotations

from itertools import combinations

from .poly import Poly


class PolyMatrix:
    """An m x n matrix of Polys, stored row-major and immutable."""

    def __init__(self, ring, rows):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged matrix")
        base = ring.base_ring
        self.ring = base
        self.rows = tuple(tuple(e if isinstance(e, Poly) else base(e) for e in r) for r in rows)
        for r in self.rows:
            for e in r:
                if e.ring != base:
                    raise ValueError("all entries must share one ring")
        self.m = len(rows)
        self.n = n

    @classmethod
    def from_strings(cls, ring, rows) -> "PolyMatrix":
        return cls(ring, [[ring(s) for s in r] for r in rows])

    @property
    def shape(self):
        return (self.m, self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [e for r in self.rows for e in r]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, list(zip(*self.rows)))

    def map(self, f) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[f(e) for e in r] for r in self.rows])

    def to_ring(self, ring) -> "PolyMatrix":
        base = ring.base_ring
        return PolyMatrix(base, [[e.to_ring(base) for e in r] for r in self.rows])

    def subs(self, values) -> "PolyMatrix":
        return self.map(lambda e: e.subs(values))

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other) -> "PolyMatrix":
        if self.n != other.m:
            raise ValueError("shape mismatch")
        zero = self.ring.zero()
        out = []
        for i in range(self.m):
            row = []
            for j in range(other.n):
                acc = zero
                for k in range(self.n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def row_times(self, covector) -> list:
        """The row vector ``covector . self`` as a list of Polys."""
        if len(covector) != self.m:
            raise ValueError("covector length must equal the row count")
        out = []
        for j in range(self.n):
            acc = self.ring.zero()
            for i, c in enumerate(covector):
                e = self.rows[i][j]
                if e and c:
                    acc = acc + c * e
            out.append(acc)
        return out

    def submatrix(self, rows, cols) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def det(self) -> Poly:
        if self.m != self.n:
            raise ValueError("determinant of a non-square matrix")
        return MinorExpander(self).minor(tuple(range(self.m)), tuple(range(self.n)))

    def minors(self, k: int) -> list:
        """All k x k minors, rows and columns in lexicographic combination order."""
        return MinorExpander(self).all_minors(k)

    def __str__(self):
        return "\n".join("(" + "; ".join(str(e) for e in r) + ")" for r in self.rows)

    def __repr__(self):
        return f"PolyMatrix({self.m}x{self.n})"


class MinorExpander:
    """Laplace expansion along the first chosen row, memoised by (rows, cols)."""

    def __init__(self, M: PolyMatrix):
        self.M = M
        self.cache: dict = {}

    def minor(self, rows: tuple, cols: tuple) -> Poly:
        key = (rows, cols)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        M = self.M
        if len(rows) == 1:
            val = M.rows[rows[0]][cols[0]]
        else:
            r0, rest = rows[0], rows[1:]
            val = M.ring.zero()
            for pos, c in enumerate(cols):
                e = M.rows[r0][c]
                if not e:
                    continue
                sub = self.minor(rest, cols[:pos] + cols[pos + 1:])
                if not sub:
                    continue
                term = e * sub
                val = val - term if pos % 2 else val + term
        self.cache[key] = val
        return val

    def all_minors(self, k: int) -> list:
        M = self.M
        if k == 0:
            return [M.ring.one()]
        if k > min(M.m, M.n):
            return []
        out = []
        for rows in combinations(range(M.m), k):
            for cols in combinations(range(M.n), k):
                out.append(self.minor(rows, cols))
        return out
