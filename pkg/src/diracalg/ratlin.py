"""Exact dense linear algebra over the rationals.

Everything downstream reduces to the primitives here: reduced row-echelon
form, kernels, the subspace lattice (sum, intersection, annihilator) and
canonical quotient coordinates.  Subspaces are kept in RREF so that equality
of subspaces is literal equality of their basis matrices.  All values are
immutable and every operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(frac(e) for e in entries)


@lru_cache(maxsize=None)
def vzero(n: int) -> Vector:
    return (Fraction(0),) * n


@lru_cache(maxsize=None)
def vbasis(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vadd(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vneg(u: Sequence) -> Vector:
    return tuple(-a for a in u)


def vscale(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def vdot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")
    total = Fraction(0)
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


def is_zero_vector(u: Sequence) -> bool:
    return all(frac(a) == 0 for a in u)


def format_scalar(x) -> str:
    """Serialize a rational as "p/q", or "p" when the denominator is 1."""
    return str(frac(x))


def parse_scalar(s) -> Fraction:
    """Parse "p/q" / "p" strings; ints pass through for convenience."""
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, (int, Fraction)):
        return frac(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError(f"not a rational: {s!r}")


def format_vector(u: Sequence) -> list[str]:
    return [format_scalar(a) for a in u]


class Matrix:
    """Immutable dense matrix of Fractions, row-major.

    Zero-row and zero-column matrices are legal; `cols` must be passed
    explicitly when there are no rows to infer it from.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: Optional[int] = None):
        grid = tuple(tuple(frac(e) for e in row) for row in entries)
        if grid:
            width = len(grid[0])
            if any(len(row) != width for row in grid):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} but rows have length {width}")
            cols = width
        elif cols is None:
            raise ValueError("cols is required for a matrix with no rows")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: Optional[int] = None) -> "Matrix":
        columns = [vector(c) for c in columns]
        if columns:
            rows = len(columns[0])
        elif rows is None:
            raise ValueError("rows is required for a matrix with no columns")
        return cls([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.cols)], cols=self.rows)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError(f"matrix is {self.rows}x{self.cols}, vector has length {len(v)}")
        out = []
        for row in self.entries:
            total = Fraction(0)
            for a, b in zip(row, v):
                if a and b:
                    total += a * b
            out.append(total)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return Matrix(
            [[vdot(row, c) for c in cols] for row in self.entries], cols=other.cols
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(
            [vadd(a, b) for a, b in zip(self.entries, other.entries)], cols=self.cols
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix([vneg(row) for row in self.entries], cols=self.cols)

    def scale(self, c) -> "Matrix":
        return Matrix([vscale(c, row) for row in self.entries], cols=self.cols)

    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self.entries)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        n = self.rows
        aug = rref(hstack(self, Matrix.identity(n)))
        left = Matrix([row[:n] for row in aug.entries], cols=n)
        if left != Matrix.identity(n):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in aug.entries], cols=n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(e) for e in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def to_json(self) -> list[list[str]]:
        return [format_vector(row) for row in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[Sequence], cols: Optional[int] = None) -> "Matrix":
        return cls([[parse_scalar(e) for e in row] for row in data], cols=cols)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ValueError("row count mismatch")
    return Matrix(
        [a.entries[i] + b.entries[i] for i in range(a.rows)], cols=a.cols + b.cols
    )


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise ValueError("column count mismatch")
    return Matrix(a.entries + b.entries, cols=a.cols)


def rref(m: Matrix) -> Matrix:
    """Reduced row-echelon form; preserves shape and row space."""
    grid = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivot_row = 0
    for col in range(ncols):
        if pivot_row >= nrows:
            break
        src = next((r for r in range(pivot_row, nrows) if grid[r][col] != 0), None)
        if src is None:
            continue
        grid[pivot_row], grid[src] = grid[src], grid[pivot_row]
        inv = Fraction(1) / grid[pivot_row][col]
        grid[pivot_row] = [inv * e for e in grid[pivot_row]]
        for r in range(nrows):
            if r != pivot_row and grid[r][col] != 0:
                f = grid[r][col]
                grid[r] = [a - f * b for a, b in zip(grid[r], grid[pivot_row])]
        pivot_row += 1
    return Matrix(grid, cols=ncols)


def pivot_columns(m: Matrix) -> list[int]:
    """Pivot columns of a matrix already in RREF."""
    pivots = []
    for row in m.entries:
        for j, e in enumerate(row):
            if e != 0:
                pivots.append(j)
                break
    return pivots


def rank(m: Matrix) -> int:
    return len(pivot_columns(rref(m)))


def kernel(m: Matrix) -> "Subspace":
    """Kernel of the map x -> m @ x, as a subspace of Q^cols."""
    r = rref(m)
    pivots = pivot_columns(r)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    rows = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r.entries[i][f]
        rows.append(v)
    return Subspace.span(m.cols, rows)


def solve(m: Matrix, rhs: Sequence) -> Optional[Vector]:
    """One solution of m @ x = rhs, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length mismatch")
    aug = rref(hstack(m, Matrix.from_columns([rhs], rows=m.rows)))
    x = [Fraction(0)] * m.cols
    for row in aug.entries:
        lead = next((j for j, e in enumerate(row) if e != 0), None)
        if lead is None:
            continue
        if lead == m.cols:
            return None
        x[lead] = row[m.cols]
    return tuple(x)


class Subspace:
    """Linear subspace of Q^n with canonical RREF basis.

    Two subspaces are equal iff their basis matrices are identical; the basis
    has no zero rows, so `dim` is the row count.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix, _canonical: bool = False):
        if not _canonical:
            raise ValueError("use Subspace.span / Subspace.zero / Subspace.full")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def span(cls, ambient_dim: int, rows: Iterable[Sequence]) -> "Subspace":
        rows = [vector(r) for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError(f"row length {len(r)} != ambient dim {ambient_dim}")
        reduced = rref(Matrix(rows, cols=ambient_dim))
        kept = [row for row in reduced.entries if not is_zero_vector(row)]
        return cls(ambient_dim, Matrix(kept, cols=ambient_dim), _canonical=True)

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Subspace":
        return cls.span(m.cols, m.entries)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls.span(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.span(ambient_dim, Matrix.identity(ambient_dim).entries)

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_rows(self) -> tuple[Vector, ...]:
        return self.basis.entries

    def pivots(self) -> list[int]:
        return pivot_columns(self.basis)

    def contains(self, vec: Sequence) -> bool:
        if len(vec) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        v = list(vector(vec))
        for row, p in zip(self.basis.entries, self.pivots()):
            if v[p] != 0:
                c = v[p]
                v = [a - c * b for a, b in zip(v, row)]
        return all(e == 0 for e in v)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(r) for r in other.basis_rows())

    def sum(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(
            self.ambient_dim, list(self.basis_rows()) + list(other.basis_rows())
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return self.annihilator().sum(other.annihilator()).annihilator()

    def annihilator(self) -> "Subspace":
        """Covectors vanishing on this subspace, in dual coordinates."""
        return kernel(self.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def to_json(self) -> list[list[str]]:
        return self.basis.to_json()

    @classmethod
    def from_json(cls, ambient_dim: int, data: Sequence[Sequence]) -> "Subspace":
        return cls.span(ambient_dim, [[parse_scalar(e) for e in row] for row in data])


def quotient_map(v_dim: int, k: Subspace) -> tuple[Matrix, Matrix]:
    """Canonical coordinates on Q^v_dim / k.

    Returns (projection, section): projection has kernel exactly k, and
    section is a right inverse whose image is the pivot complement of k
    (the coordinate subspace on the non-pivot columns of k's RREF basis).
    """
    if k.ambient_dim != v_dim:
        raise ValueError("subspace does not live in Q^v_dim")
    pivots = k.pivots()
    pivot_set = set(pivots)
    complement = [j for j in range(v_dim) if j not in pivot_set]
    proj_rows = []
    for c in complement:
        row = [Fraction(0)] * v_dim
        row[c] = Fraction(1)
        for i, p in enumerate(pivots):
            row[p] = -k.basis.entries[i][c]
        proj_rows.append(row)
    projection = Matrix(proj_rows, cols=v_dim)
    section = Matrix.from_columns(
        [vbasis(v_dim, c) for c in complement], rows=v_dim
    )
    return projection, section
