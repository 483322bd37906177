"""Finite-dimensional Lie algebras given by structure constants.

A `LieAlgebra` stores the full table c[i][j][k] with [e_i, e_j] =
sum_k c[i][j][k] e_k.  Antisymmetry and the Jacobi identity are certified at
construction (fail fast); corrupted tables for negative tests are built with
`check=False` and probed through `jacobi_check`.

The coadjoint convention used throughout the package is
    (ad_x* xi)(y) = xi([y, x]),
so the matrix of ad_x* is minus the transpose of the matrix of ad_x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import Check, JacobiError, NotAnIdealError, NotAntisymmetricError, passed
from .ratlin import (
    Matrix,
    Subspace,
    Vector,
    format_scalar,
    frac,
    is_zero_vector,
    parse_scalar,
    quotient_map,
    vadd,
    vbasis,
    vdot,
)


def _raw_bracket(c, x: Sequence, y: Sequence) -> Vector:
    dim = len(c)
    out = [Fraction(0)] * dim
    for i in range(dim):
        xi = frac(x[i])
        if xi == 0:
            continue
        for j in range(dim):
            yj = frac(y[j])
            if yj == 0:
                continue
            coeffs = c[i][j]
            f = xi * yj
            for k in range(dim):
                if coeffs[k] != 0:
                    out[k] += f * coeffs[k]
    return tuple(out)


def _raw_jacobi_check(c) -> Check:
    dim = len(c)
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                ei, ej, ek = vbasis(dim, i), vbasis(dim, j), vbasis(dim, k)
                total = vadd(
                    vadd(
                        _raw_bracket(c, _raw_bracket(c, ei, ej), ek),
                        _raw_bracket(c, _raw_bracket(c, ej, ek), ei),
                    ),
                    _raw_bracket(c, _raw_bracket(c, ek, ei), ej),
                )
                if not is_zero_vector(total):
                    return Check(
                        False,
                        {
                            "triple": [i, j, k],
                            "defect": [format_scalar(t) for t in total],
                        },
                    )
    return passed()


class LieAlgebra:
    __slots__ = ("dim", "names", "c")

    def __init__(
        self,
        dim: int,
        c: Sequence[Sequence[Sequence]],
        names: Optional[Sequence[str]] = None,
        check: bool = True,
    ):
        table = tuple(
            tuple(tuple(frac(e) for e in c[i][j]) for j in range(dim)) for i in range(dim)
        )
        if len(table) != dim or any(
            len(row) != dim or any(len(v) != dim for v in row) for row in table
        ):
            raise ValueError("structure constant table must be dim x dim x dim")
        for i in range(dim):
            for j in range(i, dim):
                for k in range(dim):
                    if table[i][j][k] != -table[j][i][k]:
                        raise NotAntisymmetricError(
                            f"c[{i}][{j}][{k}] != -c[{j}][{i}][{k}]"
                        )
        if names is not None:
            names = tuple(names)
            if len(names) != dim:
                raise ValueError("need one name per basis vector")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "c", table)
        object.__setattr__(self, "names", names)
        if check:
            result = _raw_jacobi_check(table)
            if not result:
                raise JacobiError(result.witness["triple"])

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: dict[tuple[int, int], dict[int, object]],
        names: Optional[Sequence[str]] = None,
        check: bool = True,
    ) -> "LieAlgebra":
        """Build from a sparse {(i, j): {k: coeff}} table; antisymmetric
        completion is applied, so each unordered pair appears once."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            for k, val in coeffs.items():
                v = frac(val)
                c[i][j][k] += v
                c[j][i][k] -= v
        return cls(dim, c, names=names, check=check)

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("coordinate length must equal dim")
        return _raw_bracket(self.c, x, y)

    def jacobi_check(self) -> Check:
        return _raw_jacobi_check(self.c)

    def is_abelian(self) -> bool:
        return all(
            is_zero_vector(self.c[i][j]) for i in range(self.dim) for j in range(self.dim)
        )

    def ad_matrix(self, x: Sequence) -> Matrix:
        """Matrix of y -> [x, y]."""
        cols = [self.bracket(x, vbasis(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, rows=self.dim)

    def coad_matrix(self, x: Sequence) -> Matrix:
        """Matrix of xi -> ad_x* xi, with (ad_x* xi)(y) = xi([y, x])."""
        return (-self.ad_matrix(x)).transpose()

    def coad(self, x: Sequence, xi: Sequence) -> Vector:
        """(ad_x* xi)(y) = xi([y, x]), evaluated on the basis directly."""
        if len(x) != self.dim or len(xi) != self.dim:
            raise ValueError("coordinate length must equal dim")
        out = []
        for k in range(self.dim):
            ck = self.c[k]
            total = Fraction(0)
            for j, xj in enumerate(x):
                if xj:
                    total += xj * vdot(xi, ck[j])
            out.append(total)
        return tuple(out)

    def is_subalgebra(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise ValueError("subspace must live in the algebra's coordinate space")
        rows = s.basis_rows()
        return all(
            s.contains(self.bracket(u, v))
            for a, u in enumerate(rows)
            for v in rows[a + 1 :]
        )

    def is_ideal(self, s: Subspace) -> bool:
        if s.ambient_dim != self.dim:
            raise ValueError("subspace must live in the algebra's coordinate space")
        return all(
            s.contains(self.bracket(vbasis(self.dim, i), v))
            for i in range(self.dim)
            for v in s.basis_rows()
        )

    def derived_algebra(self) -> Subspace:
        rows = [
            self.c[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        ]
        return Subspace.span(self.dim, rows)

    def center(self) -> Subspace:
        # x is central iff sum_i x_i c[i][j][k] = 0 for all j, k.
        rows = [
            [self.c[i][j][k] for i in range(self.dim)]
            for j in range(self.dim)
            for k in range(self.dim)
        ]
        from .ratlin import kernel

        return kernel(Matrix(rows, cols=self.dim))

    def quotient(self, k: Subspace) -> "Quotient":
        """Quotient algebra in pivot-complement coordinates of k."""
        if not self.is_ideal(k):
            raise NotAnIdealError("quotient requires an ideal")
        projection, section = quotient_map(self.dim, k)
        m = projection.rows
        c = [
            [
                projection.apply(self.bracket(section.column(a), section.column(b)))
                for b in range(m)
            ]
            for a in range(m)
        ]
        names = None
        if self.names is not None:
            pivot_set = set(k.pivots())
            names = [self.names[j] for j in range(self.dim) if j not in pivot_set]
        algebra = LieAlgebra(m, c, names=names)
        return Quotient(algebra=algebra, projection=projection, section=section)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.dim, self.c))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim})"

    def to_json(self) -> dict:
        brackets = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                coeffs = {
                    str(k): format_scalar(self.c[i][j][k])
                    for k in range(self.dim)
                    if self.c[i][j][k] != 0
                }
                if coeffs:
                    brackets.append({"i": i, "j": j, "coeffs": coeffs})
        doc = {"dim": self.dim, "brackets": brackets}
        if self.names is not None:
            doc["names"] = list(self.names)
        return doc

    @classmethod
    def from_json(cls, doc: dict, check: bool = True) -> "LieAlgebra":
        dim = doc["dim"]
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("dim must be a non-negative integer")
        sparse: dict[tuple[int, int], dict[int, Fraction]] = {}
        for entry in doc.get("brackets", []):
            i, j = entry["i"], entry["j"]
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket indices ({i}, {j}) out of range")
            coeffs = {int(k): parse_scalar(v) for k, v in entry["coeffs"].items()}
            for k in coeffs:
                if not 0 <= k < dim:
                    raise ValueError(f"coefficient index {k} out of range")
            sparse[(i, j)] = coeffs
        return cls.from_brackets(dim, sparse, names=doc.get("names"), check=check)


@dataclass(frozen=True)
class Quotient:
    """A quotient Lie algebra plus the coordinate maps realizing it."""

    algebra: LieAlgebra
    projection: Matrix
    section: Matrix


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------

def abelian(n: int) -> LieAlgebra:
    names = [f"e{i + 1}" for i in range(n)]
    return LieAlgebra.from_brackets(n, {}, names=names)


def heisenberg3() -> LieAlgebra:
    return LieAlgebra.from_brackets(3, {(0, 1): {2: 1}}, names=["e1", "e2", "e3"])


def sl2() -> LieAlgebra:
    # basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return LieAlgebra.from_brackets(
        3,
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        names=["h", "e", "f"],
    )


def _matrix_unit_algebra(n: int, pairs: list[tuple[int, int]]) -> LieAlgebra:
    index = {p: a for a, p in enumerate(pairs)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, (i, j) in enumerate(pairs):
        for b in range(a + 1, len(pairs)):
            k, l = pairs[b]
            coeffs: dict[int, Fraction] = {}
            # [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
            if j == k and (i, l) in index:
                coeffs[index[(i, l)]] = coeffs.get(index[(i, l)], Fraction(0)) + 1
            if l == i and (k, j) in index:
                coeffs[index[(k, j)]] = coeffs.get(index[(k, j)], Fraction(0)) - 1
            coeffs = {k2: v for k2, v in coeffs.items() if v != 0}
            if coeffs:
                brackets[(a, b)] = coeffs
    names = [f"E{i + 1}{j + 1}" for i, j in pairs]
    return LieAlgebra.from_brackets(len(pairs), brackets, names=names)


def upper_triangular(n: int) -> LieAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    return _matrix_unit_algebra(n, pairs)


def strictly_upper(n: int) -> LieAlgebra:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return _matrix_unit_algebra(n, pairs)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    n1, n2 = g1.dim, g2.dim
    dim = n1 + n2
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n1):
        for j in range(n1):
            for k in range(n1):
                c[i][j][k] = g1.c[i][j][k]
    for i in range(n2):
        for j in range(n2):
            for k in range(n2):
                c[n1 + i][n1 + j][n1 + k] = g2.c[i][j][k]
    names = None
    if g1.names is not None and g2.names is not None:
        names = [f"{x}.1" for x in g1.names] + [f"{x}.2" for x in g2.names]
    return LieAlgebra(dim, c, names=names)
