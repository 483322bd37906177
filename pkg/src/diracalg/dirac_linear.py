"""Linear Dirac structures: Lagrangian subspaces of V + V*.

Coordinates on the paired space are fixed once and for all: the first n
coordinates are the vector part, the last n the covector part in the dual
basis, so the pairing is <(x, xi), (y, eta)> = xi(y) + eta(x).

A Lagrangian subspace is classified by its range R (the vector-part
projection) together with the induced skew form on R; `from_range_form` /
`to_range_form` convert between the two pictures and drive enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import Check, NotLagrangianError, NotSkewError, NotSurjectiveError, passed
from .ratlin import (
    Matrix,
    Subspace,
    Vector,
    format_scalar,
    parse_scalar,
    quotient_map,
    rank,
    solve,
    vdot,
    vector,
    vzero,
)


@dataclass(frozen=True)
class PairedSpace:
    """The split-signature space Q^n + (Q^n)*, dimension 2n."""

    n: int

    @property
    def total_dim(self) -> int:
        return 2 * self.n


def split(space: PairedSpace, u: Sequence) -> tuple[Vector, Vector]:
    u = vector(u)
    if len(u) != space.total_dim:
        raise ValueError(f"element must have length {space.total_dim}")
    return u[: space.n], u[space.n :]


def join(x: Sequence, xi: Sequence) -> Vector:
    return vector(x) + vector(xi)


def pair(space: PairedSpace, u: Sequence, v: Sequence) -> Fraction:
    """<(x, xi), (y, eta)> = xi(y) + eta(x)."""
    x, xi = split(space, u)
    y, eta = split(space, v)
    return vdot(xi, y) + vdot(eta, x)


def is_lagrangian(space: PairedSpace, body: Subspace) -> Check:
    """Pass iff body has dimension n and the pairing vanishes on it."""
    if body.ambient_dim != space.total_dim:
        raise ValueError("subspace does not live in the paired space")
    rows = body.basis_rows()
    for a in range(len(rows)):
        for b in range(a, len(rows)):
            value = pair(space, rows[a], rows[b])
            if value != 0:
                return Check(
                    False,
                    {
                        "reason": "pairing does not vanish",
                        "pair": [a, b],
                        "value": format_scalar(value),
                    },
                )
    if body.dim != space.n:
        return Check(
            False,
            {"reason": "wrong dimension", "dim": body.dim, "expected": space.n},
        )
    return passed()


class DiracSubspace:
    """A Lagrangian subspace of the paired space; certified at construction."""

    __slots__ = ("space", "body")

    def __init__(self, space: PairedSpace, body: Subspace):
        verdict = is_lagrangian(space, body)
        if not verdict:
            raise NotLagrangianError(verdict.witness)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("DiracSubspace is immutable")

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[Sequence]) -> "DiracSubspace":
        return cls(PairedSpace(n), Subspace.span(2 * n, rows))

    @property
    def n(self) -> int:
        return self.space.n

    def basis_rows(self) -> tuple[Vector, ...]:
        return self.body.basis_rows()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DiracSubspace)
            and self.space == other.space
            and self.body == other.body
        )

    def __hash__(self) -> int:
        return hash((self.space, self.body))

    def __repr__(self) -> str:
        return f"DiracSubspace(n={self.n})"

    def to_json(self) -> dict:
        return {"n": self.n, "basis": self.body.to_json()}

    @classmethod
    def from_json(cls, doc: dict) -> "DiracSubspace":
        n = doc["n"]
        rows = [[parse_scalar(e) for e in row] for row in doc["basis"]]
        return cls.from_rows(n, rows)


@dataclass(frozen=True)
class Characteristic:
    g0: Subspace
    g1: Subspace
    p0: Subspace
    p1: Subspace


def characteristic(d: DiracSubspace) -> Characteristic:
    """The four characteristic subspaces of a Lagrangian subspace.

    g0 = {x : (x, 0) in D}, g1 = vector-part projection of D, and p0, p1
    their covector analogues.  For Lagrangian D the annihilator relations
    p1 = g0^o and p0 = g1^o hold exactly; they are asserted here.
    """
    n = d.n
    rows = d.basis_rows()
    g1 = Subspace.span(n, [r[:n] for r in rows])
    p1 = Subspace.span(n, [r[n:] for r in rows])
    vec_axis = Subspace.span(
        2 * n, [join(row, vzero(n)) for row in Subspace.full(n).basis_rows()]
    )
    cov_axis = Subspace.span(
        2 * n, [join(vzero(n), row) for row in Subspace.full(n).basis_rows()]
    )
    g0 = Subspace.span(n, [r[:n] for r in d.body.intersect(vec_axis).basis_rows()])
    p0 = Subspace.span(n, [r[n:] for r in d.body.intersect(cov_axis).basis_rows()])
    assert p1 == g0.annihilator() and p0 == g1.annihilator()
    return Characteristic(g0=g0, g1=g1, p0=p0, p1=p1)


@dataclass(frozen=True)
class RangeFormPresentation:
    """A subspace R together with a skew form on its canonical basis."""

    range: Subspace
    form: Matrix

    def __post_init__(self):
        if self.form.rows != self.range.dim or self.form.cols != self.range.dim:
            raise ValueError("form size must match dim of the range")
        if not self.form.is_skew():
            raise NotSkewError("the form on the range must be antisymmetric")

    def to_json(self) -> dict:
        return {"range": self.range.to_json(), "form": self.form.to_json()}

    @classmethod
    def from_json(cls, ambient_dim: int, doc: dict) -> "RangeFormPresentation":
        rng = Subspace.from_json(ambient_dim, doc["range"])
        form = Matrix.from_json(doc["form"], cols=rng.dim)
        return cls(range=rng, form=form)


def from_range_form(space: PairedSpace, pres: RangeFormPresentation) -> DiracSubspace:
    """D = {(x, xi) : x in R, xi restricted to R equals form(x, .)}."""
    n = space.n
    if pres.range.ambient_dim != n:
        raise ValueError("range must live in Q^n")
    rows = []
    pivots = pres.range.pivots()
    for a, r in enumerate(pres.range.basis_rows()):
        xi = [Fraction(0)] * n
        for b, p in enumerate(pivots):
            xi[p] = pres.form.entries[a][b]
        rows.append(join(r, xi))
    for mu in pres.range.annihilator().basis_rows():
        rows.append(join(vzero(n), mu))
    return DiracSubspace(space, Subspace.span(2 * n, rows))


def to_range_form(d: DiracSubspace) -> RangeFormPresentation:
    """Recover (R, form): R = g1 and form(x, y) = xi(y) for any (x, xi) in D."""
    n = d.n
    rows = d.basis_rows()
    rng = Subspace.span(n, [r[:n] for r in rows])
    vec_cols = Matrix.from_columns([r[:n] for r in rows], rows=n)
    cov_rows = [r[n:] for r in rows]
    xis = []
    for r in rng.basis_rows():
        coeffs = solve(vec_cols, r)
        assert coeffs is not None
        xi = vzero(n)
        for c, w in zip(coeffs, cov_rows):
            if c != 0:
                xi = tuple(e + c * f for e, f in zip(xi, w))
        xis.append(xi)
    form = Matrix(
        [[vdot(xi, r) for r in rng.basis_rows()] for xi in xis],
        cols=rng.dim,
    )
    return RangeFormPresentation(range=rng, form=form)


def reduce(d: DiracSubspace, k: Subspace) -> DiracSubspace:
    """Push a Lagrangian subspace down the quotient by k x {0}.

    The result is {(x + k, xibar) : (x, xi) in D, xi in k^o} in the canonical
    quotient coordinates of `quotient_map`; at the linear level it is always
    Lagrangian.
    """
    n = d.n
    if k.ambient_dim != n:
        raise ValueError("k must live in Q^n")
    projection, section = quotient_map(n, k)
    admissible = Subspace.span(
        2 * n,
        [join(row, vzero(n)) for row in Subspace.full(n).basis_rows()]
        + [join(vzero(n), mu) for mu in k.annihilator().basis_rows()],
    )
    kept = d.body.intersect(admissible)
    st = section.transpose()
    rows = [
        join(projection.apply(r[:n]), st.apply(r[n:])) for r in kept.basis_rows()
    ]
    m = projection.rows
    return DiracSubspace(PairedSpace(m), Subspace.span(2 * m, rows))


def pullback(dbar: DiracSubspace, q: Matrix) -> DiracSubspace:
    """Backward image {(x, q^T xibar) : (q x, xibar) in Dbar} of a surjection q."""
    m = dbar.n
    if q.rows != m:
        raise ValueError("map must land in the base of Dbar")
    n = q.cols
    if rank(q) != m:
        raise NotSurjectiveError(f"map has rank {rank(q)} < {m}")
    # (x, xibar) in Q^(n+m) such that (q x, xibar) lies in the body.
    cut = dbar.body.annihilator().basis  # body = kernel of these functionals
    composed_rows = []
    for row in cut.entries:
        a, b = row[:m], row[m:]
        composed_rows.append(tuple(vdot(a, q.column(j)) for j in range(n)) + b)
    from .ratlin import kernel

    preimage = kernel(Matrix(composed_rows, cols=n + m))
    qt = q.transpose()
    rows = [join(v[:n], qt.apply(v[n:])) for v in preimage.basis_rows()]
    return DiracSubspace(PairedSpace(n), Subspace.span(2 * n, rows))


# ---------------------------------------------------------------------------
# bounded enumeration of range-form presentations
# ---------------------------------------------------------------------------

def _rref_patterns(n: int, r: int) -> Iterator[tuple[tuple[int, ...], list[tuple[int, int]]]]:
    """All pivot-column choices with the free slots of the RREF pattern."""
    for pivots in itertools.combinations(range(n), r):
        free = [
            (i, j)
            for i in range(r)
            for j in range(pivots[i] + 1, n)
            if j not in pivots
        ]
        yield pivots, free


def count_range_forms(n: int, entry_bound: int) -> int:
    """Number of presentations `enumerate_range_forms` would yield."""
    g = 2 * entry_bound + 1
    total = 0
    for r in range(n + 1):
        for _, free in _rref_patterns(n, r):
            total += g ** len(free) * g ** (r * (r - 1) // 2)
    return total


def enumerate_range_forms(n: int, entry_bound: int) -> Iterator[RangeFormPresentation]:
    """All (R, form) pairs with integer entries in [-entry_bound, entry_bound].

    R runs over every subspace of Q^n whose RREF basis has entries in the
    grid, and the form over every skew matrix with grid entries above the
    diagonal.  The order is deterministic: rank ascending, then pivot
    columns, free entries and form entries lexicographically.
    """
    grid = list(range(-entry_bound, entry_bound + 1))
    for r in range(n + 1):
        for pivots, free in _rref_patterns(n, r):
            for values in itertools.product(grid, repeat=len(free)):
                rows = [[Fraction(0)] * n for _ in range(r)]
                for i, p in enumerate(pivots):
                    rows[i][p] = Fraction(1)
                for (i, j), v in zip(free, values):
                    rows[i][j] = Fraction(v)
                rng = Subspace.span(n, rows)
                assert rng.dim == r
                upper = [(a, b) for a in range(r) for b in range(a + 1, r)]
                for fvals in itertools.product(grid, repeat=len(upper)):
                    form = [[Fraction(0)] * r for _ in range(r)]
                    for (a, b), v in zip(upper, fvals):
                        form[a][b] = Fraction(v)
                        form[b][a] = Fraction(-v)
                    yield RangeFormPresentation(
                        range=rng, form=Matrix(form, cols=r)
                    )


def enumerate_lagrangians(n: int, entry_bound: int) -> Iterator[DiracSubspace]:
    """All Lagrangian subspaces arising from the bounded grid of presentations."""
    space = PairedSpace(n)
    for pres in enumerate_range_forms(n, entry_bound):
        yield from_range_form(space, pres)
