"""Multiplicative Dirac data at the infinitesimal level.

The central object is a pair (g0, delta): an ideal g0 of a Lie algebra g
together with a linear map delta from g to the second exterior power of
g/g0.  Wedge elements of g/g0 are stored as skew matrices W in the canonical
pivot-complement coordinates, paired against covectors by

    W(xi, eta) = xibar^T W etabar,        xibar = section^T xi,

so that ubar /\ vbar corresponds to u v^T - v u^T and the duality
delta(x)(xi, eta) = [xi, eta](x) holds literally, with no 1/2 factor.

From delta one derives the dual bracket on p1 = annihilator(g0); its landing
in p1 is the invariance criterion for the characteristic subgroup, and the
Jacobi identity on p1 on top of that is the integrability criterion.  When
integrable, the quotient bracket and the dual bracket assemble into a Lie
algebra on (g/g0) x p1 with mixed coadjoint terms, built by `build_double`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .dirac_linear import DiracSubspace, PairedSpace, join
from .errors import (
    Check,
    NotAbelianError,
    NotAnIdealError,
    NotIntegrableError,
    NotNInvariantError,
    NotSkewError,
    passed,
)
from .liealg import LieAlgebra, Quotient
from .ratlin import (
    Matrix,
    Subspace,
    Vector,
    format_vector,
    frac,
    vadd,
    vbasis,
    vector,
    vdot,
    vscale,
    vsub,
    vzero,
)


def wedge(u: Sequence, v: Sequence) -> Matrix:
    """The skew matrix representing u /\\ v in quotient coordinates."""
    u, v = vector(u), vector(v)
    m = len(u)
    return Matrix(
        [[u[a] * v[b] - v[a] * u[b] for b in range(m)] for a in range(m)], cols=m
    )


class CocycleData:
    """An ideal g0 of g plus a linear map delta: g -> Lambda^2(g/g0).

    delta is given by one skew (dim g - dim g0) matrix per basis vector of g,
    written in the pivot-complement coordinates of g/g0.  Construction
    enforces the ideal and skewness invariants; whether delta actually
    satisfies the cocycle identity is a separate, reported check
    (`cocycle_check`), so corrupted inputs remain representable.
    """

    def __init__(self, algebra: LieAlgebra, g0: Subspace, delta: Sequence[Matrix]):
        if g0.ambient_dim != algebra.dim:
            raise ValueError("g0 must live in the algebra's coordinate space")
        if not algebra.is_ideal(g0):
            raise NotAnIdealError("g0 must be an ideal of g")
        m = algebra.dim - g0.dim
        delta = tuple(delta)
        if len(delta) != algebra.dim:
            raise ValueError("need one wedge matrix per basis vector of g")
        for i, w in enumerate(delta):
            if w.rows != m or w.cols != m:
                raise ValueError(f"delta[{i}] must be {m}x{m}")
            if not w.is_skew():
                raise NotSkewError(f"delta[{i}] is not antisymmetric")
        self.g = algebra
        self.g0 = g0
        self.delta = delta
        self.m = m

    @cached_property
    def quotient(self) -> Quotient:
        return self.g.quotient(self.g0)

    @property
    def projection(self) -> Matrix:
        return self.quotient.projection

    @property
    def section(self) -> Matrix:
        return self.quotient.section

    @cached_property
    def p1(self) -> Subspace:
        return self.g0.annihilator()

    @cached_property
    def p1_pairing(self) -> Matrix:
        """T = (basis of p1) @ section; row a holds the quotient-dual
        coordinates of the a-th p1 basis covector.  Always invertible."""
        return self.p1.basis @ self.section

    @cached_property
    def p1_pairing_inv(self) -> Matrix:
        return self.p1_pairing.inverse()

    @cached_property
    def p1_pivots(self) -> tuple[int, ...]:
        return tuple(self.p1.pivots())

    @cached_property
    def has_trivial_ideal(self) -> bool:
        """g0 = 0: quotient coordinates coincide with the original ones."""
        return self.g0.dim == 0

    def p1_coords(self, xi: Sequence) -> Vector:
        """Coordinates of a p1 element in the canonical RREF basis of p1."""
        if len(xi) != self.g.dim:
            raise ValueError("covector length must equal dim g")
        # membership in p1 = annihilator(g0) means exactly: xi kills g0
        for v in self.g0.basis_rows():
            if vdot(xi, v) != 0:
                raise ValueError("covector does not lie in p1")
        return tuple(frac(xi[p]) for p in self.p1_pivots)

    def lift(self, vbar: Sequence) -> Vector:
        """Section applied to quotient coordinates."""
        if self.has_trivial_ideal:
            return vector(vbar)
        return self.section.apply(vbar)

    def project(self, v: Sequence) -> Vector:
        """Projection to quotient coordinates."""
        if self.has_trivial_ideal:
            return vector(v)
        return self.projection.apply(v)

    def p1_element(self, coords: Sequence) -> Vector:
        rows = self.p1.basis_rows()
        out = vzero(self.g.dim)
        for c, row in zip(coords, rows):
            if frac(c) != 0:
                out = vadd(out, vscale(c, row))
        return out

    def quotient_dual_coords(self, xi: Sequence) -> Vector:
        """The element of (g/g0)* induced by xi in p1, i.e. section^T xi."""
        return self.section.transpose().apply(xi)

    def p1_lift_dual(self, xibar: Sequence) -> Vector:
        """The unique p1 element whose quotient-dual coordinates are xibar."""
        coords = self.p1_pairing_inv.transpose().apply(xibar)
        return self.p1_element(coords)

    @cached_property
    def dual_bracket(self) -> "DualBracket":
        n, m = self.g.dim, self.m
        rows = self.p1.basis_rows()
        bars = [self.quotient_dual_coords(xi) for xi in rows]
        table = [
            [
                tuple(vdot(bars[a], self.delta[i].apply(bars[b])) for i in range(n))
                for b in range(m)
            ]
            for a in range(m)
        ]
        return DualBracket(self, table)

    def delta_of(self, x: Sequence) -> Matrix:
        """delta(x) as a skew matrix, extended linearly from the basis."""
        x = vector(x)
        if len(x) != self.g.dim:
            raise ValueError("coordinate length must equal dim g")
        out = Matrix.zero(self.m, self.m)
        for xi, w in zip(x, self.delta):
            if xi != 0:
                out = out + w.scale(xi)
        return out

    def evaluate_delta(self, x: Sequence, xi: Sequence, eta: Sequence) -> Fraction:
        """delta(x)(xi, eta) for covectors xi, eta in p1."""
        xibar = self.quotient_dual_coords(xi)
        etabar = self.quotient_dual_coords(eta)
        return vdot(xibar, self.delta_of(x).apply(etabar))

    def action_matrix(self, z: Sequence) -> Matrix:
        """Matrix of [z, .] on g/g0 in quotient coordinates."""
        return self.projection @ self.g.ad_matrix(z) @ self.section

    @cached_property
    def basis_actions(self) -> tuple[Matrix, ...]:
        return tuple(
            self.action_matrix(vbasis(self.g.dim, i)) for i in range(self.g.dim)
        )

    def act_on_wedge(self, z: Sequence, w: Matrix) -> Matrix:
        """The derived action of z on Lambda^2(g/g0):
        z . (u /\\ v) = [z, u] /\\ v + u /\\ [z, v]."""
        a = self.action_matrix(z)
        return a @ w + w @ a.transpose()

    @classmethod
    def coboundary(
        cls, algebra: LieAlgebra, g0: Subspace, lam: Matrix
    ) -> "CocycleData":
        """The coboundary delta(x) = x . lam of a wedge element lam."""
        probe = cls(algebra, g0, [Matrix.zero(algebra.dim - g0.dim, algebra.dim - g0.dim)] * algebra.dim)
        if not lam.is_skew() or lam.rows != probe.m:
            raise NotSkewError("lam must be a skew matrix on g/g0")
        delta = [
            probe.act_on_wedge(vbasis(algebra.dim, i), lam)
            for i in range(algebra.dim)
        ]
        return cls(algebra, g0, delta)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CocycleData)
            and self.g == other.g
            and self.g0 == other.g0
            and self.delta == other.delta
        )

    def __hash__(self) -> int:
        return hash((self.g, self.g0, self.delta))

    def to_json(self) -> dict:
        return {
            "algebra": self.g.to_json(),
            "g0": self.g0.to_json(),
            "delta": [w.to_json() for w in self.delta],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CocycleData":
        algebra = LieAlgebra.from_json(doc["algebra"])
        g0 = Subspace.from_json(algebra.dim, doc["g0"])
        m = algebra.dim - g0.dim
        delta = [Matrix.from_json(w, cols=m) for w in doc["delta"]]
        return cls(algebra, g0, delta)


def cocycle_check(data: CocycleData) -> Check:
    """Pass iff delta([x, y]) = x . delta(y) - y . delta(x) on basis pairs."""
    g = data.g
    acts = data.basis_actions
    for i in range(g.dim):
        ei = vbasis(g.dim, i)
        for j in range(i + 1, g.dim):
            ej = vbasis(g.dim, j)
            lhs = data.delta_of(g.bracket(ei, ej))
            ai, aj = acts[i], acts[j]
            rhs = (ai @ data.delta[j] + data.delta[j] @ ai.transpose()) - (
                aj @ data.delta[i] + data.delta[i] @ aj.transpose()
            )
            if lhs != rhs:
                return Check(
                    False,
                    {"pair": [i, j], "defect": (lhs - rhs).to_json()},
                )
    return passed()


class DualBracket:
    """The antisymmetric bracket on p1 dual to delta.

    table[a][b] is the covector [xi_a, xi_b] in g* for the canonical basis
    covectors of p1; values need not lie in p1.  Bilinear extension and the
    mixed coadjoint map are provided as methods.
    """

    def __init__(self, data: CocycleData, table: Sequence[Sequence[Vector]]):
        m = data.m
        table = tuple(tuple(vector(v) for v in row) for row in table)
        if len(table) != m or any(len(row) != m for row in table):
            raise ValueError("table must be m x m")
        for a in range(m):
            for b in range(a, m):
                if table[a][b] != vector([-e for e in table[b][a]]):
                    raise ValueError("table must be antisymmetric")
        self.data = data
        self.table = table

    @property
    def g(self) -> LieAlgebra:
        return self.data.g

    @property
    def g0(self) -> Subspace:
        return self.data.g0

    @property
    def p1(self) -> Subspace:
        return self.data.p1

    def value(self, xi: Sequence, eta: Sequence) -> Vector:
        """[xi, eta] in g* for arbitrary xi, eta in p1."""
        cs = self.data.p1_coords(xi)
        ds = self.data.p1_coords(eta)
        out = [Fraction(0)] * self.g.dim
        for a, ca in enumerate(cs):
            if ca == 0:
                continue
            for b, db in enumerate(ds):
                if db == 0:
                    continue
                f = ca * db
                entry = self.table[a][b]
                for k in range(self.g.dim):
                    if entry[k] != 0:
                        out[k] += f * entry[k]
        return tuple(out)

    def mixed_coad(self, xi: Sequence, x: Sequence) -> Vector:
        """The class of ad*_xi x in g/g0, defined by eta(ad*_xi x) = [eta, xi](x)."""
        cs = self.data.p1_coords(xi)
        m = self.data.m
        rhs = []
        for a in range(m):
            total = Fraction(0)
            for b, cb in enumerate(cs):
                if cb != 0:
                    total += cb * vdot(self.table[a][b], x)
            rhs.append(total)
        if self.data.has_trivial_ideal:
            return tuple(rhs)
        return self.data.p1_pairing_inv.apply(rhs)

    def mixed_coad_basis(self, xi: Sequence, i: int) -> Vector:
        """mixed_coad against the i-th basis vector of g."""
        cs = self.data.p1_coords(xi)
        m = self.data.m
        rhs = []
        for a in range(m):
            total = Fraction(0)
            for b, cb in enumerate(cs):
                if cb != 0 and self.table[a][b][i]:
                    total += cb * self.table[a][b][i]
            rhs.append(total)
        if self.data.has_trivial_ideal:
            return tuple(rhs)
        return self.data.p1_pairing_inv.apply(rhs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DualBracket)
            and self.data == other.data
            and self.table == other.table
        )


def delta_to_bracket(data: CocycleData) -> DualBracket:
    """[xi, eta](x) = delta(x)(xi, eta), tabulated on the p1 basis."""
    return data.dual_bracket


def bracket_to_delta(b: DualBracket) -> CocycleData:
    """Invert `delta_to_bracket`: rebuild the wedge matrices from the table."""
    data = b.data
    n, m = data.g.dim, data.m
    t_inv = data.p1_pairing_inv
    t_inv_t = t_inv.transpose()
    delta = []
    for i in range(n):
        f = Matrix(
            [[b.table[a][c][i] for c in range(m)] for a in range(m)], cols=m
        )
        delta.append(t_inv @ f @ t_inv_t)
    return CocycleData(data.g, data.g0, delta)


def n_invariance_check(b: DualBracket) -> Check:
    """Pass iff every bracket value lies in p1 (equivalently, delta kills g0)."""
    for a in range(b.data.m):
        for c in range(a + 1, b.data.m):
            if not b.p1.contains(b.table[a][c]):
                return Check(
                    False,
                    {
                        "pair": [a, c],
                        "value": format_vector(b.table[a][c]),
                        "reason": "bracket value escapes p1",
                    },
                )
    return passed()


def integrability_check(b: DualBracket) -> Check:
    """Pass iff the bracket restricts to p1 and satisfies Jacobi there."""
    landing = n_invariance_check(b)
    if not landing:
        return landing
    rows = b.p1.basis_rows()
    for a in range(len(rows)):
        for c in range(a + 1, len(rows)):
            for e in range(c + 1, len(rows)):
                total = vadd(
                    vadd(
                        b.value(b.value(rows[a], rows[c]), rows[e]),
                        b.value(b.value(rows[c], rows[e]), rows[a]),
                    ),
                    b.value(b.value(rows[e], rows[a]), rows[c]),
                )
                if not all(x == 0 for x in total):
                    return Check(
                        False,
                        {
                            "triple": [a, c, e],
                            "defect": format_vector(total),
                            "reason": "Jacobi fails on p1",
                        },
                    )
    return passed()


def ppart_identity_check(data: CocycleData) -> Check:
    """The covector-side consequence of the cocycle identity:

    ad_x*[xi, eta] = [ad_x* xi, eta] - [ad_x* eta, xi]
                     + ad*_{ad*_eta x} xi - ad*_{ad*_xi x} eta
    on all basis combinations.
    """
    b = delta_to_bracket(data)
    g = data.g
    rows = data.p1.basis_rows()
    for i in range(g.dim):
        x = vbasis(g.dim, i)
        coad_x = g.coad_matrix(x)
        for a in range(len(rows)):
            xi = rows[a]
            for c in range(a + 1, len(rows)):
                eta = rows[c]
                lhs = coad_x.apply(b.value(xi, eta))
                lift1 = data.lift(b.mixed_coad_basis(eta, i))
                lift2 = data.lift(b.mixed_coad_basis(xi, i))
                rhs = vadd(
                    vsub(
                        b.value(coad_x.apply(xi), eta),
                        b.value(coad_x.apply(eta), xi),
                    ),
                    vsub(g.coad(lift1, xi), g.coad(lift2, eta)),
                )
                if lhs != rhs:
                    return Check(
                        False,
                        {
                            "x": i,
                            "pair": [a, c],
                            "defect": format_vector(vsub(lhs, rhs)),
                        },
                    )
    return passed()


def gpart_identity_check(data: CocycleData) -> Check:
    """The vector-side consequence of the cocycle identity, valued in g/g0:

    ad*_xi [x, y] = [ad*_xi x, y] - [ad*_xi y, x]
                    - ad*_{ad_x* xi} y + ad*_{ad_y* xi} x.
    """
    b = delta_to_bracket(data)
    g = data.g
    rows = data.p1.basis_rows()
    for i in range(g.dim):
        x = vbasis(g.dim, i)
        for j in range(i + 1, g.dim):
            y = vbasis(g.dim, j)
            xy = g.bracket(x, y)
            for xi in rows:
                lhs = b.mixed_coad(xi, xy)
                q1 = data.project(g.bracket(data.lift(b.mixed_coad_basis(xi, i)), y))
                q2 = data.project(g.bracket(data.lift(b.mixed_coad_basis(xi, j)), x))
                q3 = b.mixed_coad_basis(g.coad(x, xi), j)
                q4 = b.mixed_coad_basis(g.coad(y, xi), i)
                rhs = vadd(vsub(q1, q2), vsub(q4, q3))
                if lhs != rhs:
                    return Check(
                        False,
                        {
                            "pair": [i, j],
                            "defect": format_vector(vsub(lhs, rhs)),
                        },
                    )
    return passed()


@dataclass(frozen=True)
class DoubleAlgebra:
    """The Lie algebra on (g/g0) x p1 built from an integrable pair.

    Coordinates: the first m slots are quotient coordinates, the last m are
    coordinates in the canonical basis of p1.
    """

    algebra: LieAlgebra
    data: CocycleData

    @property
    def m(self) -> int:
        return self.data.m

    def to_coords(self, elem: tuple[Sequence, Sequence]) -> Vector:
        xbar, xi = elem
        return vector(xbar) + self.data.p1_coords(xi)

    def from_coords(self, v: Sequence) -> tuple[Vector, Vector]:
        v = vector(v)
        return v[: self.m], self.data.p1_element(v[self.m :])

    def bracket_elements(
        self, left: tuple[Sequence, Sequence], right: tuple[Sequence, Sequence]
    ) -> tuple[Vector, Vector]:
        out = self.algebra.bracket(self.to_coords(left), self.to_coords(right))
        return self.from_coords(out)

    def pairing(self, left: tuple[Sequence, Sequence], right: tuple[Sequence, Sequence]) -> Fraction:
        """<(xbar, xi), (ybar, eta)> = xi(ybar-lift) + eta(xbar-lift)."""
        xbar, xi = left
        ybar, eta = right
        return vdot(self.data.quotient_dual_coords(xi), ybar) + vdot(
            self.data.quotient_dual_coords(eta), xbar
        )


def build_double(data: CocycleData) -> DoubleAlgebra:
    """Assemble the double bracket

    [(x + g0, xi), (y + g0, eta)] =
        ([x, y] - ad*_eta x + ad*_xi y + g0,  [xi, eta] + ad_x* eta - ad_y* xi)

    into a certified Lie algebra of dimension 2 dim(g/g0).
    """
    b = delta_to_bracket(data)
    verdict = integrability_check(b)
    if not verdict:
        raise NotIntegrableError(f"dual bracket is not a Lie bracket: {verdict.witness}")
    m = data.m
    g = data.g
    dim2 = 2 * m
    quot = data.quotient.algebra
    c = [[[Fraction(0)] * dim2 for _ in range(dim2)] for _ in range(dim2)]

    def put(i: int, j: int, vec: Sequence, cov_coords: Sequence):
        entry = list(vec) + list(cov_coords)
        for k, val in enumerate(entry):
            c[i][j][k] = frac(val)
            c[j][i][k] = -frac(val)

    p1_rows = data.p1.basis_rows()
    for a in range(m):
        for bb in range(a + 1, m):
            put(a, bb, quot.c[a][bb], vzero(m))
    for a in range(m):
        x = data.section.column(a)
        coad_x = g.coad_matrix(x)
        for bb in range(m):
            xi = p1_rows[bb]
            vec = vector([-e for e in b.mixed_coad(xi, x)])
            cov = data.p1_coords(coad_x.apply(xi))
            put(a, m + bb, vec, cov)
    for a in range(m):
        for bb in range(a + 1, m):
            cov = data.p1_coords(b.table[a][bb])
            put(m + a, m + bb, vzero(m), cov)

    names = None
    if g.names is not None:
        pivot_set = set(data.g0.pivots())
        names = [g.names[j] for j in range(g.dim) if j not in pivot_set] + [
            f"xi{a + 1}" for a in range(m)
        ]
    algebra = LieAlgebra(dim2, c, names=names)
    return DoubleAlgebra(algebra=algebra, data=data)


def infinitesimal_action(
    data: CocycleData, y: Sequence, elem: tuple[Sequence, Sequence]
) -> tuple[Vector, Vector]:
    """Derivative of the group action on (g/g0) x p1 along y:

        y . (x + g0, xi) = ([y, x] - ad*_xi y + g0,  ad_y* xi).

    Requires the dual bracket to land in p1, which is what makes the mixed
    coadjoint term vanish on lifts of the same class.
    """
    b = delta_to_bracket(data)
    landing = n_invariance_check(b)
    if not landing:
        raise NotNInvariantError(f"dual bracket escapes p1: {landing.witness}")
    xbar, xi = elem
    xbar = vector(xbar)
    xi = vector(xi)
    if not data.p1.contains(xi):
        raise ValueError("covector part must lie in p1")
    y = vector(y)
    x = data.lift(xbar)
    vec = vsub(data.project(data.g.bracket(y, x)), b.mixed_coad(xi, y))
    cov = data.g.coad(y, xi)
    return vec, cov


def abelian_fiber(data: CocycleData, r: Sequence) -> DiracSubspace:
    """The fiber at the point r of the structure an abelian algebra's data
    integrates to: D(r) = {(delta(r)#(xi) + x, xi) : xi in p1, x in g0}."""
    if not data.g.is_abelian():
        raise NotAbelianError("pointwise fibers are only realized for abelian g")
    n = data.g.dim
    r = vector(r)
    if len(r) != n:
        raise ValueError("point must have algebra dimension")
    sharp = data.section @ data.delta_of(r).transpose() @ data.section.transpose()
    rows = [join(sharp.apply(xi), xi) for xi in data.p1.basis_rows()]
    rows += [join(x, vzero(n)) for x in data.g0.basis_rows()]
    return DiracSubspace(PairedSpace(n), Subspace.span(2 * n, rows))


def abelian_multiplicativity_check(
    data: CocycleData, r: Sequence, s: Sequence
) -> Check:
    """Groupoid compatibility of the abelian fibers: every (u, xi) in D(r+s)
    splits as u = v + w with (v, xi) in D(r) and (w, xi) in D(s)."""
    n = data.g.dim
    d_r = abelian_fiber(data, r)
    d_s = abelian_fiber(data, s)
    d_rs = abelian_fiber(data, vadd(vector(r), vector(s)))
    rows_r = d_r.basis_rows()
    cov_block = Matrix.from_columns([row[n:] for row in rows_r], rows=n)
    from .ratlin import solve

    for idx, row in enumerate(d_rs.basis_rows()):
        u, xi = row[:n], row[n:]
        coeffs = solve(cov_block, xi)
        if coeffs is None:
            return Check(False, {"row": idx, "reason": "no element of D(r) carries the covector"})
        v = vzero(n)
        for cqt, rrow in zip(coeffs, rows_r):
            if cqt != 0:
                v = vadd(v, vscale(cqt, rrow[:n]))
        w = vsub(u, v)
        if not d_s.body.contains(join(w, xi)):
            return Check(
                False,
                {"row": idx, "reason": "residual part misses D(s)", "residual": format_vector(w)},
            )
    return passed()
