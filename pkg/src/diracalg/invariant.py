"""Left-invariant Dirac geometry reduced to the Lie algebra fiber.

On invariant sections the Courant-Dorfman bracket collapses to the purely
algebraic expression ([x, y], ad_x* eta - ad_y* xi); integrability of the
induced invariant structure is equivalent to the vanishing of the cyclic sum
zeta([x, y]) + xi([y, z]) + eta([z, x]) over the subspace.  Both criteria are
implemented independently and must agree instance by instance.
"""

from __future__ import annotations

from typing import Sequence

from .dirac_linear import DiracSubspace, join, split
from .errors import Check, passed
from .liealg import LieAlgebra
from .ratlin import Vector, format_scalar, vdot, vsub


def invariant_courant_bracket(
    g: LieAlgebra,
    left: tuple[Sequence, Sequence],
    right: tuple[Sequence, Sequence],
) -> tuple[Vector, Vector]:
    """Bracket of invariant sections: ([x, y], ad_x* eta - ad_y* xi)."""
    x, xi = left
    y, eta = right
    vec = g.bracket(x, y)
    cov = vsub(g.coad(x, eta), g.coad(y, xi))
    return vec, cov


def cyclic_integrability(g: LieAlgebra, d: DiracSubspace) -> Check:
    """Pass iff zeta([x,y]) + xi([y,z]) + eta([z,x]) = 0 on all basis triples.

    The cyclic sum is alternating and trilinear, so vanishing on triples
    a < b < c of the canonical basis settles it everywhere.
    """
    if d.n != g.dim:
        raise ValueError("subspace and algebra dimensions differ")
    rows = d.basis_rows()
    parts = [split(d.space, r) for r in rows]
    for a in range(len(rows)):
        x, xi = parts[a]
        for b in range(a + 1, len(rows)):
            y, eta = parts[b]
            xy = g.bracket(x, y)
            for c in range(b + 1, len(rows)):
                z, zeta = parts[c]
                total = vdot(zeta, xy) + vdot(xi, g.bracket(y, z)) + vdot(eta, g.bracket(z, x))
                if total != 0:
                    return Check(
                        False,
                        {"triple": [a, b, c], "value": format_scalar(total)},
                    )
    return passed()


def courant_closure_check(g: LieAlgebra, d: DiracSubspace) -> Check:
    """Pass iff the invariant bracket of every basis pair stays in the subspace."""
    if d.n != g.dim:
        raise ValueError("subspace and algebra dimensions differ")
    rows = d.basis_rows()
    parts = [split(d.space, r) for r in rows]
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            vec, cov = invariant_courant_bracket(g, parts[a], parts[b])
            if not d.body.contains(join(vec, cov)):
                return Check(
                    False,
                    {
                        "pair": [a, b],
                        "bracket": [format_scalar(e) for e in join(vec, cov)],
                    },
                )
    return passed()
