"""Shared random generators for the test suite (seeded, deterministic)."""

from __future__ import annotations

import random
from fractions import Fraction

from diracalg import (
    CocycleData,
    DiracSubspace,
    LieAlgebra,
    PairedSpace,
    RangeFormPresentation,
    from_range_form,
)
from diracalg.multiplicative import DualBracket, bracket_to_delta, delta_to_bracket
from diracalg.ratlin import Matrix, Subspace, vector


def rand_entry(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound))


def rand_matrix(rng: random.Random, rows: int, cols: int, bound: int = 5) -> Matrix:
    return Matrix(
        [[rand_entry(rng, bound) for _ in range(cols)] for _ in range(rows)], cols=cols
    )


def rand_vector(rng: random.Random, n: int, bound: int = 5):
    return vector([rand_entry(rng, bound) for _ in range(n)])


def rand_subspace(rng: random.Random, n: int, rows: int | None = None, bound: int = 3) -> Subspace:
    if rows is None:
        rows = rng.randint(0, n)
    return Subspace.span(
        n, [[rand_entry(rng, bound) for _ in range(n)] for _ in range(rows)]
    )


def rand_skew(rng: random.Random, m: int, bound: int = 3) -> Matrix:
    entries = [[Fraction(0)] * m for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            v = rand_entry(rng, bound)
            entries[a][b] = v
            entries[b][a] = -v
    return Matrix(entries, cols=m)


def rand_presentation(rng: random.Random, n: int, bound: int = 3) -> RangeFormPresentation:
    rng_sub = rand_subspace(rng, n, bound=bound)
    return RangeFormPresentation(range=rng_sub, form=rand_skew(rng, rng_sub.dim, bound))


def rand_lagrangian(rng: random.Random, n: int, bound: int = 3) -> DiracSubspace:
    return from_range_form(PairedSpace(n), rand_presentation(rng, n, bound))


def rand_coboundary(
    rng: random.Random, g: LieAlgebra, g0: Subspace, bound: int = 3
) -> CocycleData:
    return CocycleData.coboundary(g, g0, rand_skew(rng, g.dim - g0.dim, bound))


def rand_factored_delta(
    rng: random.Random, g: LieAlgebra, g0: Subspace, bound: int = 3
) -> CocycleData:
    """A linear delta that kills g0: it factors through the quotient."""
    m = g.dim - g0.dim
    probe = CocycleData(g, g0, [Matrix.zero(m, m)] * g.dim)
    per_class = [rand_skew(rng, m, bound) for _ in range(m)]
    delta = []
    for i in range(g.dim):
        xbar = probe.projection.column(i)
        w = Matrix.zero(m, m)
        for a, coeff in enumerate(xbar):
            if coeff != 0:
                w = w + per_class[a].scale(coeff)
        delta.append(w)
    return CocycleData(g, g0, delta)


def permutation_matrix(perm: list[int]) -> Matrix:
    """Matrix sending e_j to e_{perm[j]}."""
    n = len(perm)
    cols = [[Fraction(1) if i == perm[j] else Fraction(0) for i in range(n)] for j in range(n)]
    return Matrix.from_columns(cols, rows=n)


def permute_algebra(g: LieAlgebra, perm: list[int]) -> LieAlgebra:
    """Relabel the basis by e'_{perm[i]} = e_i (a Lie algebra isomorphism)."""
    n = g.dim
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    c = [
        [
            [g.c[inv[i]][inv[j]][inv[k]] for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return LieAlgebra(n, c)


def permute_cocycle_data(data: CocycleData, perm: list[int]) -> CocycleData:
    """Transport (g0, delta) along the basis relabeling.

    The transported delta is rebuilt from the transported dual-bracket table,
    so the new wedge matrices live in the new pivot-complement coordinates.
    """
    g2 = permute_algebra(data.g, perm)
    p = permutation_matrix(perm)
    pull = p.transpose()            # new covector -> old covector
    push = p.inverse().transpose()  # old covector -> new covector
    g0_2 = Subspace.span(data.g.dim, [p.apply(v) for v in data.g0.basis_rows()])
    m = data.m
    probe = CocycleData(g2, g0_2, [Matrix.zero(m, m)] * g2.dim)
    old = delta_to_bracket(data)
    table = []
    for xi2 in probe.p1.basis_rows():
        row = []
        for eta2 in probe.p1.basis_rows():
            value_old = old.value(pull.apply(xi2), pull.apply(eta2))
            row.append(push.apply(value_old))
        table.append(row)
    return bracket_to_delta(DualBracket(probe, table))
