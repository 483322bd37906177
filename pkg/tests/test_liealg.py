import random
from fractions import Fraction

import pytest

from diracalg import (
    JacobiError,
    LieAlgebra,
    NotAnIdealError,
    abelian,
    direct_sum,
    heisenberg3,
    sl2,
    strictly_upper,
    upper_triangular,
)
from diracalg.ratlin import Matrix, Subspace, vbasis, vzero
from helpers import rand_vector

H, E, F = vbasis(3, 0), vbasis(3, 1), vbasis(3, 2)

ALL_FIXTURES = [
    abelian(1),
    abelian(4),
    heisenberg3(),
    sl2(),
    upper_triangular(2),
    upper_triangular(3),
    strictly_upper(3),
    strictly_upper(4),
    direct_sum(sl2(), abelian(1)),
    direct_sum(heisenberg3(), sl2()),
]


def tampered_sl2() -> LieAlgebra:
    # [e,f] = e instead of h; breaks Jacobi on (h,e,f)
    return LieAlgebra.from_brackets(
        3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {1: 1}}, check=False
    )


class TestConstruction:
    @pytest.mark.parametrize("g", ALL_FIXTURES, ids=lambda g: f"dim{g.dim}")
    def test_fixtures_pass_jacobi(self, g):
        assert g.jacobi_check()

    def test_construction_rejects_bad_jacobi(self):
        with pytest.raises(JacobiError):
            LieAlgebra.from_brackets(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {1: 1}})

    def test_tampered_sl2_witness_triple(self):
        result = tampered_sl2().jacobi_check()
        assert not result
        assert result.witness["triple"] == [0, 1, 2]

    def test_antisymmetry_enforced(self):
        c = [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
        from diracalg import errors

        with pytest.raises(errors.NotAntisymmetricError):
            LieAlgebra(2, c)


class TestBracket:
    def test_sl2_e_f_gives_h(self):
        assert sl2().bracket(E, F) == H

    def test_sl2_h_relations(self):
        g = sl2()
        assert g.bracket(H, E) == tuple(2 * x for x in E)
        assert g.bracket(H, F) == tuple(-2 * x for x in F)

    def test_bracket_with_self_vanishes(self):
        rng = random.Random(0)
        for g in (sl2(), heisenberg3(), upper_triangular(3)):
            for _ in range(10):
                x = rand_vector(rng, g.dim)
                assert g.bracket(x, x) == vzero(g.dim)

    def test_abelian_brackets_vanish(self):
        g = abelian(3)
        assert g.bracket(vbasis(3, 0), vbasis(3, 1)) == vzero(3)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            sl2().bracket([1, 0], [0, 1, 0])


class TestAdCoad:
    def test_abelian_ad_is_zero(self):
        g = abelian(4)
        assert g.ad_matrix(rand_vector(random.Random(1), 4)).is_zero()
        assert g.coad_matrix(vbasis(4, 2)).is_zero()

    def test_sl2_ad_h_eigenvectors(self):
        ad_h = sl2().ad_matrix(H)
        assert ad_h.apply(E) == tuple(2 * x for x in E)
        assert ad_h.apply(F) == tuple(-2 * x for x in F)
        assert ad_h.apply(H) == vzero(3)

    def test_coad_is_minus_ad_transpose(self):
        rng = random.Random(3)
        for g in (sl2(), upper_triangular(3)):
            x = rand_vector(rng, g.dim)
            assert g.coad_matrix(x) == (-g.ad_matrix(x)).transpose()

    def test_coad_duality_on_all_basis_triples(self):
        # (ad_x* xi)(y) = xi([y, x]) exactly, for basis x, xi, y
        for g in (sl2(), heisenberg3(), upper_triangular(3)):
            n = g.dim
            for i in range(n):
                x = vbasis(n, i)
                for a in range(n):
                    xi = vbasis(n, a)
                    coad = g.coad(x, xi)
                    for k in range(n):
                        y = vbasis(n, k)
                        assert coad[k] == g.bracket(y, x)[a]


class TestSubIdealCenter:
    def test_zero_and_full_are_ideals(self):
        for g in (sl2(), upper_triangular(3)):
            assert g.is_ideal(Subspace.zero(g.dim))
            assert g.is_ideal(Subspace.full(g.dim))

    def test_borel_is_subalgebra_not_ideal(self):
        g = sl2()
        borel = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])
        assert g.is_subalgebra(borel)
        assert not g.is_ideal(borel)

    def test_span_e_f_is_not_subalgebra(self):
        assert not sl2().is_subalgebra(Subspace.span(3, [[0, 1, 0], [0, 0, 1]]))

    def test_ut3_derived_is_strictly_upper(self):
        g = upper_triangular(3)
        # basis order E11,E12,E13,E22,E23,E33; strict part sits at slots 1,2,4
        strict = Subspace.span(6, [vbasis(6, 1), vbasis(6, 2), vbasis(6, 4)])
        assert g.derived_algebra() == strict

    def test_ut2_dimensions(self):
        g = upper_triangular(2)
        assert g.dim == 3
        assert g.derived_algebra().dim == 1

    def test_sl2_center_is_zero(self):
        assert sl2().center() == Subspace.zero(3)

    def test_heisenberg_center(self):
        assert heisenberg3().center() == Subspace.span(3, [[0, 0, 1]])

    def test_direct_sum_center_is_abelian_summand(self):
        g = direct_sum(sl2(), abelian(1))
        assert g.dim == 4
        assert g.center() == Subspace.span(4, [[0, 0, 0, 1]])

    @pytest.mark.parametrize("g", [sl2(), heisenberg3(), upper_triangular(3)], ids=str)
    def test_derived_and_center_are_ideals(self, g):
        assert g.is_ideal(g.derived_algebra())
        assert g.is_ideal(g.center())


class TestQuotient:
    def test_quotient_by_zero_is_identity_copy(self):
        g = sl2()
        q = g.quotient(Subspace.zero(3))
        assert q.algebra.c == g.c
        assert q.projection == Matrix.identity(3)

    def test_heisenberg_mod_center_is_abelian(self):
        q = heisenberg3().quotient(Subspace.span(3, [[0, 0, 1]]))
        assert q.algebra.dim == 2
        assert q.algebra.is_abelian()

    def test_ut3_mod_derived_is_abelian3(self):
        g = upper_triangular(3)
        q = g.quotient(g.derived_algebra())
        assert q.algebra.dim == 3
        assert q.algebra.is_abelian()

    def test_quotient_by_non_ideal_raises(self):
        with pytest.raises(NotAnIdealError):
            sl2().quotient(Subspace.span(3, [[1, 0, 0], [0, 1, 0]]))

    def test_projection_is_homomorphism(self):
        rng = random.Random(9)
        cases = [
            (heisenberg3(), Subspace.span(3, [[0, 0, 1]])),
            (upper_triangular(3), upper_triangular(3).derived_algebra()),
            (direct_sum(sl2(), abelian(2)), Subspace.span(5, [[0, 0, 0, 1, 0]])),
        ]
        for g, k in cases:
            q = g.quotient(k)
            for _ in range(10):
                x, y = rand_vector(rng, g.dim), rand_vector(rng, g.dim)
                lhs = q.projection.apply(g.bracket(x, y))
                rhs = q.algebra.bracket(q.projection.apply(x), q.projection.apply(y))
                assert lhs == rhs

    def test_quotient_by_derived_is_abelian(self):
        for g in (sl2(), heisenberg3(), upper_triangular(3), strictly_upper(4)):
            assert g.quotient(g.derived_algebra()).algebra.is_abelian()


class TestFixtureShapes:
    def test_abelian_constants_vanish(self):
        g = abelian(4)
        assert g.is_abelian()

    def test_heisenberg_bracket(self):
        g = heisenberg3()
        assert g.bracket(vbasis(3, 0), vbasis(3, 1)) == vbasis(3, 2)

    def test_strictly_upper_3_is_heisenberg_like(self):
        g = strictly_upper(3)
        assert g.dim == 3
        assert g.derived_algebra().dim == 1

    def test_direct_sum_blocks_commute(self):
        g = direct_sum(sl2(), heisenberg3())
        x = vbasis(6, 0)
        y = vbasis(6, 4)
        assert g.bracket(x, y) == vzero(6)


class TestJson:
    @pytest.mark.parametrize("g", [sl2(), heisenberg3(), upper_triangular(3)], ids=str)
    def test_roundtrip(self, g):
        assert LieAlgebra.from_json(g.to_json()) == g

    def test_names_preserved(self):
        g = LieAlgebra.from_json(sl2().to_json())
        assert g.names == ("h", "e", "f")

    def test_antisymmetric_completion_on_load(self):
        doc = {"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "1/2"}}]}
        g = LieAlgebra.from_json(doc)
        assert g.bracket(vbasis(2, 1), vbasis(2, 0)) == (Fraction(-1, 2), Fraction(0))

    def test_bad_indices_rejected(self):
        with pytest.raises(ValueError):
            LieAlgebra.from_json({"dim": 2, "brackets": [{"i": 0, "j": 5, "coeffs": {}}]})
