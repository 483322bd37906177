"""A multiplicative structure that is not invariant under its characteristic
subgroup, worked end to end on the abelian algebra Q^3.

The data: g0 = span{e3} and a linear map delta sending e3 to the wedge
e1 ^ e2 on the quotient.  Every linear delta on an abelian algebra is a
cocycle, so the data is admissible; the point of the example is that the
dual bracket on p1 = span{e1*, e2*} escapes p1, so the structure is neither
invariant under the subgroup integrating g0 nor integrable.

Run:  python3 demos/01_counterexample_on_q3.py
"""

from fractions import Fraction

from diracalg import (
    CocycleData,
    abelian,
    abelian_fiber,
    abelian_multiplicativity_check,
    cocycle_check,
    delta_to_bracket,
    integrability_check,
    n_invariance_check,
)
from diracalg.ratlin import Matrix, Subspace, format_vector


def show(title, check):
    status = "pass" if check.ok else f"FAIL  witness={check.witness}"
    print(f"  {title:<22} {status}")


def main():
    g = abelian(3)
    g0 = Subspace.span(3, [[0, 0, 1]])
    zero = Matrix.zero(2, 2)
    spin = Matrix([[0, -1], [1, 0]])  # e1 ^ e2 in quotient coordinates
    data = CocycleData(g, g0, [zero, zero, spin])

    print("data: abelian Q^3, g0 = span{e3}, delta(e3) = e1 ^ e2")
    show("cocycle identity", cocycle_check(data))

    bracket = delta_to_bracket(data)
    print("\ndual bracket on the canonical basis of p1 = span{e1*, e2*}:")
    for a in range(2):
        for b in range(2):
            if a != b:
                print(f"  [xi{a + 1}, xi{b + 1}] = {format_vector(bracket.table[a][b])}")
    print("  the value (0, 0, -1) is -e3*, which does not annihilate g0")

    print()
    show("image in p1", n_invariance_check(bracket))
    show("integrability", integrability_check(bracket))

    print("\npointwise fibers of the structure the data integrates to:")
    for point in [(0, 0, 0), (0, 0, 1), (Fraction(1, 2), -2, 3)]:
        fiber = abelian_fiber(data, point)
        rows = ", ".join(str(format_vector(r)) for r in fiber.basis_rows())
        print(f"  D{tuple(map(str, point))} = span {rows}")

    print("\nthe fibers still compose under addition of base points:")
    verdict = abelian_multiplicativity_check(data, (1, 2, 3), (Fraction(-1, 2), 0, 5))
    print(f"  multiplicativity at r=(1,2,3), s=(-1/2,0,5): {'pass' if verdict.ok else 'FAIL'}")


if __name__ == "__main__":
    main()
