"""The standard bialgebra structure on sl2 and its six-dimensional double.

delta is the coboundary of the wedge e ^ f, which gives delta(h) = 0,
delta(e) = e ^ h, delta(f) = f ^ h.  The dual bracket it induces on g* is a
Lie bracket, so the double on g x g* exists; we certify its Jacobi identity,
check that the canonical pairing is invariant under the adjoint action, and
confirm that the infinitesimal action is the adjoint action of the double.

Run:  python3 demos/02_sl2_bialgebra_double.py
"""

import random

from diracalg import (
    CocycleData,
    build_double,
    cocycle_check,
    delta_to_bracket,
    infinitesimal_action,
    integrability_check,
    sl2,
)
from diracalg.multiplicative import wedge
from diracalg.ratlin import Subspace, format_vector, vbasis, vzero


def main():
    g = sl2()
    lam = wedge(vbasis(3, 1), vbasis(3, 2))  # e ^ f
    data = CocycleData.coboundary(g, Subspace.zero(3), lam)

    print("delta = coboundary of e ^ f on sl2 (basis h, e, f):")
    for name, w in zip(g.names, data.delta):
        print(f"  delta({name}) = {w.to_json()}")

    print(f"\ncocycle identity: {'pass' if cocycle_check(data).ok else 'FAIL'}")
    bracket = delta_to_bracket(data)
    print("dual bracket table (values in g*):")
    names = ["h*", "e*", "f*"]
    for a in range(3):
        for b in range(a + 1, 3):
            print(f"  [{names[a]}, {names[b]}] = {format_vector(bracket.table[a][b])}")
    print(f"dual bracket is a Lie bracket: {'pass' if integrability_check(bracket).ok else 'FAIL'}")

    dbl = build_double(data)
    print(f"\ndouble: dimension {dbl.algebra.dim}, Jacobi "
          f"{'pass' if dbl.algebra.jacobi_check().ok else 'FAIL'}")

    rng = random.Random(0)
    probes = 0
    for _ in range(200):
        u = dbl.from_coords([rng.randint(-2, 2) for _ in range(6)])
        v = dbl.from_coords([rng.randint(-2, 2) for _ in range(6)])
        w = dbl.from_coords([rng.randint(-2, 2) for _ in range(6)])
        if dbl.pairing(dbl.bracket_elements(u, v), w) + dbl.pairing(v, dbl.bracket_elements(u, w)) != 0:
            raise SystemExit("pairing invariance failed")
        probes += 1
    print(f"adjoint-invariance of the pairing: pass on {probes} random triples")

    y = vbasis(3, 0)  # h
    elem = (vbasis(3, 1), data.p1.basis_rows()[1])  # (e-class, e*)
    act = infinitesimal_action(data, y, elem)
    via_double = dbl.bracket_elements((y, vzero(3)), elem)
    print(f"action generator of h on (e, e*): {tuple(format_vector(p) for p in act)}")
    print(f"matches the double's adjoint bracket: {act == via_double}")


if __name__ == "__main__":
    main()
