"""Classifying homogeneous candidates over a subalgebra.

Two experiments on sl2 with the zero (trivial) multiplicative structure:

1. the Borel-type candidate D = b x {0} + {0} x b-annihilator over h = b,
   which passes every stage including closure under the double bracket;

2. a full scan of the integer grid of quotient-level Lagrangians with
   h = 0.  With trivial data the homogeneous structures over the point are
   exactly the invariant structures, so the integrable count must equal the
   count of subspaces passing the cyclic integrability criterion.  The scan
   verifies the match instance by instance.

Run:  python3 demos/03_homogeneous_classification.py
"""

from diracalg import (
    CocycleData,
    DiracSubspace,
    HomogeneousCandidate,
    classify,
    cyclic_integrability,
    search_candidates,
    sl2,
)
from diracalg.dirac_linear import enumerate_lagrangians
from diracalg.ratlin import Matrix, Subspace


def main():
    g = sl2()
    data = CocycleData(g, Subspace.zero(3), [Matrix.zero(3, 3)] * 3)

    borel = Subspace.span(3, [[1, 0, 0], [0, 1, 0]])  # span{h, e}
    d = DiracSubspace.from_rows(
        3,
        [
            [1, 0, 0, 0, 0, 0],  # (h | 0)
            [0, 1, 0, 0, 0, 0],  # (e | 0)
            [0, 0, 0, 0, 0, 1],  # (0 | f*)
        ],
    )
    report = classify(HomogeneousCandidate(data, borel, d))
    print("Borel candidate over h = span{h, e}:")
    for name, flag in report.flags.items():
        verdict = {True: "pass", False: "FAIL", None: "skipped"}[flag.ok]
        print(f"  {name:<20} {verdict}")
    print(f"  homogeneous = {report.homogeneous}, integrable = {report.integrable}")

    print("\nscanning the full entry-bound-1 grid with h = 0 ...")
    hits = search_candidates(data, Subspace.zero(3), 1)
    integrable = [report.integrable for _, report in hits]
    oracle = [bool(cyclic_integrability(g, d)) for d in enumerate_lagrangians(3, 1)]
    agree = sum(a == b for a, b in zip(integrable, oracle))
    print(f"  candidates: {len(hits)}  (all homogeneous for trivial data)")
    print(f"  integrable by classification: {sum(integrable)}")
    print(f"  integrable by the invariant criterion: {sum(oracle)}")
    print(f"  instancewise agreement: {agree}/{len(hits)}")


if __name__ == "__main__":
    main()
