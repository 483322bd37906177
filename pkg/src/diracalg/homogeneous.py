"""Classification of homogeneous candidates over a subalgebra h.

A candidate is multiplicative data (g0, delta) together with a subalgebra h
and a Lagrangian subspace D of g + g*.  The pipeline checks, in order:

  1. the sandwich inclusions (g0 + h) x {0} <= D <= g x (p1 /\\ h-annihilator),
  2. that Dbar = D / (g0 x {0}) is Lagrangian in (g/g0) x p1,
  3. that the infinitesimal h-action preserves Dbar,

and, when the data is integrable, whether Dbar is closed under the double
bracket.  Condition 3 is the infinitesimal surrogate of invariance under the
subgroup integrating h; for connected subgroups the two agree.

Dbar is stored in standard paired coordinates on Q^m + (Q^m)*: the covector
part of an element (x, xi) is recorded as section^T xi, using the canonical
identification of p1 with the dual of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dirac_linear import (
    DiracSubspace,
    PairedSpace,
    count_range_forms,
    enumerate_range_forms,
    from_range_form,
    is_lagrangian,
    join,
    pullback,
)
from .errors import (
    Check,
    NotASubalgebraError,
    NotNInvariantError,
    SandwichViolatedError,
    SearchSpaceTooLargeError,
    passed,
)
from .multiplicative import (
    CocycleData,
    DoubleAlgebra,
    build_double,
    delta_to_bracket,
    infinitesimal_action,
    integrability_check,
    n_invariance_check,
)
from .ratlin import Subspace, format_vector, quotient_map, vzero


class HomogeneousCandidate:
    """Multiplicative data, a subalgebra h, and a Lagrangian D in g + g*."""

    def __init__(self, data: CocycleData, h: Subspace, D: DiracSubspace):
        if h.ambient_dim != data.g.dim:
            raise ValueError("h must live in the algebra's coordinate space")
        if not data.g.is_subalgebra(h):
            raise NotASubalgebraError("h must be a subalgebra of g")
        if D.n != data.g.dim:
            raise ValueError("D must live in g + g*")
        self.data = data
        self.h = h
        self.D = D

    @classmethod
    def from_dbar_input(
        cls, data: CocycleData, h: Subspace, dbar: DiracSubspace
    ) -> "HomogeneousCandidate":
        """Build from a fiber over the quotient by h: D is its backward image
        along the canonical projection g -> g/h."""
        projection, _ = quotient_map(data.g.dim, h)
        if dbar.n != projection.rows:
            raise ValueError("fiber must live over the quotient by h")
        return cls(data, h, pullback(dbar, projection))

    def __repr__(self) -> str:
        return f"HomogeneousCandidate(dim g={self.data.g.dim}, dim h={self.h.dim})"

    def to_json(self) -> dict:
        return {
            "data": self.data.to_json(),
            "h": self.h.to_json(),
            "D": self.D.to_json(),
        }


def sandwich_check(c: HomogeneousCandidate) -> Check:
    """(g0 + h) x {0} <= D and the covector part of D inside p1 /\\ h-annihilator."""
    data, n = c.data, c.data.g.dim
    lower = data.g0.sum(c.h)
    for v in lower.basis_rows():
        if not c.D.body.contains(join(v, vzero(n))):
            return Check(
                False,
                {
                    "reason": "(g0 + h) x {0} not contained in D",
                    "vector": format_vector(v),
                },
            )
    allowed = data.p1.intersect(c.h.annihilator())
    cov_part = Subspace.span(n, [row[n:] for row in c.D.basis_rows()])
    for mu in cov_part.basis_rows():
        if not allowed.contains(mu):
            return Check(
                False,
                {
                    "reason": "covector part escapes p1 /\\ h-annihilator",
                    "covector": format_vector(mu),
                },
            )
    return passed()


def quotient_dbar(c: HomogeneousCandidate) -> DiracSubspace:
    """D / (g0 x {0}) as a Lagrangian subspace of Q^m + (Q^m)*."""
    verdict = sandwich_check(c)
    if not verdict:
        raise SandwichViolatedError(f"sandwich inclusions fail: {verdict.witness}")
    data = c.data
    n, m = data.g.dim, data.m
    st = data.section.transpose()
    rows = [
        join(data.projection.apply(row[:n]), st.apply(row[n:]))
        for row in c.D.basis_rows()
    ]
    return DiracSubspace(PairedSpace(m), Subspace.span(2 * m, rows))


def lift_dbar(data: CocycleData, dbar: DiracSubspace) -> DiracSubspace:
    """The Lagrangian of g + g* whose quotient is dbar: lift the basis through
    the canonical section and add back g0 x {0}."""
    if dbar.n != data.m:
        raise ValueError("dbar must live over the quotient by g0")
    n, m = data.g.dim, data.m
    rows = []
    for row in dbar.basis_rows():
        xbar, xibar = row[:m], row[m:]
        rows.append(join(data.section.apply(xbar), data.p1_lift_dual(xibar)))
    for v in data.g0.basis_rows():
        rows.append(join(v, vzero(n)))
    return DiracSubspace(PairedSpace(n), Subspace.span(2 * n, rows))


def h_invariance_check(c: HomogeneousCandidate) -> Check:
    """Infinitesimal invariance: the action generator of every h-basis vector
    maps every basis element of Dbar back into Dbar."""
    data = c.data
    bracket = delta_to_bracket(data)
    landing = n_invariance_check(bracket)
    if not landing:
        raise NotNInvariantError(f"dual bracket escapes p1: {landing.witness}")
    dbar = quotient_dbar(c)
    m = data.m
    for yi, y in enumerate(c.h.basis_rows()):
        for ri, row in enumerate(dbar.basis_rows()):
            xbar, xibar = row[:m], row[m:]
            xi = data.p1_lift_dual(xibar)
            vec, cov = infinitesimal_action(data, y, (xbar, xi))
            image = join(vec, data.quotient_dual_coords(cov))
            if not dbar.body.contains(image):
                return Check(
                    False,
                    {
                        "h_basis": yi,
                        "dbar_basis": ri,
                        "image": format_vector(image),
                    },
                )
    return passed()


def integrable_homogeneous_check(
    c: HomogeneousCandidate, dbl: DoubleAlgebra
) -> Check:
    """Pass iff Dbar is closed under the double bracket on all basis pairs."""
    data = c.data
    if dbl.data is not data and dbl.data != data:
        raise ValueError("double was built from different data")
    dbar = quotient_dbar(c)
    m = data.m
    elems = []
    for row in dbar.basis_rows():
        xbar, xibar = row[:m], row[m:]
        elems.append((xbar, data.p1_lift_dual(xibar)))
    for a in range(len(elems)):
        for b in range(a + 1, len(elems)):
            vec, cov = dbl.bracket_elements(elems[a], elems[b])
            image = join(vec, data.quotient_dual_coords(cov))
            if not dbar.body.contains(image):
                return Check(
                    False,
                    {"pair": [a, b], "bracket": format_vector(image)},
                )
    return passed()


@dataclass(frozen=True)
class Flag:
    """Outcome of one pipeline stage; ok is None when the stage was blocked."""

    rule: str
    ok: Optional[bool]
    witness: Optional[dict] = None

    def as_json(self) -> dict:
        return {"rule": self.rule, "pass": self.ok, "witness": self.witness}


_RULES = {
    "lagrangian": "D equals its orthogonal under the symmetric pairing",
    "sandwich": "(g0 + h) x {0} <= D and covector part of D <= p1 /\\ h-annihilator",
    "quotient_lagrangian": "D/(g0 x {0}) is Lagrangian in (g/g0) x p1",
    "h_invariance": "the infinitesimal h-action preserves D/(g0 x {0})",
    "subalgebra": "D/(g0 x {0}) is closed under the double bracket",
}


@dataclass(frozen=True)
class ClassificationReport:
    flags: dict[str, Flag]
    homogeneous: bool
    integrable: Optional[bool]

    def as_json(self) -> dict:
        return {
            "flags": {name: flag.as_json() for name, flag in self.flags.items()},
            "homogeneous": self.homogeneous,
            "integrable": self.integrable,
        }


def classify(
    c: HomogeneousCandidate, *, double: Optional[DoubleAlgebra] = None
) -> ClassificationReport:
    """Run the full pipeline, short-circuiting with witnesses.

    The candidate is a homogeneous structure iff the Lagrangian, sandwich,
    quotient and invariance flags all pass; the integrable verdict is only
    computed when the data itself is integrable.
    """
    data = c.data
    flags: dict[str, Flag] = {}

    lag = is_lagrangian(c.D.space, c.D.body)
    flags["lagrangian"] = Flag(_RULES["lagrangian"], lag.ok, lag.witness)

    sandwich = sandwich_check(c)
    flags["sandwich"] = Flag(_RULES["sandwich"], sandwich.ok, sandwich.witness)

    if sandwich:
        try:
            quotient_dbar(c)
            flags["quotient_lagrangian"] = Flag(_RULES["quotient_lagrangian"], True)
        except Exception as exc:  # pragma: no cover - unreachable for certified D
            flags["quotient_lagrangian"] = Flag(
                _RULES["quotient_lagrangian"], False, {"reason": str(exc)}
            )
    else:
        flags["quotient_lagrangian"] = Flag(
            _RULES["quotient_lagrangian"], None, {"reason": "blocked by sandwich"}
        )

    bracket = delta_to_bracket(data)
    landing = n_invariance_check(bracket)
    if not flags["sandwich"].ok or not flags["quotient_lagrangian"].ok:
        flags["h_invariance"] = Flag(
            _RULES["h_invariance"], None, {"reason": "blocked by sandwich"}
        )
    elif not landing:
        flags["h_invariance"] = Flag(
            _RULES["h_invariance"],
            False,
            {"reason": "not_n_invariant", "detail": landing.witness},
        )
    else:
        inv = h_invariance_check(c)
        flags["h_invariance"] = Flag(_RULES["h_invariance"], inv.ok, inv.witness)

    homogeneous = all(
        flags[name].ok is True
        for name in ("lagrangian", "sandwich", "quotient_lagrangian", "h_invariance")
    )

    integrable: Optional[bool] = None
    data_integrable = bool(integrability_check(bracket))
    if not data_integrable:
        flags["subalgebra"] = Flag(
            _RULES["subalgebra"], None, {"reason": "data_not_integrable"}
        )
    elif not homogeneous:
        flags["subalgebra"] = Flag(
            _RULES["subalgebra"], None, {"reason": "not_homogeneous"}
        )
    else:
        dbl = double if double is not None else build_double(data)
        closed = integrable_homogeneous_check(c, dbl)
        flags["subalgebra"] = Flag(_RULES["subalgebra"], closed.ok, closed.witness)
        integrable = closed.ok

    return ClassificationReport(
        flags=flags, homogeneous=homogeneous, integrable=integrable
    )


MAX_QUOTIENT_DIM = 4
MAX_SEARCH_SIZE = 500_000


def search_candidates(
    data: CocycleData,
    h: Subspace,
    entry_bound: int,
    *,
    limit: Optional[int] = None,
) -> list[tuple[HomogeneousCandidate, ClassificationReport]]:
    """Enumerate quotient-level Lagrangians on the bounded integer grid, lift
    each to a candidate, and keep those classified as homogeneous.

    The enumeration order is deterministic; `limit` truncates the hit list.
    """
    if entry_bound < 0:
        raise ValueError("entry bound must be non-negative")
    m = data.m
    size = count_range_forms(m, entry_bound)
    if m > MAX_QUOTIENT_DIM:
        raise SearchSpaceTooLargeError(size, f"dim(g/g0) = {m} > {MAX_QUOTIENT_DIM}")
    if size > MAX_SEARCH_SIZE:
        raise SearchSpaceTooLargeError(size, f"limit is {MAX_SEARCH_SIZE}")
    bracket = delta_to_bracket(data)
    double = None
    if integrability_check(bracket):
        double = build_double(data)
    space = PairedSpace(m)
    hits: list[tuple[HomogeneousCandidate, ClassificationReport]] = []
    for pres in enumerate_range_forms(m, entry_bound):
        dbar = from_range_form(space, pres)
        candidate = HomogeneousCandidate(data, h, lift_dbar(data, dbar))
        report = classify(candidate, double=double)
        if report.homogeneous:
            hits.append((candidate, report))
            if limit is not None and len(hits) >= limit:
                break
    return hits
