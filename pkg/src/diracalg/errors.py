"""Exceptions and the check-result type shared by all modules."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional


class DiracalgError(Exception):
    """Base class for all structured errors raised by this package."""


class JacobiError(DiracalgError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"Jacobi identity fails, witness triple {witness}")


class NotAntisymmetricError(DiracalgError):
    """Structure constants are not antisymmetric."""


class NotAnIdealError(DiracalgError):
    """A subspace required to be an ideal is not one."""


class NotASubalgebraError(DiracalgError):
    """A subspace required to be a subalgebra is not one."""


class NotLagrangianError(DiracalgError):
    """A subspace required to be Lagrangian is not one."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"subspace is not Lagrangian: {witness}")


class NotSkewError(DiracalgError):
    """A matrix required to be antisymmetric is not."""


class NotSurjectiveError(DiracalgError):
    """A linear map required to be surjective is not."""


class NotIntegrableError(DiracalgError):
    """The dual bracket is not a Lie bracket, so the requested object does not exist."""


class NotNInvariantError(DiracalgError):
    """The dual bracket does not land in p1, so the requested operation is undefined."""


class NotAbelianError(DiracalgError):
    """The operation is only defined for abelian Lie algebras."""


class SandwichViolatedError(DiracalgError):
    """The candidate violates the sandwich inclusions required before quotienting."""


class SearchSpaceTooLargeError(DiracalgError):
    """The candidate enumeration would exceed the enforced size bounds."""

    def __init__(self, size, reason=""):
        self.size = size
        msg = f"search space has {size} candidates"
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)


@dataclass(frozen=True)
class Check:
    """Outcome of a verification: a verdict plus a witness for failures.

    The witness is a JSON-serializable dict (indices as ints, rationals and
    vectors as strings) so reports can carry it verbatim.
    """

    ok: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok

    def as_json(self) -> dict[str, Any]:
        return {"pass": self.ok, "witness": self.witness}


def passed() -> Check:
    return Check(True, None)
