"""Result records for the identity checks."""

from dataclasses import dataclass, field

from weightedcomplex.weighted.weights import WeightVector


@dataclass(frozen=True)
class IdentityCheck:
    """Both sides of one exact identity."""

    name: str
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class RecursionCheck:
    """The S and T recursions at one adjacent swap s_i."""

    index: int
    s_identity: IdentityCheck
    t_identity: IdentityCheck

    @property
    def passed(self) -> bool:
        return self.s_identity.passed and self.t_identity.passed


@dataclass
class IdentityReport:
    """S(λ) and T(λ) by every available route, with the cross-route verdicts.

    Routes that were not computed (caps, preconditions) stay None and are
    listed in `skipped`.
    """

    weights: WeightVector
    s_direct: int | None = None
    t_direct: int | None = None
    t_pfaffian: int | None = None
    s_recursive: int | None = None
    t_recursive: int | None = None
    s_decreasing: int | None = None
    checks: list[IdentityCheck] = field(default_factory=list)
    skipped: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
