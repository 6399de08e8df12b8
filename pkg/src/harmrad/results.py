"""Result records shared by the solvers, the verifiers and the CLI."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

EQUATION_ROOT = "equation_root"
CONVEXITY_RADIUS = "convexity_radius"
ONE_THIRD_CAP = "one_third_cap"
BETA_DEGENERATE_ZERO = "beta_degenerate_zero"
BRANCHES = (EQUATION_ROOT, CONVEXITY_RADIUS, ONE_THIRD_CAP, BETA_DEGENERATE_ZERO)


@dataclass(frozen=True)
class RadiusResult:
    value: float
    branch: str
    equation_id: str
    residual: float
    sharp: bool
    notes: str = ""
    theorem: str = ""
    psi: str = ""
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.branch not in BRANCHES:
            raise ValueError(f"unknown branch {self.branch!r}")
        if not 0.0 <= self.value < 1.0:
            raise ValueError(f"radius {self.value} outside [0, 1)")
        if self.branch == ONE_THIRD_CAP and self.value != 1.0 / 3.0:
            raise ValueError("one_third_cap requires value 1/3")

    def to_record(self):
        """The CLI record: theorem, psi, parameters, value, branch, residual, sharp, notes."""
        rec = asdict(self)
        return {
            "theorem": rec["theorem"] or rec["equation_id"],
            "psi": rec["psi"],
            "parameters": dict(rec["parameters"]),
            "value": rec["value"],
            "branch": rec["branch"],
            "residual": rec["residual"],
            "sharp": rec["sharp"],
            "notes": rec["notes"],
            "equation_id": rec["equation_id"],
        }

    @classmethod
    def from_record(cls, rec):
        return cls(
            value=rec["value"],
            branch=rec["branch"],
            equation_id=rec.get("equation_id", rec["theorem"]),
            residual=rec["residual"],
            sharp=rec["sharp"],
            notes=rec["notes"],
            theorem=rec["theorem"],
            psi=rec["psi"],
            parameters=dict(rec["parameters"]),
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of sampling a geometric predicate on a polar grid.

    ``passed`` is ``min_margin > threshold``; ``witness`` is the (r, theta)
    where the smallest margin was seen.  ``expect_pass`` records the expected
    outcome (False for counterexamples, None for pure observations).
    """

    check_id: str
    radius: float
    grid: tuple
    min_margin: float
    passed: bool
    witness: tuple
    notes: str = ""
    expect_pass: bool | None = True

    @property
    def as_expected(self):
        return self.expect_pass is None or self.passed == self.expect_pass

    def to_record(self):
        return {
            "check": self.check_id,
            "radius": self.radius,
            "grid": list(self.grid),
            "min_margin": self.min_margin,
            "pass": self.passed,
            "witness": list(self.witness),
            "notes": self.notes,
            "expect_pass": self.expect_pass,
        }
