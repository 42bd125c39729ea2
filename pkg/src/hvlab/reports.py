"""Machine-readable reports emitted by the verifiers and solvers.

Every check-style report serializes to a JSON object with the common fields
``{check, variant, window, status}`` plus ``witness``/``lhs``/``rhs`` when a
first violation was found.  The CLI wraps results in the envelope
``{tool_version, command, config, result}``.
"""

from dataclasses import dataclass, field


def _base(check, variant, window, status, witness=None, lhs=None, rhs=None):
    out = {"check": check, "variant": variant, "window": window, "status": status}
    if witness is not None:
        out["witness"] = witness
    if lhs is not None:
        out["lhs"] = lhs
    if rhs is not None:
        out["rhs"] = rhs
    return out


@dataclass
class AxiomReport:
    """Outcome of the exhaustive skew-symmetry/Jacobi window scan."""

    variant: str
    window: int
    status: str
    failed_axiom: str | None
    witness: dict | None
    lhs: str | None
    rhs: str | None
    pairs_checked: int
    triples_checked: int
    mixed_cocycle: str

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        out = _base("verify-axioms", self.variant, self.window, self.status,
                    self.witness, self.lhs, self.rhs)
        out["pairs_checked"] = self.pairs_checked
        out["triples_checked"] = self.triples_checked
        out["mixed_cocycle"] = self.mixed_cocycle
        if self.failed_axiom:
            out["failed_axiom"] = self.failed_axiom
        return out


@dataclass
class CheckReport:
    """Generic pass/fail report for a single identity check."""

    check: str
    variant: str
    window: int | None
    status: str
    witness: dict | None = None
    lhs: str | None = None
    rhs: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        out = _base(self.check, self.variant, self.window, self.status,
                    self.witness, self.lhs, self.rhs)
        out.update(self.extra)
        return out


@dataclass
class BialgebraReport:
    """Per-axiom outcome of the cobracket axiom suite."""

    variant: str
    window: int
    antisymmetry: CheckReport
    cojacobi: CheckReport
    compatibility: CheckReport

    @property
    def passed(self):
        return all(r.passed for r in (self.antisymmetry, self.cojacobi, self.compatibility))

    @property
    def status(self):
        return "pass" if self.passed else "fail"

    def to_dict(self):
        out = _base("bialgebra", self.variant, self.window, self.status)
        out["axioms"] = [
            self.antisymmetry.to_dict(),
            self.cojacobi.to_dict(),
            self.compatibility.to_dict(),
        ]
        return out


@dataclass
class SolveReport:
    """Outcome of an exact linear solve: a solution or an infeasibility row.

    The certificate names the combination of input equations that reduces to
    an impossible constant row, so "not solvable within this support window"
    is a checkable claim rather than a shrug.
    """

    check: str
    variant: str
    window: int | None
    support_radius: int
    status: str  # "feasible" | "infeasible"
    solution: dict | None = None  # formatted value(s)
    certificate: dict | None = None

    @property
    def passed(self):
        return self.status == "feasible"

    def to_dict(self):
        out = _base(self.check, self.variant, self.window, self.status)
        out["support_radius"] = self.support_radius
        if self.solution is not None:
            out["solution"] = self.solution
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class H1Report:
    """Window statistics for the space of degree-homogeneous derivations.

    The numbers are exact dimensions at the stated radii; they are window
    statistics, not global cohomology dimensions.  The inner-space support
    radius equals the derivation window radius, and both are reported.
    """

    variant: str
    degree: str
    radius: int
    inner_support_radius: int
    dim_derivations: int
    dim_inner: int
    quotient_dim: int
    representatives: list

    def to_dict(self):
        return {
            "variant": self.variant,
            "degree": self.degree,
            "radius": self.radius,
            "inner_support_radius": self.inner_support_radius,
            "dim_derivations": self.dim_derivations,
            "dim_inner": self.dim_inner,
            "quotient_dim": self.quotient_dim,
            "representatives": self.representatives,
        }


@dataclass
class KernelCertificate:
    """Exact basis of the common kernel of the window probes on a span."""

    variant: str
    probe_radius: int
    probe_labels: list
    basis: list  # tensors (engine values)
    basis_formatted: list

    @property
    def dim(self):
        return len(self.basis)

    def to_dict(self):
        return {
            "check": "common-kernel",
            "variant": self.variant,
            "window": self.probe_radius,
            "status": "zero" if not self.basis else "nonzero",
            "probes": self.probe_labels,
            "dim": self.dim,
            "basis": self.basis_formatted,
        }
