"""Exact checkers for the identities the pipeline relies on.

Every check is a polynomial identity over Q(zeta_N); a pass is a
proof-grade certificate, with no tolerances anywhere.  Checking only the
group generators suffices for (equi)variance because the action is a
group action.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .connection import ConnectionSystem, JacobianData, ScaledConnection
from .errors import DenominatorMismatch
from .groups import GroupData
from .invariants import InvariantTuple
from .linalg import det
from .poly import MPoly, RatFun


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "", seconds: float = 0.0):
        self.checks.append(CheckResult(name, passed, witness, seconds))

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"[{status}] {c.name} ({c.seconds:.3f}s)"
            if c.witness:
                line += f"  witness: {c.witness}"
            lines.append(line)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "witness": c.witness,
                    "seconds": round(c.seconds, 6),
                }
                for c in self.checks
            ],
        }


def check_invariance(f: MPoly, group: GroupData) -> bool:
    """gamma_M(f) == f for every generator M."""
    return all(f.substitute_linear(m) == f for m in group.generators())


def check_equivariance(jd: JacobianData, group: GroupData) -> VerificationReport:
    """gamma_M(J) == J * M entrywise for every generator."""
    report = VerificationReport()
    n = len(jd.jac)
    for gi, gen in enumerate(group.generators()):
        t0 = time.perf_counter()
        witness = ""
        ok = True
        for r in range(n):
            for c in range(n):
                rhs = jd.jac[r][0] * gen[0][c]
                for t in range(1, n):
                    rhs = rhs + jd.jac[r][t] * gen[t][c]
                if jd.jac[r][c].substitute_linear(gen) != rhs:
                    ok = False
                    witness = f"generator {gi}, entry ({r + 1},{c + 1})"
                    break
            if not ok:
                break
        report.add(
            f"jacobian_equivariance[gen {gi}]",
            ok,
            witness,
            time.perf_counter() - t0,
        )
    return report


def check_determinant_character(jd: JacobianData, group: GroupData) -> VerificationReport:
    """gamma_M(D) == det(M) * D for generators, and D^m invariant."""
    report = VerificationReport()
    for gi, gen in enumerate(group.generators()):
        t0 = time.perf_counter()
        ok = jd.det.substitute_linear(gen) == jd.det * det(gen)
        report.add(
            f"det_relative_invariance[gen {gi}]",
            ok,
            "" if ok else f"generator {gi}",
            time.perf_counter() - t0,
        )
    t0 = time.perf_counter()
    ok = all(det(gen) ** jd.m == 1 for gen in group.generators())
    report.add("det_power_invariant", ok, "", time.perf_counter() - t0)
    return report


def _mat_partial(p, index: int):
    return tuple(tuple(e.partial(index) for e in row) for row in p)


def _mat_mul_poly(a, b):
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][t] * b[t][j] for t in range(1, n)), a[i][0] * b[0][j])
            for j in range(n)
        )
        for i in range(n)
    )


def _mat_scale(p, s):
    return tuple(tuple(e * s for e in row) for row in p)


def _mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def check_integrability(cs: ConnectionSystem) -> VerificationReport:
    """The cleared-denominator commuting identity for each pair of matrices.

    With A_l = P_l / q the identity d_i(A_j) - d_j(A_i) = A_i A_j - A_j A_i
    clears to  q*d_i(P_j) - P_j*d_i(q) - q*d_j(P_i) + P_i*d_j(q)
             = P_i P_j - P_j P_i,  checked exactly, no division.
    """
    report = VerificationReport()
    q = cs.denominator
    n = cs.rank
    for p in cs.numerators:
        for row in p:
            for entry in row:
                if entry.alphabet != q.alphabet or entry.conductor != q.conductor:
                    raise DenominatorMismatch("numerators do not share q's space")
    for i in range(n):
        for j in range(i + 1, n):
            t0 = time.perf_counter()
            pi, pj = cs.numerators[i], cs.numerators[j]
            lhs = _mat_sub(
                _mat_sub(
                    _mat_scale(_mat_partial(pj, i + 1), q),
                    _mat_scale(pj, q.partial(i + 1)),
                ),
                _mat_sub(
                    _mat_scale(_mat_partial(pi, j + 1), q),
                    _mat_scale(pi, q.partial(j + 1)),
                ),
            )
            rhs = _mat_sub(_mat_mul_poly(pi, pj), _mat_mul_poly(pj, pi))
            witness = ""
            ok = True
            size = len(pi)
            for r in range(size):
                for c in range(size):
                    if lhs[r][c] != rhs[r][c]:
                        ok = False
                        witness = f"pair ({i + 1},{j + 1}), entry ({r + 1},{c + 1})"
                        break
                if not ok:
                    break
            report.add(
                f"integrability[{i + 1},{j + 1}]", ok, witness, time.perf_counter() - t0
            )
    return report


def cross_validate(
    cs: ConnectionSystem, sc: ScaledConnection, phi: InvariantTuple
) -> VerificationReport:
    """Substitute z := phi(x) into each z-entry and compare with the x-form."""
    report = VerificationReport()
    args = list(phi.phis)
    n = cs.rank
    for ell in range(n):
        t0 = time.perf_counter()
        ok = True
        witness = ""
        for r in range(len(cs.matrices[ell])):
            for c in range(len(cs.matrices[ell])):
                back = cs.matrices[ell][r][c].compose(args)
                x_form = RatFun(sc.numerators[ell][r][c], sc.det_power)
                if back != x_form:
                    ok = False
                    witness = f"A_{ell + 1} entry ({r + 1},{c + 1})"
                    break
            if not ok:
                break
        report.add(f"cross_validation[A_{ell + 1}]", ok, witness, time.perf_counter() - t0)
    return report


def full_report(
    group: GroupData,
    phi: InvariantTuple,
    jd: JacobianData,
    sc: ScaledConnection,
    cs: ConnectionSystem,
) -> VerificationReport:
    """All checks for a freshly computed system, in one report.

    The Picard-Vessiot property of the resulting system is a theorem given
    the construction plus these identities; it has no finite symbolic
    certificate of its own and is not machine-checked here.
    """
    report = VerificationReport()
    for sub in (
        check_equivariance(jd, group),
        check_determinant_character(jd, group),
        check_integrability(cs),
        cross_validate(cs, sc, phi),
    ):
        report.checks.extend(sub.checks)
    t0 = time.perf_counter()
    inv_ok = all(check_invariance(p, group) for p in phi.phis)
    report.add("invariants_fixed_by_generators", inv_ok, "", time.perf_counter() - t0)
    return report
