"""The differential core: Jacobian data, coordinate derivations, and the
connection matrices of the invariant-coordinate differential system.

All x-space computation is polynomial.  With D = det(J) and adj the
adjugate, the coordinate derivations are delta_l = sum_i (adj_il / D) d/dx_i,
and the l-th connection matrix is

    A_l = delta_l(J) J^{-1} = P_l / D^m,
    P_l = D^{m-2} * (sum_i adj_il * dJ/dx_i) * adj,

where m is the smallest multiple of the determinant-character order with
m >= 2, so that every entry of P_l and D^m is an invariant homogeneous
polynomial and can be rewritten in the invariant coordinates z.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonInvariantEntry, SingularJacobian
from .groups import GroupData
from .invariants import InvariantTuple
from .linalg import adjugate, det
from .poly import MPoly, RatFun
from .rewrite import Rewriter


@dataclass(frozen=True)
class JacobianData:
    jac: tuple[tuple[MPoly, ...], ...]  # row i = gradient of phi_i
    adj: tuple[tuple[MPoly, ...], ...]
    det: MPoly
    m: int
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class ScaledConnection:
    """Polynomial numerator matrices P_l and the common denominator D^m."""

    numerators: tuple[tuple[tuple[MPoly, ...], ...], ...]
    det_power: MPoly
    m: int


@dataclass(frozen=True)
class ConnectionSystem:
    """The z-space system: matrices A_l with a shared polynomial denominator."""

    matrices: tuple[tuple[tuple[RatFun, ...], ...], ...]  # reduced display form
    numerators: tuple[tuple[tuple[MPoly, ...], ...], ...]  # over `denominator`
    denominator: MPoly
    invariants_used: InvariantTuple
    m: int

    @property
    def rank(self) -> int:
        return len(self.matrices)


def scaling_exponent(det_char_order: int) -> int:
    """Smallest multiple of the determinant-character order that is >= 2."""
    e = max(1, det_char_order)
    m = e
    while m < 2:
        m += e
    return m


def jacobian(phi: InvariantTuple, det_char_order: int = 1) -> JacobianData:
    n = len(phi.phis)
    jac = tuple(
        tuple(p.partial(j + 1) for j in range(n)) for p in phi.phis
    )
    d = det(jac)
    if not d:
        raise SingularJacobian("invariants are algebraically dependent")
    adj = adjugate(jac)
    return JacobianData(
        jac=jac,
        adj=adj,
        det=d,
        m=scaling_exponent(det_char_order),
        degrees=phi.degrees,
    )


def delta_apply(ell: int, f: MPoly, jd: JacobianData) -> RatFun:
    """The derivation dual to the ell-th invariant coordinate, applied to f."""
    n = len(jd.jac)
    if not 1 <= ell <= n:
        raise ValueError(f"derivation index {ell} out of range 1..{n}")
    num = MPoly.zero(f.alphabet, f.nvars, f.conductor)
    for i in range(n):
        num = num + jd.adj[i][ell - 1] * f.partial(i + 1)
    return RatFun(num, jd.det)


# direct entrywise invariance checks are skipped above this total degree;
# invariance of larger entries is still certified downstream, because the
# rewriting step succeeds exactly on members of the invariant subring
_DIRECT_CHECK_MAX_DEGREE = 36


def _check_group_compatibility(jd: JacobianData, group: GroupData) -> None:
    """Cheap proof-grade checks that the invariants belong to the group:
    equivariance of the Jacobian and relative invariance of its determinant."""
    from .linalg import det as _det

    n = len(jd.jac)
    for gen in group.generators():
        jm = tuple(
            tuple(
                sum(
                    (jd.jac[r][t] * gen[t][c] for t in range(1, n)),
                    jd.jac[r][0] * gen[0][c],
                )
                for c in range(n)
            )
            for r in range(n)
        )
        for r in range(n):
            for c in range(n):
                if jd.jac[r][c].substitute_linear(gen) != jm[r][c]:
                    raise NonInvariantEntry(
                        "Jacobian is not equivariant under a group generator"
                    )
        if jd.det.substitute_linear(gen) != jd.det * _det(gen):
            raise NonInvariantEntry(
                "Jacobian determinant is not a relative invariant"
            )
        if _det(gen) ** jd.m != 1:
            raise NonInvariantEntry(
                "scaling exponent does not kill the determinant character"
            )


def scaled_connection(
    jd: JacobianData, group: GroupData | None = None
) -> ScaledConnection:
    """Numerator matrices P_l with common denominator D^m, fully polynomial.

    When a group is supplied, entries are checked to be homogeneous of the
    predicted degree and invariant: small entries directly, large ones via
    Jacobian equivariance plus the relative invariance of the determinant.
    """
    n = len(jd.jac)
    if group is not None:
        _check_group_compatibility(jd, group)
    d_partials = [
        tuple(tuple(jd.jac[i][j].partial(k + 1) for j in range(n)) for i in range(n))
        for k in range(n)
    ]
    scale = jd.det ** (jd.m - 2)
    det_power = jd.det ** jd.m
    degs = jd.degrees
    refl_count = sum(dd - 1 for dd in degs)
    numerators = []
    for ell in range(n):
        # sum_i adj_{i,ell} * dJ/dx_i
        acc = None
        for i in range(n):
            contrib = tuple(
                tuple(jd.adj[i][ell] * d_partials[i][r][c] for c in range(n))
                for r in range(n)
            )
            if acc is None:
                acc = contrib
            else:
                acc = tuple(
                    tuple(a + b for a, b in zip(ra, rb))
                    for ra, rb in zip(acc, contrib)
                )
        # right-multiply by adj, then scale by D^{m-2}
        p = []
        for r in range(n):
            row = []
            for c in range(n):
                entry = acc[r][0] * jd.adj[0][c]
                for t in range(1, n):
                    entry = entry + acc[r][t] * jd.adj[t][c]
                entry = entry * scale
                row.append(entry)
            p.append(tuple(row))
        p = tuple(p)
        for r in range(n):
            for c in range(n):
                entry = p[r][c]
                if entry.is_zero():
                    continue
                if not entry.is_homogeneous():
                    raise NonInvariantEntry(
                        f"entry ({r + 1},{c + 1}) of P_{ell + 1} is not homogeneous"
                    )
                expected = (
                    degs[r]
                    - 2
                    + (refl_count - (degs[ell] - 1))
                    + (refl_count - (degs[c] - 1))
                    + (jd.m - 2) * refl_count
                )
                if entry.total_degree() != expected:
                    raise NonInvariantEntry(
                        f"entry ({r + 1},{c + 1}) of P_{ell + 1} has degree "
                        f"{entry.total_degree()}, expected {expected}"
                    )
                if (
                    group is not None
                    and entry.total_degree() <= _DIRECT_CHECK_MAX_DEGREE
                    and not all(
                        entry.substitute_linear(gen) == entry
                        for gen in group.generators()
                    )
                ):
                    raise NonInvariantEntry(
                        f"entry ({r + 1},{c + 1}) of P_{ell + 1} is not invariant"
                    )
        numerators.append(p)
    return ScaledConnection(numerators=tuple(numerators), det_power=det_power, m=jd.m)


def connection_in_x(jd: JacobianData) -> tuple[tuple[tuple[RatFun, ...], ...], ...]:
    """The x-space matrices delta_l(J) J^{-1} as rational functions, for
    cross-validation against the z-space form."""
    sc = scaled_connection(jd)
    return tuple(
        tuple(tuple(RatFun(e, sc.det_power) for e in row) for row in p)
        for p in sc.numerators
    )


def connection_in_z(sc: ScaledConnection, phi: InvariantTuple) -> ConnectionSystem:
    """Rewrite numerators and denominator into z and assemble the system."""
    rewriter = Rewriter(phi)
    q = rewriter.rewrite(sc.det_power)
    n = len(sc.numerators)
    numerators = []
    matrices = []
    for p in sc.numerators:
        num_rows = []
        mat_rows = []
        for row in p:
            nrow = []
            mrow = []
            for entry in row:
                ez = rewriter.rewrite(entry)
                nrow.append(ez)
                mrow.append(RatFun(ez, q).reduced())
            num_rows.append(tuple(nrow))
            mat_rows.append(tuple(mrow))
        numerators.append(tuple(num_rows))
        matrices.append(tuple(mat_rows))
    return ConnectionSystem(
        matrices=tuple(matrices),
        numerators=tuple(numerators),
        denominator=q,
        invariants_used=phi,
        m=sc.m,
    )


def build_system(group: GroupData, phi: InvariantTuple) -> ConnectionSystem:
    """Full pipeline from a validated group and invariants to the z-system."""
    jd = jacobian(phi, det_char_order=group.det_char_order)
    sc = scaled_connection(jd, group=group)
    return connection_in_z(sc, phi)
