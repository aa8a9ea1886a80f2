"""Text, JSON, and LaTeX rendering of connection systems.

JSON keeps exact zeta-basis coefficient strings (parser round-trippable);
text and LaTeX print coefficients in the 1, i, sqrt(3), i*sqrt(3) basis
when the conductor allows it, for readability.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .connection import ConnectionSystem
from .cyclo import CycloNum
from .errors import DenominatorMismatch
from .invariants import InvariantTuple
from .parsing import parse_expr
from .poly import MPoly, RatFun


# -- readable coefficients ---------------------------------------------------

def _basis_vectors(conductor: int):
    z = CycloNum.zeta(conductor)
    one = CycloNum.one(conductor)
    quarter = conductor // 4
    twelfth = conductor // 12
    i = z ** quarter
    sqrt3 = z ** twelfth + z ** (-twelfth % conductor)
    return [one, i, sqrt3, i * sqrt3]


def to_readable_basis(c: CycloNum):
    """Coordinates (a, b, s, t) with c = a + b*i + s*sqrt(3) + t*i*sqrt(3).

    Returns None when the conductor is not a multiple of 12 or the solve
    is not possible.
    """
    if c.conductor % 12 != 0 or len(c.coeffs) != 4:
        return None
    basis = _basis_vectors(c.conductor)
    # 4x4 rational solve by Gaussian elimination over Fraction
    rows = [[basis[j].coeffs[k] for j in range(4)] + [c.coeffs[k]] for k in range(4)]
    for col in range(4):
        piv = next((r for r in range(col, 4) if rows[r][col]), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = Fraction(1) / rows[col][col]
        rows[col] = [e * inv for e in rows[col]]
        for r in range(4):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(rows[k][4] for k in range(4))


def _readable_coeff(c: CycloNum, latex: bool) -> str:
    coords = to_readable_basis(c)
    if coords is None:
        return str(c)
    names = (
        ["", "i", r"\sqrt{3}", r"i\sqrt{3}"]
        if latex
        else ["", "i", "sqrt(3)", "i*sqrt(3)"]
    )
    parts = []
    for q, sym in zip(coords, names):
        if not q:
            continue
        neg = q < 0
        mag = -q if neg else q
        if sym == "":
            body = _frac_str(mag, latex)
        elif mag == 1:
            body = sym
        else:
            glue = "" if latex else "*"
            body = f"{_frac_str(mag, latex)}{glue}{sym}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _frac_str(q: Fraction, latex: bool) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    if latex:
        return rf"\tfrac{{{q.numerator}}}{{{q.denominator}}}"
    return f"{q.numerator}/{q.denominator}"


def readable_poly(p: MPoly, latex: bool = False) -> str:
    if p.is_zero():
        return "0"
    out = []
    for idx, (exps, coeff) in enumerate(p.sorted_terms()):
        mono_parts = []
        for i, e in enumerate(exps):
            if e == 0:
                continue
            v = f"{p.alphabet}{i + 1}" if not latex else f"{p.alphabet}_{{{i + 1}}}"
            if e == 1:
                mono_parts.append(v)
            elif latex:
                mono_parts.append(f"{v}^{{{e}}}")
            else:
                mono_parts.append(f"{v}^{e}")
        mono = ("" if latex else "*").join(mono_parts)
        cs = _readable_coeff(coeff, latex)
        multi = (" + " in cs) or (" - " in cs)
        neg = (not multi) and cs.startswith("-")
        if neg:
            cs = cs[1:]
        if multi:
            cs = f"({cs})"
        if mono:
            if cs == "1":
                body = mono
            else:
                glue = "" if latex else "*"
                body = f"{cs}{glue}{mono}"
        else:
            body = cs
        sep = (" - " if neg else " + ") if idx else ("-" if neg else "")
        out.append(sep + body)
    return "".join(out)


def readable_ratfun(r: RatFun, latex: bool = False) -> str:
    if r.is_polynomial():
        scale = r.den.coefficient((0,) * r.den.nvars)
        p = r.num * scale.inverse()
        return readable_poly(p, latex)
    if latex:
        return rf"\frac{{{readable_poly(r.num, True)}}}{{{readable_poly(r.den, True)}}}"
    return f"({readable_poly(r.num)}) / ({readable_poly(r.den)})"


# -- renderers --------------------------------------------------------------

def render_text(cs: ConnectionSystem, group_name: str) -> str:
    lines = [f"group: {group_name}", f"m: {cs.m}"]
    for k, phi in enumerate(cs.invariants_used.phis):
        lines.append(f"z{k + 1} = {readable_poly(phi)}")
    for ell, mat in enumerate(cs.matrices):
        lines.append(f"A{ell + 1}:")
        for row in mat:
            lines.append("  [ " + " , ".join(readable_ratfun(e) for e in row) + " ]")
    return "\n".join(lines) + "\n"


def render_latex(cs: ConnectionSystem, group_name: str) -> str:
    lines = [f"% connection system for {group_name}"]
    for k, phi in enumerate(cs.invariants_used.phis):
        lines.append(rf"z_{{{k + 1}}} = {readable_poly(phi, latex=True)}")
    for ell, mat in enumerate(cs.matrices):
        dens = {str(e.den) for row in mat for e in row}
        if len(dens) == 1 and not mat[0][0].is_polynomial():
            q = mat[0][0].den
            body = [
                " & ".join(readable_poly(e.num, latex=True) for e in row)
                for row in mat
            ]
            rows_tex = " \\\\ ".join(body)
            lines.append(
                rf"A_{{{ell + 1}}} = \frac{{1}}{{{readable_poly(q, latex=True)}}}"
                rf"\begin{{pmatrix}} {rows_tex} \end{{pmatrix}}"
            )
        else:
            body = [
                " & ".join(readable_ratfun(e, latex=True) for e in row)
                for row in mat
            ]
            rows_tex = " \\\\ ".join(body)
            lines.append(
                rf"A_{{{ell + 1}}} = \begin{{pmatrix}} {rows_tex} \end{{pmatrix}}"
            )
    return "\n".join(lines) + "\n"


def system_to_dict(cs: ConnectionSystem, group_name: str, conductor: int) -> dict:
    return {
        "group": group_name,
        "conductor": conductor,
        "rank": cs.rank,
        "invariants": [str(p) for p in cs.invariants_used.phis],
        "m": cs.m,
        "denominator": str(cs.denominator),
        "matrices": [
            [
                [{"num": str(e.num), "den": str(e.den)} for e in row]
                for row in mat
            ]
            for mat in cs.matrices
        ],
    }


def render_json(cs: ConnectionSystem, group_name: str, conductor: int) -> str:
    return json.dumps(system_to_dict(cs, group_name, conductor), indent=2) + "\n"


def system_from_dict(data: dict) -> ConnectionSystem:
    """Rebuild a ConnectionSystem from the JSON schema.

    Each entry's reduced denominator must divide the common denominator;
    the common-denominator numerators are reconstructed by exact division.
    """
    conductor = data["conductor"]
    rank = data["rank"]
    pz = lambda s: parse_expr(s, alphabet="z", nvars=rank, conductor=conductor)
    px = lambda s: parse_expr(s, alphabet="x", nvars=rank, conductor=conductor)
    q = pz(data["denominator"])
    phis = tuple(px(s) for s in data["invariants"])
    inv = InvariantTuple(
        phis=phis, degrees=tuple(p.total_degree() for p in phis), source="catalog"
    )
    matrices = []
    numerators = []
    from .errors import NotDivisible

    for mat in data["matrices"]:
        rows = []
        num_rows = []
        for row in mat:
            r = []
            nr = []
            for entry in row:
                num = pz(entry["num"])
                den = pz(entry["den"])
                rf = RatFun(num, den)
                r.append(rf)
                try:
                    cofactor = q.exact_div(rf.den)
                except NotDivisible:
                    raise DenominatorMismatch(
                        "entry denominator does not divide the common denominator"
                    ) from None
                nr.append(rf.num * cofactor)
            rows.append(tuple(r))
            num_rows.append(tuple(nr))
        matrices.append(tuple(rows))
        numerators.append(tuple(num_rows))
    return ConnectionSystem(
        matrices=tuple(matrices),
        numerators=tuple(numerators),
        denominator=q,
        invariants_used=inv,
        m=data["m"],
    )
