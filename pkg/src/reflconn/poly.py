"""Sparse multivariate polynomials and rational functions over Q(zeta_N).

Monomials are ordered graded-lexicographically with var1 > ... > varn.
No multivariate gcd exists anywhere in this package: rational functions
compare by cross-multiplication and all simplification goes through exact
division.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloNum, cyclotomic_coeffs
from .errors import ConductorMismatch, NotDivisible, NonHomogeneousInput


def grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MPoly:
    """Sparse polynomial in x1..xn or z1..zn with CycloNum coefficients."""

    __slots__ = ("alphabet", "nvars", "conductor", "terms")

    def __init__(self, alphabet: str, nvars: int, conductor: int, terms=None):
        if alphabet not in ("x", "z"):
            raise ValueError("alphabet must be 'x' or 'z'")
        self.alphabet = alphabet
        self.nvars = nvars
        self.conductor = conductor
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff:
                    clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, alphabet, nvars, conductor):
        return cls(alphabet, nvars, conductor)

    @classmethod
    def constant(cls, value, alphabet, nvars, conductor):
        if not isinstance(value, CycloNum):
            value = CycloNum.from_rational(value, conductor)
        return cls(alphabet, nvars, conductor, {(0,) * nvars: value})

    @classmethod
    def variable(cls, index: int, alphabet, nvars, conductor):
        """Variable with 1-based index."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(nvars))
        return cls(alphabet, nvars, conductor, {exps: CycloNum.one(conductor)})

    def _like(self, terms):
        return MPoly(self.alphabet, self.nvars, self.conductor, terms)

    def _check_compat(self, other: "MPoly"):
        if self.alphabet != other.alphabet or self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable spaces")
        if self.conductor != other.conductor:
            raise ConductorMismatch(
                f"conductors differ: {self.conductor} vs {other.conductor}"
            )

    # -- predicates & structure ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def sorted_terms(self):
        """Terms in descending grlex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=grlex_key)
        return exps, self.terms[exps]

    def leading_coefficient(self) -> CycloNum:
        return self.leading_term()[1]

    def coefficient(self, exps) -> CycloNum:
        return self.terms.get(tuple(exps), CycloNum.zero(self.conductor))

    def monomial_content(self) -> tuple[int, ...]:
        """Exponent vector of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        it = iter(self.terms)
        content = list(next(it))
        for exps in it:
            for i, e in enumerate(exps):
                if e < content[i]:
                    content[i] = e
        return tuple(content)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = MPoly.constant(other, self.alphabet, self.nvars, self.conductor)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_compat(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            cur = terms.get(exps)
            s = coeff if cur is None else cur + coeff
            if s:
                terms[exps] = s
            elif cur is not None:
                del terms[exps]
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            other = MPoly.constant(other, self.alphabet, self.nvars, self.conductor)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            if not isinstance(other, CycloNum):
                other = CycloNum.from_rational(other, self.conductor)
            if not other:
                return MPoly.zero(self.alphabet, self.nvars, self.conductor)
            return self._like({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_compat(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = terms.get(exps)
                s = prod if cur is None else cur + prod
                if s:
                    terms[exps] = s
                elif cur is not None:
                    del terms[exps]
        return self._like(terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.constant(1, self.alphabet, self.nvars, self.conductor)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Quotient f/g when g divides f exactly; raises NotDivisible otherwise."""
        self._check_compat(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        quot_terms: dict = {}
        rem = self
        g_exps, g_coeff = other.leading_term()
        g_inv = g_coeff.inverse()
        while rem.terms:
            r_exps, r_coeff = rem.leading_term()
            diff = tuple(a - b for a, b in zip(r_exps, g_exps))
            if any(d < 0 for d in diff):
                raise NotDivisible(f"remainder has leading monomial {r_exps}")
            c = r_coeff * g_inv
            quot_terms[diff] = c
            t = self._like({diff: c})
            rem = rem - t * other
        return self._like(quot_terms)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
            return True
        except NotDivisible:
            return False

    # -- calculus & substitution --------------------------------------------

    def partial(self, index: int) -> "MPoly":
        """Formal partial derivative with respect to the 1-based variable index."""
        if not 1 <= index <= self.nvars:
            raise ValueError(f"variable index {index} out of range 1..{self.nvars}")
        i = index - 1
        terms: dict = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = e - 1
            terms[tuple(new)] = coeff * e
        return self._like(terms)

    def compose(self, args: list["MPoly"]) -> "MPoly":
        """Substitute args[i] for the i-th variable.

        The result lives in the args' variable space; args must be mutually
        compatible and there must be one per variable.
        """
        if len(args) != self.nvars:
            raise ValueError("need one substitution polynomial per variable")
        model = args[0]
        out = MPoly.zero(model.alphabet, model.nvars, model.conductor)
        # incremental power tables: needed exponents are dense in practice
        pow_cache: list[list[MPoly]] = [
            [MPoly.constant(1, model.alphabet, model.nvars, model.conductor)]
            for _ in args
        ]

        def power(i, e):
            table = pow_cache[i]
            while len(table) <= e:
                table.append(table[-1] * args[i])
            return table[e]

        for exps, coeff in self.terms.items():
            term = MPoly.constant(coeff, model.alphabet, model.nvars, model.conductor)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def substitute_linear(self, matrix) -> "MPoly":
        """Apply the group action f(x) -> f(x * M^{-T}) for an invertible M."""
        from .linalg import adjugate, det
        from .errors import SingularMatrix

        n = self.nvars
        d = det(matrix)
        if not d:
            raise SingularMatrix("group action by a singular matrix")
        adj = adjugate(matrix)
        d_inv = d.inverse()
        # B = M^{-T}; inverse = adj/det, then transpose.
        b = [[adj[j][i] * d_inv for j in range(n)] for i in range(n)]
        # x_j maps to sum_i B[i][j] * x_i
        images = []
        for j in range(n):
            terms = {}
            for i in range(n):
                if b[i][j]:
                    exps = tuple(1 if k == i else 0 for k in range(n))
                    terms[exps] = b[i][j]
            images.append(self._like(terms))
        return self.compose(images)

    # -- equality & printing -------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, CycloNum)):
            other = MPoly.constant(other, self.alphabet, self.nvars, self.conductor)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.nvars == other.nvars
            and self.conductor == other.conductor
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(
            (self.alphabet, self.nvars, self.conductor, frozenset(self.terms.items()))
        )

    def __repr__(self):
        return f"MPoly({self})"

    def _monomial_str(self, exps) -> str:
        parts = []
        for i, e in enumerate(exps):
            if e == 0:
                continue
            v = f"{self.alphabet}{i + 1}"
            parts.append(v if e == 1 else f"{v}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, (exps, coeff) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(exps)
            if coeff.is_rational():
                q = coeff.rational_value()
                neg = q < 0
                mag = -q if neg else q
                if mono and mag == 1:
                    body = mono
                elif mono:
                    body = f"{mag}*{mono}"
                else:
                    body = str(mag)
                sep = (" - " if neg else " + ") if idx else ("-" if neg else "")
            else:
                cs = str(coeff)
                needs_parens = (" + " in cs) or (" - " in cs) or cs.startswith("-")
                if needs_parens:
                    cs = f"({cs})"
                body = f"{cs}*{mono}" if mono else cs
                sep = " + " if idx else ""
            out.append(sep + body)
        return "".join(out)


def cyclotomic_polynomial(n: int, alphabet: str = "x", conductor: int | None = None) -> MPoly:
    """The n-th cyclotomic polynomial as a univariate MPoly."""
    coeffs = cyclotomic_coeffs(n)
    conductor = conductor if conductor is not None else n
    terms = {
        (k,): CycloNum.from_rational(c, conductor) for k, c in enumerate(coeffs) if c
    }
    return MPoly(alphabet, 1, conductor, terms)


def poly_arith(f: MPoly, g: MPoly, op: str) -> MPoly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


class RatFun:
    """num/den with a monic denominator; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly | None = None):
        if den is None:
            den = MPoly.constant(1, num.alphabet, num.nvars, num.conductor)
        num._check_compat(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        lead = den.leading_coefficient()
        if not (lead.is_rational() and lead.rational_value() == 1):
            inv = lead.inverse()
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MPoly) -> "RatFun":
        return cls(p)

    def is_polynomial(self) -> bool:
        return self.den.total_degree() == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFun is unhashable: equality is not structural")

    def __add__(self, other):
        if isinstance(other, MPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        if isinstance(other, MPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, MPoly):
            other = RatFun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return RatFun(self.num * other.num, self.den * other.den)

    def reciprocal(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return RatFun(self.den, self.num)

    def compose(self, args: list[MPoly]) -> "RatFun":
        return RatFun(self.num.compose(args), self.den.compose(args))

    def reduced(self) -> "RatFun":
        """Cosmetic reduction: strip shared monomial content, then try whole division.

        Never changes the value; equality testing does not rely on it.
        """
        num, den = self.num, self.den
        if num.is_zero():
            return RatFun(num, MPoly.constant(1, den.alphabet, den.nvars, den.conductor))
        nc = num.monomial_content()
        dc = den.monomial_content()
        shared = tuple(min(a, b) for a, b in zip(nc, dc))
        if any(shared):
            num = MPoly(num.alphabet, num.nvars, num.conductor,
                        {tuple(e - s for e, s in zip(exps, shared)): c
                         for exps, c in num.terms.items()})
            den = MPoly(den.alphabet, den.nvars, den.conductor,
                        {tuple(e - s for e, s in zip(exps, shared)): c
                         for exps, c in den.terms.items()})
        try:
            q = num.exact_div(den)
            return RatFun(q)
        except NotDivisible:
            return RatFun(num, den)

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        if self.is_polynomial():
            c = self.den.coefficient((0,) * self.den.nvars)
            p = self.num * c.inverse()
            return str(p)
        return f"({self.num})/({self.den})"


def rf_eq(a: RatFun, b: RatFun) -> bool:
    """Cross-multiplication equality of rational functions."""
    return a == b


def require_homogeneous(f: MPoly) -> int:
    if not f.is_homogeneous():
        raise NonHomogeneousInput(f"polynomial is not homogeneous: {f}")
    return f.total_degree()
