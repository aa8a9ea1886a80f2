"""Rewriting invariant polynomials in the invariant coordinates."""

import random
from fractions import Fraction

import pytest

from reflconn.cyclo import CycloNum
from reflconn.errors import NonHomogeneousInput, NotInvariant
from reflconn.invariants import reynolds
from reflconn.poly import MPoly
from reflconn.rewrite import Rewriter, exponent_set, rewrite_invariant

from conftest import catalog, px, pz


class TestExponentSet:
    def test_dihedral_degree_eight(self):
        es = exponent_set(8, (2, 4))
        assert es.members == ((0, 2), (2, 1), (4, 0))

    def test_empty_when_unreachable(self):
        assert exponent_set(5, (2, 4)).members == ()
        assert exponent_set(3, (2,)).members == ()

    def test_zero_target(self):
        assert exponent_set(0, (2, 4)).members == ((0, 0),)

    def test_lex_order(self):
        es = exponent_set(12, (2, 4))
        assert list(es.members) == sorted(es.members)

    def test_three_degrees(self):
        es = exponent_set(6, (2, 3, 6))
        assert set(es.members) == {(3, 0, 0), (0, 2, 0), (0, 0, 1)}

    def test_bad_input(self):
        with pytest.raises(ValueError):
            exponent_set(4, (0, 2))
        with pytest.raises(ValueError):
            exponent_set(-1, (2,))


class TestRewriteDihedral:
    def test_golden_examples(self):
        _, inv = catalog("G(2,1,2)")
        assert rewrite_invariant(px("x1^2 + x2^2"), inv) == pz("z1")
        assert rewrite_invariant(px("x1^2*x2^2"), inv) == pz("z2")
        assert rewrite_invariant(px("x1^4 + x2^4"), inv) == pz("z1^2 - 2*z2")
        assert rewrite_invariant(px("x1^6 + x2^6"), inv) == pz(
            "z1^3 - 3*z1*z2"
        )

    def test_zero_and_constant(self):
        _, inv = catalog("G(2,1,2)")
        assert rewrite_invariant(MPoly.zero("x", 2, 12), inv).is_zero()
        assert rewrite_invariant(px("5"), inv) == pz("5")

    def test_not_invariant_inconsistent(self):
        _, inv = catalog("G(2,1,2)")
        with pytest.raises(NotInvariant):
            rewrite_invariant(px("x1^2 - x2^2"), inv)

    def test_not_invariant_unreachable_degree(self):
        _, inv = catalog("G(2,1,2)")
        with pytest.raises(NotInvariant):
            rewrite_invariant(px("x1^3"), inv)

    def test_non_homogeneous_rejected(self):
        _, inv = catalog("G(2,1,2)")
        with pytest.raises(NonHomogeneousInput):
            rewrite_invariant(px("x1^2 + x2^2 + 1"), inv)

    def test_reynolds_image_is_rewritable(self):
        group, inv = catalog("G(2,1,2)")
        f = reynolds(px("x1^6"), group)
        g = rewrite_invariant(f, inv)
        assert g.compose(list(inv.phis)) == f


class TestRewriteTetrahedral:
    def test_invariant_products(self):
        _, inv = catalog("G4")
        f1, f2 = inv.phis
        assert rewrite_invariant(f1 * f2, inv) == pz("z1*z2")
        assert rewrite_invariant(f1 ** 2, inv) == pz("z1^2")
        assert rewrite_invariant(f1 ** 3 - 4 * f2 ** 2, inv) == pz(
            "z1^3 - 4*z2^2"
        )


def random_weighted_poly(rng, degrees, max_total=6, conductor=12):
    """A nonzero z-polynomial, weighted-homogeneous for the given degrees,
    of total z-degree at most max_total."""
    while True:
        e0 = tuple(rng.randrange(max_total + 1) for _ in degrees)
        if 0 < sum(e0) <= max_total:
            break
    target = sum(e * d for e, d in zip(e0, degrees))
    members = [
        e
        for e in exponent_set(target, degrees).members
        if sum(e) <= max_total
    ]
    terms = {}
    for e in members:
        coeffs = tuple(Fraction(rng.randrange(-3, 4)) for _ in range(4))
        c = CycloNum(conductor, coeffs)
        if c:
            terms[e] = c
    if not terms:
        terms[e0] = CycloNum.one(conductor)
    return MPoly("z", len(degrees), conductor, terms)


class TestRoundTrip:
    @pytest.mark.parametrize("name", ["G(2,1,2)", "G4"])
    def test_round_trip_random(self, name):
        _, inv = catalog(name)
        rewriter = Rewriter(inv)
        rng = random.Random(hash(name) & 0xFFFF)
        for _ in range(25):
            f_tilde = random_weighted_poly(rng, inv.degrees)
            f = f_tilde.compose(list(inv.phis))
            assert rewriter.rewrite(f) == f_tilde

    def test_memoized_products_reused(self):
        _, inv = catalog("G(2,1,2)")
        rewriter = Rewriter(inv)
        rewriter.rewrite(px("x1^4 + x2^4"))
        cached = dict(rewriter._products)
        rewriter.rewrite(px("x1^2*x2^2 + 0*x1^4"))
        for k, v in cached.items():
            assert rewriter._products[k] is v
