"""The exact verifiers, including mutation (failure-injection) coverage."""

import dataclasses

import pytest

from reflconn.errors import DenominatorMismatch
from reflconn.poly import MPoly
from reflconn.verify import (
    VerificationReport,
    check_determinant_character,
    check_equivariance,
    check_integrability,
    check_invariance,
    cross_validate,
    full_report,
)

from conftest import catalog, pipeline, px, pz


def _flip_sign(matrices, ell, r, c):
    """Copy of a tuple-of-matrices with one entry negated."""
    return tuple(
        tuple(
            tuple(
                -e if (i, rr, cc) == (ell, r, c) else e
                for cc, e in enumerate(row)
            )
            for rr, row in enumerate(mat)
        )
        for i, mat in enumerate(matrices)
    )


class TestHonestSystems:
    @pytest.mark.parametrize("name", ["G(2,1,2)", "G4"])
    def test_full_report_passes(self, name):
        group, inv, jd, sc, cs = pipeline(name)
        report = full_report(group, inv, jd, sc, cs)
        assert report.all_passed
        assert report.failures() == []
        names = [c.name for c in report.checks]
        assert any(n.startswith("integrability") for n in names)
        assert any(n.startswith("jacobian_equivariance") for n in names)
        assert any(n.startswith("cross_validation") for n in names)

    def test_invariance_checker(self):
        group, inv = catalog("G(2,1,2)")
        assert check_invariance(inv.phis[0], group)
        assert not check_invariance(px("x1^2 - x2^2"), group)

    def test_report_rendering(self):
        _, _, _, _, cs = pipeline("G(2,1,2)")
        report = check_integrability(cs)
        text = report.render()
        assert "[PASS] integrability[1,2]" in text
        d = report.to_dict()
        assert d["all_passed"] is True
        assert d["checks"][0]["name"] == "integrability[1,2]"


class TestMutationDetection:
    def test_equivariance_flags_mutated_jacobian(self):
        group, inv, jd, _, _ = pipeline("G(2,1,2)")
        bad_jac = tuple(
            tuple(
                px("3*x1") if (r, c) == (0, 0) else e
                for c, e in enumerate(row)
            )
            for r, row in enumerate(jd.jac)
        )
        bad = dataclasses.replace(jd, jac=bad_jac)
        report = check_equivariance(bad, group)
        assert not report.all_passed
        assert any("entry (1,1)" in f.witness for f in report.failures())

    def test_determinant_character_flags_mutation(self):
        group, inv, jd, _, _ = pipeline("G(2,1,2)")
        bad = dataclasses.replace(jd, det=jd.det + px("x1^4"))
        report = check_determinant_character(bad, group)
        assert not report.all_passed

    def test_integrability_flags_sign_flip(self):
        _, _, _, _, cs = pipeline("G(2,1,2)")
        bad = dataclasses.replace(
            cs, numerators=_flip_sign(cs.numerators, 0, 0, 1)
        )
        report = check_integrability(bad)
        assert not report.all_passed
        failure = report.failures()[0]
        assert "pair (1,2)" in failure.witness
        assert "entry" in failure.witness

    def test_cross_validation_flags_sign_flip(self):
        _, inv, _, sc, cs = pipeline("G(2,1,2)")
        bad = dataclasses.replace(cs, matrices=_flip_sign(cs.matrices, 1, 0, 0))
        report = cross_validate(bad, sc, inv)
        assert not report.all_passed
        assert "A_2 entry (1,1)" in report.failures()[0].witness

    def test_denominator_space_mismatch(self):
        _, _, _, sc, cs = pipeline("G(2,1,2)")
        bad = dataclasses.replace(cs, numerators=sc.numerators)  # x-space!
        with pytest.raises(DenominatorMismatch):
            check_integrability(bad)


class TestReport:
    def test_empty_report_passes(self):
        assert VerificationReport().all_passed

    def test_witness_preserved(self):
        r = VerificationReport()
        r.add("demo", False, witness="entry (2,2)")
        assert not r.all_passed
        assert "witness: entry (2,2)" in r.render()
        assert "[FAIL] demo" in r.render()
