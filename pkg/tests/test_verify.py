from fractions import Fraction

import mpmath
import pytest

from diambounds.errors import DomainError
from diambounds.verify import (
    KNOWN_VALUES,
    Appendix,
    InductionTheorem,
    Verdict,
    VerificationReport,
    appendix_grid,
    run_suite,
    verify_appendix,
    verify_index_swap,
    verify_induction_region,
    verify_induction_step,
    verify_known_values,
)

from oracles import script_cases, script_table

SCRIPT = {Appendix.A1: "a1", Appendix.A2: "a2", Appendix.A3: "a3"}


@pytest.mark.parametrize("which", list(Appendix))
def test_grid_matches_script_loops(which):
    assert appendix_grid(which) == script_cases(SCRIPT[which])


def test_grid_sizes():
    assert [len(appendix_grid(a)) for a in Appendix] == [48, 28, 17]


@pytest.mark.parametrize("which", list(Appendix))
def test_appendix_all_pass(which):
    rep = verify_appendix(which)
    assert rep.ok and rep.summary["Pass"] == len(appendix_grid(which))
    assert [(c.params["d"], c.params["n"]) for c in rep.cases] == appendix_grid(which)


@pytest.mark.parametrize("kind,which,base", [
    ("delta-u", "a1", lambda d, n: (n - d) ** mpmath.log(d - 1, 2)),
    ("delta-b", "a2", lambda d, n: (mpmath.mpf(2) / 3 * (n - d + mpmath.mpf(3) / 2)) ** mpmath.log(d - 1, 2)),
    ("sigma", "a3", lambda d, n: (n - d) ** mpmath.log(d, 2)),
])
def test_script_variant_of_tables_also_passes(kind, which, base):
    # the scripts keep Tilde[d-1,d-1] on the diagonal; their tables must clear the same bounds
    tilde = script_table(kind, 10, 45)
    with mpmath.workdps(60):
        for d, n in script_cases(which):
            assert tilde[d, n] <= base(d, n) + mpmath.mpf(10) ** -40


def test_a3_first_case():
    c = verify_appendix("appendix-a3").cases[0]
    assert c.params == {"d": 4, "n": 5} and c.lhs == "1" and c.rhs == "1"


def test_text_lines_mimic_script():
    text = verify_appendix(Appendix.A1).to_text().splitlines()
    assert text[0] == "Passed 4, 4"
    assert text[47] == "Passed 7, 14"
    assert text[-1].startswith("# appendix-a1: 48 passed")


class TestInduction:
    def test_t31_bracket_at_5_13(self):
        rep = verify_induction_step("T31", 5, 13)
        bracket = next(c for c in rep.cases if c.params["link"] == "bracket <= 1")
        assert bracket.lhs == "61/64" and bracket.verdict is Verdict.PASS
        assert rep.ok

    def test_t53_polynomial(self):
        rep = verify_induction_step(InductionTheorem.T53, 5, 13)
        poly = next(c for c in rep.cases if c.params["link"].startswith("bracket <= (d^3"))
        assert poly.rhs == "116/125"
        rep4 = verify_induction_step("T53", 4, 12)
        cubic = next(c for c in rep4.cases if c.params["link"] == "d^3-d^2+3d+1 <= d^3")
        assert (cubic.lhs, cubic.rhs) == ("61", "64")
        assert rep.ok and rep4.ok

    @pytest.mark.parametrize("th,d,n", [("T31", 4, 12), ("T31", 5, 12), ("T41", 5, 15), ("T53", 3, 11)])
    def test_outside_region(self, th, d, n):
        with pytest.raises(DomainError):
            verify_induction_step(th, d, n)

    @pytest.mark.parametrize("th", list(InductionTheorem))
    def test_region_all_pass(self, th):
        rep = verify_induction_region(th, d_max=8, slack_span=20)
        assert rep.ok and rep.summary["total"] > 0

    def test_t41_needs_slack_eleven_at_d4(self):
        # with d = 4 the bracket exceeds 1 at the smallest slack, so d >= 5 is required
        from diambounds.exact import IntLit, Pow, compare, lift, log2
        x = lift(Fraction(2, 3) * (11 + Fraction(3, 2)))
        q = lift(Fraction(2, 3))
        bracket = q ** 3 + lift(Fraction(2, 3)) + 2 / Pow(IntLit(3), log2(x))
        assert compare(bracket, 1).ordering.name == "GREATER"


class TestIndexSwap:
    @pytest.mark.parametrize("k,p", [(2, 2), (0, 3), (3, 1)])
    def test_examples(self, k, p):
        rep = verify_index_swap(k, p)
        assert rep.ok and len(rep.cases) == 2

    def test_domain(self):
        with pytest.raises(DomainError):
            verify_index_swap(-1, 2)


class TestKnownValues:
    def test_all_pass(self):
        rep = verify_known_values()
        assert rep.ok
        pairs = {(c.params["d"], c.params["n"]) for c in rep.cases}
        assert pairs == {(k.d, k.n) for k in KNOWN_VALUES}

    def test_hirsch_equality_case(self):
        rep = verify_known_values()
        c = next(c for c in rep.cases if c.params == {"d": 5, "n": 10, "bound": "hirsch"})
        assert (c.lhs, c.rhs) == ("5", "5") and c.verdict is Verdict.PASS


class TestReport:
    def test_round_trip(self):
        for rep in run_suite("known-values") + [verify_induction_step("T41", 6, 20)]:
            back = VerificationReport.from_json(rep.to_json())
            assert back.to_dict() == rep.to_dict()

    def test_summary_mismatch_rejected(self):
        rep = verify_index_swap(2, 2)
        data = rep.to_dict()
        data["summary"]["Pass"] = 0
        with pytest.raises(ValueError):
            VerificationReport.from_dict(data)

    def test_failed_and_undecided_flags(self):
        rep = VerificationReport("x")
        rep.add({"d": 1, "n": 1}, 2, 1, Verdict.FAIL)
        rep.add({"d": 1, "n": 2}, 1, 1, Verdict.UNDECIDED)
        assert rep.failed and rep.undecided and not rep.ok
        assert rep.cases[0].line() == "Failed 1, 1"

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            run_suite("appendix-z9")
