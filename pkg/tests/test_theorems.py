import random
from fractions import Fraction

import pytest

from conftest import random_nonzero_poly
from folgerm.germs import BalancedEquation, CurveGerm, FoliationGerm
from folgerm.polynomials import is_squarefree, parse_poly
from folgerm.theorems import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    check_briancon_skoda,
    check_cota,
    check_kernel_identity,
    check_liu,
    check_second_type,
)


def P(text):
    return parse_poly(text, 2)


def radial():
    return FoliationGerm(P("-y"), P("x"))


def cusp():
    return FoliationGerm(P("-3*x^2"), P("2*y"))


def fk(k, lam=1):
    p = parse_poly(
        f"y*(2*x^{2 * k - 2}+2*(lambda+1)*x^2*y^{k - 2}-y^{k - 1})", 2,
        {"lambda": Fraction(lam)},
    )
    q = parse_poly(
        f"x*(y^{k - 1}-(lambda+1)*x^2*y^{k - 2}-x^{2 * k - 2})", 2,
        {"lambda": Fraction(lam)},
    )
    return FoliationGerm(p, q)


RADIAL_B = BalancedEquation(CurveGerm(P("x*y*(x-y)")), CurveGerm(P("x+y")))
CUSP_B = BalancedEquation(CurveGerm(P("y^2 - x^3")))
FK_B = BalancedEquation(CurveGerm(P("x*y")))


def hamiltonian_corpus(seed, count, tries=400):
    rng = random.Random(seed)
    out = []
    for _ in range(tries):
        f = random_nonzero_poly(rng, max_degree=4, max_terms=5, min_order=2)
        if not is_squarefree(f):
            continue
        try:
            germ = FoliationGerm(f.diff(0), f.diff(1))
            curve = CurveGerm(f)
        except ValueError:
            continue
        out.append((germ, BalancedEquation(curve)))
        if len(out) == count:
            break
    assert len(out) == count
    return out


class TestBrianconSkoda:
    def test_radial(self):
        report = check_briancon_skoda(radial(), RADIAL_B)
        assert report.verdict == PASS
        assert report.data["member_normal_form"]
        assert report.data["member_operator_square"]
        assert report.data["member_image_in_kernel"]
        assert report.data["second_type"]
        assert report.notes == []

    def test_cusp(self):
        report = check_briancon_skoda(cusp(), CUSP_B)
        assert report.verdict == PASS
        assert report.data["mu"] == 2

    def test_fk5_membership_fails(self):
        report = check_briancon_skoda(fk(5), FK_B)
        assert report.verdict == FAIL
        assert not report.data["member_normal_form"]
        assert not report.data["second_type"]
        assert any("not of second type" in n for n in report.notes)

    def test_hamiltonian_corpus(self):
        for germ, b in hamiltonian_corpus(2203, 10):
            report = check_briancon_skoda(germ, b)
            assert report.verdict == PASS, str(b.zero)


class TestKernelIdentity:
    def test_radial(self):
        report = check_kernel_identity(radial(), RADIAL_B.zero)
        assert report.verdict == PASS
        assert report.data == {"mu": 1, "tau": 1, "kernel_dim": 1, "rank": 0}

    def test_fk5(self):
        report = check_kernel_identity(fk(5), FK_B.zero)
        assert report.verdict == PASS
        assert report.data == {"mu": 45, "tau": 13, "kernel_dim": 13, "rank": 32}

    def test_hamiltonian_corpus(self):
        for germ, b in hamiltonian_corpus(404, 8):
            report = check_kernel_identity(germ, b.zero)
            assert report.verdict == PASS, str(b.zero)


class TestLiu:
    def test_radial(self):
        report = check_liu(radial(), RADIAL_B)
        assert report.verdict == PASS
        assert report.data["sandwich"]
        assert not report.data["mu_equals_2tau"]
        assert not report.data["kernel_equals_image"]

    def test_cusp(self):
        report = check_liu(cusp(), CUSP_B)
        assert report.verdict == PASS
        assert report.data["mu"] == 2
        assert report.data["tau"] == 2

    def test_fk5_not_applicable(self):
        report = check_liu(fk(5), FK_B)
        assert report.verdict == NOT_APPLICABLE
        assert report.data["xi"] == 4
        # The sandwich itself is violated here: mu = 45 > 2*tau = 26.
        assert report.data["mu"] > 2 * report.data["tau"]

    def test_hamiltonian_corpus(self):
        for germ, b in hamiltonian_corpus(871, 8):
            report = check_liu(germ, b)
            assert report.verdict == PASS, str(b.zero)
            assert report.data["second_type"]


class TestCota:
    def test_radial_attains_equality(self):
        report = check_cota(radial(), RADIAL_B)
        assert report.verdict == PASS
        assert report.data["lhs"] == 1
        assert report.data["mu"] == 1
        assert report.data["generalized_curve"]
        assert report.data["semihomogeneous"]
        assert report.data["equality_expected"]

    def test_cusp_strict(self):
        report = check_cota(cusp(), CUSP_B)
        assert report.verdict == PASS
        assert report.data["lhs"] == 1
        assert report.data["mu"] == 2
        assert report.data["generalized_curve"]
        assert not report.data["semihomogeneous"]
        assert "equality_expected" not in report.data
        assert report.data["nu_squared"] == 1

    def test_fk5_not_applicable(self):
        report = check_cota(fk(5), FK_B)
        assert report.verdict == NOT_APPLICABLE


class TestSecondType:
    def test_cusp_both_routes(self):
        report = check_second_type(cusp(), CUSP_B, mode="both")
        assert report.verdict == PASS
        assert report.data["xi"] == 0
        assert report.data["criterion"]
        assert report.data["reduction"]
        assert report.data["blowups"] == 3
        assert report.data["tangent_saddle_nodes"] == 0

    def test_fk5_criterion(self):
        report = check_second_type(fk(5), FK_B, mode="criterion")
        assert report.verdict == FAIL
        assert report.data["xi"] == 4
        assert "reduction" not in report.data

    def test_tangent_saddle_node_germ(self):
        germ = FoliationGerm(P("-x - y"), P("x"))
        b = BalancedEquation(CurveGerm(P("x")))
        report = check_second_type(germ, b, mode="both")
        assert report.verdict == FAIL
        assert report.data["xi"] == 1
        assert not report.data["reduction"]
        assert report.data["tangent_saddle_nodes"] == 1

    def test_irrational_degrades_to_criterion(self):
        germ = FoliationGerm(P("y^2 - 4*x^2"), P("x*y"))
        b = BalancedEquation(CurveGerm(P("x")))
        report = check_second_type(germ, b, mode="both")
        assert report.verdict == FAIL
        assert report.data["xi"] == 2
        assert "reduction" not in report.data
        assert any("falling back" in n for n in report.notes)

    def test_reduction_mode_also_degrades(self):
        germ = FoliationGerm(P("y^2 - 4*x^2"), P("x*y"))
        b = BalancedEquation(CurveGerm(P("x")))
        report = check_second_type(germ, b, mode="reduction")
        assert report.verdict == FAIL
        assert report.data["criterion"] is False

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            check_second_type(cusp(), CUSP_B, mode="fast")

    def test_hamiltonian_corpus_is_second_type(self):
        for germ, b in hamiltonian_corpus(99, 6):
            report = check_second_type(germ, b, mode="criterion")
            assert report.verdict == PASS, str(b.zero)
