"""Verdict-producing checks tying the local invariants together.

Every check returns a CheckReport carrying a verdict, the quantities it
computed, and any caveats.  Verdicts are "pass", "fail", or
"not-applicable"; the last one is used when a hypothesis of the statement
under test is not satisfied, in which case the numbers are still reported
but prove nothing.

The central object is the multiplication operator sigma on the finite
quotient by the two germ components: its kernel computes the Tjurina number
of an invariant curve, its square detects Briancon-Skoda style membership of
the squared curve equation, and comparing its kernel and image settles when
the Milnor number reaches twice the Tjurina number.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blowup import IrrationalSingularPointError, reduce_germ
from .germs import (
    DEFAULT_PROBES,
    BalancedEquation,
    CurveGerm,
    FoliationGerm,
    excess_polar,
    generic_polar,
    intersection_multiplicity,
    is_second_type,
    is_semihomogeneous,
    multiplicity,
    tangency_excess,
    tjurina_foliation,
    validate_balanced,
)
from .linalg import bareiss_rank, column_space_equal, kernel_basis
from .localalg import (
    kernel_rank,
    mult_operator,
    normal_form,
    quotient_dim,
    standard_basis,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


@dataclass
class CheckReport:
    name: str
    verdict: str
    data: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def _quotient(f: FoliationGerm):
    sb = standard_basis([f.P, f.Q])
    mu = quotient_dim(sb)
    assert mu is not None, "coprime components always give a finite quotient"
    return sb, mu


def _image_columns(matrix) -> list[list]:
    n = len(matrix)
    return [[matrix[i][j] for i in range(n)] for j in range(n)]


def check_briancon_skoda(f: FoliationGerm, b: BalancedEquation) -> CheckReport:
    """Does the squared zero divisor lie in the ideal of the germ components?

    The membership is decided three independent ways: a local normal form of
    the square, vanishing of the squared multiplication operator, and
    containment of the image of that operator in its kernel.  All three must
    agree; the verdict reflects the membership itself.  The second-type flag
    is reported because the statement is only guaranteed under it.
    """
    validate_balanced(f, b)
    sb, mu = _quotient(f)
    g = b.zero.poly
    member_nf = normal_form(g * g, sb).is_zero
    sigma = mult_operator(sb, g)
    member_op = sigma.compose(sigma).is_zero()
    n = sigma.dimension
    if n == 0:
        member_sub = True
    else:
        kernel = kernel_basis(sigma.matrix, ncols=n)
        image = _image_columns(sigma.matrix)
        base = bareiss_rank(kernel) if kernel else 0
        member_sub = bareiss_rank(kernel + image) == base
    assert member_nf == member_op == member_sub, "membership routes disagree"
    second = is_second_type(f, b)
    report = CheckReport(
        name="check-bs",
        verdict=_verdict(member_nf),
        data={
            "mu": mu,
            "zero_divisor": str(g),
            "member_normal_form": member_nf,
            "member_operator_square": member_op,
            "member_image_in_kernel": member_sub,
            "second_type": second,
        },
    )
    if not second:
        report.notes.append(
            "germ is not of second type; membership is not guaranteed"
        )
    return report


def check_kernel_identity(f: FoliationGerm, c: CurveGerm) -> CheckReport:
    """Kernel of multiplication by the curve has dimension tau, rank mu - tau."""
    sb, mu = _quotient(f)
    sigma = mult_operator(sb, c.poly)
    kernel_dim, rank = kernel_rank(sigma)
    tau = tjurina_foliation(f, c)
    ok = kernel_dim == tau and rank == mu - tau
    return CheckReport(
        name="kernel-identity",
        verdict=_verdict(ok),
        data={
            "mu": mu,
            "tau": tau,
            "kernel_dim": kernel_dim,
            "rank": rank,
        },
    )


def check_liu(f: FoliationGerm, b: BalancedEquation) -> CheckReport:
    """Sandwich tau <= mu <= 2*tau, with mu = 2*tau iff kernel equals image.

    Both statements assume the germ is of second type; otherwise the check
    is not applicable and only reports the numbers.
    """
    xi = tangency_excess(f, b)
    sb, mu = _quotient(f)
    tau = tjurina_foliation(f, b.zero)
    data = {"mu": mu, "tau": tau, "xi": xi, "second_type": xi == 0}
    if xi != 0:
        return CheckReport(
            name="check-liu",
            verdict=NOT_APPLICABLE,
            data=data,
            notes=["germ is not of second type"],
        )
    sigma = mult_operator(sb, b.zero.poly)
    n = sigma.dimension
    kernel = kernel_basis(sigma.matrix, ncols=n) if n else []
    image = _image_columns(sigma.matrix)
    kernel_is_image = column_space_equal(kernel, image)
    sandwich = tau <= mu <= 2 * tau
    equality = (mu == 2 * tau) == kernel_is_image
    data["sandwich"] = sandwich
    data["mu_equals_2tau"] = mu == 2 * tau
    data["kernel_equals_image"] = kernel_is_image
    return CheckReport(
        name="check-liu",
        verdict=_verdict(sandwich and equality),
        data=data,
    )


def check_cota(
    f: FoliationGerm,
    b: BalancedEquation,
    probes: tuple[tuple[int, int], ...] = DEFAULT_PROBES,
) -> CheckReport:
    """Lower bound from the balanced divisor: lhs <= mu <= 2*tau.

    The left side is (nu0 - 1)^2 + nu_inf - i(polar, pole) - i(zero, pole)
    where nu0, nu_inf are the orders of the zero and pole divisors.  Under
    second type the chain must hold; when the germ has no saddle-node in its
    reduction and the zero divisor is semihomogeneous the first inequality
    must be an equality.  With an empty pole the bound specialises to
    nu^2 <= mu and nu^2 <= 2*tau.
    """
    xi = tangency_excess(f, b)
    sb, mu = _quotient(f)
    tau = tjurina_foliation(f, b.zero)
    against = [b.zero] + ([b.pole] if b.pole is not None else [])
    cert = generic_polar(f, probes, against=against)
    nu0 = b.zero.order
    nu_inf = b.pole.order if b.pole is not None else 0
    if b.pole is not None:
        i_polar_pole = intersection_multiplicity(cert.polar.poly, b.pole.poly)
        i_zero_pole = intersection_multiplicity(b.zero.poly, b.pole.poly)
    else:
        i_polar_pole = 0
        i_zero_pole = 0
    lhs = (nu0 - 1) ** 2 + nu_inf - i_polar_pole - i_zero_pole
    delta = excess_polar(f, b, polar=cert.polar)
    generalized = delta == 0
    semi = is_semihomogeneous(b.zero)
    data = {
        "lhs": lhs,
        "mu": mu,
        "two_tau": 2 * tau,
        "tau": tau,
        "xi": xi,
        "second_type": xi == 0,
        "generalized_curve": generalized,
        "semihomogeneous": semi,
        "polar_probe": cert.probe,
        "polar_certified": cert.certified,
    }
    notes = []
    if not cert.certified:
        notes.append("polar genericity attained by a single probe only")
    if xi != 0:
        notes.insert(0, "germ is not of second type")
        return CheckReport(
            name="check-cota", verdict=NOT_APPLICABLE, data=data, notes=notes
        )
    ok = lhs <= mu <= 2 * tau
    if generalized and semi:
        data["equality_expected"] = True
        ok = ok and lhs == mu
    if b.pole is None:
        nu = multiplicity(f)
        data["nu_squared"] = nu * nu
        ok = ok and nu * nu <= mu and nu * nu <= 2 * tau
    return CheckReport(
        name="check-cota", verdict=_verdict(ok), data=data, notes=notes
    )


def check_second_type(
    f: FoliationGerm,
    b: BalancedEquation,
    mode: str = "both",
    max_blowups: int = 24,
) -> CheckReport:
    """Decide second type by the multiplicity criterion, by reduction, or both.

    The criterion route computes the tangency excess of the balanced
    equation; the reduction route looks for saddle-nodes whose weak
    separatrix sits inside the exceptional divisor.  When reduction aborts
    on a singular point without rational coordinates the check degrades to
    the criterion and says so.
    """
    if mode not in ("criterion", "reduction", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    data: dict = {}
    notes: list[str] = []
    answers = []
    if mode in ("criterion", "both"):
        xi = tangency_excess(f, b)
        data["xi"] = xi
        data["criterion"] = xi == 0
        answers.append(xi == 0)
    if mode in ("reduction", "both"):
        try:
            result = reduce_germ(f, max_blowups=max_blowups)
        except IrrationalSingularPointError as err:
            notes.append(
                "reduction aborted on a singular point without rational "
                f"coordinates (residual {err.residual}); "
                "falling back to the multiplicity criterion"
            )
            if mode == "reduction":
                xi = tangency_excess(f, b)
                data["xi"] = xi
                data["criterion"] = xi == 0
                answers.append(xi == 0)
        else:
            data["blowups"] = result.blowups
            data["tangent_saddle_nodes"] = sum(
                1 for s in result.singularities if s.weak_along_divisor
            )
            data["reduction"] = result.second_type
            answers.append(result.second_type)
    if len(answers) == 2 and answers[0] != answers[1]:
        notes.append("criterion and reduction disagree")
        return CheckReport(
            name="check-second-type", verdict=FAIL, data=data, notes=notes
        )
    return CheckReport(
        name="check-second-type",
        verdict=_verdict(answers[0]),
        data=data,
        notes=notes,
    )
