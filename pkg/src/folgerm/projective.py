"""Foliations of the projective plane given by homogeneous 1-forms.

A 1-form ``A dx + B dy + C dz`` with homogeneous coefficients of a common
degree descends to the projective plane exactly when the Euler relation
``x*A + y*B + z*C = 0`` holds and the coefficients share no common factor.
The degree of the foliation is one less than the coefficient degree: a
degree-d foliation has coefficients of degree d + 1 and, counted with
multiplicity, ``d**2 + d + 1`` singular points.

Singular points are located by exact elimination, so only the rational ones
are found.  The sum of local Milnor numbers over the located points is
compared against ``d**2 + d + 1``: when the two agree, every singular point
has rational coordinates and the list is provably complete.  Local work
happens in the affine chart of the last nonzero coordinate, with the chart
1-form read off by discarding the differential of the chart variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .blowup import rational_roots
from .germs import (
    BalancedEquation,
    CurveGerm,
    FoliationGerm,
    gsv_index,
    milnor_foliation,
    tangency_excess,
    tjurina_curve,
)
from .polynomials import (
    Poly,
    _pseudo_rem,
    dehomogenize,
    divides,
    is_squarefree,
    poly_gcd,
)
from .theorems import FAIL, NOT_APPLICABLE, PASS, CheckReport


class EulerRelationError(ValueError):
    """Raised when x*A + y*B + z*C does not vanish; carries the residual."""

    def __init__(self, residual: Poly):
        super().__init__(f"Euler relation fails: x*A + y*B + z*C = {residual}")
        self.residual = residual


@dataclass(frozen=True)
class ProjectiveFoliation:
    """Validated homogeneous 1-form A dx + B dy + C dz of projective degree d."""

    A: Poly
    B: Poly
    C: Poly
    degree: int

    def __str__(self) -> str:
        return f"({self.A}) dx + ({self.B}) dy + ({self.C}) dz"


def validate_form(A: Poly, B: Poly, C: Poly) -> ProjectiveFoliation:
    """Check the Euler relation and coprimality, and read off the degree.

    Raises ``EulerRelationError`` when the contraction with the radial
    vector field is nonzero, and a plain ``ValueError`` for inhomogeneous
    input or coefficients with a common factor (such forms do not define a
    foliation of the stated degree).
    """
    for coeff in (A, B, C):
        if coeff.nvars != 3:
            raise ValueError("projective coefficients live in three variables")
    nonzero = [c for c in (A, B, C) if not c.is_zero]
    if not nonzero:
        raise ValueError("all three coefficients vanish")
    degrees = set()
    for coeff in nonzero:
        if not coeff.is_homogeneous():
            raise ValueError("coefficients must be homogeneous")
        degrees.add(coeff.total_degree())
    if len(degrees) != 1:
        raise ValueError("coefficients must share a common degree")
    residual = (
        Poly.variable(3, 0) * A
        + Poly.variable(3, 1) * B
        + Poly.variable(3, 2) * C
    )
    if not residual.is_zero:
        raise EulerRelationError(residual)
    common = nonzero[0]
    for coeff in nonzero[1:]:
        common = poly_gcd(common, coeff)
    if common.total_degree() > 0:
        raise ValueError(f"coefficients share the common factor {common}")
    return ProjectiveFoliation(A, B, C, degrees.pop() - 1)


def is_invariant_curve(form: ProjectiveFoliation, curve: Poly) -> bool:
    """Whether the homogeneous curve is invariant for the foliation.

    The wedge of the form with the differential of the curve has three
    coefficients; the curve is invariant when it divides all of them.
    """
    if curve.nvars != 3 or curve.is_zero:
        raise ValueError("expected a nonzero polynomial in three variables")
    if not curve.is_homogeneous():
        raise ValueError("projective curves must be homogeneous")
    fx, fy, fz = (curve.diff(i) for i in range(3))
    wedge = (
        form.A * fy - form.B * fx,
        form.A * fz - form.C * fx,
        form.B * fz - form.C * fy,
    )
    return all(w.is_zero or divides(curve, w) for w in wedge)


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous coordinates scaled so the last nonzero entry is 1."""

    coords: tuple[Fraction, Fraction, Fraction]

    @classmethod
    def of(cls, x, y, z) -> ProjectivePoint:
        coords = (Fraction(x), Fraction(y), Fraction(z))
        scale = next((c for c in reversed(coords) if c), None)
        if scale is None:
            raise ValueError("(0 : 0 : 0) is not a projective point")
        return cls(tuple(c / scale for c in coords))

    @property
    def chart(self) -> int:
        """Index of the chart coordinate (the last nonzero one)."""
        return max(i for i, c in enumerate(self.coords) if c)

    def __str__(self) -> str:
        return "[" + " : ".join(str(c) for c in self.coords) + "]"


def _coeff_list(p: Poly, var: int) -> list[Fraction]:
    """Coefficients by power of ``var`` for a polynomial using only ``var``."""
    coeffs = [Fraction(0)] * (max(p.degree_in(var), 0) + 1)
    for monomial, c in p.items():
        coeffs[monomial[var]] += c
    return coeffs


def _restrict_to_infinity(p: Poly) -> list[Fraction]:
    """Coefficients of p(t, 1, 0) by power of t."""
    coeffs = [Fraction(0)] * (max(p.degree_in(0), 0) + 1)
    for (i, j, k), c in p.items():
        if k == 0:
            coeffs[i] += c
    return coeffs


def _section_in_y(p: Poly, x0: Fraction) -> list[Fraction]:
    """Coefficients of p(x0, t) by power of t."""
    coeffs = [Fraction(0)] * (max(p.degree_in(1), 0) + 1)
    for (i, j), c in p.items():
        coeffs[j] += c * x0**i
    return coeffs


def _line_roots(first: list[Fraction], second: list[Fraction]) -> list[Fraction]:
    """Common rational roots of two univariate coefficient lists."""

    def nonzero(coeffs):
        return any(coeffs)

    if not nonzero(first) and not nonzero(second):
        raise ValueError("singular locus contains a line")
    if not nonzero(first):
        return rational_roots(second)[0]
    if not nonzero(second):
        return rational_roots(first)[0]
    roots, _, _ = rational_roots(first)
    others = set(rational_roots(second)[0])
    return [r for r in roots if r in others]


def _affine_common_zeros(a: Poly, b: Poly) -> list[tuple[Fraction, Fraction]]:
    """All rational common zeros of a coprime pair in two variables.

    Eliminates the second variable by a pseudo-remainder chain: every common
    zero of the pair is a zero of each element of the chain, so the final
    element (which no longer involves y) catches all candidate x-coordinates.
    Candidates are then confirmed by restricting both polynomials to the
    vertical line.  Irrational zeros are silently missed; callers certify
    completeness through the Milnor-number budget.
    """
    if a.is_zero or b.is_zero:
        survivor = b if a.is_zero else a
        if survivor.is_zero or survivor.total_degree() > 0:
            raise ValueError("singular locus is not finite in a chart")
        return []
    if poly_gcd(a, b).total_degree() > 0:
        raise ValueError("singular locus contains a curve")
    f, g = (a, b) if a.degree_in(1) >= b.degree_in(1) else (b, a)
    while g.degree_in(1) > 0:
        f, g = g, _pseudo_rem(f, g, 1)
        assert not g.is_zero, "coprime pairs leave a nonzero eliminant"
    candidates, _, _ = rational_roots(_coeff_list(g, 0))
    points = []
    for x0 in sorted(candidates):
        section_a = _section_in_y(a, x0)
        section_b = _section_in_y(b, x0)
        for y0 in _line_roots(section_a, section_b):
            if a.evaluate((x0, y0)) == 0 and b.evaluate((x0, y0)) == 0:
                points.append((x0, y0))
    return points


def singular_points(form: ProjectiveFoliation) -> list[ProjectivePoint]:
    """All singular points with rational coordinates, in sorted order.

    By the Euler relation two vanishing coefficients force the third, so the
    search solves A = B = 0 in the chart z = 1, then A = C = 0 on the line
    z = 0, and finally tests the single remaining point [1 : 0 : 0].
    """
    points = []
    affine_a = dehomogenize(form.A, 2)
    affine_b = dehomogenize(form.B, 2)
    for x0, y0 in _affine_common_zeros(affine_a, affine_b):
        points.append(ProjectivePoint.of(x0, y0, 1))
    line_a = _restrict_to_infinity(form.A)
    line_c = _restrict_to_infinity(form.C)
    for x0 in _line_roots(line_a, line_c):
        points.append(ProjectivePoint.of(x0, 1, 0))
    origin = (Fraction(1), Fraction(0), Fraction(0))
    if form.B.evaluate(origin) == 0 and form.C.evaluate(origin) == 0:
        points.append(ProjectivePoint.of(1, 0, 0))
    return sorted(points, key=lambda pt: pt.coords)


def chart_germ(form: ProjectiveFoliation, point: ProjectivePoint) -> FoliationGerm:
    """Local 1-form germ at the point, in its affine chart coordinates.

    Restricting to the chart kills the differential of the chart variable;
    the two surviving coefficients are dehomogenized and translated so the
    point sits at the origin.
    """
    x0, y0, z0 = point.coords
    if z0:
        p = dehomogenize(form.A, 2).shift((x0, y0))
        q = dehomogenize(form.B, 2).shift((x0, y0))
    elif y0:
        p = dehomogenize(form.A, 1).shift((x0, 0))
        q = dehomogenize(form.C, 1).shift((x0, 0))
    else:
        p = dehomogenize(form.B, 0)
        q = dehomogenize(form.C, 0)
    return FoliationGerm(p, q)


def chart_curve(curve: Poly, point: ProjectivePoint) -> CurveGerm:
    """Germ of a homogeneous curve at a point lying on it."""
    x0, y0, z0 = point.coords
    if z0:
        local = dehomogenize(curve, 2).shift((x0, y0))
    elif y0:
        local = dehomogenize(curve, 1).shift((x0, 0))
    else:
        local = dehomogenize(curve, 0)
    return CurveGerm(local)


@dataclass(frozen=True)
class MilnorSumCertificate:
    """Local Milnor numbers at chosen singular points of a foliation.

    Every singular point contributes at least 1 to the global count of
    ``degree**2 + degree + 1``, so ``total == expected`` proves that the
    points listed here are all the singular points there are; a positive
    deficit measures how much of the singular scheme is unaccounted for.
    """

    entries: tuple[tuple[ProjectivePoint, int], ...]
    total: int
    expected: int

    @property
    def certified(self) -> bool:
        return self.total == self.expected

    @property
    def deficit(self) -> int:
        return self.expected - self.total


def milnor_sum_certificate(
    form: ProjectiveFoliation,
    points: list[ProjectivePoint] | None = None,
) -> MilnorSumCertificate:
    """Certify a singular-point list through the global Milnor count.

    With ``points=None`` the rational singular points are located by
    elimination; a supplied list is instead checked pointwise (each point
    must be singular, repeats are rejected) so that a caller-asserted locus
    can be certified complete by the same budget.
    """
    if points is None:
        points = singular_points(form)
    else:
        points = sorted(points, key=lambda pt: pt.coords)
        if len({pt.coords for pt in points}) != len(points):
            raise ValueError("singular points must be pairwise distinct")
    entries = []
    for point in points:
        germ = chart_germ(form, point)
        if not germ.is_singular:
            raise ValueError(f"{point} is not a singular point")
        entries.append((point, milnor_foliation(germ)))
    total = sum(mu for _, mu in entries)
    d = form.degree
    return MilnorSumCertificate(tuple(entries), total, d * d + d + 1)


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def check_form(
    A: Poly,
    B: Poly,
    C: Poly,
    curve: Poly | None = None,
    points: list[ProjectivePoint] | None = None,
) -> CheckReport:
    """Validation report for a would-be projective 1-form.

    Fails (rather than raising) on a broken Euler relation or a common
    factor, recording the obstruction; on success the report carries the
    degree, the singular points with their Milnor numbers, and the
    completeness certificate.  A supplied curve must be invariant, and a
    supplied point list must exhaust the Milnor budget, for the check to
    pass; with located points an uncertified budget is only noted, since
    irrational singular points are no fault of the form.
    """
    name = "projective-validate"
    try:
        form = validate_form(A, B, C)
    except EulerRelationError as exc:
        return CheckReport(
            name, FAIL, {"euler_residual": str(exc.residual)}, [str(exc)]
        )
    except ValueError as exc:
        return CheckReport(name, FAIL, {"reason": str(exc)}, [str(exc)])
    cert = milnor_sum_certificate(form, points)
    data = {
        "degree": form.degree,
        "points_supplied": points is not None,
        "singular_points": [
            {"point": str(pt), "mu": mu} for pt, mu in cert.entries
        ],
        "milnor_sum": cert.total,
        "milnor_expected": cert.expected,
        "milnor_deficit": cert.deficit,
        "milnor_certified": cert.certified,
    }
    notes = []
    verdict = PASS
    if not cert.certified:
        if points is not None:
            verdict = FAIL
            notes.append(
                f"the supplied singular points leave a Milnor-number "
                f"deficit of {cert.deficit}"
            )
        else:
            notes.append(
                "some singular points have irrational coordinates; "
                "the list covers only the rational ones"
            )
    if curve is not None:
        invariant = is_invariant_curve(form, curve)
        data["curve_invariant"] = invariant
        if not invariant:
            verdict = FAIL
            notes.append("the supplied curve is not invariant")
    return CheckReport(name, verdict, data, notes)


def check_global_bound(
    form: ProjectiveFoliation,
    curve: Poly,
    points: list[ProjectivePoint] | None = None,
) -> CheckReport:
    """Global Tjurina bound for a reduced invariant algebraic curve.

    Writing d for the foliation degree and n for the curve degree, the sum
    of GSV indices over the singular points on the curve equals
    (d + 2) n - n**2, and the total Tjurina number of the curve is bounded
    below by ceil((d**2 + d + 1 - 2 * sum GSV) / 2); the closed GSV form
    gives the equivalent bound ceil((d**2 + d + 1 - 2 (d+2) n + 2 n**2)/2).

    Hypotheses checked per point: every singular point of the foliation
    lies on the curve and is of second type for the curve germ there (zero
    tangency excess, with the curve germ as the zero divisor; pole parts
    are not synthesized, so dicritical points surface as violations).  The
    bound is still evaluated when hypotheses fail, but the verdict is then
    "not-applicable".  The Tjurina total is trustworthy because a reduced
    invariant curve is smooth wherever the foliation is regular, so its
    singular points all appear in the certified list.
    """
    name = "projective-global"
    if not is_squarefree(curve):
        raise ValueError("the global bound concerns reduced curves")
    if not is_invariant_curve(form, curve):
        raise ValueError("the curve is not invariant for the foliation")
    cert = milnor_sum_certificate(form, points)
    d = form.degree
    n = curve.total_degree()
    data = {
        "degree": d,
        "curve_degree": n,
        "milnor_sum": cert.total,
        "milnor_expected": cert.expected,
    }
    if not cert.certified:
        return CheckReport(
            name,
            NOT_APPLICABLE,
            data,
            ["could not certify the full singular locus over the rationals"],
        )
    gsv_sum = 0
    tau_sum = 0
    rows = []
    violations = []
    for point, mu in cert.entries:
        row = {"point": str(point), "mu": mu}
        on_curve = curve.evaluate(point.coords) == 0
        row["on_curve"] = on_curve
        if on_curve:
            germ = chart_germ(form, point)
            local_curve = chart_curve(curve, point)
            row["gsv"] = gsv_index(germ, local_curve)
            row["tau"] = tjurina_curve(local_curve)
            gsv_sum += row["gsv"]
            tau_sum += row["tau"]
            try:
                xi = tangency_excess(germ, BalancedEquation(local_curve))
            except ValueError as exc:
                violations.append(f"at {point}: {exc}")
            else:
                row["xi"] = xi
                if xi != 0:
                    violations.append(
                        f"{point} is not second type for the curve germ "
                        f"(tangency excess {xi})"
                    )
        else:
            violations.append(f"singular point {point} does not lie on the curve")
        rows.append(row)
    gsv_closed = (d + 2) * n - n * n
    bound = ceil_div(d * d + d + 1 - 2 * gsv_sum, 2)
    bound_closed = ceil_div(d * d + d + 1 - 2 * (d + 2) * n + 2 * n * n, 2)
    data.update(
        {
            "points": rows,
            "gsv_sum": gsv_sum,
            "gsv_closed_form": gsv_closed,
            "tau_sum": tau_sum,
            "lower_bound": bound,
            "lower_bound_closed_form": bound_closed,
        }
    )
    notes = ["local zero divisors are the curve germs; balanced poles are user-asserted"]
    if violations:
        notes.extend(violations)
        notes.append("hypotheses not met; the bound was evaluated observationally")
        return CheckReport(name, NOT_APPLICABLE, data, notes)
    ok = gsv_sum == gsv_closed and bound <= tau_sum and bound_closed <= tau_sum
    return CheckReport(name, PASS if ok else FAIL, data, notes)
