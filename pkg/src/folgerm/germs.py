"""Singular foliation germs in the plane and their local invariants.

A foliation germ is the kernel of ``omega = P dx + Q dy`` with coprime
polynomial coefficients; a curve germ is a polynomial vanishing at the
origin.  A balanced equation pairs an effective (zero) curve with an
optional pole curve; every branch must be invariant, which for squarefree
equations is certified by a single wedge-product divisibility test.

All dimension counts go through standard bases of the local ring; the
intersection number, Milnor and Tjurina numbers are quotient dimensions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .localalg import quotient_dim, standard_basis
from .polynomials import Poly, divides, is_squarefree, poly_gcd

DEFAULT_PROBES: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2),
)


def probe_pencil(count: int) -> tuple[tuple[int, int], ...]:
    """First ``count`` coprime probe directions, enumerated by height.

    Pairs (a, b) with a, b >= 1 and gcd 1, ordered by a + b, then
    max(a, b), then a; the first seven are exactly ``DEFAULT_PROBES``.
    """
    if count < 1:
        raise ValueError("need at least one probe")
    probes: list[tuple[int, int]] = []
    total = 2
    while len(probes) < count:
        layer = [
            (a, total - a)
            for a in range(1, total)
            if math.gcd(a, total - a) == 1
        ]
        layer.sort(key=lambda pair: (max(pair), pair[0]))
        probes.extend(layer)
        total += 1
    return tuple(probes[:count])


class NonIsolatedSingularityError(ValueError):
    """A quotient expected to be finite-dimensional is not."""


class InvalidBalancedEquationError(ValueError):
    """The supplied divisor fails coprimality, reducedness, or invariance."""


@dataclass(frozen=True)
class FoliationGerm:
    """Kernel of P dx + Q dy at the origin; P and Q share no factor."""

    P: Poly
    Q: Poly

    def __post_init__(self):
        if self.P.nvars != 2 or self.Q.nvars != 2:
            raise ValueError("foliation germs live in two variables")
        if self.P.is_zero and self.Q.is_zero:
            raise ValueError("both components vanish identically")
        if not self.P.is_zero and not self.Q.is_zero:
            if poly_gcd(self.P, self.Q).total_degree() > 0:
                raise ValueError("components share a common factor")

    @property
    def is_singular(self) -> bool:
        return (
            self.P.constant_term() == 0 and self.Q.constant_term() == 0
        )

    def components(self) -> tuple[Poly, Poly]:
        return (self.P, self.Q)

    def __str__(self) -> str:
        return f"({self.P}) dx + ({self.Q}) dy"


@dataclass(frozen=True)
class CurveGerm:
    """A nonzero polynomial vanishing at the origin."""

    poly: Poly

    def __post_init__(self):
        if self.poly.is_zero:
            raise ValueError("the zero polynomial does not define a curve")
        if self.poly.constant_term() != 0:
            raise ValueError("curve germ must pass through the origin")

    @property
    def order(self) -> int:
        return self.poly.order()

    @property
    def is_reduced(self) -> bool:
        return is_squarefree(self.poly)

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class BalancedEquation:
    """Zero and pole parts of a balanced equation of separatrices."""

    zero: CurveGerm
    pole: CurveGerm | None = None

    @property
    def signed_multiplicity(self) -> int:
        """order(zero) - order(pole); the empty pole contributes 0."""
        pole = self.pole.order if self.pole is not None else 0
        return self.zero.order - pole


def multiplicity(f: FoliationGerm) -> int:
    """Algebraic multiplicity: minimal order among the two components."""
    orders = [c.order() for c in f.components() if not c.is_zero]
    return min(orders)


def invariance_test(f: FoliationGerm, curve: CurveGerm) -> bool:
    """Whether the wedge of omega with d(curve) is divisible by the curve."""
    g = curve.poly
    wedge = f.P * g.diff(1) - f.Q * g.diff(0)
    if wedge.is_zero:
        return True
    return divides(g, wedge)


def validate_balanced(f: FoliationGerm, b: BalancedEquation,
                      require_reduced: bool = True) -> None:
    """Raise InvalidBalancedEquationError unless b is usable for f."""
    parts = [("zero", b.zero)] + ([("pole", b.pole)] if b.pole is not None else [])
    if b.pole is not None:
        if poly_gcd(b.zero.poly, b.pole.poly).total_degree() > 0:
            raise InvalidBalancedEquationError("zero and pole parts share a factor")
    for label, part in parts:
        if require_reduced and not part.is_reduced:
            raise InvalidBalancedEquationError(f"{label} divisor is not squarefree")
        if not invariance_test(f, part):
            raise InvalidBalancedEquationError(
                f"{label} divisor {part.poly} is not invariant"
            )


def _finite_quotient(gens: Sequence[Poly], what: str) -> int:
    sb = standard_basis(gens)
    dim = quotient_dim(sb)
    if dim is None:
        raise NonIsolatedSingularityError(f"{what} is infinite")
    return dim


def milnor_foliation(f: FoliationGerm) -> int:
    """dim of the local ring modulo (P, Q)."""
    return _finite_quotient([f.P, f.Q], "the Milnor number of the foliation")


def milnor_curve(c: CurveGerm) -> int:
    """dim modulo the Jacobian ideal of the curve."""
    g = c.poly
    return _finite_quotient([g.diff(0), g.diff(1)], "the Milnor number of the curve")


def tjurina_curve(c: CurveGerm) -> int:
    """dim modulo (curve, its partials)."""
    g = c.poly
    return _finite_quotient(
        [g, g.diff(0), g.diff(1)], "the Tjurina number of the curve"
    )


def tjurina_foliation(f: FoliationGerm, c: CurveGerm) -> int:
    """dim modulo (curve, P, Q)."""
    return _finite_quotient(
        [c.poly, f.P, f.Q], "the Tjurina number of the pair"
    )


def intersection_multiplicity(f: Poly, g: Poly) -> int:
    """dim of the local ring modulo (f, g) for coprime germs at the origin."""
    if f.is_zero or g.is_zero:
        raise ValueError("intersection with the zero polynomial")
    if f.constant_term() != 0 or g.constant_term() != 0:
        raise ValueError("both curves must pass through the origin")
    if poly_gcd(f, g).total_degree() > 0:
        raise ValueError("intersection number of non-coprime curves is infinite")
    return _finite_quotient([f, g], "the intersection number")


@dataclass(frozen=True)
class PolarCertificate:
    """Chosen polar with its per-probe invariant table."""

    polar: CurveGerm
    probe: tuple[int, int]
    table: tuple[dict, ...]
    certified: bool


def generic_polar(
    f: FoliationGerm,
    probes: Iterable[tuple[int, int]] = DEFAULT_PROBES,
    against: Sequence[CurveGerm] = (),
) -> PolarCertificate:
    """Pick a polar a*P + b*Q by probing a fixed rational pencil.

    Every probe records the order of its polar and its intersection numbers
    with the supplied curves; the probe with the smallest record wins, and
    genericity is certified when at least two probes attain that minimum.
    """
    probes = tuple(probes)
    if not probes:
        raise ValueError("need at least one probe")
    rows = []
    scored = []
    for a, b in probes:
        candidate = f.P * a + f.Q * b
        row: dict = {"probe": (a, b)}
        if candidate.is_zero or candidate.constant_term() != 0:
            row["degenerate"] = True
            rows.append(row)
            scored.append(((float("inf"),), len(scored)))
            continue
        score: list = [candidate.order()]
        row["order"] = candidate.order()
        intersections = []
        degenerate = False
        for curve in against:
            try:
                value = intersection_multiplicity(candidate, curve.poly)
            except ValueError:
                value = None
                degenerate = True
            intersections.append(value)
        row["intersections"] = tuple(intersections)
        rows.append(row)
        if degenerate:
            scored.append(((float("inf"),), len(scored)))
        else:
            scored.append((tuple(score + intersections), len(scored)))
    best_score, best_index = min(scored, key=lambda item: (item[0], item[1]))
    if best_score[0] == float("inf"):
        raise ValueError("every probe was degenerate")
    count = sum(1 for s, _ in scored if s == best_score)
    a, b = probes[best_index]
    return PolarCertificate(
        polar=CurveGerm(f.P * a + f.Q * b),
        probe=(a, b),
        table=tuple(rows),
        certified=count >= 2,
    )


def excess_polar(f: FoliationGerm, b: BalancedEquation,
                 polar: CurveGerm | None = None) -> int:
    """Polar excess: i(polar, zero) + i(zero, pole) - mu(zero) - nu(zero) + 1.

    Vanishes exactly on generalized curves.
    """
    if polar is None:
        against = [b.zero] + ([b.pole] if b.pole is not None else [])
        polar = generic_polar(f, against=against).polar
    zero = b.zero.poly
    total = intersection_multiplicity(polar.poly, zero)
    if b.pole is not None:
        total += intersection_multiplicity(zero, b.pole.poly)
    return total - milnor_curve(b.zero) - b.zero.order + 1


def tangency_excess(f: FoliationGerm, b: BalancedEquation) -> int:
    """Excess of the multiplicity over the balanced-divisor prediction.

    nu(F) - (nu(zero) - nu(pole)) + 1; zero exactly for second-type germs.
    """
    validate_balanced(f, b)
    return multiplicity(f) - b.signed_multiplicity + 1


def is_second_type(f: FoliationGerm, b: BalancedEquation) -> bool:
    return tangency_excess(f, b) == 0


def gsv_index(f: FoliationGerm, c: CurveGerm) -> int:
    """Tjurina of the pair minus Tjurina of the curve."""
    return tjurina_foliation(f, c) - tjurina_curve(c)


def is_semihomogeneous(c: CurveGerm) -> bool:
    """Whether the lowest homogeneous part is squarefree."""
    return is_squarefree(c.poly.lowest_form())
