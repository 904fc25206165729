"""Point blow-ups and reduction of plane foliation germs.

A germ ``P dx + Q dy`` is pulled back under the quadratic map in two charts:

* chart 1, ``(x, y) = (x1, x1*y1)``: the form becomes
  ``(P + y1*Q) dx1 + (x1*Q) dy1`` with exceptional line ``x1 = 0``;
* chart 2, ``(x, y) = (x2*y2, y2)``: it becomes
  ``(y2*P) dx2 + (x2*P + Q) dy2`` with exceptional line ``y2 = 0``.

Both coefficient pairs share a power of the exceptional coordinate; dividing
it out gives the reduced transform.  The shared exponent ``m`` is either
``nu`` or ``nu + 1`` where ``nu`` is the multiplicity of the germ, and the
excess ``epsilon = m - nu`` is 1 exactly when the exceptional line is not
invariant (the dicritical case).

The reduction driver repeats blow-ups until every point of the total
transform is in one of the final positions: a nondegenerate singularity whose
eigenvalue ratio is not a positive rational, a saddle-node, a regular point
crossing a dicritical component transversally, or a clean corner.  Singular
points are located as rational roots of a one-variable polynomial along the
exceptional line; a root that is not rational cannot be carried further in
exact arithmetic and aborts the run with the offending residual factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly

MAX_BLOWUPS_DEFAULT = 24


class IrrationalSingularPointError(ValueError):
    """A point that must be blown up has no usable rational coordinates.

    ``certified`` is True when the residual factor provably has no rational
    root, and False when locating its roots exceeded the factoring budget.
    """

    def __init__(self, residual: Poly, certified: bool = True):
        self.residual = residual
        self.certified = certified
        if certified:
            detail = "singular point with irrational coordinate"
        else:
            detail = "could not certify rational coordinates within budget"
        super().__init__(f"{detail}; residual factor {residual}")


class BlowupLimitError(RuntimeError):
    """The blow-up budget ran out before the germ was reduced."""


def _order_in(p: Poly, var: int) -> int:
    return min(m[var] for m in p.terms)


def _div_power(p: Poly, var: int, k: int) -> Poly:
    if k == 0 or p.is_zero:
        return p
    terms = {}
    for mono, coeff in p.items():
        e = list(mono)
        e[var] -= k
        terms[tuple(e)] = coeff
    return Poly(p.nvars, terms)


def _common_order(a: Poly, b: Poly, var: int) -> int:
    orders = [_order_in(p, var) for p in (a, b) if not p.is_zero]
    return min(orders)


@dataclass(frozen=True)
class BlowupResult:
    """One quadratic blow-up at the origin, both charts reduced."""

    nu: int
    m: int
    epsilon: int
    dicritical: bool
    chart1: tuple[Poly, Poly]
    chart2: tuple[Poly, Poly]


def blow_up(P: Poly, Q: Poly) -> BlowupResult:
    """Transform the pair of a germ ``P dx + Q dy`` under one blow-up."""
    if P.nvars != 2 or Q.nvars != 2:
        raise ValueError("blow-up is defined for plane germs")
    if P.is_zero and Q.is_zero:
        raise ValueError("zero form")
    nu = min(p.order() for p in (P, Q) if not p.is_zero)
    x = Poly.variable(2, 0)
    y = Poly.variable(2, 1)

    Pc = P.substitute({0: x, 1: x * y})
    Qc = Q.substitute({0: x, 1: x * y})
    A1 = Pc + y * Qc
    B1 = x * Qc
    m1 = _common_order(A1, B1, 0)

    Pc = P.substitute({0: x * y, 1: y})
    Qc = Q.substitute({0: x * y, 1: y})
    A2 = y * Pc
    B2 = x * Pc + Qc
    m2 = _common_order(A2, B2, 1)

    assert m1 == m2, "exceptional multiplicity must agree between charts"
    epsilon = m1 - nu
    assert epsilon in (0, 1)
    return BlowupResult(
        nu=nu,
        m=m1,
        epsilon=epsilon,
        dicritical=epsilon == 1,
        chart1=(_div_power(A1, 0, m1), _div_power(B1, 0, m1)),
        chart2=(_div_power(A2, 1, m1), _div_power(B2, 1, m1)),
    )


# ---------------------------------------------------------------------------
# classification of a single point


@dataclass(frozen=True)
class PointClassification:
    kind: str  # "smooth" | "nondegenerate" | "saddle_node" | "non_simple"
    ratio: Fraction | None = None
    weak_direction: tuple[Fraction, Fraction] | None = None

    @property
    def simple(self) -> bool:
        return self.kind in ("nondegenerate", "saddle_node")


def _sqrt_exact(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def classify_point(P: Poly, Q: Poly) -> PointClassification:
    """Classify the dual vector field ``(-Q, P)`` at the origin.

    Nondegenerate points report the eigenvalue ratio when it is rational,
    normalised so the absolute value is at least 1.  A ratio that lies in the
    positive rationals (including a defective ratio-1 node) is not simple and
    forces another blow-up.
    """
    if P.constant_term() != 0 or Q.constant_term() != 0:
        return PointClassification("smooth")
    a = -Q.coefficient((1, 0))
    b = -Q.coefficient((0, 1))
    c = P.coefficient((1, 0))
    d = P.coefficient((0, 1))
    tr = a + d
    det = a * d - b * c
    if det == 0:
        if tr == 0:
            return PointClassification("non_simple")
        if (a, b) != (0, 0):
            v0, v1 = b, -a
        else:
            v0, v1 = d, -c
        if v0 != 0:
            weak = (Fraction(1), Fraction(v1, v0))
        else:
            weak = (Fraction(0), Fraction(1))
        return PointClassification("saddle_node", weak_direction=weak)
    # Ratios r of the two eigenvalues satisfy det*r^2 - (tr^2-2det)*r + det.
    bb = tr * tr - 2 * det
    root = _sqrt_exact(bb * bb - 4 * det * det)
    if root is None:
        return PointClassification("nondegenerate", ratio=None)
    r1 = (bb + root) / (2 * det)
    r2 = (bb - root) / (2 * det)
    if r1 > 0 or r2 > 0:
        return PointClassification("non_simple")
    return PointClassification("nondegenerate", ratio=min(r1, r2))


# ---------------------------------------------------------------------------
# rational roots along the exceptional line


_TRIAL_LIMIT = 200_000
_CANDIDATE_LIMIT = 4_000


class _RootBudgetError(Exception):
    """Coefficients grew past what trial division can factor quickly."""


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if i > _TRIAL_LIMIT:
            raise _RootBudgetError
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _restrict_to_line(p: Poly) -> list[Fraction]:
    """Coefficients of ``p(0, t)`` by power of ``t``."""
    q = p.substitute({0: Poly.zero(2)})
    coeffs = [Fraction(0)] * (q.degree_in(1) + 1)
    for mono, c in q.items():
        coeffs[mono[1]] += c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _horner(coeffs: list[Fraction], value: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * value + c
    return acc


def _deflate(coeffs: list[Fraction], root: Fraction) -> list[Fraction]:
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * root + coeffs[i]
        out[i - 1] = acc
    return out


def rational_roots(coeffs: list[Fraction]) -> tuple[list[Fraction], Poly, bool]:
    """All rational roots (each listed once), the residual, and a certificate.

    The residual is returned as a primitive polynomial in ``y``.  The final
    flag is True when the residual provably has no rational root; it is False
    when the root search ran out of factoring budget, in which case the
    residual may still contain rational roots that were not located.
    """
    work = list(coeffs)
    while len(work) > 1 and work[-1] == 0:
        work.pop()
    roots = []
    certified = True
    while len(work) > 1 and work[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        work.pop(0)
    if len(work) > 1:
        scale = math.lcm(*(c.denominator for c in work))
        ints = [int(c * scale) for c in work]
        g = math.gcd(*ints)
        ints = [c // g for c in ints]
        try:
            candidates = set()
            for p in _divisors(ints[0]):
                for q in _divisors(ints[-1]):
                    candidates.add(Fraction(p, q))
                    candidates.add(Fraction(-p, q))
            if len(candidates) > _CANDIDATE_LIMIT:
                raise _RootBudgetError
            for cand in sorted(candidates):
                while len(work) > 1 and _horner(work, cand) == 0:
                    if cand not in roots:
                        roots.append(cand)
                    work = _deflate(work, cand)
        except _RootBudgetError:
            certified = False
    residual = Poly(2, {(0, i): c for i, c in enumerate(work)})
    residual = residual.primitive()
    if len(work) <= 1:
        certified = True
    return sorted(roots), residual, certified


# ---------------------------------------------------------------------------
# the reduction driver


@dataclass(frozen=True)
class ExceptionalComponent:
    index: int
    dicritical: bool
    epsilon: int


@dataclass(frozen=True)
class ReducedSingularity:
    """A simple singular point of the fully reduced foliation.

    ``components`` are the indices of the exceptional components through the
    point (empty for the original germ when it is already simple, two at a
    corner).  ``weak_along_divisor`` flags a saddle-node whose weak
    separatrix lies inside the exceptional divisor.
    """

    components: tuple[int, ...]
    kind: str
    ratio: Fraction | None = None
    weak_along_divisor: bool = False


@dataclass
class ReductionResult:
    blowups: int
    components: list[ExceptionalComponent]
    singularities: list[ReducedSingularity]
    edges: tuple[tuple[int, int], ...]

    def valence(self, index: int) -> int:
        return sum(1 for e in self.edges if index in e)

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {c.index: [] for c in self.components}
        for i, j in self.edges:
            out[i].append(j)
            out[j].append(i)
        return {k: tuple(sorted(v)) for k, v in out.items()}

    @property
    def dicritical(self) -> bool:
        return any(c.dicritical for c in self.components)

    @property
    def has_saddle_node(self) -> bool:
        return any(s.kind == "saddle_node" for s in self.singularities)

    @property
    def has_tangent_saddle_node(self) -> bool:
        return any(s.weak_along_divisor for s in self.singularities)

    @property
    def generalized_curve(self) -> bool:
        """No saddle-nodes at all appear in the reduction."""
        return not self.has_saddle_node

    @property
    def second_type(self) -> bool:
        """No saddle-node has its weak separatrix inside the divisor."""
        return not self.has_tangent_saddle_node


class _Reduction:
    def __init__(self, max_blowups: int):
        self.max_blowups = max_blowups
        self.blowups = 0
        self.components: list[ExceptionalComponent] = []
        self.edges: set[tuple[int, int]] = set()
        self.singularities: list[ReducedSingularity] = []

    def _dicritical(self, index: int) -> bool:
        return self.components[index - 1].dicritical

    def process(self, P: Poly, Q: Poly, through: tuple[tuple[int, str], ...]):
        """Decide the fate of the germ (P, Q) at a point on ``through``."""
        singular = P.constant_term() == 0 and Q.constant_term() == 0
        dicritical = [c for c, _ in through if self._dicritical(c)]
        if len(dicritical) >= 2:
            return self.blow_up(P, Q, through)
        if dicritical:
            if singular:
                return self.blow_up(P, Q, through)
            axis = next(ax for c, ax in through if self._dicritical(c))
            # Tangency with the dicritical line: the velocity along its
            # conormal vanishes.
            tangent = (
                Q.constant_term() == 0 if axis == "x" else P.constant_term() == 0
            )
            if tangent:
                return self.blow_up(P, Q, through)
            return
        if not singular:
            return
        cls = classify_point(P, Q)
        if not cls.simple:
            return self.blow_up(P, Q, through)
        weak = False
        if cls.kind == "saddle_node":
            for _, axis in through:
                if axis == "x" and cls.weak_direction == (0, 1):
                    weak = True
                if axis == "y" and cls.weak_direction == (1, 0):
                    weak = True
        self.singularities.append(
            ReducedSingularity(
                components=tuple(sorted(c for c, _ in through)),
                kind=cls.kind,
                ratio=cls.ratio,
                weak_along_divisor=weak,
            )
        )

    def blow_up(self, P: Poly, Q: Poly, through: tuple[tuple[int, str], ...]):
        if self.blowups >= self.max_blowups:
            raise BlowupLimitError(
                f"not reduced after {self.max_blowups} blow-ups"
            )
        self.blowups += 1
        data = blow_up(P, Q)
        index = len(self.components) + 1
        self.components.append(
            ExceptionalComponent(index, data.dicritical, data.epsilon)
        )
        if len(through) == 2:
            # Blowing up a corner separates the two old components.
            old = tuple(sorted(c for c, _ in through))
            self.edges.discard(old)
        for c, _ in through:
            self.edges.add(tuple(sorted((c, index))))
        old_x = [c for c, ax in through if ax == "x"]
        old_y = [c for c, ax in through if ax == "y"]

        A1, B1 = data.chart1
        scan = B1 if data.dicritical else A1
        roots, residual, certified = rational_roots(_restrict_to_line(scan))
        if residual.total_degree() > 0:
            raise IrrationalSingularPointError(residual, certified)
        if old_y and Fraction(0) not in roots:
            roots = [Fraction(0)] + roots
        for t in roots:
            child = [(index, "x")]
            if t == 0 and old_y:
                child.append((old_y[0], "y"))
            self.process(
                A1.shift((0, t)), B1.shift((0, t)), tuple(child)
            )

        A2, B2 = data.chart2
        child = [(index, "y")]
        if old_x:
            child.append((old_x[0], "x"))
        self.process(A2, B2, tuple(child))


def reduce_germ(germ, max_blowups: int = MAX_BLOWUPS_DEFAULT) -> ReductionResult:
    """Resolve the germ by blow-ups until every point is in final position."""
    driver = _Reduction(max_blowups)
    driver.process(germ.P, germ.Q, ())
    return ReductionResult(
        blowups=driver.blowups,
        components=driver.components,
        singularities=driver.singularities,
        edges=tuple(sorted(driver.edges)),
    )


def h1_dimension(germ) -> int:
    """Dimension ``n(n-1)/2`` with ``n = nu - epsilon - 1`` after one blow-up."""
    data = blow_up(germ.P, germ.Q)
    n = data.nu - data.epsilon - 1
    if n <= 1:
        return 0
    return n * (n - 1) // 2


def dicritical_report(result: ReductionResult) -> list[dict]:
    """Valence and remaining contact budget of each dicritical component."""
    rows = []
    for comp in result.components:
        if not comp.dicritical:
            continue
        valence = result.valence(comp.index)
        rows.append(
            {"component": comp.index, "valence": valence, "budget": 2 - valence}
        )
    return rows
