"""
A first session: invariants of the radial germ
==============================================

The radial vector field x d/dx + y d/dy is dual to the 1-form
-y dx + x dy.  Every line through the origin is invariant, so there is
plenty of room to pick a balanced equation: three lines as the zero
divisor, one more as the pole.  This script walks through every number
the package attaches to that data and checks the three inequalities by
hand before asking the bundled checkers.
"""

from folgerm import (
    BalancedEquation,
    CurveGerm,
    FoliationGerm,
    check_briancon_skoda,
    check_cota,
    check_liu,
    generic_polar,
    intersection_multiplicity,
    milnor_foliation,
    multiplicity,
    parse_poly,
    tangency_excess,
    tjurina_foliation,
)


def P(text):
    return parse_poly(text, 2)


germ = FoliationGerm(P("-y"), P("x"))
zero = CurveGerm(P("x*y*(x-y)"))
pole = CurveGerm(P("x+y"))
divisor = BalancedEquation(zero, pole)

print("germ:            omega = (%s) dx + (%s) dy" % (germ.P, germ.Q))
print("zero divisor:    %s   (order %d)" % (zero, zero.order))
print("pole divisor:    %s        (order %d)" % (pole, pole.order))

# --- the basic counts -------------------------------------------------
# nu is the smallest order among the coefficients; mu the colength of the
# ideal they generate; tau the colength once the zero divisor joins in.
nu = multiplicity(germ)
mu = milnor_foliation(germ)
tau = tjurina_foliation(germ, zero)
print("\nnu  =", nu)
print("mu  =", mu)
print("tau =", tau)

# --- polar intersections ----------------------------------------------
# A generic polar curve a*P + b*Q meets the pole in nu(pole) + tangency
# points.  The certificate remembers which probe direction was generic.
cert = generic_polar(germ, against=[zero, pole])
print("\npolar curve:", cert.polar, " (probe %s:%s)" % cert.probe)
print("i(polar, pole) =", intersection_multiplicity(cert.polar.poly, pole.poly))
print("i(zero, pole)  =", intersection_multiplicity(zero.poly, pole.poly))
print("tangency excess xi =", tangency_excess(germ, divisor))

# --- the three checks -------------------------------------------------
for report in (
    check_briancon_skoda(germ, divisor),
    check_liu(germ, divisor),
    check_cota(germ, divisor),
):
    print("\n[%s] verdict: %s" % (report.name, report.verdict))
    for key, value in report.data.items():
        print("    %-22s %s" % (key, value))
