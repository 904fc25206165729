"""
Counting singular points in the projective plane
================================================

A degree-d foliation of the projective plane has Milnor numbers summing
to d^2 + d + 1 over its singular points.  That turns a local invariant
into a completeness certificate: find points, add up their mu's, and
the total says whether any point is still hiding.  The script runs the
certificate on two degree-1 examples where everything is rational, then
on a pencil whose remaining singular points have irrational coordinates
-- the deficit in the budget reports exactly how much is missing.
"""

from fractions import Fraction

from folgerm import (
    chart_germ,
    check_global_bound,
    milnor_foliation,
    milnor_sum_certificate,
    parse_poly,
    singular_points,
    validate_form,
)


def H(text, params=None):
    return parse_poly(text, 3, params)


# --- log form with the coordinate triangle invariant -------------------
lam = {"lam": Fraction(2)}
form = validate_form(H("y*z"), H("lam*x*z", lam), H("-(lam+1)*x*y", lam))
print("degree:", form.degree, " budget:", form.degree**2 + form.degree + 1)
for point in singular_points(form):
    germ = chart_germ(form, point)
    print("    %-12s mu = %d" % (point, milnor_foliation(germ)))

report = check_global_bound(form, H("x*y*z"))
print("[projective-global] verdict:", report.verdict)
print("    gsv_sum = %s  tau_sum = %s  lower_bound = %s"
      % (report.data["gsv_sum"], report.data["tau_sum"],
         report.data["lower_bound"]))

# --- a pencil of lines: one singular point carries the whole budget ----
pencil = validate_form(H("y-z"), H("z-x"), H("x-y"))
cert = milnor_sum_certificate(pencil)
print("\npencil of lines: total %d of %d, certified %s"
      % (cert.total, cert.expected, cert.certified))
for point, mu in cert.entries:
    print("    %-12s mu = %d" % (point, mu))

# --- an irrational locus leaves an honest deficit ----------------------
# G dF - F dG for F = x^2 - 2z^2, G = yz: the fibre F = 0 consists of
# two lines with slope sqrt(2), and their meeting points with G = 0
# cannot be certified over the rationals.
F, G = H("x^2-2*z^2"), H("y*z")
A = G * F.diff(0) - F * G.diff(0)
B = G * F.diff(1) - F * G.diff(1)
C = G * F.diff(2) - F * G.diff(2)
irr = validate_form(A, B, C)
cert = milnor_sum_certificate(irr)
print("\nirrational pencil: degree %d, budget %d" % (irr.degree, cert.expected))
for point, mu in cert.entries:
    print("    %-12s mu = %d" % (point, mu))
print("total %d, deficit %d, certified %s"
      % (cert.total, cert.deficit, cert.certified))
