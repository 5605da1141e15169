"""Mixing components with a polynomial matrix.

Row i of the combined system is sum_j p_j^alpha_j * g_ij.  When det(g) is
nonconstant the certificate has to know it never vanishes: a constant or
sum-of-even-monomials determinant is proved, a real zero disqualifies,
and anything else can only be assumed.
"""

from polyfiber import ProblemSpec, PolyMap, certify_thm12a, parse_poly
from polyfiber.report import certificate_text


def P(s):
    return parse_poly(s, 2)


f = PolyMap([P("x^3 - y"), P("y^3 + x")])
cases = {
    "even-monomial determinant": [[P("1 + x^2"), P("0")], [P("0"), P("1 + y^4")]],
    "determinant with a real zero": [[P("x^2 - 1"), P("0")], [P("0"), P("1")]],
    "positive but unproved": [[P("1"), P("0")], [P("0"), P("1 + x^2 - x*y + y^2")]],
}

for name, g in cases.items():
    print(f"== {name}")
    print(certificate_text(certify_thm12a(ProblemSpec(2, f, gmatrix=g))))
    print()

print("== positive but unproved, with the nonvanishing assumption")
spec = ProblemSpec(2, f, gmatrix=cases["positive but unproved"], assume_det_nonvanishing=True)
print(certificate_text(certify_thm12a(spec)))
