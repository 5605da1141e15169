"""The Pinchuk map and the gradient-product test.

The map is built from the chain t = xy - 1, s = 1 + xt, h = ts,
f = s^2 (t^2 + y).  Its Jacobian determinant is positive on the plane, so
for each component p the system lead(p) * lead(dp/dx) = lead(p) * lead(dp/dy) = 0
must have a nonzero real solution.  Here those systems are monomials and
the coordinate axes solve them.
"""

from polyfiber import build_pinchuk, check_thm18, leading_form, render, total_degree
from polyfiber.systems import build_thm18_system

m = build_pinchuk()
for name in ("t", "s", "h", "f", "p", "q"):
    poly = getattr(m, name)
    print(f"deg {name} = {total_degree(poly):2d}   leading form {render(leading_form(poly))}")

print()
for j, name in enumerate("pq"):
    forms = build_thm18_system(m.map, j).forms
    print(f"products for {name}:", ", ".join(render(g) for g in forms))

cert = check_thm18(m.map)
print()
print("verdict:", cert.verdict.value, "witness:", tuple(str(c) for c in cert.witness))
print("Jacobian sign status:", cert.evidence.det_status.kind.value,
      "(positivity is true but not provable by the monomial pattern test)")
