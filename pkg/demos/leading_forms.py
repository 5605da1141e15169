"""Surjectivity from leading forms.

A map whose component degrees multiply to an odd number is onto as soon as
its top-degree parts vanish together only at the origin.  We check a few
maps, then confirm the claim by solving fibers at random targets.
"""

import random
from fractions import Fraction

from polyfiber import analyze, parse_poly, ProblemSpec, PolyMap, solve_fiber
from polyfiber.certify import first_surjective
from polyfiber.report import certificate_text

maps = {
    "cubic shear": ("x^3 + 2*y^3 + x", "3*x - y + 1"),
    "square in x": ("x^2", "y"),
    "mixed odd powers": ("2*x^5 - y^5 + x*y", "x^3 + 3*y^3 - 1"),
}

for name, comps in maps.items():
    f = PolyMap([parse_poly(c, 2) for c in comps])
    certs = analyze(ProblemSpec(2, f))
    winner = first_surjective(certs)
    print(f"== {name}: {comps}")
    print(certificate_text(certs[0]))
    print("onto:", winner.via if winner else "not certified")

    if winner:
        rng = random.Random(0)
        counts = []
        for _ in range(5):
            target = (Fraction(rng.randint(-50, 50), 7), Fraction(rng.randint(-50, 50), 3))
            counts.append(solve_fiber(f, target).count)
        print("real preimages at five random targets:", counts)
    print()
