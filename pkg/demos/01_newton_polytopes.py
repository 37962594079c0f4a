"""Newton polyhedra of monomial ideals: facets, valuations, volumes.

Run:  python3 demos/01_newton_polytopes.py [outdir]
"""

import sys
from pathlib import Path

from residuum import complement_volume, facet_det, newton_polyhedron
from residuum.problem import parse
from residuum.svgplot import render_svg

outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(".")

print("The generating exponents of a cofinite monomial ideal span a")
print("polyhedron: their convex hull fattened by the positive orthant.")
print("Its compact facets carry all the interesting structure.\n")

points = [(5, 0), (4, 1), (2, 2), (0, 3)]
poly = newton_polyhedron(points, 2)
print(f"points: {points}")
for f in poly.facets:
    print(
        f"  facet: inward normal {f.normal}, level {f.level}, "
        f"touching generators {[i + 1 for i in f.on_facet]}"
    )
print("Each facet normal is a monomial valuation: here ord(z1^a z2^b) = 3a + 5b.")
print("The valuation of the whole ideal is the facet level, 15.\n")

print("Scaling the generators changes the facet structure. With weights")
print("(2,2,1,3) the scaled set has two compact facets, hence two valuations:")
scaled = [(10, 0), (8, 2), (2, 2), (0, 9)]
poly_q = newton_polyhedron(scaled, 2)
for f in poly_q.facets:
    print(f"  normal {f.normal}, level {f.level}")
print()

print("The normalized volume between the orthant and the polyhedron is the")
print("colength-style multiplicity of the ideal; it splits facet by facet:")
for pts in (points, scaled, [(2, 0), (1, 1), (0, 2)]):
    poly = newton_polyhedron(pts, 2)
    parts = [facet_det(poly, f) for f in poly.facets]
    print(f"  {pts}: {' + '.join(map(str, parts))} = {complement_volume(poly)}")
print()

problem = parse("ex41")
for name in ("p", "q", "r"):
    path = outdir / f"newton_ex41_{name}.svg"
    render_svg(problem, name, path)
    print(f"wrote {path}")
