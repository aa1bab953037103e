"""
From a labeled polytope to the quantum ring of CP(1,1,2)
========================================================

Start from the triangle with normals (-1,0), (0,-1), (1,2), build its normal
stacky fan, and walk through box elements, primitive collections, relations
and Seidel compositions.
"""

from orbiqh.novikov import render
from orbiqh.polytope import LabeledPolytope
from orbiqh.presentation import quantum_presentation
from orbiqh.relations import primitive_collections, qsr_relations
from orbiqh.seidel import seidel_elements, verify_composition

poly = LabeledPolytope([(-1, 0), (0, -1), (1, 2)], [1, 1, 1], [2, 1, 2])
for v in poly.vertices():
    print("vertex", [str(x) for x in v.point], "on facets", [k + 1 for k in sorted(v.active)])

fan, lam = poly.to_stacky_fan()

# one twisted sector: (0,1) = (b1 + b3)/2, of age 1
for e in fan.twisted_sectors():
    print("box", e.vector, "age", e.age, "order", e.order)
print("gen", [g.vector for g in fan.extended[fan.nrays:]])

# primitive collections, 1-based
print("GP", [[k + 1 for k in I] for I in primitive_collections(fan)])
for r in qsr_relations(fan, lam):
    print("  C =", r.C, " Omega =", r.omega, " ", render(r.polynomial(fan.ngens)))

qp = quantum_presentation(fan, lam)
print(qp.pretty())

# Seidel elements and the identity S(y2) * S(y4) = 1
for s in seidel_elements(fan, lam):
    print(f"S_{s.index + 1}: qshift {s.qshift}, tshift {s.tshift}")
print("y2 + y4 = 0 composes to 1:", verify_composition(fan, lam, [(0, -1), (0, 1)]))
