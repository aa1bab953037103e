"""
Weighted projective lines CP(a, b)
==================================

The segment with labels a and b. Its quantum ring has one linear relation and
one quantum Stanley-Reisner relation, and the quotient has rank a + b.
"""

from fractions import Fraction

from orbiqh.documents import cp_a_b, load_document, realize
from orbiqh.novikov import render
from orbiqh.parser import parse
from orbiqh.presentation import chen_ruan_presentation, quantum_presentation

for a, b in [(1, 2), (2, 3), (3, 5)]:
    doc = realize(load_document(cp_a_b(a, b, lambdas=(1, 2))))
    fan, lam = doc.fan, doc.lambdas

    # extended generators: the two rays plus the irreducible box points
    print(f"CP({a},{b}): ages", [str(x) for x in fan.ages])

    qp = quantum_presentation(fan, lam)
    for p in qp.generators:
        print("   ", render(p, qp.degrees))

    # rank agrees with the classical Chen-Ruan ring
    g = qp.groebner()
    cr = chen_ruan_presentation(fan).groebner()
    print("    rank", g.quotient_rank(), "classical", cr.quotient_rank(),
          "degrees", [str(d) for d in cr.quotient_degrees(fan.ages)])

    # X1*X2 reduces to q^(1/a+1/b) T^Omega
    print("    X1*X2 ->", render(g.normal_form(parse("X1*X2", 2))),
          " 1/a + 1/b =", Fraction(1, a) + Fraction(1, b))
