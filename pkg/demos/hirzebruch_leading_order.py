"""
A non-Fano surface
==================

The Hirzebruch surface F2 is not Fano, so only the leading order of the
quantum ring is known. Normal forms then carry Novikov series coefficients,
which are expanded up to a chosen T-order.
"""

from orbiqh.documents import bundled, load_document, realize
from orbiqh.groebner import NonNovikovCoefficient
from orbiqh.novikov import render
from orbiqh.parser import parse
from orbiqh.presentation import quantum_presentation
from orbiqh.relations import is_fano

doc = realize(load_document(bundled("hirzebruch2")))
fan, lam = doc.fan, doc.lambdas
print("Fano:", is_fano(fan), is_fano(fan, "b"))

qp = quantum_presentation(fan, lam)
print(qp.pretty())

g = qp.groebner()
x = parse("X3^2", fan.ngens)
try:
    g.normal_form(x)
except NonNovikovCoefficient as e:
    print("exact normal form unavailable:", e)

for prec in (3, 5, 7):
    print(f"X3^2 mod T^{prec}:", render(g.normal_form(x, prec)))
