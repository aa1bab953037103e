"""Chen-Ruan and quantum ring presentations and their serialization."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import lcm

from .fan import StackyFan
from .groebner import GroebnerBasis
from .novikov import NovikovPolynomial, format_rational, from_json, render, to_json
from .relations import (NotKaehler, PLFunction, cone_ideal, is_fano, linear_relations,
                        primitive_collections, qsr_relations)
from .seidel import HOT

CLASSICAL = "Classical"
QUANTUM_FANO = "QuantumFano"
QUANTUM_LEADING = "QuantumLeadingOrder"

CLOSURE_NOTE = "ideal is taken up to closure in the T-adic valuation; not computed"


@dataclass(frozen=True)
class RingPresentation:
    mode: str
    degrees: tuple[Fraction, ...]
    linear: tuple[NovikovPolynomial, ...]
    qsr: tuple[NovikovPolynomial, ...]
    cone: tuple[NovikovPolynomial, ...]
    novikov_a: int = 1
    annotations: tuple[str, ...] = ()

    @property
    def nvars(self) -> int:
        return len(self.degrees)

    @property
    def generators(self) -> list[NovikovPolynomial]:
        return [*self.linear, *self.qsr, *self.cone]

    def groebner(self) -> GroebnerBasis:
        return GroebnerBasis(self.generators, self.nvars)

    def to_json(self) -> dict:
        ages = self.degrees
        return {
            "mode": self.mode,
            "generators": [{"name": f"X{k + 1}", "degree": format_rational(d)}
                           for k, d in enumerate(self.degrees)],
            "ideal": {
                "linear": [to_json(p, ages) for p in self.linear],
                "qsr": [to_json(p, ages) for p in self.qsr],
                "cone": [to_json(p, ages) for p in self.cone],
            },
            "novikov_a": self.novikov_a,
            "annotations": list(self.annotations),
        }

    @classmethod
    def from_json(cls, data: dict) -> "RingPresentation":
        degrees = tuple(Fraction(g["degree"]) for g in data["generators"])
        M = len(degrees)
        block = lambda name: tuple(from_json(p, M) for p in data["ideal"][name])
        return cls(data["mode"], degrees, block("linear"), block("qsr"), block("cone"),
                   int(data.get("novikov_a", 1)), tuple(data.get("annotations", ())))

    def pretty(self) -> str:
        ages = self.degrees
        lines = [f"mode: {self.mode}",
                 "generators: " + ", ".join(f"X{k + 1} (deg {format_rational(d)})"
                                            for k, d in enumerate(self.degrees))]
        if self.mode != CLASSICAL:
            lines.append(f"novikov a: {self.novikov_a}")
        for name, polys in (("linear", self.linear), ("qsr" if self.mode != CLASSICAL else "sr", self.qsr),
                            ("cone", self.cone)):
            lines.append(f"{name}:")
            lines.extend("  " + render(p, ages) for p in polys)
            if not polys:
                lines.append("  (none)")
        for a in self.annotations:
            lines.append(f"note: {a}")
        return "\n".join(lines)


def chen_ruan_presentation(fan: StackyFan) -> RingPresentation:
    """Polynomial presentation of the Chen-Ruan cohomology ring."""
    M = fan.ngens
    sr = tuple(NovikovPolynomial.from_exponents(M, {k: 1 for k in I}) for I in primitive_collections(fan))
    return RingPresentation(CLASSICAL, fan.ages, tuple(linear_relations(fan)), sr, tuple(cone_ideal(fan)))


def quantum_presentation(fan: StackyFan, lambdas, criterion: str = "y") -> RingPresentation:
    """Quantum presentation; exact for Fano fans, leading order otherwise."""
    if not PLFunction(fan, lambdas).is_strictly_convex():
        raise NotKaehler("support function of lambda is not strictly convex")
    M = fan.ngens
    rels = qsr_relations(fan, lambdas)
    fano = is_fano(fan, criterion)
    a = 1
    for r in rels:
        a = lcm(a, r.C.denominator)
    for g in fan.extended:
        a = lcm(a, g.age.denominator)
    notes = [CLOSURE_NOTE]
    if not fano:
        notes += [f"linear[{i + 1}] {HOT}" for i in range(fan.dim)]
        notes += [f"qsr[{i + 1}] {HOT}" for i in range(len(rels))]
    return RingPresentation(
        QUANTUM_FANO if fano else QUANTUM_LEADING,
        fan.ages,
        tuple(linear_relations(fan)),
        tuple(r.polynomial(M) for r in rels),
        tuple(cone_ideal(fan)),
        novikov_a=a,
        annotations=tuple(notes),
    )


def classical_limit(qp: RingPresentation) -> RingPresentation:
    """Drop every q/T-carrying term."""
    strip = lambda ps: tuple(p.classical_part() for p in ps)
    return RingPresentation(CLASSICAL, qp.degrees, strip(qp.linear), strip(qp.qsr), strip(qp.cone))
