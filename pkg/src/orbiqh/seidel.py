"""Seidel elements of the circle actions y_k and composition checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .fan import StackyFan
from .groebner import GroebnerBasis
from .novikov import NovikovPolynomial
from .relations import is_fano, weighted_height

HOT = "+ h.o.t.(T^0)"


class VectorsDoNotSumToZero(ValueError):
    pass


class NotFano(ValueError):
    pass


@dataclass(frozen=True)
class SeidelElement:
    """S_k = reduced * q^qshift * T^tshift (+ higher T-order terms unless exact)."""

    index: int
    reduced: NovikovPolynomial
    qshift: Fraction
    tshift: Fraction
    exact: bool

    @property
    def unreduced(self) -> NovikovPolynomial:
        return self.reduced.shift(self.qshift, self.tshift)

    @property
    def annotation(self) -> Optional[str]:
        return None if self.exact else HOT


def seidel_elements(fan: StackyFan, lambdas, criterion: str = "y") -> list[SeidelElement]:
    exact = is_fano(fan, criterion)
    M = fan.ngens
    return [
        SeidelElement(
            index=g.index,
            reduced=NovikovPolynomial.variable(g.index, M),
            qshift=-g.age,
            tshift=-weighted_height(fan, g.index, lambdas),
            exact=exact,
        )
        for g in fan.extended
    ]


def composition_exponents(fan: StackyFan, lambdas, indices: Sequence[int]) -> tuple[Fraction, Fraction]:
    """(C, Omega) for a zero-sum list of generators: the total q and T shift."""
    C = sum((fan.extended[k].age for k in indices), Fraction(0))
    omega = sum((weighted_height(fan, k, lambdas) for k in indices), Fraction(0))
    return C, omega


def generator_indices(fan: StackyFan, vectors) -> list[int]:
    out = []
    for v in vectors:
        k = fan.generator_index(v)
        if k is None:
            raise ValueError(f"{tuple(v)} is not an extended generator")
        out.append(k)
    return out


def verify_composition(fan: StackyFan, lambdas, vectors, basis: GroebnerBasis = None,
                       criterion: str = "y") -> bool:
    """Check prod X_{v_k} == q^C T^Omega in the quantum ring for a zero-sum list."""
    vectors = [tuple(v) for v in vectors]
    total = tuple(map(sum, zip((0,) * fan.dim, *vectors))) if vectors else (0,) * fan.dim
    if any(total):
        raise VectorsDoNotSumToZero(f"vectors sum to {total}")
    if not is_fano(fan, criterion):
        raise NotFano("composition identities are exact only for Fano fans")
    indices = generator_indices(fan, vectors)
    if basis is None:
        from .presentation import quantum_presentation
        basis = quantum_presentation(fan, lambdas, criterion).groebner()
    M = fan.ngens
    prod = NovikovPolynomial.constant(M)
    for k in indices:
        prod = prod * NovikovPolynomial.variable(k, M)
    C, omega = composition_exponents(fan, lambdas, indices)
    expected = NovikovPolynomial.monomial(M, 1, None, C, omega)
    return basis.normal_form(prod) == expected


def inverse_decomposition(fan: StackyFan, collection) -> dict:
    """Generators (with multiplicity) summing to -sum_{k in I} y_k."""
    from .relations import decompositions

    s = tuple(map(sum, zip((0,) * fan.dim, *(fan.extended[k].vector for k in collection))))
    neg = tuple(-x for x in s)
    options = list(decompositions(fan, neg))
    return min(options, key=lambda d: (sum(d.values()), tuple(d.get(k, 0) for k in range(fan.ngens))))
