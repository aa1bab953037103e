"""Ideal generators: linear relations, (quantum) Stanley-Reisner relations,
cone relations, and the piecewise linear support function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from . import lattice
from .fan import Cone, StackyFan
from .groebner import buchberger, grevlex_key, reduce
from .novikov import NovikovPolynomial


class NoIntegerDecomposition(ValueError):
    pass


class NotKaehler(ValueError):
    pass


def linear_relations(fan: StackyFan) -> list[NovikovPolynomial]:
    """sum_i <e_xi, b_i> X_i^{m_i} for each standard dual basis vector e_xi."""
    M = fan.ngens
    out = []
    for xi in range(fan.dim):
        p = NovikovPolynomial.zero(M)
        for i, (b, m) in enumerate(zip(fan.b, fan.labels)):
            if b[xi]:
                p = p + NovikovPolynomial.from_exponents(M, {i: m}, coeff=b[xi])
        out.append(p)
    return out


# -- generalized primitive collections -------------------------------------------

def _containing_cones(fan: StackyFan):
    return [frozenset(j for j, c in enumerate(fan.max_cones) if g.cone <= c) for g in fan.extended]


def is_face(fan: StackyFan, subset) -> bool:
    """True iff the generators y_k, k in subset, all lie in one cone."""
    holders = _containing_cones(fan)
    common = frozenset(range(len(fan.max_cones)))
    for k in subset:
        common &= holders[k]
    return bool(common)


def primitive_collections(fan: StackyFan) -> list[tuple[int, ...]]:
    """Minimal non-faces of the containment complex on y_1..y_M."""
    holders = _containing_cones(fan)
    everything = frozenset(range(len(fan.max_cones)))
    M = fan.ngens
    faces = {(): everything}
    found = []
    size = 0
    while faces:
        size += 1
        nxt = {}
        for s, common in faces.items():
            start = s[-1] + 1 if s else 0
            for k in range(start, M):
                t = s + (k,)
                if not all(t[:i] + t[i + 1:] in faces for i in range(len(t))):
                    continue
                c = common & holders[k]
                if c:
                    nxt[t] = c
                else:
                    found.append(t)
        faces = nxt
    return sorted(found)


# -- quantum Stanley-Reisner relations ---------------------------------------------

@dataclass(frozen=True)
class QuantumSRRelation:
    collection: tuple[int, ...]
    cone: Cone
    c: dict = field(hash=False, compare=False)
    C: Fraction = Fraction(0)
    omega: Fraction = Fraction(0)

    def polynomial(self, nvars: int) -> NovikovPolynomial:
        lhs = NovikovPolynomial.from_exponents(nvars, {k: 1 for k in self.collection})
        rhs = NovikovPolynomial.from_exponents(nvars, self.c, q=self.C, t=self.omega)
        return lhs - rhs

    def classical(self, nvars: int) -> NovikovPolynomial:
        return NovikovPolynomial.from_exponents(nvars, {k: 1 for k in self.collection})


def weighted_height(fan: StackyFan, k: int, lambdas) -> Fraction:
    """sum_i r_ki lambda_i for the extended generator y_k."""
    return sum((t * Fraction(lambdas[i]) for i, t in fan.extended[k].r.items()), Fraction(0))


def decompositions(fan: StackyFan, target) -> Iterator[dict]:
    """All ways to write ``target`` as a nonnegative integer combination of
    extended generators lying in its minimal cone."""
    target = tuple(target)
    cone = fan.minimal_cone(target)
    if not cone:
        yield {}
        return
    coords = fan.y_coordinates(target)
    basis = sorted(cone)
    members = [g for g in fan.extended if g.cone and g.cone <= cone]
    ycoord = [tuple(g.r.get(i, 0) * fan.labels[i] for i in basis) for g in members]
    goal = tuple(coords.get(i, 0) for i in basis)

    def rec(pos, remaining, chosen):
        if all(x == 0 for x in remaining):
            yield {members[j].index: e for j, e in chosen if e}
            return
        if pos == len(members):
            return
        a = ycoord[pos]
        bound = min(int(r // x) for r, x in zip(remaining, a) if x > 0)
        for e in range(bound, -1, -1):
            rest = tuple(r - e * x for r, x in zip(remaining, a))
            yield from rec(pos + 1, rest, chosen + [(pos, e)])

    yield from rec(0, goal, [])


def _decomposition_key(c: dict, M: int):
    vec = tuple(c.get(k, 0) for k in range(M))
    return (sum(vec), vec)


def qsr_relation(fan: StackyFan, lambdas, collection, check_positive=True) -> QuantumSRRelation:
    collection = tuple(sorted(collection))
    s = tuple(map(sum, zip((0,) * fan.dim, *(fan.extended[k].vector for k in collection))))
    r_s = fan.r_coordinates(s)
    C = sum((fan.extended[k].age for k in collection), Fraction(0)) - sum(r_s.values(), Fraction(0))
    omega = sum((weighted_height(fan, k, lambdas) for k in collection), Fraction(0)) - sum(
        (t * Fraction(lambdas[i]) for i, t in r_s.items()), Fraction(0))
    options = list(decompositions(fan, s))
    if not options:
        raise NoIntegerDecomposition(f"{s} is not a nonnegative combination of generators in its cone")
    c = min(options, key=lambda d: _decomposition_key(d, fan.ngens))
    if check_positive and omega <= 0:
        raise NotKaehler(f"Omega = {omega} <= 0 for collection {[k + 1 for k in collection]}")
    return QuantumSRRelation(collection, frozenset(r_s), c, C, omega)


def qsr_relations(fan: StackyFan, lambdas) -> list[QuantumSRRelation]:
    return [qsr_relation(fan, lambdas, I) for I in primitive_collections(fan)]


# -- cone ideal ------------------------------------------------------------------

def _binomial(t, idx, M) -> NovikovPolynomial:
    pos = {idx[j]: e for j, e in enumerate(t) if e > 0}
    neg = {idx[j]: -e for j, e in enumerate(t) if e < 0}
    p = NovikovPolynomial.from_exponents(M, pos) - NovikovPolynomial.from_exponents(M, neg)
    return p


def _lll(kernel):
    """LLL-reduced basis of the kernel lattice; short vectors keep the saturation cheap."""
    if len(kernel) < 2:
        return [tuple(t) for t in kernel]
    rows = [[ZZ(x) for x in t] for t in kernel]
    red = DomainMatrix(rows, (len(rows), len(rows[0])), ZZ).lll()
    return [tuple(int(x) for x in r) for r in red.to_Matrix().tolist()]


def _weighted_key(w, last):
    """Weighted reverse lex with variable ``last`` as the smallest."""
    k = len(w)
    perm = [j for j in range(k) if j != last] + [last]

    def key(e):
        return (sum(a * b for a, b in zip(w, e)), tuple(-e[j] for j in reversed(perm)))

    return key


def _lattice_ideal(kernel, weights) -> list[dict]:
    """Generators of the saturated lattice ideal of ``kernel``.

    ``weights`` is a positive grading making every binomial homogeneous, so
    I : x_i^oo can be read off a reverse lex basis with x_i last, one
    variable at a time.
    """
    k = len(weights)
    polys = []
    for t in _lll(kernel):
        pos = tuple(max(e, 0) for e in t)
        neg = tuple(max(-e, 0) for e in t)
        polys.append({pos: Fraction(1), neg: Fraction(-1)})
    for i in range(k):
        gb = buchberger(polys, _weighted_key(weights, i))
        polys = []
        for g in gb:
            low = min(e[i] for e in g)
            polys.append({e[:i] + (e[i] - low,) + e[i + 1:]: c for e, c in g.items()})
    return buchberger(polys, _weighted_key(weights, k - 1))


def _minimalize(gens: list[dict], weights) -> list[dict]:
    """Drop generators lying in the ideal of the lighter ones."""
    deg = lambda g: max(sum(a * b for a, b in zip(weights, e)) for e in g)
    out: list[dict] = []
    basis: list[dict] = []
    for g in sorted(gens, key=lambda g: (deg(g), grevlex_key(max(g, key=grevlex_key)))):
        if not out or reduce(g, basis, grevlex_key):
            out.append(g)
            basis = buchberger(out, grevlex_key)
    return out


def _positive_weights(fan: StackyFan, cone, vectors) -> list[int]:
    """Integer weights <w, v> > 0 for vectors of a maximal cone: w = sum of dual rows."""
    adj, _d = lattice.scaled_inverse(lattice.from_columns([fan.rays[i] for i in sorted(cone)]))
    w = [sum(row[j] for row in adj) for j in range(fan.dim)]
    return [lattice.dot(w, v) for v in vectors]


def cone_ideal(fan: StackyFan) -> list[NovikovPolynomial]:
    """Binomial generators of the cone ideal, one lattice ideal per maximal cone."""
    M = fan.ngens
    seen = []
    for cone in fan.max_cones:
        idx = [g.index for g in fan.extended if g.cone <= cone]
        if len(idx) <= fan.dim:
            continue
        vectors = [fan.extended[j].vector for j in idx]
        kernel = lattice.integer_kernel(lattice.from_columns(vectors))
        weights = _positive_weights(fan, cone, vectors)
        local = _minimalize(_lattice_ideal(kernel, weights), weights)
        for g in local:
            p = NovikovPolynomial(M, {(tuple(_scatter(e, idx, M)), 0, 0): c for e, c in g.items()})
            lead = max((x for (x, _, _), _c in p), key=grevlex_key)
            if p.terms()[(lead, 0, 0)] < 0:
                p = -p
            if p not in seen:
                seen.append(p)
    return seen


def _scatter(e, idx, M):
    out = [0] * M
    for j, v in zip(idx, e):
        out[j] = v
    return out


# -- piecewise linear support function -------------------------------------------

class PLFunction:
    """phi(u) = sum_{b_i in sigma} -lambda_i <b_i^dual, u> on each maximal cone."""

    def __init__(self, fan: StackyFan, lambdas):
        self.fan = fan
        self.lambdas = tuple(Fraction(x) for x in lambdas)
        self.forms = {}
        for cone in fan.max_cones:
            idx = sorted(cone)
            a = [fan.b[i] for i in idx]
            self.forms[cone] = lattice.solve_rational(a, [-self.lambdas[i] for i in idx])

    def __call__(self, u) -> Fraction:
        cone = self.fan.minimal_cone(u)
        holder = next(c for c in self.fan.max_cones if cone <= c)
        return lattice.dot(self.forms[holder], u)

    def walls(self):
        for s, t in itertools.permutations(self.fan.max_cones, 2):
            if len(s & t) == self.fan.dim - 1:
                (extra,) = t - s
                yield s, t, extra

    def is_strictly_convex(self) -> bool:
        """Each cone's linear form lies strictly above phi at the far ray across every wall."""
        return all(
            lattice.dot(self.forms[s], self.fan.b[i]) > -self.lambdas[i]
            for s, _t, i in self.walls()
        )


def phi_omega(fan: StackyFan, lambdas) -> PLFunction:
    return PLFunction(fan, lambdas)


def is_strictly_convex(phi: PLFunction) -> bool:
    return phi.is_strictly_convex()


def anticanonical_lambdas(fan: StackyFan, criterion: str = "y") -> tuple[int, ...]:
    """Support constants of the anticanonical PL function.

    ``"y"``: h(y_i) = -1, i.e. lambda_i = m_i.  ``"b"``: h(b_i) = -1, i.e. lambda_i = 1.
    """
    if criterion == "y":
        return fan.labels
    if criterion == "b":
        return (1,) * fan.nrays
    raise ValueError(f"unknown Fano criterion {criterion!r}")


def is_fano(fan: StackyFan, criterion: str = "y") -> bool:
    return PLFunction(fan, anticanonical_lambdas(fan, criterion)).is_strictly_convex()
