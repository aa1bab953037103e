"""Labeled (Lerman-Tolman) polytopes and their stacky normal fans."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import lattice
from .fan import StackyFan


class PolytopeError(ValueError):
    pass


class Unbounded(PolytopeError):
    pass


class Empty(PolytopeError):
    pass


class NotSimple(PolytopeError):
    pass


class RedundantFacet(PolytopeError):
    pass


@dataclass(frozen=True)
class Vertex:
    point: tuple[Fraction, ...]
    active: frozenset


@dataclass(frozen=True)
class Extrema:
    max: Fraction
    argmax: frozenset
    min: Fraction
    argmin: frozenset


@dataclass(frozen=True)
class LabeledPolytope:
    """Delta = {alpha : <alpha, m_i y_i> <= lambda_i for every facet i}.

    ``normals`` are the primitive outward normals y_i, ``labels`` the facet
    labels m_i and ``lambdas`` the support constants.
    """

    normals: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    lambdas: tuple[Fraction, ...]

    def __init__(self, normals, labels=None, lambdas=()):
        normals = tuple(tuple(int(x) for x in y) for y in normals)
        labels = tuple(int(m) for m in labels) if labels is not None else (1,) * len(normals)
        object.__setattr__(self, "normals", normals)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "lambdas", tuple(Fraction(x) for x in lambdas))
        if not (len(normals) == len(labels) == len(self.lambdas)) or not normals:
            raise PolytopeError("normals, labels and lambdas must have equal nonzero length")
        for i, y in enumerate(normals):
            if not lattice.is_primitive(y):
                raise PolytopeError(f"normal {i + 1} is not primitive")
            if labels[i] < 1:
                raise PolytopeError(f"label {i + 1} is not positive")

    @property
    def dim(self) -> int:
        return len(self.normals[0])

    @cached_property
    def b(self):
        return tuple(tuple(m * x for x in y) for y, m in zip(self.normals, self.labels))

    def _slack(self, i, point):
        return self.lambdas[i] - lattice.dot(self.b[i], point)

    @cached_property
    def _vertices(self) -> tuple[Vertex, ...]:
        n, facets = self.dim, range(len(self.normals))
        if lattice.rank(self.b) < n:
            raise Unbounded("facet normals do not span")
        found = {}
        for sub in itertools.combinations(facets, n):
            a = [self.b[i] for i in sub]
            if lattice.determinant(a) == 0:
                continue
            p = lattice.solve_rational(a, [self.lambdas[i] for i in sub])
            if p in found:
                continue
            slacks = [self._slack(i, p) for i in facets]
            if all(s >= 0 for s in slacks):
                found[p] = frozenset(i for i, s in enumerate(slacks) if s == 0)
        if not found:
            raise Empty("no feasible vertex")
        verts = tuple(Vertex(p, act) for p, act in sorted(found.items()))
        for v in verts:
            if len(v.active) != n:
                raise NotSimple(f"{len(v.active)} facets meet at vertex {v.point}")
        self._check_bounded(verts)
        for i in facets:
            if not any(i in v.active for v in verts):
                raise RedundantFacet(f"facet {i + 1} touches no vertex")
        return verts

    def _check_bounded(self, verts):
        n = self.dim
        for v in verts:
            act = sorted(v.active)
            for j in act:
                rest = [i for i in act if i != j]
                # direction d with <d, b_i> = 0 on the other facets and <d, b_j> = -1
                a = [self.b[i] for i in rest] + [self.b[j]]
                d = lattice.solve_rational(a, [0] * (n - 1) + [-1])
                if not any(lattice.dot(self.b[k], d) > 0 for k in range(len(self.b)) if k not in v.active):
                    raise Unbounded(f"edge from {v.point} leaving facet {j + 1} is a ray")

    def vertices(self) -> list[Vertex]:
        return list(self._vertices)

    def to_stacky_fan(self) -> tuple[StackyFan, tuple[Fraction, ...]]:
        """The normal fan with one maximal cone per vertex, plus the lambdas."""
        cones = [v.active for v in self._vertices]
        fan = StackyFan(self.normals, self.labels, cones)
        return fan, self.lambdas

    def moment_extrema(self, v) -> Extrema:
        """Max and min of <., v> over the polytope, with the facets of each extremal face."""
        values = [(lattice.dot(x.point, v), x.active) for x in self._vertices]
        hi = max(val for val, _ in values)
        lo = min(val for val, _ in values)
        argmax = frozenset.intersection(*[a for val, a in values if val == hi])
        argmin = frozenset.intersection(*[a for val, a in values if val == lo])
        return Extrema(Fraction(hi), argmax, Fraction(lo), argmin)
