"""Stacky fans: cones, Box and SBox enumeration, ages, and the Gale dual.

Ray indices are 0-based throughout the library; the JSON/CLI layer and the
variable names X1..XM are 1-based.  A cone is a frozenset of ray indices.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Optional, Sequence

from . import lattice
from .lattice import Matrix

Cone = frozenset


class NotInBox(ValueError):
    pass


class RankDeficient(ValueError):
    pass


class InvalidFan(ValueError):
    def __init__(self, violations):
        super().__init__("invalid stacky fan: " + "; ".join(violations))
        self.violations = list(violations)


@dataclass(frozen=True)
class BoxElement:
    """A lattice point with all b-coordinates in [0, 1) on its minimal cone."""

    vector: tuple[int, ...]
    cone: Cone
    r: dict = field(hash=False, compare=False)
    age: Fraction
    order: int

    @property
    def dim(self) -> int:
        return len(self.cone)


@dataclass(frozen=True)
class ExtendedGenerator:
    index: int
    vector: tuple[int, ...]
    cone: Cone
    r: dict = field(hash=False, compare=False)
    age: Fraction
    order: int


@dataclass(frozen=True)
class GaleDual:
    free_rank: int
    torsion: tuple[int, ...]
    matrix: Matrix
    torsion_rows: Matrix


@dataclass(frozen=True)
class StackyFan:
    """A complete simplicial stacky fan ``(N = Z^n, Sigma, beta)``.

    ``rays`` are the primitive generators y_i, ``labels`` the positive
    integers m_i, so that ``b_i = m_i * y_i``.  ``max_cones`` lists the
    maximal cones as sets of ray indices.
    """

    rays: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    max_cones: tuple[Cone, ...]

    def __init__(self, rays, labels=None, max_cones=()):
        rays = tuple(tuple(int(x) for x in y) for y in rays)
        labels = tuple(int(m) for m in labels) if labels is not None else (1,) * len(rays)
        cones = tuple(sorted((frozenset(int(i) for i in c) for c in max_cones), key=sorted))
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "max_cones", cones)

    @property
    def dim(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    @property
    def nrays(self) -> int:
        return len(self.rays)

    @cached_property
    def b(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(m * x for x in y) for y, m in zip(self.rays, self.labels))

    @cached_property
    def beta(self) -> Matrix:
        """The n x N matrix with columns b_i."""
        return lattice.from_columns(self.b)

    # -- validation ---------------------------------------------------------

    def validate(self, samples: int = 200, seed: int = 0) -> list[str]:
        """Return a list of violations; empty means the fan is usable."""
        out = []
        n = self.dim
        if not self.rays:
            return ["no rays"]
        if any(len(y) != n for y in self.rays) or len(self.labels) != len(self.rays):
            return ["ragged input"]
        for i, y in enumerate(self.rays):
            if not lattice.is_primitive(y):
                out.append(f"non-primitive ray {i + 1}")
        for i, m in enumerate(self.labels):
            if m < 1:
                out.append(f"non-positive label {i + 1}")
        for c in self.max_cones:
            if any(i < 0 or i >= self.nrays for i in c):
                return out + ["bad cone index"]
        if lattice.rank(self.beta) < n:
            out.append("rank-deficient")
        elif any(d != 1 for d in lattice.smith_normal_form(lattice.from_columns(self.rays)).diag):
            out.append("generic stabilizer")
        for c in self.max_cones:
            if len(c) != n or lattice.rank(lattice.from_columns([self.rays[i] for i in c])) != n:
                out.append("non-simplicial cone " + _fmt_cone(c))
        if out:
            return out
        used = set().union(*self.max_cones) if self.max_cones else set()
        if used != set(range(self.nrays)):
            out.append("unused ray")
        walls: dict = {}
        for c in self.max_cones:
            for i in c:
                walls.setdefault(c - {i}, []).append(c)
        if not self.max_cones or any(len(v) != 2 for v in walls.values()):
            if any(len(v) > 2 for v in walls.values()):
                out.append("overlapping cones")
            out.append("incomplete")
            return out
        rng = random.Random(seed)
        for _ in range(samples):
            d = tuple(rng.randint(-1000, 1000) for _ in range(n))
            if not any(d):
                continue
            inside = [self._cone_coords(c, d) for c in self.max_cones]
            closed = [x for x in inside if all(t >= 0 for t in x)]
            if not closed:
                out.append("incomplete")
                break
            if sum(1 for x in closed if all(t > 0 for t in x)) > 1:
                out.append("overlapping cones")
                break
        return out

    def check(self):
        v = self.validate()
        if v:
            raise InvalidFan(v)
        return self

    # -- cone queries -------------------------------------------------------

    @cached_property
    def _inverses(self):
        out = {}
        for c in self.max_cones:
            adj, d = lattice.scaled_inverse(lattice.from_columns([self.rays[i] for i in sorted(c)]))
            out[c] = (tuple(sorted(c)), adj, d)
        return out

    def _cone_coords(self, cone, v):
        _idx, adj, d = self._inverses[cone]
        return tuple(Fraction(lattice.dot(row, v), d) for row in adj)

    def y_coordinates(self, v) -> dict:
        """Coordinates of ``v`` w.r.t. the primitive generators of its minimal cone."""
        v = tuple(v)
        for c in self.max_cones:
            idx, adj, d = self._inverses[c]
            x = [lattice.dot(row, v) for row in adj]
            if all(t >= 0 for t in x):
                return {i: Fraction(t, d) for i, t in zip(idx, x) if t != 0}
        raise InvalidFan(["incomplete"])

    def minimal_cone(self, v) -> Cone:
        return frozenset(self.y_coordinates(v))

    def r_coordinates(self, v) -> dict:
        """Coordinates of ``v`` w.r.t. the b_i of its minimal cone."""
        return {i: t / self.labels[i] for i, t in self.y_coordinates(v).items()}

    def age(self, v) -> Fraction:
        return sum(self.r_coordinates(v).values(), Fraction(0))

    @cached_property
    def cones(self) -> tuple[Cone, ...]:
        """Every cone of the fan, including the zero cone."""
        faces = set()
        for c in self.max_cones:
            for k in range(len(c) + 1):
                faces.update(frozenset(s) for s in itertools.combinations(sorted(c), k))
        return tuple(sorted(faces, key=lambda s: (len(s), sorted(s))))

    def cones_containing(self, face) -> list[Cone]:
        return [c for c in self.max_cones if face <= c]

    # -- parallelepipeds ----------------------------------------------------

    def _parallelepiped(self, gens, closed=False):
        """Lattice points sum(a_i g_i) with 0 <= a_i < 1 (or <= 1)."""
        n = self.dim
        if not gens:
            return {(0,) * n: ()}
        corners = [tuple(map(sum, zip((0,) * n, *sub)))
                   for k in range(len(gens) + 1) for sub in itertools.combinations(gens, k)]
        lo = [min(c[j] for c in corners) for j in range(n)]
        hi = [max(c[j] for c in corners) for j in range(n)]
        a = lattice.from_columns(gens)
        if len(gens) < n:
            solve = lambda p: lattice.solve_rational(a, p)
        else:
            adj, d = lattice.scaled_inverse(a)
            solve = lambda p: tuple(Fraction(lattice.dot(row, p), d) for row in adj)
        out = {}
        for p in itertools.product(*(range(lo[j], hi[j] + 1) for j in range(n))):
            x = solve(p)
            if x is None:
                continue
            if all(0 <= t < 1 for t in x) or (closed and all(0 <= t <= 1 for t in x)):
                out[p] = x
        return out

    def sbox(self, cone) -> list[tuple[int, ...]]:
        """Lattice points in the half-open parallelepiped of the y_i of ``cone``."""
        idx = sorted(cone)
        return sorted(self._parallelepiped([self.rays[i] for i in idx]))

    def gen(self, cone) -> list[tuple[int, ...]]:
        """Nonzero SBox points that are irreducible in the semigroup cone ∩ N."""
        idx = sorted(cone)
        pts = self._parallelepiped([self.rays[i] for i in idx])
        zero = (0,) * self.dim
        out = []
        for v, a in pts.items():
            if v == zero:
                continue
            reducible = any(
                w != zero and w != v and all(s <= t for s, t in zip(b, a))
                for w, b in pts.items()
            )
            if not reducible:
                out.append(v)
        return sorted(out)

    @cached_property
    def extended(self) -> tuple[ExtendedGenerator, ...]:
        """y_1..y_N (rays) followed by Gen(Sigma) in lexicographic order."""
        gens = set()
        for c in self.max_cones:
            gens.update(self.gen(c))
        vectors = list(self.rays) + sorted(gens - set(self.rays))
        out = []
        for k, v in enumerate(vectors):
            r = self.r_coordinates(v)
            out.append(ExtendedGenerator(
                index=k, vector=v, cone=frozenset(r), r=r,
                age=sum(r.values(), Fraction(0)),
                order=lattice.lcm_denominators(r.values()),
            ))
        return tuple(out)

    @property
    def ngens(self) -> int:
        """M: number of ring generators X_1..X_M."""
        return len(self.extended)

    @cached_property
    def ages(self) -> tuple[Fraction, ...]:
        return tuple(g.age for g in self.extended)

    def generator_index(self, v) -> Optional[int]:
        v = tuple(v)
        for g in self.extended:
            if g.vector == v:
                return g.index
        return None

    # -- Box and twisted sectors -------------------------------------------

    def box_element(self, v) -> BoxElement:
        v = tuple(int(x) for x in v)
        r = self.r_coordinates(v)
        if any(t >= 1 for t in r.values()):
            raise NotInBox(f"{v} has a b-coordinate >= 1")
        return BoxElement(v, frozenset(r), r, sum(r.values(), Fraction(0)),
                          lattice.lcm_denominators(r.values()))

    def box_inverse(self, e: BoxElement) -> BoxElement:
        """The unique Box element w on the same cone with w + v in N_sigma."""
        w = [0] * self.dim
        for i, t in e.r.items():
            for j in range(self.dim):
                w[j] += (1 - t) * self.b[i][j]
        return self.box_element(tuple(int(x) for x in w))

    def twisted_sectors(self) -> list[BoxElement]:
        pts = set()
        for c in self.max_cones:
            pts.update(self._parallelepiped([self.b[i] for i in sorted(c)]))
        elems = [self.box_element(p) for p in pts]
        return sorted(elems, key=lambda e: (e.age, e.vector))

    def section_chern_numbers(self, v) -> tuple[Fraction, Fraction]:
        """(total, vertical) first Chern numbers of the fixed section for ``v``."""
        e = v if isinstance(v, BoxElement) else self.box_element(v)
        inv_age = self.box_inverse(e).age
        return 2 - e.dim + inv_age, -e.dim + inv_age

    # -- Gale dual -----------------------------------------------------------

    def gale_dual(self) -> GaleDual:
        bt = lattice.transpose(self.beta)  # beta^*: Z^n -> Z^N
        snf = lattice.smith_normal_form(bt)
        if snf.rank < self.dim:
            raise RankDeficient("beta does not have full row rank")
        rows = snf.U
        free = lattice.hermite_rows(rows[snf.rank:])
        tors = [(d, rows[i]) for i, d in enumerate(snf.diag) if d > 1]
        return GaleDual(
            free_rank=len(free),
            torsion=tuple(d for d, _ in tors),
            matrix=tuple(free),
            torsion_rows=tuple(tuple(x % d for x in row) for d, row in tors),
        )


def _fmt_cone(c) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(c)) + "}"
