"""Shared fixtures: corpus fans and random complete fans."""

import math
import random
from fractions import Fraction

from hypothesis import strategies as st

from orbiqh import lattice
from orbiqh.documents import corpus, load_document, realize, cp_a_b
from orbiqh.fan import StackyFan
from orbiqh.relations import PLFunction

CP112 = StackyFan([(-1, 0), (0, -1), (1, 2)], [1, 1, 1], [{0, 1}, {1, 2}, {0, 2}])
CP112_LAMBDA = (2, 1, 2)
P1XP1 = StackyFan([(1, 0), (0, 1), (-1, 0), (0, -1)], None, [{0, 1}, {1, 2}, {2, 3}, {3, 0}])
F2 = StackyFan([(1, 0), (0, 1), (-1, 2), (0, -1)], None, [{0, 1}, {1, 2}, {2, 3}, {3, 0}])
F2_LAMBDA = (1, 1, 3, 1)
# weighted projective space P(1,1,2,1)
P1121 = StackyFan([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -2)], None,
                  [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}])


def cp(a, b):
    return StackyFan([(-1,), (1,)], [a, b], [{0}, {1}])


def corpus_fans():
    """(name, fan, lambdas) for every bundled or generated corpus entry."""
    out = []
    for name, data in corpus().items():
        doc = realize(load_document(data))
        out.append((name, doc.fan, doc.lambdas))
    out.append(("p1121", P1121, (1, 1, 1, 1)))
    return out


def _angle(v):
    return math.atan2(v[1], v[0])


def random_fan_2d(rng: random.Random, bound=4, max_rays=6, max_label=3):
    """A random complete simplicial 2D stacky fan, or None if the draw fails."""
    k = rng.randint(3, max_rays)
    rays = set()
    for _ in range(40):
        v = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if v != (0, 0) and lattice.is_primitive(v):
            rays.add(v)
        if len(rays) == k:
            break
    rays = sorted(rays, key=_angle)
    if len(rays) < 3:
        return None
    angles = [_angle(v) for v in rays]
    gaps = [(angles[(i + 1) % len(rays)] - angles[i]) % (2 * math.pi) for i in range(len(rays))]
    for i, v in enumerate(rays):
        w = rays[(i + 1) % len(rays)]
        if v[0] * w[1] - v[1] * w[0] <= 0:  # gap must be strictly less than pi
            return None
    labels = [rng.randint(1, max_label) for _ in rays]
    cones = [{i, (i + 1) % len(rays)} for i in range(len(rays))]
    fan = StackyFan(rays, labels, cones)
    if fan.validate(samples=20):
        return None
    return fan


def convex_lambdas(fan: StackyFan, rng: random.Random):
    """Strictly convex support constants: a rational tangent polygon of a
    shifted disk, falling back to rejection sampling."""
    for _ in range(50):
        scale = rng.randint(2, 6)
        c = [Fraction(rng.randint(-3, 3), 4) for _ in range(fan.dim)]
        mu = [Fraction(round(math.hypot(*y) * scale * 1000), 1000) + lattice.dot(c, y) for y in fan.rays]
        lam = tuple(m * x for m, x in zip(fan.labels, mu))
        if PLFunction(fan, lam).is_strictly_convex():
            return lam
    for _ in range(500):
        lam = tuple(rng.randint(1, 12) for _ in fan.rays)
        if PLFunction(fan, lam).is_strictly_convex():
            return lam
    return None


@st.composite
def fans_2d(draw, with_lambdas=False, **kw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    for _ in range(100):
        fan = random_fan_2d(rng, **kw)
        if fan is None:
            continue
        if not with_lambdas:
            return fan
        lam = convex_lambdas(fan, rng)
        if lam is not None:
            return fan, lam
    raise AssertionError("could not draw a fan")


coprime_pairs = st.tuples(st.integers(1, 9), st.integers(1, 9)).filter(lambda ab: math.gcd(*ab) == 1)
