from fractions import Fraction

import pytest
from hypothesis import given, settings

from orbiqh import lattice
from orbiqh.polytope import Empty, LabeledPolytope, NotSimple, PolytopeError, RedundantFacet, Unbounded
from orbiqh.relations import weighted_height
from helpers import CP112_LAMBDA, fans_2d

CP112_POLY = LabeledPolytope([(-1, 0), (0, -1), (1, 2)], [1, 1, 1], CP112_LAMBDA)
SQUARE = LabeledPolytope([(1, 0), (0, 1), (-1, 0), (0, -1)], None, [1, 1, 1, 1])


def test_vertices_examples():
    assert sorted(v.point for v in CP112_POLY.vertices()) == [(-2, -1), (-2, 2), (4, -1)]
    seg = LabeledPolytope([(-1,), (1,)], [1, 2], [1, 2])
    assert [v.point for v in seg.vertices()] == [(-1,), (1,)]
    assert sorted(v.point for v in SQUARE.vertices()) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    for v in CP112_POLY.vertices():
        assert len(v.active) == 2


def test_vertices_errors():
    with pytest.raises(Unbounded):
        LabeledPolytope([(1, 0), (0, 1)], None, [1, 1]).vertices()
    with pytest.raises(Unbounded):
        LabeledPolytope([(1, 0), (0, 1), (-1, 0)], None, [1, 1, 1]).vertices()
    with pytest.raises(Empty):
        LabeledPolytope([(1,), (-1,)], None, [-2, 1]).vertices()
    with pytest.raises(NotSimple):
        LabeledPolytope([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)], None, [1, 1, 1, 1, 2]).vertices()
    with pytest.raises(RedundantFacet):
        LabeledPolytope([(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)], None, [1, 1, 1, 1, 5]).vertices()
    with pytest.raises(PolytopeError):
        LabeledPolytope([(2, 0), (-1, 0)], None, [1, 1])
    with pytest.raises(PolytopeError):
        LabeledPolytope([(1,), (-1,)], [0, 1], [1, 1])


def test_to_stacky_fan():
    fan, lam = CP112_POLY.to_stacky_fan()
    assert fan.rays == ((-1, 0), (0, -1), (1, 2))
    assert fan.labels == (1, 1, 1)
    assert set(fan.max_cones) == {frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})}
    assert lam == (2, 1, 2)
    fan, _ = LabeledPolytope([(-1,), (1,)], [3, 5], [1, 1]).to_stacky_fan()
    assert fan.rays == ((-1,), (1,)) and fan.labels == (3, 5)
    fan, _ = SQUARE.to_stacky_fan()
    assert len(fan.max_cones) == 4
    assert all(lattice.lattice_index([fan.rays[i] for i in sorted(c)]) == 1 for c in fan.max_cones)


def test_moment_extrema():
    e = CP112_POLY.moment_extrema((0, 1))
    assert e.max == 2 and e.min == -1
    e = CP112_POLY.moment_extrema((0, 0))
    assert e.max == e.min == 0
    seg = LabeledPolytope([(-1,), (1,)], [1, 2], [1, 2])
    assert seg.moment_extrema((1,)).max == 1


def _roundtrip(fan, lam):
    poly = LabeledPolytope(fan.rays, fan.labels, lam)
    out, lam2 = poly.to_stacky_fan()
    assert out.validate() == []
    assert set(out.max_cones) == set(fan.max_cones)
    assert len(poly.vertices()) == len(out.max_cones)
    for i, b in enumerate(out.b):
        assert poly.moment_extrema(b).max == lam2[i]
    for g in out.extended:
        assert poly.moment_extrema(g.vector).max == weighted_height(out, g.index, lam2)


@settings(max_examples=500, deadline=None)
@given(fans_2d(with_lambdas=True, bound=3, max_rays=5))
def test_roundtrip_and_moment_identity(data):
    _roundtrip(*data)


def test_roundtrip_corpus():
    from helpers import corpus_fans

    for _, fan, lam in corpus_fans():
        _roundtrip(fan, lam)
