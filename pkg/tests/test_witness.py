from fractions import Fraction

import pytest

from balgame.core import (PointSet, VectorFamily, canonical_family,
                          enumerate_psum, vadd, vdot, vsub)
from balgame.game import is_vclosed
from balgame.witness import (NotVClosedError, exposed_normal,
                             extreme_points, in_convex_hull, random_vclosed,
                             translate_witness)


def test_in_convex_hull_2d():
    sq = [(0, 0), (2, 0), (0, 2), (2, 2)]
    assert in_convex_hull(sq, (1, 1))
    assert in_convex_hull(sq, (2, 2))
    assert not in_convex_hull(sq, (3, 1))
    assert in_convex_hull(sq, (Fraction(1, 2), Fraction(3, 2)))


def test_in_convex_hull_lp_path():
    cube = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]
    assert in_convex_hull(cube, (Fraction(1, 2),) * 3)
    assert not in_convex_hull(cube, (1, 1, 2))
    # degenerate: a segment in 3-space
    seg = [(0, 0, 0), (2, 2, 2)]
    assert in_convex_hull(seg, (1, 1, 1))
    assert not in_convex_hull(seg, (1, 1, 0))


def test_extreme_points_2d():
    ps = PointSet(2, frozenset({(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)}))
    assert extreme_points(ps) == [(0, 0), (0, 2), (2, 0), (2, 2)]


def test_extreme_points_lp_path():
    pts = {(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)}
    ps = PointSet(3, frozenset(pts))
    got = extreme_points(ps)
    assert (1, 1, 0) not in got
    assert len(got) == 4


def test_exposed_normal():
    ps = PointSet(2, frozenset({(0, 0), (2, 0), (0, 2), (2, 2)}))
    a = exposed_normal(ps, (2, 2))
    assert a is not None
    for y in ps.points:
        if y != (2, 2):
            assert vdot(a, vsub((2, 2), y)) > 0
    with pytest.raises(ValueError):
        exposed_normal(ps, (5, 5))


def test_exposed_normal_singleton():
    ps = PointSet(2, frozenset({(3, 4)}))
    assert exposed_normal(ps, (3, 4)) is not None


def test_translate_witness_psum():
    # T = P(V) itself: every extreme point admits a witness
    for n in (2, 3):
        f = canonical_family(n)
        t = enumerate_psum(f)
        for x in extreme_points(t):
            cert = translate_witness(t, f, x)
            assert cert.verified
            assert cert.replay()
            assert vadd(cert.translate, cert.vertex) == tuple(x)


def test_translate_witness_rejects_open_sets():
    f = canonical_family(2)
    bad = PointSet(2, frozenset({(0, 0), (1, 1)}))
    with pytest.raises(NotVClosedError):
        translate_witness(bad, f, (1, 1))


def test_translate_witness_shifted_union():
    f = canonical_family(2)
    base = enumerate_psum(f).points
    pts = set(base) | {vadd((3, 1), p) for p in base}
    ok, _ = is_vclosed(pts, f)
    assert ok
    t = PointSet(2, frozenset(pts))
    for x in extreme_points(t):
        cert = translate_witness(t, f, x)
        assert cert.verified


def test_translate_witness_noncanonical_family():
    f = VectorFamily(2, ((1, 0), (0, 1)), label="axes")
    t = enumerate_psum(f)
    for x in extreme_points(t):
        cert = translate_witness(t, f, x)
        assert cert.verified


def test_certificate_document():
    f = canonical_family(2)
    t = enumerate_psum(f)
    x = extreme_points(t)[0]
    doc = translate_witness(t, f, x).as_dict()
    assert doc["verified"]
    assert doc["x"] == list(x)
    assert doc["T_size"] == len(t)


def test_replay_detects_tampering():
    f = canonical_family(2)
    t = enumerate_psum(f)
    cert = translate_witness(t, f, extreme_points(t)[0])
    cert.translate = vadd(cert.translate, (1, 0))
    assert not cert.replay()


def test_random_vclosed_properties():
    f = canonical_family(2)
    for seed in range(10):
        t = random_vclosed(f, seed)
        ok, _ = is_vclosed(t, f)
        assert ok
        assert len(t) >= len(enumerate_psum(f))
        assert t.meta["seed"] == seed


def test_random_vclosed_reproducible():
    f = canonical_family(3)
    assert random_vclosed(f, 5).points == random_vclosed(f, 5).points


def test_witness_sweep_seeded():
    f = canonical_family(2)
    for seed in range(5):
        t = random_vclosed(f, seed)
        for x in extreme_points(t):
            a = exposed_normal(t, x)
            if a is None:
                continue
            cert = translate_witness(t, f, x)
            assert cert.verified
