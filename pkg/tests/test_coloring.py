from itertools import combinations
from math import comb

import pytest

from balgame.coloring import (Coloring, color_msets, format_design,
                              incidence_vector, set_of_vector,
                              verify_coloring)


def test_incidence_vector():
    assert incidence_vector({1, 3}, 2) == (1, -1, 1, -1)
    assert set_of_vector((1, -1, 1, -1)) == frozenset({1, 3})
    with pytest.raises(ValueError):
        incidence_vector({1, 2, 3}, 2)
    with pytest.raises(ValueError):
        incidence_vector({0, 1}, 2)


def test_color_msets_m2():
    c = color_msets(2)
    assert len(c.colors) == comb(4, 2)
    rep = verify_coloring(c)
    assert rep["ok"], rep["violations"]
    assert rep["defect_class"] == "power-of-2 pattern"


def test_color_msets_m3_balanced():
    c = color_msets(3)
    rep = verify_coloring(c)
    assert rep["ok"], rep["violations"]
    assert rep["defect_class"] == "balanced"
    assert c.defect() == (0,) * 6


def test_complements_opposite():
    c = color_msets(3)
    ground = frozenset(range(1, 7))
    for a in c.colors:
        assert c.colors[a] != c.colors[ground - a]


def test_per_element_count():
    c = color_msets(3)
    per = comb(5, 2)
    for r, b in zip(c.red_counts, c.blue_counts):
        assert r + b == per


def test_mod4_constancy():
    for m in (2, 3, 4):
        rep = verify_coloring(color_msets(m))
        assert rep["mod4_constant"], m


def test_verify_catches_bad_tally():
    c = color_msets(2)
    bad = Coloring(2, c.colors, tuple(r + 1 for r in c.red_counts),
                   c.blue_counts)
    rep = verify_coloring(bad)
    assert not rep["ok"]
    assert any("recount" in v for v in rep["violations"])


def test_verify_catches_like_colored_complements():
    c = color_msets(2)
    colors = dict(c.colors)
    a = frozenset({1, 2})
    colors[a] = colors[frozenset({3, 4})]
    # recompute tallies so only the complement rule trips
    red = [0] * 4
    blue = [0] * 4
    for s, col in colors.items():
        for i in s:
            (red if col == "R" else blue)[i - 1] += 1
    rep = verify_coloring(Coloring(2, colors, tuple(red), tuple(blue)))
    assert not rep["ok"]
    assert any("complementary" in v for v in rep["violations"])


def test_verify_catches_missing_set():
    c = color_msets(2)
    colors = dict(c.colors)
    del colors[frozenset({1, 2})]
    rep = verify_coloring(Coloring(2, colors, c.red_counts, c.blue_counts))
    assert not rep["ok"]


def test_format_design():
    c = color_msets(2)
    text = format_design(c)
    lines = [ln for ln in text.splitlines() if ln]
    assert len(lines) == comb(4, 2)
    assert lines[0].split()[1] in ("R", "B")
    # every 2-set of [4] appears exactly once
    seen = {ln.split()[0] for ln in lines}
    want = {",".join(str(i) for i in sorted(a))
            for a in combinations(range(1, 5), 2)}
    assert seen == want


def test_color_msets_rejects_small_m():
    with pytest.raises(ValueError):
        color_msets(1)
