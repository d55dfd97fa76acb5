from fractions import Fraction
from math import comb

import pytest

from balgame.balance import (NotExpressibleError, UnsatisfiableError,
                             balance_middle, balance_middle_cached,
                             chooser_translate, express_in_pairs,
                             greedy_pairs, middle_layer, odd_signs,
                             orbit_decompose, pair_system_center,
                             partial_color, rotate, search_signs)
from balgame.core import (canonical_family, enumerate_psum, smul, vadd,
                          vneg, zero)
from balgame.fixtures import TABLE_W, fixture_rows


def signed_sum(rows):
    total = zero(len(rows[0][1]))
    for s, v in rows:
        total = vadd(total, smul(s, v))
    return total


def test_odd_signs():
    for n in (3, 5, 7):
        sa = odd_signs(n)
        c = comb(n - 1, (n - 1) // 2)
        assert sa.signed_sum() == (c,) * n
    with pytest.raises(ValueError):
        odd_signs(4)


def test_middle_layer():
    for n in (2, 4, 6, 8):
        ml = middle_layer(n)
        assert len(ml) == comb(n - 1, n // 2)
        assert all(sum(v) == 0 and v[0] == 1 for v in ml)
    with pytest.raises(ValueError):
        middle_layer(5)


def test_rotate():
    assert rotate((1, 2, 3)) == (2, 3, 1)


def test_orbit_decompose_partition():
    for n in (4, 6, 8):
        orbits = orbit_decompose(n)
        all_members = [v for o in orbits for v in o.members]
        v0 = set(middle_layer(n).members)
        pool = v0 | {vneg(v) for v in v0}
        assert sorted(all_members) == sorted(pool)
        for o in orbits:
            assert o.representative == min(o.members)
            assert o.self_negating == (vneg(o.representative) in o.members)
            assert signed_sum([(1, v) for v in o.members]) == zero(n)


def test_search_signs_zero_target():
    n = 6
    orbits = orbit_decompose(n)
    selfneg = [v for o in orbits if o.self_negating for v in o.members]
    eps = search_signs(selfneg, zero(n))
    assert signed_sum([(eps[v], v) for v in selfneg]) == zero(n)
    for v in selfneg:
        assert eps[vneg(v)] == -eps[v]


def test_search_signs_nonzero_target():
    n = 4
    pool = sorted(set(middle_layer(n).members)
                  | {vneg(v) for v in middle_layer(n).members})
    target = (6, -2, -2, -2)
    eps = search_signs(pool, target)
    assert signed_sum([(eps[v], v) for v in pool]) == target


def test_search_signs_errors():
    with pytest.raises(ValueError):
        search_signs([(1, -1)], (0, 0))  # not negation-closed
    with pytest.raises(UnsatisfiableError):
        search_signs([(1, -1), (-1, 1)], (1, 1))  # odd target
    with pytest.raises(UnsatisfiableError):
        search_signs([(1, -1), (-1, 1)], (2, 2))  # unreachable


def test_partial_color_bound():
    vs = list(middle_layer(8).members)
    signs, x = partial_color(vs)
    assert all(s in (-1, 1) for s in signs)
    assert signed_sum(list(zip(signs, vs))) == x
    assert max(abs(a) for a in x) <= 8


def test_partial_color_trivial():
    signs, x = partial_color([(1, 1), (1, -1)])
    assert len(signs) == 2
    assert max(abs(a) for a in x) <= 2
    assert partial_color([]) == ([], ())


def test_partial_color_rejects_general_vectors():
    with pytest.raises(ValueError):
        partial_color([(2, 0)])


def test_greedy_pairs():
    ps = greedy_pairs(14, 7)
    assert len(ps.pairs) == 13 * 7
    ps.validate()
    assert sum(ps.w) == 0
    with pytest.raises(ValueError):
        greedy_pairs(6, 3)  # bound fails, small-n path territory


def test_express_in_pairs_roundtrip():
    ps = greedy_pairs(14, 7)
    g = pair_system_center(ps)
    # the center shifted by a small lattice move stays expressible
    target = tuple(a + b for a, b in
                   zip(g, (Fraction(1), Fraction(-1)) + (Fraction(0),) * 12))
    try:
        subset = express_in_pairs(target, ps)
    except NotExpressibleError:
        subset = None
    if subset is not None:
        assert signed_sum([(1, v) for v in subset]) == \
            tuple(int(a) for a in target)
    with pytest.raises(NotExpressibleError):
        express_in_pairs((Fraction(1, 2),) * 14, ps)


def test_balance_middle_defects():
    for n, want in ((2, (-1, 1)), (4, (3, -1, -1, -1)),
                    (6, zero(6)), (8, (3, -1, -1, -1, 3, -1, -1, -1)),
                    (10, zero(10)), (12, zero(12))):
        sa, defect = balance_middle_cached(n)
        assert defect == tuple(want), n
        assert sa.signed_sum() == tuple(want), n
        assert len(sa.signs) == comb(n - 1, n // 2)


def test_balance_middle_errors():
    with pytest.raises(ValueError):
        balance_middle(3)
    with pytest.raises(ValueError):
        balance_middle(0)


def test_balance_cache_identity():
    assert balance_middle_cached(6) is balance_middle_cached(6)


def test_fixture_tables_regression():
    for n, rows in ((4, fixture_rows(4)), (6, fixture_rows(6)),
                    (8, fixture_rows(8)), (10, fixture_rows(10)),
                    (12, fixture_rows(12))):
        want = smul(2, TABLE_W[n]) if n in TABLE_W else zero(n)
        assert signed_sum(rows) == want, n
        # antisymmetry: -v appears with the opposite sign
        table = {v: s for s, v in rows}
        assert len(table) == len(rows)
        for v, s in table.items():
            assert table[vneg(v)] == -s, (n, v)


def test_chooser_translate_n2():
    t, s0, m = chooser_translate(2)
    assert t == (Fraction(-1), Fraction(-1))
    assert s0 == ((1, 1),)
    assert m == 1


def test_chooser_translate_origin_identity():
    for n in range(2, 9):
        t, s0, m = chooser_translate(n)
        pos = t
        for v in s0:
            pos = vadd(pos, v)
        assert tuple(pos) == (Fraction(0),) * n, n


def test_chooser_translate_containment_small():
    for n in (2, 3, 4):
        f = canonical_family(n)
        t, _s0, m = chooser_translate(n)
        for u in enumerate_psum(f):
            q = vadd(t, u)
            assert all(a <= m for a in q), (n, u)


def test_chooser_translate_tight():
    # some coordinate peak gets within one of the boundary, otherwise M
    # would not be critical
    for n in (3, 4, 6):
        f = canonical_family(n)
        t, _s0, m = chooser_translate(n)
        peak = max(t[i] + sum(v[i] for v in f if v[i] > 0)
                   for i in range(n))
        assert m - 1 < peak <= m, n
