"""Small exact LP solver over Fractions (two-phase simplex, Bland's
rule).  Only meant for the dense, desk-scale programs the witness
checker needs; no floating point anywhere."""

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tab, basis, r, c):
    pv = tab[r][c]
    tab[r] = [x / pv for x in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            fac = tab[i][c]
            tab[i] = [x - fac * y for x, y in zip(tab[i], tab[r])]
    basis[r] = c


def _run(tab, basis, ncols):
    """Minimize, objective in the last row; Bland's rule throughout."""
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best[0] or \
                        (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(tab, basis, best[1], enter)


def simplex_max(c, a_ub, b_ub):
    """Maximize c.z subject to a_ub z <= b_ub, z >= 0.

    Returns (status, value, z).
    """
    m = len(a_ub)
    n = len(c)
    rows = [[Fraction(x) for x in row] for row in a_ub]
    rhs = [Fraction(x) for x in b_ub]
    # normalize to nonnegative rhs; flipped rows get surplus + artificial
    kinds = []
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            kinds.append("surplus")
        else:
            kinds.append("slack")
    n_art = sum(1 for k in kinds if k == "surplus")
    ncols = n + m + n_art
    tab = []
    basis = []
    art_cols = []
    ai = 0
    for i in range(m):
        row = [Fraction(0)] * ncols + [rhs[i]]
        for j in range(n):
            row[j] = rows[i][j]
        if kinds[i] == "slack":
            row[n + i] = Fraction(1)
            basis.append(n + i)
        else:
            row[n + i] = Fraction(-1)
            col = n + m + ai
            row[col] = Fraction(1)
            art_cols.append(col)
            basis.append(col)
            ai += 1
        tab.append(row)
    if art_cols:
        obj = [Fraction(0)] * (ncols + 1)
        for col in art_cols:
            obj[col] = Fraction(1)
        tab.append(obj)
        for i in range(m):
            if basis[i] in art_cols:
                tab[-1] = [x - y for x, y in zip(tab[-1], tab[i])]
        _run(tab, basis, ncols)
        if tab[-1][-1] != 0:
            return INFEASIBLE, None, None
        tab.pop()
        # pivot any artificial still in the basis out (or its row is redundant)
        for i in range(m):
            if basis[i] in art_cols:
                piv = next((j for j in range(n + m) if tab[i][j] != 0), None)
                if piv is not None:
                    _pivot(tab, basis, i, piv)
        # forbid artificials from re-entering
        for row in tab:
            for col in art_cols:
                row[col] = Fraction(0)
    obj = [Fraction(0)] * (ncols + 1)
    for j in range(n):
        obj[j] = -Fraction(c[j])
    tab.append(obj)
    for i in range(m):
        if tab[-1][basis[i]] != 0:
            fac = tab[-1][basis[i]]
            tab[-1] = [x - fac * y for x, y in zip(tab[-1], tab[i])]
    status = _run(tab, basis, n + m)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    z = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            z[basis[i]] = tab[i][-1]
    value = sum(Fraction(cj) * zj for cj, zj in zip(c, z))
    return OPTIMAL, value, z


def feasible_combination(points, x):
    """Is x a convex combination of the given points?  Returns the
    coefficient list or None.  Exact throughout."""
    if not points:
        return None
    n = len(x)
    m = len(points)
    # equality constraints as paired inequalities: sum lam = 1, sum lam*y = x
    a_ub = []
    b_ub = []
    ones = [Fraction(1)] * m
    a_ub.append(ones)
    b_ub.append(Fraction(1))
    a_ub.append([-v for v in ones])
    b_ub.append(Fraction(-1))
    for i in range(n):
        row = [Fraction(p[i]) for p in points]
        a_ub.append(row)
        b_ub.append(Fraction(x[i]))
        a_ub.append([-v for v in row])
        b_ub.append(-Fraction(x[i]))
    status, _val, lam = simplex_max([Fraction(0)] * m, a_ub, b_ub)
    if status != OPTIMAL:
        return None
    return lam
