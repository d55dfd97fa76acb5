"""Sign-assignment constructions for the canonical family.

Builds Chooser's explicit translate for every n: majority signs off the
middle layer, and a balanced signing of the middle layer itself.  The
middle-layer signing goes through either a rotation-orbit decomposition
plus backtracking search (small n) or a greedy pair system, an exact
linear-algebraic partial coloring, and a pair-wise expression step
(large n).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .core import (SignAssignment, VectorFamily, canonical_family, center,
                   lattice_member, smul, vadd, vneg, vsub, zero)
from .threshold import critical_M, is_power_of_two


class ConstructionError(AssertionError):
    """An asserted postcondition of a construction failed; indicates an
    arithmetic bug, never an expected runtime condition."""


class NotExpressibleError(ValueError):
    pass


class UnsatisfiableError(RuntimeError):
    pass


def odd_signs(n):
    """Majority signs for odd n: the signed sum is C(n-1,(n-1)/2) * 1."""
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and >= 3, got %s" % n)
    f = canonical_family(n)
    signs = tuple(1 if sum(v) > 0 else -1 for v in f)
    sa = SignAssignment(f, signs)
    expect = (comb(n - 1, (n - 1) // 2),) * n
    if sa.signed_sum() != expect:
        raise ConstructionError("majority signed sum mismatch for n=%d" % n)
    return sa


def middle_layer(n):
    """Canonical members with coordinate sum 0; size C(n-1, n/2)."""
    if n % 2 != 0:
        raise ValueError("middle layer needs even n, got %s" % n)
    f = canonical_family(n)
    members = tuple(v for v in f if sum(v) == 0)
    return VectorFamily(n, members, label="middle_layer(%d)" % n)


def rotate(v):
    return v[1:] + v[:1]


@dataclass(frozen=True)
class Orbit:
    representative: tuple
    members: tuple
    self_negating: bool


def orbit_decompose(n):
    """Rotation orbits of the doubled middle layer V0 u -V0."""
    v0 = middle_layer(n).members
    pool = sorted(set(v0) | {vneg(v) for v in v0})
    seen = set()
    orbits = []
    for v in pool:
        if v in seen:
            continue
        cyc = [v]
        u = rotate(v)
        while u != v:
            cyc.append(u)
            u = rotate(u)
        rep = min(cyc)
        k = cyc.index(rep)
        cyc = cyc[k:] + cyc[:k]
        seen.update(cyc)
        total = zero(n)
        for c in cyc:
            total = vadd(total, c)
        if total != zero(n):
            raise ConstructionError("orbit of %s does not sum to 0" % (v,))
        orbits.append(Orbit(rep, tuple(cyc), vneg(rep) in cyc))
    orbits.sort(key=lambda o: o.representative)
    return orbits


# --- backtracking sign search over negation-closed vector lists ---------

def _pack_pairs(vs):
    """One representative per {v, -v} pair, in first-seen order."""
    reps = []
    seen = set()
    for v in vs:
        if v in seen or vneg(v) in seen:
            continue
        seen.add(v)
        reps.append(v)
    return reps


def _search_reps(reps, target, node_budget=4 * 10 ** 6):
    """Find eps in {-1,+1}^k with sum eps_j reps[j] = target, by
    backtracking with coordinate-interval and parity pruning.  All reps
    are +-1 vectors, so each remaining vector moves every coordinate by
    exactly one; that makes both prunes exact."""
    n = len(target)
    k = len(reps)
    partial = list(target)  # residual target: what remains to be hit
    signs = [0] * k
    nodes = 0

    def feasible(depth):
        rem = k - depth
        for i in range(n):
            r = partial[i]
            if abs(r) > rem or (r - rem) % 2 != 0:
                return False
        return True

    def go(depth):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise UnsatisfiableError("node budget exhausted")
        if depth == k:
            return all(a == 0 for a in partial)
        if not feasible(depth):
            return False
        v = reps[depth]
        for s in (1, -1):
            for i in range(n):
                partial[i] -= s * v[i]
            signs[depth] = s
            if go(depth + 1):
                return True
            for i in range(n):
                partial[i] += s * v[i]
        signs[depth] = 0
        return False

    if go(0):
        return list(signs)
    return None


def _search_reps_mitm(reps, target):
    """Meet-in-the-middle fallback: subset-sum after the substitution
    sum eps_j r_j = -sum r_j + 2 * sum_{j in S} r_j."""
    n = len(target)
    base = zero(n)
    for r in reps:
        base = vadd(base, r)
    need2 = vsub(target, smul(-1, base))
    if any(a % 2 for a in need2):
        return None
    need = tuple(a // 2 for a in need2)  # want sum over S of reps = need

    half = len(reps) // 2
    left, right = reps[:half], reps[half:]

    # left side keeps one mask per distinct sum (first found); the right
    # side probes for the complementary sum
    lsums = {}
    all_left = [(zero(n), 0)]
    for j, v in enumerate(left):
        all_left += [(vadd(s, v), m | (1 << j)) for s, m in all_left]
    for s, m in all_left:
        if s not in lsums:
            lsums[s] = m
    all_right = [(zero(n), 0)]
    for j, v in enumerate(right):
        all_right += [(vadd(s, v), m | (1 << j)) for s, m in all_right]
    for s, rm in all_right:
        lneed = vsub(need, s)
        if lneed in lsums:
            lm = lsums[lneed]
            signs = []
            for j in range(len(left)):
                signs.append(1 if lm & (1 << j) else -1)
            for j in range(len(right)):
                signs.append(1 if rm & (1 << j) else -1)
            return signs
    return None


def search_signs(vs, target):
    """Antisymmetric signs over a negation-closed vector list summing to
    `target` (the zero vector or 2w).  Returns {v: eps_v}."""
    vs = list(vs)
    vset = set(vs)
    for v in vs:
        if vneg(v) not in vset:
            raise ValueError("input not closed under negation at %s" % (v,))
    reps = _pack_pairs(vs)
    if any(a % 2 for a in target):
        raise UnsatisfiableError("target has odd coordinates")
    half_target = tuple(a // 2 for a in target)
    # sum over pairs of eps_r * 2r = target  <=>  sum eps_r r = target/2
    try:
        signs = _search_reps(reps, half_target)
    except UnsatisfiableError:
        signs = None
    if signs is None:
        signs = _search_reps_mitm(reps, half_target)
    if signs is None:
        raise UnsatisfiableError("no antisymmetric signing reaches %s"
                                 % (target,))
    out = {}
    for r, s in zip(reps, signs):
        out[r] = s
        out[vneg(r)] = -s
    total = zero(len(target))
    for v in vs:
        total = vadd(total, smul(out[v], v))
    if total != tuple(target):
        raise ConstructionError("sign search postcondition failed")
    return out


# --- greedy pair system -------------------------------------------------

@dataclass
class PairSystem:
    n: int
    R: int
    pairs: dict  # (i, j) -> (v_plus, v_minus), i in 2..n, j in 1..R
    w: tuple

    def vectors(self):
        out = []
        for key in sorted(self.pairs):
            vp, vm = self.pairs[key]
            out.append(vp)
            out.append(vm)
        out.append(self.w)
        return out

    def validate(self):
        seen = set()
        for (i, _j), (vp, vm) in self.pairs.items():
            diff = vsub(vp, vm)
            expect = tuple(2 if k == 0 else (-2 if k == i - 1 else 0)
                           for k in range(self.n))
            if diff != expect:
                raise ConstructionError("pair (%s) difference wrong" % (i,))
            for v in (vp, vm):
                if sum(v) != 0 or any(a not in (-1, 1) for a in v):
                    raise ConstructionError("pair vector outside V0+-")
                if v in seen or vneg(v) in seen:
                    raise ConstructionError("pair vectors not (~)-distinct")
                seen.add(v)
        if self.w in seen or vneg(self.w) in seen:
            raise ConstructionError("w collides with pair vectors")
        if sum(self.w) != 0:
            raise ConstructionError("w outside V0+-")


def greedy_pairs(n, R):
    """Greedy pair system: for each coordinate i>=2 and each of
    R rounds, a vector with first coordinate +1 and i-th coordinate -1
    (balanced elsewhere) plus its partner with those two flipped."""
    if n % 2 != 0 or n < 4:
        raise ValueError("n must be even and >= 4")
    if comb(n - 2, (n - 2) // 2) <= 4 * R * (n - 1):
        raise ValueError(
            "pair-count bound fails: C(%d,%d)=%d <= %d; use the small-n path"
            % (n - 2, (n - 2) // 2, comb(n - 2, (n - 2) // 2),
               4 * R * (n - 1)))
    chosen = set()

    def candidates(i):
        # free positions: all but coordinate 1 and coordinate i (1-based)
        free = [k for k in range(n) if k not in (0, i - 1)]
        for plus_pos in combinations(free, (n - 2) // 2):
            v = [-1] * n
            v[0] = 1
            v[i - 1] = -1
            for k in plus_pos:
                v[k] = 1
            yield tuple(v)

    def flip(v, i):
        u = list(v)
        u[0] = -u[0]
        u[i - 1] = -u[i - 1]
        return tuple(u)

    pairs = {}
    for i in range(2, n + 1):
        for j in range(1, R + 1):
            for vp in candidates(i):
                vm = flip(vp, i)
                if (vp in chosen or vneg(vp) in chosen
                        or vm in chosen or vneg(vm) in chosen):
                    continue
                pairs[(i, j)] = (vp, vm)
                chosen.add(vp)
                chosen.add(vm)
                break
            else:
                raise ConstructionError(
                    "greedy pair search exhausted at (%d,%d)" % (i, j))
    w = None
    for v in middle_layer(n):
        if v not in chosen and vneg(v) not in chosen:
            w = v
            break
    if w is None:
        raise ConstructionError("no free vector left for w")
    ps = PairSystem(n, R, pairs, w)
    ps.validate()
    return ps


# --- exact partial coloring --------------------------------------------

def _kernel_vector(cols, n):
    """A nonzero rational kernel vector of the n x m matrix with the
    given columns (m > rank guaranteed by m = n+1)."""
    m = len(cols)
    a = [[Fraction(cols[j][i]) for j in range(m)] for i in range(n)]
    pivots = []  # (row, col)
    row = 0
    for col in range(m):
        sel = None
        for r in range(row, n):
            if a[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        a[row], a[sel] = a[sel], a[row]
        pv = a[row][col]
        a[row] = [x / pv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col] != 0:
                fac = a[r][col]
                a[r] = [x - fac * y for x, y in zip(a[r], a[row])]
        pivots.append((row, col))
        row += 1
        if row == n:
            break
    pivot_cols = {c for _r, c in pivots}
    free = next(c for c in range(m) if c not in pivot_cols)
    k = [Fraction(0)] * m
    k[free] = Fraction(1)
    for r, c in pivots:
        k[c] = -a[r][free]
    return k


def partial_color(vs):
    """Signs for +-1 vectors with signed sum bounded by n in every
    coordinate, via an exact fractional kernel walk.

    Coefficients start at 0 and walk along rational kernel directions of
    the active columns until they freeze at +-1; at most n stay
    fractional at the end and rounding them perturbs each coordinate by
    at most 1 each, so the infinity norm of the result is at most n.  A
    final greedy flip pass shrinks it further when it can.
    """
    vs = [tuple(v) for v in vs]
    if not vs:
        return [], zero(0)
    n = len(vs[0])
    big_n = len(vs)
    for v in vs:
        if any(a not in (-1, 1) for a in v):
            raise ValueError("partial_color expects +-1 vectors")
    lam = [Fraction(0)] * big_n
    frozen = {}
    pool = list(range(big_n))
    active = []
    while True:
        while pool and len(active) < n + 1:
            active.append(pool.pop(0))
        if len(active) <= n:
            break
        k = _kernel_vector([vs[j] for j in active], n)
        step = None
        for idx, j in enumerate(active):
            kj = k[idx]
            if kj == 0:
                continue
            t = (1 - lam[j]) / kj if kj > 0 else (-1 - lam[j]) / kj
            if step is None or t < step:
                step = t
        for idx, j in enumerate(active):
            lam[j] += step * k[idx]
        newly = [j for j in active if abs(lam[j]) == 1]
        for j in newly:
            frozen[j] = int(lam[j])
        active = [j for j in active if j not in frozen]
    for j in active:
        frozen[j] = 1 if lam[j] >= 0 else -1
    signs = [frozen[j] for j in range(big_n)]
    x = zero(n)
    for s, v in zip(signs, vs):
        x = vadd(x, smul(s, v))
    # greedy descent on the max-norm
    improved = True
    while improved:
        improved = False
        cur = max(abs(a) for a in x)
        for j in range(big_n):
            cand = vsub(x, smul(2 * signs[j], vs[j]))
            if max(abs(a) for a in cand) < cur:
                x = cand
                signs[j] = -signs[j]
                improved = True
                break
    if max(abs(a) for a in x) > n:
        raise ConstructionError("partial coloring bound violated")
    return signs, x


# --- expression in a pair system ---------------------------------------

def pair_system_center(ps):
    total = zero(ps.n)
    for v in ps.vectors():
        total = vadd(total, v)
    return tuple(Fraction(a, 2) for a in total)


def express_in_pairs(target, ps):
    """Subset of the pair system's vectors summing to `target`.

    Works through the normal form a_2(e1-e2)+...+a_n(e1-en) +- w/2 of
    target - g(U): the w sign is forced by parity, each a_i is read off
    coordinate i, and (R+a_i)/2 pairs get the positive orientation.
    """
    n, big_r = ps.n, ps.R
    target = tuple(target)
    int_target = []
    for a in target:
        fa = Fraction(a)
        if fa.denominator != 1:
            raise NotExpressibleError("target is not a lattice point")
        int_target.append(int(fa))
    int_target = tuple(int_target)
    if not lattice_member(int_target):
        raise NotExpressibleError("target %s not in the middle-layer lattice"
                                  % (int_target,))
    gu = pair_system_center(ps)
    t0 = tuple(Fraction(a) - b for a, b in zip(int_target, gu))
    solution = None
    for s in (1, -1):
        q = tuple(a - Fraction(s * c, 2) for a, c in zip(t0, ps.w))
        coeffs = [-q[i] for i in range(1, n)]  # a_i for i = 2..n
        if any(c.denominator != 1 for c in coeffs):
            continue
        coeffs = [int(c) for c in coeffs]
        if q[0] != sum(coeffs):
            continue
        if any(abs(c) > big_r or (c - big_r) % 2 != 0 for c in coeffs):
            continue
        solution = (s, coeffs)
        break
    if solution is None:
        raise NotExpressibleError(
            "target %s outside the expressible range of the pair system"
            % (int_target,))
    s, coeffs = solution
    subset = []
    for i in range(2, n + 1):
        a_i = coeffs[i - 2]
        npos = (big_r + a_i) // 2
        for j in range(1, big_r + 1):
            vp, vm = ps.pairs[(i, j)]
            subset.append(vp if j <= npos else vm)
    if s == 1:
        subset.append(ps.w)
    total = zero(n)
    for v in subset:
        total = vadd(total, v)
    if total != int_target:
        raise ConstructionError("expressed subset does not sum to target")
    return subset


# --- middle-layer balancing --------------------------------------------

def _pow2_defect_candidates(n):
    """Candidate defect vectors: n/4 coordinates at +3, the rest at -1.
    The patterns matching the bundled tables come first."""
    preferred = {4: [(0,)], 8: [(0, 4)]}
    seen = []
    for pos in preferred.get(n, []):
        seen.append(pos)
        yield tuple(3 if i in pos else -1 for i in range(n))
    for pos in combinations(range(n), n // 4):
        if pos in seen:
            continue
        yield tuple(3 if i in pos else -1 for i in range(n))


def _balance_small(n):
    """Small-n path: orbit decomposition plus sign search."""
    orbits = orbit_decompose(n)
    eps = {}
    done = set()
    selfneg = []
    for o in orbits:
        if o.self_negating:
            selfneg.extend(o.members)
            continue
        if o.representative in done:
            continue
        neg_members = {vneg(v) for v in o.members}
        for v in o.members:
            eps[v] = 1
        for v in neg_members:
            eps[v] = -1
        done.update(o.members)
        done.update(neg_members)
    if is_power_of_two(n):
        last_err = None
        for w in _pow2_defect_candidates(n):
            try:
                found = search_signs(selfneg, smul(2, w))
            except UnsatisfiableError as exc:
                last_err = exc
                continue
            eps.update(found)
            defect = w
            break
        else:
            raise ConstructionError("no admissible defect pattern for n=%d: %s"
                                    % (n, last_err))
    else:
        eps.update(search_signs(selfneg, zero(n)))
        defect = zero(n)
    return eps, defect


def _balance_pipeline(n, R, defect):
    """Greedy pairs + partial coloring + pair expression (large n)."""
    ps = greedy_pairs(n, R)
    v0 = middle_layer(n)
    class_of = {}
    for u in ps.vectors():
        rep = u if u[0] == 1 else vneg(u)
        class_of[rep] = u
    rest = [v for v in v0 if v not in class_of]
    pc_signs, x = partial_color(rest)
    y = vsub(defect, x)
    gu = pair_system_center(ps)
    target = tuple(g + Fraction(a, 2) for g, a in zip(gu, y))
    subset = set(express_in_pairs(target, ps))
    eps = {}
    for v, s in zip(rest, pc_signs):
        eps[v] = s
    for rep, u in class_of.items():
        chosen = u if u in subset else vneg(u)
        eps[rep] = 1 if chosen == rep else -1
    return eps, defect


def balance_middle(n):
    """Signs over the middle layer with signed sum equal to the defect:
    zero unless n is a power of two, where the defect has n/4
    coordinates at +3 and the rest at -1."""
    if n % 2 != 0 or n < 2:
        raise ValueError("n must be even and >= 2, got %s" % n)
    if n == 2:
        # single middle-layer vector (1,-1); sign -1 keeps the translate
        # shift within the w_i <= 1 regime
        f = middle_layer(2)
        sa = SignAssignment(f, (-1,))
        return sa, (-1, 1)
    pow2 = is_power_of_two(n)
    if (pow2 and n < 16) or (not pow2 and n < 14):
        eps, defect = _balance_small(n)
    elif pow2:
        wprime = tuple(-3 if (i + 1) % 4 == 0 else 1 for i in range(n))
        eps, defect = _balance_pipeline(n, n // 2 + 2, vneg(wprime))
    else:
        eps, defect = _balance_pipeline(n, n // 2, zero(n))
    f = middle_layer(n)
    signs = tuple(eps[v] for v in f)
    sa = SignAssignment(f, signs)
    if sa.signed_sum() != tuple(defect):
        raise ConstructionError("middle-layer defect mismatch for n=%d" % n)
    return sa, tuple(defect)


_BALANCE_CACHE = {}


def balance_middle_cached(n):
    if n not in _BALANCE_CACHE:
        _BALANCE_CACHE[n] = balance_middle(n)
    return _BALANCE_CACHE[n]


# --- Chooser's explicit translate --------------------------------------

def chooser_translate(n):
    """The translate t and subset S0 with 0 = t + sum(S0), and the
    critical M for which t + P(V) fits in the region.

    Returns (t, s0, M) with t a tuple of exact Fractions.
    """
    if n < 2:
        raise ValueError("n must be >= 2, got %s" % n)
    f = canonical_family(n)
    m = critical_M(n).m_crit
    g = center(f)
    if n % 2 == 1:
        c = comb(n - 1, (n - 1) // 2)
        sa = odd_signs(n)
        eps = dict(zip(f.members, sa.signs))
        shift = zero(n)
    else:
        c = comb(n - 1, n // 2)
        mid_sa, defect = balance_middle_cached(n)
        eps = {}
        for v in f:
            if sum(v) != 0:
                eps[v] = 1 if sum(v) > 0 else -1
        for v, s in zip(mid_sa.family.members, mid_sa.signs):
            eps[v] = s
        if is_power_of_two(n):
            wprime = vneg(defect)  # has w'_i <= 1
            if any(a > 1 for a in wprime):
                raise ConstructionError("defect pattern breaks the shift")
            shift = wprime
        else:
            shift = zero(n)
    half_c = Fraction(c, 2)
    t = tuple(-gi - half_c + Fraction(si, 2)
              for gi, si in zip(g, shift))
    s0 = tuple(v for v in f if eps[v] == 1)
    pos = t
    for v in s0:
        pos = vadd(pos, v)
    if tuple(pos) != tuple(Fraction(0) for _ in range(n)):
        raise ConstructionError("origin identity failed for n=%d" % n)
    # coordinate bound: max over t+P(V) of coordinate i must be <= M
    for i in range(n):
        peak = t[i] + sum(v[i] for v in f if v[i] > 0)
        if peak > m:
            raise ConstructionError(
                "translate exceeds the region in coordinate %d" % i)
    return t, s0, m
