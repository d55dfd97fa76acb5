"""Red/Blue coloring of the m-subsets of [2m].

Representatives are the m-sets containing 1; their incidence vectors
are exactly the canonical middle layer in dimension 2m, so the balanced
middle-layer signing colors them.  Complements always receive the
opposite color, and the per-element Red/Blue tallies are recounted
independently for verification.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .balance import balance_middle_cached
from .threshold import is_power_of_two


def incidence_vector(a, m):
    """+-1 vector of length 2m: +1 on the members of the m-set a."""
    a = frozenset(a)
    if len(a) != m:
        raise ValueError("need an m-set, got %d elements" % len(a))
    if not a <= set(range(1, 2 * m + 1)):
        raise ValueError("elements must lie in [2m]")
    return tuple(1 if i in a else -1 for i in range(1, 2 * m + 1))


def set_of_vector(v):
    return frozenset(i + 1 for i, a in enumerate(v) if a == 1)


@dataclass
class Coloring:
    m: int
    colors: dict  # frozenset -> "R" | "B", all C(2m,m) sets
    red_counts: tuple   # R(i) for i = 1..2m
    blue_counts: tuple  # B(i)

    def defect(self):
        return tuple(r - b for r, b in zip(self.red_counts,
                                           self.blue_counts))


def color_msets(m):
    if m < 2:
        raise ValueError("m must be >= 2, got %s" % m)
    n = 2 * m
    sa, _defect = balance_middle_cached(n)
    colors = {}
    for v, s in zip(sa.family.members, sa.signs):
        a = set_of_vector(v)
        colors[a] = "R" if s == 1 else "B"
        comp = frozenset(range(1, n + 1)) - a
        colors[comp] = "B" if s == 1 else "R"
    red = [0] * n
    blue = [0] * n
    for a, col in colors.items():
        for i in a:
            if col == "R":
                red[i - 1] += 1
            else:
                blue[i - 1] += 1
    return Coloring(m, colors, tuple(red), tuple(blue))


def verify_coloring(c):
    """Independent re-verification from the color map alone."""
    m = c.m
    n = 2 * m
    ground = frozenset(range(1, n + 1))
    report = {"m": m, "violations": [], "defect": None, "defect_class": None,
              "mod4_constant": None, "ok": False}
    expected_sets = comb(n, m)
    if len(c.colors) != expected_sets:
        report["violations"].append(
            "expected %d colored sets, found %d"
            % (expected_sets, len(c.colors)))
    for a in combinations(range(1, n + 1), m):
        fa = frozenset(a)
        if fa not in c.colors:
            report["violations"].append("missing set %s" % sorted(fa))
            continue
        if c.colors.get(ground - fa) == c.colors[fa]:
            report["violations"].append(
                "complementary pair %s colored alike" % sorted(fa))
    red = [0] * n
    blue = [0] * n
    for a, col in c.colors.items():
        for i in a:
            (red if col == "R" else blue)[i - 1] += 1
    if tuple(red) != c.red_counts or tuple(blue) != c.blue_counts:
        report["violations"].append("stored tallies disagree with recount")
    per_elem = comb(n - 1, m - 1)
    for i in range(n):
        if red[i] + blue[i] != per_elem:
            report["violations"].append(
                "element %d appears in %d sets, expected %d"
                % (i + 1, red[i] + blue[i], per_elem))
    defect = tuple(r - b for r, b in zip(red, blue))
    report["defect"] = defect
    residues = {d % 4 for d in defect}
    report["mod4_constant"] = len(residues) <= 1
    if not report["mod4_constant"]:
        report["violations"].append("R(i)-B(i) mod 4 varies across elements")
    if all(d == 0 for d in defect):
        report["defect_class"] = "balanced"
        if is_power_of_two(m):
            report["violations"].append(
                "balanced defect impossible for a power of two")
    elif (sorted(defect).count(3) == m // 2
          and sorted(defect).count(-1) == 3 * m // 2
          and set(defect) <= {3, -1}):
        report["defect_class"] = "power-of-2 pattern"
    else:
        report["defect_class"] = "other"
        report["violations"].append("defect %s matches no expected pattern"
                                    % (defect,))
    report["ok"] = not report["violations"]
    return report


def format_design(c):
    """One line per m-set: comma-separated members, then R or B."""
    lines = []
    for a in sorted(c.colors, key=sorted):
        lines.append("%s %s" % (",".join(str(i) for i in sorted(a)),
                                c.colors[a]))
    return "\n".join(lines) + "\n"
