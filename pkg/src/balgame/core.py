"""Exact integer lattice primitives.

Vectors are plain tuples of Python ints (or Fractions where halves are
needed), so all arithmetic is exact with no overflow.  A VectorFamily is
an ordered, duplicate-free list of pairwise non-parallel vectors; a
PointSet is a finite set of lattice points of a common dimension.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

MAX_DIM = 24  # widths go up to 2^n; reject anything wider than desk scale


class DimensionError(ValueError):
    pass


class SizeLimitError(RuntimeError):
    pass


class DegenerateNormalError(ValueError):
    def __init__(self, members):
        self.members = list(members)
        super().__init__("direction orthogonal to members %s" % (self.members,))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def smul(s, u):
    return tuple(s * a for a in u)


def vdot(u, v):
    return sum(a * b for a, b in zip(u, v))


def zero(n):
    return (0,) * n


def is_parallel(u, v):
    """Exact parallelism test: u_i v_j == u_j v_i for all i < j."""
    n = len(u)
    for i in range(n):
        for j in range(i + 1, n):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


@dataclass(frozen=True)
class VectorFamily:
    dim: int
    members: tuple
    label: str = ""
    strict: bool = True

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("dimension must be >= 1, got %d" % self.dim)
        for v in self.members:
            if len(v) != self.dim:
                raise DimensionError("member %s has wrong dimension" % (v,))
        if len(set(self.members)) != len(self.members):
            raise ValueError("duplicate members in family")
        if self.strict:
            for v in self.members:
                if all(a == 0 for a in v):
                    raise ValueError("zero vector in strict family")
            # the pairwise test is quadratic; run it eagerly only at desk
            # size (larger strict families come from constructors whose
            # members are non-parallel by construction; validate() is
            # available for an explicit check)
            if len(self.members) <= 256:
                self.validate()

    def validate(self):
        ms = self.members
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                if is_parallel(ms[i], ms[j]):
                    raise ValueError(
                        "parallel members %s, %s" % (ms[i], ms[j]))
        return True

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def index(self, v):
        return self.members.index(v)


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: frozenset
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.dim:
                raise DimensionError("point %s has wrong dimension" % (p,))

    def __len__(self):
        return len(self.points)

    def __contains__(self, p):
        return p in self.points

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class SignAssignment:
    family: VectorFamily
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != len(self.family.members):
            raise ValueError("one sign per family member required")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be -1 or +1")

    def sign_of(self, v):
        return self.signs[self.family.index(v)]

    def positive_subset(self):
        """S0 = {v : eps_v = +1}."""
        return tuple(v for v, s in zip(self.family.members, self.signs)
                     if s == 1)

    def signed_sum(self):
        n = self.family.dim
        total = zero(n)
        for v, s in zip(self.family.members, self.signs):
            total = vadd(total, smul(s, v))
        return total


def canonical_family(n):
    """All 2^(n-1) vectors with v_1 = +1 and the rest in {-1,+1}.

    Members are ordered by the (+1 first) pattern of the trailing
    coordinates, so the all-ones vector comes first.
    """
    if n < 1:
        raise DimensionError("invalid dimension %d" % n)
    if n > MAX_DIM:
        raise DimensionError("dimension %d exceeds supported range %d"
                             % (n, MAX_DIM))
    members = tuple((1,) + rest for rest in product((1, -1), repeat=n - 1))
    return VectorFamily(n, members, label="canonical(%d)" % n)


def family_sum(f):
    total = zero(f.dim)
    for v in f:
        total = vadd(total, v)
    return total


def center(f):
    """g(V) = half the member sum, as exact Fractions."""
    return tuple(Fraction(a, 2) for a in family_sum(f))


def enumerate_psum(f, cap=10**7):
    """All distinct subset sums of the family, by set doubling."""
    pts = {zero(f.dim)}
    for k, v in enumerate(f):
        pts |= {vadd(p, v) for p in pts}
        if len(pts) > cap:
            raise SizeLimitError(
                "subset-sum set exceeded cap %d at member %d" % (cap, k))
    return PointSet(f.dim, frozenset(pts),
                    meta={"family": f.label, "kind": "psum"})


def zonotope_vertex(f, a):
    """The vertex of conv P(V) with outer normal a: sum of members with
    a.v > 0.  Requires a.v != 0 for every member."""
    degenerate = [v for v in f if vdot(a, v) == 0]
    if degenerate:
        raise DegenerateNormalError(degenerate)
    total = zero(f.dim)
    for v in f:
        if vdot(a, v) > 0:
            total = vadd(total, v)
    return total


def family_width(f, i):
    """Width of P(V) in direction e_i: sum of |v_i| over members."""
    return sum(abs(v[i]) for v in f)


def lattice_member(u):
    """Membership in the middle-layer lattice L: coordinate sum 0 and
    all coordinates of the same parity."""
    if sum(u) != 0:
        return False
    parities = {a % 2 for a in u}
    return len(parities) <= 1


# --- family file format -------------------------------------------------
# first line: "dim n"; then one vector per line, either comma-separated
# integers or a 0/1 string (0 -> -1, 1 -> +1).

def bits_to_vector(bits):
    return tuple(1 if c == "1" else -1 for c in bits)


def vector_to_bits(v):
    if any(a not in (-1, 1) for a in v):
        raise ValueError("not a +-1 vector: %s" % (v,))
    return "".join("1" if a == 1 else "0" for a in v)


def parse_family(text, label="", strict=True):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("dim"):
        raise ValueError("family file must start with 'dim n'")
    n = int(lines[0].split()[1])
    members = []
    for ln in lines[1:]:
        if "," in ln:
            v = tuple(int(x) for x in ln.split(","))
        else:
            v = bits_to_vector(ln)
        if len(v) != n:
            raise DimensionError("vector %s does not have dimension %d"
                                 % (v, n))
        members.append(v)
    return VectorFamily(n, tuple(members), label=label, strict=strict)


def format_family(f):
    lines = ["dim %d" % f.dim]
    for v in f:
        lines.append(",".join(str(a) for a in v))
    return "\n".join(lines) + "\n"


def parse_pointset(text, n=None):
    pts = set()
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        p = tuple(int(x) for x in ln.split(","))
        if n is None:
            n = len(p)
        pts.add(p)
    if n is None:
        raise ValueError("empty point set and no dimension given")
    return PointSet(n, frozenset(pts))


def format_pointset(ps):
    lines = [",".join(str(a) for a in p) for p in sorted(ps.points)]
    return "\n".join(lines) + "\n"
