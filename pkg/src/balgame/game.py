"""Game-side machinery for the balancing game.

The central object is the greatest fixed point of the deletion operator
on a finite window: repeatedly remove lattice points z for which some
family member v has both z+v and z-v already gone (out-of-window counts
as gone).  What survives is the unique maximal V-closed subset of the
window; the origin survives iff Chooser can win inside the window.
Deletion rounds give Pusher a rank-decreasing strategy.
"""

import random as _random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (PointSet, SizeLimitError, vadd, vsub, zero)

WINDOW_VOLUME_LIMIT = 10 ** 8


class NoWinningMoveError(RuntimeError):
    pass


class WindowEscape(RuntimeError):
    """Position left the analysis window below the region; the windowed
    strategy makes no claim there."""


@dataclass(frozen=True)
class GameRegion:
    dim: int
    upper_bounds: tuple  # x_i <= upper_bounds[i]

    def contains(self, z):
        return all(a <= m for a, m in zip(z, self.upper_bounds))

    def slack(self, z):
        return tuple(m - a for a, m in zip(z, self.upper_bounds))


@dataclass(frozen=True)
class Window:
    lo: tuple
    hi: tuple

    def __post_init__(self):
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError("empty window")

    @property
    def dim(self):
        return len(self.lo)

    def volume(self):
        vol = 1
        for a, b in zip(self.lo, self.hi):
            vol *= b - a + 1
        return vol

    def contains(self, z):
        return all(a <= c <= b for a, b, c in zip(self.lo, self.hi, z))


@dataclass
class SafeSetCertificate:
    window: Window
    family: object
    safe: PointSet
    rank: dict  # removed point -> (round, witnessing member)

    def as_dict(self):
        return {
            "family": self.family.label,
            "window": {"lo": list(self.window.lo), "hi": list(self.window.hi)},
            "safe_size": len(self.safe),
            "removed": len(self.rank),
        }


@dataclass
class Transcript:
    region: GameRegion
    initial: tuple
    rounds: list = field(default_factory=list)  # (v, eps, z_after)
    outcome: str = "survived"  # survived | escaped | left_window

    @property
    def final(self):
        return self.rounds[-1][2] if self.rounds else self.initial


def is_vclosed(t, f):
    """Check the closure condition on a finite point set.

    Returns (True, None) or (False, (z, v)) with the lexicographically
    first violating pair.
    """
    pts = t.points if isinstance(t, PointSet) else frozenset(t)
    for z in sorted(pts):
        for v in f:
            if vadd(z, v) not in pts and vsub(z, v) not in pts:
                return False, (z, v)
    return True, None


def maximal_vclosed_subset(window, f, volume_limit=WINDOW_VOLUME_LIMIT):
    """Greatest fixed point of the deletion operator on the window.

    Points are flattened to indices of a padded box so that z +- v is a
    constant index offset; padding cells are permanently dead.  Rounds
    are computed synchronously (all deletions of a round are judged
    against the set at the start of the round), so the rank table does
    not depend on iteration order.
    """
    n = window.dim
    if window.volume() > volume_limit:
        raise SizeLimitError("window volume %d exceeds limit %d"
                             % (window.volume(), volume_limit))
    margin = max(abs(a) for v in f for a in v) if len(f) else 1
    plo = tuple(a - margin for a in window.lo)
    sizes = tuple(b + margin - a + 1 for a, b in zip(plo, window.hi))
    strides = [1] * n
    for i in range(n - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    total = strides[0] * sizes[0]

    def encode(z):
        return sum((c - o) * s for c, o, s in zip(z, plo, strides))

    def decode(idx):
        coords = []
        for s, o in zip(strides, plo):
            c, idx = divmod(idx, s)
            coords.append(c + o)
        return tuple(coords)

    alive = bytearray(total)
    window_idx = []
    # enumerate window points without materializing tuples twice
    def fill(prefix, depth, base):
        if depth == n:
            alive[base] = 1
            window_idx.append(base)
            return
        lo, hi = window.lo[depth], window.hi[depth]
        for c in range(lo, hi + 1):
            fill(prefix, depth + 1, base + (c - plo[depth]) * strides[depth])
    fill((), 0, 0)

    offsets = [sum(a * s for a, s in zip(v, strides)) for v in f]

    rank = {}
    frontier = window_idx
    rnd = 0
    while frontier:
        rnd += 1
        deletions = []
        for z in frontier:
            if not alive[z] or z in rank:
                continue
            for vi, off in enumerate(offsets):
                if not alive[z + off] and not alive[z - off]:
                    deletions.append((z, vi))
                    break
        if not deletions:
            break
        next_frontier = set()
        for z, vi in deletions:
            rank[z] = (rnd, vi)
        for z, _vi in deletions:
            alive[z] = 0
        for z, _vi in deletions:
            for off in offsets:
                for nb in (z + off, z - off):
                    if 0 <= nb < total and alive[nb]:
                        next_frontier.add(nb)
        frontier = sorted(next_frontier)

    safe_pts = frozenset(decode(z) for z in window_idx if alive[z])
    rank_pts = {decode(z): (r, f.members[vi]) for z, (r, vi) in rank.items()}
    safe = PointSet(n, safe_pts, meta={"window": (window.lo, window.hi)})
    return SafeSetCertificate(window, f, safe, rank_pts)


def default_margin(f):
    """Window depth below the region bound.  For the canonical family a
    depth of 2^n + 2 provably covers Chooser's explicit witness."""
    return 2 ** f.dim + 2


@dataclass
class Verdict:
    winner: str  # chooser | pusher
    certificate: SafeSetCertificate
    window_relative: bool

    @property
    def origin_rank(self):
        return self.certificate.rank.get(zero(self.certificate.window.dim))

    def as_dict(self, strategy_sample=5):
        doc = self.certificate.as_dict()
        doc["verdict"] = self.winner
        doc["window_relative"] = self.window_relative
        if self.winner == "pusher":
            rnd, v = self.origin_rank
            doc["origin_rank"] = rnd
            sample = []
            for z in sorted(self.certificate.rank)[:strategy_sample]:
                r, w = self.certificate.rank[z]
                sample.append({"z": list(z), "rank": r, "offer": list(w)})
            doc["strategy_sample"] = sample
        return doc


def verdict(region, f, depth=None, volume_limit=WINDOW_VOLUME_LIMIT):
    """Windowed game verdict.  ChooserWins is sound unconditionally;
    PusherWins is relative to the window for non-canonical families."""
    n = region.dim
    if not region.contains(zero(n)):
        raise ValueError("region must contain the origin")
    if depth is None:
        depth = default_margin(f)
    window = Window(tuple(m - depth for m in region.upper_bounds),
                    tuple(region.upper_bounds))
    cert = maximal_vclosed_subset(window, f, volume_limit)
    if zero(n) in cert.safe:
        return Verdict("chooser", cert, window_relative=False)
    return Verdict("pusher", cert, window_relative=True)


class ChooserEngine:
    """Subset-state Chooser: the position is always t + sum(S).

    Offered v already in S -> answer -1 and drop it; otherwise answer
    +1 and add it.  The position never leaves t + P(V), so no
    membership test is ever needed.
    """

    def __init__(self, family, t, s0):
        self.family = family
        self.t = tuple(Fraction(a) for a in t)
        self.subset = set(s0)
        for v in self.subset:
            if v not in family.members:
                raise ValueError("subset member %s not in family" % (v,))

    def position(self):
        z = self.t
        for v in self.subset:
            z = vadd(z, v)
        return tuple(z)

    def respond(self, v):
        if v not in self.family.members:
            raise ValueError("offered vector %s not in family" % (v,))
        if v in self.subset:
            self.subset.discard(v)
            return -1
        self.subset.add(v)
        return 1


class PusherEngine:
    """Rank-following Pusher extracted from a deletion certificate."""

    def __init__(self, cert, region):
        self.cert = cert
        self.region = region

    def offer(self, z):
        if not self.region.contains(z):
            return None  # game already over
        if z in self.cert.safe:
            raise NoWinningMoveError("position %s is in the safe set" % (z,))
        if z not in self.cert.rank:
            raise WindowEscape("position %s outside the analysis window"
                               % (z,))
        _rnd, v = self.cert.rank[z]
        return v


class RandomPusher:
    def __init__(self, family, seed=0):
        self.family = family
        self.rng = _random.Random(seed)

    def offer(self, z):
        return self.rng.choice(self.family.members)


def simulate(region, f, chooser, pusher, rounds):
    """Play the game for at most `rounds` rounds and record everything.

    chooser: ChooserEngine or callable (v, z) -> eps.
    pusher: object with offer(z) -> v, or callable z -> v.
    """
    tr = Transcript(region, zero(region.dim))
    z = tr.initial
    for _ in range(rounds):
        if not region.contains(z):
            tr.outcome = "escaped"
            return tr
        offer = pusher.offer if hasattr(pusher, "offer") else pusher
        try:
            v = offer(z)
        except WindowEscape:
            tr.outcome = "left_window"
            return tr
        if v is None:
            tr.outcome = "escaped"
            return tr
        if hasattr(chooser, "respond"):
            eps = chooser.respond(v)
        else:
            eps = chooser(v, z)
        if eps not in (-1, 1):
            raise ValueError("chooser must answer -1 or +1")
        z = vadd(z, (eps * a for a in v))
        z = tuple(z)
        tr.rounds.append((v, eps, z))
    if not region.contains(z):
        tr.outcome = "escaped"
    return tr
