"""Integral convex polygons in the rank-degree plane.

A polygon here is the graph of a piecewise-linear concave function from
(0, 0) to (r, D) with integral vertices and strictly decreasing segment
slopes: the shape of a Harder-Narasimhan polygon.  This module provides
construction and canonical form, exact-rational slope and height queries,
the pointwise domination order, duals, exhaustive enumeration of the
shapes admissible for Frobenius pull-backs of semistable bundles, and the
extremal shape realised by direct images under Frobenius.

Heights and slopes are :class:`fractions.Fraction` values throughout; two
polygons are equal exactly when their canonical vertex chains coincide.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import require_prime
from .errors import (
    BadStart,
    EndpointMismatch,
    InvalidParameters,
    InvariantViolation,
    NotConvex,
)


def _segment_slopes(vertices) -> list[Fraction]:
    return [
        Fraction(y1 - y0, x1 - x0)
        for (x0, y0), (x1, y1) in zip(vertices, vertices[1:])
    ]


@dataclass(frozen=True)
class LatticePolygon:
    """Canonical vertex chain: starts at (0, 0), slopes strictly decreasing.

    Construction validates the canonical-form invariants; use
    :func:`make_polygon` to build one from a raw chain that may still
    contain collinear interior vertices.
    """

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        verts = tuple((int(a), int(b)) for a, b in self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise InvalidParameters("a polygon needs at least two vertices")
        if verts[0] != (0, 0):
            raise BadStart(f"polygon must start at (0, 0), got {verts[0]}")
        ranks = [a for a, _ in verts]
        if any(x >= y for x, y in zip(ranks, ranks[1:])):
            raise InvalidParameters("vertex ranks must strictly increase")
        segs = _segment_slopes(verts)
        for cur, nxt in zip(segs, segs[1:]):
            if nxt >= cur:
                raise NotConvex(
                    f"segment slopes must strictly decrease, got {segs}"
                )

    @property
    def endpoint(self) -> tuple[int, int]:
        return self.vertices[-1]

    @property
    def rank(self) -> int:
        return self.vertices[-1][0]

    @property
    def degree(self) -> int:
        return self.vertices[-1][1]

    def __str__(self) -> str:
        return "->".join(f"({a},{b})" for a, b in self.vertices)


@dataclass(frozen=True)
class PolygonSet:
    """A deduplicated, deterministically ordered family of polygons sharing
    the endpoint (r, p*d)."""

    polygons: tuple[LatticePolygon, ...]
    p: int
    g: int
    r: int
    d: int

    def __post_init__(self) -> None:
        end = (self.r, self.p * self.d)
        if any(pg.endpoint != end for pg in self.polygons):
            raise InvalidParameters(f"every member must end at {end}")
        if len(set(self.polygons)) != len(self.polygons):
            raise InvalidParameters("members must be pairwise distinct")

    def __iter__(self):
        return iter(self.polygons)

    def __len__(self) -> int:
        return len(self.polygons)

    def __contains__(self, pg) -> bool:
        return pg in self.polygons


def make_polygon(points) -> LatticePolygon:
    """Build a polygon from a vertex chain, dropping collinear interior points.

    The chain must start at (0, 0) with strictly increasing ranks; slopes
    must strictly decrease once collinear points are removed, otherwise
    :class:`NotConvex` is raised.
    """
    pts = [(int(a), int(b)) for a, b in points]
    if not pts:
        raise BadStart("empty vertex chain")
    kept: list[tuple[int, int]] = []
    for pt in pts:
        while len(kept) >= 2 and _cross(kept[-2], kept[-1], pt) == 0:
            kept.pop()
        kept.append(pt)
    return LatticePolygon(tuple(kept))


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def slopes(pg: LatticePolygon) -> tuple[Fraction, ...]:
    """Strictly decreasing segment slopes, one per segment."""
    return tuple(_segment_slopes(pg.vertices))


def slope_gaps(pg: LatticePolygon) -> tuple[Fraction, ...]:
    """Drops between successive segment slopes (all positive)."""
    segs = slopes(pg)
    return tuple(cur - nxt for cur, nxt in zip(segs, segs[1:]))


def height(pg: LatticePolygon, x) -> Fraction:
    """Exact height of the polygon graph above abscissa ``x``."""
    x = Fraction(x)
    if x < 0 or x > pg.rank:
        raise InvalidParameters(f"abscissa {x} outside [0, {pg.rank}]")
    for (x0, y0), (x1, y1) in zip(pg.vertices, pg.vertices[1:]):
        if x <= x1:
            return Fraction(y0) + Fraction(y1 - y0, x1 - x0) * (x - x0)
    raise InvariantViolation("vertex chain does not cover its own range")


def integer_heights(pg: LatticePolygon) -> tuple[Fraction, ...]:
    """Heights at the integer abscissae 0, 1, ..., rank."""
    return tuple(height(pg, x) for x in range(pg.rank + 1))


def dominates(a: LatticePolygon, b: LatticePolygon) -> bool:
    """Pointwise domination: ``a`` lies on or above ``b`` everywhere.

    Compared at integer abscissae, which suffices because both graphs are
    linear on every unit interval.  This is a genuine partial order:
    reflexive, transitive and antisymmetric.
    """
    if a.endpoint != b.endpoint:
        raise EndpointMismatch(
            f"cannot compare endpoints {a.endpoint} and {b.endpoint}"
        )
    return all(height(a, x) >= height(b, x) for x in range(a.rank + 1))


def vertexwise_above(a: LatticePolygon, b: LatticePolygon) -> bool:
    """Weaker comparison: every vertex of ``a`` lies on or above ``b``.

    Unlike :func:`dominates` this relation is NOT antisymmetric (two
    distinct polygons can satisfy it in both directions), so it does not
    define a partial order.  Exposed for transparency only.
    """
    if a.endpoint != b.endpoint:
        raise EndpointMismatch(
            f"cannot compare endpoints {a.endpoint} and {b.endpoint}"
        )
    return all(y >= height(b, x) for x, y in a.vertices)


def dual_polygon(pg: LatticePolygon) -> LatticePolygon:
    """Polygon of the dual family: reflect (a, b) to (r - a, b - D).

    An involution; for endpoint degree D = 0 the endpoint is preserved,
    in general the dual ends at (r, -D).
    """
    r, dd = pg.endpoint
    pts = [(r - a, b - dd) for a, b in reversed(pg.vertices)]
    return make_polygon(pts)


def satisfies_gap_bound(pg: LatticePolygon, g: int) -> bool:
    """Every drop between successive slopes is at most 2g - 2."""
    return all(gap <= 2 * g - 2 for gap in slope_gaps(pg))


def satisfies_spread_bound(pg: LatticePolygon, p: int, g: int) -> bool:
    """Largest minus smallest slope is at most min(r-1, p-1)(2g-2)."""
    segs = slopes(pg)
    return segs[0] - segs[-1] <= min(pg.rank - 1, p - 1) * (2 * g - 2)


# Integer windows derived from rational slope bounds.
def _strict_above(q: Fraction) -> int:
    return math.floor(q) + 1


def _strict_below(q: Fraction) -> int:
    return math.ceil(q) - 1


def enumerate_frobenius_polygons(p: int, g: int, r: int, d: int) -> PolygonSet:
    """All destabilized pull-back shapes from (0, 0) to (r, p*d).

    Enumerates canonical polygons with at least two segments, integral
    vertices, strictly decreasing slopes, successive slope drops at most
    2g - 2 and total slope spread at most min(r-1, p-1)(2g-2).  The search
    iterates over compositions of r into segment ranks and integer segment
    degrees inside the slope windows those constraints allow, so it is
    exhaustive by construction.  Members are sorted by their height
    vectors at integer abscissae (lexicographically), a total order
    refining domination.
    """
    require_prime(p)
    if g < 2:
        raise InvalidParameters(f"genus must be at least 2, got {g}")
    if r < 2:
        raise InvalidParameters(f"rank must be at least 2, got {r}")
    total = p * d
    gap_cap = 2 * g - 2
    spread_cap = min(r - 1, p - 1) * gap_cap
    chord = Fraction(total, r)
    found: set[LatticePolygon] = set()
    for ranks in _compositions(r):
        for degs in _degree_vectors(ranks, total, chord, gap_cap, spread_cap):
            verts = [(0, 0)]
            x = y = 0
            for rk, dy in zip(ranks, degs):
                x += rk
                y += dy
                verts.append((x, y))
            found.add(make_polygon(verts))
    ordered = sorted(found, key=integer_heights)
    return PolygonSet(tuple(ordered), p, g, r, d)


def _compositions(r: int):
    """Ordered compositions of r into at least two positive parts."""

    def rec(remaining, acc):
        if remaining == 0:
            if len(acc) >= 2:
                yield tuple(acc)
            return
        for part in range(1, remaining + 1):
            yield from rec(remaining - part, acc + [part])

    yield from rec(r, [])


def _degree_vectors(ranks, total, chord, gap_cap, spread_cap):
    """Integer degree vectors whose slopes satisfy all admissibility bounds."""
    m = len(ranks)
    out: list[tuple[int, ...]] = []

    def rec(idx, y, degs, first, prev):
        rk = ranks[idx]
        if idx == m - 1:
            dy = total - y
            s = Fraction(dy, rk)
            if s < prev and prev - s <= gap_cap and first - s <= spread_cap:
                out.append(tuple(degs) + (dy,))
            return
        if idx == 0:
            lo = _strict_above(rk * chord)
            hi = math.floor(rk * (chord + spread_cap))
        else:
            lo = math.ceil(rk * (prev - gap_cap))
            hi = _strict_below(rk * prev)
        for dy in range(lo, hi + 1):
            s = Fraction(dy, rk)
            rec(idx + 1, y + dy, degs + [dy], s if first is None else first, s)

    rec(0, 0, [], None, None)
    return out


def canonical_polygon(p: int, g: int, r: int, d: int) -> LatticePolygon:
    """The extremal shape attained by Frobenius direct images.

    Vertices (i*r, d*i + r*i*(p-i)*(g-1)) for 0 <= i <= p, ending at
    (r*p, p*d) where d is the degree of the rank r*p bundle.  Every drop
    between successive slopes equals 2g - 2, which is validated.
    """
    require_prime(p)
    if g < 2 or r < 1:
        raise InvalidParameters(f"need g >= 2 and r >= 1, got g={g}, r={r}")
    verts = [(i * r, d * i + r * i * (p - i) * (g - 1)) for i in range(p + 1)]
    pg = make_polygon(verts)
    if any(gap != 2 * g - 2 for gap in slope_gaps(pg)):
        raise InvariantViolation("extremal polygon slope drops are not 2g - 2")
    return pg


def is_canonical(pg: LatticePolygon, p: int, g: int) -> bool:
    """True when the slope spread equals exactly (p - 1)(2g - 2)."""
    segs = slopes(pg)
    return segs[0] - segs[-1] == (p - 1) * (2 * g - 2)


def vertex_lists(pg: LatticePolygon) -> list[list[int]]:
    """JSON-ready vertices: a list of [rank, degree] pairs, rank ascending."""
    return [[a, b] for a, b in pg.vertices]


#: The four destabilized pull-back shapes in the reference configuration
#: (p, g, r, d) = (3, 2, 3, 0), keyed by their conventional stratum ids.
REFERENCE_POLYGONS: dict[str, LatticePolygon] = {
    "P1": make_polygon([(0, 0), (1, 1), (3, 0)]),
    "P2": make_polygon([(0, 0), (2, 1), (3, 0)]),
    "P3": make_polygon([(0, 0), (1, 1), (2, 1), (3, 0)]),
    "P4": make_polygon([(0, 0), (1, 2), (2, 2), (3, 0)]),
}


def reference_label(pg: LatticePolygon) -> str | None:
    """Stratum id of ``pg`` in the reference configuration, if any."""
    for label, ref in REFERENCE_POLYGONS.items():
        if pg == ref:
            return label
    return None
