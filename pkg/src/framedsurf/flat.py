"""One-cylinder Jenkins-Strebel translation surfaces.

The surface is a single horizontal cylinder [0, L) x [0, h] whose top edge is
glued to its bottom edge by translations: the bottom carries the segments
1..m in that cyclic order, the top carries them in the order given by a
permutation, shifted by a twist parameter.  The identified segment endpoints
become cone points; a cone of total angle 2*pi*(kappa+1) is a zero of order
kappa of the corresponding abelian differential.

All geometry is exact: lengths, heights and path coordinates are rationals,
and turning numbers are computed from sign patterns of cross and dot
products, never from floating-point angles.  Winding numbers are measured
against the constant horizontal framing; the sign convention is anchored by
the requirement that the blow-up boundary of a zero of order kappa (oriented
with the surface on its left) have winding number -1 - kappa.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import (
    CornerAtZero,
    DegenerateIdentification,
    FramedSurfError,
    NonTransverse,
    SameZero,
)

Point = Tuple[Fraction, Fraction]
Vector = Tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Zero:
    """A cone point: the cyclically ordered bottom cuts in its corner cycle.
    order = (cone angle)/(2 pi) - 1; prong count = order + 1."""

    index: int
    cycle: Tuple[int, ...]  # bottom cut ids (the letter to the left of the cut)

    @property
    def order(self) -> int:
        return len(self.cycle) - 1

    @property
    def prongs(self) -> int:
        return len(self.cycle)


@dataclass(frozen=True)
class OneCylinderSurface:
    top_order: Tuple[int, ...]  # letters 1..m at top positions 1..m
    lengths: Tuple[Fraction, ...]  # indexed by letter - 1
    height: Fraction
    twist: Fraction = Fraction(0)

    def __post_init__(self):
        m = len(self.lengths)
        object.__setattr__(self, "lengths", tuple(Fraction(v) for v in self.lengths))
        object.__setattr__(self, "height", Fraction(self.height))
        object.__setattr__(self, "twist", Fraction(self.twist) % self.circumference)
        if sorted(self.top_order) != list(range(1, m + 1)):
            raise ValueError("top_order must be a permutation of 1..m")
        if any(v <= 0 for v in self.lengths) or self.height <= 0:
            raise ValueError("lengths and height must be positive")

    # -- combinatorics ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.lengths)

    @property
    def circumference(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    def _top_position_of(self, letter: int) -> int:
        return self.top_order.index(letter) + 1

    def next_cut(self, i: int) -> int:
        """Successor of bottom cut i in its cone's corner cycle."""
        p = self._top_position_of(i)
        j = self.top_order[p % self.m]  # letter at top position p+1 (cyclic)
        return j - 1 if j > 1 else self.m

    def cones(self) -> Tuple[Zero, ...]:
        seen: Set[int] = set()
        out: List[Zero] = []
        for start in range(1, self.m + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            cur = self.next_cut(start)
            while cur != start:
                cycle.append(cur)
                seen.add(cur)
                cur = self.next_cut(cur)
            out.append(Zero(len(out), tuple(cycle)))
        return tuple(out)

    @property
    def zeros(self) -> Tuple[Zero, ...]:
        return tuple(z for z in self.cones() if z.order >= 1)

    @property
    def marked_points(self) -> Tuple[Zero, ...]:
        return tuple(z for z in self.cones() if z.order == 0)

    @property
    def degenerate(self) -> bool:
        """True when an identification point is a regular (angle 2*pi) point
        on a surface with m > 1; accepted but flagged."""
        return self.m > 1 and bool(self.marked_points)

    @property
    def kappa(self) -> Tuple[int, ...]:
        return tuple(z.order for z in self.zeros)

    @property
    def genus(self) -> int:
        n_cones = len(self.cones())
        total = self.m - n_cones
        assert total % 2 == 0, "cut permutation parity violated"
        return (total + 2) // 2

    # -- metric data -----------------------------------------------------

    def bottom_start(self, letter: int) -> Fraction:
        return sum(self.lengths[: letter - 1], Fraction(0))

    def bottom_cut_x(self, i: int) -> Fraction:
        """x of the bottom cut after letter i (the cut labeled i)."""
        return (self.bottom_start(i) + self.lengths[i - 1]) % self.circumference

    def top_start(self, position: int) -> Fraction:
        x = self.twist
        for q in range(1, position):
            x += self.lengths[self.top_order[q - 1] - 1]
        return x % self.circumference

    def top_cut_x(self, position: int) -> Fraction:
        """x of the top cut after the given top position."""
        letter = self.top_order[position - 1]
        return (self.top_start(position) + self.lengths[letter - 1]) % self.circumference

    def cone_top_cut_x(self, i: int) -> Fraction:
        """x of the top cut following bottom cut i in its cone's corner walk."""
        return self.top_cut_x(self._top_position_of(i))

    def _locate_top(self, x: Fraction) -> Tuple[int, Fraction]:
        """(top position, offset) of a top-edge point; offset 0 is a cut."""
        x = x % self.circumference
        for p in range(1, self.m + 1):
            start = self.top_start(p)
            length = self.lengths[self.top_order[p - 1] - 1]
            offset = (x - start) % self.circumference
            if offset < length:
                return p, offset
        raise AssertionError("unreachable: point not on any top segment")

    def _locate_bottom(self, x: Fraction) -> Tuple[int, Fraction]:
        x = x % self.circumference
        for letter in range(1, self.m + 1):
            start = self.bottom_start(letter)
            offset = (x - start) % self.circumference
            if offset < self.lengths[letter - 1]:
                return letter, offset
        raise AssertionError("unreachable: point not on any bottom segment")

    def glue_top_to_bottom(self, x: Fraction) -> Tuple[Fraction, int]:
        """Image on the bottom edge of a top-edge point, and the letter
        crossed.  Raises CornerAtZero at a cut point."""
        p, offset = self._locate_top(x)
        if offset == 0:
            raise CornerAtZero(f"top-edge point x = {x} is a cone point")
        letter = self.top_order[p - 1]
        return (self.bottom_start(letter) + offset) % self.circumference, letter

    def glue_bottom_to_top(self, x: Fraction) -> Tuple[Fraction, int]:
        letter, offset = self._locate_bottom(x)
        if offset == 0:
            raise CornerAtZero(f"bottom-edge point x = {x} is a cone point")
        return (self.top_start(self._top_position_of(letter)) + offset) % self.circumference, letter

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "perm": list(self.top_order),
            "lengths": [str(v) for v in self.lengths],
            "height": str(self.height),
            "twist": str(self.twist),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "OneCylinderSurface":
        return cls(
            tuple(int(v) for v in data["perm"]),
            tuple(Fraction(v) for v in data["lengths"]),
            Fraction(data["height"]),
            Fraction(data.get("twist", 0)),
        )


def from_permutation(
    top_order: Sequence[int],
    lengths: Sequence[Fraction],
    height: Fraction = Fraction(1),
    twist: Fraction = Fraction(0),
) -> OneCylinderSurface:
    """Build and validate a one-cylinder surface from its identification
    permutation.  Regular identification points (order-zero cones with m > 1)
    are accepted but flagged on the `degenerate` attribute."""
    return OneCylinderSurface(tuple(top_order), tuple(lengths), height, twist)


# -- flat paths ---------------------------------------------------------


@dataclass(frozen=True)
class CrossingRecord:
    edge: str  # "top" or "bottom" (the edge the path exits through)
    letter: int
    x: Fraction


@dataclass(frozen=True)
class ChartPiece:
    start: Point
    end: Point


@dataclass(frozen=True)
class ArcEndpoints:
    """Legal-arc data: the arc leaves the bottom-edge prong of `p_zero` and
    arrives at a top-edge cut of `q_zero`; `prong_p`, `prong_q` index the
    chosen prongs as positions in each zero's corner cycle."""

    p_zero: int
    prong_p: int
    q_zero: int
    prong_q: int


@dataclass(frozen=True)
class FlatPath:
    surface: OneCylinderSurface
    start: Point
    vectors: Tuple[Vector, ...]
    pieces: Tuple[ChartPiece, ...]
    crossings: Tuple[CrossingRecord, ...]
    closed: bool
    endpoints: Optional[ArcEndpoints] = None
    end: Point = (Fraction(0), Fraction(0))


def path_from_vectors(
    surface: OneCylinderSurface,
    start: Point,
    vectors: Sequence[Vector],
    endpoints: Optional[ArcEndpoints] = None,
) -> FlatPath:
    """Develop a polygonal path in the cylinder chart, splitting segments at
    the top/bottom gluing and recording the crossings.  Interior corners must
    avoid cone points; horizontal coordinates live mod the circumference."""
    L = surface.circumference
    h = surface.height
    x, y = Fraction(start[0]) % L, Fraction(start[1])
    if not (0 <= y <= h):
        raise FramedSurfError("start point outside the cylinder")
    pieces: List[ChartPiece] = []
    crossings: List[CrossingRecord] = []
    vectors = tuple((Fraction(v[0]), Fraction(v[1])) for v in vectors)
    for seg_index, (dx, dy) in enumerate(vectors):
        if dx == 0 and dy == 0:
            raise FramedSurfError("zero-length path segment")
        if (y == h and dy > 0) or (y == 0 and dy < 0):
            raise NonTransverse("path leaves the surface through a corner on the edge")
        remaining = Fraction(1)
        while remaining > 0:
            tx = x + dx * remaining
            ty = y + dy * remaining
            if 0 <= ty <= h:
                pieces.append(ChartPiece((x, y), (tx % L, ty)))
                x, y = tx % L, ty
                remaining = Fraction(0)
                if ty in (0, h) and seg_index < len(vectors) - 1:
                    raise NonTransverse(
                        "interior corner on the gluing locus; crossings must be "
                        "at segment interiors"
                    )
                continue
            # exits through top or bottom: split at the boundary
            if dy > 0:
                t_hit = (h - y) / dy
                edge = "top"
            else:
                t_hit = (0 - y) / dy
                edge = "bottom"
            hit_x = (x + dx * t_hit) % L
            pieces.append(ChartPiece((x, y), (hit_x, h if edge == "top" else Fraction(0))))
            if edge == "top":
                new_x, letter = surface.glue_top_to_bottom(hit_x)
                crossings.append(CrossingRecord("top", letter, hit_x))
                x, y = new_x, Fraction(0)
            else:
                new_x, letter = surface.glue_bottom_to_top(hit_x)
                crossings.append(CrossingRecord("bottom", letter, hit_x))
                x, y = new_x, h
            remaining -= t_hit
    end = (x, y)
    closed = end == (Fraction(start[0]) % L, Fraction(start[1]))
    return FlatPath(
        surface=surface,
        start=(Fraction(start[0]) % L, Fraction(start[1])),
        vectors=vectors,
        pieces=tuple(pieces),
        crossings=tuple(crossings),
        closed=closed,
        endpoints=endpoints,
        end=end,
    )


# -- exact direction bookkeeping -----------------------------------------


def _octant(v: Vector) -> int:
    dx, dy = v
    if dx > 0 and dy == 0:
        return 0
    if dx > 0 and dy > 0:
        return 1
    if dx == 0 and dy > 0:
        return 2
    if dx < 0 and dy > 0:
        return 3
    if dx < 0 and dy == 0:
        return 4
    if dx < 0 and dy < 0:
        return 5
    if dx == 0 and dy < 0:
        return 6
    return 7


def _cross(v: Vector, w: Vector) -> Fraction:
    return v[0] * w[1] - v[1] * w[0]


def _dot(v: Vector, w: Vector) -> Fraction:
    return v[0] * w[0] + v[1] * w[1]


def _angle_less(v: Vector, w: Vector) -> bool:
    """theta(v) < theta(w) with theta in [0, 2 pi), exactly."""
    ov, ow = _octant(v), _octant(w)
    if ov != ow:
        return ov < ow
    c = _cross(v, w)
    return c > 0


def _turn_wrap(v: Vector, w: Vector) -> int:
    """Contribution of the corner v -> w to the integer winding: the turn is
    the short arc (|turn| < pi); the wrap counts passage through direction
    east (theta = 0).  Reversal corners are rejected."""
    c = _cross(v, w)
    if c == 0:
        if _dot(v, w) > 0:
            return 0
        raise FramedSurfError("reversal corner: turning angle is ambiguous (pi)")
    if c > 0:  # counterclockwise short turn crosses east iff theta decreases
        return 1 if _angle_less(w, v) else 0
    return -1 if _angle_less(v, w) else 0


def _wrap_sum(directions: Sequence[Vector], cyclic: bool) -> int:
    total = 0
    count = len(directions)
    last = count if cyclic else count - 1
    for i in range(last):
        total += _turn_wrap(directions[i], directions[(i + 1) % count])
    return total


def turning_wn(path: FlatPath) -> Fraction:
    """Winding number of the path against the horizontal framing.

    Closed paths give the integer degree of the direction loop.  Legal arcs
    (declared endpoints: bottom prong of p to a top cut of q) give the
    half-integer obtained by anchoring the initial direction at the p-prong's
    positive horizontal separatrix and sliding the endpoint to the chosen
    q-prong along the blow-up circle."""
    surface = path.surface
    _check_interior_corners(path)
    if path.closed:
        return Fraction(_wrap_sum(path.vectors, cyclic=True))
    if path.endpoints is None:
        raise FramedSurfError("open paths need declared arc endpoints")
    ep = path.endpoints
    cones = surface.cones()
    p_zero, q_zero = cones[ep.p_zero], cones[ep.q_zero]
    start_cut = p_zero.cycle[ep.prong_p % p_zero.prongs]
    sx = surface.bottom_cut_x(start_cut)
    if path.start != (sx, Fraction(0)):
        raise FramedSurfError(
            f"arc must start at the prong's bottom cut point x = {sx}, got {path.start}"
        )
    if path.vectors[0][1] <= 0:
        raise FramedSurfError("arc must leave the bottom edge upward")
    if path.end[1] != surface.height or path.vectors[-1][1] <= 0:
        raise FramedSurfError("arc must arrive at the top edge from below")
    # locate the arrival top cut in q's corner walk, measured from prong_q
    arrival_x = path.end[0]
    q_cycle = q_zero.cycle
    offset = ep.prong_q % q_zero.prongs
    j = None
    for step in range(q_zero.prongs):
        cut = q_cycle[(offset + step) % q_zero.prongs]
        if surface.cone_top_cut_x(cut) == arrival_x:
            j = step + 1
            break
    if j is None:
        raise FramedSurfError(
            f"arc endpoint x = {arrival_x} is not a top cut of zero {ep.q_zero}"
        )
    east: Vector = (Fraction(1), Fraction(0))
    wraps = _wrap_sum((east,) + path.vectors, cyclic=False)
    return Fraction(wraps) - j + Fraction(1, 2)


def _check_interior_corners(path: FlatPath) -> None:
    """Interior vertices of the path must avoid cone points."""
    surface = path.surface
    cut_points = set()
    for i in range(1, surface.m + 1):
        cut_points.add((surface.bottom_cut_x(i), Fraction(0)))
        cut_points.add((surface.cone_top_cut_x(i), surface.height))
    interior = [p.end for p in path.pieces[:-1]] + [p.start for p in path.pieces[1:]]
    for pt in interior:
        if pt in cut_points:
            raise CornerAtZero(f"path corner or crossing at cone point {pt}")


def saddle_arc_wns(
    surface: OneCylinderSurface, p: int, q: int, prong_p: int = 0
) -> Dict[Fraction, Fraction]:
    """Winding numbers of the straight saddle arcs from the chosen prong of
    zero p to every top-edge preimage of zero q, as residues modulo the prong
    count k_q = kappa_q + 1.

    Returns {residue: representative value}.  The residue set is the full set
    of half-integer classes mod k_q."""
    cones = surface.cones()
    if p == q:
        raise SameZero("saddle arcs require two distinct zeros")
    if not (0 <= p < len(cones) and 0 <= q < len(cones)):
        raise FramedSurfError("zero index out of range")
    p_zero, q_zero = cones[p], cones[q]
    start_cut = p_zero.cycle[prong_p % p_zero.prongs]
    sx = surface.bottom_cut_x(start_cut)
    h = surface.height
    L = surface.circumference
    out: Dict[Fraction, Fraction] = {}
    k_q = q_zero.prongs
    for cut in q_zero.cycle:
        tx = surface.cone_top_cut_x(cut)
        dx = (tx - sx) % L
        path = path_from_vectors(
            surface,
            (sx, Fraction(0)),
            [(dx, h)],
            endpoints=ArcEndpoints(p, prong_p, q, 0),
        )
        wn = turning_wn(path)
        out[wn % k_q] = wn
    return out


def shear_twist(surface: OneCylinderSurface, path: FlatPath) -> FlatPath:
    """Image of a path under one full cylinder shear (x, y) -> (x + L y/h, y):
    the mapping class is the Dehn twist about the admissible core curve, so
    turning numbers are preserved."""
    L = surface.circumference
    h = surface.height
    new_start = ((path.start[0] + L * path.start[1] / h) % L, path.start[1])
    new_vectors = tuple((dx + L * dy / h, dy) for dx, dy in path.vectors)
    return path_from_vectors(surface, new_start, new_vectors, endpoints=path.endpoints)


def blowup_boundary_wn(surface: OneCylinderSurface, zero_index: int) -> int:
    """Winding number of the blow-up boundary circle of a zero, oriented with
    the surface on its left: computed as a genuine polygonal loop around the
    cone point.  Equals -1 - kappa."""
    loop = cone_loop(surface, zero_index, clockwise=True)
    wn = turning_wn(loop)
    assert wn.denominator == 1
    return int(wn)


def cone_loop(
    surface: OneCylinderSurface, zero_index: int, clockwise: bool = False
) -> FlatPath:
    """A tight polygonal loop around a cone point: counterclockwise (cone
    point on the left) by default, clockwise (surface on the left, the
    blow-up boundary orientation) otherwise."""
    cones = surface.cones()
    zero = cones[zero_index]
    eps = min(surface.lengths) / 8
    delta = surface.height / 8
    start_cut = zero.cycle[0]
    start = ((surface.bottom_cut_x(start_cut) + eps) % surface.circumference, delta)
    vectors: List[Vector] = []
    for _ in zero.cycle:
        vectors.extend(
            [
                (-2 * eps, Fraction(0)),
                (Fraction(0), -2 * delta),
                (2 * eps, Fraction(0)),
                (Fraction(0), 2 * delta),
            ]
        )
    if clockwise:
        vectors = [(-vx, -vy) for vx, vy in reversed(vectors)]
    path = path_from_vectors(surface, start, vectors)
    if not path.closed:
        raise AssertionError("cone loop failed to close up")
    return path
