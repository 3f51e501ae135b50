"""Arc combinatorics on the universal cover of the marked cylinder.

A lifted point is a marked point together with the index of the fundamental
domain it sits in.  The deck transformation adds one to every level.
"""

from typing import NamedTuple

from .objects import Arc, MarkedPoint, is_canonical


class LiftedPoint(NamedTuple):
    point: MarkedPoint
    level: int

    @property
    def side(self):
        return self.point.side

    def order_key(self):
        """Key for the total order along the lifted boundary line of this side."""
        if self.side == "X":
            return (self.level, self.point.index)
        return (-self.level, self.point.index)

    def __str__(self):
        return f"({self.point},{self.level})"


class LiftedArc(NamedTuple):
    start: LiftedPoint
    end: LiftedPoint

    def translate(self, k):
        return LiftedArc(LiftedPoint(self.start.point, self.start.level + k),
                         LiftedPoint(self.end.point, self.end.level + k))


def lift(arc):
    return LiftedArc(LiftedPoint(arc.start, 0), LiftedPoint(arc.end, arc.w))


def _lt(u, v, side):
    return u.side == side and v.side == side and u.order_key() < v.order_key()


def _le(u, v, side):
    return u.side == side and v.side == side and u.order_key() <= v.order_key()


def _chain(points, relations, side):
    """Check points[0] rel points[1] rel ... where rel is '<' or '<='."""
    for (u, v), rel in zip(zip(points, points[1:]), relations):
        ok = _lt(u, v, side) if rel == "<" else _le(u, v, side)
        if not ok:
            return False
    return True


def lift_patterns(first, second, strict=False):
    """Indices of the ten endpoint patterns satisfied by two lifted arcs."""
    a1, b1 = first
    a2, b2 = second
    weak = "<" if strict else "<="
    found = []
    if _chain([a1, a2, b1, b2], [weak, "<", weak], "X"):
        found.append(0)
    if _chain([a2, a1, b2, b1], ["<", weak, "<"], "X"):
        found.append(1)
    if b2.side == "Y" and _chain([a1, a2, b1], [weak, "<"], "X"):
        found.append(2)
    if b1.side == "Y" and _chain([a2, a1, b2], ["<", weak], "X"):
        found.append(3)
    if _chain([a1, a2], [weak], "X") and _chain([b1, b2], [weak], "Y"):
        found.append(4)
    if _lt(a2, a1, "X") and _lt(b2, b1, "Y"):
        found.append(5)
    if a1.side == "X" and _chain([a2, b1, b2], ["<", weak], "Y"):
        found.append(6)
    if a2.side == "X" and _chain([a1, b2, b1], [weak, "<"], "Y"):
        found.append(7)
    if _chain([a1, a2, b1, b2], [weak, "<", weak], "Y"):
        found.append(8)
    if _chain([a2, a1, b2, b1], ["<", weak, "<"], "Y"):
        found.append(9)
    return found


def lift_intersection(first, second):
    return 1 if lift_patterns(first, second) else 0


def interior_crossing(first, second):
    """Whether two lifted arcs meet away from their endpoints."""
    return bool(lift_patterns(first, second, strict=True))


def support_band(arc1, arc2):
    return abs(arc1.w) + abs(arc2.w) + 2


def intersection_number(arc1, arc2):
    base, other = lift(arc1), lift(arc2)
    band = support_band(arc1, arc2)
    return sum(lift_intersection(base, other.translate(k)) for k in range(-band, band + 1))


def arcs_cross(arc1, arc2):
    """True when some lifts of the two arcs cross in their interiors."""
    base, other = lift(arc1), lift(arc2)
    band = support_band(arc1, arc2)
    return any(interior_crossing(base, other.translate(k)) or
               interior_crossing(other.translate(k), base)
               for k in range(-band, band + 1))


# Cyclic boundary order of the disc model: the X line ascending, its puncture,
# the Y line ascending in its own order, then the Y puncture.
_SEGMENT = {"X": 0, "Y": 2}


def cut_key(u, at):
    seg_u, seg_at = _SEGMENT[u.side], _SEGMENT[at.side]
    if seg_u == seg_at:
        rank = 0 if u.order_key() > at.order_key() else 4
    else:
        rank = (seg_u - seg_at) % 4
    return (rank, u.order_key())


def cut_less(u, v, at):
    if at in (u, v):
        raise ValueError("cut order compares points other than the cut point")
    return cut_key(u, at) < cut_key(v, at)


class Incidence(NamedTuple):
    """A lift of an arc through a chosen vertex, recorded by its far endpoint.

    ``end`` says which end of the arc sits on the vertex: 'start' or 'end'.
    """

    arc: Arc
    end: str
    other: LiftedPoint


def incidences(arc, vertex, level=0):
    """All lifts of ``arc`` having an endpoint at (vertex, level)."""
    found = []
    if arc.start == vertex:
        found.append(Incidence(arc, "start", LiftedPoint(arc.end, level + arc.w)))
    if arc.end == vertex:
        found.append(Incidence(arc, "end", LiftedPoint(arc.start, level - arc.w)))
    return found


def incidence(arc, vertex, end):
    for inc in incidences(arc, vertex):
        if inc.end == end:
            return inc
    raise ValueError(f"arc {arc} has no {end} point at {vertex}")


def oriented_lift(inc, vertex):
    """The incident lift with its canonical parametrisation."""
    here = LiftedPoint(vertex, 0)
    return LiftedArc(here, inc.other) if inc.end == "start" else LiftedArc(inc.other, here)


def arc_between(u, v):
    """Canonical arc through two lifted points, or None if they coincide."""
    if u == v:
        return None
    if u.side != v.side:
        x, y = (u, v) if u.side == "X" else (v, u)
        return Arc(x.point, y.point, y.level - x.level)
    lo, hi = sorted((u, v), key=LiftedPoint.order_key)
    arc = Arc(lo.point, hi.point, hi.level - lo.level)
    assert is_canonical(arc)
    return arc


def factoring_arcs(inc_a, inc_b, vertex, pool):
    """Pool arcs with a lift at the vertex strictly between the two given lifts."""
    at = LiftedPoint(vertex, 0)
    if not cut_less(inc_a.other, inc_b.other, at):
        raise ValueError("the first lift must come before the second in the cut order")
    lo, hi = cut_key(inc_a.other, at), cut_key(inc_b.other, at)
    found = []
    for gamma in pool:
        for inc in incidences(gamma, vertex):
            if inc.other != at and lo < cut_key(inc.other, at) < hi:
                found.append(inc)
    return found


def concatenate(arc_a, arc_b, vertex, end_a=None, end_b=None):
    """The arc homotopic to arc_a followed by arc_b through the shared vertex."""
    if end_a is None:
        end_a = "end" if arc_a.end == vertex else "start"
    if end_b is None:
        end_b = "start" if arc_b.start == vertex else "end"
    first = incidence(arc_a, vertex, end_a)
    second = incidence(arc_b, vertex, end_b)
    joined = arc_between(first.other, second.other)
    if joined is None:
        raise ValueError("the concatenation is contractible")
    return joined

