"""Coordinates on the indecomposable objects of a discrete derived category.

Objects live in 3r AR components X^c, Y^c, Z^c (c = 0..r-1) and are written
X^c(i,j) (j >= i), Y^c(i,j) (i >= j) and Z^c(i,j).  The suspension increments
the component index; wrapping from c = r-1 back to 0 applies the translate
that makes Sigma^r act as tau^{-p} on X, tau^{q} on Y and (i+p, j-q) on Z.
"""

from dataclasses import dataclass
from typing import NamedTuple

FAMILIES = ("X", "Y", "Z")


@dataclass(frozen=True, order=True)
class CategoryParams:
    r: int
    n: int
    m: int

    def __post_init__(self):
        if self.r < 1 or self.m < 0 or self.n <= self.r:
            raise ValueError(f"need r >= 1, m >= 0 and n > r, got {self.astuple()}")

    @property
    def p(self):
        return self.m + self.r

    @property
    def q(self):
        return self.n - self.r

    def astuple(self):
        return (self.r, self.n, self.m)

    def __str__(self):
        return "%d,%d,%d" % self.astuple()

    @classmethod
    def parse(cls, text):
        parts = [int(x) for x in str(text).replace(" ", "").split(",")]
        if len(parts) != 3:
            raise ValueError(f"params must be r,n,m, got {text!r}")
        return cls(*parts)


class MarkedPoint(NamedTuple):
    """A marked point x_i (side 'X') or y_i (side 'Y') on the cylinder."""

    side: str
    index: int

    def __str__(self):
        return f"{self.side.lower()}{self.index}"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        side = text[:1].upper()
        if side not in ("X", "Y") or not text[1:].isdigit():
            raise ValueError(f"bad marked point {text!r}")
        return cls(side, int(text[1:]))


class Arc(NamedTuple):
    """Homotopy class of an arc: canonical lift runs from (start, 0) to (end, w)."""

    start: MarkedPoint
    end: MarkedPoint
    w: int

    def __str__(self):
        return f"{self.start}:{self.end}:{self.w}"

    @classmethod
    def parse(cls, text):
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"arc must look like x1:y1:-1, got {text!r}")
        return cls(MarkedPoint.parse(parts[0]), MarkedPoint.parse(parts[1]), int(parts[2]))

    @property
    def closed(self):
        return self.start == self.end

    def to_json(self):
        return {"from": str(self.start), "to": str(self.end), "w": self.w}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            return cls.parse(data)

        def point(v):
            if isinstance(v, str):
                return MarkedPoint.parse(v)
            return MarkedPoint(v["side"].upper(), int(v["idx"]))

        return cls(point(data["from"]), point(data["to"]), int(data["w"]))


def marked_points(params):
    return [MarkedPoint("X", i) for i in range(1, params.p + 1)] + \
           [MarkedPoint("Y", j) for j in range(1, params.q + 1)]


def check_point(params, v):
    bound = params.p if v.side == "X" else params.q
    if v.side not in ("X", "Y") or not 1 <= v.index <= bound:
        raise ValueError(f"marked point {v} does not exist on C({params.p},{params.q})")


def is_canonical(arc):
    """Canonical orientation: start below end on one boundary, or X to Y."""
    s, t, w = arc
    if s.side == "X" and t.side == "X":
        return w > 0 or (w == 0 and s.index < t.index)
    if s.side == "Y" and t.side == "Y":
        return w < 0 or (w == 0 and s.index < t.index)
    return s.side == "X"


def check_arc(params, arc):
    check_point(params, arc.start)
    check_point(params, arc.end)
    if not is_canonical(arc):
        raise ValueError(f"arc {arc} is not in canonical orientation")
    return arc


@dataclass(frozen=True, order=True)
class IndecObject:
    family: str
    c: int
    i: int
    j: int
    params: CategoryParams

    def __str__(self):
        return f"{self.family},{self.c},{self.i},{self.j}"

    def label(self):
        return f"{self.family}^{self.c}({self.i},{self.j})"

    def key(self):
        return (FAMILIES.index(self.family), self.c, self.i, self.j)

    def to_json(self):
        return {"family": self.family, "c": self.c, "i": self.i, "j": self.j}

    @property
    def on_mouth(self):
        return self.family != "Z" and self.i == self.j


def make_object(params, family, c, i, j):
    family = family.upper()
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if not 0 <= c < params.r:
        raise ValueError(f"component index {c} outside 0..{params.r - 1}")
    if family == "X" and j < i:
        raise ValueError(f"X^{c}({i},{j}) needs j >= i")
    if family == "Y" and i < j:
        raise ValueError(f"Y^{c}({i},{j}) needs i >= j")
    return IndecObject(family, c, i, j, params)


def parse_object(params, text):
    parts = text.replace(" ", "").split(",")
    if len(parts) != 4:
        raise ValueError(f"object must look like X,0,1,4, got {text!r}")
    return make_object(params, parts[0], int(parts[1]), int(parts[2]), int(parts[3]))


def object_from_json(params, data):
    if isinstance(data, str):
        return parse_object(params, data)
    return make_object(params, data["family"], int(data["c"]), int(data["i"]), int(data["j"]))


def _wrap(A, turns):
    """Apply Sigma^(r*turns) to the coordinates of A."""
    p, q = A.params.p, A.params.q
    if A.family == "X":
        return A.i + turns * p, A.j + turns * p
    if A.family == "Y":
        return A.i - turns * q, A.j - turns * q
    return A.i + turns * p, A.j - turns * q


def shift(A, k=1):
    turns, c = divmod(A.c + k, A.params.r)
    i, j = _wrap(A, turns)
    return IndecObject(A.family, c, i, j, A.params)


def ar_translate(A, k=1):
    return IndecObject(A.family, A.c, A.i - k, A.j - k, A.params)


def height(A):
    if A.family == "X":
        return A.j - A.i
    if A.family == "Y":
        return A.i - A.j
    raise ValueError("objects in Z components have no height")


def mouth(params, family, c, i):
    return IndecObject(family, c, i, i, params)


class BoundaryPair(NamedTuple):
    lower: IndecObject
    upper: IndecObject


def boundary_pair(A):
    """The two mouth summands (B-, B+) of the cocone of A -> tau^-1 A."""
    P = A.params
    if A.family == "X":
        return BoundaryPair(mouth(P, "X", A.c, A.i), shift(mouth(P, "X", A.c, A.j + 1), -1))
    if A.family == "Y":
        return BoundaryPair(mouth(P, "Y", A.c, A.j), shift(mouth(P, "Y", A.c, A.i + 1), -1))
    return BoundaryPair(mouth(P, "X", A.c, A.i), mouth(P, "Y", A.c, A.j))


def object_from_boundary(lower, upper):
    """Inverse of boundary_pair; None when the pair bounds no object."""
    if lower.family == "X" and upper.family == "Y":
        if lower.c != upper.c:
            return None
        return IndecObject("Z", lower.c, lower.i, upper.i, lower.params)
    if lower.family != upper.family:
        return None
    top = shift(upper, 1)
    if top.c != lower.c:
        return None
    if lower.family == "X":
        i, j = lower.i, top.i - 1
        return IndecObject("X", lower.c, i, j, lower.params) if j >= i else None
    i, j = top.i - 1, lower.i
    return IndecObject("Y", lower.c, i, j, lower.params) if i >= j else None


def mouth_decompose(B):
    """Return (label, k) with B = Sigma^k of the exceptional-cycle object named by label."""
    if not B.on_mouth:
        raise ValueError(f"{B.label()} is not on the mouth of an X or Y component")
    P = B.params
    if B.family == "X":
        turns, rest = divmod(B.i - 1, P.p)
        return MarkedPoint("X", rest + 1), B.c + turns * P.r
    turns, rest = divmod(B.i - 1, P.q)
    return MarkedPoint("Y", rest + 1), B.c - turns * P.r


def cycle_object(params, label):
    return mouth(params, label.side, 0, label.index)


def arc_of(A):
    lower, upper = boundary_pair(A)
    start, k_minus = mouth_decompose(lower)
    end, k_plus = mouth_decompose(upper)
    diff = k_plus - k_minus + (0 if A.family == "Z" else 1)
    if diff % A.params.r:
        raise AssertionError(f"winding of {A.label()} is not integral: {diff}/{A.params.r}")
    return Arc(start, end, diff // A.params.r)


def object_of(arc, params):
    """The representative with B- on the exceptional cycle (k- = 0)."""
    check_arc(params, arc)
    s, t, w = arc
    p, q = params.p, params.q
    if s.side == "X" and t.side == "X":
        return IndecObject("X", 0, s.index, t.index + w * p - 1, params)
    if s.side == "Y" and t.side == "Y":
        return IndecObject("Y", 0, t.index - w * q - 1, s.index, params)
    return IndecObject("Z", 0, s.index, t.index - w * q, params)


def canonical(A):
    return object_of(arc_of(A), A.params)


def orbit_shift(A):
    """The k with A = Sigma^k canonical(A)."""
    return mouth_decompose(boundary_pair(A).lower)[1]


def mouth_compare(B1, B2):
    """-1, 0, 1 in the mouth order, or None when the objects are incomparable."""
    if B1.family != B2.family or B1.c != B2.c or B1.family == "Z":
        return None
    return (B1.i > B2.i) - (B1.i < B2.i)


def mouth_less(B1, B2):
    cmp = mouth_compare(B1, B2)
    if cmp is None:
        return "incomparable"
    return ("less", "equal", "greater")[cmp + 1]


def window(params, bound, families=FAMILIES):
    """All indecomposables with |i|, |j| <= bound."""
    span = range(-bound, bound + 1)
    for family in families:
        for c in range(params.r):
            for i in span:
                for j in span:
                    if (family == "X" and j < i) or (family == "Y" and i < j):
                        continue
                    yield IndecObject(family, c, i, j, params)
