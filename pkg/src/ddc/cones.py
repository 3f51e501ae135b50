"""Cones of basis morphisms between indecomposables.

Every triangle is written with explicit suspension exponents so it can be read
off verbatim; ``Summand.obj`` gives the concrete object.
"""

from typing import NamedTuple

from .homs import statement_holds
from .objects import IndecObject, arc_of, boundary_pair, height, shift


class Summand(NamedTuple):
    base: IndecObject
    exponent: int = 0

    @property
    def obj(self):
        return shift(self.base, self.exponent)

    def label(self):
        prefix = {0: "", 1: "Σ"}.get(self.exponent, f"Σ^{self.exponent}")
        return prefix + self.base.label()

    def to_json(self):
        data = self.base.to_json()
        data["shift"] = self.exponent
        return data


class Triangle(NamedTuple):
    """U -> V -> W -> ΣU with each vertex a list of summands."""

    first: list
    middle: list
    last: list

    def to_json(self):
        return [[s.to_json() for s in vertex] for vertex in self]


class ConeResult(NamedTuple):
    source: IndecObject
    target: IndecObject
    statement: int
    strict: bool
    lemma: str
    summands: list
    relation: str

    def to_json(self):
        return {"a": self.source.to_json(), "b": self.target.to_json(),
                "statement": self.statement, "strict": self.strict, "lemma": self.lemma,
                "cone": [s.to_json() for s in self.summands],
                "cone_objects": [s.obj.to_json() for s in self.summands],
                "relation": self.relation}


def _obj(like, family, i, j):
    return IndecObject(family, like.c, i, j, like.params)


def _s(like, family, i, j, exponent=0):
    return Summand(_obj(like, family, i, j), exponent)


def _require(condition, message):
    if not condition:
        raise ValueError(message)


def _x_ray(X, b):
    _require(X.family == "X" and b > 0, "needs an X object and b > 0")
    i, j = X.i, X.j
    return Triangle([Summand(X)], [_s(X, "X", i, j + b)], [_s(X, "X", j + 1, j + b)])


def _x_coray(X, a):
    _require(X.family == "X" and 0 < a <= height(X), "needs 0 < a <= height")
    i, j = X.i, X.j
    return Triangle([_s(X, "X", i, i + a - 1)], [Summand(X)], [_s(X, "X", i + a, j)])


def _x_gen(X, a, b):
    _require(X.family == "X" and b > 0 and 0 < a <= height(X), "needs 0 < a <= height and b > 0")
    i, j = X.i, X.j
    return Triangle([Summand(X)], [_s(X, "X", i + a, j + b)],
                    [_s(X, "X", j + 1, j + b), _s(X, "X", i, i + a - 1, 1)])


def _x_int(X, a, b):
    _require(X.family == "X" and b > 0 and 0 < a <= height(X), "needs 0 < a <= height and b > 0")
    i, j = X.i, X.j
    return Triangle([Summand(X)], [_s(X, "X", i + a, j), _s(X, "X", i, j + b)],
                    [_s(X, "X", i + a, j + b)])


def _xz(X, a, k):
    _require(X.family == "X" and 0 < a <= height(X), "needs 0 < a <= height")
    i, j = X.i, X.j
    return Triangle([Summand(X)], [_s(X, "Z", i + a, k)],
                    [_s(X, "Z", j + 1, k), _s(X, "X", i, i + a - 1, 1)])


def _zx(Z, a, b):
    _require(Z.family == "Z" and a > 0 and b >= 0, "needs a > 0 and b >= 0")
    i, j = Z.i, Z.j
    return Triangle([_s(Z, "X", i - a, i + b)], [_s(Z, "X", i, i + b), _s(Z, "Z", i - a, j)],
                    [Summand(Z)])


def _zz(Z, a, b):
    _require(Z.family == "Z" and a > 0 and b > 0, "needs a, b > 0")
    i, j = Z.i, Z.j
    return Triangle([_s(Z, "X", i, i + a - 1), _s(Z, "Y", j + b - 1, j)], [Summand(Z)],
                    [_s(Z, "Z", i + a, j + b)])


def _zz_inf(Z, a, b):
    _require(Z.family == "Z" and a > 0 and b > 0, "needs a, b > 0")
    i, j = Z.i, Z.j
    return Triangle([Summand(Z)], [_s(Z, "Z", i + a, j), _s(Z, "Z", i, j + b)],
                    [_s(Z, "Z", i + a, j + b)])


def _yz(Y, b, k):
    _require(Y.family == "Y" and 0 < b <= height(Y), "needs 0 < b <= height")
    i, j = Y.i, Y.j
    return Triangle([Summand(Y)], [_s(Y, "Z", k, j + b)],
                    [_s(Y, "Z", k, i + 1), _s(Y, "Y", j + b - 1, j, 1)])


def _y_ray(Y, b):
    _require(Y.family == "Y" and 0 < b <= height(Y), "needs 0 < b <= height")
    i, j = Y.i, Y.j
    return Triangle([_s(Y, "Y", j + b - 1, j)], [Summand(Y)], [_s(Y, "Y", i, j + b)])


def _y_coray(Y, a):
    _require(Y.family == "Y" and a > 0, "needs a > 0")
    i, j = Y.i, Y.j
    return Triangle([Summand(Y)], [_s(Y, "Y", i + a, j)], [_s(Y, "Y", i + a, i + 1)])


def _zy(Z, a, b):
    _require(Z.family == "Z" and a >= 0 and b > 0, "needs a >= 0 and b > 0")
    i, j = Z.i, Z.j
    return Triangle([_s(Z, "Y", j + a, j - b)], [_s(Z, "Y", j + a, j), _s(Z, "Z", i, j - b)],
                    [Summand(Z)])


def _y_gen(Y, a, b):
    _require(Y.family == "Y" and a > 0 and 0 < b <= height(Y), "needs a > 0 and 0 < b <= height")
    i, j = Y.i, Y.j
    return Triangle([Summand(Y)], [_s(Y, "Y", i + a, j + b)],
                    [_s(Y, "Y", i + a, i + 1), _s(Y, "Y", j + b - 1, j, 1)])


def _y_int(Y, a, b):
    _require(Y.family == "Y" and a > 0 and 0 < b <= height(Y), "needs a > 0 and 0 < b <= height")
    i, j = Y.i, Y.j
    return Triangle([Summand(Y)], [_s(Y, "Y", i + a, j), _s(Y, "Y", i, j + b)],
                    [_s(Y, "Y", i + a, j + b)])


def _x_standard(Z, a):
    """X(i,i+a-1) -> Z(i,k) -> Z(i+a,k)."""
    _require(Z.family == "Z" and a > 0, "needs a > 0")
    i, k = Z.i, Z.j
    return Triangle([_s(Z, "X", i, i + a - 1)], [Summand(Z)], [_s(Z, "Z", i + a, k)])


def _y_standard(Z, b):
    """Y(j+b-1,j) -> Z(k,j) -> Z(k,j+b)."""
    _require(Z.family == "Z" and b > 0, "needs b > 0")
    k, j = Z.i, Z.j
    return Triangle([_s(Z, "Y", j + b - 1, j)], [Summand(Z)], [_s(Z, "Z", k, j + b)])


TRIANGLES = {
    "Xcones-ray": _x_ray, "Xcones-coray": _x_coray, "Xconesgen": _x_gen,
    "Xconesint": _x_int, "XZcones": _xz, "ZXcones": _zx, "ZZcones": _zz,
    "ZZconesinf": _zz_inf, "YZcones": _yz, "Ycones-ray": _y_ray, "Ycones-coray": _y_coray,
    "ZYcones": _zy, "Yconesgen": _y_gen, "Yconesint": _y_int,
    "X-standard": _x_standard, "Y-standard": _y_standard,
}


def appendix_triangle(kind, obj, *numbers):
    """The named cone triangle, e.g. ('Xconesint', X, a, b)."""
    try:
        builder = TRIANGLES[kind]
    except KeyError:
        raise ValueError(f"unknown triangle kind {kind!r}") from None
    return builder(obj, *numbers)


def _suspend(summands):
    return [Summand(s.base, s.exponent + 1) for s in summands]


def _cone_from(triangle, position):
    """Cone of the map out of vertex ``position`` (0: first->middle, 1: middle->last, 2: last->Σfirst)."""
    return (triangle.last, _suspend(triangle.first), _suspend(triangle.middle))[position]


def _dispatch(sid, A, B):
    """(triangle name, summands in table order) for the basis morphism A -> B of statement sid."""
    i, j = A.i, A.j
    if sid == 0:
        a, b = B.i - i, B.j - j
        if a == 0 and b == 0:
            return "identity", []
        if a == 0:
            return "Xcones-ray", _cone_from(_x_ray(A, b), 0)
        if b == 0:
            return "Xcones-coray", _cone_from(_x_coray(A, a), 1)
        return "Xconesgen", _cone_from(_x_gen(A, a, b), 0)
    if sid == 1:
        B0 = shift(B, -1)
        a, b = i - B0.i, j - B0.j
        if a == height(B0) + 1:
            return "Xcones-ray", _cone_from(_x_ray(B0, b), 2)
        return "Xconesint", _cone_from(_x_int(B0, a, b), 2)
    if sid == 2:
        a, k = B.i - i, B.j
        if a == 0:
            return "X-standard", _cone_from(_x_standard(_obj(A, "Z", i, k), height(A) + 1), 0)
        return "XZcones", _cone_from(_xz(A, a, k), 0)
    if sid == 3:
        B0 = shift(B, -1)
        if i == B0.j + 1:
            return "X-standard", _cone_from(_x_standard(_obj(B0, "Z", B0.i, A.j), height(B0) + 1), 2)
        return "ZXcones", _cone_from(_zx(A, i - B0.i, B0.j - i), 2)
    if sid == 4:
        a, b = B.i - i, B.j - j
        if a == 0 and b == 0:
            return "identity", []
        if a == 0:
            return "Y-standard", _cone_from(_y_standard(A, b), 1)
        if b == 0:
            return "X-standard", _cone_from(_x_standard(A, a), 1)
        first = _zz(A, a, b).first
        return "ZZcones", _suspend([first[1], first[0]])
    if sid == 5:
        B0 = shift(B, -1)
        return "ZZconesinf", _cone_from(_zz_inf(B0, i - B0.i, j - B0.j), 2)
    if sid == 6:
        B0 = shift(B, -1)
        if j == B0.i + 1:
            return "Y-standard", _cone_from(_y_standard(_obj(A, "Z", i, B0.j), j - B0.j), 2)
        return "ZYcones", _cone_from(_zy(A, B0.i - j, j - B0.j), 2)
    if sid == 7:
        k, b = B.i, B.j - j
        if b == 0:
            return "Y-standard", _cone_from(_y_standard(_obj(A, "Z", k, j), height(A) + 1), 0)
        first, second = _cone_from(_yz(A, b, k), 0)
        return "YZcones", [second, first]
    if sid == 8:
        a, b = B.i - i, B.j - j
        if a == 0 and b == 0:
            return "identity", []
        if a == 0:
            return "Ycones-ray", _cone_from(_y_ray(A, b), 1)
        if b == 0:
            return "Ycones-coray", _cone_from(_y_coray(A, a), 0)
        return "Yconesgen", _cone_from(_y_gen(A, a, b), 0)
    B0 = shift(B, -1)
    if j == B0.i + 1:
        return "Ycones-coray", _cone_from(_y_coray(B0, i - B0.i), 2)
    first, second = _cone_from(_y_int(B0, i - B0.i, j - B0.j), 2)
    return "Yconesint", [second, first]


def relation_kind(sid):
    return "A.C1 ~ C2.B" if sid % 2 == 0 else "A.rev(C2) ~ C1.rev(B)"


def cone_of(A, B, sid):
    """Cone of the basis morphism A -> B attached to statement ``sid``."""
    if not statement_holds(sid, A, B):
        raise ValueError(f"statement {sid} does not hold for {A.label()} -> {B.label()}")
    strict = statement_holds(sid, A, B, strict=True)
    lemma, summands = _dispatch(sid, A, B)
    return ConeResult(A, B, sid, strict, lemma, summands, relation_kind(sid))


def path_relation(A, B, sid):
    """Check the homotopy relation between arc paths induced by a strict cone.

    Each arc is walked along its canonical lift; both sides must start at the
    same marked point, end at the same marked point and accumulate the same
    winding.
    """
    result = cone_of(A, B, sid)
    if not result.strict:
        raise ValueError("path relations are stated for strict statements only")
    C1, C2 = (s.obj for s in result.summands)
    arcs = {name: arc_of(obj) for name, obj in (("A", A), ("B", B), ("C1", C1), ("C2", C2))}

    def walk(*steps):
        origin, here, level = None, None, 0
        for name, forward in steps:
            arc = arcs[name]
            start, end, w = (arc.start, arc.end, arc.w) if forward else (arc.end, arc.start, -arc.w)
            if here is None:
                origin = start
            elif here != start:
                return None
            here, level = end, level + w
        return origin, here, level

    if sid % 2 == 0:
        left, right = walk(("A", True), ("C1", True)), walk(("C2", True), ("B", True))
    else:
        left, right = walk(("A", True), ("C2", False)), walk(("C1", True), ("B", False))
    if left is None or right is None or left != right:
        raise AssertionError(f"path relation fails for statement {sid}: {left} vs {right}")
    return {"relation": result.relation, "start": str(left[0]), "end": str(left[1]),
            "winding": left[2]}


def table_boundaries(A, B, sid):
    """Expected boundary pairs of (C1, C2) for a strict statement, read off from A and B."""
    Am, Ap = boundary_pair(A)
    Bm, Bp = boundary_pair(B)
    if sid % 2 == 0:
        return (shift(Ap, 1), Bp), (shift(Am, 1), Bm)
    return (shift(Am, 1), Bp), (Bm, shift(Ap, 1))
