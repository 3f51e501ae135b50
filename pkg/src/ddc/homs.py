"""Hom dimensions between indecomposables from inequalities on mouth objects."""

from functools import lru_cache
from typing import NamedTuple

from .objects import boundary_pair, mouth_compare, shift

# Statement id -> component offset e: B lies in Sigma^e of the component of A.
COMPONENT_OFFSET = {0: 0, 2: 0, 4: 0, 7: 0, 8: 0, 1: 1, 3: 1, 5: 1, 6: 1, 9: 1}

# Statement id -> (family of A, family of B).
FAMILY_PAIR = {0: ("X", "X"), 1: ("X", "X"), 2: ("X", "Z"), 3: ("Z", "X"),
               4: ("Z", "Z"), 5: ("Z", "Z"), 6: ("Z", "Y"), 7: ("Y", "Z"),
               8: ("Y", "Y"), 9: ("Y", "Y")}


class HomStatement(NamedTuple):
    id: int
    strict: bool
    witness_shift: int = 0

    def to_json(self):
        return {"id": self.id, "strict": self.strict, "witness_shift": self.witness_shift}


def _holds(chain, relations, family, strict):
    for (u, v), rel in zip(zip(chain, chain[1:]), relations):
        if u.family != family:
            return False
        cmp = mouth_compare(u, v)
        if cmp is None:
            return False
        if rel == "<" or strict:
            if cmp >= 0:
                return False
        elif cmp > 0:
            return False
    return chain[-1].family == family


@lru_cache(maxsize=1 << 16)
def _boundary(A):
    return boundary_pair(A)


@lru_cache(maxsize=1 << 16)
def up(M):
    return shift(M, 1)


@lru_cache(maxsize=1 << 16)
def down(M):
    return shift(M, -1)


def _check(sid, A, B, strict):
    Am, Ap = _boundary(A)
    Bm, Bp = _boundary(B)
    if sid == 0:
        return _holds([Am, Bm, up(Ap), up(Bp)], "<=,<,<=".split(","), "X", strict)
    if sid == 1:
        return _holds([down(Bm), Am, Bp, up(Ap)], "<,<=,<".split(","), "X", strict)
    if sid == 2:
        return Bp.family == "Y" and _holds([Am, Bm, up(Ap)], ["<=", "<"], "X", strict)
    if sid == 3:
        return Ap.family == "Y" and _holds([down(Bm), Am, Bp], ["<", "<="], "X", strict)
    if sid == 4:
        return _holds([Am, Bm], ["<="], "X", strict) and _holds([Ap, Bp], ["<="], "Y", strict)
    if sid == 5:
        return _holds([Bm, up(Am)], ["<"], "X", strict) and _holds([Bp, up(Ap)], ["<"], "Y", strict)
    if sid == 6:
        return Am.family == "X" and _holds([down(Bm), Ap, Bp], ["<", "<="], "Y", strict)
    if sid == 7:
        return Bm.family == "X" and _holds([Am, Bp, up(Ap)], ["<=", "<"], "Y", strict)
    if sid == 8:
        return _holds([Am, Bm, up(Ap), up(Bp)], "<=,<,<=".split(","), "Y", strict)
    return _holds([down(Bm), Am, Bp, up(Ap)], "<,<=,<".split(","), "Y", strict)


def statement_holds(sid, A, B, strict=False):
    if (A.family, B.family) != FAMILY_PAIR[sid]:
        return False
    if (B.c - A.c) % A.params.r != COMPONENT_OFFSET[sid] % A.params.r:
        return False
    return _check(sid, A, B, strict)


def satisfied_statements(A, B, witness_shift=0):
    """Statements holding for (A, B), each tagged with whether it holds strictly."""
    found = []
    for sid in range(10):
        if statement_holds(sid, A, B):
            found.append(HomStatement(sid, statement_holds(sid, A, B, strict=True), witness_shift))
    return found


def hom_dim(A, B):
    return len(satisfied_statements(A, B))


def factoring_dim(A, B):
    """Dimension of the morphisms A -> B that factor through the AR translate of A."""
    return sum(1 for s in satisfied_statements(A, B) if s.strict)


def _coordinate_span(A, B):
    return max(abs(A.i), abs(A.j), abs(B.i), abs(B.j)) + 1


def shift_band(A, B):
    """Range of shifts k for which Sigma^k B can receive a morphism from A.

    A full turn of Sigma^r moves mouth coordinates by p on the X side and by q
    on the Y side; objects in Z components see both, so the smaller step rules.
    """
    P = A.params
    families = {A.family, B.family}
    step = P.p if families == {"X"} else P.q if families == {"Y"} else min(P.p, P.q)
    turns = 2 * (_coordinate_span(A, B) + 1) // step + 3
    return range(-turns * P.r - P.r, turns * P.r + P.r + 1)


def orbit_statements(A, B, band=None):
    """All statements holding for (A, Sigma^k B), over every shift k."""
    r = A.params.r
    candidates = [s for s in range(10) if (A.family, B.family) == FAMILY_PAIR[s]]
    ks = band if band is not None else shift_band(A, B)
    found = []
    for k in ks:
        offset = (B.c + k - A.c) % r
        live = [s for s in candidates if COMPONENT_OFFSET[s] % r == offset]
        if not live:
            continue
        target = shift(B, k)
        for sid in live:
            if _check(sid, A, target, False):
                found.append(HomStatement(sid, _check(sid, A, target, True), k))
    return found


def hom_dim_orbit(A, B):
    return len(orbit_statements(A, B))


def serre_partner(sid):
    return sid ^ 1


def classify(A):
    count = hom_dim_orbit(A, A)
    return {1: "exceptional", 2: "spherelike"}.get(count, "neither")
