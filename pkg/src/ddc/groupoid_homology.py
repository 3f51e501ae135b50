"""Relative homology classes of arcs and the subgroupoids they generate.

A path between marked points is determined up to homotopy by its endpoints
and the level change of its lift, so a set of arcs generates a subgroupoid
described by a weighted graph on the marked points: connected blocks,
potentials relative to a root, and the gcd of the cycle weights per block.
"""

from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

import sympy

from .objects import Arc, MarkedPoint, marked_points


class HomologyClass(NamedTuple):
    delta: tuple
    wind: int

    def __add__(self, other):
        return HomologyClass(tuple(a + b for a, b in zip(self.delta, other.delta)),
                             self.wind + other.wind)

    def __neg__(self):
        return HomologyClass(tuple(-a for a in self.delta), -self.wind)


def homology_class(arc, params):
    points = marked_points(params)
    delta = [0] * len(points)
    delta[points.index(arc.end)] += 1
    delta[points.index(arc.start)] -= 1
    return HomologyClass(tuple(delta), arc.w)


def point_label(v):
    return str(v)


@dataclass(frozen=True)
class SubgroupoidDescriptor:
    """Canonical invariant of a generated subgroupoid.

    ``blocks`` lists the connected blocks (each sorted, the first point is the
    root); ``base`` maps each point to its potential relative to the root,
    reduced modulo the block period when that period is positive.
    """

    blocks: tuple
    periods: tuple
    base: tuple

    def block_of(self, v):
        for index, block in enumerate(self.blocks):
            if v in block:
                return index
        raise KeyError(v)

    def potential(self, v):
        return dict(self.base)[v]

    def contains(self, arc):
        return path_in(self, arc.start, arc.end, arc.w)

    def to_json(self):
        return {"blocks": [[point_label(v) for v in block] for block in self.blocks],
                "periods": list(self.periods),
                "base": {point_label(v): w for v, w in self.base}}

    def label(self):
        parts = []
        for block, period in zip(self.blocks, self.periods):
            if len(block) == 1 and period == 0:
                continue
            pot = dict(self.base)
            body = ",".join(f"{v}@{pot[v]}" for v in block)
            parts.append(f"{{{body}}}/{period}")
        return " ".join(parts) or "empty"


def _point_order(params):
    return {v: n for n, v in enumerate(marked_points(params))}


class _WeightedUnionFind:
    """Union-find carrying potentials: pot[v] is the level of v relative to its root."""

    def __init__(self, points):
        self.parent = {v: v for v in points}
        self.offset = {v: 0 for v in points}
        self.period = {v: 0 for v in points}

    def find(self, v):
        path = []
        while self.parent[v] != v:
            path.append(v)
            v = self.parent[v]
        root, total = v, 0
        for u in reversed(path):
            total += self.offset[u]
            self.offset[u] = total
            self.parent[u] = root
        return root

    def potential(self, v):
        self.find(v)
        return self.offset[v] if self.parent[v] != v else 0

    def add_edge(self, s, t, w):
        """Record a path from s to t whose lift changes level by w."""
        rs, rt = self.find(s), self.find(t)
        ps, pt = self.potential(s), self.potential(t)
        if rs == rt:
            self.period[rs] = gcd(self.period[rs], abs(ps + w - pt))
            return
        # attach rt below rs: level(rt) relative to rs
        self.parent[rt] = rs
        self.offset[rt] = ps + w - pt
        self.period[rs] = gcd(self.period[rs], self.period[rt])


def generated_subgroupoid(arcs, params):
    order = _point_order(params)
    uf = _WeightedUnionFind(order)
    for arc in arcs:
        uf.add_edge(arc.start, arc.end, arc.w)
    groups = {}
    for v in order:
        groups.setdefault(uf.find(v), []).append(v)
    blocks, periods, base = [], [], []
    for members in groups.values():
        members.sort(key=order.get)
        root = members[0]
        period = uf.period[uf.find(root)]
        for v in members:
            pot = uf.potential(v) - uf.potential(root)
            base.append((v, pot % period if period else pot))
        blocks.append(tuple(members))
        periods.append(period)
    ranked = sorted(zip(blocks, periods), key=lambda bp: order[bp[0][0]])
    base.sort(key=lambda vb: order[vb[0]])
    return SubgroupoidDescriptor(tuple(b for b, _ in ranked), tuple(p for _, p in ranked),
                                 tuple(base))


def groupoid_contains(descriptor, arc):
    return descriptor.contains(arc)


def descriptor_leq(first, second):
    """Whether the subgroupoid described by ``first`` sits inside that of ``second``."""
    for block, period in zip(first.blocks, first.periods):
        root = block[0]
        for v in block[1:]:
            if not path_in(second, root, v, first.potential(v)):
                return False
        if period and not path_in(second, root, root, period):
            return False
    return True


def path_in(descriptor, s, t, w):
    """Membership of the path class from s to t with level change w."""
    b_s, b_t = descriptor.block_of(s), descriptor.block_of(t)
    if b_s != b_t:
        return False
    period = descriptor.periods[b_s]
    difference = w - (descriptor.potential(t) - descriptor.potential(s))
    return difference == 0 if period == 0 else difference % period == 0


def _extended_gcd(values):
    """Coefficients c with sum(c*v) = gcd(values) (gcd taken non-negative)."""
    g, coeffs = 0, []
    for v in values:
        if g == 0 and v == 0:
            coeffs.append(0)
            continue
        new_g, x, y = _egcd(g, v)
        coeffs = [c * x for c in coeffs] + [y]
        g = new_g
    if g < 0:
        g, coeffs = -g, [-c for c in coeffs]
    return g, coeffs


def _egcd(a, b):
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
        old_t, t = t, old_t - quotient * t
    return old_r, old_s, old_t


def witness_path(arcs, target, params):
    """A walk through the generating arcs realising ``target``, or None.

    The walk is a list of (arc index, +1 forward / -1 backward); its lifted
    level changes add up to the winding of ``target``.
    """
    adjacency = {v: [] for v in marked_points(params)}
    for n, arc in enumerate(arcs):
        adjacency[arc.start].append((arc.end, n, +1, arc.w))
        adjacency[arc.end].append((arc.start, n, -1, -arc.w))
    source = target.start
    potential = {source: 0}
    tree_step = {source: None}
    stack = [source]
    while stack:
        u = stack.pop()
        for v, n, sign, w in adjacency[u]:
            if v not in potential:
                potential[v] = potential[u] + w
                tree_step[v] = (u, n, sign)
                stack.append(v)
    if target.end not in potential:
        return None

    def tree_path(v):
        steps = []
        while tree_step[v] is not None:
            u, n, sign = tree_step[v]
            steps.append((n, sign))
            v = u
        return steps[::-1]

    def reverse(steps):
        return [(n, -sign) for n, sign in reversed(steps)]

    used = {step[1] for step in tree_step.values() if step}
    loops, weights = [], []
    for n, arc in enumerate(arcs):
        if arc.start in potential and n not in used:
            loop = tree_path(arc.start) + [(n, +1)] + reverse(tree_path(arc.end))
            loops.append(loop)
            weights.append(potential[arc.start] + arc.w - potential[arc.end])
    needed = target.w - potential[target.end]
    g, coeffs = _extended_gcd(weights)
    if (g == 0 and needed != 0) or (g and needed % g):
        return None
    walk = []
    if g:
        factor = needed // g
        for loop, c in zip(loops, coeffs):
            times = c * factor
            walk += (loop if times > 0 else reverse(loop)) * abs(times)
    return walk + tree_path(target.end)


def walk_class(arcs, walk, start):
    """Endpoint and total level change of a walk from ``start``."""
    here, level = start, 0
    for n, sign in walk:
        arc = arcs[n]
        s, t = (arc.start, arc.end) if sign > 0 else (arc.end, arc.start)
        if s != here:
            raise ValueError("walk is not connected")
        here, level = t, level + sign * arc.w
    return here, level


def exceptional_basis_arcs(params):
    """Arcs of the full exceptional collection used for the K0 comparison."""
    p, q = params.p, params.q
    x = [MarkedPoint("X", i) for i in range(1, p + 1)]
    y = [MarkedPoint("Y", j) for j in range(1, q + 1)]
    arcs = [Arc(x[-1], y[-1], 1)]
    arcs += [Arc(x[i], x[i + 1], 0) for i in range(p - 1)]
    arcs += [Arc(y[j], y[j + 1], 0) for j in range(q - 1)]
    arcs.append(Arc(x[0], y[0], 0))
    return arcs


def class_coordinates(cls):
    """Coordinates in a basis of M: delta without its last entry, then wind."""
    return list(cls.delta[:-1]) + [cls.wind]


def k0_matrix(params):
    return sympy.Matrix([class_coordinates(homology_class(a, params))
                         for a in exceptional_basis_arcs(params)])


def k0_basis_check(params):
    matrix = k0_matrix(params)
    det = matrix.det()
    return {"rank": matrix.rank(), "expected_rank": params.n + params.m,
            "determinant": int(det), "unimodular": abs(det) == 1,
            "ok": abs(det) == 1 and matrix.rank() == params.n + params.m}
