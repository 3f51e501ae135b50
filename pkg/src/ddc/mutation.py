"""Mutation of reduced arc-collections and the order it induces."""

from collections import deque
from functools import lru_cache
from typing import NamedTuple

import networkx as nx

from .budget import search_budget
from .collections import exceptional_order, is_arc_collection, is_reduced
from .geometry import (LiftedPoint, arc_between, cut_less, factoring_arcs, incidences,
                       intersection_number)
from .groupoid_homology import descriptor_leq
from .objects import MarkedPoint

class MutationMove(NamedTuple):
    """A basis morphism f from member ``a`` to member ``b`` through their common vertex.

    ``end_a`` and ``end_b`` say which end ('start' or 'end') of each arc sits
    at the vertex.  Right mutation replaces ``a`` by the cone of f, left
    mutation replaces ``b`` by the cocone; both carry the concatenated arc.
    """

    a: int
    b: int
    vertex: MarkedPoint
    direction: str
    end_a: str
    end_b: str

    def to_json(self):
        return {"a": self.a, "b": self.b, "vertex": str(self.vertex),
                "direction": self.direction, "end_a": self.end_a, "end_b": self.end_b}

    def __str__(self):
        return f"{self.a},{self.b},{self.vertex},{self.direction}"


def _incidence_at(arc, vertex, end):
    return next(inc for inc in incidences(arc, vertex) if inc.end == end)


@lru_cache(maxsize=4096)
def mutable_moves(coll):
    """Every left and right mutation available in a reduced arc-collection."""
    moves = []
    arcs = coll.arcs
    for vertex in sorted({pt for arc in arcs for pt in (arc.start, arc.end)}):
        at = LiftedPoint(vertex, 0)
        here = [(n, inc) for n, arc in enumerate(arcs) for inc in incidences(arc, vertex)]
        for n_a, inc_a in here:
            for n_b, inc_b in here:
                if n_a == n_b or not cut_less(inc_a.other, inc_b.other, at):
                    continue
                if factoring_arcs(inc_a, inc_b, vertex, arcs):
                    continue
                for direction in ("left", "right"):
                    moves.append(MutationMove(n_a, n_b, vertex, direction, inc_a.end, inc_b.end))
    return tuple(moves)


def _mutated_arc(coll, move):
    inc_a = _incidence_at(coll.arcs[move.a], move.vertex, move.end_a)
    inc_b = _incidence_at(coll.arcs[move.b], move.vertex, move.end_b)
    return inc_a, inc_b, arc_between(inc_a.other, inc_b.other)


def mutate(coll, move):
    """Apply a mutable move; raises ValueError for anything else."""
    if move not in mutable_moves(coll):
        raise ValueError(f"move {move} is not mutable in {coll.label()}")
    _, _, joined = _mutated_arc(coll, move)
    removed = coll.arcs[move.a if move.direction == "right" else move.b]
    result = coll.without(removed).with_arc(joined)
    if len(result) != len(coll) or not is_arc_collection(result.arcs)[0] or not is_reduced(result)[0]:
        raise ValueError(f"mutation {move} did not produce a reduced arc-collection")
    return result


def inverse(coll, move):
    """The move undoing ``move``, expressed in the mutated collection.

    After a right mutation the old target and the new arc meet at the
    target's far end, and the left mutation there restores the source;
    symmetrically for left.
    """
    inc_a, inc_b, joined = _mutated_arc(coll, move)
    result = mutate(coll, move)
    if move.direction == "right":
        kept, kept_inc = coll.arcs[move.b], inc_b
    else:
        kept, kept_inc = coll.arcs[move.a], inc_a
    far = kept_inc.other
    kept_side = (result.arcs.index(kept), "end" if kept_inc.end == "start" else "start")
    new_side = (result.arcs.index(joined), _joined_end(joined, inc_a.other, inc_b.other, far))
    if move.direction == "right":
        (a, end_a), (b, end_b) = kept_side, new_side
        return MutationMove(a, b, far.point, "left", end_a, end_b)
    (a, end_a), (b, end_b) = new_side, kept_side
    return MutationMove(a, b, far.point, "right", end_a, end_b)


def _joined_end(joined, u, v, point):
    """End of the arc through lifted points u and v that lies at ``point``."""
    if joined.start.side != joined.end.side:
        return "start" if point.side == "X" else "end"
    lo = min((u, v), key=LiftedPoint.order_key)
    return "start" if point == lo else "end"


class EquivalenceResult(NamedTuple):
    """Outcome of a bounded mutation search; ``verdict`` is True, False or None (budget spent)."""

    verdict: object
    explored: int
    path: tuple = ()

    def __bool__(self):
        return self.verdict is True


def mutation_equivalent(first, second, budget=None):
    """Breadth-first search over mutations from ``first`` looking for ``second``."""
    budget = search_budget() if budget is None else budget
    if len(first) != len(second) or first.descriptor() != second.descriptor():
        return EquivalenceResult(False, 0)
    parents = {first: None}
    queue = deque([first])
    while queue:
        current = queue.popleft()
        if current == second:
            path = []
            while parents[current] is not None:
                current, move = parents[current]
                path.append(move)
            return EquivalenceResult(True, len(parents), tuple(reversed(path)))
        for move in mutable_moves(current):
            nxt = mutate(current, move)
            if nxt not in parents:
                if len(parents) >= budget:
                    return EquivalenceResult(None, len(parents))
                parents[nxt] = (current, move)
                queue.append(nxt)
    return EquivalenceResult(False, len(parents))


def connected_components(coll):
    """Blocks of members linked by nonzero homs in either direction."""
    graph = nx.Graph()
    graph.add_nodes_from(coll.arcs)
    for n, first in enumerate(coll.arcs):
        for second in coll.arcs[n + 1:]:
            if intersection_number(first, second) or intersection_number(second, first):
                graph.add_edge(first, second)
    blocks = [sorted(block, key=coll.arcs.index) for block in nx.connected_components(graph)]
    return sorted(blocks, key=lambda block: coll.arcs.index(block[0]))


def leq_mut(first, second):
    """The mutation order, decided by containment of generated subgroupoids."""
    return descriptor_leq(first.descriptor(), second.descriptor())


def _offending_moves(coll, z_arc):
    """Left moves mutating an arc past the Z arc at one of its ends, in cut order."""
    z_index = coll.arcs.index(z_arc)
    found = []
    for move in mutable_moves(coll):
        if move.direction == "left" and move.a == z_index:
            found.append(move)
    return found


def mutate_to_exceptional(coll, z_arc=None):
    """Mutate arcs past a Z member until it admits no orbit morphisms to the rest.

    Returns (collection, ordering) where the ordering is exceptional.
    """
    candidates = [arc for arc in coll.arcs if arc.start.side != arc.end.side]
    if z_arc is None:
        if not candidates:
            raise ValueError("the collection has no member in a Z component")
        z_arc = candidates[0]
    elif z_arc not in candidates:
        raise ValueError(f"{z_arc} is not a Z member of the collection")
    for _ in range(search_budget(10 * len(coll) ** 2 + 10)):
        moves = _offending_moves(coll, z_arc)
        if not moves:
            break
        coll = mutate(coll, moves[0])
    else:
        raise RuntimeError("mutation towards an exceptional collection did not finish")
    order = exceptional_order(coll.arcs)
    if order is None:
        raise RuntimeError(f"{coll.label()} has no exceptional ordering")
    return coll, order
