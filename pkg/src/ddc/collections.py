"""Arc-collections: non-crossing sets of exceptional and spherelike objects."""

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .budget import search_budget
from .cones import appendix_triangle, cone_of
from .geometry import arcs_cross, intersection_number
from .groupoid_homology import generated_subgroupoid, witness_path
from .homs import classify, orbit_statements
from .objects import Arc, arc_of, canonical, height, object_of, shift


def arc_sort_key(arc):
    return (arc.start.side, arc.start.index, arc.end.side, arc.end.index, arc.w)


@dataclass(frozen=True)
class Collection:
    """A finite set of arcs, kept sorted so equal collections compare equal."""

    params: object
    arcs: tuple = field(default=())

    def __post_init__(self):
        unique = sorted(set(self.arcs), key=arc_sort_key)
        object.__setattr__(self, "arcs", tuple(unique))

    @classmethod
    def from_objects(cls, params, objs):
        return cls(params, tuple(arc_of(A) for A in objs))

    @property
    def members(self):
        return [object_of(a, self.params) for a in self.arcs]

    def __len__(self):
        return len(self.arcs)

    def __iter__(self):
        return iter(self.arcs)

    def without(self, arc):
        return Collection(self.params, tuple(a for a in self.arcs if a != arc))

    def with_arc(self, arc):
        return Collection(self.params, self.arcs + (arc,))

    def descriptor(self):
        return generated_subgroupoid(self.arcs, self.params)

    def to_json(self):
        return {"params": list(self.params.astuple()),
                "arcs": [a.to_json() for a in self.arcs],
                "objects": [A.to_json() for A in self.members]}

    def label(self):
        return "{" + ", ".join(str(a) for a in self.arcs) + "}"


def _as_objects(params, items):
    return [object_of(x, params) if isinstance(x, Arc) else x for x in items]


def crossing_pair_algebraic(objs):
    """First (A, B, statement) with a morphism A -> Σ^k B factoring through the AR translate."""
    for A, B in itertools.product(objs, repeat=2):
        for st in orbit_statements(A, B):
            if st.strict:
                return A, B, st
    return None


def crossing_pair_geometric(arcs):
    for first, second in itertools.combinations_with_replacement(arcs, 2):
        if arcs_cross(first, second):
            return first, second
    return None


def is_arc_collection(objs, route="geometric"):
    """(verdict, offending pair or None)."""
    if route == "algebraic":
        found = crossing_pair_algebraic(list(objs))
        return found is None, (None if found is None else (found[0], found[1]))
    arcs = [arc_of(A) if not isinstance(A, Arc) else A for A in objs]
    found = crossing_pair_geometric(arcs)
    return found is None, found


def membership(A, coll):
    """Whether A lies in the thick subcategory of an arc-collection, with a witness walk."""
    target = arc_of(A) if not isinstance(A, Arc) else A
    walk = witness_path(list(coll.arcs), target, coll.params)
    return walk is not None, walk


def redundant_member(coll):
    """Canonically least member generated by the others, if any."""
    for arc in sorted(coll.arcs, key=lambda a: object_of(a, coll.params).key()):
        if coll.without(arc).descriptor().contains(arc):
            return arc
    return None


def is_reduced(coll):
    extra = redundant_member(coll)
    return extra is None, extra


def reduce(coll):
    while True:
        extra = redundant_member(coll)
        if extra is None:
            return coll
        coll = coll.without(extra)


def needs_split(A):
    if A.family == "Z":
        return False
    return height(A) >= (A.params.p if A.family == "X" else A.params.q)


def generator_split(A):
    """Two spherelike objects generating the same thick subcategory as a tall A."""
    P = A.params
    if A.family == "X":
        if height(A) < P.p:
            raise ValueError(f"{A.label()} has height below {P.p}")
        first = A.__class__("X", A.c, A.j + 1, A.j + P.p, P)
        second = A.__class__("X", A.c, A.i, A.i + P.p - 1, P)
        return first, second
    if A.family == "Y":
        if height(A) < P.q:
            raise ValueError(f"{A.label()} has height below {P.q}")
        first = A.__class__("Y", A.c, A.i + P.q, A.i + 1, P)
        second = A.__class__("Y", A.c, A.j + P.q - 1, A.j, P)
        return first, second
    raise ValueError("objects in Z components are exceptional and need no splitting")


def split_certificate(A):
    """Cone of the basis map A -> Σ^r A, whose summands are the two splits (up to shift)."""
    P = A.params
    sid = 0 if A.family == "X" else 8
    target = shift(A, P.r if A.family == "X" else -P.r)
    return cone_of(A, target, sid)


def rebuild_certificate(A):
    """Triangles showing A lies in the thick closure of its two splits.

    Returns the list of triangles (as (triangle name, first, middle, last) of objects)
    building objects of growing height from the second split, then A itself.
    """
    if A.family != "X":
        raise ValueError("rebuilding is written for X objects")
    P = A.params
    step = P.p
    first, second = generator_split(A)
    steps = []
    k = 1
    current = second
    while A.i - 1 + (k + 1) * step <= A.j:
        tri = appendix_triangle("Xcones-ray", current, step)
        steps.append(("Xcones-ray", tri))
        current = tri.middle[0].obj
        k += 1
    a = A.j + 1 - current.i - step
    b = A.j - current.j
    if b > 0:
        tri = appendix_triangle("Xconesint", current, a, b)
        steps.append(("Xconesint", tri))
    return steps


def _size(A):
    if A.family == "Z":
        return 0
    return height(A) + 1


def _expand(objs):
    """Split tall members and drop duplicates up to shift."""
    pending, seen, out = list(objs), set(), []
    while pending:
        A = pending.pop()
        if needs_split(A):
            pending.extend(generator_split(A))
            continue
        arc = arc_of(A)
        if arc not in seen:
            seen.add(arc)
            out.append(canonical(A))
    return out


class ArcifyBudgetExceeded(RuntimeError):
    pass


def arcify(params, objs, budget=None):
    """A reduced arc-collection generating the same thick subcategory as ``objs``.

    Tall members are split first.  Then crossings are resolved one at a time:
    for a crossing between A (of least size) and D, the triangle of the basis
    morphism between them shows thick<A, D> = thick<A, cone summands>, so D is
    swapped for the summands.
    """
    objs = _as_objects(params, objs)
    for A in objs:
        if not needs_split(A) and classify(A) == "neither":
            raise ValueError(f"{A.label()} is neither exceptional nor spherelike")
    if budget is None:
        total = sum(_size(A) for A in objs)
        budget = search_budget(10 * (total + len(objs)) ** 2 + 10)
    current = _expand(objs)
    for _ in range(budget):
        found = _smallest_crossing(current)
        if found is None:
            return reduce(Collection.from_objects(params, current))
        source, target, st, replaced = found
        pieces = [s.obj for s in cone_of(source, shift(target, st.witness_shift), st.id).summands]
        current = _expand([X for X in current if X != replaced] + pieces)
    raise ArcifyBudgetExceeded(f"crossing resolution did not finish within {budget} steps")


def _smallest_crossing(objs):
    """The crossing to resolve next: (source, target, statement, member to replace).

    Inside one X or Y family only morphisms through the component are used, so
    the cone summands are strictly lower than the taller end.
    """
    best = None
    for U, V in itertools.product(objs, repeat=2):
        if U == V:
            continue
        within = U.family == V.family and U.family in "XY"
        for st in orbit_statements(U, V):
            if not st.strict or (within and st.id not in (0, 8)):
                continue
            small, large = sorted((U, V), key=lambda M: (_size(M), M.key()))
            key = (_size(small), _size(large), small.key(), large.key(), U.key(), st.witness_shift)
            if best is None or key < best[0]:
                best = (key, (U, V, st, large))
    return None if best is None else best[1]


def is_exceptional_object(arc):
    return not arc.closed and intersection_number(arc, arc) == 1


def exceptional_order(arcs):
    """An order making the arcs an exceptional collection, or None.

    Later members admit no orbit morphisms to earlier ones; this is a
    topological order of the digraph with an edge a -> b whenever a maps to b.
    """
    arcs = list(arcs)
    if any(a.closed for a in arcs):
        return None
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(arcs)))
    for i, j in itertools.permutations(range(len(arcs)), 2):
        if intersection_number(arcs[i], arcs[j]):
            graph.add_edge(i, j)
    if not nx.is_directed_acyclic_graph(graph):
        return None
    order = nx.lexicographical_topological_sort(graph)
    return [arcs[n] for n in order]


def is_exceptional_collection(arcs):
    return exceptional_order(arcs) is not None
