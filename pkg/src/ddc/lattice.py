"""Bounded enumeration of reduced non-crossing configurations and their lattice."""

import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import networkx as nx

from .collections import Collection, arc_sort_key, is_exceptional_collection
from .geometry import arcs_cross
from .groupoid_homology import SubgroupoidDescriptor, descriptor_leq
from .objects import Arc, is_canonical, marked_points


class EnumerationBounds(NamedTuple):
    max_winding: int
    max_arcs: int = None

    def arcs_limit(self, params):
        return self.max_arcs if self.max_arcs is not None else params.p + params.q + 1


def candidate_arcs(params, max_winding):
    """Canonical arcs with |w| <= max_winding that do not cross themselves."""
    found = []
    for start, end in itertools.product(marked_points(params), repeat=2):
        for w in range(-max_winding, max_winding + 1):
            arc = Arc(start, end, w)
            if (start == end and w == 0) or not is_canonical(arc):
                continue
            if not arcs_cross(arc, arc):
                found.append(arc)
    return sorted(found, key=arc_sort_key)


def _crossing_table(arcs):
    return {(a, b): arcs_cross(a, b) for a, b in itertools.combinations(arcs, 2)}


def enumerate_configurations(params, bounds):
    """All reduced non-crossing configurations within the bounds, each once.

    Depth-first extension by arcs of increasing index; both properties are
    inherited by subsets, so pruning at every step is exact.
    """
    arcs = candidate_arcs(params, bounds.max_winding)
    limit = bounds.arcs_limit(params)
    crossing = _crossing_table(arcs)
    found = []

    def extend(chosen, start, descriptor_of):
        coll = Collection(params, tuple(arcs[n] for n in chosen))
        found.append(coll)
        if len(chosen) == limit:
            return
        for n in range(start, len(arcs)):
            arc = arcs[n]
            if any(crossing[(arcs[m], arc)] for m in chosen):
                continue
            if descriptor_of.contains(arc):
                continue
            bigger = Collection(params, coll.arcs + (arc,))
            if any(bigger.without(old).descriptor().contains(old) for old in coll.arcs):
                continue
            extend(chosen + [n], n + 1, bigger.descriptor())

    extend([], 0, Collection(params).descriptor())
    return found


def naive_configurations(params, bounds):
    """Generate-and-filter oracle: test every subset directly."""
    from .collections import is_arc_collection, is_reduced

    arcs = candidate_arcs(params, bounds.max_winding)
    found = []
    for size in range(bounds.arcs_limit(params) + 1):
        for subset in itertools.combinations(arcs, size):
            coll = Collection(params, subset)
            if is_arc_collection(coll.arcs)[0] and is_reduced(coll)[0]:
                found.append(coll)
    return found


@dataclass
class ThickClass:
    descriptor: SubgroupoidDescriptor
    representatives: list = field(default_factory=list)
    exceptional: bool = False
    family: bool = False

    @property
    def size(self):
        return min(len(c) for c in self.representatives)

    def to_json(self):
        return {"descriptor": self.descriptor.to_json(), "label": self.descriptor.label(),
                "size": self.size, "exceptional": self.exceptional, "family": self.family,
                "representatives": [[str(a) for a in c.arcs] for c in self.representatives]}


def thick_classes(configs):
    grouped = {}
    for coll in configs:
        grouped.setdefault(coll.descriptor(), []).append(coll)
    classes = [ThickClass(d, reps, any(is_exceptional_collection(c.arcs) for c in reps))
               for d, reps in grouped.items()]
    return sorted(classes, key=_class_key)


def _class_key(cls):
    return (cls.size, cls.descriptor.label(), str(cls.descriptor.base))


def rotate(descriptor, k, params):
    """Image of a descriptor under adding k to the winding of every X-to-Y arc.

    Block roots lie on X whenever the block meets X, so only Y potentials in
    mixed blocks move.
    """
    pot = dict(descriptor.base)
    for block, period in zip(descriptor.blocks, descriptor.periods):
        if block[0].side != "X":
            continue
        for v in block:
            if v.side == "Y":
                value = pot[v] + k
                pot[v] = value % period if period else value
    base = tuple((v, pot[v]) for v, _ in descriptor.base)
    return SubgroupoidDescriptor(descriptor.blocks, descriptor.periods, base)


def _mixed_blocks(descriptor):
    return [(block, period) for block, period in zip(descriptor.blocks, descriptor.periods)
            if block[0].side == "X" and block[-1].side == "Y"]


def is_family(descriptor):
    """Whether the rotation orbit is infinite."""
    return any(period == 0 for _, period in _mixed_blocks(descriptor))


def orbit_key(descriptor, params):
    """A canonical point of the rotation orbit."""
    mixed = _mixed_blocks(descriptor)
    for block, period in mixed:
        if period == 0:
            first_y = next(v for v in block if v.side == "Y")
            return rotate(descriptor, -descriptor.potential(first_y), params)
    modulus = math.lcm(*(period for _, period in mixed)) if mixed else 1
    images = [rotate(descriptor, k, params) for k in range(modulus)]
    return min(images, key=lambda d: (d.base, d.periods))


def rotation_quotient(classes, params):
    """Merge classes lying in one rotation orbit."""
    merged = {}
    for cls in classes:
        key = orbit_key(cls.descriptor, params)
        if key not in merged:
            merged[key] = ThickClass(key, [], False, is_family(key))
        target = merged[key]
        target.representatives.extend(cls.representatives)
        target.exceptional |= cls.exceptional
    return sorted(merged.values(), key=_class_key)


def _rotation_range(first, second):
    spread = sum(abs(w) for _, w in first.base) + sum(abs(w) for _, w in second.base)
    spread += sum(first.periods) + sum(second.periods)
    return range(-spread - 2, spread + 3)


def quotient_leq(first, second, params):
    """Some rotation of ``second`` contains ``first``."""
    if not _mixed_blocks(second):
        return descriptor_leq(first, second)
    return any(descriptor_leq(first, rotate(second, k, params))
               for k in _rotation_range(first, second))


def hasse(classes, params=None, quotient=False):
    """Cover relations of the inclusion order as a DiGraph on class indices."""
    order = nx.DiGraph()
    order.add_nodes_from(range(len(classes)))
    for i, j in itertools.permutations(range(len(classes)), 2):
        first, second = classes[i].descriptor, classes[j].descriptor
        below = quotient_leq(first, second, params) if quotient else descriptor_leq(first, second)
        if below:
            order.add_edge(i, j)
    reduced = nx.transitive_reduction(order)
    reduced.add_nodes_from(order.nodes)
    return reduced


def build_lattice(params, max_winding, quotient=False, max_arcs=None):
    configs = enumerate_configurations(params, EnumerationBounds(max_winding, max_arcs))
    classes = thick_classes(configs)
    if quotient:
        classes = rotation_quotient(classes, params)
    return classes, hasse(classes, params, quotient)


def lattice_json(classes, covers):
    return {"classes": [cls.to_json() for cls in classes],
            "covers": sorted([list(edge) for edge in covers.edges])}


# Cover relations of the quotient lattice for r,n,m = 2,3,0, bottom to top.
REFERENCE_EDGES = (
    "AB AC AD AE AF AG AH BI BJ BO BN CI CM CK DJ DM DL EP EK EL FQ FK FL GM GN "
    "HO HM IR JR KS LS MR NP NR OQ OR QS PS RS").split()
REFERENCE_CROSSED = frozenset("ACDEFKLS")
REFERENCE_FAMILIES = frozenset("EFKL")


def reference_lattice_graph():
    graph = nx.DiGraph()
    graph.add_nodes_from("ABCDEFGHIJKLMNOPQRS")
    graph.add_edges_from((edge[0], edge[1]) for edge in REFERENCE_EDGES)
    for node in graph:
        graph.nodes[node]["exceptional"] = node in REFERENCE_CROSSED
        graph.nodes[node]["family"] = node in REFERENCE_FAMILIES
    return graph


def reference_lattice_matching(classes, covers):
    """A label-preserving isomorphism to the drawn lattice, or None.

    Vertices must agree on the exceptional marking and on being a family.
    """
    ours = nx.DiGraph(covers)
    for n, cls in enumerate(classes):
        ours.nodes[n]["exceptional"] = cls.exceptional
        ours.nodes[n]["family"] = cls.family
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(
        ours, reference_lattice_graph(),
        node_match=lambda a, b: a["exceptional"] == b["exceptional"] and a["family"] == b["family"])
    return next(matcher.isomorphisms_iter(), None)


def _longest_chain_ranks(covers):
    ranks = {}
    for node in nx.topological_sort(covers):
        preds = list(covers.predecessors(node))
        ranks[node] = 1 + max(ranks[p] for p in preds) if preds else 0
    return ranks


def render_dot(covers, labels=None):
    """Deterministic DOT text, one rank per longest-chain level from the bottom."""
    labels = labels or {}
    ranks = _longest_chain_ranks(covers)
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for node in sorted(covers.nodes):
        text = str(labels.get(node, node)).replace('"', r"\"")
        lines.append(f'  n{node} [label="{text}"];')
    for level in sorted(set(ranks.values())):
        same = " ".join(f"n{n};" for n in sorted(covers.nodes) if ranks[n] == level)
        lines.append(f"  {{ rank=same; {same} }}")
    for u, v in sorted(covers.edges):
        lines.append(f"  n{u} -> n{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _strip_x(point, level, params):
    """Horizontal position of a lifted point on the strip of width one."""
    if point.side == "X":
        return level + (point.index - 0.5) / params.p
    return level + 1 - (point.index - 0.5) / params.q


def _arc_path(arc, params, samples=48):
    x0, x1 = _strip_x(arc.start, 0, params), _strip_x(arc.end, arc.w, params)
    y0 = 1.0 if arc.start.side == "X" else 0.0
    y1 = 1.0 if arc.end.side == "X" else 0.0
    bulge = 0.0 if y0 != y1 else (0.45 if y0 == 1.0 else -0.45)
    points = []
    for n in range(samples + 1):
        t = n / samples
        points.append((x0 + (x1 - x0) * t, y0 + (y1 - y0) * t - bulge * 4 * t * (1 - t)))
    return points


def render_svg(coll, width=480, height=240):
    """Arcs drawn on the cylinder cut open into a rectangle; dashed sides are glued."""
    params = coll.params
    margin = 30
    inner_w, inner_h = width - 2 * margin, height - 2 * margin

    def place(x, y):
        return margin + x * inner_w, margin + (1 - y) * inner_h

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>']
    left, top = place(0, 1)
    right, bottom = place(1, 0)
    out.append(f'<line x1="{left}" y1="{top}" x2="{right}" y2="{top}" stroke="black"/>')
    out.append(f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>')
    for x in (left, right):
        out.append(f'<line x1="{x}" y1="{top}" x2="{x}" y2="{bottom}" stroke="black" '
                   'stroke-dasharray="6,4"/>')
    for point in marked_points(params):
        cx, cy = place(_strip_x(point, 0, params), 1.0 if point.side == "X" else 0.0)
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="black"/>')
        dy = -8 if point.side == "X" else 16
        out.append(f'<text x="{cx:.2f}" y="{cy + dy:.2f}" font-size="12" '
                   f'text-anchor="middle">{point}</text>')
    for arc in coll.arcs:
        pieces, current, sheet = [], [], None
        for x, y in _arc_path(arc, params):
            here = math.floor(x) if x != math.floor(x) or not current else sheet
            if sheet is not None and here != sheet:
                pieces.append(current)
                current = []
            sheet = here
            current.append(place(x - here, y))
        pieces.append(current)
        for piece in pieces:
            if len(piece) < 2:
                continue
            path = " ".join(f"{x:.2f},{y:.2f}" for x, y in piece)
            out.append(f'<polyline points="{path}" fill="none" stroke="steelblue" '
                       f'stroke-width="2"><title>{arc}</title></polyline>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
