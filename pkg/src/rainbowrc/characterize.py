"""Classification of graphs with rc close to m, and certificate colorings.

Unicyclic graphs are classified from the leaf counts ``l(v_i)`` of the
trees hanging off their cycle.  Leaf-count patterns are matched against
every rotation and reflection of the cycle, so the cycle orientation chosen
by :func:`unicyclic_decompose` never affects the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .engine import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Bounds,
    EdgeColoring,
    Exact,
    RcResult,
    is_rainbow_connected,
    lower_bound,
)
from .engine import feasible_k
from .graph import (
    Disconnected,
    Graph,
    GraphError,
    edge_subgraph,
    is_connected,
    structure_report,
)
from .structure import (
    K4,
    Cycle,
    K4MinusE,
    SubdivisionTrace,
    UnicyclicDecomposition,
    apply_trace,
    attached_trees,
    block_kind,
    pendant_edge,
    theta_shape,
    unicyclic_decompose,
)
from .graph import build_graph


class LabelMismatch(ValueError):
    pass


class NotExactClass(ValueError):
    pass


class ConstructionFailedVerification(AssertionError):
    pass


class NotAPartition(ValueError):
    pass


class PartNotConnected(ValueError):
    pass


class SubColoringInvalid(ValueError):
    pass


class BadTrace(ValueError):
    pass


class NotTheta(ValueError):
    pass


TAGS = (
    "Tree", "CompleteGraph", "CycleExact",
    "G1", "G2", "H1", "H2", "H3", "J1", "J2", "L1", "L2",
    "Girth7Cycle", "Girth7Other", "GirthGe8Unicyclic",
    "MClass", "Theta5", "ThetaLarge", "K4Block", "K4eNonM",
    "MultiBlock", "OtherBlock",
)


@dataclass(frozen=True)
class ClassLabel:
    tag: str
    k: int | None = None  # cycle length, CycleExact only

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown class tag {self.tag!r}")

    def __str__(self) -> str:
        return f"{self.tag}({self.k})" if self.tag == "CycleExact" else self.tag


# -- leaf-count patterns -------------------------------------------------------

def dihedral_orders(s: int) -> list[list[int]]:
    """All rotations, then all reflections, of ``range(s)``."""
    orders = []
    for d in (1, -1):
        for r in range(s):
            orders.append([(r + d * j) % s for j in range(s)])
    return orders


def _first_match(leaves: Sequence[int], pattern: Callable[[list[int]], bool]) -> list[int] | None:
    for order in dihedral_orders(len(leaves)):
        if pattern([leaves[p] for p in order]):
            return order
    return None


def _g1_all(l):
    return all(x >= 1 for x in l)


def _g1_big(l):
    return l[0] >= 3


def _h2(l):
    return l[0] == l[2] == 0 and l[1] <= 1 and l[3] <= 1


def _h3_big(l):
    return l[0] >= 4


def _h3_run(l):
    return l[0] >= 1 and l[1] >= 2 and l[2] >= 1


def _h1_two(l):
    return l[0] >= 2


def _h1_three(l):
    return l[0] == l[1] == l[2] == 1


def _h1_adjacent(l):
    return l[0] == l[1] == 1 and l[2] == l[3] == 0


def _j1_a(l):
    return l[0] <= 2 and l[2] <= 1 and l[1] == l[3] == l[4] == 0


def _j1_b(l):
    return l[0] <= 1 and l[1] <= 1 and l[2] <= 1 and l[3] == l[4] == 0


def _l1(l):
    return l[0] <= 1 and l[3] <= 1 and l[1] == l[2] == l[4] == l[5] == 0


def _has(leaves, *patterns) -> bool:
    return any(_first_match(leaves, p) is not None for p in patterns)


def unicyclic_family(dec: UnicyclicDecomposition) -> str:
    """Leaf-count family of a unicyclic graph, bare cycles included.

    Returns one of G1, G2, H1, H2, H3, C5, J1, J2, L1, L2, C7, Girth7Other,
    GirthGe8Unicyclic.  Bare C3, C4 and C6 fall in G2, H2 and L1.
    """
    s, l = dec.s, dec.leaf_counts
    if s == 3:
        return "G1" if _g1_all(l) or max(l) >= 3 else "G2"
    if s == 4:
        if _has(l, _h2):
            return "H2"
        if _has(l, _h3_big, _h3_run):
            return "H3"
        return "H1"
    if s == 5:
        if max(l) == 0:
            return "C5"
        return "J1" if _has(l, _j1_a, _j1_b) else "J2"
    if s == 6:
        return "L1" if _has(l, _l1) else "L2"
    if s == 7:
        return "C7" if max(l) == 0 else "Girth7Other"
    return "GirthGe8Unicyclic"


def _k4e_trees(g: Graph, kind: K4MinusE, block: frozenset[int]):
    return attached_trees(g, (kind.v1, kind.v2, kind.v3, kind.v4), block)


def class_label(g: Graph) -> ClassLabel:
    if g.n < 2:
        raise GraphError("classification needs at least two vertices")
    rep = structure_report(g)
    if not rep.connected:
        raise Disconnected("classification is defined for connected graphs only")
    if rep.is_tree:
        return ClassLabel("Tree")
    if rep.is_complete:
        return ClassLabel("CompleteGraph")
    if rep.is_cycle:
        return ClassLabel("CycleExact", g.n)
    big = rep.nontrivial_blocks
    if len(big) >= 2:
        return ClassLabel("MultiBlock")
    block = big[0].edges
    kind = block_kind(g, block)
    if isinstance(kind, Cycle):
        return ClassLabel(unicyclic_family(unicyclic_decompose(g)))
    if isinstance(kind, K4MinusE):
        trees = _k4e_trees(g, kind, block)
        in_m = (trees[kind.v1].leaf_count == 0 and trees[kind.v3].leaf_count == 0
                and trees[kind.v2].is_path and trees[kind.v4].is_path)
        return ClassLabel("MClass" if in_m else "K4eNonM")
    if isinstance(kind, K4):
        return ClassLabel("K4Block")
    theta = theta_shape(g)
    if theta is not None:
        return ClassLabel("Theta5" if g.m == 5 else "ThetaLarge")
    return ClassLabel("OtherBlock")


# -- exact values ----------------------------------------------------------------

_MINUS = {
    "G2": 2, "H2": 2,
    "G1": 3, "H1": 3, "J1": 3, "L1": 3, "MClass": 3, "Theta5": 3,
    "H3": 4,
}

_REASON = {
    "Tree": "tree: rc = m",
    "CompleteGraph": "complete graph: rc = 1",
    "CycleExact": "cycle: rc = ceil(k/2), triangle 1",
    "G1": "girth-3 class G1: rc = m-3",
    "G2": "girth-3 class G2: rc = m-2",
    "H1": "girth-4 class H1: rc = m-3",
    "H2": "girth-4 class H2: rc = m-2",
    "H3": "girth-4 class H3: rc = m-4",
    "J1": "girth-5 class J1: rc = m-3",
    "L1": "girth-6 class L1: rc = m-3",
    "MClass": "K4-e with attached paths: rc = m-3",
    "Theta5": "theta graph on 5 edges: rc = m-3",
}


def exact_value(g: Graph, label: ClassLabel) -> int | None:
    """rc(G) when the label alone determines it, else None."""
    if label.tag == "Tree":
        return g.m
    if label.tag == "CompleteGraph":
        return 1
    if label.tag == "CycleExact":
        return 1 if label.k == 3 else -(-label.k // 2)
    if label.tag in _MINUS:
        return g.m - _MINUS[label.tag]
    return None


def _upper_bound(g: Graph, label: ClassLabel) -> tuple[int, str]:
    if label.tag == "GirthGe8Unicyclic":
        s = int(structure_report(g).girth)
        return g.m - s // 2, "unicyclic with cycle length k: rc <= m - floor(k/2)"
    if label.tag == "K4Block":
        return g.m - 5, "K4 block colored with one fresh color: rc <= m-5"
    if label.tag == "MultiBlock":
        return g.m - 4, "two edge-disjoint 2-connected subgraphs: rc <= m-4"
    if label.tag == "ThetaLarge":
        return g.m - 4, "theta graph with m >= 6: rc <= m-4"
    return g.m - 4, "not a tree and outside the rc = m-2, m-3 classes: rc <= m-4"


def rc_characterize(g: Graph, budget: int = DEFAULT_BUDGET) -> RcResult:
    label = class_label(g)
    value = exact_value(g, label)
    if value is not None:
        return Exact(value, certificate(g, label), _REASON[label.tag])
    lo, lo_reason = lower_bound(g)
    hi, hi_reason = _upper_bound(g, label)
    if lo > hi:
        raise AssertionError(f"lower bound {lo} exceeds upper bound {hi} for {label}")
    if lo == hi:
        try:
            cert = feasible_k(g, lo, budget)
        except BudgetExceeded:
            return Bounds(lo, hi, lo_reason, hi_reason)
        if cert is None:
            raise ConstructionFailedVerification(f"no {lo}-coloring although {hi_reason}")
        return Exact(lo, cert, f"{lo_reason} meets {hi_reason}")
    return Bounds(lo, hi, lo_reason, hi_reason)


# -- certificates ------------------------------------------------------------------

def cycle_colors(k: int) -> list[int]:
    """Rainbow coloring of C_k along the cycle: 1..ceil(k/2), then 1..floor(k/2)."""
    if k == 3:
        return [1, 1, 1]
    h = -(-k // 2)
    return list(range(1, h + 1)) + list(range(1, k - h + 1))


def _unicyclic_certificate(
    g: Graph,
    dec: UnicyclicDecomposition,
    order: Sequence[int],
    pendants: Sequence[tuple[int, int]],
    cycle: Sequence[int],
) -> list[int]:
    """Tree edges get distinct colors ``1..t``, with the pendant edge of a
    leaf in ``T(v_j)`` carrying the requested color for each ``(j, color)``;
    then cycle edge ``v_j v_{j+1}`` (in the given order) gets ``cycle[j]``."""
    s = dec.s
    verts = [dec.cycle[p] for p in order]
    trees = [dec.trees[p] for p in order]
    t = g.m - s
    colors = [0] * g.m
    taken_leaves: set[int] = set()
    for j, color in pendants:
        leaf = next(x for x in trees[j].leaves if x not in taken_leaves)
        taken_leaves.add(leaf)
        colors[pendant_edge(g, leaf)] = color
    spare = iter(sorted(set(range(1, t + 1)) - {c for _, c in pendants}))
    cycle_set = set(dec.cycle_edges)
    for e in range(g.m):
        if e not in cycle_set and colors[e] == 0:
            colors[e] = next(spare)
    for j in range(s):
        colors[g.edge_index(verts[j], verts[(j + 1) % s])] = cycle[j]
    return colors


def _unicyclic_case(g: Graph, label: ClassLabel) -> list[int]:
    dec = unicyclic_decompose(g)
    l, m, s = dec.leaf_counts, g.m, dec.s
    t = m - s
    ident = list(range(s))
    if label.tag == "G1":
        if _g1_all(l):
            return _unicyclic_certificate(g, dec, ident, [(0, 1), (1, 2), (2, 3)], [3, 1, 2])
        order = _first_match(l, _g1_big)
        return _unicyclic_certificate(g, dec, order, [(0, 1), (0, 2), (0, 3)], [1, 2, 3])
    if label.tag == "G2":
        return _unicyclic_certificate(g, dec, ident, [], [t + 1] * 3)
    if label.tag == "H2":
        return _unicyclic_certificate(g, dec, ident, [], [t + 1, t + 2, t + 1, t + 2])
    if label.tag == "H3":
        order = _first_match(l, _h3_big)
        if order is not None:
            return _unicyclic_certificate(
                g, dec, order, [(0, 1), (0, 2), (0, 3), (0, 4)], [1, 2, 3, 4])
        order = _first_match(l, _h3_run)
        return _unicyclic_certificate(
            g, dec, order, [(0, 1), (1, 2), (1, 3), (2, 4)], [4, 1, 3, 2])
    if label.tag == "H1":
        order = _first_match(l, _h1_two)
        if order is not None:
            return _unicyclic_certificate(g, dec, order, [(0, 1), (0, 2)], [m - 3, 1, 2, m - 3])
        order = _first_match(l, _h1_three)
        if order is not None:
            return _unicyclic_certificate(
                g, dec, order, [(0, 1), (1, 2), (2, 3)], [3, 1, m - 3, 2])
        # two adjacent single-leaf trees: the fresh color m-3 takes the
        # place of the missing third pendant color
        order = _first_match(l, _h1_adjacent)
        return _unicyclic_certificate(g, dec, order, [(0, 1), (1, 2)], [m - 3, 1, m - 3, 2])
    if label.tag == "J1":
        order = _first_match(l, lambda x: x[0] >= 1)
        return _unicyclic_certificate(g, dec, order, [(0, 1)], [m - 4, m - 3, 1, m - 4, m - 3])
    if label.tag == "L1":
        return _unicyclic_certificate(g, dec, ident, [], [m - 5, m - 4, m - 3] * 2)
    raise NotExactClass(str(label))


def _m_class_certificate(g: Graph) -> list[int]:
    rep = structure_report(g)
    block = rep.nontrivial_blocks[0].edges
    kind = block_kind(g, block)
    m = g.m
    colors = [0] * m
    spare = iter(range(1, m - 4))
    for e in range(m):
        if e not in block:
            colors[e] = next(spare)
    v1, v2, v3, v4 = kind.v1, kind.v2, kind.v3, kind.v4
    for u, v in ((v1, v2), (v3, v4), (v1, v3)):
        colors[g.edge_index(u, v)] = m - 4
    for u, v in ((v2, v3), (v1, v4)):
        colors[g.edge_index(u, v)] = m - 3
    return colors


def _construct(g: Graph, label: ClassLabel) -> list[int]:
    tag = label.tag
    if tag == "Tree":
        return list(range(1, g.m + 1))
    if tag == "CompleteGraph":
        return [1] * g.m
    if tag == "CycleExact":
        dec = unicyclic_decompose(g)
        return _unicyclic_certificate(g, dec, list(range(dec.s)), [], cycle_colors(dec.s))
    if tag == "MClass":
        return _m_class_certificate(g)
    if tag == "Theta5":
        return list(theta_coloring(g).colors)
    return _unicyclic_case(g, label)


def certificate(g: Graph, label: ClassLabel) -> EdgeColoring:
    actual = class_label(g)
    if actual != label:
        raise LabelMismatch(f"graph is {actual}, not {label}")
    value = exact_value(g, label)
    if value is None:
        raise NotExactClass(f"{label} has bounds only")
    colors = _construct(g, label)
    try:
        coloring = EdgeColoring(tuple(colors))
    except ValueError as exc:
        raise ConstructionFailedVerification(f"{label}: malformed coloring {colors}") from exc
    if coloring.num_colors != value:
        raise ConstructionFailedVerification(
            f"{label}: built {coloring.num_colors} colors, expected {value}")
    verdict = is_rainbow_connected(g, coloring)
    if not verdict:
        raise ConstructionFailedVerification(
            f"{label}: coloring {colors} fails on pair {verdict.witness}")
    return coloring


# -- composition, subdivision and theta colorings -------------------------------

def compose_partition_coloring(
    g: Graph, parts: Sequence[tuple[Sequence[int], EdgeColoring]]
) -> EdgeColoring:
    """Glue rainbow colorings of edge-disjoint connected parts with disjoint
    color ranges.  ``parts[i][1]`` is aligned with the edge list ``parts[i][0]``."""
    seen: list[int] = [e for edges, _ in parts for e in edges]
    if sorted(seen) != list(range(g.m)):
        raise NotAPartition("parts must cover every edge exactly once")
    colors = [0] * g.m
    offset = 0
    for edges, sub in parts:
        sub_g, _ = edge_subgraph(g, list(edges))
        if not is_connected(sub_g):
            raise PartNotConnected(f"part {list(edges)} is not connected")
        if len(sub) != len(edges) or not is_rainbow_connected(sub_g, sub):
            raise SubColoringInvalid(f"coloring of part {list(edges)} is not rainbow connected")
        for e, c in zip(edges, sub.colors):
            colors[e] = offset + c
        offset += sub.num_colors
    return EdgeColoring(tuple(colors))


def extend_subdivision_coloring(
    g: Graph, c: EdgeColoring, h: Graph, trace: SubdivisionTrace
) -> EdgeColoring:
    """Carry a rainbow coloring of ``g`` over to its subdivision ``h``.

    Each subdivided edge keeps its color on the half that keeps its index;
    every edge created by the trace gets a fresh color.
    """
    try:
        replay = apply_trace(g, trace)
    except GraphError as exc:
        raise BadTrace(str(exc)) from exc
    if replay.n != h.n or replay.edges != h.edges:
        raise BadTrace("trace does not turn g into h")
    if len(c) != g.m or not is_rainbow_connected(g, c):
        raise SubColoringInvalid("base coloring is not rainbow connected")
    k = c.num_colors
    return EdgeColoring(c.colors + tuple(range(k + 1, k + 1 + h.m - g.m)))


def _theta_from_paths(lengths: Sequence[int]) -> Graph:
    """Θ-graph with u=0, v=1 and internal vertices numbered path by path."""
    pairs = []
    nxt = 2
    for length in lengths:
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        pairs.extend(zip(chain, chain[1:]))
    return build_graph(nxt, pairs)


# base colorings, path by path from u to v
_THETA5 = ((1, 2, 2), ((1,), (1, 2), (2, 1)))
_THETA1 = ((1, 2, 3), ((1,), (1, 1), (2, 1, 2)))
_THETA2 = ((2, 2, 2), ((1, 2), (2, 1), (2, 2)))


def theta_coloring(g: Graph) -> EdgeColoring:
    shape = theta_shape(g)
    if shape is None:
        raise NotTheta("graph is not a theta graph")
    lengths = (shape.a, shape.b, shape.c)
    if g.m == 5:
        base_lengths, base_colors = _THETA5
    elif shape.a == 1:
        base_lengths, base_colors = _THETA1
    else:
        base_lengths, base_colors = _THETA2
    base = _theta_from_paths(base_lengths)
    base_coloring = EdgeColoring(tuple(c for path in base_colors for c in path))
    # subdivide the last edge of each short path up to the target length
    trace = []
    first_edge = 0
    for have, want in zip(base_lengths, lengths):
        if want > have:
            trace.append((first_edge + have - 1, want - have))
        first_edge += have
    sub = apply_trace(base, trace)
    sub_coloring = extend_subdivision_coloring(base, base_coloring, sub, trace)
    sub_shape = theta_shape(sub)
    colors = [0] * g.m
    for src, dst in zip(sub_shape.paths, shape.paths):
        for i in range(len(src) - 1):
            colors[g.edge_index(dst[i], dst[i + 1])] = sub_coloring[sub.edge_index(src[i], src[i + 1])]
    coloring = EdgeColoring(tuple(colors))
    verdict = is_rainbow_connected(g, coloring)
    if not verdict:
        raise ConstructionFailedVerification(f"theta coloring fails on pair {verdict.witness}")
    return coloring
