"""Shape recognition: unicyclic decomposition, block kinds, subdivisions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .graph import (
    Graph,
    GraphError,
    build_graph,
    structure_report,
)


class NotUnicyclic(GraphError):
    pass


class NotABlock(GraphError):
    pass


class BadEdge(GraphError):
    pass


@dataclass(frozen=True)
class AttachedTree:
    root: int
    edges: frozenset[int]
    vertices: frozenset[int]
    leaves: tuple[int, ...]  # non-root degree-1 vertices, ascending

    @property
    def leaf_count(self) -> int:
        return len(self.leaves)

    @property
    def is_path(self) -> bool:
        # a rooted tree with at most one non-root leaf is a path ending at the root
        return len(self.leaves) <= 1


def attached_trees(g: Graph, core_vertices: Iterable[int], core_edges: Iterable[int]) -> dict[int, AttachedTree]:
    """Trees hanging off each core vertex once ``core_edges`` are removed.

    Assumes every edge outside the core is a bridge, so the components of
    ``G - core_edges`` are trees each meeting the core in a single vertex.
    """
    core_edges = set(core_edges)
    result = {}
    for root in sorted(core_vertices):
        seen = {root}
        tree_edges = set()
        stack = [root]
        while stack:
            v = stack.pop()
            for w, e in g.adj[v]:
                if e in core_edges or e in tree_edges:
                    continue
                tree_edges.add(e)
                seen.add(w)
                stack.append(w)
        leaves = tuple(sorted(v for v in seen if v != root and g.degree(v) == 1))
        result[root] = AttachedTree(root, frozenset(tree_edges), frozenset(seen), leaves)
    return result


def pendant_edge(g: Graph, leaf: int) -> int:
    return g.adj[leaf][0][1]


@dataclass(frozen=True)
class UnicyclicDecomposition:
    cycle: tuple[int, ...]
    cycle_edges: tuple[int, ...]  # cycle_edges[i] joins cycle[i] and cycle[i+1]
    trees: tuple[AttachedTree, ...]
    leaf_counts: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.cycle)


def _cycle_order(g: Graph, cycle_edges: set[int]) -> list[int]:
    nbrs: dict[int, list[int]] = {}
    for e in cycle_edges:
        u, v = g.edges[e]
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    start = min(nbrs)
    order = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        order.append(cur)
        a, b = nbrs[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


def unicyclic_decompose(g: Graph) -> UnicyclicDecomposition:
    rep = structure_report(g)
    if not rep.connected or rep.cyclomatic != 1:
        raise NotUnicyclic(f"connected={rep.connected}, cyclomatic={rep.cyclomatic}")
    cyc = set(range(g.m)) - rep.bridges
    order = _cycle_order(g, cyc)
    s = len(order)
    cycle_edges = tuple(g.edge_index(order[i], order[(i + 1) % s]) for i in range(s))
    trees = attached_trees(g, order, cyc)
    tree_seq = tuple(trees[v] for v in order)
    return UnicyclicDecomposition(
        cycle=tuple(order),
        cycle_edges=cycle_edges,
        trees=tree_seq,
        leaf_counts=tuple(t.leaf_count for t in tree_seq),
    )


# -- block kinds -------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    length: int


@dataclass(frozen=True)
class K4MinusE:
    # v1, v3: the adjacent degree-3 pair; v2, v4: the two degree-2 vertices
    v1: int
    v2: int
    v3: int
    v4: int


@dataclass(frozen=True)
class K4:
    pass


@dataclass(frozen=True)
class CompleteBlock:
    size: int


@dataclass(frozen=True)
class Theta:
    a: int
    b: int
    c: int
    paths: tuple[tuple[int, ...], ...]  # vertex sequences u..v, sorted by length

    @property
    def ends(self) -> tuple[int, int]:
        return self.paths[0][0], self.paths[0][-1]


@dataclass(frozen=True)
class OtherTwoConnected:
    pass


BlockKind = Union[Cycle, K4MinusE, K4, CompleteBlock, Theta, OtherTwoConnected]


def _theta_paths(g: Graph, edge_set: frozenset[int], u: int, v: int) -> list[tuple[int, ...]]:
    paths = []
    for w, e in sorted(g.adj[u]):
        if e not in edge_set:
            continue
        path = [u, w]
        prev_e = e
        while path[-1] != v:
            x = path[-1]
            step = [(y, f) for y, f in g.adj[x] if f in edge_set and f != prev_e]
            (y, f), = step
            path.append(y)
            prev_e = f
        paths.append(tuple(path))
    return sorted(paths, key=lambda p: (len(p), p))


def block_kind(g: Graph, block: Iterable[int]) -> BlockKind:
    block = frozenset(block)
    rep = structure_report(g)
    if not any(b.edges == block and not b.trivial for b in rep.blocks):
        raise NotABlock("edge set is not a 2-connected block of the graph")
    deg: dict[int, int] = {}
    for e in block:
        for x in g.edges[e]:
            deg[x] = deg.get(x, 0) + 1
    nv, ne = len(deg), len(block)
    if all(d == 2 for d in deg.values()):
        return Cycle(ne)
    if ne == nv * (nv - 1) // 2:
        return K4() if nv == 4 else CompleteBlock(nv)
    branch = sorted(x for x, d in deg.items() if d == 3)
    if len(branch) == 2 and all(d in (2, 3) for d in deg.values()):
        u, v = branch
        paths = _theta_paths(g, block, u, v)
        a, b, c = (len(p) - 1 for p in paths)
        if (a, b, c) == (1, 2, 2):
            v2, v4 = sorted(x for x, d in deg.items() if d == 2)
            return K4MinusE(u, v2, v, v4)
        return Theta(a, b, c, tuple(paths))
    return OtherTwoConnected()


def theta_shape(g: Graph) -> Theta | None:
    """The Θ structure of ``g`` itself (K4-e included), or None."""
    rep = structure_report(g)
    if not rep.connected or len(rep.blocks) != 1 or rep.cyclomatic != 2:
        return None
    block = rep.blocks[0].edges
    deg = [g.degree(v) for v in range(g.n)]
    branch = [v for v in range(g.n) if deg[v] == 3]
    if len(branch) != 2 or any(d not in (2, 3) for d in deg):
        return None
    paths = _theta_paths(g, block, *branch)
    a, b, c = (len(p) - 1 for p in paths)
    return Theta(a, b, c, tuple(paths))


# -- subdivision -------------------------------------------------------------

def subdivide(g: Graph, edge: int, times: int = 1) -> Graph:
    """Replace edge ``uv`` by a path of ``times + 1`` edges.

    Edge ``edge`` keeps its index and becomes ``u x1``; the new edges
    ``x1 x2, ..., x_t v`` are appended in order, new vertices get ids
    ``n, n+1, ...``.
    """
    if not (0 <= edge < g.m):
        raise BadEdge(f"edge index {edge} out of range")
    if times < 1:
        raise BadEdge(f"times must be >= 1, got {times}")
    u, v = g.edges[edge]
    fresh = list(range(g.n, g.n + times))
    pairs = list(g.edges)
    pairs[edge] = (u, fresh[0])
    chain = fresh + [v]
    pairs.extend((chain[i], chain[i + 1]) for i in range(times))
    return build_graph(g.n + times, pairs)


SubdivisionTrace = Sequence[tuple[int, int]]


def apply_trace(g: Graph, trace: SubdivisionTrace) -> Graph:
    """Replay ``(edge, times)`` subdivision steps in order."""
    for edge, times in trace:
        g = subdivide(g, edge, times)
    return g
