"""Simple undirected graphs with stable edge indexing, plus structural queries."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INF = math.inf


class GraphError(ValueError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0..n-1``.

    ``edges[i]`` is the i-th input pair stored as ``(u, v)`` with ``u < v``;
    edge indices never change for the lifetime of the object, since
    colorings are aligned with them.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)
    _index: dict = field(repr=False, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adj[v]]

    def edge_index(self, u: int, v: int) -> int:
        """Index of edge ``uv``; raises KeyError when absent."""
        return self._index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._index

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a


def build_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise VertexOutOfRange(f"need at least one vertex, got n={n}")
    edges = []
    index = {}
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for pair in pairs:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        key = (u, v) if u < v else (v, u)
        if key in index:
            raise DuplicateEdge(f"duplicate edge {key}")
        index[key] = len(edges)
        adj[u].append((v, len(edges)))
        adj[v].append((u, len(edges)))
        edges.append(key)
    return Graph(n, tuple(edges), tuple(tuple(a) for a in adj), index)


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in g.adj[v]:
            if dist[w] == INF:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    return INF not in bfs_distances(g, 0)


def distance(g: Graph, u: int, v: int) -> int:
    d = bfs_distances(g, u)[v]
    if d == INF:
        raise Disconnected(f"no path between {u} and {v}")
    return int(d)


def diameter(g: Graph) -> float:
    best = 0
    for s in range(g.n):
        d = max(bfs_distances(g, s))
        if d == INF:
            return INF
        best = max(best, d)
    return best


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or INF for a forest.

    A BFS from every vertex; a non-tree edge ``vw`` closes a walk of length
    ``d(v) + d(w) + 1``, and the minimum over all roots is the girth.
    """
    best = INF
    for s in range(g.n):
        dist = [-1] * g.n
        parent_edge = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, e in g.adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent_edge[w] = e
                    queue.append(w)
                elif e != parent_edge[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


@dataclass(frozen=True)
class Block:
    edges: frozenset[int]
    vertices: frozenset[int]

    @property
    def trivial(self) -> bool:
        return len(self.edges) == 1


def _lowpoint_dfs(g: Graph) -> tuple[set[int], list[Block]]:
    """Bridges and blocks (biconnected components) by one iterative DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    blocks: list[Block] = []
    edge_stack: list[int] = []
    clock = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, edge used to enter it, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            if pos < len(g.adj[v]):
                stack[-1] = (v, via, pos + 1)
                w, e = g.adj[v][pos]
                if e == via:
                    continue
                if disc[w] < 0:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, 0))
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                continue
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.add(via)
            if low[v] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == via:
                        break
                verts = frozenset(x for e in comp for x in g.edges[e])
                blocks.append(Block(frozenset(comp), verts))
    return bridges, blocks


def bridges(g: Graph) -> set[int]:
    return _lowpoint_dfs(g)[0]


def blocks(g: Graph) -> list[Block]:
    return _lowpoint_dfs(g)[1]


@dataclass(frozen=True)
class StructureReport:
    connected: bool
    diameter: float
    bridges: frozenset[int]
    blocks: tuple[Block, ...]
    girth: float
    cyclomatic: int
    is_tree: bool
    is_cycle: bool
    is_complete: bool

    @property
    def nontrivial_blocks(self) -> list[Block]:
        return [b for b in self.blocks if not b.trivial]


def structure_report(g: Graph) -> StructureReport:
    connected = is_connected(g)
    brs, blks = _lowpoint_dfs(g)
    cyclomatic = g.m - g.n + 1
    return StructureReport(
        connected=connected,
        diameter=diameter(g) if connected else INF,
        bridges=frozenset(brs),
        blocks=tuple(sorted(blks, key=lambda b: min(b.edges))),
        girth=girth(g),
        cyclomatic=cyclomatic,
        is_tree=connected and cyclomatic == 0,
        is_cycle=connected and g.n >= 3 and all(g.degree(v) == 2 for v in range(g.n)),
        is_complete=connected and g.m == g.n * (g.n - 1) // 2,
    )


def edge_subgraph(g: Graph, edge_ids: Sequence[int]) -> tuple[Graph, list[int]]:
    """Subgraph spanned by ``edge_ids`` with vertices relabelled densely.

    Returns the subgraph (edge i is ``edge_ids[i]``) and the list mapping
    new vertex ids back to ids in ``g``.
    """
    back: list[int] = []
    fwd: dict[int, int] = {}
    pairs = []
    for e in edge_ids:
        u, v = g.edges[e]
        for x in (u, v):
            if x not in fwd:
                fwd[x] = len(back)
                back.append(x)
        pairs.append((fwd[u], fwd[v]))
    return build_graph(max(len(back), 1), pairs), back


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``, edge order kept."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
