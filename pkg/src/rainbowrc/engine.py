"""Rainbow connectivity: verification, exact feasibility search, lower bounds."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .graph import (
    Disconnected,
    Graph,
    GraphError,
    structure_report,
)

DEFAULT_BUDGET = 5_000_000
MAX_WIDTH = 64


class ColoringLengthMismatch(ValueError):
    pass


class InvalidColoring(ValueError):
    pass


class WidthExceeded(ValueError):
    pass


class KOutOfBand(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    def __init__(self, examined: int):
        super().__init__(f"search budget exhausted after {examined} partitions")
        self.examined = examined


@dataclass(frozen=True)
class EdgeColoring:
    """Colors ``1..num_colors`` aligned with edge indices, every id used."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if colors and set(colors) != set(range(1, max(colors) + 1)):
            raise InvalidColoring(f"color ids must be exactly 1..k, got {sorted(set(colors))}")

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    @classmethod
    def normalized(cls, colors: Iterable[int]) -> "EdgeColoring":
        """Relabel arbitrary positive ids onto ``1..k`` keeping their order."""
        colors = list(colors)
        rank = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(rank[c] for c in colors))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "EdgeColoring":
        return cls(tuple(a + 1 for a in rgs))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Exact:
    value: int
    certificate: EdgeColoring
    reason: str


@dataclass(frozen=True)
class Bounds:
    lower: int
    upper: int
    lower_reason: str
    upper_reason: str


RcResult = Union[Exact, Bounds]


# -- verification ------------------------------------------------------------

class _Checker:
    """Rainbow reachability over one graph, for colorings given as bit masks."""

    def __init__(self, g: Graph):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.unicyclic = g.m - g.n + 1 <= 1

    def reaches(self, s: int, t: int, bits: Sequence[int]) -> bool:
        """Is there a rainbow s-t path?  A rainbow walk contains a rainbow
        path, so states are (vertex, used colors) without a vertex set."""
        if s == t:
            return True
        adj = self.adj
        seen = set()
        stack = [(s, 0)]
        while stack:
            v, used = stack.pop()
            for w, e in adj[v]:
                b = bits[e]
                if used & b:
                    continue
                if w == t:
                    return True
                nu = used | b
                key = (w, nu)
                if key not in seen:
                    seen.add(key)
                    stack.append((w, nu))
        return False

    def reached_from(self, s: int, bits: Sequence[int]) -> list[bool]:
        if self.unicyclic:
            return self._simple_paths_from(s, bits)
        adj = self.adj
        hit = [False] * self.n
        hit[s] = True
        seen = set()
        stack = [(s, 0)]
        while stack:
            v, used = stack.pop()
            for w, e in adj[v]:
                b = bits[e]
                if used & b:
                    continue
                hit[w] = True
                nu = used | b
                key = (w, nu)
                if key not in seen:
                    seen.add(key)
                    stack.append((w, nu))
        return hit

    def _simple_paths_from(self, s: int, bits: Sequence[int]) -> list[bool]:
        # with at most one cycle every pair has at most two simple paths,
        # so walking all rainbow simple paths from s is linear in n
        adj = self.adj
        hit = [False] * self.n
        hit[s] = True
        stack = [(s, 0, 1 << s)]
        while stack:
            v, used, onpath = stack.pop()
            for w, e in adj[v]:
                b = bits[e]
                if used & b or onpath >> w & 1:
                    continue
                hit[w] = True
                stack.append((w, used | b, onpath | 1 << w))
        return hit

    def witness(self, bits: Sequence[int]) -> tuple[int, int] | None:
        for s in range(self.n - 1):
            hit = self.reached_from(s, bits)
            for t in range(s + 1, self.n):
                if not hit[t]:
                    return s, t
        return None


def _color_bits(colors: Sequence[int]) -> list[int]:
    return [1 << (c - 1) for c in colors]


def is_rainbow_connected(g: Graph, c: EdgeColoring | Sequence[int]) -> Verdict:
    colors = c.colors if isinstance(c, EdgeColoring) else tuple(c)
    if len(colors) != g.m:
        raise ColoringLengthMismatch(f"coloring has {len(colors)} entries, graph has {g.m} edges")
    if any(x < 1 for x in colors):
        raise InvalidColoring("color ids must be positive")
    if len(set(colors)) > MAX_WIDTH:
        raise WidthExceeded(f"{len(set(colors))} colors exceed the {MAX_WIDTH}-color state width")
    rank = {x: i + 1 for i, x in enumerate(sorted(set(colors)))}
    w = _Checker(g).witness(_color_bits([rank[x] for x in colors]))
    return Verdict(w is None, w)


def _require_rc_input(g: Graph):
    if g.n < 2:
        raise GraphError("rainbow connection needs at least two vertices")
    rep = structure_report(g)
    if not rep.connected:
        raise Disconnected("rainbow connection is defined for connected graphs only")
    return rep


def lower_bound(g: Graph) -> tuple[int, str]:
    rep = _require_rc_input(g)
    diam, nb = int(rep.diameter), len(rep.bridges)
    if max(diam, nb) <= 1:
        return 1, "trivial"
    if diam >= nb:
        return diam, "diameter"
    return nb, "bridges"


# -- exact search ------------------------------------------------------------

@dataclass
class _Search:
    """Depth-first walk over restricted growth strings with exactly k blocks.

    Partial assignments are pruned with "killer" pairs that recently
    refuted a coloring: unassigned edges carry private colors, so if a pair
    has no rainbow path now it has none in any completion.
    """

    g: Graph
    k: int
    budget: int
    examined: int = 0
    killers: list = field(default_factory=list)

    def run(self) -> list[int] | None:
        g = self.g
        m = g.m
        self.checker = _Checker(g)
        self.bits = [1 << (MAX_WIDTH + e) for e in range(m)]
        self.a = [0] * m
        if m == 0:
            return None
        self.bits[0] = 1
        return self._walk(1, 1)

    def _tick(self):
        self.examined += 1
        if self.examined > self.budget:
            raise BudgetExceeded(self.examined)

    def _killed(self) -> bool:
        reaches, bits = self.checker.reaches, self.bits
        for idx, (s, t) in enumerate(self.killers):
            if not reaches(s, t, bits):
                if idx:
                    self.killers.insert(0, self.killers.pop(idx))
                return True
        return False

    def _walk(self, i: int, used: int) -> list[int] | None:
        m, k = self.g.m, self.k
        if i == m:
            if used != k:
                return None
            self._tick()
            if self._killed():
                return None
            w = self.checker.witness(self.bits)
            if w is None:
                return list(self.a)
            self.killers.insert(0, w)
            del self.killers[12:]
            return None
        left = m - i
        need = k - used
        choices = range(used) if need < left else ()
        for c in list(choices) + ([used] if used < k else []):
            self.a[i] = c
            self.bits[i] = 1 << c
            nxt = used + (c == used)
            if i < m - 1 and self.killers and self._killed():
                self._tick()
                continue
            found = self._walk(i + 1, nxt)
            if found is not None:
                return found
        self.bits[i] = 1 << (MAX_WIDTH + i)
        return None


def feasible_k(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring | None:
    """The lexicographically first rainbow-connecting partition into k classes.

    Partitions are walked as restricted growth strings over edge indices;
    for k close to m the walk only ever spends ``m - k`` merges, so it is
    polynomial in m.  Raises BudgetExceeded once more than ``budget``
    partitions (complete or pruned) have been examined.
    """
    if not (1 <= k <= g.m):
        raise ValueError(f"k must lie in 1..{g.m}, got {k}")
    if k > MAX_WIDTH:
        raise WidthExceeded(f"k={k} exceeds the {MAX_WIDTH}-color state width")
    _require_rc_input(g)
    found = _Search(g, k, budget).run()
    return None if found is None else EdgeColoring.from_rgs(found)


def rc_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> Exact:
    lo, _ = lower_bound(g)
    for k in range(lo, g.m + 1):
        c = feasible_k(g, k, budget)
        if c is not None:
            return Exact(k, c, "exhaustive search")
    raise AssertionError("all-distinct coloring is always rainbow connected")


def rc_band(g: Graph, ks: Iterable[int], budget: int = DEFAULT_BUDGET) -> dict[int, EdgeColoring | None]:
    """Feasibility map for color counts near m; None marks proven infeasible."""
    ks = sorted(set(ks), reverse=True)
    for k in ks:
        if not (max(1, g.m - 6) <= k <= g.m):
            raise KOutOfBand(f"k={k} outside the band {max(1, g.m - 6)}..{g.m}")
    return {k: feasible_k(g, k, budget) for k in ks}
