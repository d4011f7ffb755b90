"""Test corpora and the theorem cross-check harness."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .characterize import ClassLabel, class_label, rc_characterize
from .engine import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    Exact,
    feasible_k,
    is_rainbow_connected,
    rc_exact,
)
from .graph import Graph, build_graph, cycle_graph


class TooLarge(ValueError):
    pass


class InfeasibleParams(ValueError):
    pass


MAX_ENUM_N = 12


# -- rooted trees --------------------------------------------------------------

def rooted_trees(k: int) -> Iterator[tuple[int, ...]]:
    """Canonical level sequences of all rooted trees on ``k`` vertices.

    Beyer-Hedetniemi successor rule: root at level 1, sequences produced in
    decreasing lexicographic order, each unlabeled rooted tree exactly once.
    """
    if k < 1:
        return
    seq = list(range(1, k + 1))
    while True:
        yield tuple(seq)
        p = max((i for i in range(k) if seq[i] > 2), default=None)
        if p is None:
            return
        q = max(i for i in range(p) if seq[i] == seq[p] - 1)
        shift = p - q
        for i in range(p, k):
            seq[i] = seq[i - shift]


def level_sequence_parents(levels: tuple[int, ...]) -> list[int]:
    """Parent index of each node (root gets -1)."""
    parents = [-1]
    last_at = {levels[0]: 0}
    for i in range(1, len(levels)):
        parents.append(last_at[levels[i] - 1])
        last_at[levels[i]] = i
    return parents


@dataclass(frozen=True)
class UnicyclicSpec:
    girth: int
    trees: tuple[tuple[int, ...], ...]  # one level sequence per cycle vertex

    def __post_init__(self):
        if self.girth < 3 or len(self.trees) != self.girth:
            raise InfeasibleParams("need girth >= 3 and one tree per cycle vertex")

    @property
    def n(self) -> int:
        return sum(len(t) for t in self.trees)

    @property
    def m(self) -> int:
        return self.n

    def build(self) -> Graph:
        s = self.girth
        pairs = [(i, (i + 1) % s) for i in range(s)]
        nxt = s
        for root, levels in enumerate(self.trees):
            ids = [root] + list(range(nxt, nxt + len(levels) - 1))
            nxt += len(levels) - 1
            for i, p in enumerate(level_sequence_parents(levels)):
                if p >= 0:
                    pairs.append((ids[p], ids[i]))
        return build_graph(nxt, pairs)


def _tree_sequences(s: int, extra: int, by_size: dict[int, list[tuple[int, ...]]]):
    if s == 0:
        if extra == 0:
            yield ()
        return
    for size in range(extra + 1):
        for t in by_size[size + 1]:
            for rest in _tree_sequences(s - 1, extra - size, by_size):
                yield (t,) + rest


def _dihedral_min(seq: tuple) -> tuple:
    s = len(seq)
    images = []
    for r in range(s):
        rot = seq[r:] + seq[:r]
        images.append(rot)
        images.append(rot[::-1])
    return min(images)


def unicyclic_specs(max_n: int, girth_filter: int | None = None) -> Iterator[UnicyclicSpec]:
    """One spec per isomorphism class, ordered by (n, girth, trees).

    Two cycles decorated with rooted trees are isomorphic exactly when their
    tree sequences agree up to rotation and reflection; canonical level
    sequences make that a tuple comparison.
    """
    if max_n > MAX_ENUM_N:
        raise TooLarge(f"max_n={max_n} exceeds {MAX_ENUM_N}")
    by_size = {k: list(rooted_trees(k)) for k in range(1, max_n + 1)}
    for n in range(3, max_n + 1):
        girths = [girth_filter] if girth_filter else range(3, n + 1)
        for s in girths:
            if s > n:
                continue
            found = sorted({_dihedral_min(seq) for seq in _tree_sequences(s, n - s, by_size)})
            for seq in found:
                yield UnicyclicSpec(s, seq)


def enum_unicyclic(max_n: int, girth_filter: int | None = None) -> Iterator[Graph]:
    for spec in unicyclic_specs(max_n, girth_filter):
        yield spec.build()


def gen_m_class(p2: int, p4: int) -> Graph:
    """K4-e on v1..v4 = 0..3 (v1, v3 of degree 3) with a path of ``p2``
    edges at v2 and ``p4`` edges at v4.

    Block edges come first, as v1v2, v2v3, v3v4, v4v1, v1v3.
    """
    pairs = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    nxt = 4
    for root, length in ((1, p2), (3, p4)):
        prev = root
        for _ in range(length):
            pairs.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, pairs)


def gen_theta(a: int, b: int, c: int) -> Graph:
    """Θ-graph with end vertices 0 and 1 and path lengths a, b, c."""
    if min(a, b, c) < 1 or sorted((a, b, c))[1] < 2:
        raise InfeasibleParams("a simple theta graph needs at most one path of length 1")
    pairs = []
    nxt = 2
    for length in (a, b, c):
        chain = [0] + list(range(nxt, nxt + length - 1)) + [1]
        nxt += length - 1
        pairs.extend(zip(chain, chain[1:]))
    return build_graph(nxt, pairs)


def gen_random_unicyclic(seed: int, n: int, girth: int) -> Graph:
    if girth < 3 or girth > n:
        raise InfeasibleParams(f"need 3 <= girth <= n, got girth={girth}, n={n}")
    rng = random.Random(seed)
    pairs = [(i, (i + 1) % girth) for i in range(girth)]
    for v in range(girth, n):
        pairs.append((rng.randrange(v), v))
    return build_graph(n, pairs)


def gen_random_connected(seed: int, n: int, extra_edges: int) -> Graph:
    """Random spanning tree plus up to ``extra_edges`` random chords."""
    rng = random.Random(seed)
    pairs = {(rng.randrange(v), v) for v in range(1, n)}
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in pairs]
    rng.shuffle(missing)
    pairs |= set(missing[:extra_edges])
    return build_graph(n, sorted(pairs))


# -- cross-check harness ----------------------------------------------------------

@dataclass
class GraphRecord:
    edges: tuple[tuple[int, int], ...]
    n: int
    m: int
    label: str
    predicted: dict
    rc: int | None = None  # exact ground truth when established
    rc_band: str | None = None  # "m-2", "m-3", "<=m-4" or "m" from band search


@dataclass
class CheckReport:
    examined: int = 0
    class_counts: Counter = field(default_factory=Counter)
    mismatches: list = field(default_factory=list)
    budget_exhaustions: list = field(default_factory=list)
    records: list = field(default_factory=list)

    @property
    def success(self) -> bool:
        return not self.mismatches

    def merge(self, other: "CheckReport") -> None:
        self.examined += other.examined
        self.class_counts.update(other.class_counts)
        self.mismatches = sorted(self.mismatches + other.mismatches, key=_mismatch_key)
        self.budget_exhaustions = sorted(self.budget_exhaustions + other.budget_exhaustions)
        self.records.extend(other.records)

    def to_json(self) -> dict:
        return {
            "examined": self.examined,
            "class_counts": dict(sorted(self.class_counts.items())),
            "mismatches": self.mismatches,
            "budget_exhaustions": [list(map(list, e)) for e in self.budget_exhaustions],
            "success": self.success,
        }


def _mismatch_key(item: dict):
    return (len(item["edges"]), item["edges"], item["problem"])


def band_truth(g: Graph, budget: int = DEFAULT_BUDGET) -> tuple[str, int | None]:
    """Ground-truth position of rc(G) relative to m, from exhaustive search.

    Returns ``("m", m)`` for trees, ``("m-2", m-2)``, ``("m-3", m-3)`` or
    ``("<=m-4", None)``; only feasibility at m-3 and m-4 colors is tested,
    plus m-2 to exclude rc = m-1.
    """
    m = g.m
    if m - g.n + 1 == 0:
        return "m", m
    if m - 2 < 1 or feasible_k(g, m - 2, budget) is None:
        return "m-1 or more", None
    if m - 3 < 1 or feasible_k(g, m - 3, budget) is None:
        return "m-2", m - 2
    if m - 4 < 1 or feasible_k(g, m - 4, budget) is None:
        return "m-3", m - 3
    return "<=m-4", None


def _predicted_band(g: Graph, result) -> str:
    m = g.m
    if isinstance(result, Exact):
        v = result.value
        return {m: "m", m - 1: "m-1 or more", m - 2: "m-2", m - 3: "m-3"}.get(v, "<=m-4")
    return "<=m-4" if result.upper <= m - 4 else "open"


def check_graph(g: Graph, budget: int = DEFAULT_BUDGET, exact_ground_truth: bool = True) -> CheckReport:
    """Classify one graph and confirm the claim by exhaustive search."""
    report = CheckReport(examined=1)
    label = class_label(g)
    report.class_counts[str(label)] += 1
    problems = []
    result = rc_characterize(g, budget)
    if isinstance(result, Exact):
        predicted = {"exact": result.value}
    else:
        predicted = {"lower": result.lower, "upper": result.upper}
    rec = GraphRecord(g.edges, g.n, g.m, str(label), predicted)
    try:
        band, _ = band_truth(g, budget)
        rec.rc_band = band
        if band != _predicted_band(g, result):
            problems.append(f"band: predicted {_predicted_band(g, result)}, search says {band}")
        if isinstance(result, Exact):
            cert = result.certificate
            if cert.num_colors != result.value or not is_rainbow_connected(g, cert):
                problems.append("certificate does not verify")
            v = result.value
            if v >= 2:
                if v - 1 >= max(1, g.m - 6):
                    if feasible_k(g, v - 1, budget) is not None:
                        problems.append(f"feasible with {v - 1} colors")
                    else:
                        rec.rc = v
                else:
                    truth = rc_exact(g, budget).value
                    if truth != v:
                        problems.append(f"exact search gives {truth}")
                    rec.rc = truth
            else:
                rec.rc = v
        elif exact_ground_truth:
            truth = rc_exact(g, budget).value
            rec.rc = truth
            if not (result.lower <= truth <= result.upper):
                problems.append(f"rc={truth} outside [{result.lower}, {result.upper}]")
    except BudgetExceeded as exc:
        report.budget_exhaustions.append((g.edges, exc.examined))
    for problem in problems:
        report.mismatches.append({
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "predicted": predicted,
            "class": str(label),
            "problem": problem,
        })
    report.records.append(rec)
    return report


def theorem_corpus(max_n: int) -> Iterator[Graph]:
    """Unicyclic graphs up to ``max_n`` vertices, K4-e with attached paths of
    length up to ``max_n - 4``, and cycles up to C12."""
    yield from enum_unicyclic(max_n)
    top = max(max_n - 4, 0)
    for p2 in range(top + 1):
        for p4 in range(top + 1):
            yield gen_m_class(p2, p4)
    for k in range(max_n + 1, 13):
        yield cycle_graph(k)


def check_theorems(max_n: int, budget: int = DEFAULT_BUDGET, graphs=None) -> CheckReport:
    report = CheckReport()
    corpus = theorem_corpus(max_n) if graphs is None else graphs
    for g in corpus:
        report.merge(check_graph(g, budget))
    return report


def exact_classes() -> dict[str, set[str]]:
    """Labels the characterization assigns to rc = m-2 and rc = m-3."""
    return {
        "m-2": {"CycleExact(5)", "G2", "H2"},
        "m-3": {"CycleExact(7)", "G1", "H1", "J1", "L1", "MClass", "Theta5"},
    }


__all__ = [
    "CheckReport", "ClassLabel", "GraphRecord", "InfeasibleParams", "TooLarge",
    "UnicyclicSpec", "band_truth", "check_graph", "check_theorems", "enum_unicyclic",
    "exact_classes", "gen_m_class", "gen_random_connected", "gen_random_unicyclic",
    "gen_theta", "rooted_trees", "theorem_corpus", "unicyclic_specs",
]
