"""Resolving sets and exact metric dimension.

Two independent routes are kept apart on purpose: ``is_resolving`` compares
metric codes directly, while the searches work on bitsets over vertex pairs
(vertex ``a`` covers pair ``{x, y}`` iff ``d(a, x) != d(a, y)``). Every search
witness is re-checked through ``is_resolving`` before it is reported.
"""
from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import DistanceMatrix, Graph, GraphError, bfs_all_pairs, bfs_from

DEFAULT_BUDGET = 10**8


def default_budget() -> int:
    return int(os.environ.get("ZDMD_BUDGET", DEFAULT_BUDGET))


class DisconnectedGraphError(GraphError):
    pass


class NotResolvingError(ValueError):
    def __init__(self, pair):
        super().__init__(f"landmarks do not resolve vertices {pair[0]} and {pair[1]}")
        self.pair = pair


class FamilyBoundError(ValueError):
    """Raised when a family fails the disjointness or equidistance precondition."""

    def __init__(self, message, triple):
        super().__init__(f"{message}: {triple}")
        self.triple = triple


class InfeasibleError(ValueError):
    pass


class BudgetExhausted(Exception):
    pass


# --- codes and checks ----------------------------------------------------------

def metric_code(dm: DistanceMatrix, v: int, landmarks: Sequence[int]) -> tuple[int, ...]:
    row = dm.row(v)
    return tuple(row[a] for a in landmarks)


def resolves(dm: DistanceMatrix, a: int, x: int, y: int) -> bool:
    if x == y:
        raise ValueError("a vertex pair needs two distinct vertices")
    return dm[a, x] != dm[a, y]


def is_resolving(dm: DistanceMatrix, s: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, (x, y))`` with one unresolved pair."""
    landmarks = list(s)
    if not landmarks:
        raise ValueError("empty landmark set")
    seen: dict[tuple[int, ...], int] = {}
    for v in range(dm.n):
        code = metric_code(dm, v, landmarks)
        if code in seen:
            return False, (seen[code], v)
        seen[code] = v
    return True, None


@dataclass(frozen=True)
class ResolvingCertificate:
    landmarks: tuple[int, ...]
    codes: dict[int, tuple[int, ...]]

    def check(self) -> bool:
        if len(set(self.codes.values())) != len(self.codes):
            return False
        return all(self.codes[a][i] == 0 for i, a in enumerate(self.landmarks))

    def to_json(self) -> str:
        return json.dumps({"landmarks": list(self.landmarks),
                           "codes": {str(v): list(c) for v, c in sorted(self.codes.items())}})

    @classmethod
    def from_json(cls, text: str) -> "ResolvingCertificate":
        data = json.loads(text)
        return cls(tuple(data["landmarks"]),
                   {int(v): tuple(c) for v, c in data["codes"].items()})


def certify(dm: DistanceMatrix, landmarks: Sequence[int]) -> ResolvingCertificate:
    ok, pair = is_resolving(dm, landmarks)
    if not ok:
        raise NotResolvingError(pair)
    return ResolvingCertificate(tuple(landmarks),
                                {v: metric_code(dm, v, landmarks) for v in range(dm.n)})


@dataclass
class DimensionReport:
    lower: int
    upper: int | None
    witness: tuple[int, ...] | None
    method: str
    nodes: int = 0
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None

    def summary(self, g: Graph | None = None) -> str:
        wit = "-" if self.witness is None else "[" + ", ".join(
            g.name(v) if g else str(v) for v in self.witness) + "]"
        status = f"exact {self.lower}" if self.exact else f"bounds {self.lower}..{self.upper}"
        return (f"{status}  method={self.method}  witness={wit}  "
                f"nodes={self.nodes}  elapsed={self.elapsed:.3f}s")


# --- pair-cover encoding ------------------------------------------------------

class PairCover:
    """Bitset over unordered vertex pairs resolved by each vertex."""

    def __init__(self, dm: DistanceMatrix):
        n = self.n = dm.n
        self.dm = dm
        self.pairs = [(x, y) for x in range(n) for y in range(x + 1, n)]
        self.full = (1 << len(self.pairs)) - 1
        self.masks = []
        for a in range(n):
            row = dm.row(a)
            bits = "".join("1" if row[x] != row[y] else "0" for x, y in reversed(self.pairs))
            self.masks.append(int(bits, 2) if bits else 0)
        self._coverers: list[int] | None = None

    @property
    def coverers(self) -> list[int]:
        """For each pair index, the bitmask of vertices that resolve it."""
        if self._coverers is None:
            cov = [0] * len(self.pairs)
            for a, m in enumerate(self.masks):
                bit = 1 << a
                while m:
                    low = m & -m
                    cov[low.bit_length() - 1] |= bit
                    m ^= low
            self._coverers = cov
        return self._coverers

    def covered(self, s: Iterable[int]) -> int:
        acc = 0
        for v in s:
            acc |= self.masks[v]
        return acc


def _require_connected(g: Graph) -> DistanceMatrix:
    dm = bfs_all_pairs(g)
    if not dm.is_connected():
        raise DisconnectedGraphError("metric dimension is only defined here for connected graphs")
    return dm


def _neighbor_masks(g: Graph) -> list[int]:
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


@dataclass
class ScanResult:
    witness: tuple[int, ...] | None
    tested: int
    exhausted: bool = False


def scan_subsets(cover: PairCover, k: int, budget: int | None = None,
                 independent_of: Graph | None = None) -> ScanResult:
    """Test k-subsets in lexicographic order; stop at the first resolving one.

    ``tested`` counts the k-subsets examined. With ``independent_of`` only
    independent sets of that graph are enumerated (and counted).
    """
    budget = default_budget() if budget is None else budget
    n, masks, full = cover.n, cover.masks, cover.full
    if k == 0:
        return ScanResult(() if full == 0 else None, 1)
    if k > n:
        return ScanResult(None, 0)
    nbr = _neighbor_masks(independent_of) if independent_of is not None else None
    tested = 0
    chosen: list[int] = []

    def last_level(start, acc, allowed):
        nonlocal tested
        need = full & ~acc
        if nbr is None:
            stop = n
            if tested + (n - start) > budget:
                stop = start + max(0, budget - tested)
            for v in range(start, stop):
                if masks[v] & need == need:
                    tested += v - start + 1
                    return v
            tested += stop - start
            if stop < n:
                raise BudgetExhausted
            return None
        for v in range(start, n):
            if not (allowed >> v) & 1:
                continue
            if tested >= budget:
                raise BudgetExhausted
            tested += 1
            if masks[v] & need == need:
                return v
        return None

    def rec(start, depth, acc, allowed):
        if depth == k - 1:
            v = last_level(start, acc, allowed)
            if v is not None:
                chosen.append(v)
                return True
            return False
        for v in range(start, n - (k - 1 - depth)):
            if nbr is not None and not (allowed >> v) & 1:
                continue
            chosen.append(v)
            if rec(v + 1, depth + 1, acc | masks[v],
                   allowed & ~nbr[v] if nbr is not None else allowed):
                return True
            chosen.pop()
        return False

    try:
        found = rec(0, 0, 0, (1 << n) - 1)
    except BudgetExhausted:
        return ScanResult(None, tested, exhausted=True)
    return ScanResult(tuple(chosen) if found else None, tested)


def greedy_upper_bound(g: Graph, dm: DistanceMatrix | None = None,
                       cover: PairCover | None = None, independent: bool = False) -> list[int] | None:
    """Add the vertex resolving the most unresolved pairs until all are resolved.

    Ties go to the smallest id. In independent mode candidates must be
    non-adjacent to everything chosen; returns None if that gets stuck.
    """
    if cover is None:
        cover = PairCover(dm if dm is not None else _require_connected(g))
    chosen: list[int] = []
    uncov = cover.full
    banned: set[int] = set()
    while uncov:
        best, gain = None, 0
        for v in range(cover.n):
            if v in banned:
                continue
            c = (cover.masks[v] & uncov).bit_count()
            if c > gain:
                best, gain = v, c
        if best is None:
            return None
        chosen.append(best)
        uncov &= ~cover.masks[best]
        banned.add(best)
        if independent:
            banned |= g.adj[best]
    return chosen


def min_resolving_exhaustive(g: Graph, k_max: int | None = None,
                             budget: int | None = None) -> DimensionReport:
    """Smallest resolving set by scanning sizes 1, 2, ... in lexicographic order."""
    t0 = time.perf_counter()
    budget = default_budget() if budget is None else budget
    dm = _require_connected(g)
    if g.n <= 1:
        return DimensionReport(0, 0, (), "exhaustive", elapsed=time.perf_counter() - t0)
    cover = PairCover(dm)
    k_max = g.n - 1 if k_max is None else k_max
    tested = 0
    for k in range(1, k_max + 1):
        res = scan_subsets(cover, k, budget - tested)
        tested += res.tested
        if res.exhausted:
            upper = greedy_upper_bound(g, cover=cover)
            return DimensionReport(k, len(upper), tuple(upper), "exhaustive", tested,
                                   time.perf_counter() - t0, ["budget exhausted"])
        if res.witness is not None:
            _assert_witness(dm, res.witness)
            return DimensionReport(k, k, res.witness, "exhaustive", tested,
                                   time.perf_counter() - t0)
    upper = greedy_upper_bound(g, cover=cover)
    return DimensionReport(k_max + 1, len(upper), tuple(upper), "exhaustive", tested,
                           time.perf_counter() - t0, [f"no resolving set of size <= {k_max}"])


def _assert_witness(dm: DistanceMatrix, witness: Sequence[int]) -> None:
    ok, pair = is_resolving(dm, witness)
    if not ok:
        raise AssertionError(f"search produced a non-resolving witness; pair {pair}")


# --- equidistant families --------------------------------------------------------

def equidistant_family_bound(g: Graph, family: Sequence[int],
                             dm: DistanceMatrix | None = None) -> int:
    """Lower bound ``len(family) - 1`` on dim(g), after checking its preconditions.

    Closed neighbourhoods of the members must be pairwise disjoint, and every
    vertex outside ``N[u] ∪ N[w]`` must be equidistant from ``u`` and ``w``.
    Then only ``N[u] ∪ N[w]`` can resolve ``{u, w}``, so a resolving set misses
    at most one member's closed neighbourhood.
    """
    dm = dm if dm is not None else bfs_all_pairs(g)
    closed = {u: g.closed_neighborhood(u) for u in family}
    for u, w in combinations(family, 2):
        shared = closed[u] & closed[w]
        if shared:
            raise FamilyBoundError("closed neighbourhoods intersect", (u, w, min(shared)))
        du, dw = dm.row(u), dm.row(w)
        for x in range(g.n):
            if x in closed[u] or x in closed[w]:
                continue
            if du[x] != dw[x]:
                raise FamilyBoundError("not equidistant", (u, w, x))
    return max(len(family) - 1, 0)


# --- branch and bound ----------------------------------------------------------

def min_resolving_bnb(g: Graph, budget: int | None = None, family: Sequence[int] | None = None,
                      independent: bool = False, k_max: int | None = None,
                      incumbent: Sequence[int] | None = None) -> DimensionReport:
    """Exact minimum resolving set as a set cover over vertex pairs.

    Branches on an uncovered pair with the fewest remaining coverers; each
    child adds one coverer and later siblings exclude the earlier ones, so no
    set is visited twice. Bounds: the fewest remaining vertices whose summed
    coverage can reach the uncovered count, and, when ``family`` is given
    (preconditions are checked), members whose closed neighbourhood is still
    untouched minus one. ``budget`` counts expanded nodes.
    """
    t0 = time.perf_counter()
    budget = default_budget() if budget is None else budget
    dm = _require_connected(g)
    method = "bnb-independent" if independent else "bnb"
    if g.n <= 1:
        return DimensionReport(0, 0, (), method)
    cover = PairCover(dm)
    masks, cov = cover.masks, cover.coverers
    nbr = _neighbor_masks(g)
    n = g.n

    closed_masks: list[int] = []
    if family:
        equidistant_family_bound(g, family, dm)
        closed_masks = [nbr[u] | (1 << u) for u in family]

    def family_lb(chosen_mask):
        if not closed_masks:
            return 0
        untouched = sum(1 for m in closed_masks if not m & chosen_mask)
        return max(untouched - 1, 0)

    best: list[int] | None = None
    if incumbent is not None:
        inc = list(incumbent)
        _assert_witness(dm, inc)
        if independent and any(nbr[v] & sum(1 << u for u in inc) for v in inc):
            raise ValueError("incumbent is not independent")
        best = inc
    greedy = greedy_upper_bound(g, cover=cover, independent=independent)
    if greedy is not None and (best is None or len(greedy) < len(best)):
        best = greedy
    cap = n + 1 if k_max is None else k_max + 1
    limit = min(len(best), cap) if best is not None else cap

    order = sorted(range(len(cover.pairs)), key=lambda i: (cov[i].bit_count(), i))
    nodes = 0

    def cover_lb(uncov, pool):
        need = uncov.bit_count()
        gains = []
        m = pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            c = (masks[v] & uncov).bit_count()
            if c:
                gains.append(c)
        gains.sort(reverse=True)
        total = 0
        for t, c in enumerate(gains, 1):
            total += c
            if total >= need:
                return t
        return n + 1

    root_lb = max(1, cover_lb(cover.full, (1 << n) - 1), len(closed_masks) - 1)

    def dfs(chosen, chosen_mask, uncov, pool):
        nonlocal nodes, best, limit
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted
        if uncov == 0:
            best = list(chosen)
            limit = len(best)
            return
        depth = len(chosen)
        if depth + max(1, family_lb(chosen_mask)) >= limit:
            return
        if depth + cover_lb(uncov, pool) >= limit:
            return
        pick, pick_count, seen = None, n + 1, 0
        for i in order:
            if not (uncov >> i) & 1:
                continue
            c = (cov[i] & pool).bit_count()
            if c < pick_count:
                pick, pick_count = i, c
                if c <= 1:
                    break
            seen += 1
            if seen >= 64:
                break
        if pick_count == 0:
            return
        opts = []
        m = cov[pick] & pool
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            opts.append(((masks[v] & uncov).bit_count(), v))
        opts.sort(key=lambda t: (-t[0], t[1]))
        for _, v in opts:
            child_pool = pool & ~(1 << v)
            if independent:
                child_pool &= ~nbr[v]
            chosen.append(v)
            dfs(chosen, chosen_mask | (1 << v), uncov & ~masks[v], child_pool)
            chosen.pop()
            pool &= ~(1 << v)
            if depth + 1 >= limit:
                return

    notes = []
    try:
        dfs([], 0, cover.full, (1 << n) - 1)
        complete = True
    except (BudgetExhausted, KeyboardInterrupt) as exc:
        complete = False
        notes.append("budget exhausted" if isinstance(exc, BudgetExhausted) else "interrupted")
    elapsed = time.perf_counter() - t0

    if best is not None and len(best) > cap - 1:
        over = best
        best = None
    else:
        over = None
    if complete:
        if best is None:
            if k_max is None:
                raise InfeasibleError("graph has no independent resolving set")
            up = over
            return DimensionReport(k_max + 1, len(up) if up else None, tuple(up) if up else None,
                                   method, nodes, elapsed, [f"no solution of size <= {k_max}"])
        _assert_witness(dm, best)
        return DimensionReport(len(best), len(best), tuple(best), method, nodes, elapsed)
    up = best or over
    return DimensionReport(min(root_lb, len(up)) if up else root_lb,
                           len(up) if up else None, tuple(up) if up else None,
                           method, nodes, elapsed, notes)


def independent_min_resolving(g: Graph, k_max: int | None = None, budget: int | None = None,
                              family: Sequence[int] | None = None,
                              incumbent: Sequence[int] | None = None,
                              method: str = "bnb") -> DimensionReport:
    """Smallest set that is both independent and resolving.

    ``method="exhaustive"`` scans independent k-subsets in lexicographic order;
    ``"bnb"`` runs the pair-cover search restricted to independent sets.
    Raises InfeasibleError when no independent resolving set exists.
    """
    if method == "bnb":
        return min_resolving_bnb(g, budget, family=family, independent=True,
                                 k_max=k_max, incumbent=incumbent)
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    t0 = time.perf_counter()
    budget = default_budget() if budget is None else budget
    dm = _require_connected(g)
    if g.n <= 1:
        return DimensionReport(0, 0, (), "exhaustive-independent")
    cover = PairCover(dm)
    k_top = g.n if k_max is None else k_max
    tested = 0
    for k in range(1, k_top + 1):
        res = scan_subsets(cover, k, budget - tested, independent_of=g)
        tested += res.tested
        if res.exhausted:
            return DimensionReport(k, None, None, "exhaustive-independent", tested,
                                   time.perf_counter() - t0, ["budget exhausted"])
        if res.witness is not None:
            _assert_witness(dm, res.witness)
            return DimensionReport(k, k, res.witness, "exhaustive-independent", tested,
                                   time.perf_counter() - t0)
    if k_max is None:
        raise InfeasibleError("graph has no independent resolving set")
    return DimensionReport(k_max + 1, None, None, "exhaustive-independent", tested,
                           time.perf_counter() - t0, [f"no solution of size <= {k_max}"])


# --- metric dimension two ------------------------------------------------------

@dataclass(frozen=True)
class MD2Diagnostics:
    unique_shortest_path: bool
    landmark_degrees_at_most_3: bool
    internal_degrees_at_most_5: bool
    path: tuple[int, ...] | None

    @property
    def all_pass(self) -> bool:
        return (self.unique_shortest_path and self.landmark_degrees_at_most_3
                and self.internal_degrees_at_most_5)


def md2_diagnostics(g: Graph, basis: Sequence[int]) -> MD2Diagnostics:
    """Necessary conditions on a two-vertex metric basis ``{a, b}``.

    The internal-degree check runs over the shortest a-b path when it is
    unique, and over every vertex on some shortest a-b path otherwise.
    """
    if len(basis) != 2:
        raise ValueError("basis must have exactly two vertices")
    dm = _require_connected(g)
    ok, pair = is_resolving(dm, basis)
    if not ok:
        raise NotResolvingError(pair)
    a, b = basis
    da, db = bfs_from(g, a), bfs_from(g, b)
    total = da[b]
    # number of shortest a->v paths, capped at 2
    count = [0] * g.n
    count[a] = 1
    for v in sorted(range(g.n), key=da.__getitem__):
        if v == a:
            continue
        count[v] = min(2, sum(count[u] for u in g.adj[v] if da[u] == da[v] - 1))
    on_path = [v for v in range(g.n) if da[v] + db[v] == total]
    unique = count[b] == 1
    path = None
    if unique:
        path = tuple(sorted(on_path, key=da.__getitem__))
    internal = [v for v in on_path if v not in (a, b)]
    return MD2Diagnostics(
        unique_shortest_path=unique,
        landmark_degrees_at_most_3=g.degree(a) <= 3 and g.degree(b) <= 3,
        internal_degrees_at_most_5=all(g.degree(v) <= 5 for v in internal),
        path=path,
    )
