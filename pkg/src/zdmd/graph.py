"""Simple undirected graphs on dense integer ids.

Vertices are ``0..n-1``. Labels are an optional display layer and never
affect the algorithms, which work on indices only.
"""
from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]
    labels: Mapping[int, str] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def name(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def relabel(self, labels: Mapping[int, str] | None) -> "Graph":
        return Graph(self.n, self.adj, dict(labels) if labels else None)


def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                   labels: Mapping[int, str] | None = None) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj), dict(labels) if labels else None)


class DistanceMatrix:
    """All-pairs hop distances. Disconnected pairs hold ``unreachable`` (== n)."""

    def __init__(self, rows: list[list[int]]):
        self.n = len(rows)
        self.unreachable = self.n
        self.rows = tuple(tuple(r) for r in rows)

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.rows[u][v]

    def row(self, v: int) -> tuple[int, ...]:
        return self.rows[v]

    def is_connected(self) -> bool:
        return all(d < self.unreachable for r in self.rows for d in r)


def bfs_from(g: Graph, src: int) -> list[int]:
    dist = [g.n] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if dist[u] == g.n:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def bfs_all_pairs(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs_from(g, s) for s in range(g.n)])


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge ``e`` by a path of length two through a new vertex ``n``."""
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    w = g.n
    adj = [set(a) for a in g.adj] + [{u, v}]
    adj[u].discard(v)
    adj[v].discard(u)
    adj[u].add(w)
    adj[v].add(w)
    labels = dict(g.labels) if g.labels else None
    if labels is not None:
        labels[w] = f"{g.name(u)}~{g.name(v)}"
    return Graph(g.n + 1, tuple(frozenset(a) for a in adj), labels)


def barycentric_subdivision(g: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Subdivide every edge once.

    New vertices are appended in the order of ``g.edges()``; the returned map
    sends each original edge ``(u, v)`` with ``u < v`` to its midpoint id.
    """
    edges = g.edges()
    midpoint = {e: g.n + i for i, e in enumerate(edges)}
    new_edges = []
    for (u, v), w in midpoint.items():
        new_edges.append((u, w))
        new_edges.append((v, w))
    labels = None
    if g.labels:
        labels = {v: g.name(v) for v in range(g.n)}
        labels.update({w: f"{g.name(u)}~{g.name(v)}" for (u, v), w in midpoint.items()})
    return from_edge_list(g.n + len(edges), new_edges, labels), midpoint


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    members = set(s)
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    return all(not (g.adj[v] & members) for v in members)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d < g.n for d in bfs_from(g, 0))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and g.edge_count == g.n - 1


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def tree_legs(t: Graph) -> dict[int, int]:
    """Number of legs anchored at each vertex of degree >= 3.

    A leg is walked from a leaf through degree-2 vertices until the first
    vertex of degree >= 3, which anchors it.
    """
    if not is_tree(t):
        raise GraphError("not a tree")
    if is_path_graph(t):
        raise GraphError("a path has no legs anchored at a branch vertex")
    legs: dict[int, int] = {}
    for leaf in range(t.n):
        if t.degree(leaf) != 1:
            continue
        prev, cur = leaf, next(iter(t.adj[leaf]))
        while t.degree(cur) == 2:
            prev, cur = cur, next(u for u in t.adj[cur] if u != prev)
        legs[cur] = legs.get(cur, 0) + 1
    return legs


def tree_metric_dimension(t: Graph) -> int:
    """Metric dimension of a tree: sum of (legs - 1) over vertices with >1 leg.

    Paths have no branch vertex and are handled directly (1, or 0 for a single vertex).
    """
    if is_tree(t) and is_path_graph(t):
        return 1 if t.n > 1 else 0
    return sum(l - 1 for l in tree_legs(t).values() if l > 1)


# --- export / import ---------------------------------------------------------

_DOT_ID = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|-?\d+")


def _dot_id(name: str) -> str:
    return name if _DOT_ID.fullmatch(name) else json.dumps(name)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if not g.adj[v]]
    lines += [f"  {_dot_id(g.name(v))};" for v in isolated]
    lines += [f"  {_dot_id(g.name(u))} -- {_dot_id(g.name(v))};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    out = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels:
        out["labels"] = {str(v): g.labels[v] for v in sorted(g.labels)}
    return out


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g))


def from_json_dict(data: dict) -> Graph:
    labels = {int(k): str(v) for k, v in data.get("labels", {}).items()} or None
    return from_edge_list(int(data["n"]), [tuple(e) for e in data["edges"]], labels)


def from_json(text: str) -> Graph:
    return from_json_dict(json.loads(text))
