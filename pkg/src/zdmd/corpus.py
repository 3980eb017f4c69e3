"""Seeded random graph corpora and the cross-checks run over them."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import (Graph, barycentric_subdivision, from_edge_list, is_bipartite,
                    is_path_graph, tree_metric_dimension)
from .resolving import min_resolving_bnb, min_resolving_exhaustive


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform random labelled tree on n >= 2 vertices (Prüfer decoding)."""
    if n == 2:
        return from_edge_list(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return from_edge_list(n, edges)


def random_connected_graph(rng: random.Random, n: int, extra: float | None = None) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    tree = random_tree(rng, n) if n >= 2 else from_edge_list(n, [])
    extra = rng.uniform(0.0, 0.6) if extra is None else extra
    edges = set(tree.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    return from_edge_list(n, sorted(edges))


def random_non_path_tree(rng: random.Random, max_n: int) -> Graph:
    while True:
        t = random_tree(rng, rng.randint(4, max_n))
        if not is_path_graph(t):
            return t


@dataclass
class CorpusSummary:
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def tick(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = self.checks.get(name, 0) + 1
        if not ok:
            self.failures.append(f"{name}: {detail}")


def run_corpus(seed: int = 0, graphs: int = 200, trees: int = 100,
               max_graph_n: int = 14, max_tree_n: int = 18) -> CorpusSummary:
    rng = random.Random(seed)
    out = CorpusSummary()
    corpus = [random_connected_graph(rng, rng.randint(2, max_graph_n)) for _ in range(graphs)]
    tree_corpus = [random_non_path_tree(rng, max_tree_n) for _ in range(trees)]
    for g in corpus:
        ex = min_resolving_exhaustive(g)
        bb = min_resolving_bnb(g)
        out.tick("exhaustive_vs_bnb", ex.lower == bb.lower and ex.exact and bb.exact,
                 f"{g.edges()}: {ex.lower} vs {bb.lower}")
        out.tick("dim1_iff_path", (ex.lower == 1) == is_path_graph(g), f"{g.edges()}")
    for t in tree_corpus:
        ex = min_resolving_exhaustive(t)
        out.tick("tree_formula", ex.lower == tree_metric_dimension(t), f"{t.edges()}")
        out.tick("dim1_iff_path", ex.lower != 1, f"{t.edges()}")
    for g in corpus + tree_corpus:
        bs, mid = barycentric_subdivision(g)
        ok = (bs.n == g.n + g.edge_count and bs.edge_count == 2 * g.edge_count
              and is_bipartite(bs) and all(v not in bs.adj[v] for v in range(bs.n))
              and len(mid) == g.edge_count)
        out.tick("bs_shape", ok, f"{g.edges()}")
    return out
