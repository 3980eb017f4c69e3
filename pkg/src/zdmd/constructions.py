"""Labelled barycentric subdivision of Γ(Z_pq), explicit landmark sets and the
displayed coordinate tables for them.

Naming: ``a_i`` is residue ``i*p`` (i = 1..q-1), ``q_j`` is residue ``j*q``
(j = 1..p-1). For odd p with m = (p-1)/2 the midpoint of edge ``(a_i, q_j)``
is ``c{j}_{i}`` when j <= m and ``b{j-m}_{i}`` otherwise; for p = 2 it is
``s_{i}``. Ids are laid out A, Q, C^1..C^m, B^1..B^m (or S), each by index.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, barycentric_subdivision, bfs_all_pairs, from_edge_list, tree_metric_dimension
from .resolving import DimensionReport, equidistant_family_bound, is_resolving
from .ring import is_prime, zero_divisor_graph


class RegimeError(ValueError):
    pass


def check_primes(p: int, q: int) -> None:
    if not (is_prime(p) and is_prime(q)):
        raise RegimeError(f"p={p} and q={q} must both be prime")
    if not p < q:
        raise RegimeError(f"need p < q, got p={p}, q={q}")


class Regime(str, Enum):
    TREE = "p=2"
    P3 = "p=3"
    GENERAL = "p>=5,q>=2p-1"
    Q2P3 = "p>=5,q=2p-3"
    STRICT = "p>=5,p+1<q<2p-1"
    OPEN = "open"


def regime(p: int, q: int) -> Regime:
    check_primes(p, q)
    if p == 2:
        return Regime.TREE
    if p == 3:
        return Regime.P3
    if q >= 2 * p - 1:
        return Regime.GENERAL
    if q == 2 * p - 3:
        return Regime.Q2P3
    if p + 1 < q < 2 * p - 1:
        return Regime.STRICT
    return Regime.OPEN


_LABEL = re.compile(r"^([abcqs])(?:\^?\{?(\d+)\}?)?_\{?(\d+)\}?$")


def parse_label(label: str) -> tuple[str, int | None, int]:
    """``"c^3_6"`` or ``"c3_6"`` -> ``("c", 3, 6)``; ``"a_2"`` -> ``("a", None, 2)``."""
    m = _LABEL.match(label.strip())
    if not m:
        raise ValueError(f"bad vertex label {label!r}")
    fam, sup, idx = m.groups()
    if (fam in "bc") != (sup is not None):
        raise ValueError(f"bad vertex label {label!r}")
    return fam, int(sup) if sup else None, int(idx)


def pretty(label: str) -> str:
    fam, sup, idx = parse_label(label)
    return f"{fam}^{sup}_{idx}" if sup is not None else f"{fam}_{idx}"


@dataclass
class BsPartition:
    p: int
    q: int
    a: dict[int, int] = field(default_factory=dict)
    qv: dict[int, int] = field(default_factory=dict)
    c: dict[tuple[int, int], int] = field(default_factory=dict)
    b: dict[tuple[int, int], int] = field(default_factory=dict)
    s: dict[int, int] = field(default_factory=dict)
    names: dict[int, str] = field(default_factory=dict)

    @property
    def m(self) -> int:
        return (self.p - 1) // 2

    def vertex(self, label: str) -> int:
        fam, sup, idx = parse_label(label)
        table = {"a": self.a, "q": self.qv, "s": self.s}.get(fam)
        try:
            if table is not None:
                return table[idx]
            return (self.c if fam == "c" else self.b)[sup, idx]
        except KeyError:
            raise ValueError(f"no vertex {label!r} for p={self.p}, q={self.q}") from None

    def label(self, v: int) -> str:
        return self.names[v]

    def anchor_q(self, v: int) -> int:
        """Index j of the Q-vertex adjacent to a subdivision vertex."""
        fam, sup, _ = parse_label(self.names[v])
        if fam == "s":
            return 1
        if fam == "c":
            return sup
        if fam == "b":
            return self.m + sup
        raise ValueError(f"{self.names[v]} is not a subdivision vertex")


def build_labeled_bs(p: int, q: int) -> tuple[Graph, BsPartition]:
    check_primes(p, q)
    part = BsPartition(p, q)
    names = part.names
    nxt = 0

    def add(name):
        nonlocal nxt
        names[nxt] = name
        nxt += 1
        return nxt - 1

    for i in range(1, q):
        part.a[i] = add(f"a_{i}")
    for j in range(1, p):
        part.qv[j] = add(f"q_{j}")
    edges = []
    if p == 2:
        for i in range(1, q):
            w = part.s[i] = add(f"s_{i}")
            edges += [(part.a[i], w), (part.qv[1], w)]
    else:
        m = part.m
        for fam, table, offset in (("c", part.c, 0), ("b", part.b, m)):
            for nu in range(1, m + 1):
                for i in range(1, q):
                    w = table[nu, i] = add(f"{fam}{nu}_{i}")
                    edges += [(part.a[i], w), (part.qv[offset + nu], w)]
    return from_edge_list(nxt, edges, names), part


def residue_isomorphism(p: int, q: int) -> dict[int, int]:
    """Map labelled ids onto ``barycentric_subdivision(zero_divisor_graph(pq))`` ids.

    ``a_i -> i*p`` and ``q_j -> j*q``; a midpoint goes to the midpoint of the
    image edge. The caller checks that the map preserves every edge.
    """
    g, part = build_labeled_bs(p, q)
    zdg = zero_divisor_graph(p * q)
    _, midpoint = barycentric_subdivision(zdg)
    by_residue = {int(zdg.labels[v]): v for v in range(zdg.n)}
    phi = {}
    for i, v in part.a.items():
        phi[v] = by_residue[i * p]
    for j, v in part.qv.items():
        phi[v] = by_residue[j * q]
    for v in range(g.n):
        if v in phi:
            continue
        ends = sorted(phi[u] for u in g.adj[v])
        phi[v] = midpoint[ends[0], ends[1]]
    return phi


# --- explicit landmark sets --------------------------------------------------------

def landmark_labels(p: int, q: int) -> list[str]:
    """Ordered landmark labels; position k >= 2 holds a midpoint adjacent to a_k."""
    r = regime(p, q)
    if r is Regime.P3:
        return ["a_1"] + [f"b1_{i}" for i in range(2, q - 1)]
    if r in (Regime.GENERAL, Regime.Q2P3):
        out = ["a_1"]
        for nu in range(1, (p - 1) // 2 + 1):
            out += [f"c{nu}_{2 * nu}", f"c{nu}_{2 * nu + 1}"]
        for mu in range(1, (p - 5) // 2 + 1):
            out += [f"b{mu}_{p + 2 * mu - 1}", f"b{mu}_{p + 2 * mu}"]
        last = q - 2 if r is Regime.GENERAL else q - 1
        out += [f"b{(p - 3) // 2}_{i}" for i in range(2 * p - 4, last + 1)]
        return out
    raise RegimeError(f"no explicit landmark set for (p, q) = ({p}, {q}) in regime {r.value}")


def landmark_set(p: int, q: int) -> list[int]:
    _, part = build_labeled_bs(p, q)
    return [part.vertex(lbl) for lbl in landmark_labels(p, q)]


# --- predicted dimension -------------------------------------------------------------

@dataclass(frozen=True)
class DimensionPrediction:
    kind: str  # "exact", "greater-than" or "open"
    value: int | None
    source: str

    def __str__(self):
        if self.kind == "exact":
            return f"= {self.value}"
        if self.kind == "greater-than":
            return f"> {self.value}"
        return "open"


def predicted_dimension(p: int, q: int) -> DimensionPrediction:
    r = regime(p, q)
    if r in (Regime.TREE, Regime.P3, Regime.GENERAL):
        return DimensionPrediction("exact", q - 2, r.value)
    if r is Regime.Q2P3:
        return DimensionPrediction("exact", q - 1, r.value)
    if r is Regime.STRICT:
        return DimensionPrediction("greater-than", q - 2, r.value)
    return DimensionPrediction("open", None, r.value)


def certified_dimension(p: int, q: int) -> DimensionReport | None:
    """Bounds on dim BS(Γ(Z_pq)) that need no search.

    p = 2 uses the tree formula. Covered odd-p regimes pair the A-family lower
    bound with the explicit landmark set (checked by BFS) as the upper bound.
    Returns None where neither applies.
    """
    r = regime(p, q)
    g, part = build_labeled_bs(p, q)
    if r is Regime.TREE:
        t = tree_metric_dimension(g)
        return DimensionReport(t, t, None, "tree-formula")
    if r not in (Regime.P3, Regime.GENERAL, Regime.Q2P3):
        return None
    dm = bfs_all_pairs(g)
    E = landmark_set(p, q)
    ok, pair = is_resolving(dm, E)
    if not ok:
        raise AssertionError(f"landmark set fails to resolve {part.label(pair[0])}, {part.label(pair[1])}")
    lower = equidistant_family_bound(g, list(part.a.values()), dm)
    return DimensionReport(lower, len(E), tuple(E), "certificate+construction")


# --- displayed coordinate tables ----------------------------------------------------
#
# Each branch below restates one displayed case of the tables for the
# landmark order of ``landmark_labels``: a head value at position 1, a fill
# value elsewhere, and marks at listed positions. ``None`` means no displayed
# branch covers the vertex (landmarks, or ranges the tables skip).

# Branches whose printed form has a cosmetic defect; the value read is noted.
TYPO_NOTES = {
    "p3/c1/rho=1": "last index printed twice (4_{q-2},4_{q-2}); read as all 4 after the head",
    "z/a/rho=q-1": "stray closing parenthesis before 1_{q-1}",
    "z/b(p-3)/2/rho=1": "run printed as 2_{2p-4},...,2_{q-3},2_{q-1}; read as 2 on 2p-4..q-1",
    "z/b(p-3)/2/rho=2p-5": "opening parenthesis missing",
    "z/b(p-5)/2/rho=2nu+p-2": "4-run printed up to index 2nu; read as 4 up to rho-1",
}


def _vec(length, head, fill, marks=(), mark=2):
    v = [fill] * length
    v[0] = head
    for k in marks:
        if not 2 <= k <= length:
            raise AssertionError(f"mark position {k} outside 2..{length}")
        v[k - 1] = mark
    return tuple(v)


def _predict_p3(q, fam, sup, rho):
    L = q - 2
    if fam == "a":
        if rho == 2:
            return "p3/a/rho=2", _vec(L, 4, 3, [2], 1)
        if 3 <= rho <= q - 3:
            return "p3/a/3<=rho<=q-3", _vec(L, 4, 3, [rho], 1)
        if rho == q - 2:
            return "p3/a/rho=q-2", _vec(L, 4, 3, [q - 2], 1)
        if rho == q - 1:
            return "p3/a/rho=q-1", _vec(L, 4, 3)
    elif fam == "b":
        if rho == 1:
            return "p3/b1/rho=1", _vec(L, 1, 2)
        if rho == q - 1:
            return "p3/b1/rho=q-1", _vec(L, 3, 2)
    elif fam == "q":
        if rho == 1:
            return "p3/q/nu=1", _vec(L, 2, 3)
        if rho == 2:
            return "p3/q/nu=2", _vec(L, 2, 1)
    elif fam == "c":
        if rho == 1:
            return "p3/c1/rho=1", _vec(L, 1, 4)
        if rho == 2:
            return "p3/c1/rho=2", _vec(L, 3, 4, [2])
        if 3 <= rho <= q - 3:
            return "p3/c1/3<=rho<=q-3", _vec(L, 3, 4, [rho])
        if rho == q - 2:
            return "p3/c1/rho=q-2", _vec(L, 3, 4, [q - 2])
        if rho == q - 1:
            return "p3/c1/rho=q-1", _vec(L, 3, 4)
    return None, None


def _predict_general(p, q, fam, sup, rho):
    """Tables for p >= 5 and q >= 2p - 1 (landmark count q - 2)."""
    L = q - 2
    m = (p - 1) // 2
    if fam == "a":
        if rho == 2:
            return "b/a/rho=2", _vec(L, 4, 3, [2], 1)
        if 3 <= rho <= q - 3:
            return "b/a/3<=rho<=q-3", _vec(L, 4, 3, [rho], 1)
        if rho == q - 2:
            return "b/a/rho=q-2", _vec(L, 4, 3, [q - 2], 1)
        if rho == q - 1:
            return "b/a/rho=q-1", _vec(L, 4, 3)
    elif fam == "q":
        nu = rho
        if nu == 1:
            return "b/q/nu=1", _vec(L, 2, 3, [2, 3], 1)
        if 2 <= nu <= p - 3:
            return "b/q/2<=nu<=p-3", _vec(L, 2, 3, [2 * nu, 2 * nu + 1], 1)
        if nu == p - 2:
            return "b/q/nu=p-2", _vec(L, 2, 3, range(2 * nu, q - 1), 1)
        if nu == p - 1:
            return "b/q/nu=p-1", _vec(L, 2, 3)
    elif fam == "b" and 1 <= sup <= (p - 5) // 2:
        nu = sup
        pair = [p + 2 * nu - 1, p + 2 * nu]
        tag = "b/b(p-5)/2"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4, pair)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2] + pair)
        if 3 <= rho <= 2 * nu + p - 3:
            return f"{tag}/3<=rho<=2nu+p-3", _vec(L, 3, 4, [rho] + pair)
        if rho == 2 * nu + p - 2:
            return f"{tag}/rho=2nu+p-2", _vec(L, 3, 4, [rho] + pair)
        if rho == p + 2 * nu + 1:
            return f"{tag}/rho=p+2nu+1", _vec(L, 3, 4, pair + [rho])
        if p + 2 * nu + 2 <= rho <= q - 3:
            return f"{tag}/p+2nu+2<=rho<=q-3", _vec(L, 3, 4, pair + [rho])
        if rho == q - 2:
            return f"{tag}/rho=q-2", _vec(L, 3, 4, pair + [q - 2])
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4, pair)
    elif fam == "b" and sup == (p - 3) // 2:
        tail = list(range(2 * p - 4, q - 1))
        tag = "b/b(p-3)/2"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4, tail)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2] + tail)
        if 3 <= rho <= 2 * p - 6:
            return f"{tag}/3<=rho<=2p-6", _vec(L, 3, 4, [rho] + tail)
        if rho == 2 * p - 5:
            return f"{tag}/rho=2p-5", _vec(L, 3, 4, [rho] + tail)
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4, tail)
    elif fam == "b" and sup == m:
        tag = "b/b(p-1)/2"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2])
        if 3 <= rho <= q - 3:
            return f"{tag}/3<=rho<=q-3", _vec(L, 3, 4, [rho])
        if rho == q - 2:
            return f"{tag}/rho=q-2", _vec(L, 3, 4, [q - 2])
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4)
    elif fam == "c" and sup == 1:
        if rho == 1:
            return "b/c1/rho=1", _vec(L, 1, 4, [2, 3])
        if rho == 4:
            return "b/c1/rho=4", _vec(L, 3, 4, [2, 3, 4])
        if 5 <= rho <= q - 3:
            return "b/c1/5<=rho<=q-3", _vec(L, 3, 4, [2, 3, rho])
        if rho == q - 2:
            return "b/c1/rho=q-2", _vec(L, 3, 4, [2, 3, q - 2])
        if rho == q - 1:
            return "b/c1/rho=q-1", _vec(L, 3, 4, [2, 3])
    elif fam == "c" and sup == 2:
        if rho == 1:
            return "b/c2/rho=1", _vec(L, 1, 4, [4, 5])
        if rho in (2, 3):
            return f"b/c2/rho={rho}", _vec(L, 3, 4, [rho, 4, 5])
        if rho == 6:
            return "b/c2/rho=6", _vec(L, 3, 4, [4, 5, 6])
        if 7 <= rho <= q - 3:
            return "b/c2/7<=rho<=q-3", _vec(L, 3, 4, [4, 5, rho])
        if rho == q - 2:
            return "b/c2/rho=q-2", _vec(L, 3, 4, [4, 5, q - 2])
        if rho == q - 1:
            return "b/c2/rho=q-1", _vec(L, 3, 4, [4, 5])
    elif fam == "c" and 3 <= sup <= m:
        nu = sup
        pair = [2 * nu, 2 * nu + 1]
        tag = "b/c(nu>=3)"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4, pair)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2] + pair)
        if 3 <= rho <= 2 * nu - 2:
            return f"{tag}/3<=rho<=2nu-2", _vec(L, 3, 4, [rho] + pair)
        if rho == 2 * nu - 1:
            return f"{tag}/rho=2nu-1", _vec(L, 3, 4, [rho] + pair)
        if rho == 2 * nu + 2:
            return f"{tag}/rho=2nu+2", _vec(L, 3, 4, pair + [rho])
        if 2 * nu + 3 <= rho <= q - 3:
            return f"{tag}/2nu+3<=rho<=q-3", _vec(L, 3, 4, pair + [rho])
        if rho == q - 2:
            return f"{tag}/rho=q-2", _vec(L, 3, 4, pair + [q - 2])
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4, pair)
    return None, None


def _predict_q2p3(p, q, fam, sup, rho):
    """Tables for p >= 5 and q = 2p - 3 (landmark count q - 1)."""
    L = q - 1
    m = (p - 1) // 2
    if fam == "a":
        if rho == 2:
            return "z/a/rho=2", _vec(L, 4, 3, [2], 1)
        if 3 <= rho <= q - 2:
            return "z/a/3<=rho<=q-2", _vec(L, 4, 3, [rho], 1)
        if rho == q - 1:
            return "z/a/rho=q-1", _vec(L, 4, 3, [q - 1], 1)
    elif fam == "q":
        nu = rho
        if nu == 1:
            return "z/q/nu=1", _vec(L, 2, 3, [2, 3], 1)
        if 2 <= nu <= p - 3:
            return "z/q/2<=nu<=p-3", _vec(L, 2, 3, [2 * nu, 2 * nu + 1], 1)
        if nu == p - 2:
            return "z/q/nu=p-2", _vec(L, 2, 3, range(2 * nu, q), 1)
        if nu == p - 1:
            return "z/q/nu=p-1", _vec(L, 2, 3)
    elif fam == "b" and 1 <= sup <= (p - 5) // 2:
        nu = sup
        pair = [p + 2 * nu - 1, p + 2 * nu]
        tag = "z/b(p-5)/2"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4, pair)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2] + pair)
        if 3 <= rho <= 2 * nu + p - 3:
            return f"{tag}/3<=rho<=2nu+p-3", _vec(L, 3, 4, [rho] + pair)
        if rho == 2 * nu + p - 2:
            return f"{tag}/rho=2nu+p-2", _vec(L, 3, 4, [rho] + pair)
        if rho == p + 2 * nu + 1:
            return f"{tag}/rho=p+2nu+1", _vec(L, 3, 4, pair + [rho])
        if p + 2 * nu + 2 <= rho <= q - 2:
            return f"{tag}/p+2nu+2<=rho<=q-2", _vec(L, 3, 4, pair + [rho])
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4, pair + [q - 1])
    elif fam == "b" and sup == (p - 3) // 2:
        tail = list(range(2 * p - 4, q))
        tag = "z/b(p-3)/2"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4, tail)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2] + tail)
        if 3 <= rho <= 2 * p - 6:
            return f"{tag}/3<=rho<=2p-6", _vec(L, 3, 4, [rho] + tail)
        if rho == 2 * p - 5:
            return f"{tag}/rho=2p-5", _vec(L, 3, 4, [rho] + tail)
    elif fam == "b" and sup == m:
        tag = "z/b(p-1)/2"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2])
        if 3 <= rho <= q - 2:
            return f"{tag}/3<=rho<=q-2", _vec(L, 3, 4, [rho])
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4, [q - 1])
    elif fam == "c" and sup == 1:
        if rho == 1:
            return "z/c1/rho=1", _vec(L, 1, 4, [2, 3])
        if rho == 4:
            return "z/c1/rho=4", _vec(L, 3, 4, [2, 3, 4])
        if 5 <= rho <= q - 2:
            return "z/c1/5<=rho<=q-2", _vec(L, 3, 4, [2, 3, rho])
        if rho == q - 1:
            return "z/c1/rho=q-1", _vec(L, 3, 4, [2, 3, q - 1])
    elif fam == "c" and sup == 2:
        if rho == 1:
            return "z/c2/rho=1", _vec(L, 1, 4, [4, 5])
        if rho in (2, 3):
            return f"z/c2/rho={rho}", _vec(L, 3, 4, [rho, 4, 5])
        if rho == 6:
            return "z/c2/rho=6", _vec(L, 3, 4, [4, 5, 6])
        if 7 <= rho <= q - 2:
            return "z/c2/7<=rho<=q-2", _vec(L, 3, 4, [4, 5, rho])
        if rho == q - 1:
            return "z/c2/rho=q-1", _vec(L, 3, 4, [4, 5, q - 1])
    elif fam == "c" and 3 <= sup <= m:
        nu = sup
        pair = [2 * nu, 2 * nu + 1]
        tag = "z/c(nu>=3)"
        if rho == 1:
            return f"{tag}/rho=1", _vec(L, 1, 4, pair)
        if rho == 2:
            return f"{tag}/rho=2", _vec(L, 3, 4, [2] + pair)
        if 3 <= rho <= 2 * nu - 2:
            return f"{tag}/3<=rho<=2nu-2", _vec(L, 3, 4, [rho] + pair)
        if rho == 2 * nu - 1:
            return f"{tag}/rho=2nu-1", _vec(L, 3, 4, [rho] + pair)
        if rho == 2 * nu + 2:
            return f"{tag}/rho=2nu+2", _vec(L, 3, 4, pair + [rho])
        if 2 * nu + 3 <= rho <= q - 2:
            return f"{tag}/2nu+3<=rho<=q-2", _vec(L, 3, 4, pair + [rho])
        if rho == q - 1:
            return f"{tag}/rho=q-1", _vec(L, 3, 4, pair + [q - 1])
    return None, None


def predicted_branch(p: int, q: int, label: str) -> tuple[str | None, tuple[int, ...] | None]:
    """The displayed branch covering ``label`` and its coordinate vector.

    Returns ``(None, None)`` for landmarks and for vertices no branch lists.
    """
    r = regime(p, q)
    fam, sup, rho = parse_label(label)
    if label_in_landmarks(p, q, label):
        return None, None
    if r is Regime.P3:
        if (fam in "bc" and sup != 1) or fam == "s":
            raise ValueError(f"no vertex {label!r} for p=3")
        return _predict_p3(q, fam, sup, rho)
    if r is Regime.GENERAL:
        return _predict_general(p, q, fam, sup, rho)
    if r is Regime.Q2P3:
        return _predict_q2p3(p, q, fam, sup, rho)
    raise RegimeError(f"no coordinate tables for (p, q) = ({p}, {q}) in regime {r.value}")


def label_in_landmarks(p: int, q: int, label: str) -> bool:
    fam, sup, idx = parse_label(label)
    norm = f"{fam}{sup}_{idx}" if sup is not None else f"{fam}_{idx}"
    return norm in landmark_labels(p, q)


def predicted_code(p: int, q: int, label: str) -> tuple[int, ...] | None:
    return predicted_branch(p, q, label)[1]


# Worked example at (p, q) = (7, 11): coordinate vectors of all 76 vertices
# with respect to landmark_labels(7, 11).
Z77_EXAMPLE = {
    "a_1": (0, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    "a_2": (4, 1, 3, 3, 3, 3, 3, 3, 3, 3),
    "a_3": (4, 3, 1, 3, 3, 3, 3, 3, 3, 3),
    "a_4": (4, 3, 3, 1, 3, 3, 3, 3, 3, 3),
    "a_5": (4, 3, 3, 3, 1, 3, 3, 3, 3, 3),
    "a_6": (4, 3, 3, 3, 3, 1, 3, 3, 3, 3),
    "a_7": (4, 3, 3, 3, 3, 3, 1, 3, 3, 3),
    "a_8": (4, 3, 3, 3, 3, 3, 3, 1, 3, 3),
    "a_9": (4, 3, 3, 3, 3, 3, 3, 3, 1, 3),
    "a_10": (4, 3, 3, 3, 3, 3, 3, 3, 3, 1),
    "q_1": (2, 1, 1, 3, 3, 3, 3, 3, 3, 3),
    "q_2": (2, 3, 3, 1, 1, 3, 3, 3, 3, 3),
    "q_3": (2, 3, 3, 3, 3, 1, 1, 3, 3, 3),
    "q_4": (2, 3, 3, 3, 3, 3, 3, 1, 1, 3),
    "q_5": (2, 3, 3, 3, 3, 3, 3, 3, 3, 1),
    "q_6": (2, 3, 3, 3, 3, 3, 3, 3, 3, 3),
    "b1_1": (1, 4, 4, 4, 4, 4, 4, 2, 2, 4),
    "b1_2": (3, 2, 4, 4, 4, 4, 4, 2, 2, 4),
    "b1_3": (3, 4, 2, 4, 4, 4, 4, 2, 2, 4),
    "b1_4": (3, 4, 4, 2, 4, 4, 4, 2, 2, 4),
    "b1_5": (3, 4, 4, 4, 2, 4, 4, 2, 2, 4),
    "b1_6": (3, 4, 4, 4, 4, 2, 4, 2, 2, 4),
    "b1_7": (3, 4, 4, 4, 4, 4, 2, 2, 2, 4),
    "b1_8": (3, 4, 4, 4, 4, 4, 4, 0, 2, 4),
    "b1_9": (3, 4, 4, 4, 4, 4, 4, 2, 0, 4),
    "b1_10": (3, 4, 4, 4, 4, 4, 4, 2, 2, 2),
    "b2_1": (1, 4, 4, 4, 4, 4, 4, 4, 4, 2),
    "b2_2": (3, 2, 4, 4, 4, 4, 4, 4, 4, 2),
    "b2_3": (3, 4, 2, 4, 4, 4, 4, 4, 4, 2),
    "b2_4": (3, 4, 4, 2, 4, 4, 4, 4, 4, 2),
    "b2_5": (3, 4, 4, 4, 2, 4, 4, 4, 4, 2),
    "b2_6": (3, 4, 4, 4, 4, 2, 4, 4, 4, 2),
    "b2_7": (3, 4, 4, 4, 4, 4, 2, 4, 4, 2),
    "b2_8": (3, 4, 4, 4, 4, 4, 4, 2, 4, 2),
    "b2_9": (3, 4, 4, 4, 4, 4, 4, 4, 2, 2),
    "b2_10": (3, 4, 4, 4, 4, 4, 4, 4, 4, 0),
    "b3_1": (1, 4, 4, 4, 4, 4, 4, 4, 4, 4),
    "b3_2": (3, 2, 4, 4, 4, 4, 4, 4, 4, 4),
    "b3_3": (3, 4, 2, 4, 4, 4, 4, 4, 4, 4),
    "b3_4": (3, 4, 4, 2, 4, 4, 4, 4, 4, 4),
    "b3_5": (3, 4, 4, 4, 2, 4, 4, 4, 4, 4),
    "b3_6": (3, 4, 4, 4, 4, 2, 4, 4, 4, 4),
    "b3_7": (3, 4, 4, 4, 4, 4, 2, 4, 4, 4),
    "b3_8": (3, 4, 4, 4, 4, 4, 4, 2, 4, 4),
    "b3_9": (3, 4, 4, 4, 4, 4, 4, 4, 2, 4),
    "b3_10": (3, 4, 4, 4, 4, 4, 4, 4, 4, 2),
    "c1_1": (1, 2, 2, 4, 4, 4, 4, 4, 4, 4),
    "c1_2": (3, 0, 2, 4, 4, 4, 4, 4, 4, 4),
    "c1_3": (3, 2, 0, 4, 4, 4, 4, 4, 4, 4),
    "c1_4": (3, 2, 2, 2, 4, 4, 4, 4, 4, 4),
    "c1_5": (3, 2, 2, 4, 2, 4, 4, 4, 4, 4),
    "c1_6": (3, 2, 2, 4, 4, 2, 4, 4, 4, 4),
    "c1_7": (3, 2, 2, 4, 4, 4, 2, 4, 4, 4),
    "c1_8": (3, 2, 2, 4, 4, 4, 4, 2, 4, 4),
    "c1_9": (3, 2, 2, 4, 4, 4, 4, 4, 2, 4),
    "c1_10": (3, 2, 2, 4, 4, 4, 4, 4, 4, 2),
    "c2_1": (1, 4, 4, 2, 2, 4, 4, 4, 4, 4),
    "c2_2": (3, 2, 4, 2, 2, 4, 4, 4, 4, 4),
    "c2_3": (3, 4, 2, 2, 2, 4, 4, 4, 4, 4),
    "c2_4": (3, 4, 4, 0, 2, 4, 4, 4, 4, 4),
    "c2_5": (3, 4, 4, 2, 0, 4, 4, 4, 4, 4),
    "c2_6": (3, 4, 4, 2, 2, 2, 4, 4, 4, 4),
    "c2_7": (3, 4, 4, 2, 2, 4, 2, 4, 4, 4),
    "c2_8": (3, 4, 4, 2, 2, 4, 4, 2, 4, 4),
    "c2_9": (3, 4, 4, 2, 2, 4, 4, 4, 2, 4),
    "c2_10": (3, 4, 4, 2, 2, 4, 4, 4, 4, 2),
    "c3_1": (1, 4, 4, 4, 4, 2, 2, 4, 4, 4),
    "c3_2": (3, 2, 4, 4, 4, 2, 2, 4, 4, 4),
    "c3_3": (3, 4, 2, 4, 4, 2, 2, 4, 4, 4),
    "c3_4": (3, 4, 4, 2, 4, 2, 2, 4, 4, 4),
    "c3_5": (3, 4, 4, 4, 2, 2, 2, 4, 4, 4),
    "c3_6": (3, 4, 4, 4, 4, 0, 2, 4, 4, 4),
    "c3_7": (3, 4, 4, 4, 4, 2, 0, 4, 4, 4),
    "c3_8": (3, 4, 4, 4, 4, 2, 2, 2, 4, 4),
    "c3_9": (3, 4, 4, 4, 4, 2, 2, 4, 2, 4),
    "c3_10": (3, 4, 4, 4, 4, 2, 2, 4, 4, 2),
}
