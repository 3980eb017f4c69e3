"""Zero divisors of Z_n and the zero-divisor graph on them."""
from __future__ import annotations

from math import gcd

from .graph import Graph, from_edge_list


def zero_divisors(n: int) -> list[int]:
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return [a for a in range(1, n) if gcd(a, n) > 1]


def zero_divisor_graph(n: int) -> Graph:
    """Γ(Z_n): vertices are the nonzero zero divisors (ascending), labelled by residue.

    Two distinct residues are adjacent iff their product is 0 mod n. Squares that
    vanish do not produce loops.
    """
    zd = zero_divisors(n)
    edges = [(i, j) for i in range(len(zd)) for j in range(i + 1, len(zd))
             if zd[i] * zd[j] % n == 0]
    return from_edge_list(len(zd), edges, {i: str(a) for i, a in enumerate(zd)})


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor(n: int) -> list[int]:
    """Prime factors of n with multiplicity, by trial division."""
    out, d = [], 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def split_semiprime(n: int) -> tuple[int, int] | None:
    """``(p, q)`` with p < q prime and pq = n, or None."""
    fs = factor(n)
    if len(fs) == 2 and fs[0] != fs[1]:
        return fs[0], fs[1]
    return None


def validate_kpq_structure(g: Graph, p: int, q: int) -> bool:
    """Check that Γ(Z_pq) is K_{p-1,q-1}, split into multiples of q and multiples of p."""
    if not (is_prime(p) and is_prime(q) and p != q):
        raise ValueError(f"{p} and {q} must be distinct primes")
    n = p * q
    if g.labels is None or g.n != p + q - 2:
        return False
    residue = {v: int(g.labels[v]) for v in range(g.n)}
    mult_q = {v for v, r in residue.items() if r % q == 0}
    mult_p = {v for v, r in residue.items() if r % p == 0}
    if len(mult_q) != p - 1 or len(mult_p) != q - 1 or mult_q & mult_p:
        return False
    if mult_q | mult_p != set(range(g.n)):
        return False
    if any(r % n == 0 for r in residue.values()):
        return False
    return (all(g.adj[v] == mult_p for v in mult_q)
            and all(g.adj[v] == mult_q for v in mult_p))
