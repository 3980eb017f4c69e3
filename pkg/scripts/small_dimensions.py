"""Exact dim and idim of BS(Γ(Z_n)) for every small n where search finishes quickly."""
import argparse

from zdmd.cli import bs_graph
from zdmd.constructions import predicted_dimension
from zdmd.graph import is_connected
from zdmd.resolving import InfeasibleError, independent_min_resolving, min_resolving_bnb
from zdmd.ring import split_semiprime


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--budget", type=int, default=200_000)
    args = ap.parse_args()
    print("n,vertices,dim,idim,predicted")
    for n in range(4, args.max_n + 1):
        g = bs_graph(n)
        if g.n < 2 or not is_connected(g):
            continue
        d = min_resolving_bnb(g, budget=args.budget)
        try:
            i = independent_min_resolving(g, budget=args.budget)
            idim = i.value if i.exact else f"{i.lower}..{i.upper}"
        except InfeasibleError:
            idim = "none"
        pq = split_semiprime(n)
        pred = str(predicted_dimension(*pq)) if pq else ""
        dim = d.value if d.exact else f"{d.lower}..{d.upper}"
        print(f"{n},{g.n},{dim},{idim},{pred}")


if __name__ == "__main__":
    main()
