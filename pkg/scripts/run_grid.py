"""Run verify_theorem over a (p, q) grid and write one CSV."""
import argparse
import sys

from zdmd.cli import _pairs, parse_range
from zdmd.verify import VerificationReport, verify_theorem


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", default="2..13")
    ap.add_argument("--q", default="3..29")
    ap.add_argument("--mode", choices=["fast", "full"], default="fast")
    ap.add_argument("--out", default="grid.csv")
    args = ap.parse_args()
    rep = VerificationReport()
    for p, q in _pairs(parse_range(args.p), parse_range(args.q)):
        r = verify_theorem(p, q, args.mode)
        bad = len(r.failures())
        print(f"({p},{q}) {len(r.rows)} rows, {bad} failing", file=sys.stderr)
        rep.extend(r)
    with open(args.out, "w") as f:
        f.write(rep.to_csv())
    print(f"wrote {len(rep.rows)} rows to {args.out}; ok={rep.ok}")
    sys.exit(0 if rep.ok else 1)


if __name__ == "__main__":
    main()
