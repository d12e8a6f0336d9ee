"""Per-tree dimensions of the ideal generated by the pre-Lie (or Lie-admissible)
generators inside the truncated tensor algebra, in both closure modes."""

import argparse
import time

from prealg.algebra import a2, zero_algebra
from prealg.coefficients import PrimeField, Rationals
from prealg.tensor import graded_ideal_closure, theorem_generators


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime", type=int, default=3, help="0 for the rationals")
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--kind", choices=("prelie", "lieadm"), default="prelie")
    args = ap.parse_args()
    d = PrimeField(args.prime) if args.prime else Rationals()
    for a in (a2(d), zero_algebra(d, 2)):
        gens = theorem_generators(a, args.kind, max_degree=min(3, args.max_degree))
        for mode in ("safe", "truncated"):
            t0 = time.perf_counter()
            r = graded_ideal_closure(gens, args.max_degree, mode=mode)
            print(f"{a.name} over {d}, {mode}: dim {r.total_dim}/{r.ambient_dim}, "
                  f"degree 1 trivial: {r.degree_one_trivial} ({time.perf_counter() - t0:.2f}s)")
            for tree, _, dim, amb in r.table():
                print(f"  {tree:12s} {dim:4d} / {amb}")


if __name__ == "__main__":
    main()
