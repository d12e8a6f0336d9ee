"""Compare the two odd-component orders of the doubled algebra: how often the
supercommutator closed form and the doubling equivalences survive each."""

import argparse
import random

from prealg.algebra import random_algebra
from prealg.coefficients import PrimeField
from prealg.linear import Matrix
from prealg.morphisms import AlgebraMap, classify_map
from prealg.superalgebra import (FLAGS3, DoublingParams, SuperElement, double, double_map, supercommutator,
                                 supercommutator_closed_form)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    d = PrimeField(5)
    rng = random.Random(args.seed)
    for order in ("standard", "swapped"):
        closed = equiv = 0
        for _ in range(args.trials):
            a = random_algebra(d, 2, rng)
            p = DoublingParams.of(d, 1, rng.choice((1, 4)))
            u, v = (SuperElement.from_flat(tuple(rng.randrange(5) for _ in range(4))) for _ in range(2))
            closed += supercommutator(double(a, p, order), u, v) != supercommutator_closed_form(a, 1, u, v)
            f = AlgebraMap.endo(a, Matrix.of(d, [[rng.randrange(5) for _ in range(2)] for _ in range(2)]))
            base, dbl = classify_map(f), classify_map(double_map(f, p, order))
            equiv += any(base.flags[k] != dbl.flags[k] for k in FLAGS3)
        print(f"{order:9s} closed-form mismatches {closed}/{args.trials}, "
              f"equivalence mismatches {equiv}/{args.trials}")


if __name__ == "__main__":
    main()
