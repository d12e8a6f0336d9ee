"""Idempotent census: |E| (idempotents of a kind) and |P| (valid kernel/image
pairs) for small algebras over prime fields."""

import argparse

from prealg.algebra import a2, all_algebras, zero_algebra
from prealg.coefficients import PrimeField
from prealg.idempotents import IdempotentKind, census_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--prime", type=int, default=2)
    ap.add_argument("--all-dim2", action="store_true", help="summarise every dim-2 algebra (F2 only is quick)")
    args = ap.parse_args()
    d = PrimeField(args.prime)
    kinds = (IdempotentKind.PRE, IdempotentKind.GENERALIZED)
    for a in (a2(d), zero_algebra(d, 2)):
        for kind, e, p, ok in census_rows(a, kinds):
            print(f"{a.name:6s} {kind:4s} E={e:3d} P={p:3d} {'ok' if ok else 'MISMATCH'}")
    if args.all_dim2:
        hist = {}
        for a in all_algebras(d, 2):
            for kind, e, p, ok in census_rows(a, kinds):
                hist[(kind, e, ok)] = hist.get((kind, e, ok), 0) + 1
        for (kind, e, ok), count in sorted(hist.items()):
            print(f"{kind:4s} |E|=|P|={e:3d} {'ok' if ok else 'MISMATCH'}: {count} algebras")


if __name__ == "__main__":
    main()
