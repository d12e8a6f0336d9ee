"""``prealg`` command line.

Exit codes: 0 success or every requested property holds, 1 a property fails
(with a witness), 2 usage / parse / precondition errors, 3 budget exceeded.
Machine reports (``--format json``) are versioned and byte-stable; timing is
only included with ``--timing``.
"""

from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import Algebra, commutator_algebra, split_product
from .coefficients import CoeffDomain
from .errors import BudgetExceeded, PreAlgError
from .fileformat import algebra_to_obj, dumps, read_algebra, read_map, read_subspace, write_algebra
from .identities import IDENTITIES, is_jordan_admissible
from .idempotents import IdempotentKind, is_idempotent_endo, pair_from_idempotent, roundtrip_check
from .linear import DEFAULT_BUDGET, Matrix, Subspace
from .morphisms import FLAGS, AlgebraMap, classify_map
from .substructures import huq_smith_commutator, pre_ideal_commutator, quotient
from .superalgebra import DoublingParams, double, grading_check
from .tensor import generators_in_kernel_check, graded_ideal_closure, theorem_generators

REPORT_VERSION = 1


# -- serialisation helpers --------------------------------------------------


def _jsonable(d: CoeffDomain, x):
    """Raw scalars become scalar strings, index tuples stay integer lists."""
    if isinstance(x, Fraction):
        return d.format(x)
    if isinstance(x, Subspace):
        return x.to_json()
    if isinstance(x, Matrix):
        return [[d.format(c) for c in r] for r in x.rows]
    if isinstance(x, (tuple, list)):
        return [_jsonable(d, y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(d, v) for k, v in x.items()}
    return x


def _vec(d: CoeffDomain, v) -> list[str] | None:
    return None if v is None else [d.format(c) for c in v]


def _witness(d: CoeffDomain, w):
    if w is None:
        return None
    if all(isinstance(c, int) for c in w):
        return list(w)
    return [_vec(d, v) if isinstance(v, tuple) else _jsonable(d, v) for v in w]


def _report_obj(d: CoeffDomain, r) -> dict:
    return {"name": r.name, "holds": r.holds, "witness": _witness(d, r.witness),
            "defect": _vec(d, r.defect), "info": _jsonable(d, r.info)}


# -- text rendering -----------------------------------------------------------


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(obj))
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x) for x in v)


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    return str(v)


# -- commands -------------------------------------------------------------


def cmd_check(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    names = list(IDENTITIES) if args.all or not args.identity else args.identity
    reports = []
    for n in names:
        if n == "jordan-admissible":
            r = is_jordan_admissible(a, budget=args.budget)
        else:
            r = IDENTITIES[n](a)
        reports.append(_report_obj(a.domain, r))
    ok = all(r["holds"] for r in reports)
    return {"algebra": a.name, "identities": reports}, 0 if ok else 1


def cmd_classify_map(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    target = read_algebra(args.target) if args.target else a
    src, tgt, m = read_map(args.map, a.domain)
    f = AlgebraMap(a, target, m)
    prof = classify_map(f)
    flags = {k: {"holds": prof.flags[k], "witness": _witness(a.domain, prof.witnesses.get(k))} for k in FLAGS}
    return {"algebra": a.name, "map": {"source": src, "target": tgt}, "flags": flags}, 0


def cmd_idempotents(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    kind = IdempotentKind(args.kind)
    d = a.domain
    if args.verify:
        _, _, m = read_map(args.verify, d)
        r = is_idempotent_endo(a, m, kind)
        out = {"algebra": a.name, "kind": kind.value, "mode": "verify", "report": _report_obj(d, r)}
        if r.holds and d.is_field:
            p = pair_from_idempotent(a, m, kind)
            out["kernel"] = p.k_part.to_json()
            out["image"] = p.b_part.to_json()
        return out, 0 if r.holds else 1
    r = roundtrip_check(a, kind, budget=args.budget)
    census = {"kind": kind.value, "E": r.info["E"], "P": r.info["P"], "bijection": r.holds}
    out = {"algebra": a.name, "kind": kind.value, "mode": "enumerate", "census": census,
           "report": _report_obj(d, r)}
    return out, 0 if r.holds else 1


def _emit_algebra(args, a: Algebra) -> str | None:
    if not args.out_dir:
        return None
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{a.name}.json"
    path.write_text(write_algebra(a), encoding="utf-8")
    return path.name


def cmd_decompose(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    s = split_product(a)
    back = s.recombine()
    files = [_emit_algebra(args, x) for x in (s.comm, s.anticomm)]
    out = {"algebra": a.name, "comm": algebra_to_obj(s.comm), "anticomm": algebra_to_obj(s.anticomm),
           "recombines": back == a}
    if args.out_dir:
        out["written"] = files
    return out, 0 if back == a else 1


def cmd_double(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    p = DoublingParams.of(a.domain, a.domain.parse(args.mu), a.domain.parse(args.lam))
    da = double(a, p)
    out = {"algebra": a.name, "mu": str(p.mu), "lambda": str(p.lam),
           "constraint_mu_lambda": p.constraint_holds, "grading": grading_check(a, p).holds,
           "double": algebra_to_obj(da)}
    if args.out_dir:
        out["written"] = [_emit_algebra(args, da)]
    return out, 0


def cmd_tensor(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    gen = generators_in_kernel_check(a, args.kind)
    gens = theorem_generators(a, args.kind, max(3, args.max_degree))
    out = {"algebra": a.name, "kind": args.kind, "max_degree": args.max_degree,
           "generators": _report_obj(a.domain, gen)}
    if args.max_degree >= 3:
        cl = graded_ideal_closure(gens, args.max_degree, budget=args.budget, mode=args.mode)
        out["closure"] = {
            "mode": cl.mode,
            "dim": cl.total_dim,
            "ambient_dim": cl.ambient_dim,
            "degree_one_trivial": cl.degree_one_trivial,
            "per_degree": [{"degree": k, "dim": v[0], "ambient": v[1]} for k, v in cl.per_degree.items()],
            "per_tree": [{"tree": t, "degree": k, "dim": dim, "ambient": amb} for t, k, dim, amb in cl.table()],
        }
    return out, 0 if gen.holds else 1


def cmd_quotient(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    k = read_subspace(args.subspace, a.domain, a.dim)
    q = quotient(a, k, args.product)
    out = {"algebra": a.name, "product": args.product, "ideal": k.to_json(),
           "section_columns": q.section_columns,
           "quotient": algebra_to_obj(q.induced) if q.induced is not None else None}
    if args.out_dir and q.induced is not None:
        out["written"] = [_emit_algebra(args, q.induced)]
    return out, 0


def cmd_commutator(args) -> tuple[dict, int]:
    a = read_algebra(args.algebra)
    i = read_subspace(args.first, a.domain, a.dim)
    j = read_subspace(args.second, a.domain, a.dim)
    if args.huq:
        c = huq_smith_commutator(a, i, j)
        flavour = "huq"
    else:
        c = pre_ideal_commutator(a, i, j)
        flavour = "pre"
    out = {"algebra": a.name, "commutator": flavour, "result": c.to_json(), "dim": c.rank}
    if not args.huq:
        # cross-check: the same commutator as ideals of (M, [-,-])
        out["matches_huq_in_U"] = huq_smith_commutator(commutator_algebra(a), i, j) == c
    return out, 0


COMMANDS = {
    "check": cmd_check,
    "classify-map": cmd_classify_map,
    "idempotents": cmd_idempotents,
    "decompose": cmd_decompose,
    "double": cmd_double,
    "tensor": cmd_tensor,
    "quotient": cmd_quotient,
    "commutator": cmd_commutator,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on enumeration sizes")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = argparse.ArgumentParser(prog="prealg", description="Pre-morphisms and related structure of finite algebras.")
    p.add_argument("--version", action="version", version=f"prealg {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="decide identities")
    s.add_argument("algebra")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--identity", action="append", choices=list(IDENTITIES))
    g.add_argument("--all", action="store_true")

    s = sub.add_parser("classify-map", parents=[common], help="five-flag profile of a linear map")
    s.add_argument("algebra")
    s.add_argument("map")
    s.add_argument("--target", help="target algebra file (default: the source)")

    s = sub.add_parser("idempotents", parents=[common], help="idempotent endomorphisms of a kind")
    s.add_argument("algebra")
    s.add_argument("--kind", choices=[k.value for k in IdempotentKind], required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--enumerate", action="store_true")
    g.add_argument("--verify", metavar="MAP")

    s = sub.add_parser("decompose", parents=[common], help="commutative + anticommutative split")
    s.add_argument("algebra")
    s.add_argument("--out-dir")

    s = sub.add_parser("double", parents=[common], help="graded double M + M")
    s.add_argument("algebra")
    s.add_argument("--mu", required=True)
    s.add_argument("--lambda", "--lam", dest="lam", required=True)
    s.add_argument("--out-dir")

    s = sub.add_parser("tensor", parents=[common], help="tensor-algebra generators and closure")
    s.add_argument("algebra")
    s.add_argument("--kind", choices=("prelie", "lieadm"), required=True)
    s.add_argument("--max-degree", type=int, default=4)
    s.add_argument("--mode", choices=("safe", "truncated"), default="safe")

    s = sub.add_parser("quotient", parents=[common], help="quotient by an ideal of a given product")
    s.add_argument("algebra")
    s.add_argument("subspace")
    s.add_argument("--product", choices=("dot", "bracket", "circle"), default="dot")
    s.add_argument("--out-dir")

    s = sub.add_parser("commutator", parents=[common], help="commutator of two (pre-)ideals")
    s.add_argument("algebra")
    s.add_argument("first")
    s.add_argument("second")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--pre", action="store_true", help="pre-ideal commutator (default)")
    g.add_argument("--huq", action="store_true", help="Huq=Smith commutator of ideals")
    return p


def render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(envelope)
    return "\n".join(_text(envelope)) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    envelope = {"version": REPORT_VERSION, "command": args.command}
    try:
        result, code = COMMANDS[args.command](args)
        envelope["result"] = result
    except BudgetExceeded as e:
        envelope["error"] = {"type": type(e).__name__, "message": str(e)}
        code = 3
    except (PreAlgError, OSError, ValueError) as e:
        envelope["error"] = {"type": type(e).__name__, "message": str(e)}
        code = 2
    envelope["exit_code"] = code
    if args.timing:
        envelope["seconds"] = round(time.perf_counter() - t0, 6)
    out = render(envelope, args.format)
    (sys.stdout if code in (0, 1) else sys.stderr).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
