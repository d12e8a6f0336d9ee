"""JSON algebra, map and subspace files.

Algebra files carry exactly ``name``, ``field``, ``dim``, ``basis`` and
``products``; products not listed are zero. Writing is canonical: products
in basis order, nonzero coefficients only, scalars reduced.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Algebra
from .coefficients import CoeffDomain, domain_from_json
from .errors import ParseError
from .linear import Matrix, Subspace

ALGEBRA_KEYS = {"name", "field", "dim", "basis", "products"}
PRODUCT_KEYS = {"left", "right", "value"}
MAP_KEYS = {"source", "target", "matrix"}


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None


def _scalar(d: CoeffDomain, s):
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"scalar must be a string or integer, got {s!r}")
    return d.parse(str(s))


def algebra_from_obj(obj) -> Algebra:
    if not isinstance(obj, dict) or set(obj) != ALGEBRA_KEYS:
        got = sorted(obj) if isinstance(obj, dict) else type(obj).__name__
        raise ParseError(f"algebra object needs exactly {sorted(ALGEBRA_KEYS)}, got {got}")
    d = domain_from_json(obj["field"])
    dim, basis = obj["dim"], obj["basis"]
    if not isinstance(obj["name"], str):
        raise ParseError("name must be a string")
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise ParseError(f"dim must be a positive integer, got {dim!r}")
    if not isinstance(basis, list) or len(basis) != dim or not all(isinstance(l, str) for l in basis):
        raise ParseError(f"basis must list {dim} string labels")
    if len(set(basis)) != dim:
        raise ParseError("basis labels must be distinct")
    index = {l: i for i, l in enumerate(basis)}

    def label(l):
        if l not in index:
            raise ParseError(f"unknown basis label {l!r}")
        return index[l]

    table = {}
    if not isinstance(obj["products"], list):
        raise ParseError("products must be a list")
    for p in obj["products"]:
        if not isinstance(p, dict) or set(p) != PRODUCT_KEYS:
            raise ParseError(f"product entry needs exactly {sorted(PRODUCT_KEYS)}: {p!r}")
        key = (label(p["left"]), label(p["right"]))
        if key in table:
            raise ParseError(f"duplicate product {p['left']}*{p['right']}")
        if not isinstance(p["value"], dict):
            raise ParseError("product value must be an object")
        vec = [d.zero] * dim
        for l, s in p["value"].items():
            vec[label(l)] = _scalar(d, s)
        table[key] = vec
    return Algebra.from_table(d, dim, table, name=obj["name"], labels=basis)


def algebra_to_obj(a: Algebra) -> dict:
    d = a.domain
    products = []
    for i in range(a.dim):
        for j in range(a.dim):
            v = a.sc[i][j]
            value = {a.basis_labels[k]: d.format(c) for k, c in enumerate(v) if c != d.zero}
            if value:
                products.append({"left": a.basis_labels[i], "right": a.basis_labels[j], "value": value})
    return {"name": a.name, "field": d.to_json(), "dim": a.dim, "basis": list(a.basis_labels),
            "products": products}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def parse_algebra(text: str) -> Algebra:
    return algebra_from_obj(_load(text))


def write_algebra(a: Algebra) -> str:
    return dumps(algebra_to_obj(a))


def read_algebra(path) -> Algebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def _matrix_rows(d: CoeffDomain, rows, ncols: int | None = None) -> list[list]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("matrix must be a list of rows")
    out = [[_scalar(d, s) for s in r] for r in rows]
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise ParseError("ragged matrix rows")
    if ncols is not None and widths and widths != {ncols}:
        raise ParseError(f"rows must have length {ncols}")
    return out


def parse_map(text: str, d: CoeffDomain) -> tuple[str, str, Matrix]:
    """``(source, target, matrix)``; rows outermost."""
    obj = _load(text)
    if not isinstance(obj, dict) or set(obj) != MAP_KEYS:
        raise ParseError(f"map object needs exactly {sorted(MAP_KEYS)}")
    rows = _matrix_rows(d, obj["matrix"])
    if not rows or not rows[0]:
        raise ParseError("empty matrix")
    return str(obj["source"]), str(obj["target"]), Matrix.of(d, rows)


def read_map(path, d: CoeffDomain):
    return parse_map(Path(path).read_text(encoding="utf-8"), d)


def map_to_obj(source: str, target: str, m: Matrix) -> dict:
    d = m.domain
    return {"source": source, "target": target, "matrix": [[d.format(x) for x in r] for r in m.rows]}


def parse_subspace(text: str, d: CoeffDomain, n: int) -> Subspace:
    """A JSON list of spanning vectors (possibly empty)."""
    return Subspace.span(d, n, _matrix_rows(d, _load(text), n))


def read_subspace(path, d: CoeffDomain, n: int) -> Subspace:
    return parse_subspace(Path(path).read_text(encoding="utf-8"), d, n)
