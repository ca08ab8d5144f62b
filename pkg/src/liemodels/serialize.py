"""JSON documents for algebras, model algebras and linear maps.

Scalars are strings in the exact grammar of :mod:`liemodels.scalars`; no
floats ever appear.  Output is canonical (fixed key order, brackets sorted
by ``(i, j)``, terms by ``k``), UTF-8, indented by two spaces and
newline-terminated, so export -> import -> export is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lie import LieAlgebra, LinearMap
from .linalg import Matrix, Subspace
from .model import ModelAlgebra
from .poly import MultiPoly
from .scalars import GaussianRational, format_scalar, parse_gaussian, parse_rational, parse_scalar


class DocumentError(ValueError):
    """Malformed or inconsistent document."""


def _param_str(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction, GaussianRational)):
        return format_scalar(Fraction(v) if isinstance(v, int) else v)
    if isinstance(v, MultiPoly):
        raise DocumentError("polynomial parameters cannot be serialized")
    return str(v)


def _param_value(s: str):
    try:
        return parse_scalar(s)
    except ValueError:
        return s


def _subspace_doc(W: Subspace, ring: str):
    idx = W.index_list()
    if idx is not None:
        return idx
    return {"basis": [[format_scalar(_scalar(c, ring)) for c in v] for v in W.basis]}


def _scalar(c, ring: str):
    if ring == "gaussian" and not isinstance(c, GaussianRational):
        return GaussianRational(c, 0)
    return c


def algebra_to_doc(g: LieAlgebra, subspaces: dict | None = None, family: str | None = None) -> dict:
    if g.ring == "polynomial":
        raise DocumentError(f"{g.name}: polynomial structure constants cannot be serialized")
    brackets = []
    for (i, j) in sorted(g.brackets):
        terms = sorted(g.structure(i, j))
        brackets.append({"i": i, "j": j,
                         "terms": [{"k": k, "c": format_scalar(_scalar(c, g.ring))} for k, c in terms]})
    doc = {"name": g.name}
    if family:
        doc["family"] = family
    doc["params"] = {k: _param_str(v) for k, v in sorted(g.params.items())}
    doc["dim"] = g.dim
    doc["scalars"] = g.ring
    doc["basis"] = list(g.labels)
    doc["brackets"] = brackets
    if subspaces:
        doc["subspaces"] = {name: _subspace_doc(W, g.ring) for name, W in subspaces.items()}
    return doc


def model_to_doc(m: ModelAlgebra) -> dict:
    g = m.algebra
    if m.params:
        g = g.renamed(g.name, {**g.params, **m.params})
    return algebra_to_doc(g, m.subspaces(), m.family or None)


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def export_algebra(obj) -> str:
    if isinstance(obj, ModelAlgebra):
        return dumps(model_to_doc(obj))
    return dumps(algebra_to_doc(obj))


def _need(doc: dict, key: str, kind):
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    val = doc[key]
    if not isinstance(val, kind) or isinstance(val, bool) and kind is int:
        raise DocumentError(f"field {key!r} has the wrong type")
    return val


def _parse_c(text, ring: str):
    if not isinstance(text, str):
        raise DocumentError(f"scalar {text!r} must be a string (floats are not allowed)")
    try:
        return parse_gaussian(text) if ring == "gaussian" else parse_rational(text)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def doc_to_algebra(doc: dict) -> tuple:
    """(LieAlgebra, subspaces dict, family) from a parsed document."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    name = _need(doc, "name", str)
    dim = _need(doc, "dim", int)
    ring = _need(doc, "scalars", str)
    if ring not in ("rational", "gaussian"):
        raise DocumentError(f"unknown scalars {ring!r}")
    labels = _need(doc, "basis", list)
    if len(labels) != dim:
        raise DocumentError(f"basis has {len(labels)} labels but dim is {dim}")
    params = {k: _param_value(v) for k, v in _need(doc, "params", dict).items()}
    brackets = {}
    last = None
    for entry in _need(doc, "brackets", list):
        i, j = _need(entry, "i", int), _need(entry, "j", int)
        if not (0 <= i < j < dim):
            raise DocumentError(f"bracket indices ({i}, {j}) out of range or not i < j")
        if last is not None and (i, j) <= last:
            raise DocumentError(f"brackets not in ascending (i, j) order at ({i}, {j})")
        last = (i, j)
        terms = {}
        for t in _need(entry, "terms", list):
            k = _need(t, "k", int)
            if not 0 <= k < dim or k in terms:
                raise DocumentError(f"term index {k} out of range or repeated in ({i}, {j})")
            c = _parse_c(t.get("c"), ring)
            if not c:
                raise DocumentError(f"zero coefficient stored in ({i}, {j})")
            terms[k] = c
        brackets[(i, j)] = terms
    g = LieAlgebra(name, labels, brackets, params, ring)
    subspaces = {}
    for sname, spec in doc.get("subspaces", {}).items():
        if isinstance(spec, list):
            if not all(isinstance(i, int) and 0 <= i < dim for i in spec):
                raise DocumentError(f"subspace {sname!r} has bad indices")
            subspaces[sname] = Subspace.coordinate(dim, spec)
        elif isinstance(spec, dict) and "basis" in spec:
            vecs = [[_parse_c(c, ring) for c in v] for v in spec["basis"]]
            if any(len(v) != dim for v in vecs):
                raise DocumentError(f"subspace {sname!r} vectors must have length {dim}")
            subspaces[sname] = Subspace(dim, vecs)
        else:
            raise DocumentError(f"subspace {sname!r} must be an index list or {{'basis': ...}}")
    return g, subspaces, doc.get("family")


def loads(text: str) -> tuple:
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return doc_to_algebra(doc)


def _reject_float(text):
    raise DocumentError(f"float {text} not allowed; use the exact scalar grammar")


def load_model(text: str) -> ModelAlgebra:
    g, subs, family = loads(text)
    if "p" not in subs:
        raise DocumentError("document has no 'p' subspace")
    k = subs.get("k", Subspace.zero(g.dim))
    return ModelAlgebra(g, subs["p"], k, family or "", dict(g.params))


# --- maps ----------------------------------------------------------------

def map_to_doc(phi: LinearMap) -> dict:
    ring = phi.target.ring if phi.target.ring == "gaussian" else phi.matrix.ring
    M = phi.matrix
    return {
        "name": phi.name,
        "source": phi.source.name,
        "target": phi.target.name,
        "rows": M.rows,
        "cols": M.cols,
        "scalars": "gaussian" if ring == "gaussian" else "rational",
        "matrix": [[format_scalar(_scalar(M[i, j], ring)) for j in range(M.cols)]
                   for i in range(M.rows)],
    }


def export_map(phi: LinearMap) -> str:
    return dumps(map_to_doc(phi))


def load_map(text: str, source: LieAlgebra, target: LieAlgebra) -> LinearMap:
    try:
        doc = json.loads(text, parse_float=_reject_float)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    rows, cols = _need(doc, "rows", int), _need(doc, "cols", int)
    ring = doc.get("scalars", "rational")
    entries = _need(doc, "matrix", list)
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise DocumentError("matrix shape does not match rows/cols")
    if rows != target.dim or cols != source.dim:
        raise DocumentError(f"map is {rows}x{cols} but algebras have dims {source.dim} -> {target.dim}")
    for key, alg in (("source", source), ("target", target)):
        if doc.get(key) != alg.name:
            raise DocumentError(f"map {key} {doc.get(key)!r} does not match algebra {alg.name!r}")
    M = Matrix([[_parse_c(c, ring) for c in r] for r in entries], cols)
    return LinearMap(source, target, M, doc.get("name", ""))
