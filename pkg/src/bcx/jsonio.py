"""JSON encodings for scalars, vectors, matrices, series, weights and submodules.

Complex numbers are ``[re, im]`` pairs.  Bicomplex scalars are
``{"e1": [re, im], "e2": [re, im]}``; the cartesian form
``{"z": [re, im], "w": [re, im]}`` is accepted on input and always written
back in idempotent form.  Decoders raise :class:`~bcx.errors.ParseError` on
anything that does not match.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import Bicomplex, Hyperbolic
from .duality import Submodule, submodule_from_generators
from .errors import ParseError
from .hardy import BCPowerSeries, WeightSequence
from .linalg import BCMatrix, BCVector


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc


def _real(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"{where}: expected a number, got {v!r}")
    if not math.isfinite(v):
        raise ParseError(f"{where}: non-finite number")
    return float(v)


def _int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ParseError(f"{where}: expected an integer, got {v!r}")
    return v


def _complex(v, where: str) -> complex:
    if not isinstance(v, list) or len(v) != 2:
        raise ParseError(f"{where}: expected [re, im], got {v!r}")
    return complex(_real(v[0], where), _real(v[1], where))


def _obj(doc, where: str) -> dict:
    if not isinstance(doc, dict):
        raise ParseError(f"{where}: expected an object, got {type(doc).__name__}")
    return doc


def _key(doc: dict, key: str, where: str):
    if key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    return doc[key]


def encode_complex(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def encode_scalar(Z: Bicomplex) -> dict:
    return {"e1": encode_complex(Z.z1), "e2": encode_complex(Z.z2)}


def decode_scalar(doc, where: str = "scalar") -> Bicomplex:
    doc = _obj(doc, where)
    if "e1" in doc or "e2" in doc:
        return Bicomplex(_complex(_key(doc, "e1", where), where), _complex(_key(doc, "e2", where), where))
    if "z" in doc or "w" in doc:
        return Bicomplex.from_cartesian(_complex(_key(doc, "z", where), where),
                                        _complex(_key(doc, "w", where), where))
    raise ParseError(f"{where}: expected keys e1/e2 or z/w")


def encode_hyperbolic(h: Hyperbolic) -> list[float]:
    return [h.x1, h.x2]


def decode_hyperbolic(v, where: str = "hyperbolic") -> Hyperbolic:
    if not isinstance(v, list) or len(v) != 2:
        raise ParseError(f"{where}: expected [x1, x2], got {v!r}")
    return Hyperbolic(_real(v[0], where), _real(v[1], where))


def encode_vector(x: BCVector) -> dict:
    return {
        "dim": x.dim,
        "e1": [encode_complex(z) for z in x.v1],
        "e2": [encode_complex(z) for z in x.v2],
    }


def decode_vector(doc, where: str = "vector") -> BCVector:
    doc = _obj(doc, where)
    comps = []
    for key in ("e1", "e2"):
        vals = _key(doc, key, where)
        if not isinstance(vals, list):
            raise ParseError(f"{where}.{key}: expected a list")
        comps.append([_complex(v, f"{where}.{key}[{k}]") for k, v in enumerate(vals)])
    dim = _int(doc.get("dim", len(comps[0])), f"{where}.dim")
    if dim < 1 or len(comps[0]) != dim or len(comps[1]) != dim:
        raise ParseError(f"{where}: component lengths do not match dim={dim}")
    return BCVector(*comps)


def encode_matrix(A: BCMatrix) -> dict:
    return {
        "rows": A.rows,
        "cols": A.cols,
        "e1": [[encode_complex(z) for z in row] for row in A.A1],
        "e2": [[encode_complex(z) for z in row] for row in A.A2],
    }


def decode_matrix(doc, where: str = "matrix") -> BCMatrix:
    doc = _obj(doc, where)
    rows = _int(_key(doc, "rows", where), f"{where}.rows")
    cols = _int(_key(doc, "cols", where), f"{where}.cols")
    if rows < 1 or cols < 1:
        raise ParseError(f"{where}: rows and cols must be positive")
    comps = []
    for key in ("e1", "e2"):
        data = _key(doc, key, where)
        if not isinstance(data, list) or len(data) != rows:
            raise ParseError(f"{where}.{key}: expected {rows} rows")
        mat = []
        for r, row in enumerate(data):
            if not isinstance(row, list) or len(row) != cols:
                raise ParseError(f"{where}.{key}[{r}]: expected {cols} entries")
            mat.append([_complex(v, f"{where}.{key}[{r}][{c}]") for c, v in enumerate(row)])
        comps.append(mat)
    return BCMatrix(np.array(comps[0], dtype=complex), np.array(comps[1], dtype=complex))


def encode_series(f: BCPowerSeries) -> dict:
    return {"degree": f.degree, "coeffs": [encode_scalar(c) for c in f.coeffs]}


def decode_series(doc, where: str = "series") -> BCPowerSeries:
    doc = _obj(doc, where)
    coeffs = _key(doc, "coeffs", where)
    if not isinstance(coeffs, list) or not coeffs:
        raise ParseError(f"{where}.coeffs: expected a non-empty list")
    degree = _int(doc.get("degree", len(coeffs) - 1), f"{where}.degree")
    if degree != len(coeffs) - 1:
        raise ParseError(f"{where}: degree {degree} but {len(coeffs)} coefficients")
    return BCPowerSeries.from_coeffs([decode_scalar(c, f"{where}.coeffs[{k}]") for k, c in enumerate(coeffs)])


def encode_weights(beta: WeightSequence) -> dict:
    return {"degree": beta.degree, "beta": [encode_hyperbolic(b) for b in beta.beta]}


def decode_weights(doc, where: str = "weights") -> WeightSequence:
    doc = _obj(doc, where)
    beta = _key(doc, "beta", where)
    if not isinstance(beta, list) or not beta:
        raise ParseError(f"{where}.beta: expected a non-empty list")
    degree = _int(doc.get("degree", len(beta) - 1), f"{where}.degree")
    if degree != len(beta) - 1:
        raise ParseError(f"{where}: degree {degree} but {len(beta)} weights")
    values = [decode_hyperbolic(b, f"{where}.beta[{k}]") for k, b in enumerate(beta)]
    try:
        return WeightSequence.from_hyperbolic(values)
    except ValueError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def encode_submodule(M: Submodule) -> dict:
    return {"ambient_dim": M.ambient_dim, "generators": [encode_vector(g) for g in M.generators()]}


def decode_submodule(doc, where: str = "submodule") -> Submodule:
    doc = _obj(doc, where)
    n = _int(_key(doc, "ambient_dim", where), f"{where}.ambient_dim")
    gens = _key(doc, "generators", where)
    if not isinstance(gens, list):
        raise ParseError(f"{where}.generators: expected a list")
    vecs = [decode_vector(g, f"{where}.generators[{k}]") for k, g in enumerate(gens)]
    if any(v.dim != n for v in vecs):
        raise ParseError(f"{where}: generator dimension differs from ambient_dim={n}")
    return submodule_from_generators(vecs, ambient_dim=n)
