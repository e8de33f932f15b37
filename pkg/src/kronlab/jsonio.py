"""JSON interchange for matrices, tensors, maps, and forms.

Scalars are backend-tagged at the call site and encoded canonically:
rationals as ``"p/q"`` strings, Gaussian rationals as ``"p/q+r/si"``
strings, complex floats as ``[re, im]`` pairs.  Exact-backend encodings are
byte-deterministic, so emitted documents work as goldens.
"""

from __future__ import annotations

from typing import Sequence

from .index_space import Shape
from .inner_product import ConjugateBilinearForm
from .matrices import DenseMatrix
from .multilinear import MultilinearMap
from .scalars import Backend
from .tensor import NuTable, Tensor, TensorModel, Verdict


def encode_scalar(backend: Backend, v):
    return backend.format(v)


def decode_scalar(backend: Backend, obj):
    return backend.parse(obj)


def encode_vector(backend: Backend, vec: Sequence) -> list:
    return [backend.format(v) for v in vec]


def decode_vector(backend: Backend, obj) -> list:
    if not isinstance(obj, list):
        raise ValueError("expected a JSON array of scalars")
    return [backend.parse(v) for v in obj]


def matrix_to_json(backend: Backend, m: DenseMatrix) -> dict:
    return {
        "rows": m.nrows,
        "cols": m.ncols,
        "entries": [encode_vector(backend, m.row(i)) for i in range(1, m.nrows + 1)],
    }


def matrix_from_json(backend: Backend, d: dict) -> DenseMatrix:
    try:
        nrows, ncols, entries = d["rows"], d["cols"], d["entries"]
    except (KeyError, TypeError):
        raise ValueError("matrix JSON needs 'rows', 'cols' and 'entries'") from None
    if len(entries) != nrows or any(len(r) != ncols for r in entries):
        raise ValueError(f"entries do not form a {nrows}x{ncols} matrix")
    return DenseMatrix.from_rows([decode_vector(backend, r) for r in entries])


def tensor_to_json(backend: Backend, t: Tensor) -> dict:
    return {
        "shape": list(t.model.shape.dims),
        "coeffs": encode_vector(backend, t.coeffs),
    }


def tensor_from_json(backend: Backend, d: dict) -> Tensor:
    try:
        dims, coeffs = d["shape"], d["coeffs"]
    except (KeyError, TypeError):
        raise ValueError("tensor JSON needs 'shape' and 'coeffs'") from None
    model = TensorModel(Shape(dims))
    return Tensor(model, tuple(decode_vector(backend, coeffs)))


def map_to_json(backend: Backend, f: MultilinearMap) -> dict:
    return {
        "shape": list(f.shape.dims),
        "targetDim": f.target_dim,
        "values": [encode_vector(backend, v) for v in f.values],
    }


def map_from_json(backend: Backend, d: dict) -> MultilinearMap:
    try:
        dims, target_dim, values = d["shape"], d["targetDim"], d["values"]
    except (KeyError, TypeError):
        raise ValueError("map JSON needs 'shape', 'targetDim' and 'values'") from None
    return MultilinearMap(Shape(dims), int(target_dim),
                          tuple(tuple(decode_vector(backend, v)) for v in values))


def nutable_to_json(backend: Backend, nu: NuTable) -> dict:
    return {
        "shape": list(nu.shape.dims),
        "ambientDim": nu.ambient_dim,
        "values": [encode_vector(backend, r) for r in nu.rows],
    }


def nutable_from_json(backend: Backend, d: dict) -> NuTable:
    try:
        dims, ambient, values = d["shape"], d["ambientDim"], d["values"]
    except (KeyError, TypeError):
        raise ValueError("table JSON needs 'shape', 'ambientDim' and 'values'") from None
    rows = tuple(tuple(decode_vector(backend, r)) for r in values)
    nu = NuTable(Shape(dims), rows)
    if nu.ambient_dim != int(ambient):
        raise ValueError(f"stated ambientDim {ambient} does not match "
                         f"rows of length {nu.ambient_dim}")
    return nu


def form_to_json(backend: Backend, phi: ConjugateBilinearForm) -> dict:
    return {
        "leftDim": phi.left_dim,
        "rightDim": phi.right_dim,
        "gram": [encode_vector(backend, r) for r in phi.gram],
    }


def form_from_json(backend: Backend, d: dict) -> ConjugateBilinearForm:
    try:
        left, right, gram = d["leftDim"], d["rightDim"], d["gram"]
    except (KeyError, TypeError):
        raise ValueError("form JSON needs 'leftDim', 'rightDim' and 'gram'") from None
    return ConjugateBilinearForm(int(left), int(right),
                                 tuple(tuple(decode_vector(backend, r)) for r in gram))


def verdict_to_json(backend: Backend, v: Verdict) -> dict:
    return {
        "isTensorProduct": v.is_tensor_product,
        "failedCriterion": v.failed_criterion,
        "witness": None if v.witness is None else encode_vector(backend, v.witness),
    }
