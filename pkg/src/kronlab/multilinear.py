"""Multilinear maps given by their values on basis tuples.

A map is stored extensionally: one target vector per multi-index, in lex
order.  Evaluation is the multilinear expansion

    f(x_1, ..., x_m) = sum over g of (prod_i c_{i,g(i)}) * s_g

computed literally; a factored (axis-by-axis) evaluator is provided as an
optimization and is required by the tests to agree with the direct sum.
Vectors are plain sequences of scalars relative to an implicit ordered
basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .index_space import Shape


@dataclass(frozen=True)
class MultilinearMap:
    """Value table of a multilinear map into a coordinate space."""

    shape: Shape
    target_dim: int
    values: tuple  # one tuple of length target_dim per multi-index, lex order

    def __post_init__(self):
        if self.target_dim < 1:
            raise ValueError("target dimension must be >= 1")
        vals = tuple(tuple(v) for v in self.values)
        if len(vals) != self.shape.size:
            raise ValueError(f"need {self.shape.size} value rows, got {len(vals)}")
        if any(len(v) != self.target_dim for v in vals):
            raise ValueError("all value rows must have the target dimension")
        object.__setattr__(self, "values", vals)

    def value_at(self, g: Sequence[int]) -> tuple:
        return self.values[self.shape.offset(g)]


def from_values(shape: Shape, target_dim: int, values) -> MultilinearMap:
    """Build a map from ``{multi-index: vector}`` or a lex-ordered sequence.

    A mapping must mention every multi-index exactly once.
    """
    if isinstance(values, Mapping):
        table = []
        missing = []
        for g in shape.indices():
            key = tuple(g)
            if key in values:
                table.append(tuple(values[key]))
            else:
                missing.append(key)
        if missing:
            raise ValueError(f"missing values for indices {missing[:3]}...")
        if len(values) != shape.size:
            raise ValueError("value table mentions indices outside the shape")
        return MultilinearMap(shape, target_dim, tuple(table))
    return MultilinearMap(shape, target_dim, tuple(tuple(v) for v in values))


def _check_arguments(f: MultilinearMap, xs: Sequence[Sequence]) -> None:
    if len(xs) != f.shape.arity:
        raise ValueError(f"expected {f.shape.arity} arguments, got {len(xs)}")
    for i, (x, n) in enumerate(zip(xs, f.shape.dims)):
        if len(x) != n:
            raise ValueError(f"argument {i + 1} has length {len(x)}, expected {n}")


def evaluate(f: MultilinearMap, xs: Sequence[Sequence]) -> list:
    """Direct expansion over all multi-indices."""
    _check_arguments(f, xs)
    out = [0] * f.target_dim
    for k, combo in enumerate(itertools.product(*xs)):
        w = 1
        for c in combo:
            w = w * c
        if w == 0:
            continue
        s = f.values[k]
        for j in range(f.target_dim):
            out[j] = out[j] + w * s[j]
    return out


def evaluate_factored(f: MultilinearMap, xs: Sequence[Sequence]) -> list:
    """Axis-at-a-time contraction; equals :func:`evaluate` exactly."""
    _check_arguments(f, xs)
    rows = list(f.values)
    for coeffs in xs:
        n = len(coeffs)
        rest = len(rows) // n
        nxt = []
        for j in range(rest):
            acc = [0] * f.target_dim
            for k in range(n):
                c = coeffs[k]
                if c == 0:
                    continue
                row = rows[k * rest + j]
                acc = [a + c * v for a, v in zip(acc, row)]
            nxt.append(acc)
        rows = nxt
    return list(rows[0])


def basis_functional(shape: Shape, alpha: Sequence[int]) -> MultilinearMap:
    """The scalar-valued map that is 1 on basis tuple ``alpha``, 0 elsewhere.

    Evaluates to the coordinate product ``prod_i c_{i,alpha(i)}``.
    """
    alpha = shape.validate_index(alpha)
    k = shape.offset(alpha)
    values = [(0,)] * shape.size
    values[k] = (1,)
    return MultilinearMap(shape, 1, tuple(values))


def expand_in_basis(f: MultilinearMap) -> tuple:
    """Coefficients of ``f`` in the basis of :func:`basis_functional` maps.

    The coefficient at ``alpha`` is the value of ``f`` on basis tuple
    ``alpha``, so the table reconstructs ``f`` exactly.
    """
    return f.values


def reconstruct_from_expansion(shape: Shape, target_dim: int, table) -> MultilinearMap:
    """Inverse of :func:`expand_in_basis`."""
    return from_values(shape, target_dim, table)


def component(f: MultilinearMap, j: int) -> MultilinearMap:
    """The scalar-valued ``j``-th coordinate of ``f`` (1-based)."""
    if not 1 <= j <= f.target_dim:
        raise ValueError(f"component {j} out of range 1..{f.target_dim}")
    return MultilinearMap(f.shape, 1, tuple((v[j - 1],) for v in f.values))


def check_product_sum_interchange(rows: Sequence[Sequence]) -> bool:
    """Verify prod_i (sum_k a_ik) == sum over index tuples of prod_i a_i,g(i).

    Both sides are computed independently.
    """
    rows = [list(r) for r in rows]
    if not rows or any(not r for r in rows):
        raise ValueError("need at least one entry per row")
    lhs = 1
    for r in rows:
        acc = 0
        for v in r:
            acc = acc + v
        lhs = lhs * acc
    rhs = 0
    for combo in itertools.product(*rows):
        w = 1
        for v in combo:
            w = w * v
        rhs = rhs + w
    return lhs == rhs
