"""Shared affine-constraint solver over F_p.

Every lifting problem, chain-homotopy search, and mediating-map question
in this package is a finite linear system.  The engine here accepts
equations of the shape

    sum_k  L_k @ X_{name_k} @ R_k  =  C

over a declared set of unknown matrices with fixed shapes, flattens the
unknowns into one vector (row-major, so vec(L @ X @ R) = kron(L, R^T) vec(X)),
and hands the result to Gaussian elimination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import DimensionError, Field, Matrix, kernel_basis, solve


@dataclass(frozen=True)
class UnknownSpec:
    name: str
    rows: int
    cols: int


@dataclass(frozen=True)
class Term:
    left: Matrix
    name: str
    right: Matrix


@dataclass(frozen=True)
class Equation:
    terms: tuple[Term, ...]
    rhs: Matrix


@dataclass(frozen=True)
class Solution:
    assign: dict[str, Matrix]
    nullspace: list[dict[str, Matrix]]


def _offsets(unknowns: list[UnknownSpec]) -> tuple[dict[str, tuple[int, int, int]], int]:
    table: dict[str, tuple[int, int, int]] = {}
    total = 0
    for u in unknowns:
        if u.name in table:
            raise ValueError(f"duplicate unknown {u.name}")
        table[u.name] = (total, u.rows, u.cols)
        total += u.rows * u.cols
    return table, total


def solve_constraints(
    field: Field,
    unknowns: list[UnknownSpec],
    equations: list[Equation],
    want_nullspace: bool = False,
) -> Solution | None:
    """Any assignment satisfying all equations, or None if inconsistent."""
    table, nvars = _offsets(unknowns)
    blocks: list[np.ndarray] = []
    rhs_parts: list[np.ndarray] = []
    p = field.p
    for eq in equations:
        out_r, out_c = eq.rhs.shape
        width = out_r * out_c
        row = np.zeros((width, nvars), dtype=np.int64)
        for t in eq.terms:
            if t.name not in table:
                raise ValueError(f"unknown name {t.name}")
            off, xr, xc = table[t.name]
            if t.left.cols != xr or t.right.rows != xc:
                raise DimensionError(
                    f"term shapes {t.left.shape} @ ({xr},{xc}) @ {t.right.shape}"
                )
            if (t.left.rows, t.right.cols) != (out_r, out_c):
                raise DimensionError("term output shape differs from rhs")
            if width == 0 or xr * xc == 0:
                continue
            row[:, off : off + xr * xc] = (
                row[:, off : off + xr * xc] + np.kron(t.left.a, t.right.a.T)
            ) % p
        blocks.append(row)
        rhs_parts.append(eq.rhs.a.reshape(width, 1) % p)
    if blocks:
        big = Matrix.make(field, np.vstack(blocks))
        vec = Matrix.make(field, np.vstack(rhs_parts))
    else:
        big = Matrix.zeros(field, 0, nvars)
        vec = Matrix.zeros(field, 0, 1)
    part = solve(big, vec)
    if part is None:
        return None

    def unpack(v: np.ndarray) -> dict[str, Matrix]:
        out = {}
        for u in unknowns:
            off, xr, xc = table[u.name]
            out[u.name] = Matrix.make(field, v[off : off + xr * xc].reshape(xr, xc))
        return out

    null: list[dict[str, Matrix]] = []
    if want_nullspace:
        kb = kernel_basis(big)
        null = [unpack(kb.a[:, j]) for j in range(kb.cols)]
    return Solution(unpack(part.a.reshape(nvars)), null)
