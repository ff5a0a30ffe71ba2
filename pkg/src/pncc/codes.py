"""Evaluation codes: generator matrices, rank, encoding, row-space equality."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Sequence

import numpy as np

from . import _kernels
from .gf import GF
from .poly import (Monomial, Polynomial, affine_monomial_basis, evaluate_monomials,
                   monomial_basis)
from .sets import (CartesianSpec, ProjectivePoint, enumerate_affine_points,
                   enumerate_projective_points, point_array)


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon basis of a row space.

    ``independent`` lists the original rows that were found independent when
    rows were inserted in order; they span the same space as ``rows``.
    """

    rows: np.ndarray
    pivots: np.ndarray
    independent: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.pivots)


def row_echelon(matrix, field: GF) -> Echelon:
    """Gaussian elimination, pivoting on the first nonzero column of each new row."""
    add, mul, neg, inv = field.tables
    A = np.ascontiguousarray(np.asarray(matrix), dtype=add.dtype)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if A.shape[0] == 0 or A.shape[1] == 0:
        empty = np.zeros((0, A.shape[1]), dtype=add.dtype)
        return Echelon(empty, np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64))
    rank, basis, pivots, chosen = _kernels.echelon_insert(A, add, mul, neg, inv)
    basis = _kernels.back_substitute(basis.copy(), pivots, add, mul, neg)
    order = np.argsort(pivots, kind="stable")
    return Echelon(basis[order].astype(np.int64), pivots[order], np.sort(chosen))


def rank(matrix, field: GF) -> int:
    if isinstance(matrix, GeneratorMatrix):
        return matrix.rank
    add, mul, neg, inv = field.tables
    A = np.ascontiguousarray(np.asarray(matrix), dtype=add.dtype)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if A.shape[0] == 0 or A.shape[1] == 0:
        return 0
    # forward elimination is enough for the rank
    return int(_kernels.echelon_insert(A, add, mul, neg, inv)[0])


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """Unreduced evaluation matrix: one row per basis monomial, one column per point."""

    field: GF
    rows: np.ndarray
    monomials: tuple[Monomial, ...]
    points: np.ndarray
    degree: int
    spec: CartesianSpec | None = None

    @property
    def nrows(self) -> int:
        return self.rows.shape[0]

    @property
    def ncols(self) -> int:
        return self.rows.shape[1]

    @cached_property
    def echelon(self) -> Echelon:
        return row_echelon(self.rows, self.field)

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @cached_property
    def _transform(self) -> np.ndarray:
        # T with T @ rows[independent] == echelon.rows
        ech = self.echelon
        k = ech.rank
        sub = self.rows[ech.independent]
        aug = np.concatenate([sub, np.eye(k, dtype=np.int64)], axis=1)
        red = row_echelon(aug, self.field)
        assert red.rank == k and np.array_equal(red.rows[:, :sub.shape[1]], ech.rows)
        return red.rows[:, sub.shape[1]:]

    def polynomial_for(self, message) -> Polynomial:
        """Polynomial whose codeword is ``encode(message)``, on the independent monomials."""
        F = self.field
        message = np.asarray(message, dtype=np.int64)
        coeffs = np.zeros(self.rank, dtype=np.int64)
        for c, row in zip(message, self._transform):
            if c:
                coeffs = np.asarray(F.add(coeffs, F.mul(int(c), row)))
        monos = [self.monomials[i] for i in self.echelon.independent]
        nvars = len(self.monomials[0]) if self.monomials else 0
        return Polynomial(F, nvars, dict(zip(monos, coeffs.tolist())))


@lru_cache(maxsize=64)
def _canonical_coords(spec: CartesianSpec) -> np.ndarray:
    coords = point_array(enumerate_projective_points(spec), spec.n)
    coords.flags.writeable = False
    return coords


def generator_matrix(spec: CartesianSpec, d: int, points=None) -> GeneratorMatrix:
    """Evaluate every degree-d monomial at the points of ``spec``.

    ``points`` overrides the canonical point list with explicit coordinate
    rows (used to compare codes under a rescaling of coordinates).
    """
    if points is None:
        coords = _canonical_coords(spec)
    elif len(points) and isinstance(points[0], ProjectivePoint):
        coords = point_array(points, spec.n)
    else:
        coords = np.asarray(points, dtype=np.int64)
    monos = monomial_basis(spec.n, d)
    rows = evaluate_monomials(spec.field, monos, coords)
    return GeneratorMatrix(spec.field, rows, tuple(monos), coords, d, spec)


def affine_generator_matrix(field: GF, sets: Sequence[Sequence[int]], d: int) -> GeneratorMatrix:
    """Evaluate every monomial of degree <= d at the points of ``A_1 x ... x A_n``."""
    coords = np.array(enumerate_affine_points(sets), dtype=np.int64).reshape(-1, len(sets))
    monos = affine_monomial_basis(len(sets), d)
    rows = evaluate_monomials(field, monos, coords)
    return GeneratorMatrix(field, rows, tuple(monos), coords, d)


def weight(vector) -> int:
    return int(np.count_nonzero(np.asarray(vector)))


def encode(message, matrix: GeneratorMatrix) -> np.ndarray:
    """Combine the echelon basis rows with the message coefficients."""
    F = matrix.field
    basis = matrix.echelon.rows
    message = np.asarray(message, dtype=np.int64)
    if message.shape != (basis.shape[0],):
        raise ValueError(f"message length {message.shape} does not match rank {basis.shape[0]}")
    out = np.zeros(matrix.ncols, dtype=np.int64)
    for c, row in zip(message, basis):
        if c:
            out = np.asarray(F.add(out, F.mul(int(c), row)))
    return out


def same_row_space(a: np.ndarray, b: np.ndarray, field: GF) -> bool:
    """Mutual containment: both ranks equal the rank of the stacked matrix."""
    if a.shape[1] != b.shape[1]:
        raise ValueError("row spaces live in different ambient spaces")
    ra, rb = rank(a, field), rank(b, field)
    return ra == rb == rank(np.vstack([a, b]), field)


def code_equal(spec_a: CartesianSpec, spec_b: CartesianSpec, d: int, points_b=None) -> bool:
    """Whether ``C_A(d)`` and ``C_B(d)`` are the same subspace of ``K^m``.

    Both codes use canonical points unless ``points_b`` supplies the
    coordinates at which to evaluate ``spec_b``.
    """
    if spec_a.field != spec_b.field:
        raise ValueError("codes over different fields")
    ga = generator_matrix(spec_a, d)
    gb = generator_matrix(spec_b, d, points=points_b)
    if ga.ncols != gb.ncols:
        raise ValueError(f"length mismatch: {ga.ncols} vs {gb.ncols}")
    return same_row_space(ga.rows, gb.rows, spec_a.field)


# -- matrix files ------------------------------------------------------------

def format_matrix(matrix: GeneratorMatrix) -> str:
    """Header ``p m_ext n d nrows ncols`` then one row of encodings per line."""
    F = matrix.field
    n = matrix.spec.n if matrix.spec is not None else matrix.points.shape[1]
    lines = [f"{F.p} {F.m} {n} {matrix.degree} {matrix.nrows} {matrix.ncols}"]
    lines += [" ".join(map(str, row)) for row in matrix.rows.tolist()]
    return "\n".join(lines) + "\n"


def write_matrix(matrix: GeneratorMatrix, path) -> None:
    Path(path).write_text(format_matrix(matrix))


def read_matrix(path) -> tuple[dict, np.ndarray]:
    lines = Path(path).read_text().splitlines()
    p, m_ext, n, d, nrows, ncols = map(int, lines[0].split())
    rows = np.array([list(map(int, ln.split())) for ln in lines[1:1 + nrows]],
                    dtype=np.int64).reshape(nrows, ncols)
    return {"p": p, "m": m_ext, "n": n, "d": d, "nrows": nrows, "ncols": ncols}, rows
