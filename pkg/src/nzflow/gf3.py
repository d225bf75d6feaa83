"""Exact linear algebra over GF(3).

Vectors are plain tuples of residues in {0, 1, 2}. Matrices carry a label per
row so that a linear dependency can be reported in terms of where each row
came from. Elimination runs on small ``int8`` numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Optional, Sequence

import numpy as np

Vector = tuple[int, ...]


def inverse(a: int) -> int:
    """Multiplicative inverse in GF(3): every nonzero element is its own inverse."""
    a %= 3
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(3)")
    return a


def vector(values: Iterable[int]) -> Vector:
    return tuple(int(x) % 3 for x in values)


def zeros(n: int) -> Vector:
    return (0,) * n


def add(a: Sequence[int], b: Sequence[int]) -> Vector:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} != {len(b)}")
    return tuple((x + y) % 3 for x, y in zip(a, b))


def scale(c: int, a: Sequence[int]) -> Vector:
    return tuple((c * x) % 3 for x in a)


def neg(a: Sequence[int]) -> Vector:
    return tuple((-x) % 3 for x in a)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} != {len(b)}")
    return sum(x * y for x, y in zip(a, b)) % 3


def is_zero(a: Sequence[int]) -> bool:
    return not any(a)


def combine(coefficients: Sequence[int], rows: Sequence[Sequence[int]], ncols: int) -> Vector:
    """Return ``sum(coefficients[i] * rows[i])``."""
    out = [0] * ncols
    for c, row in zip(coefficients, rows):
        if c % 3:
            for j, x in enumerate(row):
                out[j] += c * x
    return tuple(x % 3 for x in out)


@dataclass(frozen=True)
class Gf3Matrix:
    """Row collection over GF(3) with one label per row."""

    rows: tuple[Vector, ...]
    ncols: int
    labels: tuple[Hashable, ...] = ()

    def __post_init__(self):
        rows = tuple(vector(r) for r in self.rows)
        for i, r in enumerate(rows):
            if len(r) != self.ncols:
                raise ValueError(f"row {i} has dimension {len(r)}, expected {self.ncols}")
        labels = tuple(self.labels) if self.labels else tuple(range(len(rows)))
        if len(labels) != len(rows):
            raise ValueError("one label per row is required")
        if len(set(labels)) != len(labels):
            raise ValueError("row labels must be unique")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "labels", labels)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int8).reshape(self.nrows, self.ncols)


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row echelon form plus the bookkeeping of how it was reached.

    ``elimination_record[i]`` holds the coefficients (one per input row) whose
    combination equals ``reduced_rows[i]``. ``null_combinations`` are the
    records of the rows that eliminated to zero; they form a basis of the
    left kernel.
    """

    rank: int
    pivot_columns: tuple[int, ...]
    free_columns: tuple[int, ...]
    reduced_rows: tuple[Vector, ...]
    elimination_record: tuple[Vector, ...]
    null_combinations: tuple[Vector, ...]
    ncols: int


def _eliminate(a: np.ndarray, ncols: int) -> tuple[np.ndarray, list[int]]:
    nrows = a.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        if a[r, c] == 2:
            a[r] = (a[r] * 2) % 3
        factors = a[:, c].copy()
        factors[r] = 0
        if factors.any():
            a = (a - np.outer(factors, a[r])) % 3
            a = a.astype(np.int8, copy=False)
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Gf3Matrix) -> EchelonForm:
    """Gauss-Jordan elimination; pivot rows are chosen lowest-index first."""
    nr, nc = m.nrows, m.ncols
    a = np.zeros((nr, nc + nr), dtype=np.int8)
    if nr:
        a[:, :nc] = m.to_array()
        a[:, nc:] = np.eye(nr, dtype=np.int8)
    a, pivots = _eliminate(a, nc)
    rank = len(pivots)
    pivot_set = set(pivots)
    return EchelonForm(
        rank=rank,
        pivot_columns=tuple(pivots),
        free_columns=tuple(c for c in range(nc) if c not in pivot_set),
        reduced_rows=tuple(tuple(int(x) for x in a[i, :nc]) for i in range(rank)),
        elimination_record=tuple(tuple(int(x) for x in a[i, nc:]) for i in range(rank)),
        null_combinations=tuple(tuple(int(x) for x in a[i, nc:]) for i in range(rank, nr)),
        ncols=nc,
    )


def rank(m: Gf3Matrix) -> int:
    return rref(m).rank


@dataclass(frozen=True)
class KernelData:
    """Right kernel of a matrix, parametrized by its free coordinates.

    ``coefficients[p]`` gives, for pivot column ``p``, the weights over
    ``free_columns`` that reproduce coordinate ``p`` of any kernel member.
    """

    basis: tuple[Vector, ...]
    free_columns: tuple[int, ...]
    pivot_columns: tuple[int, ...]
    coefficients: dict[int, Vector]
    ncols: int

    def reconstruct(self, free_values: Sequence[int]) -> Vector:
        if len(free_values) != len(self.free_columns):
            raise ValueError("one value per free column is required")
        out = [0] * self.ncols
        for c, x in zip(self.free_columns, free_values):
            out[c] = x % 3
        for p, coeffs in self.coefficients.items():
            out[p] = sum(w * x for w, x in zip(coeffs, free_values)) % 3
        return tuple(out)


def kernel_from_echelon(ef: EchelonForm) -> KernelData:
    free = ef.free_columns
    coefficients = {
        p: tuple((-row[f]) % 3 for f in free)
        for p, row in zip(ef.pivot_columns, ef.reduced_rows)
    }
    basis = []
    for j, f in enumerate(free):
        v = [0] * ef.ncols
        v[f] = 1
        for p, coeffs in coefficients.items():
            v[p] = coeffs[j]
        basis.append(tuple(v))
    return KernelData(tuple(basis), free, ef.pivot_columns, coefficients, ef.ncols)


def kernel_basis(m: Gf3Matrix) -> KernelData:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    return kernel_from_echelon(rref(m))


def dependency_combination(m: Gf3Matrix) -> Optional[dict[Hashable, int]]:
    """Nonzero coefficients ``lam`` with ``sum(lam[label] * row) == 0``, or None.

    None is returned exactly when the rows are linearly independent.
    """
    ef = rref(m)
    if not ef.null_combinations:
        return None
    lam = ef.null_combinations[0]
    assert any(lam), "elimination record rows are never zero"
    assert is_zero(combine(lam, m.rows, m.ncols)), "dependency does not cancel"
    return dict(zip(m.labels, lam))
