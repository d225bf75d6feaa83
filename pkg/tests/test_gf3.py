import itertools

import pytest
from hypothesis import given, settings, strategies as st

from nzflow import gf3
from nzflow.gf3 import Gf3Matrix, dependency_combination, kernel_basis, rref


def row_space(rows, ncols):
    """All combinations of the rows; |row space| = 3^rank."""
    return {gf3.combine(c, rows, ncols) for c in itertools.product(range(3), repeat=len(rows))}


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    ncols = draw(st.integers(0, max_cols))
    nrows = draw(st.integers(0, max_rows))
    rows = [tuple(draw(st.lists(st.integers(0, 2), min_size=ncols, max_size=ncols))) for _ in range(nrows)]
    return Gf3Matrix(tuple(rows), ncols)


def test_inverse_and_reduction():
    assert gf3.inverse(1) == 1 and gf3.inverse(2) == 2
    assert all((a * gf3.inverse(a)) % 3 == 1 for a in (1, 2, 4, -1))
    with pytest.raises(ZeroDivisionError):
        gf3.inverse(3)
    assert gf3.vector([3, -1, 5]) == (0, 2, 2)


def test_rref_identity():
    ef = rref(Gf3Matrix(((1, 0), (0, 1)), 2))
    assert ef.rank == 2 and ef.free_columns == ()


def test_rref_scalar_multiple_rows():
    # 2 * (1, 2) = (2, 4) = (2, 1) mod 3
    ef = rref(Gf3Matrix(((1, 2), (2, 1)), 2))
    assert ef.rank == 1
    assert ef.pivot_columns == (0,) and ef.free_columns == (1,)


def test_rref_empty_matrix():
    ef = rref(Gf3Matrix((), 5))
    assert ef.rank == 0 and ef.free_columns == (0, 1, 2, 3, 4)


def test_kernel_single_constraint():
    kd = kernel_basis(Gf3Matrix(((1, 2),), 2))
    assert kd.basis == ((1, 1),)


def test_kernel_full_rank_and_zero_matrix():
    assert kernel_basis(Gf3Matrix(((1, 1), (0, 2)), 2)).basis == ()
    kd = kernel_basis(Gf3Matrix(((0, 0, 0),), 3))
    assert len(kd.basis) == 3


def test_dependency_absent_when_independent():
    assert dependency_combination(Gf3Matrix(((1, 0), (0, 1)), 2)) is None


def test_dependency_of_multiple_rows():
    # (1,2) + (2,1) = (3,3) = 0; note 2*(1,2) + (2,1) = (1,2) does not cancel
    lam = dependency_combination(Gf3Matrix(((1, 2), (2, 1)), 2))
    assert lam is not None
    assert (lam[0], lam[1]) in {(1, 1), (2, 2)}


def test_dependency_of_equal_rows():
    lam = dependency_combination(Gf3Matrix(((1, 1), (1, 1)), 2, ("a", "b")))
    assert (lam["a"], lam["b"]) in {(1, 2), (2, 1)}


def test_matrix_validation():
    with pytest.raises(ValueError):
        Gf3Matrix(((1, 0), (1,)), 2)
    with pytest.raises(ValueError):
        Gf3Matrix(((1, 0), (0, 1)), 2, ("x", "x"))


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_rank_matches_row_space_size(m):
    ef = rref(m)
    assert 3 ** ef.rank == len(row_space(m.rows, m.ncols))
    assert ef.rank + len(ef.free_columns) == m.ncols
    assert set(ef.pivot_columns).isdisjoint(ef.free_columns)


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_echelon_shape_and_record(m):
    ef = rref(m)
    for row, p, rec in zip(ef.reduced_rows, ef.pivot_columns, ef.elimination_record):
        assert row[p] == 1
        assert all(row[q] == 0 for q in ef.pivot_columns if q != p)
        assert gf3.combine(rec, m.rows, m.ncols) == row
    assert row_space(ef.reduced_rows, m.ncols) == row_space(m.rows, m.ncols)


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_kernel_properties(m):
    kd = kernel_basis(m)
    assert len(kd.basis) == m.ncols - rref(m).rank
    for v in kd.basis:
        assert all(gf3.dot(r, v) == 0 for r in m.rows)
    assert len(row_space(kd.basis, m.ncols)) == 3 ** len(kd.basis)
    # every kernel member is determined by its free coordinates
    brute = {
        x for x in itertools.product(range(3), repeat=m.ncols) if all(gf3.dot(r, x) == 0 for r in m.rows)
    }
    assert brute == row_space(kd.basis, m.ncols)
    for x in brute:
        assert kd.reconstruct([x[f] for f in kd.free_columns]) == x


@given(matrices())
@settings(max_examples=200, deadline=None)
def test_dependency_iff_rank_deficient(m):
    lam = dependency_combination(m)
    assert (lam is None) == (rref(m).rank == m.nrows)
    if lam is not None:
        coeffs = [lam[label] for label in m.labels]
        assert any(coeffs)
        assert gf3.is_zero(gf3.combine(coeffs, m.rows, m.ncols))
