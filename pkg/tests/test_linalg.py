"""Exact dense linear algebra: RREF, kernels, images, subspace lattice."""

import pytest
from hypothesis import given, settings, strategies as st

from nkoszul.errors import DimensionMismatch
from nkoszul.fields import GF, QQ
from nkoszul.linalg import (LinearMap, Matrix, Subspace, homology_dim, image,
                            kernel, rank, rref, subspace_intersect,
                            subspace_sum)


def test_rref_frozen_rational():
    mat = Matrix.from_rows(QQ, [[2, 4, 6], [1, 2, 4], [0, 0, 1]])
    red, pivots = rref(mat)
    assert [list(r) for r in red.rows] == [
        [1, 2, 0], [0, 0, 1]]
    assert list(pivots) == [0, 2]


def test_rref_frozen_gf2():
    # over GF(2) the two equal rows collapse to one
    red, pivots = rref(Matrix.from_rows(GF(2), [[1, 1], [1, 1]]))
    assert [list(r) for r in red.rows] == [[1, 1]]
    assert list(pivots) == [0]


def test_rref_fractions_stay_exact():
    mat = Matrix.from_rows(QQ, [[QQ.coerce("1/3"), 1], [1, 3]])
    red, pivots = rref(mat)
    assert [list(r) for r in red.rows] == [[1, 3]]
    assert list(pivots) == [0]


def test_kernel_image_frozen():
    f = LinearMap.from_rows(QQ, [[1, 0, 1], [0, 1, 1]])
    ker = kernel(f)
    assert ker.dim == 1
    assert ker.contains_vector([1, 1, -1])
    img = image(f)
    assert img.dim == 2


def test_matrix_multiply_and_apply():
    a = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
    b = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    prod = a.mul(b)
    assert [list(r) for r in prod.rows] == [[2, 1], [4, 3]]
    assert a.apply([1, 1]) == [QQ.coerce(3), QQ.coerce(7)]


def test_subspace_lattice_frozen():
    U = Subspace.from_vectors(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    V = Subspace.from_vectors(QQ, 3, [[0, 1, 0], [0, 0, 1]])
    assert subspace_intersect(U, V).dim == 1
    assert subspace_sum(U, V).dim == 3
    assert subspace_intersect(U, V).contains_vector([0, 1, 0])


def test_subspace_equality_is_canonical():
    U = Subspace.from_vectors(QQ, 2, [[1, 1], [1, -1]])
    V = Subspace.from_vectors(QQ, 2, [[1, 0], [0, 1]])
    assert U == V
    assert hash(U) == hash(V)


def test_dimension_validation():
    with pytest.raises(DimensionMismatch):
        Matrix.from_rows(QQ, [[1, 2], [1]])
    a = Matrix.from_rows(QQ, [[1, 2]])
    b = Matrix.from_rows(QQ, [[1, 2]])
    with pytest.raises(DimensionMismatch):
        a.mul(b)


def test_homology_dim_toy_complex():
    # Q -(d_in)-> Q^2 -(sum)-> Q; middle homology depends on d_in
    d_out = LinearMap.from_rows(QQ, [[1, 1]])
    d_in = LinearMap.from_rows(QQ, [[0], [0]])
    assert homology_dim(d_in, d_out) == 1
    d_in2 = LinearMap.from_rows(QQ, [[1], [-1]])
    assert homology_dim(d_in2, d_out) == 0


small = st.integers(min_value=-6, max_value=6)


@st.composite
def qq_matrix(draw, max_side=5):
    n = draw(st.integers(min_value=1, max_value=max_side))
    m = draw(st.integers(min_value=1, max_value=max_side))
    rows = draw(st.lists(
        st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n))
    return Matrix.from_rows(QQ, rows)


@given(qq_matrix())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(mat):
    f = LinearMap(mat)
    assert kernel(f).dim + rank(mat) == f.domain_dim


@given(qq_matrix(max_side=4), qq_matrix(max_side=4))
@settings(max_examples=40, deadline=None)
def test_grassmann_identity(a, b):
    amb = max(a.ncols, b.ncols)
    U = Subspace.from_vectors(QQ, amb, [list(r) + [0] * (amb - a.ncols)
                                        for r in a.rows])
    V = Subspace.from_vectors(QQ, amb, [list(r) + [0] * (amb - b.ncols)
                                        for r in b.rows])
    both = subspace_intersect(U, V)
    total = subspace_sum(U, V)
    assert U.dim + V.dim == both.dim + total.dim


@given(qq_matrix())
@settings(max_examples=40, deadline=None)
def test_rref_is_idempotent(mat):
    red, pivots = rref(mat)
    again, pivots2 = rref(red)
    assert [list(r) for r in red.rows] == [list(r) for r in again.rows]
    assert list(pivots) == list(pivots2)


@given(qq_matrix())
@settings(max_examples=40, deadline=None)
def test_kernel_vectors_map_to_zero(mat):
    f = LinearMap(mat)
    ker = kernel(f)
    zero = [QQ.zero] * f.codomain_dim
    for row in ker.basis.rows:
        assert f.apply(list(row)) == zero
