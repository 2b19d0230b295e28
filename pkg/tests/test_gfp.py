import itertools

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from morsebars.gfp import (
    ContainmentError,
    FieldSpec,
    Mat,
    Subspace,
    complement_in,
    kernel_basis,
    mat_rank,
    quotient_dim,
    solve,
    subspace_image,
    subspace_intersect,
    subspace_sum,
)

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF5 = FieldSpec(5)
FIELDS = [GF2, GF3, GF5]


# --- exhaustive oracle helpers (ambient dim <= 4 so p^n stays tiny) ---

def all_vectors(n, field):
    return [np.array(v, dtype=np.int64) for v in itertools.product(range(field.char), repeat=n)]


def span_set(basis_cols, n, field):
    """Every vector in the span, as a set of tuples, by brute-force combination."""
    cols = list(basis_cols.T)
    out = set()
    for coeffs in itertools.product(range(field.char), repeat=len(cols)):
        v = np.zeros(n, dtype=np.int64)
        for c, col in zip(coeffs, cols):
            v = (v + c * col) % field.char
        out.add(tuple(v.tolist()))
    return out


def subspace_as_set(s):
    return span_set(s.basis.entries, s.ambient_dim, s.field)


def mats(field, max_dim=4):
    return st.integers(0, max_dim).flatmap(
        lambda r: st.integers(0, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, field.char - 1), min_size=c, max_size=c),
                min_size=r,
                max_size=r,
            ).map(lambda rows: Mat(np.array(rows, dtype=np.int64).reshape(r, c), field))
        )
    )


def subspaces(field, ambient):
    return st.lists(
        st.lists(st.integers(0, field.char - 1), min_size=ambient, max_size=ambient),
        min_size=0,
        max_size=ambient,
    ).map(
        lambda cols: Subspace.spanned_by(
            Mat(np.array(cols, dtype=np.int64).reshape(len(cols), ambient).T, field)
        )
    )


def test_fieldspec_rejects_non_primes():
    for bad in (0, 1, 4, 6, 9, 15):
        with pytest.raises(ValueError):
            FieldSpec(bad)
    FieldSpec(2)
    FieldSpec(65521)
    with pytest.raises(ValueError):
        FieldSpec(65537)  # prime but over the table cap


def test_mat_entries_reduced_and_immutable():
    m = Mat([[5, -1], [2, 3]], GF3)
    assert m.entries.tolist() == [[2, 2], [2, 0]]
    with pytest.raises(ValueError):
        m.entries[0, 0] = 1
    with pytest.raises(AttributeError):
        m.field = GF2


def test_rank_examples():
    assert mat_rank(Mat.identity(2, GF2)) == 2
    assert mat_rank(Mat([[1, 1], [1, 1]], GF2)) == 1
    assert mat_rank(Mat.zeros(3, 4, GF5)) == 0


def test_rank_depends_on_characteristic():
    m = Mat([[1, 1], [1, -1]], GF2)
    assert mat_rank(m) == 1
    assert mat_rank(Mat([[1, 1], [1, -1]], GF3)) == 2


def test_kernel_examples():
    assert kernel_basis(Mat.identity(2, GF2)) == Subspace.zero(2, GF2)
    k = kernel_basis(Mat([[1, 1]], GF2))
    assert k.dim == 1
    assert k.basis.entries[:, 0].tolist() == [1, 1]
    assert kernel_basis(Mat.zeros(2, 2, GF2)) == Subspace.full(2, GF2)


def test_sum_examples():
    e1 = Subspace.spanned_by(Mat([[1], [0], [0]], GF2))
    e2 = Subspace.spanned_by(Mat([[0], [1], [0]], GF2))
    assert subspace_sum(e1, e2).dim == 2
    u = Subspace.spanned_by(Mat([[1, 0], [1, 1], [0, 1]], GF3))
    assert subspace_sum(u, u) == u
    mixed = Subspace.spanned_by(Mat([[1], [1], [0]], GF2))
    assert subspace_sum(e1, mixed) == Subspace.spanned_by(Mat([[1, 0], [0, 1], [0, 0]], GF2))


def test_intersect_examples():
    e12 = Subspace.spanned_by(Mat([[1, 0], [0, 1], [0, 0]], GF2))
    e23 = Subspace.spanned_by(Mat([[0, 0], [1, 0], [0, 1]], GF2))
    e2 = Subspace.spanned_by(Mat([[0], [1], [0]], GF2))
    assert subspace_intersect(e12, e23) == e2
    assert subspace_intersect(e12, e12) == e12
    e1 = Subspace.spanned_by(Mat([[1], [0], [0]], GF2))
    assert subspace_intersect(e1, e2) == Subspace.zero(3, GF2)


def test_image_examples():
    u = Subspace.spanned_by(Mat([[1], [1]], GF2))
    assert subspace_image(Mat.identity(2, GF2), u) == u
    assert subspace_image(Mat.zeros(2, 2, GF2), u) == Subspace.zero(2, GF2)
    e1 = Subspace.spanned_by(Mat([[1], [0]], GF2))
    img = subspace_image(Mat([[1, 1]], GF2), e1)
    assert img == Subspace.full(1, GF2)


def test_quotient_examples():
    u = Subspace.spanned_by(Mat([[1, 0], [0, 1], [0, 0]], GF2))
    w = Subspace.spanned_by(Mat([[1], [0], [0]], GF2))
    assert quotient_dim(u, w) == 1
    assert quotient_dim(u, u) == 0
    full = Subspace.full(3, GF2)
    w2 = Subspace.spanned_by(Mat([[1, 0], [1, 0], [0, 1]], GF2))
    assert quotient_dim(full, w2) == 1


def test_quotient_containment_violation_carries_witness():
    u = Subspace.spanned_by(Mat([[1], [0], [0]], GF2))
    w = Subspace.spanned_by(Mat([[0], [1], [0]], GF2))
    with pytest.raises(ContainmentError) as exc:
        quotient_dim(u, w)
    assert exc.value.witness.tolist() == [0, 1, 0]


def test_ambient_mismatch_raises():
    u = Subspace.zero(2, GF2)
    v = Subspace.zero(3, GF2)
    with pytest.raises(ValueError):
        subspace_sum(u, v)
    with pytest.raises(ValueError):
        subspace_intersect(u, v)
    with pytest.raises(ValueError):
        subspace_image(Mat.zeros(2, 2, GF2), v)


def test_complement_in_returns_columns_of_numerator():
    u = Subspace.full(3, GF3)
    w = Subspace.spanned_by(Mat([[1], [2], [0]], GF3))
    reps = complement_in(u, w)
    assert reps.cols == 2
    # every representative comes from u and is independent modulo w
    assert u.contains_columns(reps.entries)
    grown = subspace_sum(w, Subspace.spanned_by(reps))
    assert grown == u


def test_solve_round_trip_and_inconsistency():
    a = Mat([[1, 2], [0, 1], [1, 0]], GF5)
    x = Mat([[3], [4]], GF5)
    b = a @ x
    got = solve(a, b)
    assert (a @ got) == b
    outside = Mat([[1], [0], [0]], GF5)
    with pytest.raises(ValueError):
        solve(Mat([[1], [1], [1]], GF5), outside)


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_rank_transpose_and_nullity(field, data):
    m = data.draw(mats(field))
    assert mat_rank(m) == mat_rank(m.transpose())
    assert kernel_basis(m).dim + mat_rank(m) == m.cols


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_kernel_agrees_with_enumeration(field, data):
    m = data.draw(mats(field, max_dim=3))
    ker = kernel_basis(m)
    brute = {
        tuple(v.tolist())
        for v in all_vectors(m.cols, field)
        if not ((m.entries @ v) % field.char).any()
    }
    assert subspace_as_set(ker) == brute


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_sum_intersection_modular_law_and_enumeration(field, data):
    n = data.draw(st.integers(1, 3))
    u = data.draw(subspaces(field, n))
    v = data.draw(subspaces(field, n))
    s = subspace_sum(u, v)
    i = subspace_intersect(u, v)
    assert s.dim + i.dim == u.dim + v.dim
    su, sv = subspace_as_set(u), subspace_as_set(v)
    assert subspace_as_set(i) == su & sv
    assert subspace_as_set(s) == span_set(
        np.hstack([u.basis.entries, v.basis.entries]), n, field
    )


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_image_agrees_with_enumeration(field, data):
    n = data.draw(st.integers(1, 3))
    rows = data.draw(st.integers(0, 3))
    m = data.draw(
        st.lists(
            st.lists(st.integers(0, field.char - 1), min_size=n, max_size=n),
            min_size=rows,
            max_size=rows,
        ).map(lambda r: Mat(np.array(r, dtype=np.int64).reshape(rows, n), field))
    )
    u = data.draw(subspaces(field, n))
    img = subspace_image(m, u)
    brute = {
        tuple(((m.entries @ np.array(v, dtype=np.int64)) % field.char).tolist())
        for v in subspace_as_set(u)
    }
    assert subspace_as_set(img) == brute


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_operations_are_deterministic(field, data):
    n = data.draw(st.integers(1, 4))
    u = data.draw(subspaces(field, n))
    v = data.draw(subspaces(field, n))
    s1, s2 = subspace_sum(u, v), subspace_sum(u, v)
    assert np.array_equal(s1.basis.entries, s2.basis.entries)
    i1, i2 = subspace_intersect(u, v), subspace_intersect(u, v)
    assert np.array_equal(i1.basis.entries, i2.basis.entries)


@pytest.mark.parametrize("field", FIELDS)
@given(data=st.data())
@settings(max_examples=30, deadline=None)
def test_echelon_form_is_canonical(field, data):
    n = data.draw(st.integers(1, 4))
    u = data.draw(subspaces(field, n))
    # re-spanning from a shuffled, rescaled generating set gives the same basis
    perm = data.draw(st.permutations(list(range(u.dim))))
    scale = data.draw(st.lists(st.integers(1, field.char - 1), min_size=u.dim, max_size=u.dim))
    cols = u.basis.entries[:, list(perm)] * np.array(scale, dtype=np.int64)
    again = Subspace.spanned_by(Mat(cols % field.char, field))
    assert again == u
    pivots = again.pivot_rows
    assert list(pivots) == sorted(pivots)
