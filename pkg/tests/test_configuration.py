import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricdual.configuration import (
    affine_dim,
    affine_relation_kernel,
    dedup,
    normalize_lattice,
    parse_configuration,
    pyramid_decompose,
    reduce_configuration,
    regularize,
    subconfiguration,
)
from toricdual.intlinalg import column_lattices_equal, imat, rational_rank

SEGRE2 = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1]]


def test_parse_flags():
    c = parse_configuration(SEGRE2)
    assert c.regular  # rows 1+2 sum to the all-ones vector
    assert c.lattice_normalized
    # e1, e2 lie on the hyperplane x + y = 1, so the identity is regular
    c2 = parse_configuration([[1, 0], [0, 1]])
    assert c2.regular
    assert c2.lattice_normalized
    c3 = parse_configuration([[2, 4]])
    assert not c3.lattice_normalized


def test_parse_rejects_empty():
    with pytest.raises(ValueError):
        parse_configuration([])


def test_missing_points_example_spans_its_lattice():
    c = parse_configuration(
        [
            [1, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 0, 0, 1, 1],
            [2, 0, 0, 2, 0, 1],
        ]
    )
    assert c.lattice_normalized
    c2, back = normalize_lattice(c)
    assert c2 is c
    assert affine_dim(c) == 3


def test_regularize_prepends_ones():
    c = parse_configuration([[0, 1, 2]])
    r = regularize(c)
    assert r.weights.tolist() == [[1, 1, 1], [0, 1, 2]]
    assert r.regular


def test_regularize_identity_on_regular():
    c = parse_configuration(SEGRE2)
    assert regularize(c) is c


def test_regularize_preserves_affine_relations():
    c = parse_configuration([[0, 1, 2, 3]])
    before = affine_relation_kernel(c)
    after = affine_relation_kernel(regularize(c))
    assert column_lattices_equal(before, after)
    assert before.shape[1] == 2


def test_normalize_divides_content():
    c = parse_configuration([[2, 4, 6]])
    c2, back = normalize_lattice(c)
    assert c2.weights.tolist() == [[1, 2, 3]]
    assert np.array_equal(c.weights, back @ c2.weights)
    assert c2.lattice_normalized


def test_normalize_identity_transform_when_normalized():
    c = parse_configuration([[1, 0], [0, 1]])
    c2, back = normalize_lattice(c)
    assert c2 is c
    assert back.tolist() == [[1, 0], [0, 1]]


def test_normalize_preserves_relations():
    c = parse_configuration([[2, 4, 6], [0, 2, 4]])
    c2, _ = normalize_lattice(c)
    assert column_lattices_equal(affine_relation_kernel(c), affine_relation_kernel(c2))


def test_normalize_rank_zero_errors():
    with pytest.raises(ValueError):
        normalize_lattice(parse_configuration([[0, 0]]))


def test_dedup_counts():
    c = parse_configuration([[1, 1]])
    rep = dedup(c)
    assert rep.distinct.npoints == 1
    assert rep.multiplicity == (2,)
    assert rep.repeat_codim == 1

    c = parse_configuration([[1, 2, 3]])
    assert dedup(c).repeat_codim == 0

    c = parse_configuration([[5, 5, 7, 7, 7]])
    rep = dedup(c)
    assert rep.multiplicity == (2, 3)
    assert rep.repeat_codim == 3
    assert rep.index_map == (0, 0, 1, 1, 1)


def test_affine_dim():
    assert affine_dim(parse_configuration([[3]])) == 0
    # rank of the translated matrix: 4 distinct directions in the prism
    segre3 = parse_configuration(
        [
            [1, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 1],
            [0, 0, 0, 1, 1, 1],
        ]
    )
    assert affine_dim(segre3) == 3
    assert affine_dim(parse_configuration(SEGRE2)) == 2


def test_affine_dim_is_rank_of_regularized_minus_one():
    c = parse_configuration([[0, 1, 2, 5], [0, 0, 0, 1]])
    assert affine_dim(c) == rational_rank(regularize(c).weights) - 1


def test_pyramid_decompose_cone_over_conic():
    c = parse_configuration([[1, 1, 1, 1], [0, 1, 2, 0], [0, 0, 0, 1]])
    rep = pyramid_decompose(c)
    assert rep.apex_indices == (3,)
    assert rep.core_indices == (0, 1, 2)
    assert rep.splitting_valid
    assert rep.join_shape == (0, 1, 3)
    k = affine_relation_kernel(c)
    assert k.shape == (4, 1)


def test_pyramid_decompose_non_pyramidal():
    rep = pyramid_decompose(parse_configuration(SEGRE2))
    assert rep.apex_indices == ()
    assert rep.splitting_valid


def test_pyramid_decompose_identity_all_apex():
    rep = pyramid_decompose(parse_configuration([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert rep.apex_indices == (0, 1, 2)
    assert rep.core_indices == ()
    assert rep.splitting_valid


def test_pyramid_decompose_rejects_repeats():
    with pytest.raises(ValueError):
        pyramid_decompose(parse_configuration([[1, 1]]))


def test_pyramid_splitting_fails_off_the_spanned_lattice():
    # two independent points whose lattice has index 2 in the ambient plane:
    # no complement of the apex span can contain the other column
    c = parse_configuration([[1, 1], [0, 2]])
    rep = pyramid_decompose(c)
    assert rep.apex_indices == (0, 1)
    assert not rep.splitting_valid
    # after normalization the splitting exists
    rep2 = pyramid_decompose(reduce_configuration(c))
    assert rep2.splitting_valid


def test_subconfiguration():
    c = parse_configuration(SEGRE2)
    sub = subconfiguration(c, [0, 2])
    assert sub.weights.tolist() == [[1, 1], [0, 0], [0, 1]]
    with pytest.raises(ValueError):
        subconfiguration(c, [])
    with pytest.raises(ValueError):
        subconfiguration(c, [7])


conf_matrices = st.integers(1, 3).flatmap(
    lambda d: st.integers(1, 6).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-3, 3), min_size=n, max_size=n),
            min_size=d,
            max_size=d,
        )
    )
)


@settings(max_examples=100, deadline=None)
@given(conf_matrices)
def test_reductions_preserve_relations_and_flags(rows):
    try:
        c = parse_configuration(rows)
        red = reduce_configuration(c)
    except ValueError:
        return  # rank-zero inputs cannot be normalized
    assert red.regular and red.lattice_normalized
    assert column_lattices_equal(affine_relation_kernel(c), affine_relation_kernel(red))
    assert affine_dim(c) == affine_dim(red)


@settings(max_examples=100, deadline=None)
@given(conf_matrices)
def test_dedup_then_decompose_partitions(rows):
    try:
        c = reduce_configuration(parse_configuration(rows))
    except ValueError:
        return
    rep = dedup(c)
    dec = pyramid_decompose(rep.distinct)
    assert sorted(dec.apex_indices + dec.core_indices) == list(
        range(rep.distinct.npoints)
    )
    assert dec.splitting_valid  # always true after normalization


@settings(max_examples=100, deadline=None)
@given(conf_matrices)
def test_non_pyramidal_iff_full_support_relation(rows):
    # a configuration has no apexes iff some affine relation has full support
    try:
        c = reduce_configuration(parse_configuration(rows))
    except ValueError:
        return
    rep = dedup(c)
    kernel = affine_relation_kernel(rep.distinct)
    dec = pyramid_decompose(rep.distinct)
    # generic combination of kernel columns: support = rows that are not all zero
    nonzero_rows = {
        i
        for i in range(kernel.shape[0])
        if kernel.shape[1] and any(x != 0 for x in kernel[i].tolist())
    }
    assert set(dec.core_indices) == nonzero_rows
