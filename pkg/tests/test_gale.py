import numpy as np
import pytest

from toricdual.configuration import parse_configuration, regularize
from toricdual.exceptions import InapplicableInput
from toricdual.families import family_alpha, family_alpha_gale, segre
from toricdual.gale import (
    coparallel_classes,
    coparallel_criterion,
    gale_dual,
    is_facial,
    is_parallel_face_complement,
    line_partition,
    line_sums_zero,
    verify_gale_dual,
)
from toricdual.intlinalg import column_lattices_equal, imat, primitive_vector

TWISTED_CUBIC = parse_configuration([[0, 1, 2, 3]])
CONIC = parse_configuration([[0, 1, 2]])


def test_gale_dual_segre2_single_column():
    b = gale_dual(segre(2))
    assert b.matrix.shape == (4, 1)
    assert primitive_vector(b.matrix[:, 0]) in [(1, -1, -1, 1)]


def test_gale_dual_family_alpha_matches_companion():
    for a in (1, 2, 3, -2):
        c = family_alpha(a)
        b = gale_dual(c)
        assert column_lattices_equal(b.matrix, family_alpha_gale(a))


def test_gale_dual_of_simplex_is_empty():
    c = parse_configuration([[1, 0], [0, 1]])
    assert gale_dual(c).matrix.shape == (2, 0)


def test_gale_rows_sum_to_zero():
    for c in (segre(3), family_alpha(2), TWISTED_CUBIC):
        b = gale_dual(c)
        total = [sum(b.row(i)[j] for i in range(b.npoints)) for j in range(b.corank)]
        assert all(x == 0 for x in total)


def test_gale_corank_is_points_minus_one_minus_dim():
    from toricdual.configuration import affine_dim

    for c in (segre(2), segre(4), family_alpha(1), TWISTED_CUBIC, CONIC):
        assert gale_dual(c).corank == c.npoints - 1 - affine_dim(c)


def test_verify_gale_dual():
    c = family_alpha(1)
    assert verify_gale_dual(c, family_alpha_gale(1))
    g = gale_dual(c).matrix
    # doubling gives an index-2 sublattice: not saturated
    assert not verify_gale_dual(c, 2 * g)
    # swapping basis columns is still a basis
    assert verify_gale_dual(c, g[:, ::-1])
    with pytest.raises(ValueError):
        verify_gale_dual(c, imat([[1, 0]]))


def test_line_partition_family_alpha():
    part = line_partition(gale_dual(family_alpha(1)))
    groups = {cls.members: cls for cls in part.classes}
    assert set(groups) == {(0, 1, 2), (3, 4), (5, 6)}
    assert all(all(x == 0 for x in cls.total) for cls in part.classes)
    assert part.zero_rows == ()


def test_line_partition_all_rows_equal():
    from toricdual.gale import GaleDual

    dual = GaleDual(matrix=imat([[2, 0], [2, 0], [2, 0]]))
    part = line_partition(dual)
    assert len(part.classes) == 1
    assert part.classes[0].total == (6, 0)


def test_line_partition_strongly_selfdual_example():
    from toricdual.gale import GaleDual

    rows = [
        [-2, 1],
        [-2, 1],
        [-2, 2],
        [-2, 0],
        [4, -2],
        [1, -1],
        [1, 0],
        [1, -1],
        [1, 0],
    ]
    part = line_partition(GaleDual(matrix=imat(rows)))
    groups = {cls.members for cls in part.classes}
    assert groups == {(0, 1, 4), (2, 5, 7), (3, 6, 8)}
    assert all(all(x == 0 for x in cls.total) for cls in part.classes)


def test_line_sums_zero_family_alpha_true():
    assert line_sums_zero(gale_dual(family_alpha(1))).value


def test_line_sums_zero_twisted_cubic_false():
    v = line_sums_zero(gale_dual(TWISTED_CUBIC))
    assert not v.value
    assert v.witness["kind"] == "violating_line_class"


def test_line_sums_zero_single_column_always_true():
    # one line only, and Gale rows always sum to zero
    assert line_sums_zero(gale_dual(CONIC)).value
    assert line_sums_zero(gale_dual(segre(2))).value


def test_line_sums_zero_rejects_pyramid():
    pyramid = parse_configuration([[1, 1, 1, 1], [0, 1, 2, 0], [0, 0, 0, 1]])
    with pytest.raises(InapplicableInput):
        line_sums_zero(gale_dual(pyramid))


def test_coparallel_classes_segre2_all_parallel():
    assert coparallel_classes(gale_dual(segre(2))) == ((0, 1, 2, 3),)


def test_coparallel_classes_family_alpha():
    assert coparallel_classes(gale_dual(family_alpha(1))) == (
        (0, 1, 2),
        (3, 4),
        (5, 6),
    )


def test_coparallel_classes_antiparallel_pair_one_class():
    from toricdual.gale import GaleDual

    dual = GaleDual(matrix=imat([[1, 2], [-1, -2]]))
    assert coparallel_classes(dual) == ((0, 1),)


def test_coparallel_classes_pyramid_singletons():
    pyramid = parse_configuration([[1, 1, 1, 1], [0, 1, 2, 0], [0, 0, 0, 1]])
    assert coparallel_classes(gale_dual(pyramid)) == ((0, 1, 2), (3,))


def test_is_facial_conventions():
    assert is_facial(CONIC, [0, 1, 2]).value  # improper face
    assert is_facial(CONIC, [0]).value  # endpoint vertex
    assert not is_facial(CONIC, [1]).value  # interior point of the segment
    assert not is_facial(CONIC, [0, 1]).value  # not closed: face containing 1 has 2
    with pytest.raises(ValueError):
        is_facial(CONIC, [])


def test_is_facial_simplex_everything():
    simplex = parse_configuration([[0, 1, 0], [0, 0, 1]])
    for subset in ([0], [1], [0, 1], [0, 2], [0, 1, 2]):
        assert is_facial(simplex, subset).value


def test_parallel_face_complement_segre2():
    c = segre(2)
    # the two columns sharing first coordinate 1; ell = (1,0,0) works
    v = is_parallel_face_complement(c, [0, 2])
    assert v.value
    assert v.witness["ell"] == ["1", "0", "0"]
    # the whole set: solvable iff the configuration is regular
    assert is_parallel_face_complement(c, [0, 1, 2, 3]).value
    assert not is_parallel_face_complement(parse_configuration([[0, 1, 2]]), [0, 1, 2]).value


def test_parallel_face_complement_needs_facial():
    # {0,2} in the conic is not even facial, and indeed no functional exists
    assert not is_parallel_face_complement(regularize(CONIC), [0, 2]).value


def test_coparallel_criterion_matches_line_sums():
    for c in (family_alpha(1), family_alpha(2), segre(2), segre(3), CONIC, TWISTED_CUBIC):
        assert coparallel_criterion(c).value == line_sums_zero(gale_dual(c)).value


def test_coparallel_criterion_rejects_pyramid_and_repeats():
    pyramid = parse_configuration([[1, 1, 1, 1], [0, 1, 2, 0], [0, 0, 0, 1]])
    with pytest.raises(InapplicableInput):
        coparallel_criterion(pyramid)
    with pytest.raises(InapplicableInput):
        coparallel_criterion(parse_configuration([[1, 1]]))
