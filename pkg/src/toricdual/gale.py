"""Gale duality and the combinatorics read off from it.

The Gale dual of a configuration of n points is an n x r integer matrix
whose columns form a saturated basis of the affine relation lattice; its
rows b_1..b_n are the dual configuration.  Self-duality of the toric variety
is decided entirely from how those rows sit on lines through the origin, and
faces of the convex hull correspond to strictly positive dependencies among
complementary rows.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .configuration import (
    Configuration,
    affine_relation_kernel,
    regularize,
)
from .exceptions import InapplicableInput
from .intlinalg import column_lattices_equal, imat, primitive_vector, rational_rank
from .ratlp import positive_dependency_certified, solve_linear
from .verdict import Verdict


@dataclass(frozen=True, eq=False)
class GaleDual:
    """n x r matrix whose columns are a saturated basis of affine relations."""

    matrix: np.ndarray

    @property
    def npoints(self) -> int:
        return self.matrix.shape[0]

    @property
    def corank(self) -> int:
        return self.matrix.shape[1]

    def row(self, i: int) -> tuple:
        return tuple(int(x) for x in self.matrix[i])

    def rows(self) -> list:
        return [self.row(i) for i in range(self.npoints)]

    def zero_rows(self) -> tuple:
        return tuple(i for i in range(self.npoints) if all(x == 0 for x in self.row(i)))


@dataclass(frozen=True)
class LineClass:
    """All dual rows lying on one line through the origin."""

    direction: tuple  # primitive, sign-normalized
    members: tuple  # row indices
    total: tuple  # exact sum of the member rows


@dataclass(frozen=True)
class LinePartition:
    classes: tuple
    zero_rows: tuple


def gale_dual(c: Configuration) -> GaleDual:
    """Compute the canonical Gale dual (deterministic Hermite-form basis)."""
    return GaleDual(matrix=affine_relation_kernel(c))


def verify_gale_dual(c: Configuration, b) -> bool:
    """Check that ``b`` is a legitimate Gale dual matrix for ``c``.

    Columns must be affine relations, be linearly independent, and span the
    full saturated relation lattice (not a finite-index sublattice); the last
    is a canonical-form comparison against the computed dual.
    """
    bm = imat(b)
    if bm.shape[0] != c.npoints:
        raise ValueError(
            f"candidate has {bm.shape[0]} rows, configuration has {c.npoints} points"
        )
    ones = np.array([[1] * c.npoints], dtype=object)
    stacked = np.vstack([ones, c.weights])
    prod = stacked @ bm
    if any(x != 0 for x in prod.ravel().tolist()):
        return False
    if rational_rank(bm) != bm.shape[1]:
        return False
    canonical = gale_dual(c).matrix
    if bm.shape[1] != canonical.shape[1]:
        return False
    return column_lattices_equal(bm, canonical)


def line_partition(b: GaleDual) -> LinePartition:
    """Group the nonzero dual rows by the line through the origin they span."""
    classes = {}
    zero = []
    for i in range(b.npoints):
        row = b.row(i)
        if all(x == 0 for x in row):
            zero.append(i)
            continue
        key = primitive_vector(row)
        classes.setdefault(key, []).append(i)
    out = []
    for key in sorted(classes, key=lambda k: (classes[k][0],)):
        members = classes[key]
        total = tuple(
            sum(b.row(i)[j] for i in members) for j in range(b.corank)
        )
        out.append(LineClass(direction=key, members=tuple(members), total=total))
    return LinePartition(classes=tuple(out), zero_rows=tuple(zero))


def line_sums_zero(b: GaleDual) -> Verdict:
    """Self-duality test for non-pyramidal configurations.

    True iff every line class of dual rows sums to zero.  A zero row means
    the configuration is pyramidal and the criterion does not apply.
    """
    part = line_partition(b)
    if part.zero_rows:
        raise InapplicableInput(
            "pyramidal input (zero Gale rows at "
            f"{list(part.zero_rows)}): the line-sum self-duality criterion "
            "requires a non-pyramidal configuration"
        )
    for cls in part.classes:
        if any(x != 0 for x in cls.total):
            return Verdict(
                value=False,
                criterion="gale-line-sums",
                witness={
                    "kind": "violating_line_class",
                    "direction": list(cls.direction),
                    "members": list(cls.members),
                    "sum": list(cls.total),
                },
            )
    return Verdict(
        value=True,
        criterion="gale-line-sums",
        witness={
            "kind": "line_classes",
            "classes": [
                {"direction": list(c.direction), "members": list(c.members)}
                for c in part.classes
            ],
        },
    )


def coparallel_classes(b: GaleDual) -> tuple:
    """Partition of the point indices into coparallelism classes.

    Two points are coparallel iff their dual rows are parallel.  A zero row
    (pyramid apex) sits in a singleton class; downstream self-duality
    predicates refuse such input rather than extend the criterion.
    """
    part = line_partition(b)
    groups = [tuple(cls.members) for cls in part.classes]
    groups.extend((i,) for i in part.zero_rows)
    return tuple(sorted(groups, key=lambda g: g[0]))


def is_facial(c: Configuration, subset) -> Verdict:
    """Is ``subset`` exactly the set of points on some face of the hull?

    Decided on the Gale side: the complement must carry a strictly positive
    rational dependency among its dual rows.  The full set is the improper
    face; a configuration with no affine relations is a simplex, where every
    nonempty subset is facial.
    """
    sel = sorted(set(int(j) for j in subset))
    if not sel:
        raise ValueError("facial test expects a nonempty subset")
    if sel[0] < 0 or sel[-1] >= c.npoints:
        raise ValueError("subset index out of range")
    complement = [i for i in range(c.npoints) if i not in set(sel)]
    if not complement:
        return Verdict(
            value=True,
            criterion="gale-positive-dependency",
            witness={"kind": "improper_face"},
        )
    b = gale_dual(c)
    if b.corank == 0:
        return Verdict(
            value=True,
            criterion="gale-positive-dependency",
            witness={"kind": "simplex", "note": "no affine relations"},
        )
    rows = [b.row(i) for i in complement]
    dep, farkas = positive_dependency_certified(rows)
    if dep is not None:
        return Verdict(
            value=True,
            criterion="gale-positive-dependency",
            witness={
                "kind": "positive_dependency",
                "complement": complement,
                "coefficients": [str(x) for x in dep],
            },
        )
    return Verdict(
        value=False,
        criterion="gale-positive-dependency",
        witness={
            "kind": "no_positive_dependency",
            "complement": complement,
            "separating_certificate": [str(x) for x in farkas],
        },
    )


def is_parallel_face_complement(c: Configuration, members) -> Verdict:
    """Does a linear functional take value 0 off ``members`` and 1 on them?

    When it does, ``members`` and its complement lie in parallel hyperplanes
    and both are faces; the functional is returned as the witness.
    """
    sel = sorted(set(int(j) for j in members))
    if not sel:
        raise ValueError("expected a nonempty class")
    if sel[0] < 0 or sel[-1] >= c.npoints:
        raise ValueError("class index out of range")
    inside = set(sel)
    targets = [Fraction(1) if j in inside else Fraction(0) for j in range(c.npoints)]
    system = [list(c.weights[:, j]) for j in range(c.npoints)]
    ell = solve_linear(system, targets)
    if ell is None:
        return Verdict(
            value=False,
            criterion="parallel-face-complement",
            witness={"kind": "no_functional", "members": sel},
        )
    return Verdict(
        value=True,
        criterion="parallel-face-complement",
        witness={
            "kind": "functional",
            "members": sel,
            "ell": [str(x) for x in ell],
        },
    )


def coparallel_criterion(c: Configuration) -> Verdict:
    """Self-duality via the primal geometry: every coparallelism class must be
    a parallel face complement.

    Equivalent to :func:`line_sums_zero`; requires a repeat-free non-pyramidal
    configuration.  Works in the regular presentation so linear functionals
    capture affine conditions.
    """
    if len(set(c.columns())) != c.npoints:
        raise InapplicableInput(
            "repeated columns: the coparallelism criterion expects a "
            "repeat-free configuration"
        )
    reg = regularize(c)
    b = gale_dual(reg)
    if b.zero_rows():
        raise InapplicableInput(
            "pyramidal input (zero Gale rows at "
            f"{list(b.zero_rows())}): the coparallelism criterion requires a "
            "non-pyramidal configuration"
        )
    functionals = []
    for cls in coparallel_classes(b):
        sub = is_parallel_face_complement(reg, cls)
        if not sub.value:
            return Verdict(
                value=False,
                criterion="coparallel-face-complements",
                witness={"kind": "violating_class", "members": list(cls)},
            )
        functionals.append(
            {"members": list(cls), "ell": sub.witness["ell"]}
        )
    return Verdict(
        value=True,
        criterion="coparallel-face-complements",
        witness={"kind": "class_functionals", "classes": functionals},
    )
