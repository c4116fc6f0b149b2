"""Lattice point configurations and their standard reductions.

A configuration is a d x n integer matrix whose columns are lattice points
(weights of a torus action); columns may repeat.  The reductions here —
regularize, normalize the lattice, merge repeated columns, split off pyramid
apexes — all preserve the lattice of affine relations among the columns,
which is the invariant every duality criterion in this package consumes.
"""

from dataclasses import dataclass, field

import numpy as np

from .intlinalg import (
    imat,
    in_row_span,
    integer_kernel,
    invariant_factors,
    rational_rank,
    smith_normal_form,
)


@dataclass(frozen=True, eq=False)
class Configuration:
    """A d x n matrix of column weights plus normalization metadata.

    ``regular`` means the columns lie on a rational affine hyperplane off the
    origin (equivalently the all-ones vector is in the row span), so affine
    relations among columns coincide with linear ones.  ``lattice_normalized``
    means the columns span the full ambient lattice Z^d.
    """

    weights: np.ndarray
    regular: bool
    lattice_normalized: bool

    @property
    def dim(self) -> int:
        return self.weights.shape[0]

    @property
    def npoints(self) -> int:
        return self.weights.shape[1]

    def column(self, j: int) -> tuple:
        return tuple(int(x) for x in self.weights[:, j])

    def columns(self) -> list:
        return [self.column(j) for j in range(self.npoints)]

    def __repr__(self):
        return (
            f"Configuration({self.dim}x{self.npoints}, regular={self.regular}, "
            f"normalized={self.lattice_normalized})"
        )


@dataclass(frozen=True)
class DedupReport:
    """Distinct columns of a configuration with their multiplicities.

    ``multiplicity[i]`` counts how often distinct column i occurs;
    ``index_map[j]`` sends original column j to its distinct index.
    ``repeat_codim`` is n - h: the codimension of the smallest projective
    subspace containing the associated toric variety.
    """

    distinct: Configuration
    multiplicity: tuple
    index_map: tuple

    @property
    def repeat_codim(self) -> int:
        return sum(self.multiplicity) - len(self.multiplicity)


@dataclass(frozen=True)
class DecompositionReport:
    """Pyramid/join structure of a configuration without repeated columns.

    Apexes are the points that belong to no affine relation (zero rows of the
    Gale dual); the core is the rest.  ``splitting_valid`` records whether the
    ambient lattice splits as (lattice spanned by the apexes, which they must
    base) ⊕ (a complement containing the core) — checked exactly through
    Smith forms.  ``join_shape`` is (repeat multiplicity count, apex count,
    core count): the variety is an iterated join of an empty factor of that
    first size, a projective subspace spanned by the apexes, and the core's
    variety.
    """

    repeat_codim: int
    apex_indices: tuple
    core_indices: tuple
    splitting_valid: bool
    join_shape: tuple


def parse_configuration(matrix) -> Configuration:
    """Validate a matrix and compute the regular / lattice-normalized flags."""
    w = imat(matrix)
    w.setflags(write=False)
    ones = [1] * w.shape[1]
    regular = in_row_span(w, ones)
    facs = invariant_factors(w)
    normalized = len(facs) == w.shape[0] and all(f == 1 for f in facs)
    return Configuration(weights=w, regular=regular, lattice_normalized=normalized)


def subconfiguration(c: Configuration, indices) -> Configuration:
    """The configuration made of the selected columns (order preserved)."""
    idx = list(indices)
    if not idx:
        raise ValueError("empty column selection")
    if any(j < 0 or j >= c.npoints for j in idx):
        raise ValueError("column index out of range")
    return parse_configuration(c.weights[:, idx])


def regularize(c: Configuration) -> Configuration:
    """Place the configuration on an affine hyperplane off the origin.

    A regular configuration is returned unchanged.  Otherwise a row of ones
    is prepended, which leaves the affine relation lattice untouched while
    turning affine relations into linear ones.
    """
    if c.regular:
        return c
    ones = np.array([[1] * c.npoints], dtype=object)
    return parse_configuration(np.vstack([ones, c.weights]))


def affine_relation_kernel(c: Configuration) -> np.ndarray:
    """Saturated basis (as columns) of the affine relations among the columns.

    Always computed as the integer kernel of the weights with a prepended
    all-ones row, so regular and non-regular inputs go through one code path.
    """
    ones = np.array([[1] * c.npoints], dtype=object)
    stacked = np.vstack([ones, c.weights])
    return integer_kernel(stacked)


def affine_dim(c: Configuration) -> int:
    """Dimension of the affine span of the columns (= dim of the toric variety)."""
    return rational_rank(regularize(c).weights) - 1


def normalize_lattice(c: Configuration):
    """Rewrite the configuration so its columns span the full ambient lattice.

    Returns ``(c2, back)`` where ``c2.lattice_normalized`` holds and ``back``
    is an integer matrix with ``c.weights == back @ c2.weights`` exactly; the
    affine relation lattice is unchanged.  Obtained from the Smith form of
    the weights: unimodular row transform, divide row i by the i-th invariant
    factor, drop zero rows.
    """
    if c.lattice_normalized:
        return c, np.eye(c.dim, dtype=object)
    s, u, _ = smith_normal_form(c.weights)
    facs = [s[i, i] for i in range(min(s.shape)) if s[i, i] != 0]
    r = len(facs)
    if r == 0:
        raise ValueError("rank-zero configuration cannot be normalized")
    um = u @ c.weights
    new_rows = []
    for i in range(r):
        row = um[i]
        assert all(x % facs[i] == 0 for x in row.tolist())
        new_rows.append([x // facs[i] for x in row.tolist()])
    c2 = parse_configuration(new_rows)
    # back transform: weights == u^-1 [diag(facs); 0] @ new == back @ new
    uinv = _unimodular_inverse(u)
    d_block = np.zeros((c.dim, r), dtype=object)
    for i in range(r):
        d_block[i, i] = facs[i]
    back = uinv @ d_block
    assert np.array_equal(c.weights, back @ c2.weights)
    return c2, back


def _unimodular_inverse(u: np.ndarray) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix via adjugate-free solve."""
    n = u.shape[0]
    s, p, q = smith_normal_form(u)
    assert all(s[i, i] in (1, -1) for i in range(n))
    d = np.zeros((n, n), dtype=object)
    for i in range(n):
        d[i, i] = s[i, i]
    inv = q @ d @ p
    assert np.array_equal(u @ inv, np.eye(n, dtype=object))
    return inv


def reduce_configuration(c: Configuration) -> Configuration:
    """Regularize then normalize: the standard presentation used by the engine."""
    c2, _ = normalize_lattice(regularize(c))
    return c2


def dedup(c: Configuration) -> DedupReport:
    """Group equal columns, keeping first-occurrence order."""
    seen = {}
    order = []
    index_map = []
    for j in range(c.npoints):
        col = c.column(j)
        if col not in seen:
            seen[col] = len(order)
            order.append(j)
        index_map.append(seen[col])
    mult = [0] * len(order)
    for t in index_map:
        mult[t] += 1
    distinct = subconfiguration(c, order)
    return DedupReport(
        distinct=distinct, multiplicity=tuple(mult), index_map=tuple(index_map)
    )


def pyramid_decompose(c: Configuration) -> DecompositionReport:
    """Split a repeat-free configuration into pyramid apexes and a core.

    Apexes are detected as the zero rows of the affine relation basis.  The
    lattice splitting is judged in the regular presentation of ``c``: the
    apex columns must be linearly independent, their span lattice saturated,
    the whole column lattice saturated, and the apex/core ranks must add.
    After the ambient lattice has been normalized these checks always pass
    (the zero-row apexes then automatically base a direct summand); on a
    non-normalized presentation they can genuinely fail and the report says
    so instead of silently renormalizing.
    """
    if len(set(c.columns())) != c.npoints:
        raise ValueError("pyramid decomposition expects no repeated columns")
    kernel = affine_relation_kernel(c)
    apex = []
    core = []
    for i in range(c.npoints):
        if kernel.shape[1] == 0 or all(x == 0 for x in kernel[i].tolist()):
            apex.append(i)
        else:
            core.append(i)
    reg = regularize(c).weights
    p = reg[:, apex]
    q = reg[:, core]
    rank_all = rational_rank(reg)
    if apex:
        rank_p = rational_rank(p)
        rank_q = rational_rank(q) if core else 0
        apex_saturated = invariant_factors(p) == [1] * len(apex)
        whole_saturated = invariant_factors(reg) == [1] * rank_all
        splitting = (
            rank_p == len(apex)
            and rank_p + rank_q == rank_all
            and apex_saturated
            and whole_saturated
        )
    else:
        splitting = True
    return DecompositionReport(
        repeat_codim=0,
        apex_indices=tuple(apex),
        core_indices=tuple(core),
        splitting_valid=splitting,
        join_shape=(0, len(apex), len(core)),
    )
