"""Constructors for the standard example families and the Gale-inverse map."""

import numpy as np

from .configuration import Configuration, parse_configuration
from .gale import verify_gale_dual
from .intlinalg import imat, integer_kernel, rational_rank, row_hermite


def segre(m: int) -> Configuration:
    """The (m+1) x 2m configuration of the Segre embedding of P^1 x P^(m-1).

    Block shape (Id_m | Id_m) on top, (0...0 | 1...1) below.
    """
    if m < 2:
        raise ValueError("segre requires m >= 2")
    rows = []
    for i in range(m):
        rows.append([1 if j % m == i else 0 for j in range(2 * m)])
    rows.append([0] * m + [1] * m)
    return parse_configuration(rows)


def lawrence(m) -> Configuration:
    """The Lawrence lift (Id_n | Id_n ; 0 | M) of a d x n integer matrix."""
    mm = imat(m)
    d, n = mm.shape
    rows = []
    for i in range(n):
        rows.append([1 if j % n == i else 0 for j in range(2 * n)])
    for i in range(d):
        rows.append([0] * n + [int(x) for x in mm[i]])
    return parse_configuration(rows)


def family_alpha(alpha: int) -> Configuration:
    """A 5 x 7 one-parameter family of self-dual configurations (alpha != 0).

    Its planar Gale dual has three line classes, each summing to zero, for
    every nonzero integer alpha.
    """
    if alpha == 0:
        raise ValueError("family_alpha requires alpha != 0")
    a = alpha
    return parse_configuration(
        [
            [1, 1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 0, 0],
            [0, 0, 0, 1, 1, 0, 0],
            [0, 1, 0, a, 0, -a, 0],
            [0, 0, 1, 0, -a, 0, a],
        ]
    )


def family_alpha_gale(alpha: int) -> np.ndarray:
    """The companion 7 x 2 Gale dual matrix for :func:`family_alpha`."""
    if alpha == 0:
        raise ValueError("family_alpha requires alpha != 0")
    a = alpha
    return imat(
        [
            [2 * a, 0],
            [-a, 0],
            [-a, 0],
            [1, 1],
            [-1, -1],
            [0, 1],
            [0, -1],
        ]
    )


def config_from_gale(b) -> Configuration:
    """A configuration whose Gale dual is the given matrix.

    Rows of the result are a saturated basis of the lattice orthogonal to the
    columns of ``b`` (canonicalized by Hermite form, since the configuration
    is only determined up to affine equivalence).  Requires the rows of ``b``
    to sum to zero, its columns to be independent, and the columns to span a
    saturated lattice — exactly the properties a Gale dual matrix has.
    """
    bm = imat(b)
    n, r = bm.shape
    col_sums = [sum(int(x) for x in bm[:, j]) for j in range(r)]
    if any(s != 0 for s in col_sums):
        raise ValueError("rows of a Gale dual must sum to zero")
    if rational_rank(bm) != r:
        raise ValueError("columns of a Gale dual must be linearly independent")
    comp = integer_kernel(bm.T)  # n x (n - r), saturated
    rows = comp.T
    h, _ = row_hermite(rows)
    keep = [i for i in range(h.shape[0]) if any(x != 0 for x in h[i].tolist())]
    c = parse_configuration(h[keep, :])
    if not verify_gale_dual(c, bm):
        raise ValueError(
            "columns do not span a saturated relation lattice; "
            "no configuration has this exact matrix as a Gale dual"
        )
    return c


def family_dim(r: int, alphas) -> Configuration:
    """Self-dual configurations of dimension r+1 (any r >= 2) and codimension 2.

    Built from the planar Gale configuration
    {(a_1,0),...,(a_r,0),(0,1),(0,-1),(1,1),(-1,-1)} where the nonzero
    integers a_i sum to zero.
    """
    alphas = [int(a) for a in alphas]
    if r < 2:
        raise ValueError("family_dim requires r >= 2")
    if len(alphas) != r:
        raise ValueError(f"expected {r} alpha values")
    if any(a == 0 for a in alphas) or sum(alphas) != 0:
        raise ValueError("alphas must be nonzero and sum to zero")
    rows = [[a, 0] for a in alphas] + [[0, 1], [0, -1], [1, 1], [-1, -1]]
    return config_from_gale(rows)


def family_codim(m: int, r: int, alphas) -> Configuration:
    """Self-dual configurations of codimension m (any m >= 2) and dimension m+r-1.

    Built from the Gale configuration in Z^m consisting of a_i e_1 for each of
    the r alphas, ±e_j for j = 2..m, and ±(e_1+...+e_m).
    """
    alphas = [int(a) for a in alphas]
    if m < 2:
        raise ValueError("family_codim requires m >= 2")
    if r < 2:
        raise ValueError("family_codim requires r >= 2")
    if len(alphas) != r:
        raise ValueError(f"expected {r} alpha values")
    if any(a == 0 for a in alphas) or sum(alphas) != 0:
        raise ValueError("alphas must be nonzero and sum to zero")
    rows = [[a] + [0] * (m - 1) for a in alphas]
    for j in range(1, m):
        plus = [0] * m
        plus[j] = 1
        rows.append(plus)
        rows.append([-x for x in plus])
    rows.append([1] * m)
    rows.append([-1] * m)
    return config_from_gale(rows)
