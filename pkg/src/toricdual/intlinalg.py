"""Exact integer linear algebra on numpy object arrays.

Matrices are 2-d numpy arrays with ``dtype=object`` whose entries are Python
ints (arbitrary precision), so nothing here can overflow or round.  Rational
intermediates use ``fractions.Fraction``.  Every transform that claims to be
unimodular really is, and the tests check it.
"""

from fractions import Fraction
from math import gcd

import numpy as np


def imat(rows) -> np.ndarray:
    """Build an exact integer matrix from nested sequences.

    Entries must be integral; bools and floats with fractional parts are
    rejected so nothing inexact sneaks into a computation.
    """
    if isinstance(rows, np.ndarray) and rows.dtype == object and rows.ndim == 2:
        data = rows.tolist()
    else:
        data = [list(r) for r in rows]
    if not data:
        raise ValueError("empty matrix")
    ncols = len(data[0])
    out = np.empty((len(data), ncols), dtype=object)
    for i, row in enumerate(data):
        if len(row) != ncols:
            raise ValueError("ragged rows in matrix input")
        for j, e in enumerate(row):
            if isinstance(e, bool) or not isinstance(e, (int, np.integer)):
                if isinstance(e, Fraction) and e.denominator == 1:
                    e = e.numerator
                else:
                    raise ValueError(f"non-integer entry {e!r} at ({i},{j})")
            out[i, j] = int(e)
    return out


def zeros(r: int, c: int) -> np.ndarray:
    return np.zeros((r, c), dtype=object)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=object)


def _swap_rows(a, i, j):
    if i != j:
        a[[i, j]] = a[[j, i]]


def row_hermite(a: np.ndarray):
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``u @ a == h``, ``u`` unimodular and ``h`` in the
    canonical row echelon form: pivots positive, entries above each pivot
    reduced into ``[0, pivot)``, zero rows at the bottom.  The form is unique,
    so two matrices have equal row lattices iff their forms agree.
    """
    h = a.astype(object).copy()
    m, n = h.shape
    u = eye(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if h[i, c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i, c]), i))
            _swap_rows(h, r, i0)
            _swap_rows(u, r, i0)
            if h[r, c] < 0:
                h[r] = -h[r]
                u[r] = -u[r]
            done = True
            for i in range(r + 1, m):
                if h[i, c] != 0:
                    q = h[i, c] // h[r, c]
                    if q:
                        h[i] = h[i] - q * h[r]
                        u[i] = u[i] - q * u[r]
                    if h[i, c] != 0:
                        done = False
            if done:
                break
        if h[r, c] != 0:
            for i in range(r):
                q = h[i, c] // h[r, c]
                if q:
                    h[i] = h[i] - q * h[r]
                    u[i] = u[i] - q * u[r]
            r += 1
    return h, u


def hermite_normal_form(a: np.ndarray):
    """Column Hermite normal form: ``(h, u)`` with ``a @ u == h``, u unimodular.

    The rank of ``a`` is the number of nonzero columns of ``h``.
    """
    ht, ut = row_hermite(a.T)
    return ht.T.copy(), ut.T.copy()


def smith_normal_form(a: np.ndarray):
    """Smith normal form: ``(s, u, v)`` with ``u @ a @ v == s``.

    ``u`` and ``v`` are unimodular; ``s`` is diagonal with nonnegative entries
    d1 | d2 | ... (each dividing the next).
    """
    s = a.astype(object).copy()
    m, n = s.shape
    u, v = eye(m), eye(n)

    def clear_col(t):
        moved = False
        while True:
            nz = [i for i in range(t, m) if s[i, t] != 0]
            if not nz:
                return moved
            i0 = min(nz, key=lambda i: (abs(s[i, t]), i))
            _swap_rows(s, t, i0)
            _swap_rows(u, t, i0)
            done = True
            for i in range(t + 1, m):
                if s[i, t] != 0:
                    q = s[i, t] // s[t, t]
                    if q:
                        s[i] = s[i] - q * s[t]
                        u[i] = u[i] - q * u[t]
                    if s[i, t] != 0:
                        done = False
            if done:
                return moved
            moved = True

    def clear_row(t):
        moved = False
        while True:
            nz = [j for j in range(t, n) if s[t, j] != 0]
            if not nz:
                return moved
            j0 = min(nz, key=lambda j: (abs(s[t, j]), j))
            if j0 != t:
                s[:, [t, j0]] = s[:, [j0, t]]
                v[:, [t, j0]] = v[:, [j0, t]]
            done = True
            for j in range(t + 1, n):
                if s[t, j] != 0:
                    q = s[t, j] // s[t, t]
                    if q:
                        s[:, j] = s[:, j] - q * s[:, t]
                        v[:, j] = v[:, j] - q * v[:, t]
                    if s[t, j] != 0:
                        done = False
            if done:
                return moved
            moved = True

    def diagonalize_at(t):
        while True:
            clear_col(t)
            if not clear_row(t):
                if not any(s[i, t] != 0 for i in range(t + 1, m)):
                    return

    for t in range(min(m, n)):
        pivot = next(
            ((i, j) for i in range(t, m) for j in range(t, n) if s[i, j] != 0), None
        )
        if pivot is None:
            break
        _swap_rows(s, t, pivot[0])
        _swap_rows(u, t, pivot[0])
        if pivot[1] != t:
            s[:, [t, pivot[1]]] = s[:, [pivot[1], t]]
            v[:, [t, pivot[1]]] = v[:, [pivot[1], t]]
        diagonalize_at(t)
        # enforce the divisibility chain: fold any non-multiple into row t
        while True:
            bad = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if s[i, j] % s[t, t] != 0
                ),
                None,
            )
            if bad is None:
                break
            s[t] = s[t] + s[bad]
            u[t] = u[t] + u[bad]
            diagonalize_at(t)
        if s[t, t] < 0:
            s[t] = -s[t]
            u[t] = -u[t]
    return s, u, v


def invariant_factors(a: np.ndarray):
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    s, _, _ = smith_normal_form(a)
    return [s[i, i] for i in range(min(s.shape)) if s[i, i] != 0]


def det(a: np.ndarray):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m, n = a.shape
    if m != n:
        raise ValueError("determinant requires a square matrix")
    w = a.astype(object).copy()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if w[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if w[i, k] != 0), None)
            if swap is None:
                return 0
            _swap_rows(w, k, swap)
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i, j] = (w[i, j] * w[k, k] - w[i, k] * w[k, j]) // prev
            w[i, k] = 0
        prev = w[k, k]
    return sign * w[n - 1, n - 1]


def rational_rank(a: np.ndarray) -> int:
    """Rank of the matrix over the rationals, computed exactly."""
    rows = [[Fraction(int(x)) for x in row] for row in a.tolist()]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    for c in range(n):
        piv = next((i for i in range(rank, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(m):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / pr[c]
                rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        rank += 1
        if rank == m:
            break
    return rank


def integer_kernel(a: np.ndarray) -> np.ndarray:
    """Saturated basis of the integer kernel ``{v : a @ v = 0}``.

    The columns of the result span the full lattice ``ker(a) ∩ Z^n``, not a
    finite-index sublattice, and are put into a canonical Hermite form so the
    output is deterministic.
    """
    h, u = hermite_normal_form(a)
    zero_cols = [j for j in range(h.shape[1]) if not any(h[i, j] != 0 for i in range(h.shape[0]))]
    k = u[:, zero_cols]
    if k.shape[1] == 0:
        return k
    kh, _ = hermite_normal_form(k)
    keep = [j for j in range(kh.shape[1]) if any(kh[i, j] != 0 for i in range(kh.shape[0]))]
    return kh[:, keep]


def column_lattices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    """Whether two integer matrices generate the same column lattice."""
    if a.shape[0] != b.shape[0]:
        return False

    def canon(m):
        h, _ = hermite_normal_form(m)
        keep = [j for j in range(h.shape[1]) if any(h[i, j] != 0 for i in range(h.shape[0]))]
        return h[:, keep]

    ca, cb = canon(a), canon(b)
    return ca.shape == cb.shape and bool(np.array_equal(ca, cb))


def in_row_span(a: np.ndarray, v) -> bool:
    """Whether vector ``v`` (ints or Fractions) is a rational combination of rows of ``a``."""
    vec = [Fraction(x) for x in (v.tolist() if isinstance(v, np.ndarray) else list(v))]
    if len(vec) != a.shape[1]:
        raise ValueError(f"vector length {len(vec)} != matrix columns {a.shape[1]}")
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ivec = np.array([int(x * den) for x in vec], dtype=object)
    stacked = np.vstack([a, ivec.reshape(1, -1)])
    return rational_rank(stacked) == rational_rank(a)


def primitive_vector(v) -> tuple:
    """Divide out the gcd and flip the sign so the first nonzero entry is positive.

    The zero vector is returned unchanged; used as the canonical key for the
    line through the origin spanned by ``v``.
    """
    vals = [int(x) for x in (v.tolist() if isinstance(v, np.ndarray) else list(v))]
    g = 0
    for x in vals:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(vals)
    vals = [x // g for x in vals]
    lead = next(x for x in vals if x != 0)
    if lead < 0:
        vals = [-x for x in vals]
    return tuple(vals)
