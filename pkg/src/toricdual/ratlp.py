"""Exact rational linear solving and feasibility.

Everything runs on ``fractions.Fraction``; there is no floating point and no
tolerance anywhere.  Infeasibility comes with a Farkas certificate that the
caller can recheck by two inner products.
"""

from fractions import Fraction

import numpy as np


def _frac_rows(a):
    if isinstance(a, np.ndarray):
        a = a.tolist()
    return [[Fraction(x) for x in row] for row in a]


def solve_linear(a, b):
    """One rational solution ``x`` of ``a @ x = b``, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    rows = _frac_rows(a)
    rhs = [Fraction(x) for x in b]
    m = len(rows)
    n = len(rows[0]) if m else 0
    if len(rhs) != m:
        raise ValueError("right-hand side length mismatch")
    aug = [rows[i] + [rhs[i]] for i in range(m)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pr = aug[r]
        inv = 1 / pr[c]
        aug[r] = [x * inv for x in pr]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return tuple(x)


def feasible_nonneg(a, b):
    """Find ``x >= 0`` with ``a @ x = b`` by exact phase-1 simplex.

    Returns ``(x, None)`` when feasible and ``(None, y)`` otherwise, where the
    Farkas vector ``y`` satisfies ``y @ a <= 0`` componentwise and
    ``y @ b > 0`` — a self-contained proof that no such ``x`` exists.
    Bland's rule makes the pivoting finite and deterministic.
    """
    rows = _frac_rows(a)
    rhs = [Fraction(x) for x in b]
    m = len(rows)
    k = len(rows[0]) if m else 0
    if len(rhs) != m:
        raise ValueError("right-hand side length mismatch")
    if m == 0:
        return (), None
    flip = []
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
            flip.append(-1)
        else:
            flip.append(1)

    width = k + m + 1
    tab = []
    for i in range(m):
        art = [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        tab.append(rows[i] + art + [rhs[i]])
    basis = [k + i for i in range(m)]
    # reduced-cost row for the objective "minimize sum of artificials"
    obj = [Fraction(0)] * width
    for j in range(k):
        obj[j] = -sum(tab[i][j] for i in range(m))
    obj[width - 1] = -sum(rhs)

    while True:
        enter = next((j for j in range(k + m) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width - 1] / tab[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        assert best is not None, "phase-1 objective is bounded below by zero"
        row = best[1]
        piv = tab[row][enter]
        tab[row] = [x / piv for x in tab[row]]
        for i in range(m):
            if i != row and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], tab[row])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [x - f * y for x, y in zip(obj, tab[row])]
        basis[row] = enter

    total = -obj[width - 1]
    if total == 0:
        x = [Fraction(0)] * k
        for i, bv in enumerate(basis):
            if bv < k:
                x[bv] = tab[i][width - 1]
        return tuple(x), None
    y = [flip[i] * (1 - obj[k + i]) for i in range(m)]
    # recheck the certificate exactly before handing it out
    orig = _frac_rows(a)
    orig_rhs = [Fraction(v) for v in b]
    for j in range(k):
        assert sum(y[i] * orig[i][j] for i in range(m)) <= 0
    assert sum(y[i] * orig_rhs[i] for i in range(m)) > 0
    return None, tuple(y)


def positive_dependency(rows):
    """Strictly positive rational coefficients with ``sum r_i * rows[i] = 0``.

    Returns a tuple of positive Fractions, or None when no such combination
    exists.  Scaling lets us search for ``r >= 1`` instead of ``r > 0``, which
    is exact-LP territory.  Zero-length vectors are trivially dependent.
    """
    r, _ = positive_dependency_certified(rows)
    return r


def positive_dependency_certified(rows):
    """Like :func:`positive_dependency` but also returns a Farkas certificate.

    The second item (when the first is None) is a vector ``z`` with
    ``<z, rows[i]> >= 0`` for every i and strict somewhere, witnessing that no
    strictly positive dependency can exist.
    """
    vecs = [list(v) for v in rows]
    if not vecs:
        raise ValueError("positive_dependency of an empty family")
    dim = len(vecs[0])
    if any(len(v) != dim for v in vecs):
        raise ValueError("vectors of unequal length")
    kk = len(vecs)
    if dim == 0:
        return tuple(Fraction(1) for _ in range(kk)), None
    # substitute r = 1 + x, x >= 0:  A x = -A 1  with A[j][i] = rows[i][j]
    a = [[Fraction(vecs[i][j]) for i in range(kk)] for j in range(dim)]
    b = [-sum(a[j]) for j in range(dim)]
    x, farkas = feasible_nonneg(a, b)
    if x is None:
        z = [-val for val in farkas]
        return None, tuple(z)
    r = [Fraction(1) + xi for xi in x]
    for j in range(dim):
        assert sum(r[i] * vecs[i][j] for i in range(kk)) == 0
    assert all(ri > 0 for ri in r)
    return tuple(r), None
