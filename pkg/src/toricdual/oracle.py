"""Independent brute-force referees for every criterion in the package.

Nothing here shares code paths with the fast predicates it checks: circuits
come from subset enumeration, faces from a separating-functional LP, strong
self-duality from exact evaluation of the defining binomials on a grid large
enough to certify a polynomial identity.  These run at desk scale only and
guard themselves with explicit size limits.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .configuration import (
    Configuration,
    affine_dim,
    affine_relation_kernel,
    dedup,
    parse_configuration,
    reduce_configuration,
    regularize,
)
from .exceptions import GuardExceeded, InapplicableInput
from .gale import GaleDual, gale_dual
from .intlinalg import imat, in_row_span, integer_kernel, primitive_vector, rational_rank
from .ratlp import feasible_nonneg

ENUMERATION_GUARD = 12


@dataclass(frozen=True)
class Circuit:
    """A minimal affine dependency: primitive relation, zero off its support."""

    support: tuple
    relation: tuple


@dataclass(frozen=True)
class Flat:
    """A span-closed subset of Gale rows, with the subset that generated it."""

    generators: tuple
    closure: tuple


def _check_guard(n: int, what: str):
    if n > ENUMERATION_GUARD:
        raise GuardExceeded(
            f"{what} enumerates subsets of {n} points; the guard is "
            f"{ENUMERATION_GUARD}"
        )


def enumerate_circuits(c: Configuration) -> list:
    """All circuits, by subset enumeration plus a kernel-rank-1 test.

    A subset supports a circuit iff its affine relation space has rank one
    and the generator is nonzero on the whole subset.
    """
    _check_guard(c.npoints, "circuit enumeration")
    reg = regularize(c)
    max_size = affine_dim(c) + 2
    out = []
    for size in range(2, max_size + 1):
        for sub in itertools.combinations(range(c.npoints), size):
            k = integer_kernel(reg.weights[:, sub])
            if k.shape[1] != 1:
                continue
            gen = [int(x) for x in k[:, 0]]
            if any(x == 0 for x in gen):
                continue
            rel = [0] * c.npoints
            vec = primitive_vector(gen)
            for pos, j in enumerate(sub):
                rel[j] = vec[pos]
            out.append(Circuit(support=tuple(sub), relation=tuple(rel)))
    return out


def coparallel_via_circuits(c: Configuration) -> tuple:
    """Partition of points by identical circuit membership.

    Points in no circuit at all (pyramid apexes) form singleton classes.
    """
    circuits = enumerate_circuits(c)
    membership = {i: frozenset() for i in range(c.npoints)}
    for idx, circ in enumerate(circuits):
        for i in circ.support:
            membership[i] = membership[i] | {idx}
    groups = {}
    for i in range(c.npoints):
        groups.setdefault(membership[i], []).append(i)
    classes = []
    for key, members in groups.items():
        if key == frozenset():
            classes.extend((i,) for i in members)
        else:
            classes.append(tuple(members))
    return tuple(sorted(classes, key=lambda g: g[0]))


def enumerate_flats(b: GaleDual) -> list:
    """All distinct flats of the dual row configuration.

    The flat of a subset J is every row index whose row lies in the span of
    the rows indexed by J; J = {} gives the zero rows.
    """
    _check_guard(b.npoints, "flat enumeration")
    rows = b.matrix
    seen = {}
    for size in range(0, b.npoints + 1):
        for sub in itertools.combinations(range(b.npoints), size):
            if size == 0:
                closure = tuple(b.zero_rows())
            else:
                span = rows[list(sub), :]
                base_rank = rational_rank(span)
                closure = tuple(
                    i
                    for i in range(b.npoints)
                    if rational_rank(np.vstack([span, rows[i : i + 1, :]])) == base_rank
                )
            if closure not in seen:
                seen[closure] = sub
    return [Flat(generators=j, closure=cl) for cl, j in sorted(seen.items())]


def self_dual_via_flats(b: GaleDual) -> bool:
    """Self-duality referee: every flat of the dual rows must sum to zero."""
    if b.zero_rows():
        raise InapplicableInput(
            "pyramidal input: the flat-sum test requires a non-pyramidal "
            "configuration"
        )
    for flat in enumerate_flats(b):
        total = [
            sum(b.row(i)[j] for i in flat.closure) for j in range(b.corank)
        ]
        if any(x != 0 for x in total):
            return False
    return True


def self_dual_via_sigma(c: Configuration) -> bool:
    """Self-duality referee via dual-variety dimension.

    For each circuit relation v, the 0/1 vector marking the zero set of v
    must lie in the rational row span of the weights.  Requires a regular
    configuration so that span membership expresses the affine condition.
    """
    if not c.regular:
        raise InapplicableInput(
            "the zero-set row-span test requires a regular configuration "
            "(all-ones vector in the row span)"
        )
    for circ in enumerate_circuits(c):
        sigma = [0 if circ.relation[i] != 0 else 1 for i in range(c.npoints)]
        if not in_row_span(c.weights, sigma):
            return False
    return True


def facial_via_separation(c: Configuration, subset) -> bool:
    """Face membership referee by exact LP separation.

    ``subset`` is a face intersection iff some affine functional vanishes on
    it and is <= -1 on the rest (scaling makes strictness linear).
    """
    sel = sorted(set(int(j) for j in subset))
    if not sel:
        raise ValueError("facial test expects a nonempty subset")
    if sel[0] < 0 or sel[-1] >= c.npoints:
        raise ValueError("subset index out of range")
    outside = [j for j in range(c.npoints) if j not in set(sel)]
    if not outside:
        return True
    reg = regularize(c)
    d = reg.dim
    # variables: ell = p - q (free), one slack per strict inequality
    nvars = 2 * d + len(outside)
    rows = []
    rhs = []
    for j in sel:
        col = [Fraction(int(x)) for x in reg.weights[:, j]]
        rows.append(col + [-x for x in col] + [Fraction(0)] * len(outside))
        rhs.append(Fraction(0))
    for pos, j in enumerate(outside):
        col = [Fraction(int(x)) for x in reg.weights[:, j]]
        slack = [Fraction(0)] * len(outside)
        slack[pos] = Fraction(1)
        rows.append(col + [-x for x in col] + slack)
        rhs.append(Fraction(-1))
    x, _ = feasible_nonneg(rows, rhs)
    return x is not None


def strong_binomial_degree(b: GaleDual) -> int:
    """Largest one-sided degree among the basis binomials."""
    deg = 0
    for j in range(b.corank):
        pos = sum(int(x) for x in b.matrix[:, j] if x > 0)
        deg = max(deg, pos)
    return deg


def strong_via_points(c: Configuration, samples: int = 0) -> bool:
    """Strong self-duality referee by exact evaluation.

    Substitutes the dual parameterization into each basis binomial and checks
    the two sides agree on an integer grid with more values per coordinate
    than the degree bound — which certifies the polynomial identity, so the
    answer is exact, not probabilistic.  ``samples`` asks for extra prime
    coordinate points on top of the certifying grid.
    """
    if not c.regular:
        raise InapplicableInput(
            "strong self-duality is defined for regular configurations"
        )
    b = gale_dual(c)
    if b.zero_rows():
        raise InapplicableInput(
            "pyramidal input: strong self-duality requires a non-pyramidal "
            "configuration"
        )
    if b.corank == 0:
        return True
    per_axis = strong_binomial_degree(b) + 1
    if per_axis**b.corank > 200_000:
        raise GuardExceeded(
            f"certifying grid would need {per_axis}^{b.corank} evaluations"
        )
    grid = [range(per_axis)] * b.corank
    points = [list(p) for p in itertools.product(*grid)]
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    for t in range(samples):
        points.append([primes[(t + j) % len(primes)] ** (j + 1) for j in range(b.corank)])
    cols = [[int(x) for x in b.matrix[:, j]] for j in range(b.corank)]
    for s in points:
        coords = [
            sum(s[j] * b.row(i)[j] for j in range(b.corank)) for i in range(b.npoints)
        ]
        for v in cols:
            lhs = 1
            rhs = 1
            for i, vi in enumerate(v):
                if vi > 0:
                    lhs *= coords[i] ** vi
                elif vi < 0:
                    rhs *= coords[i] ** (-vi)
            if lhs != rhs:
                return False
    return True


def random_configuration(
    rng: random.Random,
    max_points: int = 8,
    max_dim: int = 4,
    max_entry: int = 3,
    repeat_free: bool = True,
    non_pyramidal: bool = True,
    max_tries: int = 20_000,
) -> Configuration:
    """One random reduced configuration satisfying the requested filters.

    Drawing is rejection-based but fully determined by the caller's ``rng``,
    so seeded sweeps are reproducible.
    """
    for _ in range(max_tries):
        d = rng.randint(1, max_dim)
        n = rng.randint(max(2, d + 1), max_points)
        rows = [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(d)]
        try:
            c = reduce_configuration(parse_configuration(rows))
        except ValueError:
            continue
        if repeat_free and len(set(c.columns())) != c.npoints:
            continue
        if non_pyramidal and gale_dual(c).zero_rows():
            continue
        if non_pyramidal and gale_dual(c).corank == 0:
            continue
        return c
    raise RuntimeError("rejection sampling starved; loosen the filters")


def random_lawrence_block(
    rng: random.Random,
    max_size: int = 4,
    max_entry: int = 3,
    max_tries: int = 20_000,
) -> np.ndarray:
    """A random M whose Lawrence lift is non-pyramidal and whose columns span
    a saturated lattice (the standing hypothesis of the parity criterion)."""
    from .intlinalg import invariant_factors

    for _ in range(max_tries):
        d = rng.randint(1, max_size)
        n = rng.randint(1, max_size)
        m = imat(
            [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(d)]
        )
        k = integer_kernel(m)
        if k.shape[1] == 0:
            continue
        if any(all(x == 0 for x in k[i].tolist()) for i in range(n)):
            continue  # pyramidal lift
        facs = invariant_factors(m)
        if facs != [1] * len(facs):
            continue  # column lattice not saturated
        return m
    raise RuntimeError("rejection sampling starved; loosen the filters")


def crosscheck(seed: int, count: int) -> dict:
    """Run the four equivalent self-duality tests on a seeded random corpus.

    Returns a report with one entry per instance and the list of any
    disagreements (there should never be one).
    """
    from .gale import coparallel_criterion, line_sums_zero

    rng = random.Random(seed)
    results = []
    disagreements = []
    for idx in range(count):
        c = random_configuration(rng)
        b = gale_dual(c)
        answers = {
            "line_sums_zero": bool(line_sums_zero(b).value),
            "flats": self_dual_via_flats(b),
            "sigma": self_dual_via_sigma(c),
            "coparallel": bool(coparallel_criterion(c).value),
        }
        entry = {
            "index": idx,
            "dim": c.dim,
            "points": c.npoints,
            "answers": answers,
            "agree": len(set(answers.values())) == 1,
        }
        results.append(entry)
        if not entry["agree"]:
            disagreements.append(entry)
    return {
        "seed": seed,
        "count": count,
        "self_dual_instances": sum(1 for r in results if r["answers"]["line_sums_zero"]),
        "disagreements": disagreements,
        "results": results,
    }
