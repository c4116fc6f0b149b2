"""Repeats, pyramids, and the join decomposition.

Arbitrary input is reduced before any duality criterion runs: regularize
(put the points on an affine hyperplane off the origin), normalize the
lattice (make the columns span it), merge repeated columns, and split off
pyramid apexes.  The variety is an iterated join over what remains, and
self-duality of the join needs the apex count to match the repeat count.
"""

from toricdual import (
    affine_dim,
    dedup,
    full_decomposition,
    is_self_dual,
    normalize_lattice,
    parse_configuration,
    pyramid_decompose,
    reduce_configuration,
    regularize,
)

print(__doc__)

print("=" * 72)
print("Regularize + normalize")
print("=" * 72)
c = parse_configuration([[0, 2, 4]])
print("input:", c.weights.tolist(), "regular:", c.regular, "normalized:", c.lattice_normalized)
r = regularize(c)
print("regularized:", r.weights.tolist())
n, back = normalize_lattice(r)
print("normalized:", n.weights.tolist())
print("back-transform satisfies old == back @ new:", (back @ n.weights).tolist())
print("affine dimension is invariant:", affine_dim(c), "==", affine_dim(n))

print()
print("=" * 72)
print("A pyramid over a conic is never self-dual (without repeats)")
print("=" * 72)
pyramid = parse_configuration([[1, 1, 1, 1], [0, 1, 2, 0], [0, 0, 0, 1]])
rep = pyramid_decompose(pyramid)
print("apexes:", rep.apex_indices, " core:", rep.core_indices)
print("lattice splitting valid:", rep.splitting_valid)
v = is_self_dual(pyramid)
print("self-dual?", v.value, "->", v.witness["kind"])

print()
print("=" * 72)
print("Repeats can rescue a pyramid: a point in the projective line")
print("=" * 72)
point = parse_configuration([[1, 1]])
print("dedup:", dedup(point).multiplicity, "repeat codimension:", dedup(point).repeat_codim)
v = is_self_dual(point)
print("self-dual?", v.value, "->", v.witness["kind"])

print()
print("=" * 72)
print("A join with a non-trivial core: apex doubled over a square")
print("=" * 72)
joined = parse_configuration(
    [
        [1, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 1, 1],
    ]
)
rep = full_decomposition(joined)
print("join shape (repeats, apexes, core points):", rep.join_shape)
v = is_self_dual(joined)
print("self-dual?", v.value)
print("the core is the quadric square, and the apex count matches the repeat count")
