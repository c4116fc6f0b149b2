"""Families of self-dual varieties built from the Gale side.

Because self-duality is a condition on the Gale dual rows (line sums zero),
writing down dual configurations with that property and inverting gives
self-dual varieties of any dimension >= 3 and any codimension >= 2, most of
them singular.  Lawrence lifts are the classical source of examples.
"""

from toricdual import (
    affine_dim,
    config_from_gale,
    family_alpha,
    family_alpha_gale,
    family_codim,
    family_dim,
    gale_dual,
    is_lawrence,
    is_segre,
    is_self_dual,
    lawrence,
    smooth_certificate,
    verify_gale_dual,
)

print(__doc__)

print("=" * 72)
print("The one-parameter 5x7 family")
print("=" * 72)
for a in (1, 2, 3, -2):
    c = family_alpha(a)
    ok = verify_gale_dual(c, family_alpha_gale(a))
    print(
        f"alpha={a:>2}: self-dual={is_self_dual(c).value}  dim={affine_dim(c)}  "
        f"companion dual verified={ok}"
    )
print("n = 7 is odd, so none of these can be smooth:")
print("smooth certificate:", smooth_certificate(family_alpha(1)).value)

print()
print("=" * 72)
print("Dimension family: plane duals {(a_i,0)} + {±e2} + {±(1,1)}")
print("=" * 72)
for r, alphas in ((2, (1, -1)), (2, (2, -2)), (3, (1, 2, -3))):
    c = family_dim(r, alphas)
    seg = is_segre(c)
    print(
        f"r={r} alphas={alphas}: dim={affine_dim(c)} self-dual={is_self_dual(c).value} "
        f"segre={'m=%d' % seg if seg else 'no'}"
    )

print()
print("=" * 72)
print("Codimension family")
print("=" * 72)
for m, r, alphas in ((2, 2, (1, -1)), (3, 2, (2, -2)), (2, 3, (1, 1, -2))):
    c = family_codim(m, r, alphas)
    cod = c.npoints - 1 - affine_dim(c)
    print(f"m={m} r={r}: dim={affine_dim(c)} codim={cod} self-dual={is_self_dual(c).value}")

print()
print("=" * 72)
print("Lawrence lifts (Id|Id ; 0|M) are self-dual whenever non-pyramidal")
print("=" * 72)
for block in ([[1, 1, 1]], [[1, 2, 3]], [[2, 1], [1, 1]], [[0, 0, 0]]):
    c = lawrence(block)
    back = is_lawrence(c)
    print(
        f"M={block}: self-dual={is_self_dual(c).value}  recovered block={back.tolist()}"
    )

print()
print("=" * 72)
print("config_from_gale inverts the construction")
print("=" * 72)
b = gale_dual(lawrence([[1, 1, 1]])).matrix
c = config_from_gale(b)
print("round trip verifies:", verify_gale_dual(c, b))
