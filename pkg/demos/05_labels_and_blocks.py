"""Graded simple labels: Euler eigenvalues, blocks, images, characters.

A graded simple is named by (eta, m): a partition and its lowest degree in
(1/b)Z.  The preferred lift puts m at the lowest Euler eigenvalue
c_eta = d_eta - lambda*cont(eta).  Raising operators move labels by
eta = mu + b*tau' -> mu + b*sigma with Littlewood-Richardson multiplicity,
preserve the block, and on graded characters act by the mod-p operator.
"""

from fractions import Fraction

from fockheis import (
    FockVector,
    ParamLambda,
    Partition,
    character_pipeline,
    eu_equivalent,
    lowest_eu_eigenvalue,
    p_stability_interval,
    possible_supports,
    preferred_label,
    simple_image_neg,
    simple_image_pos,
    support_dim,
    verma_hilbert,
)
from fockheis.cherednik import SimpleLabel, block_of, leading_term

lam = ParamLambda(1, 2)
print(f"parameter a/b = {lam.a}/{lam.b}")
for eta in ([3], [2, 1], [1, 1, 1]):
    c = lowest_eu_eigenvalue(eta, lam)
    print(f"  c_{tuple(Partition(eta))} = {c}")
print()

# label images under the raising operator for tau
lab = preferred_label([3], ParamLambda(1, 3))
print("images of the label (3) under tau = (1) at a/b = 1/3:")
for out, mult in simple_image_pos(lab, [1], ParamLambda(1, 3)):
    print(f"  {tuple(out.eta)} with lowest degree {out.m}, multiplicity {mult}")
print()

# blocks: images remain equivalent to each other; alpha is preserved
blk = block_of(lab, ParamLambda(1, 3), 7)
images = simple_image_pos(lab, [1], ParamLambda(1, 3))
for out, _ in images:
    assert eu_equivalent(lab.eta, out.eta, ParamLambda(1, 3))
    assert block_of(out, ParamLambda(1, 3), 7).alpha == blk.alpha
print("all images stay in the shifted block (same alpha, shifted sigma)")
print()

# negative parameters act through the transpose twist
lamm = ParamLambda(-5, 2)
lab_neg = SimpleLabel(Partition([1]), lowest_eu_eigenvalue([1], lamm))
out = simple_image_neg(lab_neg, [1], lamm)
print(f"negative-parameter image of (1) under tau=(1), a/b=-5/2: "
      f"{[tuple(l.eta) for l, _ in out]}")
print()

# supports: eta = mu + b*tau has support dimension |mu| + |tau|
print("support dimensions for b = 3:")
for eta in ([4, 1], [3], [3, 3, 1], [6, 3]):
    print(f"  {tuple(Partition(eta))}: {support_dim(eta, 3)}")
print("possible strata for n = 7, b = 3:", possible_supports(7, 3))
print()

# p-stability intervals: integer windows avoiding singular residues mod p
print("p-stability interval around 0 for p=7, n=2:",
      p_stability_interval(0, 7, 2))
print("no walls at all for n=1:", p_stability_interval(0, 7, 1))
print()

# graded dimension series of a spherical standard module
h = verma_hilbert([2, 1], Fraction(1, 2), 8)
print(f"Hilbert series of the standard module for (2,1), m=1/2: "
      f"offset {h.offset}, coefficients {h.coeffs}")
print(f"first nonzero power: {h.lowest_power()} (= m + d_eta)")
print()

# character pipeline: the graded class of a non-coprime simple from the
# class of its coprime part, normalized to the preferred lift
lam = ParamLambda(1, 2)
table = {Partition([]): FockVector.vacuum()}
out = character_pipeline([2], lam, 5, table)
print("pipeline for eta = (2), a/b = 1/2, p = 5, from the vacuum class:")
for eta, c in out.terms():
    print(f"  {str(tuple(eta)):>8}: {c!r}")
print("leading term:", leading_term(out))
