"""The ring of symmetric functions: Schur basis outside, power sums inside.

Schur products expand with Littlewood-Richardson coefficients (iterated
Pieri); conversions to the power-sum basis use exact character values; and
plethysm by p_b is just index scaling on power sums.
"""

from fockheis import (
    SymFunc,
    characteristic,
    induction_product,
    plethysm_pb,
    power_sum_to_schur,
    schur_multiply,
    schur_to_power_sums,
)
from fockheis.schar import VirtualRep
from fockheis.symfunc import to_power_sums, to_schur


def pretty(f):
    bits = []
    for lam, c in f.sorted_terms():
        name = "s" if f.basis == "schur" else "p"
        bits.append(f"{c}*{name}{tuple(lam)}")
    return " + ".join(bits) if bits else "0"


s21 = SymFunc.schur([2, 1])
print("s(2,1) * s(2,1) =", pretty(schur_multiply(s21, s21)))
print()

# power sums are alternating hook sums in the Schur basis
for m in (2, 3, 4):
    print(f"p_{m} =", pretty(power_sum_to_schur(m)))
print()

# and Schur functions are character-weighted sums of power sums
print("s(2)   =", pretty(schur_to_power_sums([2])))
print("s(1,1) =", pretty(schur_to_power_sums([1, 1])))
f = SymFunc.schur([3, 1])
assert to_schur(to_power_sums(f)).terms == f.terms
print("round trip through the power basis is exact")
print()

# plethysm by p_b scales power-sum indices; Schur coefficients stay integral
for tau, b in (([1], 3), ([2], 2), ([2, 1], 2)):
    g = plethysm_pb(SymFunc.schur(tau), b)
    print(f"s{tuple(tau)}[p_{b}] =", pretty(g))
print()

# the characteristic map turns induction products into Schur products
va, vb = VirtualRep.irreducible([2]), VirtualRep.irreducible([1, 1])
lhs = schur_multiply(characteristic(va), characteristic(vb))
rhs = characteristic(induction_product(va, vb))
assert lhs.terms == rhs.terms
print("characteristic(Ind(a x b)) = characteristic(a) * characteristic(b):",
      pretty(lhs))
