"""Raising operators on Fock space.

Fock space here is the span of partition basis vectors with Laurent
coefficients in the grading variable v.  The operator b_op(i, b, .)
multiplies by the power sum p_{ib}; b_tau(tau, b, .) multiplies by the
plethysm s_tau[p_b]; heis_modp adds the characteristic-p grading twist
sum_i (-1)^i v^{bpi} b_{tau (x) Lambda^i}, whose v -> 1 specialization
annihilates everything.
"""

from fockheis import FockVector, b_op, b_tau, heis_modp, heis_neg, partitions_upto
from fockheis.young import schur_product_basis


def pretty(x):
    bits = []
    for eta, c in x.terms():
        bits.append(f"({c!r})[{tuple(eta)}]")
    return " + ".join(bits) if bits else "0"


vac = FockVector.vacuum()
print("b_op(1, 3) on the vacuum:", pretty(b_op(1, 3, vac)))
print("b_op(1, 2) on [1]:       ", pretty(b_op(1, 2, FockVector.basis([1]))))
print()

# the raising operators multiply, with Littlewood-Richardson structure
# constants: b_tau' b_tau'' = sum_tau c^tau b_tau
b = 2
t1, t2 = (1,), (1,)
for mu in partitions_upto(6):
    x = FockVector.basis(mu)
    lhs = b_tau(t1, b, b_tau(t2, b, x))
    rhs = FockVector.zero()
    for tau, c in schur_product_basis(t1, t2):
        rhs = rhs + b_tau(tau, b, x).scale(c)
    assert lhs == rhs
print("b_(1) b_(1) = b_(2) + b_(1,1) checked on all degrees <= 6")
print()

# the graded mod-p operator: alternating Koszul layers with v^{bp} steps
out = heis_modp([1], 2, 5, vac)
print("heis_modp(tau=(1), b=2, p=5) on vacuum:", pretty(out))
print("  ... the coefficient polynomial is 1 - v^{bp} = 1 - v^10")
print("  v -> 1 kills it:", pretty(out.at_v_one()))
print()

out = heis_modp([2], 2, 3, FockVector.basis([1]))
print("heis_modp(tau=(2), b=2, p=3) on [1]:")
for eta, c in out.terms():
    print(f"  {str(tuple(eta)):>12}: {c!r}")
assert out.at_v_one().is_zero()
print("  v -> 1 annihilates this one too")
print()

# the negative-parameter variant is a transpose conjugation and is
# conjecture-level, so it must be switched on explicitly
neg = heis_neg([1], 2, 5, FockVector.basis([1, 1]), conjectural_flag=True)
print("heis_neg(tau=(1), b=2, p=5) on [1,1]:", pretty(neg))
