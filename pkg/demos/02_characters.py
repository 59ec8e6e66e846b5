"""Symmetric group characters, exactly.

Character values come from the Murnaghan-Nakayama border-strip recursion.
On top of them: class sizes, induction products (Littlewood-Richardson),
internal tensor products, and the exterior powers of the permutation
representation whose alternating sum drives the mod-p operators.
"""

from math import factorial

from fockheis import (
    Partition,
    VirtualRep,
    character_table,
    class_size,
    exterior_power_perm,
    induction_product,
    kronecker_product,
    partitions_of,
)

n = 5
parts = list(partitions_of(n))
print(f"character table of the symmetric group on {n} letters")
header = "        " + "  ".join(f"{str(tuple(mu)):>12}" for mu in parts)
print(header)
table = character_table(n)
for lam in parts:
    row = "  ".join(f"{table[(lam, mu)]:>12}" for mu in parts)
    print(f"{str(tuple(lam)):>8}  {row}")
print()

# orthogonality: rows are orthogonal with class-size weights
for l1 in parts:
    for l2 in parts:
        acc = sum(class_size(mu) * table[(l1, mu)] * table[(l2, mu)] for mu in parts)
        assert acc == (factorial(n) if l1 == l2 else 0)
print(f"row orthogonality verified exactly for n = {n}")
print()

# induction product = Littlewood-Richardson
a = VirtualRep.irreducible([2, 1])
prod = induction_product(a, a)
print("Ind of (2,1) x (2,1) from S_3 x S_3 to S_6:")
for lam, mult in prod.sorted_terms():
    print(f"  {str(tuple(lam)):>14}: {mult}")
print()

# internal tensor product: the sign representation transposes labels
out = kronecker_product(Partition([1, 1, 1, 1]), VirtualRep.irreducible([3, 1]))
print(f"sign (x) S_(3,1) = {[tuple(l) for l in out.terms]}")
print()

# exterior powers of the permutation representation are hook sums, and
# their alternating sum vanishes (the permutation rep contains the trivial)
d = 4
for i in range(d + 1):
    terms = exterior_power_perm(d, i).sorted_terms()
    pretty = " + ".join(str(tuple(l)) for l, _ in terms)
    print(f"Lambda^{i} C^{d} = {pretty}")
acc = VirtualRep.zero(d)
for i in range(d + 1):
    acc = acc + (-1) ** i * exterior_power_perm(d, i)
print(f"alternating sum over i: zero? {acc.is_zero()}")
