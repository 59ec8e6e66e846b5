"""Partitions and their statistics.

Everything in this package is indexed by integer partitions: weakly
decreasing tuples of positive integers.  This script walks through the
basic statistics (content, lowest-degree statistic, transpose) and the
decomposition of a partition into a part coprime to b plus b times a
quotient part.
"""

from fockheis import (
    Partition,
    content_sum,
    coprime_decompose,
    d_stat,
    is_coprime,
    partitions_of,
    partwise_add,
    transpose,
)

eta = Partition([4, 1])
print(f"eta = {tuple(eta)}, size {eta.size}")
print(f"  content sum (sum of j - i over cells): {content_sum(eta)}")
print(f"  lowest-degree statistic d_eta:         {d_stat(eta)}")
print(f"  transpose:                             {tuple(transpose(eta))}")
print()

# the content sum is antisymmetric under transposing, d_eta counts
# binomials of the column heights
for eta in partitions_of(5):
    cols = transpose(eta)
    assert content_sum(cols) == -content_sum(eta)
    assert d_stat(eta) == sum(c * (c - 1) // 2 for c in cols)
print("checked on all partitions of 5: cont(eta^t) = -cont(eta), "
      "d_eta = sum C(col, 2)")
print()

# every partition splits uniquely as mu + b*tau with mu coprime to b,
# meaning no column height of mu repeats b or more times
b = 3
for eta in [Partition([4, 1]), Partition([3]), Partition([3, 3, 1]), Partition([6, 6, 3])]:
    mu, tau = coprime_decompose(eta, b)
    print(f"{tuple(eta)} = {tuple(mu)} + {b} * {tuple(tau)}"
          f"   (mu coprime to {b}: {is_coprime(mu, b)})")
    assert partwise_add(mu, b, tau) == eta
print()

# the coprime partitions of n <= 6 for b = 2
print("partitions of n <= 6 coprime to 2:")
for n in range(7):
    coprimes = [tuple(p) for p in partitions_of(n) if is_coprime(p, 2)]
    print(f"  n={n}: {coprimes}")
