"""Walkthrough: the well-poised pair machinery.

A pair (alpha_n, beta_n) is tied together by a two-parameter weighted sum.
Setting k = aq collapses the weights and beta becomes the plain partial
sum of alpha -- the engine behind the whole identity catalog. The chain
step builds new pairs from old ones; the infinite transform relates the
two weighted series attached to any pair.
"""

from fractions import Fraction as F

from qident import (
    AlphaSequence,
    ChainParams,
    QMonomial,
    WPPair,
    partial_sums,
    thm_transform_sides,
    unit_alpha,
    wp_beta,
    wp_chain_step,
)

q = QMonomial.of(1, 1)
N = 26

# the reduction k = aq: beta_n = alpha_0 + ... + alpha_n exactly
alpha = AlphaSequence.from_values([F(1), F(-2), F(3, 4), F(5)])
a = QMonomial.of(1, 1)
pair = WPPair(alpha, a, a * q)
for n in range(4):
    beta = wp_beta(pair, n, N)
    sums = partial_sums(alpha, n, N)
    print(f"n={n}: beta == partial sum ->", beta.compare(sums, N) is None)

# one chain step from the seed pair, checked against the defining relation
seed = WPPair(unit_alpha(), QMonomial.of(1, 3), QMonomial.of(1, 5))
params = ChainParams(QMonomial.of(1, 1), QMonomial.of(1, 2),
                     QMonomial.of(1, 5))
new_pair, beta_prime = wp_chain_step(seed, params, N)
for n in range(4):
    direct = wp_beta(new_pair, n, N)
    closed = beta_prime(n, N)
    print(f"chain n={n}: closed form matches ->",
          direct.compare(closed, N - 4) is None)

# the infinite transform (k = 0 gives the classical one)
lhs, rhs = thm_transform_sides(seed, QMonomial.of(1, 1), QMonomial.of(1, 2), N)
print("transform sides equal to order", N, "->", lhs.compare(rhs, N) is None)
