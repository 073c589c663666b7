#!/usr/bin/env python3
"""S as a crossed homomorphism on Gamma_0(q1 q2).

S only sees the first column of a matrix, extends to lower-left entry 0
(value 0) and negative entries (via S(-gamma)), and satisfies
S(g1 g2) = S(g1) + chi1 conj(chi2)(d1) S(g2).
"""

from random import Random

from dedekind import (
    GammaMatrix,
    characters,
    crossed_hom_residual,
    gamma_from_ac,
    make_context,
    random_gamma0,
    s_matrix,
)

chi3 = characters(3)[1]
ctx = make_context(chi3, chi3, 9)

identity = GammaMatrix(1, 0, 0, 1)
g = gamma_from_ac(2, 9)
print("Matrix values:")
print("  S(I)        =", s_matrix(ctx, identity))
print("  S(-I)       =", s_matrix(ctx, -identity))
print(f"  S({g})      = {s_matrix(ctx, g):.6f}")
print(f"  S(-{g})     = {s_matrix(ctx, -g):.6f}  (negative lower-left entry)")

print("\nCocycle residuals over random Gamma_0(9) pairs (seed 42):")
rng = Random(42)
for i in range(8):
    g1, g2 = random_gamma0(9, rng), random_gamma0(9, rng)
    res = crossed_hom_residual(ctx, g1, g2)
    prod = g1 @ g2
    print(f"  trial {i}: product c-entry {prod.c:>5d}, residual {abs(res):.2e}")

print("\nWith chi1 = chi2 the twist is trivial on the group, so S is additive:")
g1, g2 = gamma_from_ac(2, 9), gamma_from_ac(4, 9)
lhs = s_matrix(ctx, g1 @ g2)
rhs = s_matrix(ctx, g1) + s_matrix(ctx, g2)
print(f"  S(g1 g2) = {lhs:.8f}")
print(f"  S(g1) + S(g2) = {rhs:.8f}")
