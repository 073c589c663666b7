#!/usr/bin/env python3
"""Tour of the exact character arithmetic.

Walks through the unit-group structure mod 12, evaluates characters at
integers and rationals, and shows conductors, parities, and the primitive
character inducing each one.
"""

from fractions import Fraction

from dedekind import characters, phi_star, principal, product, unit_group

g = unit_group(12)
print(f"(Z/12Z)^x: generators {g.generators} with orders {g.orders} (phi = {g.phi})")

print("\nAll characters mod 12 (index, exponents, conductor, parity):")
for i, chi in enumerate(characters(12)):
    par = "even" if chi.parity() == 1 else "odd"
    tag = "primitive" if chi.is_primitive else f"induced from modulus {chi.conductor()}"
    print(f"  [{i}] {chi.exponents}  conductor={chi.conductor():2d}  {par:4s}  {tag}")

chi = characters(12)[1]  # induced from the nontrivial character mod 3
print(f"\nValues of {chi!r} (zero off the units):")
print("  at 5      ->", chi(5))
print("  at 7      ->", chi(7))
print("  at 1/2    ->", chi(Fraction(1, 2)), "(non-integers evaluate to 0)")
print("  exact exponent at 5: e(t) with t =", chi.log_at(5))

star = chi.star()
print(f"\nIts primitive core is {star!r} (conductor {star.modulus});")
print("they agree on every integer coprime to 12:")
for n in (1, 5, 7, 11):
    print(f"  n={n}: {chi(n):+.0f} vs {star(n):+.0f}")

chi3 = characters(3)[1]
chi4 = characters(4)[1]
prod = product(chi3, chi4, 12)
print(f"\nProduct of the mod-3 and mod-4 characters at modulus 12: {prod!r}")
print("  parity:", prod.parity(), " conductor:", prod.conductor())

print("\nPrimitive character counts phi*(q) for q = 1..16:")
print(" ", [phi_star(q) for q in range(1, 17)])
print("Principal character mod 1 evaluates to 1 everywhere:", principal(1)(0))
