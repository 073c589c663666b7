#!/usr/bin/env python3
"""The generalized Dedekind sum in its four computational forms.

All four evaluate the same object: a double character-weighted sawtooth sum,
a single sum against the twisted sawtooth, a linear-weight variant, and a
cotangent double sum.  The classical sum s(h, k) is the trivial-character
specialization and comes out as an exact rational.
"""

from dedekind import (
    characters,
    classical_context,
    classical_s,
    make_context,
    s_b1chi,
    s_cotangent,
    s_direct,
    s_single_b1,
)

print("Classical Dedekind sums (exact rationals):")
for h, k in ((1, 3), (2, 5), (3, 7)):
    print(f"  s({h},{k}) = {classical_s(h, k)}")

ctx0 = classical_context(5)
print("\nTrivial-character specialization reproduces s(h, 5) exactly:")
for a in ctx0.units():
    print(f"  a={a}:  double sum {s_direct(ctx0, a)}  == s({a},5) = {classical_s(a, 5)}")

chi3 = characters(3)[1]
ctx = make_context(chi3, chi3, 9)
print("\nTwo-character sum with the nontrivial character mod 3 on both slots, c = 9:")
print(f"{'a':>3} {'double':>12} {'twisted':>12} {'linear':>12} {'cotangent':>12}")
for a in ctx.units():
    vals = [
        complex(s_direct(ctx, a)),
        s_b1chi(ctx, a),
        complex(s_single_b1(ctx, a)),
        s_cotangent(ctx, a),
    ]
    print(f"{a:>3} " + " ".join(f"{v.real:>12.8f}" for v in vals))
print("(columns agree to ~1e-15; the imaginary parts vanish for this real pair)")

chi4 = characters(4)[1]
ctx2 = make_context(chi3, chi4, 12)
print("\nMixed pair (mod 3, mod 4) at c = 12 produces genuinely complex values:")
for a in ctx2.units():
    z = complex(s_direct(ctx2, a))
    print(f"  a={a:>2}: {z.real:+.8f} {z.imag:+.8f}j")
