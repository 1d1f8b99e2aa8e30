"""A walk through GF(p^r) arithmetic as the cipher uses it.

Elements of GF(2^5) are coordinate vectors over the basis
{1, alpha, ..., alpha^4}, where alpha is a root of the modulus
x^5 + x^2 + 1. Every message is such an element; the canonical
integer of a vector (a_0..a_4) is sum(a_i * 2^i).
"""

from clustercrypt import (
    FieldParams,
    element_to_int,
    ext_add,
    ext_inv,
    ext_mul,
    ext_pow,
    int_to_element,
)

gf32 = FieldParams(p=2, r=5, f=(1, 0, 1, 0, 0, 1))
print(f"GF(2^5) with modulus x^5 + x^2 + 1; {gf32.q} elements\n")

alpha = gf32.alpha_power(1)
print("alpha           ->", alpha, "= integer", element_to_int(alpha, gf32))

# the modulus forces alpha^5 = alpha^2 + 1
a5 = ext_pow(alpha, 5, gf32)
print("alpha^5         ->", a5, "   (reduced by the modulus)")

# inverses come from the extended Euclidean algorithm on polynomials
inv_alpha = ext_inv(alpha, gf32)
print("alpha^-1        ->", inv_alpha)
print("alpha * alpha^-1->", ext_mul(alpha, inv_alpha, gf32))

# the letter F is 6 = 0*1 + 1*2 + 1*4: coordinates (0,1,1,0,0)
m = int_to_element(6, gf32)
print("\nmessage 6       ->", m)
print("as a combination: 0*1 + 1*alpha + 1*alpha^2")

# a worked division: (1 + alpha) / (alpha + alpha^2)
num = ext_add(gf32.one(), alpha, gf32)
den = ext_add(alpha, gf32.alpha_power(2), gf32)
quotient = ext_mul(num, ext_inv(den, gf32), gf32)
print("\n(1+a)/(a+a^2)   ->", quotient, "= integer", element_to_int(quotient, gf32))

# a large field: GF(101^7), the second worked configuration
gf = FieldParams(p=101, r=7, f=(46, 0, 1, 1, 0, 74, 0, 1))
big = int_to_element(38927, gf)
print(f"\nGF(101^7) has {gf.q} elements")
print("38927           ->", big, "(base-101 digits, ascending)")
print("alpha^6 as int  ->", element_to_int(gf.alpha_power(6), gf))
