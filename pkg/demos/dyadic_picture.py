"""The unit interval picture of the neighborhood geometry.

Points with exponents m_1 < ... < m_k become dyadic rationals
sum 2^(-m_i).  Basic neighborhoods turn into explicit interval cuts of the
space, which is what makes the whole topology feel like a subspace of
[0, 1).
"""

from fractions import Fraction

from semitop import (DyadicPoint, XSpace, basic_neighborhood,
                     verify_interval_identity)

space = XSpace(a=2, alpha=1, max_exp=5)
pts = sorted(space.points(), key=lambda p: p.value)
print(f"X(a=2, alpha=1) truncated at exponent 5: {len(pts)} points")
print("smallest:", [str(p.value) for p in pts[:4]])
print("largest: ", [str(p.value) for p in pts[-4:]])

x0 = DyadicPoint((1,))          # the point 1/2
nbhd = basic_neighborhood(x0, 3, space)
print("\nneighborhood of 1/2, extensions with exponents >= 3:")
print(" ", [str(p.value) for p in sorted(nbhd, key=lambda p: p.value)])

m_top = x0.exponents[-1]
lo = x0.value - Fraction(1, 2 ** (m_top + space.a))
hi = x0.value + Fraction(1, 2 ** (3 - 1))
v = verify_interval_identity(x0, space, beta=3)
print(f"\nsame set as the interval cut ({lo}, {hi}):", v.status,
      f"({v.witness['size']} points)")

# around zero the cut is one-sided: [0, 2^(1-beta))
zero = DyadicPoint(())
vz = verify_interval_identity(zero, space, beta=4)
print(f"around 0, beta=4 the cut is [0, {Fraction(1, 2 ** 3)}):",
      vz.status, f"({vz.witness['size']} points)")
