"""
Twists, encircling and buckling on coupons
==========================================

Closed forms for the three coupon operators against a direct Kauffman
resolution of the braid that realises them.
"""

# %%
from jwq.annulus import buckle, encircle, oracleCoupon, twist
from jwq.cli import formatCyclo
from jwq.errors import UnsupportedCase

p = 2

# %%
for n in range(1, 3 * p - 1):
    d = twist(n, 1, p=p)
    same = oracleCoupon("twist", n, p) == d.element(n, p)
    print("twist n=%d" % n, formatCyclo(d.cI), formatCyclo(d.cN), same)

# %%
# Encircling is only closed-form for i = 1 and i >= lp - 1.
for n in range(2, 3 * p - 1):
    for i in range(1, n):
        try:
            d = encircle(i, n, p=p)
        except UnsupportedCase as exc:
            print("encircle n=%d i=%d skipped: %s" % (n, i, exc))
            continue
        print("encircle n=%d i=%d" % (n, i), oracleCoupon("encircle", n, p, i=i) == d.element(n, p))

# %%
for i in (1, 2, 3):
    d = buckle(i, 2, p=p)
    print("buckle^%d on 2 strands" % i, formatCyclo(d.cI), formatCyclo(d.cN))
