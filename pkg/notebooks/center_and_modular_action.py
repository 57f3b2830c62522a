"""
The center and its SL(2, Z) action
==================================

Coordinates of the ribbon element on the canonical basis, then T and S
on the center, the relation S^2 = 1 and the scalar (ST)^3.
"""

# %%
import cmath

from jwq.cli import formatCyclo
from jwq.modular import checkModularRelations, compareTwistVsT, drinfeldSpanTStable, sMatrix
from jwq.uq import centerCoordinates, centerLabels, ribbon

p = 3

# %%
cv = centerCoordinates(ribbon(p, 1))
for label, c in zip(centerLabels(p), cv.coords):
    print(label, formatCyclo(c))

# %%
# S lives in Q(zeta_{8p}) for odd p.
S = sMatrix(1, None, p)
print("field order", 4 * S.p)
for delta in (0, 1):
    r = checkModularRelations(delta, None, p)
    nu = r["nu"].toComplex()
    print("delta=%d" % delta, "S^2 = 1:", r["s2Identity"], "arg nu / pi =", round(cmath.phase(nu) / cmath.pi, 6))

# %%
print("twist on skein classes agrees with T:", compareTwistVsT(p)["pass"])
print("Drinfeld span T-stable:", drinfeldSpanTStable(1, p))
