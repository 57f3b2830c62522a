"""
Evaluable idempotents at a root of unity
========================================

Build the evaluated idempotent and its nilpotent partner at p = 3, check
the defining identities and look at their closures in the solid torus.
"""

# %%
from jwq.annulus import closureOfJW, skeinTrace
from jwq.cli import formatCyclo
from jwq.jw import jonesWenzl, jonesWenzlNil
from jwq.uq import thetaRep

p = 3

# %%
# f_4 has a pole at q = exp(i pi / 3); its symmetrised version does not.
for n in range(1, 3 * p - 1):
    f, g = jonesWenzl(n, p), jonesWenzlNil(n, p)
    print(n, "terms:", len(f.terms), "f^2 = f:", f * f == f, "nil:", not g.isZero(), "g^2 = 0:", (g * g).isZero())

# %%
# Closures are Chebyshev polynomials in the core class alpha.
for n in range(1, 3 * p - 1):
    clos = closureOfJW(n, p)
    coeffs = {k: formatCyclo(v) for k, v in sorted(clos.coeffs.items())}
    print(n, coeffs, "trace:", formatCyclo(skeinTrace(clos)))

# %%
# Ranks on the tensor power of the fundamental module.
for n in range(1, 3 * p - 1):
    th = thetaRep(n, p)
    g = th(jonesWenzlNil(n, p))
    print(n, th(jonesWenzl(n, p)).rank(), 0 if g.isZero() else g.rank())
