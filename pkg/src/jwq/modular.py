"""SL(2, Z) on the center and its skein counterpart.

T is multiplication by the ribbon element.  S is fixed by the two exchange
identities S(phi-hat) = chi and S(chi) = phi-hat between the Radford and
Drinfeld images, which together span the whole center.  Matrices act on
coordinate columns in the basis (e_0..e_p, w+_1..w+_{p-1}, w-_1..w-_{p-1}).

The exchange identities are consistent only when the cointegral scale
satisfies zeta^2 = p / (2 ([p-1]!)^4).  For odd p that square root lies
outside Q(zeta_{4p}), so S is computed in Q(zeta_{8p}) (``modularOrder``);
elements of the smaller field are mapped in by zeta_{4p} -> zeta_{8p}^2.
"""

from dataclasses import dataclass
from functools import lru_cache

import flint

from .annulus import buckle, twist
from .coeff import CycloMatrix, CycloNum, solveLeft
from .errors import InvalidParams, NotScalar, SingularSystem
from .uq import (_chebyshevQ, _pm, _qfact, _qint, _qq, _resolveZeta, _z, centerBasis,
                 centerCoordinates, centerLabels, drinfeldImage, radfordImage, ribbon)


@dataclass
class CenterOperator:
    """A (3p-1)-square matrix on center coordinates.  ``p`` is the field
    parameter of the entries, which is 2p for S when p is odd."""

    p: int
    matrix: CycloMatrix

    def __mul__(self, other):
        if isinstance(other, CenterOperator):
            return CenterOperator(self.p, self.matrix * other.matrix)
        return NotImplemented

    def __pow__(self, k):
        return CenterOperator(self.p, self.matrix ** k)

    def __eq__(self, other):
        return isinstance(other, CenterOperator) and self.matrix == other.matrix

    def apply(self, coords):
        col = CycloMatrix(self.p, [[c] for c in coords])
        return (self.matrix * col).column(0)

    @property
    def rootParameter(self):
        return (len(self.matrix.rows) + 1) // 3

    def toJson(self):
        return {"basis": centerLabels(self.rootParameter), "field": 4 * self.p,
                "matrix": [[x.toJson() for x in row] for row in self.matrix.rows]}


def _columns(p, vectors):
    """Matrix whose k-th column is vectors[k]."""
    return CycloMatrix(p, [list(r) for r in zip(*vectors)])


def _checkDelta(delta):
    if delta not in (0, 1):
        raise InvalidParams("ribbon choice must be 0 or 1")


# ---------------------------------------------------------------------------
# T


@lru_cache(maxsize=None)
def tMatrix(delta=1, p=2):
    """Multiplication by v_delta, computed on the basis elements."""
    _checkDelta(delta)
    v = ribbon(p, delta)
    cols = [centerCoordinates(v * b, check=False).coords for b in centerBasis(p)]
    return CenterOperator(p, _columns(p, cols))


def ribbonEigenvalue(delta, s, p):
    """(-1)^{delta(s-1)} q^{-(s^2-1)/2}."""
    return _z(p, -(s * s - 1)) * _pm(delta * (s - 1))


def tClosedForm(delta=1, p=2):
    _checkDelta(delta)
    n = 3 * p - 1
    M = CycloMatrix.zeros(p, n, n)
    for s in range(p + 1):
        M[s, s] = ribbonEigenvalue(delta, s, p)
    for s in range(1, p):
        lam = ribbonEigenvalue(delta, s, p)
        wp, wm = p + s, 2 * p - 1 + s
        M[wp, wp] = lam
        M[wm, wm] = lam
        c = _qq(p) * lam / _qint(p, s)
        M[wp, s] = c * (p - s)
        M[wm, s] = -(c * s)
    return CenterOperator(p, M)


# ---------------------------------------------------------------------------
# S


def modularOrder(p):
    """The p' with Q(zeta_{4p'}) the field of S: p for even p, 2p for odd p."""
    return p if p % 2 == 0 else 2 * p


def lift(x, p):
    """Q(zeta_{4p}) -> Q(zeta_{4p'}) with p' = modularOrder(p)."""
    P = modularOrder(p)
    if isinstance(x, (int,)):
        return CycloNum.fromInt(P, x)
    if P == p:
        return x
    r = P // p
    coeffs = [0] * (r * max(x.poly.degree(), 0) + 1)
    for e, c in enumerate(x.poly.coeffs()):
        coeffs[r * e] = c
    return CycloNum(P, flint.fmpq_poly(coeffs))


def _liftMatrix(M, p):
    return CycloMatrix(modularOrder(p), [[lift(x, p) for x in row] for row in M.rows])


def sqrtTwoP(p):
    """sqrt(2p) in Q(zeta_{4p'}), from the Gauss sum sum_{j<2p} q^{j^2/2} = (1+i) sqrt(p)."""
    P = modularOrder(p)
    r = P // p
    G = CycloNum.fromInt(P, 0)
    for j in range(2 * p):
        G = G + CycloNum.zeta(P, r * j * j)
    i = CycloNum.zeta(P, P)
    z8 = CycloNum.zeta(P, P // 2)
    root = (z8 + z8.inverse()) * G / (i + 1)
    assert root * root == CycloNum.fromInt(P, 2 * p)
    return root


def modularZeta(p):
    """(-1)^p sqrt(p/2) / ([p-1]!)^2, the cointegral scale for which S^2 = id.

    It equals p sqrt(2p) times the default scale of the Radford map.
    """
    f = lift(_qfact(p, p - 1), p)
    return sqrtTwoP(p) * _pm(p) / (f * f * 2)


def drinfeldCoordinates(delta, p):
    return [centerCoordinates(drinfeldImage(delta, a, s, p), check=False).coords
            for a in (1, -1) for s in range(1, p + 1)]


def radfordCoordinates(delta, zeta, p):
    return [centerCoordinates(radfordImage(delta, zeta, a, s, p), check=False).coords
            for a in (1, -1) for s in range(1, p + 1)]


@lru_cache(maxsize=None)
def _sMatrix(delta, zetaKey, p):
    """zetaKey is None (modular scale) or a CycloNum over Q(zeta_{4p})."""
    P = modularOrder(p)
    D = [[lift(x, p) for x in v] for v in drinfeldCoordinates(delta, p)]
    if zetaKey is None:
        z = modularZeta(p)
        R = [[lift(x, p) * z for x in v] for v in radfordCoordinates(delta, 1, p)]
    else:
        R = [[lift(x, p) for x in v] for v in radfordCoordinates(delta, zetaKey, p)]
    inputs = _columns(P, R + D)
    outputs = _columns(P, D + R)
    n = 3 * p - 1
    if inputs.rank() != n:
        raise SingularSystem("Drinfeld and Radford images do not span the center")
    S = solveLeft(inputs, outputs)
    if S * inputs != outputs:
        raise SingularSystem("exchange identities are inconsistent for this cointegral scale")
    return CenterOperator(P, S)


def sMatrix(delta=1, zeta=None, p=2):
    """S on the center over Q(zeta_{4p'}).  ``zeta=None`` uses modularZeta;
    any other scale is tried as given and raises SingularSystem when the
    exchange identities cannot both hold."""
    _checkDelta(delta)
    key = None if zeta is None or zeta == "modular" else _resolveZeta(p, zeta)
    return _sMatrix(delta, key, p)


def checkModularRelations(delta=1, zeta=None, p=2):
    """S^2 = id and (ST)^3 = nu id; raises NotScalar otherwise."""
    S = sMatrix(delta, zeta, p)
    T = CenterOperator(S.p, _liftMatrix(tMatrix(delta, p).matrix, p))
    n = 3 * p - 1
    I = CycloMatrix.identity(S.p, n)
    s2 = (S * S).matrix == I
    st3 = ((S * T) ** 3).matrix
    if not st3.isScalar():
        raise NotScalar("(ST)^3 is not a scalar matrix")
    nu = st3[0, 0]
    st6 = st3 * st3 == I * (nu * nu)
    return {"s2Identity": s2, "nu": nu, "st6": st6, "pass": s2 and st6}


def drinfeldSpanTStable(delta, p):
    """Whether T maps the Drinfeld span into itself."""
    D = _columns(p, drinfeldCoordinates(delta, p))
    TD = tMatrix(delta, p).matrix * D
    r = D.rank()
    both = CycloMatrix(p, [a + b for a, b in zip(D.rows, TD.rows)])
    return both.rank() == r


def _polyAt(poly, x, one):
    out = one * 0
    for c in reversed(poly.coeffs()):
        out = out * x + one * CycloNum(one.p, [c])
    return out


def _chebColumn(poly, delta, p, eScale, wScale):
    """eScale U((-1)^d bh_j) on e_j plus wScale (q-q^-1)^2 U'((-1)^d bh_j) on w+-_j."""
    n = 3 * p - 1
    one = lift(1, p)
    col = [one * 0] * n
    dpoly = poly.derivative()
    for j in range(p + 1):
        x = lift((_z(p, 2 * j) + _z(p, -2 * j)) * _pm(delta), p)
        col[j] = eScale * _polyAt(poly, x, one)
        if 1 <= j <= p - 1:
            w = wScale * lift(_qq(p) * _qq(p), p) * _polyAt(dpoly, x, one)
            col[p + j] = w
            col[2 * p - 1 + j] = w
    return col


def sClosedFormColumns(delta=1, p=2):
    """Closed expressions for S(e_0), S(e_p) and S(w+-_s) at the modular scale.

    Returns {label: column}; the e_s columns for 1 <= s <= p-1 have no
    closed expression and are absent.
    """
    _checkDelta(delta)
    f = lift(_qfact(p, p - 1), p)
    base = modularZeta(p) * f * f * (2 * p)
    half = base * 2
    out = {}
    out["e0"] = _chebColumn(_chebyshevQ(2 * p), delta, p, _pm(p - delta) / half, _pm(p) / half)
    out["e%d" % p] = _chebColumn(_chebyshevQ(p), delta, p, _pm((delta - 1) * (p - 1)) / base,
                                 _pm((delta - 1) * p + 1) / base)
    for s in range(1, p):
        qs2 = lift(_qint(p, s) * _qint(p, s), p)
        out["w+%d" % s] = _chebColumn(_chebyshevQ(s), delta, p, qs2 * _pm(p + delta * (s - 1)) / base,
                                      qs2 * _pm(p + delta * s) / base)
        out["w-%d" % s] = _chebColumn(_chebyshevQ(2 * p - s) - _chebyshevQ(s), delta, p,
                                      qs2 * _pm(delta * (p - s - 1)) / half,
                                      qs2 * _pm(delta * (p - s)) / half)
    return out


def compareSClosedForm(delta=1, p=2):
    """Diagnostic: computed S columns against ``sClosedFormColumns``.

    Each entry records exact equality and equality up to a global sign.
    Nothing is asserted here.
    """
    S = sMatrix(delta, None, p).matrix
    labels = centerLabels(p)
    report = {}
    for lab, col in sClosedFormColumns(delta, p).items():
        k = labels.index(lab)
        actual = S.column(k)
        report[lab] = {"equal": actual == col, "equalUpToSign": actual == [-x for x in col]}
    return report


# ---------------------------------------------------------------------------
# dictionary with the skein side


@dataclass(frozen=True)
class SkeinClass:
    """A coupon class: idempotent ("I") or nilpotent ("N") coupon on n strands."""

    kind: str
    n: int

    def __str__(self):
        return "%s[%d]" % (self.kind, self.n)


def dictionary(p):
    """center label -> list of (SkeinClass, coefficient) with that image.

    I+_p = f_{p-1} <-> e_p;  I+_s + I-_{p-s} = f_{2p-s-1} + f_{2p+s-1} <-> e_s;
    N+_s = f'_{2p-s-1} <-> w+_s / [s];  N-_{p-s} = f'_{2p+s-1} <-> -w-_s / [s];
    I-_p = f_{2p-1} <-> e_0.
    """
    one = CycloNum.fromInt(p, 1)
    out = {"e0": [(SkeinClass("I", 2 * p - 1), one)], "e%d" % p: [(SkeinClass("I", p - 1), one)]}
    for s in range(1, p):
        out["e%d" % s] = [(SkeinClass("I", 2 * p - s - 1), one), (SkeinClass("I", 2 * p + s - 1), one)]
        out["w+%d" % s] = [(SkeinClass("N", 2 * p - s - 1), _qint(p, s))]
        out["w-%d" % s] = [(SkeinClass("N", 2 * p + s - 1), -_qint(p, s))]
    return out


def _skeinClasses(p):
    seen = []
    for terms in dictionary(p).values():
        for c, _ in terms:
            if c not in seen:
                seen.append(c)
    return sorted(seen, key=lambda c: (c.n, c.kind))


def _actOnClasses(decomp, vec):
    """Apply an operator given per strand count as a CouponDecomposition."""
    out = {}
    for cls, c in vec.items():
        d = decomp(cls.n)
        if cls.kind == "I":
            _add(out, cls, c * d.cI)
            if not d.cN.isZero():
                _add(out, SkeinClass("N", cls.n), c * d.cN)
        else:
            _add(out, cls, c * d.nilAction)
    return out


def _add(d, k, v):
    d[k] = d[k] + v if k in d else v


def _toCenter(p, vec):
    """Coordinates of a skein vector on the dictionary images, or None."""
    classes = _skeinClasses(p)
    labels = centerLabels(p)
    dic = dictionary(p)
    zero = CycloNum.fromInt(p, 0)
    rows = []
    for lab in labels:
        row = [zero] * len(classes)
        for cls, c in dic[lab]:
            row[classes.index(cls)] = c
        rows.append(row)
    M = CycloMatrix(p, rows)
    y = CycloMatrix(p, [[vec.get(c, zero) for c in classes]])
    x = solveLeft(M, y)
    if x * M != y:
        return None
    return x.rows[0]


def compareTwistVsT(p):
    """Negative twist on the dictionary classes versus T at delta = 1."""
    if p not in (2, 3):
        raise InvalidParams("compareTwistVsT runs at p in {2, 3}")
    T = tMatrix(1, p).matrix
    dic = dictionary(p)
    labels = centerLabels(p)
    mismatches = []
    step = lambda n: twist(n, -1, "evaluated", p)
    for k, lab in enumerate(labels):
        image = _actOnClasses(step, dict((c, v) for c, v in dic[lab]))
        coords = _toCenter(p, image)
        if coords is None:
            mismatches.append({"column": lab, "reason": "image leaves the dictionary span"})
            continue
        for r, other in enumerate(labels):
            if coords[r] != T[r, k]:
                mismatches.append({"column": lab, "row": other,
                                   "skein": coords[r].toJson(), "center": T[r, k].toJson()})
    return {"pass": not mismatches, "mismatches": mismatches}


def bucklePolynomialAction(p, R):
    """sum_k R_k B_{k} on each dictionary class; B_0 is the identity.

    ``R`` lists coefficients of R(alpha), constant term first.  The
    idempotent coefficient must equal R(-(q^{n+1} + q^{-(n+1)})).
    """
    if p not in (2, 3):
        raise InvalidParams("bucklePolynomialAction runs at p in {2, 3}")
    coeffs = [c if isinstance(c, CycloNum) else CycloNum.fromInt(p, c) for c in R]
    zero = CycloNum.fromInt(p, 0)
    table = []
    ok = True
    for n in sorted({c.n for c in _skeinClasses(p)}):
        cI, cN, nil = zero, zero, zero
        for k, c in enumerate(coeffs):
            if c.isZero():
                continue
            if k == 0:
                cI, nil = cI + c, nil + c
                continue
            d = buckle(k, n, "evaluated", p)
            cI, cN, nil = cI + c * d.cI, cN + c * d.cN, nil + c * d.nilAction
        x = -(_z(p, 2 * (n + 1)) + _z(p, -2 * (n + 1)))
        eig = zero
        for c in reversed(coeffs):
            eig = eig * x + c
        ok = ok and eig == cI
        table.append({"n": n, "cI": cI.toJson(), "cN": cN.toJson(), "nilAction": nil.toJson(),
                      "eigenMatches": eig == cI})
    return {"pass": ok, "table": table}
