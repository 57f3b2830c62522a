"""Skein module of the solid torus and the coupon operators.

Closing a Temperley-Lieb diagram around the annulus gives a polynomial in
the core class ``alpha``.  The operators below act on Jones-Wenzl coupons:

* ``twist``    -- a full framing curl of the n-strand cable,
* ``encircle`` -- two sub-cables of i and n-i strands wound once around each other,
* ``buckle``   -- i meridian loops around the cable.

Each returns a pair ``(cI, cN)``: the operator sandwiched by f_n equals
``cI f_n + cN f'_n``.  ``oracleCoupon`` recomputes the same sandwich from
braid words through the Kauffman relation, independently of the closed forms.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from .coeff import GENERIC, cycloRing
from .errors import (InvalidArgs, RenormalizationUndefined, TooLarge, UnsupportedCase)
from .jw import jonesWenzl, jonesWenzlNil
from .tl import TLElement, tlBasis, resolveBraid

CROSSING_BUDGET = 48


# ---------------------------------------------------------------------------
# annulus elements


class AnnulusElement:
    """Polynomial in alpha with coefficients in a ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=None):
        self.ring = ring
        self.coeffs = {k: ring.coerce(v) for k, v in (coeffs or {}).items()}
        self.coeffs = {k: v for k, v in self.coeffs.items() if not v.isZero()}

    @classmethod
    def fromInts(cls, ring, ints):
        return cls(ring, {k: c for k, c in enumerate(ints) if c})

    @property
    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def isZero(self):
        return not self.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return AnnulusElement(self.ring, out)

    def __neg__(self):
        return AnnulusElement(self.ring, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AnnulusElement):
            out = {}
            for a, x in self.coeffs.items():
                for b, y in other.coeffs.items():
                    out[a + b] = out[a + b] + x * y if a + b in out else x * y
            return AnnulusElement(self.ring, out)
        c = self.ring.coerce(other)
        return AnnulusElement(self.ring, {k: v * c for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AnnulusElement):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def toRing(self, ring):
        return AnnulusElement(ring, {k: ring.coerce(v) for k, v in self.coeffs.items()})

    def substitute(self, x):
        total = self.ring.zero()
        for k, v in self.coeffs.items():
            total = total + v * (x ** k)
        return total

    def __repr__(self):
        if not self.coeffs:
            return "AnnulusElement(0)"
        return "AnnulusElement(%s)" % " + ".join("(%r)*alpha^%d" % (self.coeffs[k], k) for k in sorted(self.coeffs))

    def toJson(self):
        return {"ring": self.ring.key, "alphaCoeffs": {str(k): self.coeffs[k].toJson() for k in sorted(self.coeffs)}}


@lru_cache(maxsize=None)
def _chebyshevInts(s):
    if s == 0:
        return ()
    if s == 1:
        return (1,)
    a, b = [0], [1]  # U_0, U_1
    for _ in range(s - 1):
        c = [0] + b
        for k, v in enumerate(a):
            c[k] -= v
        a, b = b, c
    return tuple(b)


def chebyshev(s, ring=GENERIC):
    """U_s(alpha) with U_0 = 0, U_1 = 1, x U_s = U_{s-1} + U_{s+1}."""
    if s < 0:
        raise InvalidArgs("s must be >= 0")
    return AnnulusElement.fromInts(ring, _chebyshevInts(s))


# ---------------------------------------------------------------------------
# closure


def _closeDiagram(partner, n):
    """(number of core-parallel loops, number of contractible loops)."""
    seen = [False] * (2 * n)
    core = contractible = 0
    for start in range(2 * n):
        if seen[start]:
            continue
        x = start
        wind = 0
        while True:
            seen[x] = True
            y = partner[x]
            seen[y] = True
            if y >= n:  # top point k glued to bottom point k, going down
                x = y - n
                wind += 1
            else:
                x = y + n
                wind -= 1
            if x == start:
                break
        assert abs(wind) <= 1, "embedded curve with winding %d" % wind
        if wind:
            core += 1
        else:
            contractible += 1
    return core, contractible


@lru_cache(maxsize=None)
def _closureTable(n):
    B = tlBasis(n)
    return [_closeDiagram(d, n) for d in B.diagrams]


def annularClosure(x):
    table = _closureTable(x.n)
    ring = x.ring
    delta = ring.delta()
    out = {}
    for k in x.terms:
        core, loops = table[k]
        c = x.coeffOf(k) * (delta ** loops) if loops else x.coeffOf(k)
        out[core] = out[core] + c if core in out else c
    return AnnulusElement(ring, out)


def skeinTrace(a):
    """Substitute alpha -> delta."""
    return a.substitute(a.ring.delta())


def closureOfJW(n, p, which="idem", variant="evaluated"):
    if which == "idem":
        return annularClosure(jonesWenzl(n, p, variant))
    if which == "nil":
        return annularClosure(jonesWenzlNil(n, p, variant))
    if which == "nilRenormalized":
        if n < p:
            raise RenormalizationUndefined("the nilpotent is zero below p")
        l = n // p
        g = annularClosure(jonesWenzlNil(n, p, "generic"))
        g = g * (GENERIC.one() / GENERIC.qint(l * p))
        if variant == "generic":
            return g
        return g.toRing(cycloRing(p))
    raise InvalidArgs("which must be idem, nil or nilRenormalized")


# ---------------------------------------------------------------------------
# closed forms


@dataclass(frozen=True)
class CouponDecomposition:
    """cI * f_n + cN * f'_n; ``nilAction`` is the scalar by which the same
    operator acts on the nilpotent coupon."""

    cI: Any
    cN: Any
    nilAction: Optional[Any] = None

    def element(self, n, p, variant="evaluated"):
        f = jonesWenzl(n, p, variant)
        out = f.scale(self.cI)
        if not _isZero(self.cN):
            out = out + jonesWenzlNil(n, p, variant).scale(self.cN)
        return out

    def toJson(self):
        d = {"cI": self.cI.toJson(), "cN": self.cN.toJson()}
        if self.nilAction is not None:
            d["nilAction"] = self.nilAction.toJson()
        return d


def _isZero(c):
    return c.isZero() if hasattr(c, "isZero") else c == 0


def _idemOnly(n, p):
    return p is None or n <= p - 1 or (n + 1) % p == 0


def _ring(p, variant):
    if variant == "generic":
        return GENERIC
    if p is None:
        raise InvalidArgs("evaluated variant needs p")
    return cycloRing(p)


def _genericNilSquare(n, p):
    """The scalar c with f'_n^2 = c f'_n generically: -[lp]/[lp-1]."""
    lp = (n // p) * p
    return -(GENERIC.qint(lp) / GENERIC.qint(lp - 1))


def twist(n, sign=1, variant="evaluated", p=None):
    if n < 1 or sign not in (1, -1):
        raise InvalidArgs("need n >= 1 and sign = +-1")
    R = _ring(p, variant)
    s = sign
    sgn = (-1) ** n
    if variant == "generic":
        A = R.A
        cI = A(s * n * (n + 2)) * sgn
        if _idemOnly(n, p):
            return CouponDecomposition(cI, R.zero(), cI)
        l = n // p
        lp = l * p
        m = n - lp + 1
        cN = (A(s * n * (n + 2) - s * 2 * lp * m) * (A(2) - A(-2)) * R.qint(lp - 1) * R.qint(m * lp)
              / R.qint(lp)) * (s * sgn)
        return CouponDecomposition(cI, cN, cI + cN * _genericNilSquare(n, p))
    z = R.A
    cI = z(s * n * (n + 2)) * sgn
    if _idemOnly(n, p):
        return CouponDecomposition(cI, R.zero(), cI)
    l = n // p
    qq = R.q(1) - R.q(-1)
    cN = z(s * n * (n + 2)) * qq * (n - l * p + 1) * (-s * sgn)
    return CouponDecomposition(cI, cN, cI)


def encircle(i, n, sign=1, variant="evaluated", p=None):
    if not 1 <= i <= n - 1 or sign not in (1, -1):
        raise InvalidArgs("need 1 <= i <= n-1 and sign = +-1")
    R = _ring(p, variant)
    s = sign
    A = R.A
    cI = A(s * 2 * (n - i) * i)
    if _idemOnly(n, p):
        return CouponDecomposition(cI, R.zero(), cI)
    l = n // p
    lp = l * p
    if i != 1 and i < lp - 1:
        raise UnsupportedCase("no closed form for 1 < i < lp-1 (i=%d, n=%d, p=%d)" % (i, n, p))
    if variant == "generic":
        if i >= lp - 1:
            cN = (A(s * 2 * (n - i) * (i - lp)) * (A(2) - A(-2)) * R.qint(lp - 1) * R.qint((n - i) * lp)
                  / R.qint(lp)) * s
        else:
            cN = A(s * 2 * (lp - 3)) * (A(2) - A(-2)) * R.qint(n - lp + 1) * s
        return CouponDecomposition(cI, cN, cI + cN * _genericNilSquare(n, p))
    qq = R.q(1) - R.q(-1)
    if i >= lp - 1:
        cN = R.q(s * (n - i) * i) * qq * (n - i) * (-s)
    else:
        cN = R.q(-s * 3) * qq * R.qint(n + 1) * s
    return CouponDecomposition(cI, cN, cI)


def buckle(i, n, variant="evaluated", p=None):
    if i < 1 or n < 1:
        raise InvalidArgs("need i >= 1 and n >= 1")
    R = _ring(p, variant)
    A = R.A
    X = A(2 * (n + 1)) + A(-2 * (n + 1))
    cI = X ** i * (-1) ** i
    if _idemOnly(n, p):
        return CouponDecomposition(cI, R.zero(), cI)
    l = n // p
    lp = l * p
    if variant == "generic":
        Y = A(2 * (2 * lp - n - 1)) + A(-2 * (2 * lp - 1 - n))
        geo = R.zero()
        for k in range(i):
            geo = geo + (Y ** k) * (X ** (i - 1 - k))
        cN = -((A(2) - A(-2)) ** 2) * R.qint(lp - 1) * R.qint(n - lp + 1) * geo * (-1) ** (i - 1)
        return CouponDecomposition(cI, cN, (Y ** i) * (-1) ** i)
    qq = R.q(1) - R.q(-1)
    cN = (X ** (i - 1)) * (-1) ** (i - 1) * i * qq * qq * R.qint(n + 1)
    return CouponDecomposition(cI, cN, cI)


# ---------------------------------------------------------------------------
# Kauffman-resolution oracles


def fullTwistWord(n):
    return [k for _ in range(n) for k in range(1, n)]


def inverseWord(word):
    return [-x for x in reversed(word)]


def blockCrossingWord(a, b):
    """Braid moving a left block of a strands across a right block of b strands."""
    word = []
    for k in range(a, 0, -1):
        word.extend(range(k, k + b))
    return word


def encircleWord(i, n):
    return blockCrossingWord(i, n - i) + blockCrossingWord(n - i, i)


def buckleWord(n):
    """On n+1 strands: the last strand runs around the whole cable."""
    return list(range(n, 0, -1)) + list(range(1, n + 1))


def _applyWord(x, word):
    ring = x.ring
    for letter in word:
        k = abs(letter)
        sgn = 1 if letter > 0 else -1
        x = x.scale(ring.A(sgn)) + x.rightMulGenerator(k).scale(ring.A(-sgn))
    return x


@lru_cache(maxsize=None)
def _partialTraceTable(n):
    """Close the last strand of each TL_{n+1} diagram: (TL_n index, loops)."""
    N = n + 1
    src, dst = tlBasis(N), tlBasis(n)
    bot, top = n, 2 * N - 1
    out = []
    for d in src.diagrams:
        def follow(x):
            y = d[x]
            while y in (bot, top):
                nxt = top if y == bot else bot
                y = d[nxt]
            return y
        loops = 1 if d[bot] == top else 0

        def rename(x):
            return x if x < n else x - 1  # top N+k -> n+k

        partner = [None] * (2 * n)
        for x in list(range(n)) + list(range(N, N + n)):
            y = follow(x)
            partner[rename(x)] = rename(y)
        out.append((dst.index[tuple(partner)], loops))
    return out


def partialTrace(x):
    """Close the last strand of a TL_{n+1} element."""
    n = x.n - 1
    table = _partialTraceTable(n)
    ring = x.ring
    delta = ring.delta()
    out = TLElement.zero(n, ring)
    acc = {}
    for k in x.terms:
        d, loops = table[k]
        c = x.coeffOf(k) * delta if loops else x.coeffOf(k)
        acc[d] = acc[d] + c if d in acc else c
    for d, c in acc.items():
        e = TLElement(n, ring, {d: _one()}, None, _normalize=False).scale(c)
        out = out + e
    return out


def _one():
    import flint
    return flint.fmpq_poly([1])


def _sandwichRing(p, variant):
    return GENERIC if variant == "generic" else cycloRing(p)


def oracleCoupon(kind, n, p=None, variant="evaluated", sign=1, i=1):
    """Sandwich of the braid realising ``kind`` between two copies of f_n."""
    f = jonesWenzl(n, p, variant)
    ring = f.ring
    if kind == "twist":
        word = fullTwistWord(n)
        if sign < 0:
            word = inverseWord(word)
        if len(word) > CROSSING_BUDGET:
            raise TooLarge("%d crossings exceed the budget" % len(word))
        x = _applyWord(f, word) * f
        return x.scale(ring.A(3 * n * sign) * (-1) ** n)
    if kind == "encircle":
        word = encircleWord(i, n)
        if sign < 0:
            word = inverseWord(word)
        if len(word) > CROSSING_BUDGET:
            raise TooLarge("%d crossings exceed the budget" % len(word))
        return _applyWord(f, word) * f
    if kind == "buckle":
        word = buckleWord(n)
        if sign < 0:
            word = inverseWord(word)
        loop = partialTrace(resolveBraid(n + 1, word, ring))
        x = f
        for _ in range(i):
            x = x * loop
        return x * f
    raise InvalidArgs("unknown coupon kind %r" % (kind,))
