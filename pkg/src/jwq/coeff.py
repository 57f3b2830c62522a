"""Exact coefficient rings.

Three value types live here:

* ``LaurentPoly`` -- Laurent polynomials in ``A`` with rational coefficients,
* ``RatFunc`` -- reduced rational functions in ``A``,
* ``CycloNum`` -- elements of the cyclotomic field Q(zeta_{4p}).

The evaluation ``A -> zeta_{4p}`` sends ``A^2`` to ``q = exp(i pi / p)``.
Everything is backed by ``flint.fmpq_poly``.

Two ring objects, ``GENERIC`` and ``cycloRing(p)``, give the rest of the
package a uniform way to build quantum integers, the loop value and powers
of ``A`` without caring which coefficient type is in play.
"""

from fractions import Fraction
from functools import lru_cache
import cmath

import flint

from .errors import InvalidArgs, NotEvaluable

fmpq_poly = flint.fmpq_poly
fmpq = flint.fmpq

_X = fmpq_poly([0, 1])


def _toFmpq(c):
    if isinstance(c, fmpq):
        return c
    if isinstance(c, Fraction):
        return fmpq(c.numerator, c.denominator)
    if isinstance(c, str):
        if "/" in c:
            a, b = c.split("/")
            return fmpq(int(a), int(b))
        return fmpq(int(c))
    return fmpq(c)


def _fmt(c):
    c = fmpq(c)
    if c.q == 1:
        return str(c.p)
    return "%d/%d" % (c.p, c.q)


def _monomial(k):
    return fmpq_poly([0] * k + [1])


def _valuation(poly):
    """Largest k with x^k dividing poly (poly nonzero)."""
    cs = poly.coeffs()
    k = 0
    while cs[k] == 0:
        k += 1
    return k


# ---------------------------------------------------------------------------
# Laurent polynomials


class LaurentPoly:
    """``A^minExp * poly(A)`` with ``poly(0) != 0``; zero has empty coeffs."""

    __slots__ = ("minExp", "poly")

    def __init__(self, minExp=0, coeffs=()):
        poly = fmpq_poly([_toFmpq(c) for c in coeffs]) if not isinstance(coeffs, fmpq_poly) else coeffs
        self.minExp, self.poly = _normLaurent(minExp, poly)

    @classmethod
    def _raw(cls, minExp, poly):
        obj = cls.__new__(cls)
        obj.minExp, obj.poly = _normLaurent(minExp, poly)
        return obj

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw(k, fmpq_poly([_toFmpq(c)]))

    @classmethod
    def fromDict(cls, d):
        if not d:
            return cls()
        lo = min(d)
        cs = [0] * (max(d) - lo + 1)
        for k, v in d.items():
            cs[k - lo] = _toFmpq(v)
        return cls(lo, cs)

    @property
    def coeffs(self):
        return list(self.poly.coeffs())

    @property
    def maxExp(self):
        return self.minExp + self.poly.degree()

    def isZero(self):
        return self.poly.is_zero()

    def toDict(self):
        return {self.minExp + k: c for k, c in enumerate(self.poly.coeffs()) if c != 0}

    def __add__(self, other):
        other = _asLaurent(other)
        if other is NotImplemented:
            return other
        if self.isZero():
            return other
        if other.isZero():
            return self
        lo = min(self.minExp, other.minExp)
        poly = self.poly * _monomial(self.minExp - lo) + other.poly * _monomial(other.minExp - lo)
        return LaurentPoly._raw(lo, poly)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.minExp, -self.poly)

    def __sub__(self, other):
        other = _asLaurent(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _asLaurent(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._raw(self.minExp + other.minExp, self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if self.poly.degree() != 0:
                raise InvalidArgs("only monomials have Laurent inverses")
            return LaurentPoly._raw(-self.minExp * (-k), fmpq_poly([1 / self.poly.coeffs()[0]]) ** (-k))
        return LaurentPoly._raw(self.minExp * k, self.poly ** k)

    def __eq__(self, other):
        other = _asLaurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self.minExp == other.minExp and self.poly == other.poly

    def __hash__(self):
        return hash((self.minExp, tuple(self.poly.coeffs())))

    def substitute(self, value):
        """Evaluate at ``A = value`` (any ring element supporting ** and +)."""
        total = None
        for k, c in self.toDict().items():
            term = (value ** k) * c
            total = term if total is None else total + term
        return total if total is not None else 0 * value

    def __repr__(self):
        return "LaurentPoly(%s)" % formatLaurent(self.toDict(), "A")

    def toJson(self):
        return {"minExp": self.minExp if not self.isZero() else 0, "coeffs": [_fmt(c) for c in self.poly.coeffs()]}

    @classmethod
    def fromJson(cls, d):
        return cls(d["minExp"], [_toFmpq(c) for c in d["coeffs"]])


def _normLaurent(minExp, poly):
    if poly.is_zero():
        return 0, fmpq_poly()
    v = _valuation(poly)
    if v:
        poly = fmpq_poly(poly.coeffs()[v:])
    return minExp + v, poly


def _asLaurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction, fmpq)):
        return LaurentPoly._raw(0, fmpq_poly([_toFmpq(x)]))
    return NotImplemented


def formatLaurent(d, var):
    if not d:
        return "0"
    parts = []
    for k in sorted(d, reverse=True):
        c = fmpq(d[k])
        mono = "" if k == 0 else (var if k == 1 else "%s^%d" % (var, k))
        if mono == "":
            s = _fmt(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = "%s*%s" % (_fmt(c), mono)
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


# ---------------------------------------------------------------------------
# Rational functions


class RatFunc:
    """Reduced fraction ``num/den`` of Laurent polynomials in ``A``.

    ``den`` is a monic polynomial with nonzero constant term; all powers of
    ``A`` are carried by ``num``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            if den is not None:
                num = num / den
            self.num, self.den = num.num, num.den
            return
        num = _asLaurent(num)
        den = LaurentPoly(0, [1]) if den is None else _asLaurent(den)
        if den.isZero():
            raise ZeroDivisionError("zero denominator")
        shift = num.minExp - den.minExp
        self.num, self.den = _reduceFraction(num.poly, den.poly, shift)

    @classmethod
    def fromPolys(cls, numPoly, denPoly, shift=0):
        """``A^shift * numPoly / denPoly`` for ordinary polynomials."""
        obj = cls.__new__(cls)
        if denPoly.is_zero():
            raise ZeroDivisionError("zero denominator")
        if numPoly.is_zero():
            obj.num, obj.den = LaurentPoly(), LaurentPoly(0, [1])
            return obj
        a = _valuation(numPoly)
        b = _valuation(denPoly)
        if a:
            numPoly = fmpq_poly(numPoly.coeffs()[a:])
        if b:
            denPoly = fmpq_poly(denPoly.coeffs()[b:])
        obj.num, obj.den = _reduceFraction(numPoly, denPoly, shift + a - b)
        return obj

    def isZero(self):
        return self.num.isZero()

    def __add__(self, other):
        other = _asRat(other)
        if other is NotImplemented:
            return other
        lo = min(self.num.minExp, other.num.minExp)
        n1 = self.num.poly * _monomial(self.num.minExp - lo)
        n2 = other.num.poly * _monomial(other.num.minExp - lo)
        if self.den.poly == other.den.poly:
            return RatFunc.fromPolys(n1 + n2, self.den.poly, lo)
        return RatFunc.fromPolys(n1 * other.den.poly + n2 * self.den.poly, self.den.poly * other.den.poly, lo)

    __radd__ = __add__

    def __neg__(self):
        obj = RatFunc.__new__(RatFunc)
        obj.num, obj.den = -self.num, self.den
        return obj

    def __sub__(self, other):
        other = _asRat(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _asRat(other)
        if other is NotImplemented:
            return other
        return RatFunc.fromPolys(self.num.poly * other.num.poly, self.den.poly * other.den.poly,
                                 self.num.minExp + other.num.minExp)

    __rmul__ = __mul__

    def inverse(self):
        if self.isZero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc.fromPolys(self.den.poly, self.num.poly, -self.num.minExp)

    def __truediv__(self, other):
        other = _asRat(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _asRat(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc.fromPolys(self.num.poly ** k, self.den.poly ** k, self.num.minExp * k)

    def __eq__(self, other):
        other = _asRat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def isLaurent(self):
        return self.den.poly.degree() == 0

    def asLaurent(self):
        if not self.isLaurent():
            raise InvalidArgs("not a Laurent polynomial")
        return self.num

    def __repr__(self):
        if self.isLaurent():
            return "RatFunc(%s)" % formatLaurent(self.num.toDict(), "A")
        return "RatFunc((%s)/(%s))" % (formatLaurent(self.num.toDict(), "A"), formatLaurent(self.den.toDict(), "A"))

    def toJson(self):
        return {"num": self.num.toJson(), "den": self.den.toJson()}

    @classmethod
    def fromJson(cls, d):
        return cls(LaurentPoly.fromJson(d["num"]), LaurentPoly.fromJson(d["den"]))


def _reduceFraction(numPoly, denPoly, shift):
    g = numPoly.gcd(denPoly)
    if g.degree() > 0:
        numPoly = _exactDiv(numPoly, g)
        denPoly = _exactDiv(denPoly, g)
    lead = denPoly.coeffs()[-1]
    if lead != 1:
        numPoly = numPoly / lead
        denPoly = denPoly / lead
    return LaurentPoly._raw(shift, numPoly), LaurentPoly._raw(0, denPoly)


def _exactDiv(a, b):
    quo, rem = divmod(a, b)
    assert rem.is_zero()
    return quo


def _asRat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (LaurentPoly, int, Fraction, fmpq)):
        return RatFunc(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# Cyclotomic numbers


@lru_cache(maxsize=None)
def cyclotomicModulus(order):
    """The ``order``-th cyclotomic polynomial as an fmpq_poly."""
    return fmpq_poly(flint.fmpz_poly.cyclotomic(order).coeffs())


class CycloNum:
    """An element of Q(zeta_{4p}) as a polynomial in zeta reduced modulo
    the 4p-th cyclotomic polynomial."""

    __slots__ = ("p", "poly")

    def __init__(self, p, coeffs=()):
        if p < 1:
            raise InvalidArgs("p must be positive")
        poly = coeffs if isinstance(coeffs, fmpq_poly) else fmpq_poly([_toFmpq(c) for c in coeffs])
        self.p = p
        self.poly = poly % cyclotomicModulus(4 * p)

    @classmethod
    def _raw(cls, p, poly):
        obj = cls.__new__(cls)
        obj.p = p
        obj.poly = poly
        return obj

    @classmethod
    def zeta(cls, p, k=1):
        """``zeta_{4p}^k`` for any integer k."""
        return cls(p, _monomial(k % (4 * p)))

    @classmethod
    def fromInt(cls, p, c):
        return cls._raw(p, fmpq_poly([_toFmpq(c)]))

    @property
    def order(self):
        return 4 * self.p

    @property
    def coeffs(self):
        d = cyclotomicModulus(4 * self.p).degree()
        cs = list(self.poly.coeffs())
        return cs + [fmpq(0)] * (d - len(cs))

    def isZero(self):
        return self.poly.is_zero()

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.p != self.p:
                raise InvalidArgs("cyclotomic numbers of different orders")
            return other
        if isinstance(other, (int, Fraction, fmpq)):
            return CycloNum._raw(self.p, fmpq_poly([_toFmpq(other)]))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._raw(self.p, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._raw(self.p, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._raw(self.p, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloNum._raw(self.p, (self.poly * other.poly) % cyclotomicModulus(4 * self.p))

    __rmul__ = __mul__

    def inverse(self):
        if self.isZero():
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        g, s, _ = self.poly.xgcd(cyclotomicModulus(4 * self.p))
        # g is a nonzero constant since the modulus is irreducible
        return CycloNum._raw(self.p, (s / g.coeffs()[0]) % cyclotomicModulus(4 * self.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNum.fromInt(self.p, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, fmpq)):
            other = CycloNum.fromInt(self.p, other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.p == other.p and self.poly == other.poly

    def __hash__(self):
        return hash((self.p, tuple(self.poly.coeffs())))

    def conjugate(self):
        """Complex conjugation, i.e. zeta -> zeta^{-1}."""
        return self.galois(-1)

    def galois(self, k):
        """The automorphism zeta -> zeta^k (k prime to 4p)."""
        total = CycloNum.fromInt(self.p, 0)
        for e, c in enumerate(self.poly.coeffs()):
            if c != 0:
                total = total + CycloNum.zeta(self.p, k * e) * c
        return total

    def toComplex(self):
        z = cmath.exp(1j * cmath.pi / (2 * self.p))
        return sum(complex(float(c)) * z ** e for e, c in enumerate(self.poly.coeffs()))

    def isRational(self):
        return self.poly.degree() <= 0

    def rational(self):
        if not self.isRational():
            raise InvalidArgs("not rational")
        cs = self.poly.coeffs()
        return cs[0] if cs else fmpq(0)

    def __repr__(self):
        return "CycloNum(%d, %s)" % (4 * self.p, formatLaurent(
            {e: c for e, c in enumerate(self.poly.coeffs()) if c != 0}, "z"))

    def toJson(self):
        return {"order": 4 * self.p, "coeffs": [_fmt(c) for c in self.coeffs]}

    @classmethod
    def fromJson(cls, d):
        return cls(d["order"] // 4, [_toFmpq(c) for c in d["coeffs"]])


# ---------------------------------------------------------------------------
# Evaluation, quantum integers, Gauss scalar


def evaluatePoly(poly, p):
    """Ordinary polynomial in A evaluated at zeta_{4p}."""
    return CycloNum(p, poly)


def evaluateLaurent(x, p):
    return CycloNum(p, x.poly) * CycloNum.zeta(p, x.minExp)


def evaluateAtRoot(x, p):
    """num(zeta_{4p}) / den(zeta_{4p}); NotEvaluable at a pole."""
    if p < 2:
        raise InvalidArgs("evaluation requires p >= 2")
    if isinstance(x, (LaurentPoly, int, Fraction, fmpq)):
        x = RatFunc(x)
    den = evaluateLaurent(x.den, p)
    if den.isZero():
        raise NotEvaluable("denominator vanishes at zeta_%d" % (4 * p), where=x)
    return evaluateLaurent(x.num, p) / den


def _genericQint(n):
    if n == 0:
        return LaurentPoly()
    if n < 0:
        return -_genericQint(-n)
    return LaurentPoly.fromDict({2 * n - 2 - 4 * k: 1 for k in range(n)})


def qinteger(n, p=None):
    """[n] for any integer n (generic LaurentPoly if p is None)."""
    if p is None:
        return _genericQint(n)
    return cycloRing(p).qint(n)


def qnum(kind, n, m=None, p=None):
    """Quantum integer, factorial or binomial.

    ``kind`` is ``"int"``, ``"fact"`` or ``"binom"``.  With ``p=None`` the
    value is a Laurent polynomial in A (the variable being ``A^2``);
    otherwise it is evaluated in Q(zeta_{4p}).
    """
    if n < 0:
        raise InvalidArgs("n must be nonnegative")
    if p is not None and p < 2:
        raise InvalidArgs("evaluated ring requires p >= 2")
    if kind == "int":
        return qinteger(n, p)
    if kind == "fact":
        return qfactorial(n, p)
    if kind == "binom":
        if m is None or m < 0 or m > n:
            raise InvalidArgs("binomial requires 0 <= m <= n")
        return qbinomial(n, m, p)
    raise InvalidArgs("unknown kind %r" % (kind,))


def qfactorial(n, p=None):
    result = LaurentPoly(0, [1]) if p is None else CycloNum.fromInt(p, 1)
    for k in range(1, n + 1):
        result = result * qinteger(k, p)
    return result


def qbinomial(n, m, p=None):
    """Gaussian binomial; computed by the q-Pascal rule so it is defined
    at roots of unity even where factorials vanish."""
    if m < 0 or m > n:
        return LaurentPoly() if p is None else CycloNum.fromInt(p, 0)
    return _qbinomCached(n, m, p)


@lru_cache(maxsize=None)
def _qbinomCached(n, m, p):
    one = LaurentPoly(0, [1]) if p is None else CycloNum.fromInt(p, 1)
    if m == 0 or m == n:
        return one
    # [n m] = q^{-m} [n-1 m] + q^{n-m} [n-1 m-1],  q = A^2
    if p is None:
        qm = LaurentPoly.monomial(-2 * m)
        qnm = LaurentPoly.monomial(2 * (n - m))
    else:
        qm = CycloNum.zeta(p, -2 * m)
        qnm = CycloNum.zeta(p, 2 * (n - m))
    return qm * _qbinomCached(n - 1, m, p) + qnm * _qbinomCached(n - 1, m - 1, p)


def gaussScalar(p):
    """kappa = 2/G with G the quadratic Gauss sum of zeta_{4p}."""
    if p < 2:
        raise InvalidArgs("p must be >= 2")
    G = CycloNum.fromInt(p, 0)
    for j in range(4 * p):
        G = G + CycloNum.zeta(p, j * j)
    return CycloNum.fromInt(p, 2) / G


# ---------------------------------------------------------------------------
# Ring objects


class GenericRing:
    """Q(A).  Elements are RatFunc."""

    key = "generic"
    p = None

    def zero(self):
        return RatFunc(0)

    def one(self):
        return RatFunc(1)

    def fromInt(self, c):
        return RatFunc(c)

    def A(self, k=1):
        return RatFunc(LaurentPoly.monomial(k))

    def q(self, k=1):
        return self.A(2 * k)

    def qint(self, n):
        return RatFunc(_genericQint(n))

    def delta(self):
        return RatFunc(LaurentPoly.fromDict({2: -1, -2: -1}))

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        return RatFunc(x)

    def __eq__(self, other):
        return isinstance(other, GenericRing)

    def __hash__(self):
        return hash("generic")

    def __repr__(self):
        return "GENERIC"


class CycloRing:
    """Q(zeta_{4p}) with A = zeta_{4p}."""

    key = "cyclo"

    def __init__(self, p):
        if p < 2:
            raise InvalidArgs("p must be >= 2")
        self.p = p

    def zero(self):
        return CycloNum.fromInt(self.p, 0)

    def one(self):
        return CycloNum.fromInt(self.p, 1)

    def fromInt(self, c):
        return CycloNum.fromInt(self.p, c)

    def A(self, k=1):
        return CycloNum.zeta(self.p, k)

    def q(self, k=1):
        return CycloNum.zeta(self.p, 2 * k)

    def qint(self, n):
        return _cycloQint(self.p, n)

    def delta(self):
        return -(self.q(1) + self.q(-1))

    def i(self):
        return CycloNum.zeta(self.p, self.p)

    def coerce(self, x):
        if isinstance(x, CycloNum):
            return x
        if isinstance(x, (RatFunc, LaurentPoly)):
            return evaluateAtRoot(x, self.p)
        return CycloNum.fromInt(self.p, x)

    def __eq__(self, other):
        return isinstance(other, CycloRing) and other.p == self.p

    def __hash__(self):
        return hash(("cyclo", self.p))

    def __repr__(self):
        return "cycloRing(%d)" % self.p


@lru_cache(maxsize=None)
def _cycloQint(p, n):
    return evaluateLaurent(_genericQint(n), p)


GENERIC = GenericRing()


@lru_cache(maxsize=None)
def cycloRing(p):
    return CycloRing(p)


def ringFor(p):
    """GENERIC when p is None, else the cyclotomic ring."""
    return GENERIC if p is None else cycloRing(p)


# ---------------------------------------------------------------------------
# Matrices over Q(zeta) via the regular representation


class CycloMatrix:
    """Dense matrix over Q(zeta_{4p}).

    Rank, inverse and linear solves go through the embedding of Q(zeta)
    into d x d rational matrices (d = phi(4p)), where flint does the work.
    """

    def __init__(self, p, rows):
        self.p = p
        self.rows = [[x if isinstance(x, CycloNum) else CycloNum.fromInt(p, x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    @classmethod
    def zeros(cls, p, n, m):
        z = CycloNum.fromInt(p, 0)
        return cls(p, [[z] * m for _ in range(n)])

    @classmethod
    def identity(cls, p, n):
        M = cls.zeros(p, n, n)
        for k in range(n):
            M.rows[k][k] = CycloNum.fromInt(p, 1)
        return M

    @classmethod
    def fromSparse(cls, p, n, m, entries):
        M = cls.zeros(p, n, m)
        for (r, c), v in entries.items():
            M.rows[r][c] = v
        return M

    def __getitem__(self, rc):
        r, c = rc
        return self.rows[r][c]

    def __setitem__(self, rc, v):
        r, c = rc
        self.rows[r][c] = v

    def __mul__(self, other):
        if isinstance(other, CycloMatrix):
            return _fromEmbedding(self.p, self.nrows, other.ncols, self.embed() * other.embed())
        return CycloMatrix(self.p, [[x * other for x in r] for r in self.rows])

    def __rmul__(self, other):
        return CycloMatrix(self.p, [[other * x for x in r] for r in self.rows])

    def __add__(self, other):
        return CycloMatrix(self.p, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return CycloMatrix(self.p, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return CycloMatrix(self.p, [[-a for a in r] for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, CycloMatrix) and self.rows == other.rows

    def __pow__(self, k):
        result = CycloMatrix.identity(self.p, self.nrows)
        for _ in range(k):
            result = result * self
        return result

    def isZero(self):
        return all(x.isZero() for r in self.rows for x in r)

    def transpose(self):
        return CycloMatrix(self.p, [list(c) for c in zip(*self.rows)])

    def column(self, j):
        return [r[j] for r in self.rows]

    def embed(self):
        d = cyclotomicModulus(4 * self.p).degree()
        blocks = {}
        M = flint.fmpq_mat(self.nrows * d, self.ncols * d)
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if x.isZero():
                    continue
                key = x
                blk = blocks.get(key)
                if blk is None:
                    blk = blocks[key] = _multiplicationMatrix(x)
                for a in range(d):
                    for b in range(d):
                        v = blk[a][b]
                        if v != 0:
                            M[i * d + a, j * d + b] = v
        return M

    def rank(self):
        d = cyclotomicModulus(4 * self.p).degree()
        r = self.embed().rank()
        assert r % d == 0
        return r // d

    def inverse(self):
        if self.nrows != self.ncols or self.rank() != self.nrows:
            raise ZeroDivisionError("singular matrix")
        return _fromEmbedding(self.p, self.nrows, self.ncols, self.embed().inv())

    def isScalar(self):
        if self.nrows != self.ncols:
            return False
        c = self.rows[0][0]
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                if (i == j and x != c) or (i != j and not x.isZero()):
                    return False
        return True

    def __repr__(self):
        return "CycloMatrix(%d x %d over Q(zeta_%d))" % (self.nrows, self.ncols, 4 * self.p)


def _multiplicationMatrix(x):
    """Matrix of y -> x*y in the power basis (column k = x * zeta^k)."""
    p = x.p
    d = cyclotomicModulus(4 * p).degree()
    cols = []
    for k in range(d):
        cols.append((x * CycloNum.zeta(p, k)).coeffs)
    return [[cols[b][a] for b in range(d)] for a in range(d)]


def _fromEmbedding(p, n, m, E):
    d = cyclotomicModulus(4 * p).degree()
    rows = []
    for i in range(n):
        row = []
        for j in range(m):
            row.append(CycloNum._raw(p, fmpq_poly([E[i * d + a, j * d] for a in range(d)])))
        rows.append(row)
    return CycloMatrix(p, rows)


def solveLeft(M, N):
    """The unique X with X*M = N, assuming M has full row rank."""
    if M.rank() != M.nrows:
        raise ZeroDivisionError("left factor not of full row rank")
    Mt = M.transpose()
    # X M = N  <=>  M^T X^T = N^T; pick an invertible square block of rows of M^T
    pivots = _independentRows(Mt)
    sub = CycloMatrix(M.p, [Mt.rows[k] for k in pivots])
    rhs = CycloMatrix(M.p, [N.transpose().rows[k] for k in pivots])
    Xt = sub.inverse() * rhs
    return Xt.transpose()


def _independentRows(M):
    chosen = []
    for k in range(M.nrows):
        trial = CycloMatrix(M.p, [M.rows[j] for j in chosen + [k]])
        if trial.rank() == len(chosen) + 1:
            chosen.append(k)
        if len(chosen) == M.ncols:
            break
    return chosen
