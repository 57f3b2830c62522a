"""Temperley-Lieb algebras as diagram algebras.

Points ``0..n-1`` run along the bottom edge from left to right and
``n..2n-1`` along the top edge from left to right.  A basis diagram is a
non-crossing perfect matching of these ``2n`` points, stored as its partner
tuple.  ``a * b`` stacks ``a`` below ``b``; every closed loop created in the
middle is replaced by ``delta = -(A^2 + A^-2)``.

Elements keep polynomial numerators (in A) over a single common denominator.
Over the cyclotomic ring the denominator is 1 and numerators are reduced
modulo the 4p-th cyclotomic polynomial, which is the same as evaluating at
``A = zeta_{4p}``.
"""

from functools import lru_cache

import flint

from .coeff import GENERIC, RatFunc, CycloNum, CycloRing, cyclotomicModulus, cycloRing
from .errors import (IndexOutOfRange, MismatchedRing, MismatchedStrands, NotEvaluable,
                     NotGeneric, InvalidArgs)
from .tableau import tableauxOfShape, axialDistance

fmpq_poly = flint.fmpq_poly

_ONE = fmpq_poly([1])
_DELTA_NUM = fmpq_poly([-1, 0, 0, 0, -1])  # delta = -(1 + A^4) / A^2


def _mono(k):
    return fmpq_poly([0] * k + [1])


class PlanarMatching:
    __slots__ = ("n", "partner")

    def __init__(self, n, partner):
        partner = tuple(partner)
        if len(partner) != 2 * n:
            raise InvalidArgs("partner array must have length 2n")
        self.n = n
        self.partner = partner

    def __eq__(self, other):
        return isinstance(other, PlanarMatching) and other.partner == self.partner

    def __hash__(self):
        return hash(self.partner)

    def __repr__(self):
        return "PlanarMatching(%d, %r)" % (self.n, list(self.partner))


# ---------------------------------------------------------------------------
# basis diagrams and their products


def _noncrossingCircle(m):
    """Non-crossing perfect matchings of circle positions 0..m-1."""
    if m == 0:
        return [()]
    out = []
    for j in range(1, m, 2):
        for inner in _noncrossingCircle(j - 1):
            for outer in _noncrossingCircle(m - j - 1):
                pairs = [(0, j)] + [(a + 1, b + 1) for a, b in inner] + [(a + j + 1, b + j + 1) for a, b in outer]
                out.append(tuple(pairs))
    return out


def _composeMatchings(a, b, n):
    """Stack a below b; return (partner tuple, number of closed loops)."""
    res = [None] * (2 * n)
    used = [False] * n  # middle points lying on a through path
    for start in range(2 * n):
        if res[start] is not None:
            continue
        inA = start < n
        x = start
        while True:
            if inA:
                y = a[x]
                if y < n:
                    end = y
                    break
                used[y - n] = True
                inA, x = False, y - n
            else:
                y = b[x]
                if y >= n:
                    end = y
                    break
                used[y] = True
                inA, x = True, y + n
        res[start] = end
        res[end] = start
    loops = 0
    for m in range(n):
        if used[m]:
            continue
        loops += 1
        x = m
        while not used[x]:
            used[x] = True
            y = b[x]
            used[y] = True
            x = a[y + n] - n
    return tuple(res), loops


class TLBasis:
    """Basis diagrams of TL_n with cached products."""

    def __init__(self, n):
        self.n = n
        diags = []
        for pairs in _noncrossingCircle(2 * n):
            partner = [0] * (2 * n)
            for c1, c2 in pairs:
                p1, p2 = self._pt(c1), self._pt(c2)
                partner[p1] = p2
                partner[p2] = p1
            diags.append(tuple(partner))
        identity = tuple(list(range(n, 2 * n)) + list(range(n)))
        diags.sort(key=lambda d: (d != identity, d))
        self.diagrams = diags
        self.index = {d: k for k, d in enumerate(diags)}
        self.size = len(diags)
        self.identity = 0
        self._rows = {}
        self._full = {}
        self.generators = [self.index[self._generator(i)] for i in range(1, n)]
        self._rightGen = [[self.product(m, g) for m in range(self.size)] for g in self.generators]
        self._leftGen = [[self.product(g, m) for m in range(self.size)] for g in self.generators]

    def _pt(self, c):
        n = self.n
        return c if c < n else n + (2 * n - 1 - c)

    def _generator(self, i):
        n = self.n
        partner = list(range(n, 2 * n)) + list(range(n))
        partner[i - 1], partner[i] = i, i - 1
        partner[n + i - 1], partner[n + i] = n + i, n + i - 1
        return tuple(partner)

    def product(self, x, y):
        row = self._rows.get(x)
        if row is None:
            row = self._rows[x] = [None] * self.size
        r = row[y]
        if r is None:
            d, loops = _composeMatchings(self.diagrams[x], self.diagrams[y], self.n)
            r = row[y] = (self.index[d], loops)
        return r

    def productRow(self, x):
        row = self._full.get(x)
        if row is None:
            for y in range(self.size):
                self.product(x, y)
            row = self._full[x] = self._rows[x]
        return row

    def rightGen(self, i):
        return self._rightGen[i - 1]

    def leftGen(self, i):
        return self._leftGen[i - 1]

    @property
    def words(self):
        """A reduced word in the generators for every basis diagram."""
        if not hasattr(self, "_words"):
            words = {self.identity: ()}
            frontier = [self.identity]
            while frontier:
                nxt = []
                for m in frontier:
                    for i in range(1, self.n):
                        d, loops = self._rightGen[i - 1][m]
                        if loops == 0 and d not in words:
                            words[d] = words[m] + (i,)
                            nxt.append(d)
                frontier = nxt
            assert len(words) == self.size
            self._words = words
        return self._words


@lru_cache(maxsize=None)
def tlBasis(n):
    if n < 1:
        raise InvalidArgs("n must be >= 1")
    return TLBasis(n)


@lru_cache(maxsize=None)
def _embedMap(k, n):
    """Basis index of TL_k diagram placed on the left k of n strands."""
    src, dst = tlBasis(k), tlBasis(n)
    out = []
    for d in src.diagrams:
        partner = list(range(n, 2 * n)) + list(range(n))
        for pt in range(2 * k):
            q = d[pt]
            P = pt if pt < k else pt - k + n
            Q = q if q < k else q - k + n
            partner[P] = Q
        out.append(dst.index[tuple(partner)])
    return out


# ---------------------------------------------------------------------------
# elements


class TLElement:
    """Linear combination of basis diagrams of TL_n over a coefficient ring."""

    __slots__ = ("n", "ring", "terms", "den")

    def __init__(self, n, ring, terms=None, den=None, _normalize=True):
        self.n = n
        self.ring = ring
        self.terms = terms if terms is not None else {}
        self.den = den if den is not None else _ONE
        if _normalize:
            self._normalize()

    # -- construction
    @classmethod
    def zero(cls, n, ring=GENERIC):
        return cls(n, ring, {}, _ONE, _normalize=False)

    @classmethod
    def identity(cls, n, ring=GENERIC):
        return cls(n, ring, {0: _ONE}, _ONE, _normalize=False)

    @classmethod
    def generator(cls, i, n, ring=GENERIC):
        if not 1 <= i < n:
            raise IndexOutOfRange("h_%d not in TL_%d" % (i, n))
        return cls(n, ring, {tlBasis(n).generators[i - 1]: _ONE}, _ONE, _normalize=False)

    @classmethod
    def fromDiagram(cls, matching, coeff=None, ring=GENERIC):
        n = matching.n
        k = tlBasis(n).index[matching.partner]
        el = cls(n, ring, {k: _ONE}, _ONE, _normalize=False)
        return el if coeff is None else el.scale(coeff)

    def _normalize(self):
        terms = {k: v for k, v in self.terms.items() if not v.is_zero()}
        if type(self.ring) is CycloRing:
            self.terms = terms
            self.den = _ONE
            return
        den = self.den
        if not terms:
            self.terms, self.den = {}, _ONE
            return
        g = den
        for v in terms.values():
            if g.degree() == 0:
                break
            g = g.gcd(v)
        if g.degree() > 0:
            den = divmod(den, g)[0]
            terms = {k: divmod(v, g)[0] for k, v in terms.items()}
        lead = den.coeffs()[-1]
        if lead != 1:
            den = den / lead
            terms = {k: v / lead for k, v in terms.items()}
        self.terms, self.den = terms, den

    # -- coefficient access
    def coeffOf(self, k):
        v = self.terms.get(k)
        if type(self.ring) is CycloRing:
            return CycloNum._raw(self.ring.p, v) if v is not None else self.ring.zero()
        if v is None:
            return self.ring.zero()
        return RatFunc.fromPolys(v, self.den)

    def coefficient(self, matching):
        return self.coeffOf(tlBasis(self.n).index[matching.partner])

    def items(self):
        """(PlanarMatching, coefficient) pairs in basis order."""
        B = tlBasis(self.n)
        for k in sorted(self.terms):
            yield PlanarMatching(self.n, B.diagrams[k]), self.coeffOf(k)

    def __len__(self):
        return len(self.terms)

    def isZero(self):
        return not self.terms

    # -- linear structure
    def _check(self, other):
        if other.n != self.n:
            raise MismatchedStrands("TL_%d vs TL_%d" % (self.n, other.n))
        if other.ring != self.ring:
            raise MismatchedRing("%r vs %r" % (self.ring, other.ring))

    def _mod(self):
        return cyclotomicModulus(4 * self.ring.p) if type(self.ring) is CycloRing else None

    def __add__(self, other):
        if not isinstance(other, TLElement):
            return self + TLElement.identity(self.n, self.ring).scale(other)
        self._check(other)
        if self.den == other.den:
            terms = dict(self.terms)
            for k, v in other.terms.items():
                terms[k] = terms[k] + v if k in terms else v
            return TLElement(self.n, self.ring, terms, self.den)
        g = self.den.gcd(other.den)
        f1 = divmod(other.den, g)[0]
        f2 = divmod(self.den, g)[0]
        terms = {k: v * f1 for k, v in self.terms.items()}
        for k, v in other.terms.items():
            w = v * f2
            terms[k] = terms[k] + w if k in terms else w
        return TLElement(self.n, self.ring, terms, self.den * f1)

    __radd__ = __add__

    def __neg__(self):
        return TLElement(self.n, self.ring, {k: -v for k, v in self.terms.items()}, self.den, _normalize=False)

    def __sub__(self, other):
        if not isinstance(other, TLElement):
            return self + (-1) * TLElement.identity(self.n, self.ring).scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.ring.coerce(c)
        if type(self.ring) is CycloRing:
            mod = self._mod()
            return TLElement(self.n, self.ring, {k: (v * c.poly) % mod for k, v in self.terms.items()}, _ONE)
        num, den = _ratPolys(c)
        return TLElement(self.n, self.ring, {k: v * num for k, v in self.terms.items()}, self.den * den)

    def __mul__(self, other):
        if isinstance(other, TLElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        out = TLElement.identity(self.n, self.ring)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.n == other.n and self.ring == other.ring and self.terms == other.terms and self.den == other.den

    def __hash__(self):
        return hash((self.n, tuple(sorted((k, tuple(v.coeffs())) for k, v in self.terms.items()))))

    def embed(self, n):
        """Place this element on the left strands of TL_n."""
        if n < self.n:
            raise MismatchedStrands("cannot embed TL_%d into TL_%d" % (self.n, n))
        if n == self.n:
            return self
        emap = _embedMap(self.n, n)
        return TLElement(n, self.ring, {emap[k]: v for k, v in self.terms.items()}, self.den, _normalize=False)

    def rightMulGenerator(self, i):
        """self * h_i without the full product table."""
        table = tlBasis(self.n).rightGen(i)
        return self._applyGen(table)

    def leftMulGenerator(self, i):
        table = tlBasis(self.n).leftGen(i)
        return self._applyGen(table)

    def _applyGen(self, table):
        plain, looped = {}, {}
        for k, v in self.terms.items():
            d, loops = table[k]
            tgt = looped if loops else plain
            tgt[d] = tgt[d] + v if d in tgt else v
        if type(self.ring) is CycloRing:
            mod = self._mod()
            delta = self.ring.delta().poly
            for d, v in looped.items():
                w = (v * delta) % mod
                plain[d] = plain[d] + w if d in plain else w
            return TLElement(self.n, self.ring, plain, _ONE)
        terms = {d: v * _mono(2) for d, v in plain.items()}
        for d, v in looped.items():
            w = v * _DELTA_NUM
            terms[d] = terms[d] + w if d in terms else w
        return TLElement(self.n, self.ring, terms, self.den * _mono(2))

    def __repr__(self):
        parts = []
        for m, c in self.items():
            word = tlBasis(self.n).words[tlBasis(self.n).index[m.partner]]
            name = "1" if not word else "*".join("h%d" % i for i in word)
            parts.append("(%r)*%s" % (c, name))
        return "TLElement(n=%d, %s)" % (self.n, " + ".join(parts) if parts else "0")

    def toJson(self):
        return {
            "n": self.n,
            "ring": self.ring.key,
            "terms": [{"partner": list(m.partner), "coeff": c.toJson()} for m, c in self.items()],
        }


def _ratPolys(c):
    """(numerator, denominator) ordinary polynomials with c = num/den."""
    s = c.num.minExp
    if s >= 0:
        return c.num.poly * _mono(s), c.den.poly
    return c.num.poly, c.den.poly * _mono(-s)


def multiply(a, b):
    a._check(b)
    B = tlBasis(a.n)
    acc = {}
    maxLoops = 0
    for x, ax in a.terms.items():
        row = B.productRow(x)
        for y, by in b.terms.items():
            c, loops = row[y]
            key = (c, loops)
            v = ax * by
            if key in acc:
                acc[key] += v
            else:
                acc[key] = v
            if loops > maxLoops:
                maxLoops = loops
    out = {}
    if type(a.ring) is CycloRing:
        mod = cyclotomicModulus(4 * a.ring.p)
        dpow = [_ONE]
        delta = a.ring.delta().poly
        for _ in range(maxLoops):
            dpow.append((dpow[-1] * delta) % mod)
        for (c, loops), v in acc.items():
            w = v * dpow[loops] if loops else v
            out[c] = out[c] + w if c in out else w
        out = {c: v % mod for c, v in out.items()}
        return TLElement(a.n, a.ring, out, _ONE)
    dpow = [_mono(2 * maxLoops)]
    for L in range(1, maxLoops + 1):
        dpow.append(((-_DELTA_NUM) ** L) * _mono(2 * (maxLoops - L)) * (-1) ** L)
    for (c, loops), v in acc.items():
        w = v * dpow[loops]
        out[c] = out[c] + w if c in out else w
    return TLElement(a.n, a.ring, out, a.den * b.den * _mono(2 * maxLoops))


# ---------------------------------------------------------------------------
# braids


def resolveBraid(n, word, ring=GENERIC):
    """Kauffman resolution: sigma_i -> A + A^-1 h_i, sigma_i^-1 -> A^-1 + A h_i.

    ``word`` is a sequence of nonzero integers, ``+i`` for sigma_i and
    ``-i`` for its inverse.
    """
    x = TLElement.identity(n, ring)
    for letter in word:
        i = abs(letter)
        if not 1 <= i < n:
            raise IndexOutOfRange("sigma_%d not in B_%d" % (i, n))
        sgn = 1 if letter > 0 else -1
        x = x.scale(ring.A(sgn)) + x.rightMulGenerator(i).scale(ring.A(-sgn))
    return x


# ---------------------------------------------------------------------------
# semi-normal representations


def _isGeneric(ring):
    return ring == GENERIC


@lru_cache(maxsize=None)
def _generatorMatrix(lam, i):
    """Matrix of h_i on V_lambda (columns = images of basis vectors)."""
    ts = tableauxOfShape(lam)
    pos = {t: k for k, t in enumerate(ts)}
    f = len(ts)
    M = [[RatFunc(0)] * f for _ in range(f)]
    for t in ts:
        d = axialDistance(t, i)
        c = pos[t]
        M[c][c] = -(GENERIC.qint(d + 1) / GENERIC.qint(d))
        if d != -1:
            s = t.swapped(i)
            if s is not None:
                M[pos[s]][c] = -(GENERIC.qint(d - 1) / GENERIC.qint(d))
    return tuple(tuple(r) for r in M)


def _matMul(X, Y):
    f = len(X)
    return tuple(tuple(sum((X[r][k] * Y[k][c] for k in range(f)), RatFunc(0)) for c in range(f)) for r in range(f))


def _identityMatrix(f):
    return tuple(tuple(RatFunc(1 if r == c else 0) for c in range(f)) for r in range(f))


@lru_cache(maxsize=None)
def _diagramMatrix(lam, k):
    B = tlBasis(lam.size)
    word = B.words[k]
    f = len(tableauxOfShape(lam))
    M = _identityMatrix(f)
    for i in word:
        M = _matMul(M, _generatorMatrix(lam, i))
    return M


def seminormalMatrix(x, lam):
    """Matrix of x on V_lambda, basis ordered by tableau enumeration."""
    if not _isGeneric(x.ring):
        raise NotGeneric("semi-normal matrices need generic coefficients")
    if lam.size != x.n:
        raise MismatchedStrands("shape of size %d for TL_%d" % (lam.size, x.n))
    f = len(tableauxOfShape(lam))
    out = [[RatFunc(0)] * f for _ in range(f)]
    for k in x.terms:
        c = x.coeffOf(k)
        M = _diagramMatrix(lam, k)
        for r in range(f):
            for s in range(f):
                if not M[r][s].isZero():
                    out[r][s] = out[r][s] + c * M[r][s]
    return out


# ---------------------------------------------------------------------------
# evaluation


def evaluateElement(x, p):
    """Evaluate generic coefficients at A = zeta_{4p}."""
    ring = cycloRing(p)
    if x.ring == ring:
        return x
    if not _isGeneric(x.ring):
        raise MismatchedRing("can only evaluate generic elements")
    mod = cyclotomicModulus(4 * p)
    denVal = x.den % mod
    if denVal.is_zero():
        # find the offending coefficient
        B = tlBasis(x.n)
        for k in sorted(x.terms):
            c = x.coeffOf(k)
            if (c.den.poly % mod).is_zero():
                raise NotEvaluable("coefficient has a pole at zeta_%d" % (4 * p),
                                   where=PlanarMatching(x.n, B.diagrams[k]))
        raise AssertionError("common denominator vanishes but no coefficient does")
    inv = CycloNum._raw(p, denVal).inverse().poly
    terms = {k: (v * inv) % mod for k, v in x.terms.items()}
    return TLElement(x.n, ring, terms, _ONE)


def generator(i, n, ring=GENERIC):
    return TLElement.generator(i, n, ring)


def identity(n, ring=GENERIC):
    return TLElement.identity(n, ring)
