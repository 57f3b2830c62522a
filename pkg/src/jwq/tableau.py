"""Two-row Young diagrams and standard tableaux as lattice paths.

A standard tableau with at most two rows is stored as its step word: ``R``
puts the next box in the first row, ``L`` in the second.  The column of the
Temperley-Lieb lattice reached after k steps is ``omega = lambda1 - lambda2 + 1``,
so R moves one column right and L one column left.  Criticality,
regularity and conjugation are prefix arithmetic on that walk.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from .errors import IndexOutOfRange, InvalidArgs


@dataclass(frozen=True, order=True)
class YoungDiagram2:
    lambda1: int
    lambda2: int = 0

    def __post_init__(self):
        if not (self.lambda1 >= self.lambda2 >= 0):
            raise InvalidArgs("need lambda1 >= lambda2 >= 0, got %r" % ((self.lambda1, self.lambda2),))

    @property
    def size(self):
        return self.lambda1 + self.lambda2

    def __iter__(self):
        return iter((self.lambda1, self.lambda2))

    def __str__(self):
        if self.lambda2:
            return "[%d,%d]" % (self.lambda1, self.lambda2)
        return "[%d]" % self.lambda1


def omega(d):
    if not isinstance(d, YoungDiagram2):
        d = YoungDiagram2(*d)
    return d.lambda1 - d.lambda2 + 1


def diagramFromOmega(n, w):
    """The diagram of size n in column w (parity permitting)."""
    if (n + 1 - w) % 2 or w < 1 or w > n + 1:
        return None
    l2 = (n + 1 - w) // 2
    return YoungDiagram2(n - l2, l2)


def youngDiagrams(n):
    """Delta_n: two-row diagrams of size n, largest first row first."""
    return [YoungDiagram2(n - k, k) for k in range(n // 2 + 1)]


def fLambda(d):
    """Number of standard tableaux of shape d (ballot numbers)."""
    n = d.size
    return comb(n, d.lambda2) - (comb(n, d.lambda2 - 1) if d.lambda2 else 0)


class StdTableau2:
    __slots__ = ("steps",)

    def __init__(self, steps):
        steps = "".join(steps)
        bal = 0
        for s in steps:
            if s == "R":
                bal += 1
            elif s == "L":
                bal -= 1
                if bal < 0:
                    raise InvalidArgs("invalid tableau word %r" % steps)
            else:
                raise InvalidArgs("steps must be R or L, got %r" % s)
        self.steps = steps

    @classmethod
    def singleRow(cls, n):
        """t(n): all boxes in the first row."""
        return cls("R" * n)

    @staticmethod
    def isValidWord(steps):
        bal = 0
        for s in steps:
            bal += 1 if s == "R" else -1
            if bal < 0:
                return False
        return True

    @property
    def n(self):
        return len(self.steps)

    def __len__(self):
        return len(self.steps)

    @property
    def shape(self):
        l2 = self.steps.count("L")
        return YoungDiagram2(self.n - l2, l2)

    def prefix(self, k):
        return StdTableau2(self.steps[:k])

    def omegaAt(self, k):
        """omega of the shape after k boxes (k = 0 gives the empty shape)."""
        w = 1
        for s in self.steps[:k]:
            w += 1 if s == "R" else -1
        return w

    def walk(self):
        """[omega after 0, 1, ..., n boxes]."""
        out = [1]
        for s in self.steps:
            out.append(out[-1] + (1 if s == "R" else -1))
        return out

    def row(self, k):
        """Row (1 or 2) of the box labelled k (1-based)."""
        return 1 if self.steps[k - 1] == "R" else 2

    def col(self, k):
        return self.steps[:k].count(self.steps[k - 1])

    def swapped(self, i):
        """sigma_i(t): exchange labels i and i+1, or None if not standard."""
        if not 1 <= i < self.n:
            raise IndexOutOfRange("i=%d outside 1..%d" % (i, self.n - 1))
        s = self.steps
        if s[i - 1] == s[i]:
            return None
        w = s[:i - 1] + s[i] + s[i - 1] + s[i + 1:]
        return StdTableau2(w) if StdTableau2.isValidWord(w) else None

    def hat(self):
        """The other tableau with the same (n-1)-prefix, if any."""
        if self.n < 1:
            return None
        other = "L" if self.steps[-1] == "R" else "R"
        w = self.steps[:-1] + other
        return StdTableau2(w) if StdTableau2.isValidWord(w) else None

    def __eq__(self, other):
        return isinstance(other, StdTableau2) and other.steps == self.steps

    def __hash__(self):
        return hash(self.steps)

    def __str__(self):
        return self.steps

    def __repr__(self):
        return "StdTableau2(%r)" % self.steps

    def sortKey(self):
        return self.steps.replace("R", "0").replace("L", "1")


def axialDistance(t, i):
    if not 1 <= i < t.n:
        raise IndexOutOfRange("i=%d outside 1..%d" % (i, t.n - 1))
    return t.col(i) - t.col(i + 1) + t.row(i + 1) - t.row(i)


@dataclass(frozen=True)
class Classification:
    critical: bool
    regular: bool
    maxCriticalSub: Optional[StdTableau2]
    conjugate: Optional[StdTableau2]


def isCritical(t, p):
    return t.omegaAt(t.n) % p == 0


def maxCriticalSub(t, p):
    walk = t.walk()
    for k in range(t.n - 1, 0, -1):
        if walk[k] % p == 0:
            return t.prefix(k)
    return None


def conjugate(t, p):
    sub = maxCriticalSub(t, p)
    if sub is None:
        return None
    k = sub.n
    tail = t.steps[k:].translate(str.maketrans("RL", "LR"))
    w = t.steps[:k] + tail
    return StdTableau2(w) if StdTableau2.isValidWord(w) else None


def isRegular(t, p):
    visits = [w for w in t.walk()[1:] if w % p == 0]
    return all(a != b for a, b in zip(visits, visits[1:]))


def classify(t, p):
    if p < 2:
        raise InvalidArgs("p must be >= 2")
    return Classification(
        critical=isCritical(t, p),
        regular=isRegular(t, p),
        maxCriticalSub=maxCriticalSub(t, p),
        conjugate=conjugate(t, p),
    )


@lru_cache(maxsize=None)
def _enumerate(n):
    out = [""]
    for _ in range(n):
        nxt = []
        for w in out:
            nxt.append(w + "R")
            if w.count("R") > w.count("L"):
                nxt.append(w + "L")
        out = nxt
    return tuple(out)


def enumerateTableaux(n):
    """All standard tableaux of size n, lexicographic with R < L."""
    if n < 1:
        raise InvalidArgs("n must be >= 1")
    return [StdTableau2(w) for w in _enumerate(n)]


def tableauxOfShape(d):
    l2 = d.lambda2
    return [t for t in enumerateTableaux(d.size) if t.steps.count("L") == l2]


def orbitClass(d, p):
    """[lambda]: the diagrams of the same size whose column is carried to
    omega(lambda) by reflections across critical lines; {lambda} when
    lambda is itself critical."""
    w = omega(d)
    if w % p == 0:
        return frozenset([d])
    n = d.size
    return frozenset(mu for mu in youngDiagrams(n)
                     if (omega(mu) - w) % (2 * p) == 0 or (omega(mu) + w) % (2 * p) == 0)


def orbitClasses(n, p):
    seen = []
    for d in youngDiagrams(n):
        c = orbitClass(d, p)
        if c not in seen:
            seen.append(c)
    return seen
