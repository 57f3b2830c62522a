"""Primitive orthogonal idempotents and Jones-Wenzl elements.

``poi`` builds p_t recursively on the last box of the tableau.
``jonesWenzl`` and ``jonesWenzlNil`` give the generic elements f_n and f'_n
and their evaluations at zeta_{4p}.  ``jonesWenzlByRecurrence`` rebuilds the
evaluated ones from a recurrence that never leaves the cyclotomic ring, so
the two constructions check each other.
"""

from functools import lru_cache

from .coeff import GENERIC, cycloRing
from .errors import NonRegular, NotEvaluable, RangeExceeded, InvalidArgs
from .tableau import StdTableau2, axialDistance, classify, tableauxOfShape, orbitClass
from .tl import TLElement, evaluateElement


def _qratio(a, b):
    return GENERIC.qint(a) / GENERIC.qint(b)


@lru_cache(maxsize=None)
def _poi(steps):
    t = StdTableau2(steps)
    n = t.n
    if n == 1:
        return TLElement.identity(1)
    tp = t.prefix(n - 1)
    base = _poi(tp.steps).embed(n)
    that = t.hat()
    if that is None:
        return base
    sandwich = base.rightMulGenerator(n - 1) * base
    d = axialDistance(t, n - 1)
    if d != -1:
        return sandwich.scale(-_qratio(d, d + 1))
    dh = axialDistance(that, n - 1)
    return base + sandwich.scale(_qratio(dh, dh + 1))


def poi(t):
    """p_t in TL_n(A^2) over Q(A)."""
    if not isinstance(t, StdTableau2):
        t = StdTableau2(t)
    if t.n < 1:
        raise InvalidArgs("empty tableau")
    return _poi(t.steps)


def poiSym(t, p):
    """p_[t] = p_t + p_{conjugate} (just p_t when there is no conjugate)."""
    if not isinstance(t, StdTableau2):
        t = StdTableau2(t)
    info = classify(t, p)
    if not info.regular:
        raise NonRegular("tableau %s is not regular for p=%d" % (t, p))
    if info.conjugate is None:
        return poi(t)
    return poi(t) + poi(info.conjugate)


def _isIdemOnly(n, p):
    return n <= p - 1 or (n + 1) % p == 0


@lru_cache(maxsize=None)
def _jwGeneric(n, p):
    t = StdTableau2.singleRow(n)
    if p is None or _isIdemOnly(n, p):
        return poi(t)
    return poiSym(t, p)


@lru_cache(maxsize=None)
def _jwEval(n, p):
    x = _jwGeneric(n, p)
    try:
        return evaluateElement(x, p)
    except NotEvaluable as exc:  # pragma: no cover - would contradict evaluability
        raise AssertionError("f_%d is not evaluable at p=%d" % (n, p)) from exc


def jonesWenzl(n, p=None, variant="evaluated"):
    """f_n (generic) or its evaluation at zeta_{4p}.

    For ``variant="generic"`` with a given ``p`` the result is the
    p-dependent generic element (p_{t(n)} or p_[t(n)]); with ``p=None`` it is
    the classical projector p_{t(n)}.
    """
    if n < 1:
        raise InvalidArgs("n must be >= 1")
    if variant == "generic":
        return _jwGeneric(n, p)
    if p is None or p < 2:
        raise InvalidArgs("evaluated variant needs p >= 2")
    return _jwEval(n, p)


def nilIndex(n, p):
    """The generator index lp - 1 used by the nilpotent (l = floor(n/p))."""
    return (n // p) * p - 1


@lru_cache(maxsize=None)
def _nilGeneric(n, p):
    if n < p or _isIdemOnly(n, p):
        return TLElement.zero(n)
    f = _jwGeneric(n, p)
    return f.rightMulGenerator(nilIndex(n, p)) * f


def jonesWenzlNil(n, p, variant="evaluated"):
    """f'_n = p_[t(n)] h_{lp-1} p_[t(n)] (zero when n < p or n = -1 mod p)."""
    if n < 1 or p < 2:
        raise InvalidArgs("need n >= 1 and p >= 2")
    g = _nilGeneric(n, p)
    if variant == "generic":
        return g
    if g.isZero():
        return TLElement.zero(n, cycloRing(p))
    return evaluateElement(g, p)


# ---------------------------------------------------------------------------
# recurrence that stays in the cyclotomic ring


def _h(i, n, ring):
    return TLElement.generator(i, n, ring)


@lru_cache(maxsize=None)
def _recurrence(p, upto):
    ring = cycloRing(p)
    q = lambda k: ring.qint(k)
    f = {1: TLElement.identity(1, ring)}
    fn = {}

    def lift(x, n):
        return x.embed(n)

    for n in range(2, upto + 1):
        prev = lift(f[n - 1], n)
        prevN = lift(fn[n - 1], n) if (n - 1) in fn else None
        h = _h(n - 1, n, ring)
        if n <= p - 1:
            f[n] = prev + (prev * h * prev).scale(q(n - 1) / q(n))
        elif n % p == 0:
            f[n] = prev
            fn[n] = f[n].rightMulGenerator(n - 1) * f[n]
        elif n % p == 1:
            # f_{lp+1} from f_{lp} and f'_{lp}
            f[n] = prev - (h * prevN + prevN * h) - (prevN * h * prevN).scale(q(2))
            fn[n] = prevN - prevN * h * prevN
        else:
            corr = (prevN * h * prev).scale(ring.fromInt(2) / (q(n) * q(n)))
            f[n] = prev + (prev * h * prev).scale(q(n - 1) / q(n)) - corr
            if (n + 1) % p == 0:
                fn[n] = TLElement.zero(n, ring)
            else:
                fn[n] = prevN + (prev * h * prevN).scale(q(n - 1) / q(n))
    return f, fn


def jonesWenzlByRecurrence(n, p, nil=False):
    """Evaluated f_n (or f'_n) from the evaluated recurrence, 1 <= n <= 3p-2."""
    if n < 1 or n > 3 * p - 2:
        raise RangeExceeded("the recurrence is only available for 1 <= n <= 3p-2")
    f, fn = _recurrence(p, 3 * p - 2)
    if nil:
        return fn.get(n, TLElement.zero(n, cycloRing(p)))
    return f[n]


# ---------------------------------------------------------------------------
# central idempotents


def centralIdempotentGeneric(shapes):
    shapes = list(shapes)
    n = shapes[0].size
    total = TLElement.zero(n)
    for mu in shapes:
        for t in tableauxOfShape(mu):
            total = total + poi(t)
    return total


def centralIdempotent(lambdaClass, p):
    """Evaluation of z_[lambda] = sum over the class of all p_t."""
    shapes = sorted(lambdaClass)
    expected = orbitClass(shapes[0], p)
    if frozenset(shapes) != expected:
        raise InvalidArgs("not an orbit class for p=%d" % p)
    return evaluateElement(centralIdempotentGeneric(shapes), p)
