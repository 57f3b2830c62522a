import pytest
from hypothesis import given, strategies as st

from jwq.coeff import GENERIC, cycloRing
from jwq.errors import InvalidArgs, NonRegular, RangeExceeded
from jwq.jw import (centralIdempotent, jonesWenzl, jonesWenzlByRecurrence, jonesWenzlNil, poi,
                    poiSym)
from jwq.tableau import StdTableau2, classify, enumerateTableaux, orbitClasses
from jwq.tl import TLElement

h = TLElement.generator
one = TLElement.identity


def test_poi_small():
    q2 = GENERIC.qint(2)
    assert poi("RR") == one(2) + h(1, 2).scale(GENERIC.one() / q2)
    assert poi("RL") == h(1, 2).scale(-GENERIC.one() / q2)
    assert poi("R") == one(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_poi_orthogonal_partition(n):
    ts = enumerateTableaux(n)
    ps = [poi(t) for t in ts]
    total = TLElement.zero(n)
    for a, x in zip(ts, ps):
        total = total + x
        for b, y in zip(ts, ps):
            assert x * y == (x if a == b else TLElement.zero(n))
    assert total == one(n)


@given(st.sampled_from([t for n in range(1, 6) for t in enumerateTableaux(n)]))
def test_poi_idempotent(t):
    x = poi(t)
    assert x * x == x and not x.isZero()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_generic_jw_characterization(n):
    f = jonesWenzl(n, None, "generic")
    assert f * f == f
    assert f.coeffOf(0) == GENERIC.one()
    for i in range(1, n):
        assert (f * h(i, n)).isZero() and (h(i, n) * f).isZero()


def test_p2_values():
    R = cycloRing(2)
    assert jonesWenzl(2, 2) == one(2, R)
    assert jonesWenzlNil(2, 2) == h(1, 2, R)
    f3 = one(3, R) - h(2, 3, R) * h(1, 3, R) - h(1, 3, R) * h(2, 3, R)
    assert jonesWenzl(3, 2) == f3
    assert jonesWenzlNil(3, 2).isZero()


@pytest.mark.parametrize("p", [2, 3])
def test_evaluated_properties(p):
    R = cycloRing(p)
    for n in range(1, 3 * p - 1):
        f = jonesWenzl(n, p)
        g = jonesWenzlNil(n, p)
        assert f * f == f
        assert f.coeffOf(0) == R.one()
        assert g * g == TLElement.zero(n, R)
        assert f * g == g == g * f
        mixed = n >= p and (n + 1) % p != 0
        assert g.isZero() != mixed
        for i in range(1, n):
            if mixed and i == (n // p) * p - 1:
                continue
            assert (f * h(i, n, R)).isZero()


@pytest.mark.parametrize("p", [2, 3])
def test_recurrence_matches_construction(p):
    for n in range(1, 3 * p - 1):
        assert jonesWenzlByRecurrence(n, p) == jonesWenzl(n, p)
        assert jonesWenzlByRecurrence(n, p, nil=True) == jonesWenzlNil(n, p)
    with pytest.raises(RangeExceeded):
        jonesWenzlByRecurrence(3 * p - 1, p)


@pytest.mark.parametrize("n,p", [(2, 2), (4, 2), (3, 3), (4, 3), (7, 3)])
def test_generic_nil_square(n, p):
    g = jonesWenzlNil(n, p, "generic")
    lp = (n // p) * p
    c = -(GENERIC.qint(lp) / GENERIC.qint(lp - 1))
    assert g * g == g.scale(c)


@pytest.mark.parametrize("n,p", [(3, 2), (4, 2), (4, 3), (5, 3)])
def test_central_idempotents(n, p):
    R = cycloRing(p)
    total = TLElement.zero(n, R)
    for cls in orbitClasses(n, p):
        z = centralIdempotent(cls, p)
        assert z * z == z
        for i in range(1, n):
            assert z * h(i, n, R) == h(i, n, R) * z
        total = total + z
    assert total == one(n, R)


def test_errors():
    bad = next(t for t in enumerateTableaux(4) if not classify(t, 2).regular)
    with pytest.raises(NonRegular):
        poiSym(bad, 2)
    with pytest.raises(InvalidArgs):
        jonesWenzl(0, 2)
    with pytest.raises(InvalidArgs):
        jonesWenzl(2, None)
    with pytest.raises(InvalidArgs):
        StdTableau2("LR")
