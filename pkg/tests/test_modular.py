import cmath

import numpy as np
import pytest

from jwq.coeff import CycloMatrix, CycloNum
from jwq.errors import InvalidParams, SingularSystem
from jwq.modular import (bucklePolynomialAction, checkModularRelations, compareSClosedForm,
                         compareTwistVsT, dictionary, drinfeldCoordinates, drinfeldSpanTStable,
                         lift, modularOrder, modularZeta, radfordCoordinates, sMatrix, sqrtTwoP,
                         tClosedForm, tMatrix)
from jwq.uq import centerLabels, defaultZeta

CASES = [(p, d) for p in (2, 3) for d in (0, 1)]


def _complex(M):
    return np.array([[x.toComplex() for x in row] for row in M.rows], dtype=complex)


@pytest.mark.parametrize("p,delta", CASES)
def test_t_closed_form(p, delta):
    assert tMatrix(delta, p) == tClosedForm(delta, p)


def test_field_helpers():
    assert modularOrder(2) == 2 and modularOrder(3) == 6
    for p in (2, 3, 5):
        r = sqrtTwoP(p)
        assert abs(r.toComplex() - (2 * p) ** 0.5) < 1e-9
        z = CycloNum.zeta(p, 1)
        assert abs(lift(z, p).toComplex() - z.toComplex()) < 1e-12
    for p in (2, 3):
        ratio = modularZeta(p) / lift(defaultZeta(p), p)
        assert abs(ratio.toComplex() - p * (2 * p) ** 0.5) < 1e-9


@pytest.mark.parametrize("p,delta", CASES)
def test_s_relations(p, delta):
    r = checkModularRelations(delta, None, p)
    assert r["s2Identity"] and r["st6"] and r["pass"]


# (ST)^3 = nu, frozen from the exact computation and checked against the phase
NU_PHASE = {(2, 0): 0.5, (2, 1): 0.5, (3, 0): 0.25, (3, 1): 0.75}


@pytest.mark.parametrize("p,delta", CASES)
def test_nu(p, delta):
    nu = checkModularRelations(delta, None, p)["nu"]
    assert abs(nu.toComplex() - cmath.exp(1j * cmath.pi * NU_PHASE[(p, delta)])) < 1e-9
    P = modularOrder(p)
    assert nu == CycloNum.zeta(P, P // 2 * round(4 * NU_PHASE[(p, delta)]))


@pytest.mark.parametrize("p,delta", CASES)
def test_s_numeric_route(p, delta):
    # solve the exchange system in floating point, independently of the exact solver
    z = modularZeta(p).toComplex()
    D = np.array([[x.toComplex() for x in v] for v in drinfeldCoordinates(delta, p)]).T
    R = z * np.array([[x.toComplex() for x in v] for v in radfordCoordinates(delta, 1, p)]).T
    inputs, outputs = np.hstack([R, D]), np.hstack([D, R])
    St, *_ = np.linalg.lstsq(inputs.T, outputs.T, rcond=None)
    S = St.T
    assert np.allclose(S @ inputs, outputs, atol=1e-9)
    assert np.allclose(S, _complex(sMatrix(delta, None, p).matrix), atol=1e-9)


@pytest.mark.parametrize("p", [2, 3])
def test_default_scale_is_inconsistent(p):
    with pytest.raises(SingularSystem):
        sMatrix(1, "default", p)


@pytest.mark.parametrize("p,delta", CASES)
def test_s_closed_form_columns(p, delta):
    res = compareSClosedForm(delta, p)
    assert set(res) == {"e0", "e%d" % p} | {"w%s%d" % (c, s) for c in "+-" for s in range(1, p)}
    for lab, r in res.items():
        signOnly = p == 3 and delta == 0 and lab.startswith("w-")
        assert r == {"equal": not signOnly, "equalUpToSign": signOnly}


@pytest.mark.parametrize("p,delta", CASES)
def test_drinfeld_span_not_t_stable(p, delta):
    assert drinfeldSpanTStable(delta, p) is False


@pytest.mark.parametrize("p", [2, 3])
def test_twist_matches_t(p):
    r = compareTwistVsT(p)
    assert r["pass"] and r["mismatches"] == []
    assert set(dictionary(p)) == set(centerLabels(p))


@pytest.mark.parametrize("p", [2, 3])
def test_buckle_polynomial(p):
    for R in ([1], [0, 1], [2, -1, 1], [0, 0, 0, 1]):
        r = bucklePolynomialAction(p, R)
        assert r["pass"] and all(row["eigenMatches"] for row in r["table"])
    with pytest.raises(InvalidParams):
        bucklePolynomialAction(5, [1])


def test_invalid_delta():
    with pytest.raises(InvalidParams):
        tMatrix(2, 2)
    with pytest.raises(InvalidParams):
        compareTwistVsT(4)


def test_s_matrix_shape_p2():
    S = sMatrix(1, None, 2)
    assert S.p == 2 and S.rootParameter == 2
    js = S.toJson()
    assert js["basis"] == centerLabels(2) and js["field"] == 8
    assert isinstance(S.matrix, CycloMatrix) and S.matrix.nrows == 5
