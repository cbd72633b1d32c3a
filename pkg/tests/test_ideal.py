import json

import pytest

from checkerboard import ideal
from checkerboard.enumeration import GuardExceeded
from checkerboard.exactalg import MultiPoly


@pytest.fixture(scope="module")
def sys2():
    return ideal.build_system(2)


def test_jet_ring_names(sys2):
    assert sys2.names == ("t", "x", "F", "F_t", "F_x", "F_tt", "F_tx", "F_xx")
    assert list(sys2.generators) == ["F", "F_t", "F_x", "F_tt", "F_tx", "F_xx"]


def test_d2_polynomials(sys2):
    t, x, F = (MultiPoly.var(sys2.names, v) for v in ("t", "x", "F"))
    assert sys2.P == t - t * F + x * (t + x * F**2) ** 2
    assert sys2.K == -t + 4 * t * x**2 * F + 4 * x**3 * F**3
    assert sys2.P.evaluate({n: 0 for n in sys2.names} | {"t": 5, "F": 1}) == 0
    assert sys2.N == 3


def test_d3_shape():
    s = ideal.build_system(3)
    assert len(s.P) == 6
    assert s.N == 5


def test_total_derivative_of_P_is_a_generator(sys2):
    assert ideal.total_derivative(sys2.P, "t", 2) == sys2.P_t


def test_divisibility_examples(sys2):
    assert ideal.divisibility_check(sys2.P, sys2.P)
    assert not ideal.divisibility_check(sys2.P + 1, sys2.P)
    Q0, Qt0 = ideal.eliminate(sys2)
    assert ideal.divisibility_check(Q0, sys2.P)
    assert ideal.divisibility_check(Qt0, sys2.P)
    F_t = MultiPoly.var(sys2.names, "F_t")
    assert not ideal.divisibility_check(Q0 + F_t, sys2.P)


@pytest.mark.parametrize("d", [2, 3])
def test_certificate(d):
    res, cert = ideal.ideal_certificate(d)
    assert res.passed, res.detail
    assert res.detail["witness_Q"] and res.detail["witness_Qt"]
    data = json.loads(json.dumps(cert.to_json()))
    assert data["d"] == d and data["N"] == (3 if d == 2 else 5)
    assert "P" in data["Q"]["cofactors"]


def test_certificate_witness_is_sensitive():
    sys = ideal.build_system(2)
    _, cert = ideal.ideal_certificate(2)
    cof = dict(cert.cofactors)
    cof["F"] = cof["F"] + 1
    assert not ideal.witness_residual(sys, sys.Q, sys.N, cof).is_zero()


def test_long_run_flag():
    with pytest.raises(GuardExceeded):
        ideal.ideal_certificate(5)
    with pytest.raises(GuardExceeded):
        ideal.ideal_certificate(7, long_run=True)
