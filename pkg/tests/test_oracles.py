import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qdbezout.bezout import signature_form
from qdbezout.errors import InvalidInput
from qdbezout.gallery import gallery_lookup
from qdbezout.oracles import (INDEFINITE, NSD, PSD, DegenerateFiber, cauchy_index,
                              dividing_check, fiber_imbalance, membership_count)
from qdbezout.poly import Polynomial
from qdbezout.ratfun import RationalFunction, compose_poly_ratfun, pole_divisor
from qdbezout.scalars import DOUBLE

t = Polynomial([0, 1])
one = Polynomial([1])


def _h_of(p, phi):
    f = compose_poly_ratfun(p.to_mode(DOUBLE), phi.to_mode(DOUBLE))
    return RationalFunction(f.real_part().num, f.imag_part().num)


@pytest.mark.parametrize("h, expected", [
    (RationalFunction(t, one), 1),
    (RationalFunction(one, t), -1),
    (RationalFunction(t ** 2, one), 0),
    (RationalFunction(t ** 2 - one, t), 2),
    (RationalFunction(t ** 3, one), 1),
])
def test_cauchy_index_examples(h, expected):
    assert cauchy_index(h) == expected


def test_cauchy_index_rejects_complex():
    with pytest.raises(InvalidInput):
        cauchy_index(RationalFunction(Polynomial([1j, 1]), one))


def test_fiber_examples():
    assert fiber_imbalance(RationalFunction(t, one), 1j).imbalance == 1
    rep = fiber_imbalance(RationalFunction(t ** 2, one), 1j)
    assert rep.imbalance == 0
    pts = sorted((z for z, _, _ in rep.preimages), key=lambda z: z.real)
    w = np.exp(1j * np.pi / 4)
    assert np.allclose([-w, w], pts)
    assert rep.to_json()["imbalance"] == 0


def test_fiber_degenerate():
    # 1/t misses the value 0 ... infinity carries the fiber over lambda = 0
    with pytest.raises(DegenerateFiber):
        fiber_imbalance(RationalFunction(one, t), 0)
    # t^2 + 1 has the real preimage 0 over lambda = 1
    with pytest.raises(DegenerateFiber):
        fiber_imbalance(RationalFunction(t ** 2 + one, one), 1)


def test_disc_oracles_agree_with_signature(quartic):
    h = _h_of(quartic, gallery_lookup("disc").phi)
    assert fiber_imbalance(h, 1j).imbalance == -6
    assert cauchy_index(h) == -6


@pytest.mark.parametrize("name, coeffs, expected", [
    ("disc", [-4, 3, -2, 5, 1], (3, 0, 1)),
    ("cardioid", [-4, 0, 1], (1, 1, 0)),
    ("disc", [0, 1], (1, 0, 0)),
])
def test_membership_examples(name, coeffs, expected):
    assert membership_count(Polynomial(coeffs), gallery_lookup(name).phi) == expected


def test_dividing_examples():
    den = t ** 2 + one
    f = RationalFunction(t ** 2 - one, den)
    g = RationalFunction(t, den)
    label, inertia = dividing_check(f, g)
    assert label in (PSD, NSD) and inertia[2] == 0 and inertia[0] + inertia[1] == 2
    assert cauchy_index(RationalFunction(t ** 2 - one, t)) == 2
    assert label == PSD
    # h = t^2 over a real pole
    label, _ = dividing_check(RationalFunction(t ** 2, Polynomial([1, 0, 1])),
                              RationalFunction(one, Polynomial([1, 0, 1])))
    assert label == INDEFINITE
    label, inertia = dividing_check(f, f)
    assert label == PSD and inertia[0] == inertia[1] == 0
    label, _ = dividing_check(g, f)
    assert label == NSD


real_coeffs = st.lists(st.integers(-5, 5), min_size=1, max_size=3)


@settings(max_examples=40, deadline=None)
@given(real_coeffs, real_coeffs, st.sampled_from([[1, 0, 1], [3, 4, 1], [2, 3, 1]]))
def test_cauchy_matches_fiber_and_signature(a, b, q):
    q = Polynomial(q)
    f, g = RationalFunction(Polynomial(a), q), RationalFunction(Polynomial(b), q)
    if not f.num or not g.num:
        return
    h = RationalFunction(f.num * g.den, g.num * f.den)
    if h.degree < 1:
        return
    sig = signature_form(f, g, pole_divisor(q, 1e-9), 1e-9).signature
    ci = cauchy_index(h)
    assert sig == ci
    try:
        assert fiber_imbalance(h, 1j).imbalance == ci
    except DegenerateFiber:
        pass


@settings(max_examples=40, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False),
                min_size=2, max_size=6),
       st.sampled_from(["disc", "cardioid", "neumann", "order3"]))
def test_membership_conservation(coeffs, name):
    p = Polynomial(coeffs, DOUBLE)
    if p.degree < 1 or abs(coeffs[-1]) < 1e-3:
        return
    assert sum(membership_count(p, gallery_lookup(name).phi)) == p.degree
