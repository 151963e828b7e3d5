import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import intertwining as it
from arthurlab.weil import PoleError


def mp_so14(lam):
    return float(2 * mpmath.pi ** 1.5 * mpmath.gamma(lam) / mpmath.gamma(lam + 1.5))


def mp_mc(s):
    return float(-mpmath.sqrt(mpmath.pi) * mpmath.gamma(s / 2) * (s - 1) / (2 * mpmath.gamma((s + 3) / 2)))


@pytest.mark.parametrize("lam", [0.3, 0.5, 1, 2, 3.5])
def test_m_so14(lam):
    r = it.m_so14(lam)
    assert r.passed and r.abs_diff <= 1e-8
    assert abs(r.rhs - mp_so14(lam)) <= 1e-10 * mp_so14(lam)
    assert abs(it.m_so14_elementary(lam) - mp_so14(lam)) <= 1e-10 * mp_so14(lam)


def test_m_so14_at_one():
    assert abs(it.m_so14(1).lhs - 8 * math.pi / 3) <= 1e-8


@pytest.mark.parametrize("s", [0.5, 1, 2, 3, 4])
def test_m_c(s):
    r = it.m_c(s)
    assert r.passed
    assert abs(r.rhs - mp_mc(s)) <= 1e-10


def test_m_c_values():
    assert abs(it.m_c(2).lhs + 2 / 3) <= 1e-8
    assert abs(it.m_c(3).lhs + math.pi / 4) <= 1e-8
    assert abs(it.m_c(1).lhs) <= 1e-8 and it.m_c(1).rhs == 0


def test_m_c_by_mpmath_quadrature():
    # an independent integrator on the raw kernel
    s = 2.5
    val = mpmath.quad(lambda u: (u * u - 1) * (1 + u * u) ** (-(s + 3) / 2), [-mpmath.inf, 0, mpmath.inf])
    assert abs(it.m_c(s).lhs - float(val)) <= 1e-9


@pytest.mark.parametrize("beta", [1, 2])
def test_m_sai(beta):
    r = it.m_sai(beta)
    assert r.passed
    assert all(it.m_sai(beta, alpha).lhs == r.lhs for alpha in (0, 1, 3.7))


def test_m_sai_one_is_8pi_over_3():
    assert abs(it.m_sai(1).rhs - 8 * math.pi / 3) <= 1e-12


def test_domain_and_poles():
    with pytest.raises(PoleError):
        it.m_so14(0)
    with pytest.raises(it.DomainError):
        it.m_so14(-0.5)
    with pytest.raises(PoleError):
        it.so14_composite(0)
    with pytest.raises(PoleError):
        it.so25_composite(0.5)
    with pytest.raises(it.DomainError):
        it.so25_composite(0.3, "quadrature")


def test_closed_form_shapes():
    c = it.so14_closed_form()
    assert abs(c.const + 2 ** -0.5) <= 1e-15
    assert sorted(map(str, c.num)) == ["Gamma_C(lambda)", "Gamma_R(2*lambda + 1)"]
    assert sorted(map(str, c.den)) == ["Gamma_C(lambda + 1/2)", "Gamma_R(2*lambda)"]


def mp_so14_composite(lam):
    gr = lambda s: mpmath.pi ** (-s / 2) * mpmath.gamma(s / 2)
    gc = lambda s: 2 * (2 * mpmath.pi) ** (-s) * mpmath.gamma(s)
    return float(-gc(lam) / gc(lam + 0.5) * gr(2 * lam + 1) / gr(2 * lam) / mpmath.sqrt(2))


@settings(max_examples=30, deadline=None)
@given(st.floats(1e-4, 5))
def test_so14_composite_against_mpmath(lam):
    assert abs(it.so14_composite(lam) - mp_so14_composite(lam)) <= 1e-10


@pytest.mark.parametrize("lam", [1e-2, 1e-3, 1e-4])
def test_limits(lam):
    a = it.limit_check("so14", lam)
    b = it.limit_check("so25", lam)
    assert a.passed and a.distance <= 5 * lam
    assert b.passed and b.distance <= 50 * lam


def test_limits_shrink():
    # the composites sit at -1 up to rounding, so "decreasing" allows a few ulps
    for name in ("so14", "so25"):
        d = [it.limit_check(name, x).distance for x in (1e-2, 1e-3, 1e-4)]
        assert all(d[k + 1] <= d[k] + 1e-14 for k in range(2))


def test_two_paths_agree():
    assert it.two_path_check("so14", 1, 1e-10).passed
    assert it.two_path_check("so25", 1, 1e-8).passed
    assert abs(it.m_c(2 * 1).lhs + 2 / 3) <= 1e-8


def test_so14_at_one_value():
    expected = mp_so14_composite(1.0)
    assert abs(it.so14_composite(1.0) - expected) <= 1e-12


def test_monte_carlo_oracle():
    mc = it.so14_monte_carlo(1.0, m=15, seed=3)
    assert abs(mc - 8 * math.pi / 3) / (8 * math.pi / 3) <= 1e-2


def test_operator_sign():
    out = it.operator_sign_check()
    assert out["pass"]
    assert out["e"] == -1 and out["scalar"] == 1 and out["ecr_coefficient"] == 1
