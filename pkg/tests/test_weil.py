import math

import mpmath
import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from arthurlab import weil as w
from arthurlab.weil import LAM

ts = st.sampled_from([0, sp.Rational(1, 2), sp.Rational(3, 4), 1, sp.Rational(-1, 3)])
irreps = st.one_of(
    st.builds(w.omega, ts, st.sampled_from([0, 1])),
    st.builds(w.tau, st.integers(1, 6), ts),
)
reps = st.lists(irreps, min_size=1, max_size=3).map(w.direct_sum)
points = [("z", 1.3, 0.4), ("z", 0.7, 2.1), ("jz", 1.1, 0.3), ("jz", 0.6, 1.7)]


def close(a, b):
    return abs(a - b) <= 1e-9 * max(1, abs(a), abs(b))


@settings(max_examples=60, deadline=None)
@given(reps, reps)
def test_tensor_character(a, b):
    for g in points:
        assert close(w.character(w.tensor(a, b), g), w.character(a, g) * w.character(b, g))


@settings(max_examples=60, deadline=None)
@given(reps)
def test_sym2_wedge2_characters(a):
    for g in points:
        chi, chi2 = w.character(a, g), w.character(a, w.square(g))
        assert close(w.character(w.sym2(a), g), (chi * chi + chi2) / 2)
        assert close(w.character(w.wedge2(a), g), (chi * chi - chi2) / 2)


@settings(max_examples=40, deadline=None)
@given(reps)
def test_dimensions_and_dual(a):
    d = a.dim
    assert w.sym2(a).dim == d * (d + 1) // 2
    assert w.wedge2(a).dim == d * (d - 1) // 2
    assert w.dual(w.dual(a)) == a
    for g in points:
        # the dual of omega_t is omega_{-t}: at |z| = r the character inverts r
        assert close(w.character(w.dual(a), (g[0], 1 / g[1], g[2])), w.character(a, g))


@pytest.mark.parametrize("l", range(1, 7))
def test_ring_identity_symbolic(l):
    for x in (w.tau(l, LAM), w.tau(l, LAM) + w.omega(0, 1), w.tau(l) + w.tau(1, LAM)):
        assert w.sym2(x) + w.wedge2(x) == w.tensor(x, x)


def test_tensor_rules():
    assert w.tensor(w.tau(2), w.tau(1)) == w.tau(3) + w.tau(1)
    assert w.tensor(w.tau(2), w.tau(2)) == w.tau(4) + w.omega(0) + w.omega(0, 1)
    assert w.sym2(w.tau(1, LAM)) == w.tau(2, 2 * LAM) + w.omega(2 * LAM, 1)
    assert w.wedge2(w.tau(1, LAM)) == w.omega(2 * LAM)


def test_rho_decompositions():
    assert w.rho_so14() == w.tau(1, LAM) + w.omega(2 * LAM)
    assert w.rho_so25() == (w.tau(2, LAM) + w.omega(LAM, 1) + w.omega(LAM) + w.tau(2, 2 * LAM)
                            + w.omega(2 * LAM, 1))


def test_multiset_equality_ignores_order():
    assert w.tau(1) + w.omega(0) == w.omega(0) + w.tau(1)
    assert w.tau(1) + w.tau(1) != w.tau(1)


def test_json_roundtrip():
    a = w.rho_so25()
    assert w.WeilRealRep.from_json(a.to_json()) == a
    assert w.WeilRealRep.from_json({"two": [{"l": 1, "t": "λ"}]}) == w.tau(1, LAM)
    with pytest.raises(ValueError):
        w.WeilRealRep.from_json({"two": [{"t": 0}]})
    with pytest.raises(ValueError):
        w.tau(0)


@pytest.mark.parametrize("s", [0.3, 1.0, 2.5, 4.2])
def test_gamma_against_mpmath(s):
    gr = mpmath.pi ** (-s / 2) * mpmath.gamma(s / 2)
    gc = 2 * (2 * mpmath.pi) ** (-s) * mpmath.gamma(s)
    assert abs(w.gamma_r(s) - float(gr)) <= 1e-12 * float(gr)
    assert abs(w.gamma_c(s) - float(gc)) <= 1e-12 * float(gc)


@given(st.floats(0.05, 40))
def test_duplication(s):
    assert w.duplication_residual(s) <= 1e-12


def test_poles():
    with pytest.raises(w.PoleError):
        w.gamma_r(-2)
    with pytest.raises(w.PoleError):
        w.gamma_c(0)
    assert w.gamma_r(-1) != 0  # Gamma_R has poles only at even non-positive integers
    assert w.rgamma("R", 0) == 0
    with pytest.raises(w.PoleError):
        w.l_factor(w.omega(0), 0)


def test_l_and_epsilon_table():
    s = 0.7
    assert close(w.l_factor(w.omega(0.5), s), w.gamma_r(s + 0.5))
    assert close(w.l_factor(w.omega(0.5, 1), s), w.gamma_r(s + 1.5))
    assert close(w.l_factor(w.tau(3, 0.25), s), w.gamma_c(s + 0.25 + 1.5))
    assert w.epsilon_factor(w.omega(0)) == 1
    assert w.epsilon_factor(w.omega(0, 1)) == 1j
    assert w.epsilon_factor(w.tau(1)) == -1
    assert w.epsilon_factor(w.tau(2)) == -1j
    assert close(w.l_factor(w.tau(1, LAM), 1, lam=0.5), w.gamma_c(2))


def test_normalizing_ratio_so14():
    r = w.normalizing_ratio(w.rho_so14())
    assert r.const == -1
    assert [str(f) for f in r.num] == ["Gamma_C(lambda + 3/2)", "Gamma_R(2*lambda + 1)"]
    assert [str(f) for f in r.den] == ["Gamma_C(lambda + 1/2)", "Gamma_R(2*lambda)"]


def test_normalizing_ratio_so25():
    r = w.normalizing_ratio(w.rho_so25())
    assert r.const == 1
    assert sorted(map(str, r.num)) == sorted(["Gamma_C(2*lambda + 2)", "Gamma_C(lambda + 2)",
                                              "Gamma_R(2*lambda + 2)", "Gamma_R(lambda + 2)"])
    assert sorted(map(str, r.den)) == sorted(["Gamma_C(2*lambda + 1)", "Gamma_C(lambda + 1)",
                                              "Gamma_R(2*lambda + 1)", "Gamma_R(lambda)"])


@pytest.mark.parametrize("rep", [w.rho_so14(), w.rho_so25()])
@pytest.mark.parametrize("lam", [0.3, 1.7])
def test_ratio_modes_are_reciprocal_up_to_epsilon(rep, lam):
    comb = w.normalizing_ratio(rep, "combined").evaluate(lam)
    r = w.normalizing_ratio(rep, "r").evaluate(lam)
    assert close(comb * r, w.epsilon_factor(rep))


@pytest.mark.parametrize("lam", [0.3, 1.7])
def test_ratio_against_sympy(lam):
    r = w.normalizing_ratio(w.rho_so14())
    assert close(complex(r.to_sympy().subs(LAM, lam).evalf(30)), r.evaluate(lam))
    with pytest.raises(ValueError):
        w.normalizing_ratio(w.rho_so14(), "other")
