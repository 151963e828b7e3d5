"""Scalar constants of the rank-one intertwining operators for SO(1,4) and SO(2,5).

Each kernel integral is computed twice: by adaptive quadrature and by its Gamma
closed form. The composites multiply the closed forms by the normalizing ratios
from :mod:`arthurlab.weil`; both tend to -1 as lambda -> 0+.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import sympy as sp

from . import endoscopy, kottwitz, weil
from . import exact as ex
from . import parameters as prm
from . import so_structure as so
from .quadrature import QuadratureResult, quad_improper
from .weil import LAM, GammaFactor, GammaRatio, PoleError

DEFAULT_TOL = 1e-8


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class IdentityReport:
    check: str
    lam: float
    lhs: complex  # quadrature
    rhs: complex  # closed form
    abs_diff: float
    tol: float
    passed: bool
    error_estimate: float = 0.0
    evaluations: int = 0

    def to_json(self) -> dict:
        return {
            "abs_diff": self.abs_diff,
            "check": self.check,
            "error_estimate": self.error_estimate,
            "evaluations": self.evaluations,
            "lambda": self.lam,
            "lhs": [self.lhs.real, self.lhs.imag],
            "pass": self.passed,
            "rhs": [self.rhs.real, self.rhs.imag],
            "tol": self.tol,
        }


def _report(check: str, lam: float, quad: QuadratureResult, closed: complex, tol: float) -> IdentityReport:
    diff = abs(quad.value - closed)
    return IdentityReport(check, float(lam), complex(quad.value), complex(closed), diff, tol,
                          bool(diff <= tol), quad.abs_error_estimate, quad.evaluations)


def _require_positive(x: float, name: str, pole_kind: str, step: int):
    x = float(x)
    if x > 0:
        return x
    k = round(x)
    if abs(x - k) < 1e-12 and k % step == 0:
        raise PoleError(pole_kind, complex(x))
    raise DomainError(f"{name} = {x} is outside the convergence range {name} > 0")


# --- the three kernels -------------------------------------------------------------

def so14_ratio(arg=LAM) -> GammaRatio:
    """2^{-1/2} Gamma_C(arg) / Gamma_C(arg + 3/2)."""
    arg = sp.sympify(arg)
    return GammaRatio(complex(2 ** -0.5), (GammaFactor("C", arg),),
                      (GammaFactor("C", sp.expand(arg + sp.Rational(3, 2))),))


def mc_ratio(arg=2 * LAM) -> GammaRatio:
    """-Gamma_R(s) Gamma_R(s+1) / (Gamma_R(s+3) Gamma_R(s-1))."""
    s = sp.sympify(arg)
    return GammaRatio(-1 + 0j, (GammaFactor("R", s), GammaFactor("R", sp.expand(s + 1))),
                      (GammaFactor("R", sp.expand(s + 3)), GammaFactor("R", sp.expand(s - 1))))


def so14_kernel(lam: float) -> Callable[[np.ndarray], np.ndarray]:
    # 8 pi r^2 (1 + r^2)^{-lam-3/2}: the radial form of the N-integral
    def k(r):
        return 8 * math.pi * r * r * (1 + r * r) ** (-lam - 1.5)

    return k


def mc_kernel(s: float) -> Callable[[np.ndarray], np.ndarray]:
    # theta-component of h^{(s)} at J^{-1} n(u); only cos(2 theta) survives the integral
    def k(u):
        return (u * u - 1) * (1 + u * u) ** (-(s + 3) / 2)

    return k


def m_so14(lam: float, tol: float = DEFAULT_TOL) -> IdentityReport:
    lam = _require_positive(lam, "lambda", "C", 1)
    quad = quad_improper(so14_kernel(lam), "half")
    return _report("m_so14", lam, quad, so14_ratio().evaluate(lam), tol)


def m_so14_elementary(lam: float) -> float:
    """2 pi^{3/2} Gamma(lam) / Gamma(lam + 3/2), the same constant in plain Gamma."""
    return 2 * math.pi ** 1.5 * math.exp(math.lgamma(lam) - math.lgamma(lam + 1.5))


def m_c(s: float, tol: float = DEFAULT_TOL) -> IdentityReport:
    s = _require_positive(s, "s", "R", 2)
    quad = quad_improper(mc_kernel(s), "line")
    return _report("m_c", s, quad, mc_ratio(sp.Float(s)).evaluate(), tol)


def m_sai(beta: float, alpha: float = 0.0, tol: float = DEFAULT_TOL) -> IdentityReport:
    """The SL2-type kernel: f^{(alpha, beta)} restricted along iota_2 is phi^{(beta)}.

    ``alpha`` only rides along through the GL_1 factor and never enters the kernel.
    """
    r = m_so14(beta, tol)
    return IdentityReport("m_sai", r.lam, r.lhs, r.rhs, r.abs_diff, r.tol, r.passed,
                          r.error_estimate, r.evaluations)


# --- composites ----------------------------------------------------------------------

def so14_closed_form() -> GammaRatio:
    return weil.normalizing_ratio(weil.rho_so14(), "combined") * so14_ratio(LAM)


def so25_closed_form() -> GammaRatio:
    half = sp.Rational(1, 2)
    return (weil.normalizing_ratio(weil.rho_so25(), "combined")
            * so14_ratio(LAM - half) * mc_ratio(2 * LAM) * so14_ratio(LAM + half))


_CLOSED: dict[str, GammaRatio] = {}


def _closed(name: str) -> GammaRatio:
    if name not in _CLOSED:
        _CLOSED[name] = so14_closed_form() if name == "so14" else so25_closed_form()
    return _CLOSED[name]


def so14_composite(lam: float, path: str = "closed") -> complex:
    lam = _require_positive(lam, "lambda", "C", 1)
    if path == "closed":
        return complex(_closed("so14").evaluate(lam))
    if path == "quadrature":
        ratio = weil.normalizing_ratio(weil.rho_so14(), "combined").evaluate(lam)
        return complex(ratio * m_so14(lam).lhs)
    raise ValueError(f"unknown path {path!r}")


def so25_composite(lam: float, path: str = "closed") -> complex:
    lam = _require_positive(lam, "lambda", "C", 1)
    if abs(lam - 0.5) < 1e-12:
        raise PoleError("C", complex(lam - 0.5))
    if path == "closed":
        return complex(_closed("so25").evaluate(lam))
    if path == "quadrature":
        if lam <= 0.5:
            raise DomainError("factorwise quadrature needs lambda > 1/2")
        ratio = weil.normalizing_ratio(weil.rho_so25(), "combined").evaluate(lam)
        return complex(ratio * m_sai(lam - 0.5).lhs * m_c(2 * lam).lhs * m_sai(lam + 0.5).lhs)
    raise ValueError(f"unknown path {path!r}")


@dataclass(frozen=True)
class LimitReport:
    check: str
    lam: float
    value: complex
    distance: float
    bound: float
    passed: bool

    def to_json(self) -> dict:
        return {"bound": self.bound, "check": self.check, "distance": self.distance,
                "lambda": self.lam, "pass": self.passed, "value": [self.value.real, self.value.imag]}


LIMIT_SLOPE = {"so14": 5.0, "so25": 50.0}


def limit_check(name: str, lam: float) -> LimitReport:
    """|composite(lam) + 1| <= slope * lam."""
    f = so14_composite if name == "so14" else so25_composite
    v = f(lam)
    d = abs(v + 1)
    bound = LIMIT_SLOPE[name] * lam
    return LimitReport(f"{name}_limit", float(lam), v, d, bound, bool(d <= bound))


def two_path_check(name: str, lam: float, tol: float) -> IdentityReport:
    f = so14_composite if name == "so14" else so25_composite
    q, c = f(lam, "quadrature"), f(lam, "closed")
    d = abs(q - c)
    return IdentityReport(f"{name}_two_path", float(lam), q, c, d, tol, bool(d <= tol))


# --- independent oracle: the SO(1,4) integral straight from the matrices ---------------

def _so14_lie_basis() -> tuple[np.ndarray, np.ndarray]:
    # the odd part of x -> n(x) is the Lie algebra element; n(x) = exp(X) = 1 + X + X^2/2
    gens = []
    for k in range(3):
        e = [0, 0, 0]
        e[k] = 1
        plus = ex.to_complex(so.so14_n(e)).real
        e[k] = -1
        minus = ex.to_complex(so.so14_n(e)).real
        gens.append((plus - minus) / 2)
    w_breve = ex.to_complex(so.so14_fixtures().w_breve).real
    return np.array(gens), np.linalg.inv(w_breve)


def so14_monte_carlo(lam: float, m: int = 16, seed: int = 0) -> float:
    """Quasi-Monte Carlo value of 2 int_{R^3} phi^{(lam)}(w_breve^{-1} n(x)) dx.

    The Iwasawa t-component is read off the matrix: t^{-1} = g_11 - g_51.
    Coordinates go through x = tan(pi (v - 1/2)) so the sample box is [0,1]^3.
    """
    from scipy.stats import qmc

    lam = _require_positive(lam, "lambda", "C", 1)
    gens, w_inv = _so14_lie_basis()
    v = qmc.Sobol(3, scramble=True, seed=seed).random_base2(m)
    v = np.clip(v, 1e-12, 1 - 1e-12)
    ang = math.pi * (v - 0.5)
    x = np.tan(ang)
    jac = np.prod(math.pi / np.cos(ang) ** 2, axis=1)
    X = np.einsum("pk,kij->pij", x, gens)
    n = np.eye(5) + X + X @ X / 2
    g = w_inv @ n
    t_inv = g[:, 0, 0] - g[:, 4, 0]
    phi = t_inv ** (-lam - 1.5)
    return float(2 * np.mean(phi * jac))


# --- sign bookkeeping --------------------------------------------------------------

def operator_sign_check() -> dict:
    """Sign of the normalized operator at the SO(1,4) exceptional parameter 2 omega_0 + tau_1.

    The limit is -1 and the packet member pairs with s = (-1, 1) by -1, so the
    scalar is +1; the endoscopic coefficient e(G) <s_psi s, pi> is +1 as well.
    """
    omega0 = prm.IrreducibleComponent("omega0", 1, "orthogonal")
    tau1 = prm.IrreducibleComponent("tau1", 2, "symplectic")
    param = prm.validate([(omega0, 2), (tau1, 1)])
    e = kottwitz.kottwitz_sign(kottwitz.LocalFormDescriptor.real(1, 4))
    # s acts by -1 on the symplectic component tau1
    corr = endoscopy.correspond(param, {"omega0": (2, 0), "tau1": (0, 1)})
    chars = prm.characters(param, kottwitz.alpha_real(4, 1))
    table = {f"pi{k}": eps for k, eps in enumerate(chars)}
    ecr = endoscopy.ecr_summand(param, corr.s_image, table, e)
    pairing = ecr["terms"][0]["coefficient"] * e
    limit = round(so14_composite(1e-6).real)
    scalar = pairing * limit
    return {
        "e": e,
        "ecr_coefficient": ecr["terms"][0]["coefficient"],
        "limit": limit,
        "pairing": pairing,
        "pass": bool(scalar == 1 and e * pairing == 1 and scalar * scalar == 1),
        "scalar": scalar,
    }
