"""Representations of the real Weil group, their L- and epsilon-factors.

Irreducibles are ``sigma^eps omega_t`` (one-dimensional) and ``tau_(l,t)`` with
``l >= 1`` (two-dimensional). Exponents ``t`` are sympy expressions, so reps
depending on a complex parameter ``lambda`` stay symbolic.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Iterable

import sympy as sp
from scipy.special import loggamma

LAM = sp.Symbol("lambda")

_LOG_PI = math.log(math.pi)
_LOG_2PI = math.log(2 * math.pi)
_LOG_2 = math.log(2)


class PoleError(ArithmeticError):
    """Raised when a Gamma factor in a numerator is evaluated at a pole."""

    def __init__(self, kind: str, at: complex):
        super().__init__(f"Gamma_{kind} has a pole at {at}")
        self.kind = kind
        self.at = at


def _t(x) -> sp.Expr:
    return sp.nsimplify(x, rational=True) if isinstance(x, float) else sp.expand(sp.sympify(x))


def _key(t: sp.Expr) -> str:
    return sp.srepr(sp.expand(t))


@dataclass(frozen=True)
class WeilRealRep:
    one: tuple[tuple[int, sp.Expr], ...] = ()
    two: tuple[tuple[int, sp.Expr], ...] = ()

    def __post_init__(self):
        one = []
        for eps, t in self.one:
            if eps not in (0, 1):
                raise ValueError("eps must be 0 or 1")
            one.append((int(eps), _t(t)))
        two = []
        for l, t in self.two:
            if int(l) < 1:
                raise ValueError("tau_(l,t) needs l >= 1; l = 0 splits into one-dimensionals")
            two.append((int(l), _t(t)))
        object.__setattr__(self, "one", tuple(sorted(one, key=lambda x: (x[0], _key(x[1])))))
        object.__setattr__(self, "two", tuple(sorted(two, key=lambda x: (x[0], _key(x[1])))))

    @property
    def dim(self) -> int:
        return len(self.one) + 2 * len(self.two)

    def __add__(self, other: "WeilRealRep") -> "WeilRealRep":
        return WeilRealRep(self.one + other.one, self.two + other.two)

    def summands(self) -> list["WeilRealRep"]:
        return [WeilRealRep(one=(x,)) for x in self.one] + [WeilRealRep(two=(x,)) for x in self.two]

    def subs(self, value) -> "WeilRealRep":
        return WeilRealRep(tuple((e, t.subs(LAM, value)) for e, t in self.one),
                           tuple((l, t.subs(LAM, value)) for l, t in self.two))

    def __str__(self) -> str:
        parts = []
        for e, t in self.one:
            parts.append(("sigma*" if e else "") + f"omega_{t}")
        for l, t in self.two:
            parts.append(f"tau_({l},{t})")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"one": [{"eps": e, "t": str(t)} for e, t in self.one],
                "two": [{"l": l, "t": str(t)} for l, t in self.two]}

    @classmethod
    def from_json(cls, d: dict) -> "WeilRealRep":
        if not isinstance(d, dict):
            raise ValueError("rep JSON must be an object")
        try:
            one = [(int(x.get("eps", 0)), _parse_t(x.get("t", 0))) for x in d.get("one", [])]
            two = [(int(x["l"]), _parse_t(x.get("t", 0))) for x in d.get("two", [])]
        except (KeyError, TypeError, AttributeError, sp.SympifyError) as err:
            raise ValueError(f"malformed rep JSON: {err}") from err
        return cls(tuple(one), tuple(two))


def _parse_t(x) -> sp.Expr:
    if isinstance(x, str):
        # "lambda" is a Python keyword, so it cannot reach the parser as a name
        text = re.sub(r"\blambda\b", "lam", x.replace("λ", "lam"))
        return sp.sympify(text, locals={"lam": LAM})
    return _t(x)


def omega(t=0, eps: int = 0) -> WeilRealRep:
    return WeilRealRep(one=((eps, t),))


def tau(l: int, t=0) -> WeilRealRep:
    return WeilRealRep(two=((l, t),))


ZERO = WeilRealRep()


def direct_sum(reps: Iterable[WeilRealRep]) -> WeilRealRep:
    out = ZERO
    for r in reps:
        out = out + r
    return out


# --- ring operations ---------------------------------------------------------------

def dual(a: WeilRealRep) -> WeilRealRep:
    return WeilRealRep(tuple((e, -t) for e, t in a.one), tuple((l, -t) for l, t in a.two))


def _tensor_tau(l: int, s, m: int, t) -> WeilRealRep:
    if l == m:
        return tau(2 * l, s + t) + omega(s + t, 0) + omega(s + t, 1)
    return tau(l + m, s + t) + tau(abs(l - m), s + t)


def tensor(a: WeilRealRep, b: WeilRealRep) -> WeilRealRep:
    out = []
    for e, s in a.one:
        for d, t in b.one:
            out.append(omega(s + t, (e + d) % 2))
        for m, t in b.two:
            out.append(tau(m, s + t))
    for l, s in a.two:
        for d, t in b.one:
            out.append(tau(l, s + t))
        for m, t in b.two:
            out.append(_tensor_tau(l, s, m, t))
    return direct_sum(out)


def _irreducibles(a: WeilRealRep) -> list[WeilRealRep]:
    return a.summands()


def sym2(a: WeilRealRep) -> WeilRealRep:
    parts = _irreducibles(a)
    out = []
    for k, x in enumerate(parts):
        if x.one:
            _, t = x.one[0]
            out.append(omega(2 * t))
        else:
            l, t = x.two[0]
            out.append(tau(2 * l, 2 * t) + omega(2 * t, l % 2))
        for y in parts[k + 1:]:
            out.append(tensor(x, y))
    return direct_sum(out)


def wedge2(a: WeilRealRep) -> WeilRealRep:
    parts = _irreducibles(a)
    out = []
    for k, x in enumerate(parts):
        if x.two:
            l, t = x.two[0]
            # the determinant character of tau_(l,t)
            out.append(omega(2 * t, (l + 1) % 2))
        for y in parts[k + 1:]:
            out.append(tensor(x, y))
    return direct_sum(out)


# --- characters (numeric) ------------------------------------------------------------

def character(a: WeilRealRep, g: tuple[str, float, float]) -> complex:
    """Trace at ``z = r e^{i theta}`` (``g = ("z", r, theta)``) or at ``j z`` (``("jz", r, theta)``)."""
    kind, r, theta = g
    total = 0j
    for e, t in a.one:
        t = complex(t)
        v = r ** (2 * t)
        if kind == "jz" and e:
            v = -v
        total += v
    for l, t in a.two:
        t = complex(t)
        if kind == "z":
            total += r ** (2 * t) * 2 * math.cos(l * theta)
    return total


def square(g: tuple[str, float, float]) -> tuple[str, float, float]:
    kind, r, theta = g
    if kind == "z":
        return ("z", r * r, 2 * theta)
    # (j z)^2 = -|z|^2
    return ("z", r * r, math.pi)


# --- Gamma functions ---------------------------------------------------------------

def _is_nonpos_int(x: complex, step: int) -> bool:
    if abs(x.imag) > 1e-12:
        return False
    re = x.real
    k = round(re)
    return abs(re - k) < 1e-12 and k <= 0 and k % step == 0


def log_gamma_r(s) -> complex:
    s = complex(s)
    if _is_nonpos_int(s, 2):
        raise PoleError("R", s)
    return -s / 2 * _LOG_PI + complex(loggamma(s / 2))


def log_gamma_c(s) -> complex:
    s = complex(s)
    if _is_nonpos_int(s, 1):
        raise PoleError("C", s)
    return _LOG_2 - s * _LOG_2PI + complex(loggamma(s))


def gamma_r(s) -> complex:
    """pi^(-s/2) Gamma(s/2)."""
    v = cmath.exp(log_gamma_r(s))
    return v.real if complex(s).imag == 0 else v


def gamma_c(s) -> complex:
    """2 (2 pi)^(-s) Gamma(s)."""
    v = cmath.exp(log_gamma_c(s))
    return v.real if complex(s).imag == 0 else v


def rgamma(kind: str, s) -> complex:
    """1/Gamma_kind(s), which vanishes at the poles."""
    try:
        lg = log_gamma_r(s) if kind == "R" else log_gamma_c(s)
    except PoleError:
        return 0.0
    return cmath.exp(-lg)


# --- L and epsilon ---------------------------------------------------------------

@dataclass(frozen=True)
class GammaFactor:
    kind: str  # "R" or "C"
    arg: sp.Expr

    def key(self) -> tuple[str, str]:
        return (self.kind, _key(self.arg))

    def __str__(self) -> str:
        return f"Gamma_{self.kind}({self.arg})"


def l_factor_symbolic(a: WeilRealRep, s) -> list[GammaFactor]:
    s = _t(s)
    out = []
    for e, t in a.one:
        out.append(GammaFactor("R", sp.expand(s + t + e)))
    for l, t in a.two:
        out.append(GammaFactor("C", sp.expand(s + t + sp.Rational(l, 2))))
    return out


def _eval_arg(arg: sp.Expr, lam) -> complex:
    v = arg.subs(LAM, lam) if lam is not None else arg
    return complex(sp.N(v, 30))


def l_factor(a: WeilRealRep, s, lam=None) -> complex:
    """L(s, a) as a number; ``lam`` substitutes the symbol lambda when present."""
    total = 0j
    for f in l_factor_symbolic(a, s):
        x = _eval_arg(f.arg, lam)
        total += log_gamma_r(x) if f.kind == "R" else log_gamma_c(x)
    return cmath.exp(total)


def epsilon_factor(a: WeilRealRep) -> complex:
    """epsilon(s, a, psi_R), independent of s: 1, i, i^(l+1) per summand."""
    power = sum(e for e, _ in a.one) + sum(l + 1 for l, _ in a.two)
    return 1j ** (power % 4)


def _i_power(a: WeilRealRep) -> int:
    return (sum(e for e, _ in a.one) + sum(l + 1 for l, _ in a.two)) % 4


# --- the adjoint action on the Levi and normalizing ratios ----------------------------

def rho_dual(k: int, phi_gl: WeilRealRep, phi_so: WeilRealRep, lam=LAM) -> WeilRealRep:
    """rho^dual o phi_lambda for the maximal Levi GL_k x SO_{2n0+1}."""
    if phi_gl.dim != k:
        raise ValueError(f"phi_gl has dimension {phi_gl.dim}, expected k = {k}")
    if phi_so.dim % 2:
        raise ValueError("phi_so must have even dimension 2 n0")
    twisted = tensor(phi_gl, omega(lam))
    return tensor(twisted, phi_so) + sym2(twisted)


@dataclass(frozen=True)
class GammaRatio:
    """``const * prod(num) / prod(den)`` with Gamma_R / Gamma_C factors."""

    const: complex
    num: tuple[GammaFactor, ...]
    den: tuple[GammaFactor, ...]

    def cancelled(self) -> "GammaRatio":
        num = list(self.num)
        den = []
        for f in self.den:
            hit = next((k for k, g in enumerate(num) if g.key() == f.key()), None)
            if hit is None:
                den.append(f)
            else:
                num.pop(hit)
        return GammaRatio(self.const, tuple(sorted(num, key=GammaFactor.key)),
                          tuple(sorted(den, key=GammaFactor.key)))

    def __mul__(self, other: "GammaRatio") -> "GammaRatio":
        return GammaRatio(self.const * other.const, self.num + other.num, self.den + other.den).cancelled()

    def signature(self) -> tuple:
        c = self.cancelled()
        return (complex(c.const), tuple(f.key() for f in c.num), tuple(f.key() for f in c.den))

    def evaluate(self, lam=None) -> complex:
        """Numeric value; denominators use the reciprocal Gamma so their poles give 0."""
        log_num = 0j
        for f in self.num:
            x = _eval_arg(f.arg, lam)
            log_num += log_gamma_r(x) if f.kind == "R" else log_gamma_c(x)
        val = self.const * cmath.exp(log_num)
        for f in self.den:
            val *= rgamma(f.kind, _eval_arg(f.arg, lam))
        return val

    def to_sympy(self) -> sp.Expr:
        def g(f: GammaFactor):
            if f.kind == "R":
                return sp.pi ** (-f.arg / 2) * sp.gamma(f.arg / 2)
            return 2 * (2 * sp.pi) ** (-f.arg) * sp.gamma(f.arg)

        c = sp.nsimplify(self.const.real) + sp.I * sp.nsimplify(self.const.imag)
        expr = c
        for f in self.num:
            expr *= g(f)
        for f in self.den:
            expr /= g(f)
        return expr

    def __str__(self) -> str:
        c = self.const
        cs = f"{c.real:g}" if c.imag == 0 else f"{c}"
        num = " * ".join(map(str, self.num)) or "1"
        den = " * ".join(map(str, self.den)) or "1"
        return f"{cs} * [{num}] / [{den}]"


def normalizing_ratio(rep: WeilRealRep, mode: str = "combined") -> GammaRatio:
    """``"combined"``: eps(0) L(1)/L(0). ``"r"``: L(0)/L(1) * eps(1/2)/eps(0).

    The lambda-factor is identically 1 and contributes nothing.
    """
    if mode == "combined":
        ratio = GammaRatio(1j ** _i_power(rep), tuple(l_factor_symbolic(rep, 1)),
                           tuple(l_factor_symbolic(rep, 0)))
    elif mode == "r":
        # epsilon does not depend on s, so the epsilon quotient is 1
        ratio = GammaRatio(1 + 0j, tuple(l_factor_symbolic(rep, 0)), tuple(l_factor_symbolic(rep, 1)))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    c = ratio.cancelled()
    const = complex(round(c.const.real), round(c.const.imag))
    return GammaRatio(const, c.num, c.den)


# the two maximal-Levi cases

def rho_so14(lam=LAM) -> WeilRealRep:
    return rho_dual(1, omega(0), tau(1), lam)


def rho_so25(lam=LAM) -> WeilRealRep:
    return rho_dual(2, tau(1), tau(1), lam)


def duplication_residual(s: float) -> float:
    """Relative gap in Gamma_R(s) Gamma_R(s+1) = Gamma_C(s)."""
    lhs = gamma_r(s) * gamma_r(s + 1)
    rhs = gamma_c(s)
    return abs(lhs - rhs) / abs(rhs)

