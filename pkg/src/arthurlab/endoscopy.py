"""Elliptic endoscopic triples of SO(2n+1) and the (e, psi^e) <-> (psi, s) bookkeeping."""
from __future__ import annotations

import cmath
from dataclasses import dataclass

from . import parameters as prm


class EndoscopyError(ValueError):
    pass


@dataclass(frozen=True)
class EllipticTriple:
    n1: int
    n2: int

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def s_diagonal(self) -> list[int]:
        """s_{n1,n2} = diag(1_{n1}, -1_{n2}, 1_{n1}, -1_{n2}) in Sp(2n)."""
        half = [1] * self.n1 + [-1] * self.n2
        return half + half

    def group(self) -> str:
        return f"SO{2 * self.n1 + 1} x SO{2 * self.n2 + 1}"

    def normalized(self) -> "EllipticTriple":
        # e_{n1,n2} and e_{n2,n1} are isomorphic via -s
        return self if self.n1 >= self.n2 else EllipticTriple(self.n2, self.n1)

    def to_json(self) -> dict:
        return {"n1": self.n1, "n2": self.n2, "group": self.group(), "s": self.s_diagonal()}


def elliptic_triples(n: int, strict: bool = False) -> list[EllipticTriple]:
    if n < 0:
        raise EndoscopyError("n must be non-negative")
    if strict:
        return [EllipticTriple(n - k, k) for k in range(n + 1)]
    return [EllipticTriple(n - k, k) for k in range(n // 2 + 1)]


@dataclass(frozen=True)
class EndoscopicGroup:
    gl: tuple[int, ...]
    n1: int
    n2: int

    @property
    def dim(self) -> int:
        return sum(m * m for m in self.gl) + self.n1 * (2 * self.n1 + 1) + self.n2 * (2 * self.n2 + 1)

    def __str__(self) -> str:
        parts = [f"GL{m}" for m in self.gl] + [f"SO{2 * self.n1 + 1}", f"SO{2 * self.n2 + 1}"]
        return " x ".join(parts)


def _eig_key(a: complex) -> tuple[float, float]:
    # {a, 1/a} describe the same block; keep the member with larger (re, im)
    b = 1 / a
    rep = max((a.real, a.imag), (b.real, b.imag))
    return rep


def centralizer_of_s(blocks, n1: int, n2: int) -> EndoscopicGroup:
    """Centralizer in Sp(2n) of s = diag(a_k 1_{m_k}, 1_{n1}, -1_{n2}, a_k^-1 1_{m_k}, ...).

    ``blocks`` lists ``(a_k, m_k)`` with a_k != +-1; blocks with the same class
    {a, 1/a} merge. GL factors are ordered lexicographically by eigenvalue.
    """
    if n1 < 0 or n2 < 0:
        raise EndoscopyError("n1, n2 must be non-negative")
    merged: dict[tuple[float, float], int] = {}
    for a, m in blocks:
        a = complex(a)
        if m < 1:
            raise EndoscopyError("block sizes must be positive")
        if a == 0 or cmath.isclose(a, 1) or cmath.isclose(a, -1):
            raise EndoscopyError("GL blocks need eigenvalues other than 0, 1, -1")
        k = _eig_key(a)
        k = (round(k[0], 12), round(k[1], 12))
        merged[k] = merged.get(k, 0) + m
    gl = tuple(merged[k] for k in sorted(merged, reverse=True))
    return EndoscopicGroup(gl, n1, n2)


def _signature_map(param: prm.LocalParameter, signs) -> dict[str, tuple[int, int]]:
    if isinstance(signs, dict):
        raw = signs
    else:
        signs = list(signs)
        if len(signs) != len(param.components):
            raise EndoscopyError("one signature per component is required")
        raw = {c.label: sg for (c, _), sg in zip(param.components, signs)}
    out = {}
    for c, m in param.components:
        if c.label not in raw:
            raise EndoscopyError(f"missing signature for {c.label}")
        sg = raw[c.label]
        if isinstance(sg, int):
            if sg not in (1, -1):
                raise EndoscopyError("scalar signs must be +1 or -1")
            p, q = (m, 0) if sg == 1 else (0, m)
        else:
            try:
                p, q = (int(v) for v in sg)
            except (TypeError, ValueError) as err:
                raise EndoscopyError(f"bad signature for {c.label}: {sg!r}") from err
        if p < 0 or q < 0 or p + q != m:
            raise EndoscopyError(f"signature ({p},{q}) of {c.label} does not split multiplicity {m}")
        if c.selfdual == "orthogonal" and (p % 2 or q % 2):
            raise EndoscopyError(f"orthogonal component {c.label} needs even signature parts")
        out[c.label] = (p, q)
    extra = set(raw) - {c.label for c, _ in param.components}
    if extra:
        raise EndoscopyError(f"signatures for unknown components {sorted(extra)}")
    return out


@dataclass(frozen=True)
class Correspondence:
    triple: EllipticTriple
    psi1: prm.LocalParameter
    psi2: prm.LocalParameter
    s_image: prm.ComponentGroupElement

    def to_json(self) -> dict:
        return {
            "psi_e": [self.psi1.to_json(), self.psi2.to_json()],
            "s_image": self.s_image.support(),
            "triple": self.triple.to_json(),
        }


def correspond(param: prm.LocalParameter, signs) -> Correspondence:
    """psi^e = (sum p_i psi_i, sum q_i psi_i) for s with signature (p_i, q_i) on each factor."""
    sig = _signature_map(param, signs)
    plus, minus = [], []
    for c, _ in param.components:
        p, q = sig[c.label]
        if p:
            plus.append((c, p))
        if q:
            minus.append((c, q))
    try:
        psi1 = prm.validate(plus)
        psi2 = prm.validate(minus)
    except prm.ParameterError as err:
        raise EndoscopyError(str(err)) from err
    triple = EllipticTriple(psi1.n, psi2.n)
    # det of s on O(l_i) is (-1)^{q_i}
    s_image = prm.ComponentGroupElement(param.symplectic_labels,
                                        tuple(sig[c.label][1] for c, _ in param.symplectic()))
    return Correspondence(triple, psi1, psi2, s_image)


def recombine(corr: Correspondence) -> prm.LocalParameter:
    """eta o psi^e: add the two factor parameters back together."""
    mult: dict[str, int] = {}
    comp: dict[str, prm.IrreducibleComponent] = {}
    for part in (corr.psi1, corr.psi2):
        for c, m in part.components:
            mult[c.label] = mult.get(c.label, 0) + m
            comp[c.label] = c
    return prm.validate([(comp[lab], m) for lab, m in mult.items()])


def signature_space(param: prm.LocalParameter):
    """All admissible signature assignments for a parameter (per-component (p, q))."""
    import itertools

    choices = []
    for c, m in param.components:
        step = 2 if c.selfdual == "orthogonal" else 1
        choices.append([(p, m - p) for p in range(0, m + 1, step)])
    for combo in itertools.product(*choices):
        yield {c.label: sg for (c, _), sg in zip(param.components, combo)}


# --- the (ecr) bookkeeping ---------------------------------------------------------

def ecr_summand(param: prm.LocalParameter, s, character_table: dict, e_sign: int,
                alpha: int | None = None) -> dict:
    """Coefficients e(G) <s_psi s, pi> of the endoscopic character relation.

    ``character_table`` maps a packet member to its character, given as the values
    (+-1) on the basis a_i of the component group. When ``alpha`` is given, every
    character must take that value on the image of the center.
    """
    if e_sign not in (1, -1):
        raise EndoscopyError("e(G) must be +1 or -1")
    s_img = s if isinstance(s, prm.ComponentGroupElement) else correspond(param, s).s_image
    basis = param.symplectic_labels
    if s_img.basis != basis:
        raise EndoscopyError("s does not live in this component group")
    x = prm.s_psi_image(param) + s_img
    z = prm.center_image(param)
    terms = []
    for name in sorted(character_table):
        eps = tuple(int(v) for v in character_table[name])
        if len(eps) != len(basis) or any(v not in (1, -1) for v in eps):
            raise EndoscopyError(f"character of {name} is not a sign vector on {len(basis)} generators")
        if alpha is not None and prm.character_value(eps, z) != alpha:
            raise EndoscopyError(f"character of {name} does not restrict to {alpha} on the center")
        terms.append({"member": name, "coefficient": e_sign * prm.character_value(eps, x)})
    return {"e": e_sign, "s_psi_s": x.support(), "terms": terms}
