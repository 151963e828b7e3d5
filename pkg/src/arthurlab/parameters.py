"""Local parameters for SO(2n+1): components, centralizers, component groups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterator

SELFDUAL_TYPES = ("symplectic", "orthogonal", "none")
CLASSES = ("discrete", "elliptic2", "exc1", "exc2", "other")


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class IrreducibleComponent:
    """An irreducible constituent ``mu x nu_{su2_dim}`` of total dimension ``dim``.

    ``selfdual == "none"`` stands for the pair psi + psi^dual; ``dual_label`` names the
    partner when it is known.
    """

    label: str
    dim: int
    selfdual: str
    su2_dim: int = 1
    dual_label: str | None = None
    arch: Any = field(default=None, compare=False)

    def __post_init__(self):
        if self.selfdual not in SELFDUAL_TYPES:
            raise ParameterError(f"unknown self-duality type {self.selfdual!r}")
        if self.dim < 1 or self.su2_dim < 1:
            raise ParameterError("dimensions must be positive")
        if self.selfdual == "symplectic" and self.dim % 2:
            raise ParameterError(f"symplectic component {self.label} has odd dimension")
        if self.arch is not None:
            d = getattr(self.arch, "dim", None)
            if d is not None and d != self.dim:
                raise ParameterError(f"realization of {self.label} has dimension {d}, not {self.dim}")

    def key(self) -> tuple:
        return (self.selfdual, self.dim, self.su2_dim)


@dataclass(frozen=True)
class LocalParameter:
    components: tuple[tuple[IrreducibleComponent, int], ...]

    @property
    def total_dim(self) -> int:
        return sum(m * c.dim * (2 if c.selfdual == "none" else 1) for c, m in self.components)

    @property
    def n(self) -> int:
        return self.total_dim // 2

    def symplectic(self) -> list[tuple[IrreducibleComponent, int]]:
        return [(c, m) for c, m in self.components if c.selfdual == "symplectic"]

    @property
    def symplectic_labels(self) -> tuple[str, ...]:
        return tuple(c.label for c, _ in self.symplectic())

    def profile(self) -> tuple:
        """Sorted (type, dim, su2, mult) tuples; the data every invariant depends on."""
        return tuple(sorted((c.selfdual, c.dim, c.su2_dim, m) for c, m in self.components))

    def to_json(self) -> dict:
        comps = []
        for c, m in self.components:
            d = {"label": c.label, "dim": c.dim, "selfdual": c.selfdual, "mult": m, "su2": c.su2_dim}
            if c.dual_label is not None:
                d["dual"] = c.dual_label
            comps.append(d)
        return {"components": comps}


def validate(components, n: int | None = None) -> LocalParameter:
    """Normalize ``[(component, mult), ...]`` into a :class:`LocalParameter`.

    Dual pairs listed as two entries ``X`` / ``X^dual`` are merged into one entry
    under the smaller label.
    """
    items = list(components)
    labels = [c.label for c, _ in items]
    if len(set(labels)) != len(labels):
        raise ParameterError("duplicate component labels")
    by_label = {c.label: (c, m) for c, m in items}
    out: list[tuple[IrreducibleComponent, int]] = []
    seen: set[str] = set()
    for c, m in items:
        if not isinstance(m, int) or m < 1:
            raise ParameterError(f"multiplicity of {c.label} must be a positive integer")
        if c.label in seen:
            continue
        if c.selfdual == "orthogonal" and m % 2:
            raise ParameterError(f"orthogonal component {c.label} has odd multiplicity {m}")
        if c.selfdual == "none" and c.dual_label in by_label:
            partner, pm = by_label[c.dual_label]
            if partner.selfdual != "none" or partner.dim != c.dim or pm != m:
                raise ParameterError(f"{c.label} and {c.dual_label} are not a dual pair")
            if partner.dual_label not in (None, c.label):
                raise ParameterError(f"inconsistent dual labels for {c.label}")
            seen.add(partner.label)
            keep = c if c.label < partner.label else partner
            out.append((keep, m))
        else:
            out.append((c, m))
        seen.add(c.label)
    param = LocalParameter(tuple(out))
    if param.total_dim % 2:
        raise ParameterError(f"total dimension {param.total_dim} is odd")
    if n is not None and param.total_dim != 2 * n:
        raise ParameterError(f"total dimension {param.total_dim} does not equal 2n = {2 * n}")
    return param


def from_json(spec: dict, n: int | None = None) -> LocalParameter:
    if not isinstance(spec, dict) or "components" not in spec:
        raise ParameterError("parameter JSON needs a 'components' list")
    items = []
    for raw in spec["components"]:
        try:
            comp = IrreducibleComponent(
                label=str(raw["label"]),
                dim=int(raw["dim"]),
                selfdual=str(raw["selfdual"]),
                su2_dim=int(raw.get("su2", 1)),
                dual_label=raw.get("dual"),
            )
            mult = raw.get("mult", 1)
        except (KeyError, TypeError) as err:
            raise ParameterError(f"malformed component {raw!r}") from err
        if not isinstance(mult, int):
            raise ParameterError("mult must be an integer")
        items.append((comp, mult))
    return validate(items, n)


# --- centralizer and component group ----------------------------------------------

@dataclass(frozen=True)
class CentralizerShape:
    factors: tuple[tuple[str, int, str], ...]  # (kind, size, label)

    @property
    def component_group_order(self) -> int:
        return 2 ** sum(1 for k, _, _ in self.factors if k == "O")

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " x ".join(f"{k}({s})" for k, s, _ in self.factors)


def centralizer(param: LocalParameter) -> CentralizerShape:
    kinds = {"symplectic": "O", "orthogonal": "Sp", "none": "GL"}
    return CentralizerShape(tuple((kinds[c.selfdual], m, c.label) for c, m in param.components))


@dataclass(frozen=True)
class ComponentGroupElement:
    """An element of the F_2-module with basis ``a_i``, one per symplectic component."""

    basis: tuple[str, ...]
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.basis) != len(self.coeffs):
            raise ValueError("basis/coefficient length mismatch")
        object.__setattr__(self, "coeffs", tuple(int(c) % 2 for c in self.coeffs))

    def __add__(self, other: "ComponentGroupElement") -> "ComponentGroupElement":
        if self.basis != other.basis:
            raise ValueError("elements of different component groups")
        return ComponentGroupElement(self.basis, tuple(a ^ b for a, b in zip(self.coeffs, other.coeffs)))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[str]:
        return [b for b, c in zip(self.basis, self.coeffs) if c]

    def __str__(self) -> str:
        s = self.support()
        return " + ".join(f"a[{b}]" for b in s) if s else "0"


@dataclass(frozen=True)
class ComponentGroup:
    basis: tuple[str, ...]

    @property
    def order(self) -> int:
        return 2 ** len(self.basis)

    def zero(self) -> ComponentGroupElement:
        return ComponentGroupElement(self.basis, (0,) * len(self.basis))

    def elements(self) -> Iterator[ComponentGroupElement]:
        for bits in itertools.product((0, 1), repeat=len(self.basis)):
            yield ComponentGroupElement(self.basis, bits)


def component_group(param: LocalParameter) -> ComponentGroup:
    return ComponentGroup(param.symplectic_labels)


def s_psi_image(param: LocalParameter) -> ComponentGroupElement:
    """Image of s_psi = psi(1, -1): nu_a(-1) = (-1)^(a-1) on each copy."""
    coeffs = tuple(m * (c.su2_dim - 1) for c, m in param.symplectic())
    return ComponentGroupElement(param.symplectic_labels, coeffs)


def center_image(param: LocalParameter) -> ComponentGroupElement:
    """Image of -1 in Z(Sp(2n)): det(-1_l) = (-1)^l on each O(l) factor."""
    coeffs = tuple(m for _, m in param.symplectic())
    return ComponentGroupElement(param.symplectic_labels, coeffs)


def character_value(eps: tuple[int, ...], x: ComponentGroupElement) -> int:
    """``eps`` lists the values (+-1) on the basis vectors."""
    return -1 if sum(1 for e, c in zip(eps, x.coeffs) if e == -1 and c) % 2 else 1


def characters(param: LocalParameter, chi: int) -> list[tuple[int, ...]]:
    """Characters of the component group restricting to ``chi`` on the center image."""
    if chi not in (1, -1):
        raise ValueError("chi must be +1 or -1")
    z = center_image(param)
    out = []
    for eps in itertools.product((1, -1), repeat=len(z.basis)):
        if character_value(eps, z) == chi:
            out.append(eps)
    return out


# --- classification --------------------------------------------------------------

def classify(param: LocalParameter) -> str:
    comps = param.components
    sym = [m for c, m in comps if c.selfdual == "symplectic"]
    orth = [m for c, m in comps if c.selfdual == "orthogonal"]
    pairs = [m for c, m in comps if c.selfdual == "none"]
    if pairs:
        return "other"
    if not orth:
        if all(m == 1 for m in sym):
            return "discrete"
        if all(m in (1, 2) for m in sym):
            return "elliptic2"
        if sorted(sym)[-1] == 3 and sum(1 for m in sym if m != 1) == 1:
            return "exc2"
        return "other"
    if orth == [2] and all(m == 1 for m in sym):
        return "exc1"
    return "other"


def is_elliptic_shape(param: LocalParameter) -> bool:
    """The 2psi_1 + ... + 2psi_q + psi_{q+1} + ... shape, q >= 0, all symplectic."""
    return all(c.selfdual == "symplectic" and m in (1, 2) for c, m in param.components)


def report(param: LocalParameter) -> dict:
    return {
        "center_image": center_image(param).support(),
        "centralizer": str(centralizer(param)),
        "class": classify(param),
        "component_group_order": component_group(param).order,
        "n": param.n,
        "s_psi_image": s_psi_image(param).support(),
    }


# --- enumeration -----------------------------------------------------------------

def _kinds(max_dim: int) -> list[tuple[str, int, int]]:
    """(type, dim, mult) triples of a single component fitting in max_dim."""
    out = []
    for d in range(1, max_dim + 1):
        for m in range(1, max_dim + 1):
            if d % 2 == 0 and d * m <= max_dim:
                out.append(("symplectic", d, m))
            if m % 2 == 0 and d * m <= max_dim:
                out.append(("orthogonal", d, m))
            if 2 * d * m <= max_dim:
                out.append(("none", d, m))
    return out


def _cost(kind) -> int:
    t, d, m = kind
    return d * m * (2 if t == "none" else 1)


def enumerate_parameters(max_dim: int, exact: bool = False) -> Iterator[LocalParameter]:
    """Every component profile with even total dimension <= max_dim (or == if exact).

    Components with equal (type, dim, mult) may repeat; they model distinct irreducibles
    of the same shape.
    """
    kinds = _kinds(max_dim)

    def rec(start: int, budget: int, chosen: list):
        used = max_dim - budget
        if chosen and used % 2 == 0 and (not exact or used == max_dim):
            yield list(chosen)
        for k in range(start, len(kinds)):
            c = _cost(kinds[k])
            if c <= budget:
                chosen.append(kinds[k])
                yield from rec(k, budget - c, chosen)
                chosen.pop()

    for prof in rec(0, max_dim, []):
        items = []
        for idx, (t, d, m) in enumerate(prof):
            items.append((IrreducibleComponent(f"c{idx}", d, t), m))
        yield validate(items)
