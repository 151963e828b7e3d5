"""The Levi diagram: W_psi(M,G), the x-map, and the exact diagram of component groups.

Signed permutations on ``m`` letters are pairs ``(perm, flips)``: the basis vector
``e_h`` goes to ``(-1)**flips[h] * e_{perm[h]}``.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import parameters as prm

SignedPerm = tuple[tuple[int, ...], tuple[int, ...]]


# --- signed permutations ---------------------------------------------------------

def sp_identity(m: int) -> SignedPerm:
    return tuple(range(m)), (0,) * m


def sp_compose(a: SignedPerm, b: SignedPerm) -> SignedPerm:
    """``a * b`` (apply b first)."""
    pa, fa = a
    pb, fb = b
    return tuple(pa[pb[h]] for h in range(len(pb))), tuple((fb[h] + fa[pb[h]]) % 2 for h in range(len(pb)))


def sp_inverse(a: SignedPerm) -> SignedPerm:
    p, f = a
    inv = [0] * len(p)
    finv = [0] * len(p)
    for h, ph in enumerate(p):
        inv[ph] = h
        finv[ph] = f[h]
    return tuple(inv), tuple(finv)


def sp_matrix(a: SignedPerm) -> np.ndarray:
    p, f = a
    m = np.zeros((len(p), len(p)), dtype=np.int64)
    for h, ph in enumerate(p):
        m[ph, h] = -1 if f[h] else 1
    return m


def x_parity(a: SignedPerm) -> int:
    """The homomorphism (sigma, d) -> sum of d_h mod 2."""
    return sum(a[1]) % 2


def is_regular_signed(a: SignedPerm) -> bool:
    """No eigenvalue 1: every cycle carries an odd number of sign flips."""
    p, f = a
    seen = [False] * len(p)
    for start in range(len(p)):
        if seen[start]:
            continue
        h, flips = start, 0
        while not seen[h]:
            seen[h] = True
            flips += f[h]
            h = p[h]
        if flips % 2 == 0:
            return False
    return True


def hyperoctahedral(e: int) -> list[SignedPerm]:
    return [(p, f) for p in itertools.permutations(range(e))
            for f in itertools.product((0, 1), repeat=e)]


def symmetric(e: int) -> list[SignedPerm]:
    return [(p, (0,) * e) for p in itertools.permutations(range(e))]


def closure(gens: Iterable[SignedPerm], m: int, cap: int = 10 ** 6) -> set[SignedPerm]:
    """Subgroup generated by ``gens`` inside the hyperoctahedral group on m letters."""
    gens = list(gens)
    start = sp_identity(m)
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = sp_compose(s, g)
            if h not in seen:
                seen.add(h)
                if len(seen) > cap:
                    raise OverflowError("group too large to enumerate")
                queue.append(h)
    return seen


def w_group_generators(e: int, e_dual: int) -> list[SignedPerm]:
    m = e + e_dual
    gens = []

    def transposition(a, b):
        p = list(range(m))
        p[a], p[b] = p[b], p[a]
        return tuple(p), (0,) * m

    for a in range(e - 1):
        gens.append(transposition(a, a + 1))
    for a in range(e, m - 1):
        gens.append(transposition(a, a + 1))
    for h in range(e):
        for hd in range(e, m):
            p, _ = transposition(h, hd)
            f = [0] * m
            f[h] = f[hd] = 1
            gens.append((p, tuple(f)))
    return gens


def w_group(e: int, e_dual: int) -> set[SignedPerm]:
    """W(e, e_dual) by breadth-first closure of its generators."""
    if e < 1 or e_dual < 1:
        raise ValueError("W(e, e_dual) needs e >= 1 and e_dual >= 1")
    return closure(w_group_generators(e, e_dual), e + e_dual)


# --- shapes ----------------------------------------------------------------------

class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class ComponentInfo:
    selfdual: str
    dim: int
    dual: str


@dataclass(frozen=True)
class GLBlock:
    psi: tuple[tuple[str, int], ...]  # sorted (label, mult)
    e: int

    def as_dict(self) -> dict[str, int]:
        return dict(self.psi)


@dataclass(frozen=True)
class Block:
    """One factor of W_psi: kind T1 (signed perms), T2 (perms) or T3 (W(e, e_dual))."""

    kind: str
    t: int
    size: int
    e: int
    e_dual: int = 0
    partner: int | None = None


@dataclass
class LeviShape:
    catalogue: dict[str, ComponentInfo]
    gl_blocks: tuple[GLBlock, ...]
    so_block: tuple[tuple[str, int], ...]
    t_partition: dict[str, list[int]] = field(default_factory=dict)
    blocks: tuple[Block, ...] = ()

    # ψ_t^dual as a sorted tuple
    def dual_psi(self, psi: tuple[tuple[str, int], ...]) -> tuple[tuple[str, int], ...]:
        return tuple(sorted((self.catalogue[lab].dual, m) for lab, m in psi))

    def multiplicities(self) -> dict[str, int]:
        """Multiplicity of every label in psi_G."""
        mult: dict[str, int] = {}
        for b in self.gl_blocks:
            for lab, m in b.psi:
                mult[lab] = mult.get(lab, 0) + b.e * m
                d = self.catalogue[lab].dual
                mult[d] = mult.get(d, 0) + b.e * m
        for lab, m in self.so_block:
            mult[lab] = mult.get(lab, 0) + m
        return {k: v for k, v in mult.items() if v}

    @property
    def n(self) -> int:
        total = sum(m * self.catalogue[lab].dim for lab, m in self.multiplicities().items())
        return total // 2

    def k(self, t: int) -> int:
        return sum(m * self.catalogue[lab].dim for lab, m in self.gl_blocks[t].psi)

    @property
    def n0(self) -> int:
        return sum(m * self.catalogue[lab].dim for lab, m in self.so_block) // 2

    def symplectic_labels(self) -> tuple[str, ...]:
        mult = self.multiplicities()
        return tuple(sorted(lab for lab in mult if self.catalogue[lab].selfdual == "symplectic"))

    def i0_plus(self) -> tuple[str, ...]:
        return tuple(sorted(lab for lab, m in self.so_block
                            if m and self.catalogue[lab].selfdual == "symplectic"))

    def ell(self, t: int, label: str) -> int:
        return self.gl_blocks[t].as_dict().get(label, 0)

    def local_parameter(self) -> prm.LocalParameter:
        items = []
        done = set()
        for lab, m in sorted(self.multiplicities().items()):
            if lab in done:
                continue
            info = self.catalogue[lab]
            done.add(lab)
            if info.selfdual == "none":
                done.add(info.dual)
            items.append((prm.IrreducibleComponent(lab, info.dim, info.selfdual,
                                                   dual_label=info.dual if info.selfdual == "none" else None), m))
        return prm.validate(items)

    def w_order(self) -> int:
        total = 1
        for b in self.blocks:
            if b.kind == "T1":
                total *= 2 ** b.e * math.factorial(b.e)
            elif b.kind == "T2":
                total *= math.factorial(b.e)
            else:
                total *= math.factorial(b.e + b.e_dual)
        return total

    def to_json(self) -> dict:
        comps = {}
        for lab, info in sorted(self.catalogue.items()):
            d = {"selfdual": info.selfdual, "dim": info.dim}
            if info.selfdual == "none":
                d["dual"] = info.dual
            comps[lab] = d
        return {
            "components": comps,
            "gl_blocks": [{"psi": dict(b.psi), "e": b.e} for b in self.gl_blocks],
            "so_block": dict(self.so_block),
        }


def _catalogue(raw: dict) -> dict[str, ComponentInfo]:
    cat: dict[str, ComponentInfo] = {}
    for lab, d in raw.items():
        sd = d.get("selfdual")
        if sd not in prm.SELFDUAL_TYPES:
            raise ShapeError(f"component {lab}: bad selfdual {sd!r}")
        dim = int(d.get("dim", 1))
        if dim < 1:
            raise ShapeError(f"component {lab}: dimension must be positive")
        if sd == "symplectic" and dim % 2:
            raise ShapeError(f"symplectic component {lab} has odd dimension")
        if sd == "none":
            dual = d.get("dual")
            if not dual or dual == lab:
                raise ShapeError(f"component {lab}: non-self-dual needs a distinct 'dual' label")
        else:
            dual = lab
        cat[lab] = ComponentInfo(sd, dim, dual)
    for lab, info in list(cat.items()):
        if info.selfdual == "none":
            if info.dual not in cat:
                cat[info.dual] = ComponentInfo("none", info.dim, lab)
            other = cat[info.dual]
            if other.selfdual != "none" or other.dual != lab or other.dim != info.dim:
                raise ShapeError(f"{lab} and {info.dual} are not a dual pair")
    return cat


def _norm_psi(raw: dict, cat) -> tuple[tuple[str, int], ...]:
    out = []
    for lab, m in raw.items():
        if lab not in cat:
            raise ShapeError(f"unknown component label {lab!r}")
        if not isinstance(m, int) or m < 0:
            raise ShapeError(f"multiplicity of {lab} must be a non-negative integer")
        if m:
            out.append((lab, m))
    return tuple(sorted(out))


def make_shape(components: dict, gl_blocks: list, so_block: dict) -> LeviShape:
    """Build and validate a shape; derives the T-partition and the W-blocks."""
    cat = _catalogue(components)
    blocks = []
    for b in gl_blocks:
        psi = _norm_psi(b["psi"], cat)
        e = int(b.get("e", 1))
        if not psi:
            raise ShapeError("a GL block needs a nonzero parameter")
        if e < 1:
            raise ShapeError("e_t must be positive")
        blocks.append(GLBlock(psi, e))
    if len({b.psi for b in blocks}) != len(blocks):
        raise ShapeError("the block parameters psi_t must be mutually distinct")
    so = _norm_psi(so_block, cat)
    so_d = dict(so)
    for lab, m in so:
        info = cat[lab]
        if info.selfdual == "orthogonal" and m % 2:
            raise ShapeError(f"orthogonal {lab} has odd multiplicity in psi_0")
        if info.selfdual == "none" and so_d.get(info.dual, 0) != m:
            raise ShapeError(f"psi_0 is not self-dual at {lab}")
    shape = LeviShape(cat, tuple(blocks), so)
    _partition(shape)
    shape.local_parameter()  # validates parity rules on psi_G
    return shape


def _partition(shape: LeviShape) -> None:
    index = {b.psi: t for t, b in enumerate(shape.gl_blocks)}
    part = {"T1": [], "T2": [], "T3": [], "T4": []}
    wblocks = []
    for t, b in enumerate(shape.gl_blocks):
        d = shape.dual_psi(b.psi)
        if d == b.psi:
            part["T1"].append(t)
            wblocks.append(Block("T1", t, b.e, b.e))
            continue
        t2 = index.get(d)
        if t2 is None:
            part["T2"].append(t)
            wblocks.append(Block("T2", t, b.e, b.e))
        elif t < t2:
            part["T3"].append(t)
            e_dual = shape.gl_blocks[t2].e
            wblocks.append(Block("T3", t, b.e + e_dual, b.e, e_dual, t2))
        else:
            part["T4"].append(t)
    shape.t_partition = part
    shape.blocks = tuple(wblocks)


def shape_from_json(d: dict) -> LeviShape:
    if not isinstance(d, dict):
        raise ShapeError("shape JSON must be an object")
    try:
        return make_shape(d.get("components", {}), d.get("gl_blocks", []), d.get("so_block", {}))
    except (KeyError, TypeError, AttributeError) as err:
        raise ShapeError(f"malformed shape: {err}") from err


def embed(components: dict, gl_factors: list[dict], psi0: dict) -> tuple[prm.LocalParameter, LeviShape]:
    """From an M-parameter given factor by factor to (psi_G, shape).

    Equal GL factors are grouped into one block with multiplicity e_t.
    """
    grouped: dict[tuple, int] = {}
    cat = _catalogue(components)
    order = []
    for f in gl_factors:
        key = _norm_psi(f, cat)
        if key not in grouped:
            order.append(key)
        grouped[key] = grouped.get(key, 0) + 1
    blocks = [{"psi": dict(k), "e": grouped[k]} for k in order]
    shape = make_shape(components, blocks, psi0)
    return shape.local_parameter(), shape


# --- the normalizer group and the x map ------------------------------------------

@dataclass(frozen=True)
class NormalizerElement:
    s_part: tuple[int, ...]
    w_part: tuple[SignedPerm, ...]


def block_elements(b: Block) -> list[SignedPerm]:
    if b.kind == "T1":
        return hyperoctahedral(b.e)
    if b.kind == "T2":
        return symmetric(b.e)
    return sorted(w_group(b.e, b.e_dual))


def identity_element(shape: LeviShape) -> NormalizerElement:
    return NormalizerElement((0,) * len(shape.i0_plus()), tuple(sp_identity(b.size) for b in shape.blocks))


def compose(u: NormalizerElement, v: NormalizerElement) -> NormalizerElement:
    return NormalizerElement(
        tuple((a + b) % 2 for a, b in zip(u.s_part, v.s_part)),
        tuple(sp_compose(a, b) for a, b in zip(u.w_part, v.w_part)),
    )


def normalizer_elements(shape: LeviShape, cap: int = 10 ** 5) -> Iterator[NormalizerElement]:
    order = 2 ** len(shape.i0_plus()) * shape.w_order()
    if order > cap:
        raise OverflowError(f"normalizer has {order} elements, above the cap {cap}")
    per_block = [block_elements(b) for b in shape.blocks]
    for s in itertools.product((0, 1), repeat=len(shape.i0_plus())):
        for w in itertools.product(*per_block):
            yield NormalizerElement(s, tuple(w))


def x_map(shape: LeviShape, u: NormalizerElement) -> prm.ComponentGroupElement:
    """x_i(u) = c_i + sum over T1 and T3 blocks of l_i^t x(w_t)."""
    basis = shape.symplectic_labels()
    c = dict(zip(shape.i0_plus(), u.s_part))
    coeffs = []
    for lab in basis:
        v = c.get(lab, 0)
        for b, w in zip(shape.blocks, u.w_part):
            if b.kind in ("T1", "T3"):
                v += shape.ell(b.t, lab) * x_parity(w)
        coeffs.append(v)
    return prm.ComponentGroupElement(basis, tuple(coeffs))


def is_regular(shape: LeviShape, u: NormalizerElement) -> bool:
    """Finite fixed locus on T_psi: every block must be regular (T2 blocks never are)."""
    if not shape.blocks:
        return False
    return all(is_regular_signed(w) for w in u.w_part)


def regular_elements(shape: LeviShape, cap: int = 10 ** 5) -> list[tuple[SignedPerm, ...]]:
    if shape.w_order() > cap:
        raise OverflowError("W_psi too large")
    per_block = [block_elements(b) for b in shape.blocks]
    if not per_block:
        return []
    return [w for w in itertools.product(*per_block) if all(is_regular_signed(x) for x in w)]


# --- the diagram -----------------------------------------------------------------

@dataclass
class DiagramReport:
    S_M: int
    W: int
    W0: int
    N: int
    S_MG: int
    R: int
    S_G: int
    exact_rows: bool
    exact_columns: bool
    x_surjective: bool
    homomorphism: bool
    t_partition: dict

    @property
    def identities(self) -> dict[str, bool]:
        return {
            "N=S_M*W": self.N == self.S_M * self.W,
            "S_MG=S_M*R": self.S_MG == self.S_M * self.R,
            "W=W0*R": self.W == self.W0 * self.R,
        }

    @property
    def orders(self) -> tuple[int, ...]:
        return (self.S_M, self.N, self.W, self.W0, self.S_MG, self.R)

    def to_json(self) -> dict:
        return {
            "exact_columns": self.exact_columns,
            "exact_rows": self.exact_rows,
            "homomorphism": self.homomorphism,
            "identities": self.identities,
            "orders": {"N": self.N, "R": self.R, "S_G": self.S_G, "S_M": self.S_M,
                       "S_MG": self.S_MG, "W": self.W, "W0": self.W0},
            "t_partition": self.t_partition,
            "x_surjective": self.x_surjective,
        }


def diagram_report(shape: LeviShape, cap: int = 10 ** 5, hom_samples: int = 64,
                   seed: int = 0) -> DiagramReport:
    i0 = shape.i0_plus()
    basis = shape.symplectic_labels()
    elems = list(normalizer_elements(shape, cap))
    images = {}
    kernel = []
    for u in elems:
        x = x_map(shape, u).coeffs
        images[x] = True
        if not any(x):
            kernel.append(u)
    image = set(images)
    s_m = 2 ** len(i0)
    w = shape.w_order()
    # rows: S(M) embeds in N as (c, 1) and the projection N -> W is onto
    w_proj = {u.w_part for u in elems}
    s_embed = {u.s_part for u in elems if all(p == sp_identity(len(p[0])) for p in u.w_part)}
    exact_rows = len(elems) == s_m * w and len(w_proj) == w and len(s_embed) == s_m
    # W0 = ker x, which meets S(M) trivially and so embeds in W
    w0_set = {u.w_part for u in kernel}
    w0 = len(w0_set)
    # R = S(M,G)/S(M), computed as the projection of the image away from I0+
    keep = [k for k, lab in enumerate(basis) if lab not in i0]
    r_set = {tuple(x[k] for k in keep) for x in image}
    r = len(r_set)
    s_into_image = all(
        x_map(shape, NormalizerElement(s, identity_element(shape).w_part)).coeffs in image
        for s in itertools.product((0, 1), repeat=len(i0)))
    exact_columns = (w0 == len(kernel) and s_into_image and w == w0 * r
                     and len(image) == s_m * r)
    rng = np.random.default_rng(seed)
    hom = True
    if elems:
        for _ in range(hom_samples):
            a = elems[int(rng.integers(len(elems)))]
            b = elems[int(rng.integers(len(elems)))]
            lhs = x_map(shape, compose(a, b))
            rhs = x_map(shape, a) + x_map(shape, b)
            hom &= lhs == rhs
    return DiagramReport(
        S_M=s_m, W=w, W0=w0, N=len(elems), S_MG=len(image), R=r, S_G=2 ** len(basis),
        exact_rows=exact_rows, exact_columns=exact_columns,
        x_surjective=len(image) == 2 ** len(basis), homomorphism=bool(hom),
        t_partition={k: v for k, v in shape.t_partition.items()},
    )


# --- reference shapes and random generation ---------------------------------------------

def shape_so14() -> LeviShape:
    """M = GL1 x SO3 with psi_M = omega_0 + tau_1."""
    return make_shape(
        {"omega0": {"selfdual": "orthogonal", "dim": 1}, "tau1": {"selfdual": "symplectic", "dim": 2}},
        [{"psi": {"omega0": 1}, "e": 1}],
        {"tau1": 1},
    )


def shape_so25() -> LeviShape:
    """M = GL2 x SO3 with psi_M = tau_1 + tau_1."""
    return make_shape(
        {"tau1": {"selfdual": "symplectic", "dim": 2}},
        [{"psi": {"tau1": 1}, "e": 1}],
        {"tau1": 1},
    )


def random_shape(rng: np.random.Generator, max_order: int = 10 ** 4, discrete: bool = False,
                 tries: int = 1000) -> LeviShape:
    """A random valid shape whose normalizer has at most ``max_order`` elements.

    With ``discrete=True`` the M-parameter is discrete: every psi_t is a single
    component with multiplicity one and psi_0 is multiplicity-free symplectic.
    """
    for _ in range(tries):
        ns, no, np_ = (int(rng.integers(1, 4)), int(rng.integers(0, 3)), int(rng.integers(0, 3)))
        comps: dict[str, dict] = {}
        for k in range(ns):
            comps[f"s{k}"] = {"selfdual": "symplectic", "dim": 2 * int(rng.integers(1, 3))}
        for k in range(no):
            comps[f"o{k}"] = {"selfdual": "orthogonal", "dim": int(rng.integers(1, 4))}
        for k in range(np_):
            comps[f"j{k}"] = {"selfdual": "none", "dim": int(rng.integers(1, 3)), "dual": f"j{k}d"}
            comps[f"j{k}d"] = {"selfdual": "none", "dim": comps[f"j{k}"]["dim"], "dual": f"j{k}"}
        labels = sorted(comps)
        r = int(rng.integers(0, 4))
        blocks, seen = [], set()
        for _t in range(r):
            if discrete:
                psi = {labels[int(rng.integers(len(labels)))]: 1}
            else:
                size = int(rng.integers(1, 3))
                chosen = rng.choice(len(labels), size=min(size, len(labels)), replace=False)
                psi = {labels[int(c)]: int(rng.integers(1, 3)) for c in chosen}
            key = tuple(sorted(psi.items()))
            if key in seen:
                continue
            seen.add(key)
            blocks.append({"psi": psi, "e": int(rng.integers(1, 4))})
        so: dict[str, int] = {}
        for lab in labels:
            sd = comps[lab]["selfdual"]
            if discrete:
                if sd == "symplectic" and rng.random() < 0.5:
                    so[lab] = 1
            elif sd == "symplectic":
                so[lab] = int(rng.integers(0, 3))
            elif sd == "orthogonal":
                so[lab] = 2 * int(rng.integers(0, 2))
        if not discrete:
            for k in range(np_):
                m = int(rng.integers(0, 2))
                so[f"j{k}"] = so[f"j{k}d"] = m
        try:
            shape = make_shape(comps, blocks, so)
        except (ShapeError, prm.ParameterError):
            continue
        if shape.n == 0:
            continue
        if 2 ** len(shape.i0_plus()) * shape.w_order() <= max_order:
            return shape
    raise RuntimeError("could not draw a shape within the order cap")


def is_discrete_m(shape: LeviShape) -> bool:
    """psi_M is discrete: each GL factor is irreducible and psi_0 is multiplicity-free symplectic."""
    if any(len(b.psi) != 1 or b.psi[0][1] != 1 for b in shape.gl_blocks):
        return False
    return all(m == 1 and shape.catalogue[lab].selfdual == "symplectic" for lab, m in shape.so_block)
