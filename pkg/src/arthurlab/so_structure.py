"""Matrix model of SO(2n+1): Gram form, roots, Chevalley basis, real forms.

Matrix indices in formulas are 1-based (``E_{i,j}``), as is conventional;
numpy storage is 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import exact as ex
from .exact import I, Qi


@dataclass(frozen=True)
class GroupModel:
    n: int
    gram: np.ndarray = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    def contains(self, g: np.ndarray) -> bool:
        """Membership in SO(gram)."""
        g = ex.matrix(g) if not isinstance(g, np.ndarray) or g.dtype != object else g
        return ex.equal(g.T @ self.gram @ g, self.gram) and ex.det(g) == 1

    def in_lie_algebra(self, x: np.ndarray) -> bool:
        return ex.is_zero(x.T @ self.gram + self.gram @ x)


def gram_matrix(n: int) -> np.ndarray:
    dim = 2 * n + 1
    gram = ex.zeros(dim)
    for i in range(n):
        gram[i, n + 1 + i] = Qi(1)
        gram[n + 1 + i, i] = Qi(1)
    gram[n, n] = Qi(2)
    return gram


def build_group(n: int) -> GroupModel:
    if n < 0:
        raise ValueError("rank must be non-negative")
    return GroupModel(n, gram_matrix(n))


# --- roots -------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Root:
    """``sign*(chi_i - chi_j)``, ``sign*(chi_i + chi_j)`` or ``sign*chi_i``.

    ``kind`` is ``"diff"``, ``"sum"`` or ``"short"``; ``i < j`` for the first two,
    and ``j == 0`` for short roots.
    """

    kind: str
    i: int
    j: int
    sign: int
    n: int

    def __post_init__(self):
        if self.kind not in ("diff", "sum", "short"):
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not 1 <= self.i <= self.n:
            raise ValueError("index out of range")
        if self.kind == "short":
            if self.j != 0:
                raise ValueError("short roots carry j=0")
        elif not self.i < self.j <= self.n:
            raise ValueError("need i < j <= n")

    @property
    def coords(self) -> tuple[int, ...]:
        v = [0] * self.n
        v[self.i - 1] = self.sign
        if self.kind == "diff":
            v[self.j - 1] = -self.sign
        elif self.kind == "sum":
            v[self.j - 1] = self.sign
        return tuple(v)

    @property
    def positive(self) -> bool:
        return self.sign == 1

    def __neg__(self) -> "Root":
        return Root(self.kind, self.i, self.j, -self.sign, self.n)

    @property
    def name(self) -> str:
        core = {
            "diff": f"chi{self.i}-chi{self.j}",
            "sum": f"chi{self.i}+chi{self.j}",
            "short": f"chi{self.i}",
        }[self.kind]
        if self.sign == 1:
            return core
        return f"-({core})" if self.kind != "short" else f"-{core}"

    def pairing(self, h_diag) -> Fraction:
        """Evaluate the root on a diagonal Cartan element given by its first n entries."""
        total = sum((c * Qi.coerce(h_diag[k]) for k, c in enumerate(self.coords)), Qi(0))
        if not total.is_real():
            raise ValueError("Cartan element is not real")
        return total.re


def root_from_coords(coords, n: int) -> Root | None:
    coords = tuple(int(c) for c in coords)
    support = [k + 1 for k, c in enumerate(coords) if c]
    if len(support) == 1:
        c = coords[support[0] - 1]
        if abs(c) == 1:
            return Root("short", support[0], 0, c, n)
        return None
    if len(support) == 2:
        i, j = support
        a, b = coords[i - 1], coords[j - 1]
        if abs(a) != 1 or abs(b) != 1:
            return None
        return Root("diff" if a == -b else "sum", i, j, a, n)
    return None


def roots(n: int) -> list[Root]:
    """All 2n^2 roots of type B_n, positive ones first."""
    pos = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            pos.append(Root("diff", i, j, 1, n))
            pos.append(Root("sum", i, j, 1, n))
        pos.append(Root("short", i, 0, 1, n))
    return pos + [-r for r in pos]


def positive_roots(n: int) -> list[Root]:
    return [r for r in roots(n) if r.positive]


def simple_roots(n: int) -> list[Root]:
    out = [Root("diff", i, i + 1, 1, n) for i in range(1, n)]
    if n >= 1:
        out.append(Root("short", n, 0, 1, n))
    return out


# --- Chevalley basis -------------------------------------------------------------

@dataclass(frozen=True)
class ChevalleyElement:
    label: str
    root: Root
    is_coroot: bool
    matrix: np.ndarray = field(compare=False, repr=False)


def root_vector_int(root: Root) -> np.ndarray:
    """``X_alpha`` as an int64 array."""
    n, i, j = root.n, root.i, root.j
    c = n + 1
    m = np.zeros((2 * n + 1, 2 * n + 1), dtype=np.int64)

    def put(a, b, v):
        m[a - 1, b - 1] += v

    if root.kind == "diff":
        if root.sign == 1:
            put(i, j, 1), put(c + j, c + i, -1)
        else:
            put(j, i, 1), put(c + i, c + j, -1)
    elif root.kind == "sum":
        if root.sign == 1:
            put(i, c + j, 1), put(j, c + i, -1)
        else:
            put(c + j, i, 1), put(c + i, j, -1)
    elif root.sign == 1:
        put(i, c, 2), put(c, c + i, -1)
    else:
        put(c, i, 1), put(c + i, c, -2)
    return m


def coroot_int(root: Root) -> np.ndarray:
    """``H_alpha`` for a positive root (negated for a negative one)."""
    n, i, j = root.n, root.i, root.j
    c = n + 1
    h = np.zeros(2 * n + 1, dtype=np.int64)
    if root.kind == "diff":
        h[[i - 1, j - 1, c + i - 1, c + j - 1]] = [1, -1, -1, 1]
    elif root.kind == "sum":
        h[[i - 1, j - 1, c + i - 1, c + j - 1]] = [1, 1, -1, -1]
    else:
        h[[i - 1, c + i - 1]] = [2, -2]
    return np.diag(h * root.sign)


def _to_qi(m: np.ndarray) -> np.ndarray:
    return ex.matrix(m.tolist())


def root_vector(root: Root) -> np.ndarray:
    return _to_qi(root_vector_int(root))


def coroot(root: Root) -> np.ndarray:
    return _to_qi(coroot_int(root))


def cartan_diag(h: np.ndarray, n: int) -> list:
    return [h[k, k] for k in range(n)]


@lru_cache(maxsize=None)
def _basis_cached(n: int) -> tuple[ChevalleyElement, ...]:
    out = [ChevalleyElement(f"X[{r.name}]", r, False, root_vector(r)) for r in roots(n)]
    out += [ChevalleyElement(f"H[{r.name}]", r, True, coroot(r)) for r in positive_roots(n)]
    return tuple(out)


def chevalley_basis(n: int) -> list[ChevalleyElement]:
    if n < 1:
        raise ValueError("chevalley_basis needs n >= 1")
    return list(_basis_cached(n))


def string_length(beta: Root, gamma: Root) -> int:
    """Largest b with gamma - b*beta a root."""
    n = beta.n
    b = 0
    while True:
        v = [g - (b + 1) * x for g, x in zip(gamma.coords, beta.coords)]
        if root_from_coords(v, n) is None:
            return b
        b += 1


def bracket_coefficient(beta: Root, gamma: Root) -> int | None:
    """The c with [X_beta, X_gamma] = c X_{beta+gamma}, or None if beta+gamma is not a root.

    Raises if the commutator is not proportional to the expected root vector.
    """
    n = beta.n
    s = root_from_coords([a + b for a, b in zip(beta.coords, gamma.coords)], n)
    if s is None:
        return None
    xb, xg = root_vector_int(beta), root_vector_int(gamma)
    comm = xb @ xg - xg @ xb
    target = root_vector_int(s)
    k = tuple(np.argwhere(target)[0])
    c, rem = divmod(int(comm[k]), int(target[k]))
    if rem or not np.array_equal(comm, c * target):
        raise ArithmeticError(f"[{beta.name},{gamma.name}] not proportional to X[{s.name}]")
    return c


def lie_membership_int(x: np.ndarray, n: int) -> bool:
    g = gram_int(n)
    return not (x.T @ g + g @ x).any()


def gram_int(n: int) -> np.ndarray:
    g = np.zeros((2 * n + 1, 2 * n + 1), dtype=np.int64)
    for i in range(n):
        g[i, n + 1 + i] = g[n + 1 + i, i] = 1
    g[n, n] = 2
    return g


# --- real forms and the inner twist -------------------------------------------------

@dataclass(frozen=True)
class RealForm:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or (self.p + self.q) % 2 != 1:
            raise ValueError(f"invalid signature ({self.p},{self.q})")

    @property
    def n(self) -> int:
        return (self.p + self.q - 1) // 2

    def normalized(self) -> "RealForm":
        # (p,q) and (q,p) give isomorphic groups
        return self if self.p > self.q else RealForm(self.q, self.p)

    @property
    def r(self) -> int:
        f = self.normalized()
        return f.p - f.n - 1

    @property
    def is_split(self) -> bool:
        return self.r == 0


@dataclass(frozen=True)
class InnerTwistData:
    form: RealForm
    S: np.ndarray = field(compare=False, repr=False)
    z: np.ndarray = field(compare=False, repr=False)

    @property
    def S_fast(self) -> ex.GaussMat:
        return ex.GaussMat.from_qi(self.S)

    @property
    def S_inv_fast(self) -> ex.GaussMat:
        return ex.GaussMat.from_qi(ex.inverse(self.S))

    def xi(self, x: np.ndarray) -> np.ndarray:
        return self.S @ x @ ex.inverse(self.S)

    def xi_inverse(self, y: np.ndarray) -> np.ndarray:
        return ex.inverse(self.S) @ y @ self.S

    def xi_fast(self, x) -> ex.GaussMat:
        x = x if isinstance(x, ex.GaussMat) else ex.GaussMat(x)
        return self.S_fast @ x @ self.S_inv_fast


def _s0(n: int) -> np.ndarray:
    d = 2 * n + 1
    s = ex.zeros(d)
    for k in range(n):
        s[k, k] = Qi(1)
        s[k, n + 1 + k] = Qi(1)
        s[n + 1 + k, k] = Qi(1)
        s[n + 1 + k, n + 1 + k] = Qi(-1)
    s[n, n] = Qi(2)
    return s


@lru_cache(maxsize=None)
def inner_twist(p: int, q: int) -> InnerTwistData:
    if p <= q:
        raise ValueError("inner_twist needs p > q; pass the normalized signature")
    form = RealForm(p, q)
    n, r = form.n, form.r
    s_prime = ex.diag([1] * (n + 1) + [-I] * r + [1] * q)
    S = s_prime @ _s0(n)
    z = ex.inverse(S) @ ex.conj(S)
    return InnerTwistData(form, S, z)


def target_form(p: int, q: int) -> np.ndarray:
    return ex.diag([1] * p + [-1] * q)


def check_twist(p: int, q: int) -> dict[str, bool]:
    """Exact checks for xi_{p,q}: Gram form transport and the conj-transpose symmetry."""
    tw = inner_twist(p, q)
    n = tw.form.n
    s, si = tw.S_fast, tw.S_inv_fast
    gram = ex.GaussMat(gram_int(n))
    target = ex.GaussMat(np.diag([1] * p + [-1] * q)).scale(Fraction(1, 2))
    ok_ct = True
    for r in positive_roots(n):
        a = s @ ex.GaussMat(root_vector_int(r)) @ si
        b = s @ ex.GaussMat(root_vector_int(-r)) @ si
        ok_ct &= a.conj().T == b
    return {
        "gram_transport": si.T @ gram @ si == target,
        "conj_transpose": bool(ok_ct),
        "inverse": s @ si == ex.GaussMat(np.eye(2 * n + 1, dtype=np.int64)),
    }


def classify_root(p: int, q: int, root: Root) -> str:
    """``"imaginary"``, ``"complex"`` or ``"real"`` for the form SO(p,q)."""
    r = RealForm(p, q).r
    if root.kind == "short":
        return "imaginary" if root.i <= r else "real"
    if root.j <= r:
        return "imaginary"
    if root.i <= r:
        return "complex"
    return "real"


# --- fixtures for SO(1,4) and SO(2,5) --------------------------------------------

@dataclass
class FixtureBundle:
    name: str
    gram: np.ndarray
    alpha: np.ndarray
    z: np.ndarray
    w_tilde: np.ndarray
    w_breve: np.ndarray
    builders: dict
    checks: dict

    def xi(self, x: np.ndarray) -> np.ndarray:
        return self.alpha @ x @ ex.inverse(self.alpha)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "gram": ex.to_json(self.gram),
            "alpha_scaled": ex.to_json(self.alpha),
            "z_rho": ex.to_json(self.z),
            "w_tilde": ex.to_json(self.w_tilde),
            "w_breve": ex.to_json(self.w_breve),
            "checks": dict(sorted(self.checks.items())),
        }


def _in_group(g: np.ndarray, gram: np.ndarray) -> bool:
    return ex.equal(g.T @ gram @ g, gram) and ex.det(g) == 1


def so14_alpha() -> np.ndarray:
    """The twisting matrix for SO(1,4), times sqrt(2) (the scalar cancels in Ad)."""
    return ex.matrix([
        [1, 0, 0, 1, 0],
        [0, I, 0, 0, I],
        [0, 0, 2 * I, 0, 0],
        [0, 1, 0, 0, -1],
        [1, 0, 0, -1, 0],
    ])


def so14_n(x) -> np.ndarray:
    x1, x2, x3 = (Qi.coerce(v) for v in x)
    nn = x1 * x1 + x2 * x2 + x3 * x3
    h = nn * Fraction(1, 2)
    return ex.matrix([
        [1 + h, x1, x2, x3, -h],
        [x1, 1, 0, 0, -x1],
        [x2, 0, 1, 0, -x2],
        [x3, 0, 0, 1, -x3],
        [h, x1, x2, x3, 1 - h],
    ])


def so14_m(t, B) -> np.ndarray:
    t = Qi.coerce(t)
    c = (t + 1 / t) * Fraction(1, 2)
    s = (t - 1 / t) * Fraction(1, 2)
    out = ex.zeros(5)
    out[0, 0] = out[4, 4] = c
    out[0, 4] = out[4, 0] = s
    out[1:4, 1:4] = ex.matrix(B) if not isinstance(B, np.ndarray) else B
    return out


def so14_n_star(b) -> np.ndarray:
    b1, b2, b3 = (Qi.coerce(v) for v in b)
    return ex.matrix([
        [1, b1, b2, -b1 * b3 - b2 * b2 * Fraction(1, 4), b3],
        [0, 1, 0, -b3, 0],
        [0, 0, 1, -b2 * Fraction(1, 2), 0],
        [0, 0, 0, 1, 0],
        [0, 0, 0, -b1, 1],
    ])


def so14_b_to_x(b) -> tuple:
    b1, b2, b3 = (Qi.coerce(v) for v in b)
    half = Fraction(1, 2)
    return (-I * (b1 + b3) * half, -I * b2 * half, (b1 - b3) * half)


def so14_measure_jacobian() -> Fraction:
    """|det| of the linear map b -> x; d(n*) = db/2 then gives d(n) = 2 dx."""
    cols = [so14_b_to_x(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    m = ex.matrix([[cols[c][r] for c in range(3)] for r in range(3)])
    d = ex.det(m)
    mod2 = d.re * d.re + d.im * d.im
    # |det| is rational here
    root = Fraction(int(mod2.numerator ** 0.5), int(mod2.denominator ** 0.5))
    if root * root != mod2:
        raise ArithmeticError("irrational Jacobian")
    return root


def rational_rotation(a: int, b: int, c: int) -> np.ndarray:
    """A rational element of SO(3) via the Cayley transform of a skew matrix."""
    k = ex.matrix([[0, -c, b], [c, 0, -a], [-b, a, 0]])
    one = ex.identity(3)
    return (one + k) @ ex.inverse(one - k)


_SAMPLE_X = [(Fraction(1), Fraction(-2), Fraction(1, 3)), (Fraction(0), Fraction(1, 2), Fraction(5))]
_SAMPLE_T = [Fraction(2), Fraction(-1, 3)]
_SAMPLE_B = [(1, 0, 0), (1, 2, -1)]


@lru_cache(maxsize=None)
def so14_fixtures() -> FixtureBundle:
    gram = ex.diag([1, -1, -1, -1, -1])
    alpha = so14_alpha()
    bundle = FixtureBundle(
        name="SO(1,4)",
        gram=gram,
        alpha=alpha,
        z=ex.inverse(alpha) @ ex.conj(alpha),
        w_tilde=ex.matrix([
            [0, 0, 0, 1, 0],
            [0, -1, 0, 0, 0],
            [0, 0, -1, 0, 0],
            [1, 0, 0, 0, 0],
            [0, 0, 0, 0, -1],
        ]),
        w_breve=ex.diag([1, -1, -1, -1, -1]),
        builders={"n": so14_n, "m": so14_m, "n_star": so14_n_star},
        checks={},
    )
    split_gram = gram_matrix(2)
    wb = bundle.w_breve
    c = bundle.checks
    c["w_breve_in_G"] = ex.is_real(wb) and _in_group(wb, gram)
    c["w_breve_is_xi_w_tilde"] = ex.equal(bundle.xi(bundle.w_tilde), wb)
    c["w_tilde_in_G_star"] = _in_group(bundle.w_tilde, split_gram)
    c["z_rho_matches"] = ex.equal(bundle.z, ex.matrix([
        [1, 0, 0, 0, 0],
        [0, 0, 0, 0, -1],
        [0, 0, -1, 0, 0],
        [0, 0, 0, 1, 0],
        [0, -1, 0, 0, 0],
    ]))
    # alpha^T D alpha is proportional to the split Gram form
    c["alpha_carries_gram"] = ex.equal(alpha.T @ gram @ alpha, ex.scale(split_gram, 2))
    c["n_zero_identity"] = ex.equal(so14_n((0, 0, 0)), ex.identity(5))
    ok_g = ok_n = ok_m = ok_w = ok_xi = True
    for x in _SAMPLE_X:
        nx = so14_n(x)
        ok_g &= _in_group(nx, gram)
        for t in _SAMPLE_T:
            for bb in _SAMPLE_B:
                B = rational_rotation(*bb)
                m = so14_m(t, B)
                ok_m &= _in_group(m, gram)
                xB = tuple((ex.matrix([list(x)]) @ B)[0, k] / t for k in range(3))
                ok_n &= ex.equal(nx @ m, m @ so14_n(xB))
                winv = ex.inverse(wb)
                ok_w &= ex.equal(winv @ m, so14_m(1 / Qi(t), B) @ winv)
        b = x
        ok_xi &= ex.equal(bundle.xi(so14_n_star(b)), so14_n(so14_b_to_x(b)))
    c["n_in_G"] = ok_g
    c["m_in_G"] = ok_m
    c["n_m_commutation"] = ok_n
    c["w_breve_m_relation"] = ok_w
    c["xi_n_star_is_n"] = ok_xi
    c["measure_jacobian_quarter"] = so14_measure_jacobian() == Fraction(1, 4)
    return bundle


# SO(2,5)

def _J2() -> np.ndarray:
    return ex.matrix([[0, 1], [-1, 0]])


def so25_alpha() -> np.ndarray:
    a = ex.zeros(7)
    for k in range(2):
        a[k, k] = Qi(1)
        a[k, 4 + k] = Qi(1)
        a[5 + k, k] = Qi(1)
        a[5 + k, 4 + k] = Qi(-1)
    a[2, 2] = I
    a[2, 6] = I
    a[3, 3] = 2 * I
    a[4, 2] = Qi(1)
    a[4, 6] = Qi(-1)
    return a


def so25_iota1(h: np.ndarray) -> np.ndarray:
    """h-index 1 -> 1, h-indices 2..5 -> 3..6."""
    idx = [0, 2, 3, 4, 5]
    out = ex.identity(7)
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            out[ia, ib] = h[a, b]
    return out


def so25_iota2(h: np.ndarray) -> np.ndarray:
    """h-indices 1..4 -> 2..5, h-index 5 -> 7."""
    idx = [1, 2, 3, 4, 6]
    out = ex.identity(7)
    for a, ia in enumerate(idx):
        for b, ib in enumerate(idx):
            out[ia, ib] = h[a, b]
    return out


def so25_m(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    A = A if isinstance(A, np.ndarray) else ex.matrix(A)
    ainvt = ex.inverse(A).T
    half = Fraction(1, 2)
    c = ex.scale(A + ainvt, half)
    s = ex.scale(A - ainvt, half)
    out = ex.zeros(7)
    out[0:2, 0:2] = c
    out[0:2, 5:7] = s
    out[5:7, 0:2] = s
    out[5:7, 5:7] = c
    out[2:5, 2:5] = B
    return out


def so25_iota_sl2(A) -> np.ndarray:
    return so25_m(A, ex.identity(3))


def so25_nc(u) -> np.ndarray:
    u = Qi.coerce(u)
    h = u * Fraction(1, 2)
    out = ex.identity(7)
    out[0, 1], out[0, 6] = h, -h
    out[1, 0], out[1, 5] = -h, h
    out[5, 1], out[5, 6] = h, -h
    out[6, 0], out[6, 5] = -h, h
    return out


def so25_n1(x) -> np.ndarray:
    return so25_iota1(so14_n(x))


def so25_n2(x) -> np.ndarray:
    return so25_iota2(so14_n(x))


def _so25_lie_preimages(n3: int = 3):
    X = lambda kind, i, j: root_vector(Root(kind, i, j, 1, n3))  # noqa: E731

    def n_k(k: int, x):
        x1, x2, x3 = (Qi.coerce(v) for v in x)
        a = X("diff", k, 3) + X("sum", k, 3)
        b = X("diff", k, 3) - X("sum", k, 3)
        return ex.scale(a, I * x1) + ex.scale(X("short", k, 0), I * x2) + ex.scale(b, x3)

    def nc(u):
        return ex.scale(X("sum", 1, 2), u)

    return n_k, nc


@lru_cache(maxsize=None)
def so25_fixtures() -> FixtureBundle:
    gram = ex.diag([1, 1, -1, -1, -1, -1, -1])
    alpha = so25_alpha()
    J = _J2()
    w_tilde = ex.identity(7)
    w_tilde[0:2, 0:2] = ex.zeros(2)
    w_tilde[4:6, 4:6] = ex.zeros(2)
    w_tilde[0:2, 4:6] = J
    w_tilde[4:6, 0:2] = J
    w_breve = ex.block_diag(J, ex.identity(3), ex.inverse(J))
    bundle = FixtureBundle(
        name="SO(2,5)",
        gram=gram,
        alpha=alpha,
        z=ex.inverse(alpha) @ ex.conj(alpha),
        w_tilde=w_tilde,
        w_breve=w_breve,
        builders={"n1": so25_n1, "n2": so25_n2, "n_c": so25_nc, "m": so25_m,
                  "iota1": so25_iota1, "iota2": so25_iota2, "iota_sl2": so25_iota_sl2},
        checks={},
    )
    split_gram = gram_matrix(3)
    c = bundle.checks
    c["w_breve_in_G"] = ex.is_real(w_breve) and _in_group(w_breve, gram)
    c["w_tilde_in_G_star"] = _in_group(w_tilde, split_gram)
    c["w_breve_is_xi_w_tilde"] = ex.equal(bundle.xi(w_tilde), w_breve)
    c["alpha_carries_gram"] = ex.equal(alpha.T @ gram @ alpha, ex.scale(split_gram, 2))
    z_expected = ex.zeros(7)
    z_expected[0, 0] = z_expected[1, 1] = Qi(1)
    z_expected[2, 6] = z_expected[6, 2] = Qi(-1)
    z_expected[3, 3] = Qi(-1)
    z_expected[4, 4] = z_expected[5, 5] = Qi(1)
    c["z_rho_matches"] = ex.equal(bundle.z, z_expected)

    w0 = ex.diag([1, -1, -1, -1, -1])
    i2w0 = so25_iota2(w0)
    c["iota2_w0_diag"] = ex.equal(i2w0, ex.diag([1, 1, -1, -1, -1, 1, -1]))
    iJ = so25_iota_sl2(J)
    c["w_breve_factorization"] = ex.equal(w_breve, i2w0 @ iJ @ i2w0)

    n_k, nc_lie = _so25_lie_preimages()
    ok_nc = ok_n12 = ok_xi = ok_grp = True
    for u in (Fraction(-2), Fraction(1), Fraction(3), Fraction(1, 2)):
        ncu = so25_nc(u)
        ok_grp &= _in_group(ncu, gram)
        ok_nc &= ex.equal(ex.inverse(i2w0) @ ncu @ i2w0,
                          so25_iota_sl2(ex.matrix([[1, u], [0, 1]])))
        ok_xi &= ex.equal(bundle.xi(ex.expm_nilpotent(nc_lie(u))), ncu)
    # the factor order that makes n1(x) -> n2(-x) hold is iota2(w0) iota_sl2(J)
    g = i2w0 @ iJ
    ginv = ex.inverse(g)
    for x in _SAMPLE_X:
        n1, n2 = so25_n1(x), so25_n2(x)
        ok_grp &= _in_group(n1, gram) and _in_group(n2, gram)
        ok_n12 &= ex.equal(ginv @ n1 @ g, so25_n2(tuple(-v for v in x)))
        ok_xi &= ex.equal(bundle.xi(ex.expm_nilpotent(n_k(1, x))), n1)
        ok_xi &= ex.equal(bundle.xi(ex.expm_nilpotent(n_k(2, x))), n2)
    c["unipotents_in_G"] = ok_grp
    c["Ad_iota2_w0_nc"] = ok_nc
    c["Ad_n1_to_n2"] = ok_n12
    c["xi_exp_chevalley"] = ok_xi

    A = ex.matrix([[2, 1], [0, Fraction(1, 3)]])
    B = rational_rotation(1, 2, -1)
    m = so25_m(A, B)
    detA = ex.det(A)
    c["m_in_G"] = _in_group(m, gram)
    c["w_breve_m_relation"] = ex.equal(
        ex.inverse(w_breve) @ m @ w_breve, so25_m(ex.scale(A, 1 / detA), B))
    return bundle
