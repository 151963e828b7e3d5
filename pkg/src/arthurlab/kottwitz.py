"""Inner forms of SO(2n+1) over local fields: the Kottwitz map and sign."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .so_structure import RealForm

PLACE_KINDS = ("real", "padic", "complex")


def _check_sign(s: int) -> int:
    if s not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {s!r}")
    return s


@dataclass(frozen=True)
class LocalFormDescriptor:
    place_kind: str
    p: int | None = None
    q: int | None = None
    is_split: bool = True

    def __post_init__(self):
        if self.place_kind not in PLACE_KINDS:
            raise ValueError(f"unknown place kind {self.place_kind!r}")
        if self.place_kind == "real":
            RealForm(self.p, self.q)  # validates p+q odd
        if self.place_kind == "complex" and not self.is_split:
            raise ValueError("complex places admit only the split form")

    @classmethod
    def real(cls, p: int, q: int) -> "LocalFormDescriptor":
        return cls("real", p, q)

    @classmethod
    def padic(cls, is_split: bool) -> "LocalFormDescriptor":
        return cls("padic", is_split=is_split)

    @classmethod
    def complex(cls) -> "LocalFormDescriptor":
        return cls("complex")


def alpha_real(p: int, q: int) -> int:
    f = RealForm(p, q).normalized()
    return 1 if (f.p - f.q) % 8 in (1, 7) else -1


def alpha_padic(is_split: bool) -> int:
    return 1 if is_split else -1


def alpha(form: LocalFormDescriptor) -> int:
    if form.place_kind == "real":
        return alpha_real(form.p, form.q)
    if form.place_kind == "padic":
        return alpha_padic(form.is_split)
    return 1


def product_formula(signs) -> bool:
    """True iff the local family of signs comes from a global inner form."""
    return prod(_check_sign(int(s)) for s in signs) == 1


def real_forms(n: int) -> list[RealForm]:
    """The n+1 isomorphism classes SO(p,q), p+q = 2n+1, with p > q."""
    if n < 0:
        raise ValueError("rank must be non-negative")
    return [RealForm(2 * n + 1 - q, q) for q in range(n + 1)]


def _q_real(p: int, q: int) -> int:
    # half the dimension of the symmetric space SO(p,q)/S(O(p) x O(q))
    return (p * q) // 2


def kottwitz_sign(form: LocalFormDescriptor) -> int:
    """e(G) = (-1)^(q(G*) - q(G))."""
    if form.place_kind == "complex":
        return 1
    if form.place_kind == "padic":
        # the non-split form has F-rank n-1 against n for the split one
        return 1 if form.is_split else -1
    f = RealForm(form.p, form.q).normalized()
    n = f.n
    qs = _q_real(n + 1, n)
    return -1 if (qs - _q_real(f.p, f.q)) % 2 else 1


def kottwitz_table(n: int) -> list[dict]:
    rows = []
    for f in real_forms(n):
        rows.append({
            "p": f.p,
            "q": f.q,
            "alpha": alpha_real(f.p, f.q),
            "e": kottwitz_sign(LocalFormDescriptor.real(f.p, f.q)),
            "split": f.is_split,
        })
    return rows
