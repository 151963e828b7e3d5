"""The eight acceptance criteria, runnable from tests and from ``arthurlab verify-all``."""
from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import endoscopy, intertwining, kottwitz, levi, weil
from . import parameters as prm
from . import so_structure as so


@dataclass
class CriterionResult:
    cid: int
    name: str
    passed: bool
    seconds: float
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"criterion {self.cid} [{self.name}]: {'PASS' if self.passed else 'FAIL'} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"check": f"criterion-{self.cid}", "details": self.details, "name": self.name,
                "pass": self.passed, "seconds": round(self.seconds, 3)}


def _p_minus_q_rule(p: int, q: int) -> int:
    return 1 if (p - q) % 8 in (1, 7) else -1


def criterion_kottwitz(quick: bool = False) -> dict:
    ok_classes = all(len(kottwitz.real_forms(n)) == n + 1 for n in range(6))
    ok_alpha = all(kottwitz.alpha_real(f.p, f.q) == _p_minus_q_rule(f.p, f.q)
                   for n in range(6) for f in kottwitz.real_forms(n))
    ok_prod = kottwitz.product_formula([-1, -1]) and not kottwitz.product_formula([-1])
    return {"classes": ok_classes, "alpha_rule": ok_alpha, "product_formula": ok_prod}


def _omega0_tau1():
    omega0 = prm.IrreducibleComponent("omega0", 1, "orthogonal")
    tau1 = prm.IrreducibleComponent("tau1", 2, "symplectic")
    return prm.validate([(omega0, 2), (tau1, 1)]), prm.validate([(tau1, 3)])


def criterion_centralizers(quick: bool = False) -> dict:
    exc1, exc2 = _omega0_tau1()
    c1, c2 = prm.centralizer(exc1), prm.centralizer(exc2)
    scan_ok = True
    for param in prm.enumerate_parameters(12):
        n_sym = sum(1 for c, _ in param.components if c.selfdual == "symplectic")
        scan_ok &= sum(1 for _ in prm.component_group(param).elements()) == 2 ** n_sym
        scan_ok &= prm.centralizer(param).component_group_order == 2 ** n_sym
    return {
        "exc1_centralizer": str(c1) == "Sp(2) x O(1)",
        "exc2_centralizer": str(c2) == "O(3)",
        "orders_two": prm.component_group(exc1).order == 2 == prm.component_group(exc2).order,
        "scan": bool(scan_ok),
    }


def _class_predicates(param: prm.LocalParameter) -> dict[str, bool]:
    prof = param.profile()
    sym = [m for t, _, _, m in prof if t == "symplectic"]
    orth = [m for t, _, _, m in prof if t == "orthogonal"]
    pairs = [m for t, _, _, m in prof if t == "none"]
    clean = not pairs
    return {
        "discrete": clean and not orth and set(sym) <= {1},
        "elliptic2": clean and not orth and set(sym) <= {1, 2} and 2 in sym,
        "exc1": clean and orth == [2] and set(sym) <= {1},
        "exc2": clean and not orth and sorted(sym).count(3) == 1 and set(sym) <= {1, 3},
    }


def criterion_classification(quick: bool = False) -> dict:
    exc1, exc2 = _omega0_tau1()
    exclusive, agree, rejects = True, True, True
    odd = prm.IrreducibleComponent("odd_orth", 1, "orthogonal")
    for param in prm.enumerate_parameters(12):
        preds = _class_predicates(param)
        hits = [k for k, v in preds.items() if v]
        exclusive &= len(hits) <= 1
        cls = prm.classify(param)
        agree &= cls == (hits[0] if hits else "other")
        for m in (1, 3):
            try:
                prm.validate(list(param.components) + [(odd, m)])
                rejects = False
            except prm.ParameterError:
                pass
    return {
        "exc1": prm.classify(exc1) == "exc1",
        "exc2": prm.classify(exc2) == "exc2",
        "mutually_exclusive": bool(exclusive),
        "agrees_with_predicates": bool(agree),
        "odd_orthogonal_rejected": bool(rejects),
    }


def criterion_diagram(quick: bool = False, seed: int = 0) -> dict:
    rng = np.random.default_rng(seed)
    count = 200
    ids = hom = ker = surj = True
    discrete_seen = 0
    for k in range(count):
        shape = levi.random_shape(rng, max_order=10 ** 5, discrete=(k % 3 == 0))
        r = levi.diagram_report(shape, seed=seed + k)
        ids &= all(r.identities.values()) and r.exact_rows
        hom &= r.homomorphism
        ker &= r.exact_columns
        if levi.is_discrete_m(shape):
            discrete_seen += 1
            surj &= r.x_surjective
    closure = all(len(levi.w_group(e, f)) == math.factorial(e + f)
                  for e in range(1, 6) for f in range(1, 6) if e + f <= 6)
    refs = (levi.diagram_report(levi.shape_so14()).orders == (2, 4, 2, 2, 2, 1)
            and levi.diagram_report(levi.shape_so25()).orders == (2, 4, 2, 2, 2, 1))
    return {
        "order_identities": bool(ids), "homomorphism": bool(hom), "kernel_is_W0": bool(ker),
        "discrete_surjective": bool(surj and discrete_seen > 0), "closure_orders": closure,
        "reference_diagrams": bool(refs),
    }


def criterion_endoscopy(quick: bool = False) -> dict:
    counts = all(len(endoscopy.elliptic_triples(n)) == n // 2 + 1
                 and len(endoscopy.elliptic_triples(n, strict=True)) == n + 1 for n in range(11))
    roundtrip = True
    for param in prm.enumerate_parameters(8 if quick else 12):
        for sig in endoscopy.signature_space(param):
            corr = endoscopy.correspond(param, sig)
            roundtrip &= endoscopy.recombine(corr).profile() == param.profile()
            roundtrip &= corr.triple.n == param.n
    return {"triple_counts": counts, "roundtrip": bool(roundtrip)}


def criterion_weil(quick: bool = False) -> dict:
    lam = weil.LAM
    so14 = weil.tau(1, lam) + weil.omega(2 * lam)
    so25 = (weil.tau(2, lam) + weil.omega(lam, 1) + weil.omega(lam) + weil.tau(2, 2 * lam)
            + weil.omega(2 * lam, 1))
    irreps = [weil.tau(l, t) for l in range(1, 7) for t in (0, lam)]
    irreps += [weil.omega(t, e) for e in (0, 1) for t in (0, lam)]
    ring = all(weil.sym2(a) + weil.wedge2(a) == weil.tensor(a, a) for a in irreps)
    for a, b in itertools.combinations(irreps, 2):
        x = a + b
        ring &= weil.sym2(x) + weil.wedge2(x) == weil.tensor(x, x)
    dup = max(weil.duplication_residual(s) for s in (0.25, 0.5, 1.0, 2.5, 7.0))
    return {
        "so14_decomposition": weil.rho_so14() == so14,
        "so25_decomposition": weil.rho_so25() == so25,
        "sym2_wedge2_tensor": bool(ring),
        "duplication": dup <= 1e-12,
    }


def criterion_numerics(quick: bool = False) -> dict:
    t0 = time.perf_counter()
    so14 = [intertwining.m_so14(x) for x in (0.3, 0.5, 1, 2, 3.5)]
    mc = [intertwining.m_c(s) for s in (0.5, 1, 2, 3, 4)]
    limits = [intertwining.limit_check(name, x) for name in ("so14", "so25") for x in (1e-2, 1e-3, 1e-4)]
    elapsed = time.perf_counter() - t0
    return {
        "m_so14": all(r.passed for r in so14),
        "m_so14_at_1": abs(so14[2].lhs - 8 * math.pi / 3) <= 1e-8,
        "m_c": all(r.passed for r in mc),
        "m_c_at_2": abs(mc[2].lhs + 2 / 3) <= 1e-8,
        "m_c_at_3": abs(mc[3].lhs + math.pi / 4) <= 1e-8,
        "limits": all(r.passed for r in limits),
        "runtime": elapsed < 10,
    }


def _bracket_table(n: int) -> bool:
    rs = so.roots(n)
    mats = {r: so.root_vector_int(r) for r in rs}
    for b, g in itertools.product(rs, repeat=2):
        comm = mats[b] @ mats[g] - mats[g] @ mats[b]
        if b == -g:
            if not np.array_equal(comm, so.coroot_int(b)):
                return False
            continue
        c = so.bracket_coefficient(b, g)
        if c is None:
            if comm.any():
                return False
        elif abs(c) != so.string_length(b, g) + 1:
            return False
    return True


def _membership(n: int) -> bool:
    ok = all(so.lie_membership_int(so.root_vector_int(r), n) for r in so.roots(n))
    ok &= all(so.lie_membership_int(so.coroot_int(r), n) for r in so.positive_roots(n))
    return bool(ok)


def criterion_structure(quick: bool = False) -> dict:
    brackets = all(_bracket_table(n) for n in range(1, 5))
    member = all(_membership(n) for n in range(1, 5))
    twists = all(all(so.check_twist(2 * n + 1 - q, q).values()) for n in range(1, 5) for q in range(1, n + 1))
    return {
        "brackets": brackets,
        "lie_membership": member,
        "twists": twists,
        "so14_fixtures": so.so14_fixtures().ok,
        "so25_fixtures": so.so25_fixtures().ok,
    }


CRITERIA: list[tuple[int, str, Callable[..., dict], float]] = [
    (1, "kottwitz", criterion_kottwitz, 1.0),
    (2, "centralizers", criterion_centralizers, math.inf),
    (3, "classification", criterion_classification, math.inf),
    (4, "diagram", criterion_diagram, 30.0),
    (5, "endoscopy", criterion_endoscopy, math.inf),
    (6, "weil", criterion_weil, math.inf),
    (7, "numerics", criterion_numerics, 10.0),
    (8, "structure", criterion_structure, math.inf),
]


def run_criterion(cid: int, quick: bool = False) -> CriterionResult:
    _, name, fn, budget = CRITERIA[cid - 1]
    t0 = time.perf_counter()
    details = fn(quick=quick)
    dt = time.perf_counter() - t0
    if math.isfinite(budget):
        details["within_runtime"] = dt < budget
    return CriterionResult(cid, name, all(bool(v) for v in details.values()), dt, details)


def run_all(quick: bool = False) -> list[CriterionResult]:
    return [run_criterion(cid, quick) for cid, *_ in CRITERIA]
