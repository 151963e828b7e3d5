"""``arthurlab`` command line: JSON in, JSON out.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 for malformed input or configuration.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable

from . import acceptance, endoscopy, intertwining, kottwitz, levi, weil
from . import parameters as prm
from .weil import PoleError


class ConfigError(ValueError):
    pass


def _threads() -> int:
    raw = os.environ.get("ARTHURLAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError as err:
        raise ConfigError(f"ARTHURLAB_THREADS must be an integer, got {raw!r}") from err
    return max(1, n)


def _pmap(fn: Callable, items: list) -> list:
    n = _threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _grid(raw: str | None, name: str) -> list[float]:
    if raw is None:
        raise ConfigError(f"{name} is required")
    try:
        vals = [float(x) for x in raw.split(",") if x.strip()]
    except ValueError as err:
        raise ConfigError(f"{name}: {err}") from err
    if not vals:
        raise ConfigError(f"{name} must not be empty")
    return vals


def _json_arg(raw: str, name: str) -> Any:
    if raw.startswith("@"):
        with open(raw[1:], encoding="utf-8") as fh:
            raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as err:
        raise ConfigError(f"{name} is not valid JSON: {err}") from err


def _signs(raw: str) -> list[int]:
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError as err:
        raise ConfigError(f"--signs: {err}") from err


def _checks_report(module: str, checks: list[dict]) -> dict:
    checks = sorted(checks, key=lambda c: c["check"])
    return {"checks": checks, "module": module, "pass": all(c["pass"] for c in checks)}


# --- subcommands ----------------------------------------------------------------------

def cmd_kottwitz(args) -> dict:
    if args.action == "alpha":
        if args.real:
            p, q = args.real
            if p < 0 or q < 0 or (p + q) % 2 == 0:
                raise ConfigError("SO(p,q) needs p, q >= 0 with p + q odd")
            return {"form": {"p": p, "q": q}, "sign": kottwitz.alpha_real(p, q)}
        split = args.padic == "split"
        return {"form": {"padic": args.padic}, "sign": kottwitz.alpha_padic(split)}
    if args.action == "product":
        try:
            return {"globalizable": kottwitz.product_formula(_signs(args.signs))}
        except ValueError as err:
            raise ConfigError(str(err)) from err
    return {"n": args.n, "rows": kottwitz.kottwitz_table(args.n)}


def cmd_param(args) -> dict:
    spec = _json_arg(args.spec, "--spec")
    try:
        param = prm.from_json(spec, args.n)
    except prm.ParameterError as err:
        raise ConfigError(str(err)) from err
    return prm.report(param)


def _shape(raw: str) -> levi.LeviShape:
    if raw in ("so14", "so25"):
        return levi.shape_so14() if raw == "so14" else levi.shape_so25()
    try:
        return levi.shape_from_json(_json_arg(raw, "--shape"))
    except (levi.ShapeError, prm.ParameterError) as err:
        raise ConfigError(str(err)) from err


def cmd_diagram(args) -> dict:
    shape = _shape(args.shape)
    rep = levi.diagram_report(shape, seed=args.seed).to_json()
    rep["pass"] = all(rep["identities"].values()) and rep["exact_rows"] and rep["exact_columns"] \
        and rep["homomorphism"]
    return rep


def cmd_endoscopy(args) -> dict:
    if args.action == "list":
        try:
            triples = endoscopy.elliptic_triples(args.n, args.strict)
        except endoscopy.EndoscopyError as err:
            raise ConfigError(str(err)) from err
        return {"n": args.n, "strict": args.strict, "triples": [t.to_json() for t in triples]}
    spec = _json_arg(args.param, "--param")
    signs = _json_arg(args.signs, "--signs")
    try:
        param = prm.from_json(spec)
        if isinstance(signs, dict):
            signs = {k: (v if isinstance(v, int) else tuple(v)) for k, v in signs.items()}
        corr = endoscopy.correspond(param, signs)
    except (prm.ParameterError, endoscopy.EndoscopyError) as err:
        raise ConfigError(str(err)) from err
    out = corr.to_json()
    out["roundtrip"] = endoscopy.recombine(corr).profile() == param.profile()
    return out


def _rep(raw: str, name: str) -> weil.WeilRealRep:
    try:
        return weil.WeilRealRep.from_json(_json_arg(raw, name))
    except ValueError as err:
        raise ConfigError(str(err)) from err


def cmd_weil(args) -> dict:
    if args.action == "decompose":
        a = _rep(args.a, "--a")
        if args.op == "tensor":
            if args.b is None:
                raise ConfigError("tensor needs --b")
            out = weil.tensor(a, _rep(args.b, "--b"))
        else:
            out = {"sym2": weil.sym2, "wedge2": weil.wedge2, "dual": weil.dual}[args.op](a)
        return {"op": args.op, "result": out.to_json(), "dim": out.dim}
    rep = _rep(args.rep, "--rep")
    try:
        val = weil.l_factor(rep, args.s, args.lam)
    except PoleError as err:
        return {"pole": True, "kind": err.kind, "at": [err.at.real, err.at.imag]}
    eps = weil.epsilon_factor(rep)
    return {
        "epsilon": [eps.real, eps.imag],
        "factors": [str(f) for f in weil.l_factor_symbolic(rep, args.s)],
        "value": [val.real, val.imag],
    }


def _verify_so14(args) -> list[dict]:
    grid = _grid(args.lambda_grid, "--lambda-grid")
    out = [r.to_json() for r in _pmap(lambda x: intertwining.m_so14(x, args.tol), grid)]
    if args.limit_grid is not None:
        out += [r.to_json() for r in
                _pmap(lambda x: intertwining.limit_check("so14", x), _grid(args.limit_grid, "--limit-grid"))]
    for c in out:
        c["check"] = f"{c['check']}[lambda={c['lambda']:g}]"
    return out


def _verify_so25(args) -> list[dict]:
    grid = _grid(args.limit_grid, "--limit-grid")
    out = [r.to_json() for r in _pmap(lambda x: intertwining.limit_check("so25", x), grid)]
    if args.lambda_grid is not None:
        out += [r.to_json() for r in
                _pmap(lambda x: intertwining.two_path_check("so25", x, args.tol),
                      _grid(args.lambda_grid, "--lambda-grid"))]
    for c in out:
        c["check"] = f"{c['check']}[lambda={c['lambda']:g}]"
    return out


def _verify_mc(args) -> list[dict]:
    grid = _grid(args.s_grid, "--s-grid")
    out = [r.to_json() for r in _pmap(lambda x: intertwining.m_c(x, args.tol), grid)]
    for c in out:
        c["check"] = f"m_c[s={c['lambda']:g}]"
    return out


def _verify_duplication(args) -> list[dict]:
    grid = _grid(args.s_grid, "--s-grid")
    out = []
    for s in grid:
        res = weil.duplication_residual(s)
        out.append({"check": f"gamma_duplication[s={s:g}]", "residual": res, "pass": res <= args.tol})
    return out


def cmd_verify(args) -> dict:
    if args.tol <= 0:
        raise ConfigError("--tol must be positive")
    runners = {"so14": _verify_so14, "so25": _verify_so25, "mc": _verify_mc,
               "gamma-duplication": _verify_duplication}
    try:
        checks = runners[args.target](args)
    except (PoleError, intertwining.DomainError) as err:
        raise ConfigError(str(err)) from err
    return _checks_report(f"arthurlab.intertwining:{args.target}", checks)


def cmd_verify_all(args) -> dict:
    results = _pmap(lambda cid: acceptance.run_criterion(cid, args.quick),
                    [cid for cid, *_ in acceptance.CRITERIA])
    for r in results:
        print(r.line(), file=sys.stderr)
    return _checks_report("arthurlab.acceptance", [r.to_json() for r in results])


# --- parser ------------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, tol_default, seed_default) -> None:
    p.add_argument("--tol", type=float, default=tol_default, help="tolerance for numeric checks")
    p.add_argument("--seed", type=int, default=seed_default, help="seed for randomized checks")
    p.add_argument("--json", metavar="PATH", default=tol_default, help="also write the report to PATH")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arthurlab",
                                description="Computational checks for odd orthogonal groups.")
    _add_common(p, None, 0)
    # the global flags may also follow a subcommand; SUPPRESS keeps them from resetting
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common, argparse.SUPPRESS, argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kottwitz", parents=[common], help="Kottwitz signs of inner forms")
    ksub = k.add_subparsers(dest="action", required=True)
    ka = ksub.add_parser("alpha", parents=[common])
    g = ka.add_mutually_exclusive_group(required=True)
    g.add_argument("--real", nargs=2, type=int, metavar=("P", "Q"))
    g.add_argument("--padic", choices=("split", "nonsplit"))
    kp = ksub.add_parser("product", parents=[common])
    kp.add_argument("--signs", required=True, help="comma separated, e.g. -1,-1,+1")
    kt = ksub.add_parser("table", parents=[common])
    kt.add_argument("--n", type=int, required=True)
    k.set_defaults(func=cmd_kottwitz)

    pa = sub.add_parser("param", parents=[common], help="local parameters")
    pasub = pa.add_subparsers(dest="action", required=True)
    pc = pasub.add_parser("classify", parents=[common])
    pc.add_argument("--spec", required=True, help="parameter JSON (or @file)")
    pc.add_argument("--n", type=int, default=None)
    pa.set_defaults(func=cmd_param)

    d = sub.add_parser("diagram", parents=[common], help="the Levi diagram of a shape")
    d.add_argument("--shape", required=True, help="shape JSON, @file, or so14 / so25")
    d.add_argument("--report", choices=("json",), default="json")
    d.set_defaults(func=cmd_diagram)

    e = sub.add_parser("endoscopy", parents=[common], help="elliptic endoscopic data")
    esub = e.add_subparsers(dest="action", required=True)
    el = esub.add_parser("list", parents=[common])
    el.add_argument("--n", type=int, required=True)
    el.add_argument("--strict", action="store_true")
    ec = esub.add_parser("correspond", parents=[common])
    ec.add_argument("--param", required=True)
    ec.add_argument("--signs", required=True, help="JSON list or {label: sign or [p, q]}")
    e.set_defaults(func=cmd_endoscopy)

    w = sub.add_parser("weil", parents=[common], help="real Weil group representations")
    wsub = w.add_subparsers(dest="action", required=True)
    wd = wsub.add_parser("decompose", parents=[common])
    wd.add_argument("--op", choices=("tensor", "sym2", "wedge2", "dual"), required=True)
    wd.add_argument("--a", required=True)
    wd.add_argument("--b")
    wl = wsub.add_parser("lfactor", parents=[common])
    wl.add_argument("--rep", required=True)
    wl.add_argument("--s", type=float, required=True)
    wl.add_argument("--lambda", dest="lam", type=float, default=None)
    w.set_defaults(func=cmd_weil)

    v = sub.add_parser("verify", parents=[common], help="numerical identities")
    v.add_argument("target", choices=("so14", "so25", "mc", "gamma-duplication"))
    v.add_argument("--lambda-grid", default=None)
    v.add_argument("--limit-grid", default=None)
    v.add_argument("--s-grid", default=None)
    v.set_defaults(func=cmd_verify)

    va = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    va.add_argument("--quick", action="store_true")
    va.set_defaults(func=cmd_verify_all)
    return p


_DEFAULT_GRIDS = {
    "so14": {"lambda_grid": "0.3,0.5,1,2,3.5"},
    "so25": {"limit_grid": "1e-2,1e-3,1e-4"},
    "mc": {"s_grid": "0.5,1,2,3,4"},
    "gamma-duplication": {"s_grid": "0.25,0.5,1,2.5,7"},
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    raw = list(sys.argv[1:] if argv is None else argv)
    # sign lists such as -1,-1,+1 would otherwise be read as an option
    argv, k = [], 0
    while k < len(raw):
        if raw[k] == "--signs" and k + 1 < len(raw) and raw[k + 1].startswith("-"):
            argv.append(f"--signs={raw[k + 1]}")
            k += 2
        else:
            argv.append(raw[k])
            k += 1
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        for key, val in _DEFAULT_GRIDS[args.target].items():
            if getattr(args, key) is None:
                setattr(args, key, val)
    if args.tol is None:
        args.tol = 1e-12 if getattr(args, "target", None) == "gamma-duplication" else 1e-8
    try:
        report = args.func(args)
    except (ConfigError, OSError) as err:
        print(json.dumps({"error": str(err)}, sort_keys=True))
        return 2
    text = json.dumps(report, sort_keys=True, indent=2, default=str)
    print(text)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return 0 if report.get("pass", True) else 1


if __name__ == "__main__":
    sys.exit(main())
