"""Command-line front end.

Exit status is 0 on success, 1 when a computation fails (or a table1 row
misses its threshold) and 2 for usage or configuration errors.  The
environment variable ``INEQLAB_QUAD_TOL`` overrides the default relative
quadrature tolerance.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, IneqlabError
from .gambles import GamblePair, PointGamble
from .indices import (INDEX_NAMES, IndexSpec, Table1Params, default_tolerance, index_result,
                      table1_crosscheck)
from .orderings import DEFAULT_GRID, lorenz_order, pigou_dalton_order, r_order, sign_pattern_check
from .quadrature import QuadratureConfig
from .societal import SocietalFunction
from .specs import (parse_distribution, parse_gamble, parse_generator, parse_u, parse_v,
                    parse_w)
from .value_fns import Identity

ENV_TOL = "INEQLAB_QUAD_TOL"


class UsageError(Exception):
    """Command-line usage problem (exit status 2)."""


@dataclass
class RunConfig:
    command: str
    dist: str | None = None
    indices: list = field(default_factory=list)
    gamble: str | None = None
    fmt: str = "json"
    output: str | None = None
    quad: QuadratureConfig | None = None
    extra: dict = field(default_factory=dict)


# -- formatting ------------------------------------------------------------------------
def _num(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return float(f"{v:.15g}") if math.isfinite(v) else None
    if isinstance(v, dict):
        return {k: _num(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_num(x) for x in v]
    return v


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.15g}" if math.isfinite(v) else "nan"
    return str(v)


def _to_json(obj) -> str:
    return json.dumps(_num(obj), indent=2) + "\n"


def _to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    if rows:
        w = csv.writer(buf, lineterminator="\n")
        keys = list(rows[0])
        w.writerow(keys)
        for r in rows:
            w.writerow([_fmt(r.get(k)) for k in keys])
    return buf.getvalue()


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- index selection --------------------------------------------------------------------
def parse_index(text: str) -> tuple[str, dict]:
    """``name[:key=value,...]``; a value may itself contain ``:``, ``=`` or commas."""
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    if name not in INDEX_NAMES:
        raise ConfigError(f"unknown index {name!r}; choose from {', '.join(INDEX_NAMES)}")
    params: dict = {}
    last = None
    for seg in (rest.split(",") if rest else []):
        key, eq, val = seg.partition("=")
        if eq and key.strip().replace("_", "").isalpha():
            last = key.strip()
            params[last] = val.strip()
        elif last is not None:
            params[last] += "," + seg.strip()
        else:
            raise ConfigError(f"{text!r}: expected key=value parameters")
    return name, params


def _float_param(params: dict, key: str, text: str) -> None:
    if key in params:
        try:
            params[key] = float(params[key])
        except ValueError:
            raise ConfigError(f"{text!r}: {key} must be a number") from None


def _prepare(name: str, params: dict, default_gamble: str | None, text: str) -> dict:
    """Turn textual parameters into the objects :func:`index_result` expects."""
    allowed = {
        "gini": set(), "bonferroni": set(), "palma": set(), "zenga": set(),
        "chakravarty": {"alpha"}, "chakravarty_tilde": {"alpha"}, "dwk": {"alpha"},
        "pht": {"alpha"}, "atkinson": {"gamma"}, "dwk_h": {"h"}, "wang": {"g"},
        "risk": {"gamble"},
        "general": {"pi", "pi_star", "pairing", "v", "w", "u", "u_star"},
    }[name]
    unknown = set(params) - allowed
    if unknown:
        raise ConfigError(f"{text!r}: unknown parameter(s) {sorted(unknown)}")
    for key in ("alpha", "gamma"):
        _float_param(params, key, text)
    if name == "dwk_h":
        params.setdefault("h", "hgen:exp_c=2")
        cls, gen = parse_generator(params["h"])
        if cls != "H":
            raise ConfigError(f"{text!r}: dwk_h needs an hgen generator")
        params["h_fn"] = gen
    if name == "wang":
        params.setdefault("g", "ggen:exp_c=2")
        params["g_fn"] = parse_generator(params["g"])[1]
    if name == "risk":
        spec = params.get("gamble", default_gamble)
        if spec is None:
            raise ConfigError("the risk index needs a gamble: risk:gamble=SPEC or --gamble SPEC")
        params["gamble"] = spec
        params["gamble_obj"] = parse_gamble(spec)
    if name == "general":
        for key in ("pi", "v"):
            if key not in params:
                raise ConfigError(f"{text!r}: general index needs {key}=")
        pi = parse_gamble(params["pi"])
        pairing = params.get("pairing", "identical" if "pi_star" not in params else "independent")
        if pairing == "identical":
            pair = GamblePair.same(pi)
        elif pairing == "independent":
            pair = GamblePair(pi, parse_gamble(params.get("pi_star", "point:0")))
        else:
            raise ConfigError(f"{text!r}: pairing must be identical or independent")
        params["spec_obj"] = IndexSpec(
            pair, parse_v(params["v"]),
            parse_w(params["w"]) if "w" in params else Identity(),
            parse_u(params["u"]) if "u" in params else None,
            parse_u(params["u_star"]) if "u_star" in params else None,
            label="general",
        )
    return params


def _public(params: dict) -> dict:
    return {k: v for k, v in params.items() if not k.endswith(("_fn", "_obj"))}


# -- commands ----------------------------------------------------------------------------
def cmd_compute(cfg: RunConfig) -> int:
    d = parse_distribution(cfg.dist)
    jobs = []
    for text in cfg.indices:
        name, params = parse_index(text)
        jobs.append((name, _prepare(name, params, cfg.gamble, text)))
    results = []
    for name, params in jobs:
        res = index_result(name, d, params, cfg.quad)
        res.params = _public(params)
        results.append(res.to_dict())
    if cfg.fmt == "csv":
        rows = [{"index": r["index"],
                 "params": ";".join(f"{k}={_fmt(v)}" for k, v in r["params"].items()),
                 "value": r["value"]} for r in results]
        _emit(_to_csv(rows), cfg.output)
    else:
        _emit(_to_json(results[0] if len(results) == 1 else results), cfg.output)
    return 0


def cmd_table1(cfg: RunConfig) -> int:
    d = parse_distribution(cfg.dist)
    tol = cfg.extra.get("tol")
    tol = default_tolerance(d) if tol is None else tol
    rows = [r.to_dict() for r in table1_crosscheck(d, Table1Params(), tol, cfg.quad)]
    for r in rows:
        r["passed"] = r["status"] in ("pass", "n/a")
    if cfg.fmt == "csv":
        _emit(_to_csv(rows), cfg.output)
    else:
        _emit(_to_json({"distribution": cfg.dist, "tolerance": tol, "rows": rows}), cfg.output)
    return 0 if all(r["passed"] for r in rows) else 1


def cmd_curves(cfg: RunConfig) -> int:
    n = cfg.extra["grid"]
    t = np.arange(1, n + 1) / (n + 1)
    if cfg.gamble is not None:
        g = parse_gamble(cfg.gamble)
        rows = [{"t": float(a), "density": float(b)} for a, b in zip(t, g.density(t))]
    else:
        d = parse_distribution(cfg.dist)
        rows = SocietalFunction(d, cfg=cfg.quad).curve_rows(t)
    _emit(_to_json(rows) if cfg.fmt == "json" else _to_csv(rows), cfg.output)
    return 0


def cmd_order(cfg: RunConfig) -> int:
    x = parse_distribution(cfg.extra["x"])
    y = parse_distribution(cfg.extra["y"])
    grid = cfg.extra["grid"]
    out = []
    for rel in cfg.extra["relations"]:
        if rel == "lorenz":
            rep = lorenz_order(x, y, grid, cfg.quad)
        elif rel == "r":
            rep = r_order(x, y, grid, cfg.quad)
        elif rel == "pd":
            rep = pigou_dalton_order(x, y, grid, cfg.quad)
        else:
            rep = sign_pattern_check(x, y, grid, cfg.quad)
        item = rep.to_dict()
        item["relation_tested"] = rel
        out.append(item)
    _emit(_to_json(out[0] if len(out) == 1 else out), cfg.output)
    return 0


# -- argument handling ---------------------------------------------------------------------
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ineqlab", description="Inequality and risk indices from societal functions.")
    p.add_argument("--quad-tol", type=float, default=None,
                   help=f"relative quadrature tolerance (overrides ${ENV_TOL})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute one or more indices")
    c.add_argument("--dist", required=True, help="distribution spec, e.g. exp:1 or csv:data.csv")
    c.add_argument("--index", action="append", required=True,
                   help="index name with optional parameters, e.g. pht:alpha=0.5 (repeatable)")
    c.add_argument("--gamble", help="gamble spec for the risk index, e.g. beta:2,1")
    c.add_argument("--format", choices=("json", "csv"), default="json")
    c.add_argument("--output")

    t = sub.add_parser("table1", help="cross-check the general index against each named index")
    t.add_argument("--dist", required=True)
    t.add_argument("--tol", type=float, default=None, help="per-row pass threshold")
    t.add_argument("--format", choices=("json", "csv"), default="json")
    t.add_argument("--output")

    k = sub.add_parser("curves", help="export societal curves or a gamble density")
    src = k.add_mutually_exclusive_group(required=True)
    src.add_argument("--dist")
    src.add_argument("--gamble")
    k.add_argument("--grid", type=int, default=99, help="number of interior points i/(n+1)")
    k.add_argument("--format", choices=("json", "csv"), default="csv")
    k.add_argument("--output")

    o = sub.add_parser("order", help="test an ordering between two distributions")
    o.add_argument("--x", required=True)
    o.add_argument("--y", required=True)
    o.add_argument("--relation", action="append", choices=("lorenz", "r", "pd", "sign"),
                   required=True)
    o.add_argument("--grid", type=int, default=DEFAULT_GRID)
    o.add_argument("--output")
    return p


def _quad_config(cli_tol: float | None) -> QuadratureConfig | None:
    tol = cli_tol
    if tol is None and os.environ.get(ENV_TOL):
        try:
            tol = float(os.environ[ENV_TOL])
        except ValueError:
            raise ConfigError(f"{ENV_TOL}={os.environ[ENV_TOL]!r} is not a number") from None
    if tol is None:
        return None
    return QuadratureConfig(rel_tol=tol)


def _run_config(args) -> RunConfig:
    cfg = RunConfig(args.command, quad=_quad_config(args.quad_tol))
    cfg.output = args.output
    if args.command in ("compute", "table1", "curves"):
        cfg.fmt = args.format
        cfg.dist = args.dist
    if args.command == "compute":
        cfg.indices = args.index
        cfg.gamble = args.gamble
    elif args.command == "table1":
        cfg.extra["tol"] = args.tol
    elif args.command == "curves":
        if args.grid < 1:
            raise ConfigError("--grid must be at least 1")
        cfg.gamble = args.gamble
        cfg.extra["grid"] = args.grid
    elif args.command == "order":
        if args.grid < 2:
            raise ConfigError("--grid must be at least 2")
        cfg.extra.update(x=args.x, y=args.y, relations=args.relation, grid=args.grid)
    return cfg


_COMMANDS = {"compute": cmd_compute, "table1": cmd_table1, "curves": cmd_curves, "order": cmd_order}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        cfg = _run_config(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ValueError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (IneqlabError, ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
