"""Command-line front end: ``rmat`` exports an R-matrix, ``verify`` runs checks.

Exit codes: 0 when everything passes, 1 for a failed check or a computation
error, 2 for bad usage. A ``--config`` file of ``key = value`` lines can supply
any flag; flags given on the command line take precedence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from coloured_hopf import __version__
from coloured_hopf.colour import GROUPS, parse_colour, parse_complex
from coloured_hopf.errors import ColouredHopfError
from coloured_hopf.models import gl2_R_matrix, h4_R_matrix
from coloured_hopf.verify import DEFAULT_TOL, SUITES, SuiteConfig, reports_to_json, run_suite

SEED_ENV = "COLOURED_HOPF_SEED"


class UsageError(Exception):
    pass


# -- matrix documents -------------------------------------------------------------


def _pair(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def matrix_document(a: np.ndarray, meta: dict) -> dict:
    rows, cols = a.shape
    return {
        "rows": rows,
        "cols": cols,
        "data": [_pair(complex(x)) for x in a.ravel()],
        "meta": meta,
    }


def matrix_from_document(doc: dict) -> np.ndarray:
    rows, cols, data = doc["rows"], doc["cols"], doc["data"]
    if len(data) != rows * cols:
        raise ValueError(f"data holds {len(data)} entries, expected {rows * cols}")
    flat = np.array([complex(re, im) for re, im in data], dtype=np.complex128)
    return flat.reshape(rows, cols)


def dumps(obj) -> str:
    # json writes floats with repr, the shortest string that round-trips exactly
    return json.dumps(obj, ensure_ascii=False) + "\n"


def write_output(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- argument handling ------------------------------------------------------------


def _spin_list(text: str) -> tuple:
    try:
        return tuple(float(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad spin list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coloured-hopf", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rmat", help="evaluate a coloured R-matrix and write it as JSON")
    r.add_argument("--config")
    r.add_argument("--model", choices=sorted(GROUPS))
    r.add_argument("--q", default="1.5")
    r.add_argument("--s", default="1")
    r.add_argument("--z", default="0.5")
    r.add_argument("--lambda", dest="lam")
    r.add_argument("--mu")
    r.add_argument("--spin", default="0.5", help="spin of both legs, or 'left,right'")
    r.add_argument("--zeta", default="1")
    r.add_argument("--renormalize", action="store_true")
    r.add_argument("--out")

    v = sub.add_parser("verify", help="run verification suites and write a JSON report")
    v.add_argument("--config")
    v.add_argument("--model", choices=["gl2", "h4", "all"], default="all")
    v.add_argument("--suite", default="all", help="comma-separated from " + ", ".join(SUITES + ("all",)))
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--tol", type=float, default=DEFAULT_TOL)
    v.add_argument("--spins", default="0.5")
    v.add_argument("--out")
    return p


def read_config(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for n, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{n}: expected key = value")
            key, value = (t.strip() for t in line.split("=", 1))
            out[key.lstrip("-").replace("_", "-")] = value
    return out


def _config_argv(sub: argparse.ArgumentParser, cfg: dict) -> list[str]:
    by_flag = {s.lstrip("-"): a for a in sub._actions for s in a.option_strings}
    argv = []
    for key, value in cfg.items():
        action = by_flag.get(key)
        if action is None or key == "config":
            raise UsageError(f"unknown config key {key!r}")
        if isinstance(action, argparse._StoreTrueAction):
            if value.lower() in ("1", "true", "yes", "on"):
                argv.append("--" + key)
            elif value.lower() not in ("0", "false", "no", "off"):
                raise UsageError(f"config key {key!r} needs a boolean, got {value!r}")
        else:
            argv.append(f"--{key}={value}")
    return argv


def parse_args(argv: list[str]) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        sub = parser._subparsers._group_actions[0].choices[args.command]
        # config entries first, command-line flags after them so they win
        args = parser.parse_args([args.command, *_config_argv(sub, read_config(args.config)), *argv[1:]])
    return args


# -- commands ---------------------------------------------------------------------


def _colour(text: str | None, model: str, name: str):
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        return parse_colour(text, GROUPS[model].arity)
    except (ValueError, ColouredHopfError) as e:
        raise UsageError(f"--{name}: {e}") from None


def _scalar(text: str, name: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as e:
        raise UsageError(f"--{name}: {e}") from None


def cmd_rmat(args) -> int:
    if args.model is None:
        raise UsageError("--model is required")
    lam = _colour(args.lam, args.model, "lambda")
    mu = _colour(args.mu, args.model, "mu")
    if args.model == "gl2":
        q, s, zeta = _scalar(args.q, "q"), _scalar(args.s, "s"), _scalar(args.zeta, "zeta")
        spins = _spin_list(args.spin)
        if len(spins) == 1:
            spins = spins * 2
        if len(spins) != 2:
            raise UsageError("--spin takes one or two values")
        r = gl2_R_matrix(q, s, lam[0], mu[0], *spins, zeta=zeta, renormalize=args.renormalize)
        params = {"q": _pair(q), "s": _pair(s), "zeta": _pair(zeta)}
    else:
        z = _scalar(args.z, "z")
        r = h4_R_matrix(z, lam, mu)
        spins = ()
        params = {"z": _pair(z)}
    meta = {
        "model": args.model,
        "params": params,
        "colours": {"lambda": [_pair(c) for c in lam], "mu": [_pair(c) for c in mu]},
        "spins": list(spins),
        "renormalized": bool(args.renormalize and args.model == "gl2"),
        "tool-version": __version__,
    }
    write_output(dumps(matrix_document(r, meta)), args.out)
    return 0


def suite_selection(text: str) -> tuple:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if not names:
        raise UsageError("empty --suite")
    if "all" in names:
        return SUITES
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise UsageError(f"unknown suite(s) {unknown}; choose from {', '.join(SUITES)}, all")
    return tuple(n for n in SUITES if n in names)


def cmd_verify(args) -> int:
    seed = args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV} must be an integer, got {env!r}") from None
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    models = ("gl2", "h4") if args.model == "all" else (args.model,)
    cfg = SuiteConfig(trials=args.trials, seed=seed, tol=args.tol, models=models,
                      spins=_spin_list(args.spins), suites=suite_selection(args.suite))
    reports = run_suite(cfg)
    write_output(reports_to_json(reports) + "\n", args.out)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        print(f"FAIL {r.check} {r.model} trial={r.trial} seed={r.seed} residual={r.residual:.3e}",
              file=sys.stderr)
    print(f"{len(reports) - len(failed)}/{len(reports)} checks passed", file=sys.stderr)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    except (UsageError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    try:
        return {"rmat": cmd_rmat, "verify": cmd_verify}[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ColouredHopfError, ValueError, ArithmeticError, np.linalg.LinAlgError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
