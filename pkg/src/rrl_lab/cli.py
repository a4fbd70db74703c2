"""Command line driver.

``rrl-lab run`` executes a named recipe and writes its artifact file;
the remaining subcommands are direct single-shot tools.  Exit codes:
0 ok, 2 validation failure, 3 computation failure.  Errors are reported
as one-line JSON objects on stdout.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from pathlib import Path

from .diophantine import balance_completion, dirichlet_approx, factorial_shifts, pigeonhole_shift
from .dynamics import (
    FEIGENBAUM_C,
    UnimodalMap,
    hecke_outer_eval,
    hecke_outer_truncation_bound,
    kneading_determinant,
    kneading_sequence,
    smallest_real_zero,
    thue_morse,
)
from .errors import RrlLabError, ValidationError
from .recipes import RecipeConfig, parse_angles, parse_theta, run_recipe

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3

# recipe parameters that may arrive from the config file or flags
PARAM_KEYS = (
    "theta", "gamma", "c", "n", "w", "k_max", "tol", "eps", "z", "map",
    "measure", "shifts", "angles", "omega1", "omega2", "quadrature_n", "radii",
)


def _threads_cap() -> int:
    """Validated RRL_LAB_THREADS cap (all computation is sequential, so any
    positive cap is honored)."""
    raw = os.environ.get("RRL_LAB_THREADS")
    if raw is None:
        return 1
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValidationError(f"RRL_LAB_THREADS must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValidationError("RRL_LAB_THREADS must be >= 1")
    return cap


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _read_config(path: str | None) -> dict:
    """key=value sections; [run] holds recipe/out/format, [params] the rest."""
    if not path:
        return {}
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ValidationError(f"config file {path!r} not found")
    merged: dict = {}
    for section in parser.sections():
        for key, value in parser.items(section):
            merged[key] = value
    return merged


def _cmd_run(args: argparse.Namespace) -> int:
    conf = _read_config(args.config)
    recipe = args.recipe or conf.get("recipe")
    if not recipe:
        raise ValidationError("no recipe given (flag --recipe or config)")
    out = args.out or conf.get("out")
    if not out:
        raise ValidationError("no output path given (flag --out or config)")
    fmt = args.format or conf.get("format", "json")
    params = {k: v for k, v in conf.items() if k in PARAM_KEYS}
    for key in PARAM_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            params[key] = flag
    cfg = RecipeConfig(recipe=recipe, out=Path(out), fmt=fmt, params=params)
    result = run_recipe(cfg)
    _emit({"recipe": recipe, "out": str(out), "status": result.get("status", "ok")})
    return EXIT_OK


def _cmd_shifts(args: argparse.Namespace) -> int:
    if args.factorial is not None:
        ks = factorial_shifts(args.factorial)
        _emit({"mode": "factorial", "shifts": ks, "status": "ok"})
        return EXIT_OK
    if args.pigeonhole is None:
        raise ValidationError("need --factorial J or --pigeonhole J")
    if not args.angles:
        raise ValidationError("--pigeonhole needs --angles")
    points = parse_angles(args.angles)
    ks = [pigeonhole_shift(points, j) for j in range(1, args.pigeonhole + 1)]
    _emit({"mode": "pigeonhole", "shifts": ks, "status": "ok"})
    return EXIT_OK


def _cmd_balance(args: argparse.Namespace) -> int:
    points = parse_angles(args.angles)
    bs = balance_completion(points, args.eps)
    _emit(
        {
            "defect": bs.defect,
            "epsilon": bs.epsilon,
            "n_roots": bs.n_roots,
            "set_size": len(bs.points),
            "status": "certified",
        }
    )
    return EXIT_OK


def _cmd_dirichlet(args: argparse.Namespace) -> int:
    thetas = [parse_theta(t) for t in args.thetas.split(",") if t.strip()]
    n, ps = dirichlet_approx(thetas, args.big_m)
    errors = [abs(n * t - p) for t, p in zip(thetas, ps)]
    _emit(
        {
            "N": n,
            "p": ps,
            "errors": errors,
            "bound": args.big_m ** (-1.0 / len(thetas)),
            "status": "ok",
        }
    )
    return EXIT_OK


def _cmd_hecke(args: argparse.Namespace) -> int:
    theta = parse_theta(args.theta)
    z = complex(args.z)
    value = hecke_outer_eval(theta, z, args.n)
    bound = hecke_outer_truncation_bound(z, args.n)
    status = "ok"
    if args.check_identity:
        direct = -sum(
            ((theta * nn + args.gamma) % 1.0) * z**nn for nn in range(-args.n, 0)
        )
        if args.gamma != 0.0:
            from .dynamics import hecke_gamma_outer

            value = hecke_gamma_outer(theta, args.gamma, z, args.n)
        residual = abs(value - direct)
        status = "ok" if residual <= max(2.0 * bound, 1e-9) else "mismatch"
        _emit(
            {
                "value": [value.real, value.imag],
                "bound": bound,
                "identity_residual": residual,
                "status": status,
            }
        )
        return EXIT_OK
    _emit({"value": [value.real, value.imag], "bound": bound, "status": status})
    return EXIT_OK


def _cmd_kneading(args: argparse.Namespace) -> int:
    if args.map == "tent":
        umap = UnimodalMap.tent()
    elif args.map.startswith("quadratic"):
        _, _, c_text = args.map.partition(":")
        umap = UnimodalMap.quadratic(float(c_text) if c_text else FEIGENBAUM_C)
    else:
        raise ValidationError(f"unknown map {args.map!r} (tent | quadratic:c)")
    eps = kneading_sequence(umap, args.n)
    data = kneading_determinant(eps)
    if not args.entropy:
        _emit(
            {
                "value": [int(x) for x in data.d_coeffs[: min(32, len(data.d_coeffs))]],
                "bound": 1.0,
                "status": "ok",
            }
        )
        return EXIT_OK
    res = smallest_real_zero(data.d_coeffs.astype(float), args.tol)
    _emit(
        {
            "value": res.entropy,
            "bound": args.tol,
            "status": res.status,
            "root": res.root,
            "r_max": res.r_max,
        }
    )
    return EXIT_OK


def _cmd_thue_morse(args: argparse.Namespace) -> int:
    bits = thue_morse(args.n)
    _emit({"value": [int(b) for b in bits], "bound": 1.0, "status": "ok"})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrl-lab",
        description="generalized analytic continuation experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute a named recipe")
    p_run.add_argument("--recipe")
    p_run.add_argument("--out")
    p_run.add_argument("--format", choices=("json", "csv"))
    p_run.add_argument("--config")
    for key in PARAM_KEYS:
        p_run.add_argument(f"--{key.replace('_', '-')}", dest=key)
    p_run.set_defaults(handler=_cmd_run)

    p_shifts = sub.add_parser("shifts", help="factorial or pigeonhole shifts")
    p_shifts.add_argument("--factorial", type=int)
    p_shifts.add_argument("--pigeonhole", type=int)
    p_shifts.add_argument("--angles")
    p_shifts.set_defaults(handler=_cmd_shifts)

    p_bal = sub.add_parser("balance", help="complete angles to a balanced set")
    p_bal.add_argument("--angles", required=True)
    p_bal.add_argument("--eps", type=float, default=0.5)
    p_bal.set_defaults(handler=_cmd_balance)

    p_dir = sub.add_parser("dirichlet", help="simultaneous approximation")
    p_dir.add_argument("--thetas", required=True)
    p_dir.add_argument("-M", "--big-m", dest="big_m", type=int, required=True)
    p_dir.set_defaults(handler=_cmd_dirichlet)

    p_hecke = sub.add_parser("hecke", help="rotation-stream continuation values")
    p_hecke.add_argument("--theta", default="golden")
    p_hecke.add_argument("--gamma", type=float, default=0.0)
    p_hecke.add_argument("--check-identity", action="store_true")
    p_hecke.add_argument("-n", type=int, default=200)
    p_hecke.add_argument("-z", default="2+0j")
    p_hecke.set_defaults(handler=_cmd_hecke)

    p_knead = sub.add_parser("kneading", help="kneading determinant and entropy")
    p_knead.add_argument("--map", default="tent")
    p_knead.add_argument("--entropy", action="store_true")
    p_knead.add_argument("-n", type=int, default=2047)
    p_knead.add_argument("--tol", type=float, default=1e-6)
    p_knead.set_defaults(handler=_cmd_kneading)

    p_tm = sub.add_parser("thue-morse", help="Thue-Morse bits")
    p_tm.add_argument("-n", type=int, default=31)
    p_tm.set_defaults(handler=_cmd_thue_morse)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _threads_cap()
        return args.handler(args)
    except ValidationError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_VALIDATION
    except RrlLabError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
