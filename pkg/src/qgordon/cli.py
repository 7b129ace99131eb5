"""``qgordon`` command line: verification suites, value tables, path figures.

Exit codes: 0 when every selected report passes, 1 when any fails, 2 for
usage errors (bad flags or config), 3 for arithmetic domain errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import agcore, paths, rrpoly, santos, series
from .qalgebra import invert_variable

DEFAULTS = {
    "L_max": None,
    "M_max": None,
    "nu": None,
    "cutoff": 50,
    "format": "text",
    "jobs": 1,
    "with_nu3": False,
}

# per-family default grids; --L-max and friends override them
FAMILY_DEFAULTS = {
    "rr": {"L_max": 30},
    "paths": {"L_max": 16},
    "gis": {"L_max": 12},
    "ag": {"L_max": 10, "nu": 2},
    "series": {"M_max": 4},
    "santos": {"L_max": 16},
}
NU3_L_MAX = 7

FAMILIES = ("rr", "paths", "gis", "ag", "santos", "series")


class UsageError(Exception):
    pass


# -- suites --------------------------------------------------------------------
# Each task is a picklable (function, kwargs) pair that returns a list of
# reports, so tasks can be farmed out to worker processes.

def _as_list(result):
    return result if isinstance(result, list) else [result]


def _run_task(task):
    func, kwargs = task
    return _as_list(func(**kwargs))


def suite_tasks(family: str, opts: dict) -> list:
    """Tasks for one family, in the order their reports are emitted."""
    def pick(key):
        value = opts.get(key)
        return FAMILY_DEFAULTS[family].get(key) if value is None else value

    if family == "rr":
        L = pick("L_max")
        return [
            (rrpoly.verify_finite_rr, {"L_max": L}),
            (rrpoly.verify_recurrence, {"L_min": -10, "L_max": L}),
            (rrpoly.verify_gis_finite, {"L_max": min(L, 25), "m_max": 10}),
        ]
    if family == "paths":
        L = pick("L_max")
        return [
            (paths.verify_path_lemma, {"L_max": L}),
            (paths.verify_decompositions, {"L_max": L}),
        ]
    if family == "gis":
        L = pick("L_max")
        return [
            (rrpoly.verify_splitting_grid, {"L_max": L}),
            (rrpoly.fibonacci_checks, {"L_max": 30}),
        ]
    if family == "ag":
        L = pick("L_max")
        top = pick("nu")
        nus = list(range(1, top + 1))
        tasks = []
        for nu in nus:
            tasks += _ag_tasks(nu, L)
        if opts.get("with_nu3") and top < 3:
            tasks += _ag_tasks(3, min(L, NU3_L_MAX))
        tasks.append((agcore.verify_appendix, {}))
        return tasks
    if family == "santos":
        L = pick("L_max")
        return [
            (santos.verify_p1, {"L_max": L, "m_max": 6}),
            (santos.verify_p2, {"L_max": L, "M_range": (-6, 8)}),
            (santos.verify_reflection, {"m_max": 6}),
        ]
    if family == "series":
        cutoff = opts.get("cutoff") or DEFAULTS["cutoff"]
        M = pick("M_max")
        top = opts.get("nu") or 2
        tasks = [(series.rr_series_check, {"a": a, "cutoff": cutoff}) for a in (0, 1)]
        tasks.append((series.gis_series_check, {"m_max": 6, "M_max": 6, "cutoff": cutoff}))
        tasks.append((series.binomial_limit_check, {"cutoff": cutoff}))
        for nu in range(1, top + 1):
            tasks.append((series.ag_series_check, {"nu": nu, "cutoff": cutoff}))
        for nu in range(1, top + 1):
            for s in range(1, nu + 2):
                tasks.append((series.ag_variant_series_check,
                              {"nu": nu, "s": s, "M_max": M, "cutoff": cutoff}))
        return tasks
    raise UsageError(f"unknown family {family!r}")


def _ag_tasks(nu: int, L: int) -> list:
    return [
        (agcore.verify_ag_polynomial, {"nu": nu, "L_max": L}),
        (agcore.verify_recurrences, {"nu": nu, "L_max": L, "M_values": (0, 1, 2, 5)}),
        (agcore.verify_connection, {"nu": nu, "M_max": 8}),
        (agcore.verify_main_theorem, {"nu": nu, "L_max": L}),
    ]


def run_suite(families, opts: dict) -> list:
    """Run every task of the given families; reports come back in task order."""
    tasks = [t for fam in families for t in suite_tasks(fam, opts)]
    jobs = opts.get("jobs") or 1
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    return [r for chunk in chunks for r in chunk]


# -- tables --------------------------------------------------------------------

def _parse_range(text: str) -> range:
    try:
        lo, hi = text.split("..")
        return range(int(lo), int(hi))
    except ValueError:
        raise UsageError(f"--range expects LO..HI, got {text!r}") from None


def table_rows(kind: str, rng: range, args) -> list[str]:
    rows = []
    for n in rng:
        if kind == "e":
            rows.append(f"e_{n} = {rrpoly.e_poly(n).render()}")
        elif kind == "d":
            rows.append(f"d_{n} = {rrpoly.d_poly(n).render()}")
        elif kind == "ftilde":
            nu, s, b = _need(args, "nu", "s", "b")
            rows.append(f"F~_{s},{b}({n}) = {agcore.f_tilde(nu, s, b, n).render()}")
        elif kind == "bigf":
            nu, s, b, M = _need(args, "nu", "s", "b", "M")
            rows.append(f"F_{s},{b}({n},{M}) = {agcore.big_f(nu, s, b, n, M).render()}")
        elif kind == "B":
            nu, S, B = _need(args, "nu", "s", "b")
            if (n - S - B) % 2:
                continue  # defined only for L = S + B mod 2
            value = agcore.b_bosonic(nu, S, B, n)
            if args.inverted:
                value = invert_variable(value)
            rows.append(f"B_{S},{B}({n}) = {value.render()}")
        elif kind == "S":
            rows.append(f"S_{n} = {santos.santos_S(n).render()}")
        elif kind == "T":
            rows.append(f"T_{n} = {santos.santos_T(n).render()}")
    return rows


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("this table needs " + ", ".join("--" + m for m in missing))
    return [getattr(args, n) for n in names]


# -- config --------------------------------------------------------------------

def read_config(path: str) -> dict:
    """Parse a ``key = value`` file; keys use flag spelling (``L-max``) or ``L_max``."""
    known = {"L_max": int, "M_max": int, "nu": int, "cutoff": int, "jobs": int,
             "format": str, "with_nu3": lambda v: v.lower() in ("1", "true", "yes", "on")}
    out = {}
    try:
        with open(path) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (x.strip() for x in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in known:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = known[key](value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    if out.get("format", "text") not in ("text", "json"):
        raise UsageError(f"{path}: format must be text or json")
    return out


def merged_options(args) -> dict:
    opts = dict(DEFAULTS)
    if getattr(args, "config", None):
        opts.update(read_config(args.config))
    for key in DEFAULTS:
        value = getattr(args, key, None)
        if value is not None and value is not False:
            opts[key] = value
    for key in ("L_max", "M_max", "nu", "cutoff", "jobs"):
        if opts.get(key) is not None and opts[key] < (1 if key in ("nu", "cutoff", "jobs") else 0):
            raise UsageError(f"{key} is out of range: {opts[key]}")
    return opts


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgordon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None)
    common.add_argument("--config", metavar="FILE", help="key=value file; flags override it")

    v = sub.add_parser("verify", parents=[common], help="run identity checks")
    v.add_argument("family", choices=FAMILIES + ("all",))
    v.add_argument("--L-max", dest="L_max", type=int)
    v.add_argument("--M-max", dest="M_max", type=int)
    v.add_argument("--nu", type=int)
    v.add_argument("--cutoff", type=int)
    v.add_argument("--jobs", type=int)
    v.add_argument("--with-nu3", dest="with_nu3", action="store_true",
                   help=f"also run the nu=3 polynomial checks (L <= {NU3_L_MAX})")

    t = sub.add_parser("table", parents=[common], help="print a family of values")
    t.add_argument("kind", choices=("e", "d", "ftilde", "bigf", "B", "S", "T"))
    t.add_argument("--range", default="0..6", help="half-open index range LO..HI (default 0..6)")
    t.add_argument("--nu", type=int)
    t.add_argument("--s", type=int)
    t.add_argument("--b", type=int)
    t.add_argument("--M", type=int)
    t.add_argument("--inverted", action="store_true", help="substitute q -> 1/q (B only)")

    p = sub.add_parser("path", help="draw an admissible path")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--M", type=int, default=0)
    p.add_argument("--peaks", default="", help="comma separated peak positions")
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--svg", action="store_true")
    return parser


def _clip(line: str, width: int = 160) -> str:
    return line if len(line) <= width else line[: width - 3] + "..."


def _cmd_verify(args, out) -> int:
    opts = merged_options(args)
    families = FAMILIES if args.family == "all" else (args.family,)
    reports = run_suite(families, opts)
    if opts["format"] == "json":
        for r in reports:
            print(r.to_json(), file=out)
    else:
        for r in reports:
            print(r.summary_line(), file=out)
            for c in r.counterexamples[:3]:
                print(_clip(f"     at {c.params}: {c.lhs} != {c.rhs}"), file=out)
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} reports passed", file=out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_table(args, out) -> int:
    opts = merged_options(args)
    rows = table_rows(args.kind, _parse_range(args.range), args)
    if opts["format"] == "json":
        import json
        for row in rows:
            label, value = row.split(" = ", 1)
            print(json.dumps({"label": label, "value": value}, sort_keys=True), file=out)
    else:
        for row in rows:
            print(row, file=out)
    return 0


def _cmd_path(args, out) -> int:
    try:
        peaks = [int(x) for x in args.peaks.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--peaks expects integers, got {args.peaks!r}") from None
    if not 0 <= args.M <= args.L:
        raise UsageError("path needs 0 <= M <= L")
    path = paths.AdmissiblePath.from_peaks(-args.M, args.L - args.M, peaks, args.s, args.b)
    text = paths.render_path_svg(path) if args.svg else paths.render_path(path)
    out.write(text)
    return 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = {"verify": _cmd_verify, "table": _cmd_table, "path": _cmd_path}[args.command]
    try:
        return handler(args, out)
    except UsageError as exc:
        print(f"qgordon: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, IndexError) as exc:
        print(f"qgordon: domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
