"""Command-line front end.

Subcommands: cr, toric, cz, hc, ellipsoid, certify, sweep.  Output is
JSON by default (aligned text with --format table), written to stdout
or --output.  Rational values are serialized as "num/den" strings;
integers stay native.  Identical invocations produce byte-identical
output.

Exit codes: 0 success (including CONSISTENT / FEASIBLE verdicts),
1 usage or input error (structured error JSON), 2 mathematically
negative verdict (CONTRADICTION / INFEASIBLE / sweep failures) or a
violated exact identity.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__, certify, chen_ruan, ellipsoid, sweep, toric
from .arith import parse_rat, rat_str
from .errors import InputError, LensreebError
from .lens import normalize, validate

NEGATIVE_VERDICTS = (certify.CONTRADICTION, certify.INFEASIBLE)


def _parse_weights(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"cannot parse weights {text!r}: {exc}") from exc


def _parse_axes(text: str):
    return tuple(parse_rat(part) for part in text.split(","))


def _normalized_space(args):
    space = validate(args.p, _parse_weights(args.weights))
    return normalize(space)


def _cmd_cr(args):
    space = validate(args.p, _parse_weights(args.weights))
    report = chen_ruan.existence_report(space)
    table = chen_ruan.cr_table(space)
    payload = {
        "command": "cr",
        "space": space.to_json(),
        "table": table.rows(),
        "max_degree": report["max_degree"],
        "vanishing_above": report["vanishing_above"],
        "existence": report["classes"],
        "assumptions": report["assumptions"],
    }
    return payload, False


def _cmd_toric(args):
    space = validate(args.p, _parse_weights(args.weights))
    normalized, factor = normalize(space)
    model = toric.build_toric_model(normalized)
    det = toric.verify_determinant(model)
    kernel = toric.verify_kernel_generator(model)
    payload = {
        "command": "toric",
        "input_space": space.to_json(),
        "space": normalized.to_json(),
        "relabel_factor": factor,
        "model": {
            "m": model.m,
            "k": model.k,
            "q": model.q,
            "c": model.c,
            "d": model.d,
            "a0": model.a0,
            "normals": [list(nu) for nu in model.normals],
            "eta": list(model.eta),
        },
        "checks": {
            "determinant": det,
            "kernel_generator": {
                "vector": [rat_str(x) for x in kernel.vector],
                "order": kernel.order,
                "status": kernel.status,
            },
        },
        "mean_index": rat_str(toric.mean_index(model)),
    }
    return payload, False


def _cmd_cz(args):
    space = validate(args.p, _parse_weights(args.weights))
    normalized, factor = normalize(space)
    model = toric.build_toric_model(normalized)
    if args.klass is not None:
        spectrum = toric.cz_spectrum(model, args.klass, args.max_iter)
        pairs = spectrum.rows
    else:
        pairs = tuple(
            (N, toric.cz_index(model, N)) for N in range(1, args.max_iter + 1)
        )
    rows = [
        {"iterate": N, "class": N % normalized.p, "index": rat_str(mu)}
        for N, mu in pairs
    ]
    payload = {
        "command": "cz",
        "space": normalized.to_json(),
        "relabel_factor": factor,
        "class": args.klass,
        "max_iter": args.max_iter,
        "rows": rows,
        "mean_index": rat_str(toric.mean_index(model)),
    }
    return payload, False


def _cmd_hc(args):
    space = validate(args.p, _parse_weights(args.weights))
    normalized, factor = normalize(space)
    model = toric.build_toric_model(normalized)
    cap = parse_rat(args.cap)
    table, k_min = toric.hc_table(model, args.klass, cap)
    payload = {
        "command": "hc",
        "space": normalized.to_json(),
        "relabel_factor": factor,
        "class": args.klass,
        "cap": rat_str(cap),
        "k_min": rat_str(k_min),
        "k0_threshold": rat_str(toric.k0_threshold(model, args.klass)),
        "table": table.rows(),
    }
    return payload, False


def _cmd_ellipsoid(args):
    space = validate(args.p, _parse_weights(args.weights))
    model = ellipsoid.ellipsoid_model(space, _parse_axes(args.axes))
    cap = parse_rat(args.cap)
    spectrum = ellipsoid.symmetric_spectrum(model, args.klass, cap)
    payload = {
        "command": "ellipsoid",
        "space": space.to_json(),
        "axes": [rat_str(a) for a in model.axes],
        "class": args.klass,
        "action_cap": rat_str(cap),
        "orbit_classes": [
            ellipsoid.orbit_class(model, j) for j in range(space.n + 1)
        ],
        "mean_indices": [
            rat_str(ellipsoid.ellipsoid_mean_index(model, j))
            for j in range(space.n + 1)
        ],
        "spectrum": [row.to_json() for row in spectrum],
    }
    if args.convexity is not None:
        verdict = ellipsoid.check_dynamical_convexity(model, args.convexity)
        payload["convexity"] = {
            "min_index": verdict.min_index,
            "axis": verdict.axis,
            "iterate": verdict.iterate,
            "threshold": verdict.threshold,
            "passes": verdict.passes,
            "checked": verdict.checked,
            "skipped": verdict.skipped,
        }
        return payload, not verdict.passes
    return payload, False


def _load_budget(path: str) -> certify.OrbitBudget:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read budget {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"budget {path!r} is not valid JSON: {exc}") from exc
    try:
        orbits = [
            certify.BudgetOrbit(
                label=str(entry["label"]),
                klass=int(entry["class"]),
                mean_index=parse_rat(str(entry["mean_index"])),
            )
            for entry in raw["orbits"]
        ]
        return certify.orbit_budget(int(raw["p"]), int(raw["class"]), orbits)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"budget {path!r} has invalid structure: {exc}") from exc


def _cmd_certify(args):
    budget = _load_budget(args.budget)
    if args.mode == "ineq":
        verdict = certify.check_final_inequality(budget)
        payload = {
            "command": "certify",
            "mode": "ineq",
            "p": budget.p,
            "class": budget.target,
            "lhs": rat_str(verdict.lhs),
            "rhs": rat_str(verdict.rhs),
            "equality": verdict.equality,
            "orbits_counted": verdict.orbits_counted,
            "verdict": verdict.verdict,
        }
        return payload, verdict.verdict in NEGATIVE_VERDICTS
    if args.mode == "single":
        in_class = [o for o in budget.orbits if o.klass == budget.target]
        if len(in_class) != 1:
            raise InputError(
                "single mode needs exactly one orbit in the target class, "
                f"found {len(in_class)}"
            )
        verdict = certify.single_orbit_contradiction(
            budget.p, in_class[0].mean_index
        )
        payload = {
            "command": "certify",
            "mode": "single",
            "p": budget.p,
            "class": budget.target,
            "mean_index": rat_str(verdict.mean_index),
            "threshold": rat_str(verdict.threshold),
            "verdict": verdict.verdict,
        }
        return payload, verdict.verdict in NEGATIVE_VERDICTS
    # matching
    model = None
    if args.k0 is None or args.n is None:
        if args.weights is None:
            raise InputError(
                "matching needs --k0 and --n, or --weights to derive them"
            )
        space = validate(budget.p, _parse_weights(args.weights))
        normalized, _ = normalize(space)
        model = toric.build_toric_model(normalized)
    verdict = certify.matching_feasibility(
        budget,
        horizon=args.horizon,
        n=args.n,
        k0=parse_rat(args.k0) if args.k0 is not None else None,
        model=model,
    )
    payload = {
        "command": "certify",
        "mode": "matching",
        "p": budget.p,
        "class": budget.target,
        "k0": rat_str(verdict.k0),
        "window": verdict.window,
        "horizon": verdict.horizon,
        "carriers": verdict.carriers,
        "candidates": verdict.candidates,
        "matched": verdict.matched,
        "verdict": verdict.verdict,
    }
    return payload, verdict.verdict in NEGATIVE_VERDICTS


def _cmd_sweep(args):
    config = sweep.load_sweep_config(args.config)
    workers = int(os.environ.get("LENSREEB_THREADS", "1") or "1")
    report = sweep.run_sweep(
        config, workers=max(1, workers), fail_fast=args.fail_fast
    )
    payload = {"command": "sweep", **report}
    if args.output is None and config.output is not None:
        args.output = config.output
    return payload, report["failures"] > 0


def _table_rows(payload) -> tuple[list[str], list[list[str]]]:
    """Pick the natural row list of a payload for table rendering."""
    for key in ("table", "rows", "spectrum", "existence"):
        rows = payload.get(key)
        if isinstance(rows, list) and rows and isinstance(rows[0], dict):
            headers = list(rows[0])
            return headers, [[str(row[h]) for h in headers] for row in rows]
    if payload.get("command") == "sweep":
        headers = ["suite", "checked", "failures"]
        body = [
            [name, str(entry["checked"]), str(entry["failures"])]
            for name, entry in payload["suites"].items()
        ]
        return headers, body
    headers = ["key", "value"]
    body = [
        [key, json.dumps(value) if isinstance(value, (dict, list)) else str(value)]
        for key, value in payload.items()
        if key != "command"
    ]
    return headers, body


def _render_table(payload) -> str:
    headers, body = _table_rows(payload)
    widths = [
        max(len(headers[i]), *(len(row[i]) for row in body)) if body else len(headers[i])
        for i in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip(),
        "  ".join("-" * widths[i] for i in range(len(headers))).rstrip(),
    ]
    for row in body:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(row))).rstrip())
    return "\n".join(lines) + "\n"


def _emit(payload, args) -> None:
    if getattr(args, "format", "json") == "table":
        text = _render_table(payload)
    else:
        text = json.dumps(payload, indent=2) + "\n"
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lensreeb",
        description="Exact invariants of Reeb dynamics on lens spaces.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weights=True):
        if weights:
            p.add_argument("--p", type=int, required=True, help="group order")
            p.add_argument(
                "--weights", required=True, help="comma-separated integer weights"
            )
        p.add_argument("--format", choices=("json", "table"), default="json")
        p.add_argument("--output", help="write to this file instead of stdout")

    p_cr = sub.add_parser("cr", help="orbifold degree table and existence report")
    common(p_cr)
    p_cr.set_defaults(func=_cmd_cr)

    p_toric = sub.add_parser("toric", help="toric model data and exact checks")
    common(p_toric)
    p_toric.set_defaults(func=_cmd_toric)

    p_cz = sub.add_parser("cz", help="Conley-Zehnder indices of fiber iterates")
    common(p_cz)
    p_cz.add_argument("--class", dest="klass", type=int, default=None,
                      help="restrict to one homotopy class (normalized labels)")
    p_cz.add_argument("--max-iter", type=int, default=20)
    p_cz.set_defaults(func=_cmd_cz)

    p_hc = sub.add_parser("hc", help="per-class degree progression")
    common(p_hc)
    p_hc.add_argument("--class", dest="klass", type=int, required=True)
    p_hc.add_argument("--cap", default="100", help="degree cap, rational")
    p_hc.set_defaults(func=_cmd_hc)

    p_ell = sub.add_parser("ellipsoid", help="ellipsoid spectrum in a class")
    common(p_ell)
    p_ell.add_argument("--axes", required=True,
                       help="comma-separated rational axes, e.g. 1,13/8,29/11")
    p_ell.add_argument("--class", dest="klass", type=int, required=True)
    p_ell.add_argument("--cap", default="10", help="action cap, rational")
    p_ell.add_argument("--convexity", type=int, default=None, metavar="N_MAX",
                       help="also scan iterates up to N_MAX for indices below n+2")
    p_ell.set_defaults(func=_cmd_ellipsoid)

    p_cert = sub.add_parser("certify", help="counting certificates for a budget")
    p_cert.add_argument("mode", choices=("ineq", "single", "matching"))
    p_cert.add_argument("--budget", required=True, help="budget JSON file")
    p_cert.add_argument("--horizon", type=int, default=200)
    p_cert.add_argument("--k0", default=None, help="carrier start degree, rational")
    p_cert.add_argument("--n", type=int, default=None, help="dimension parameter")
    p_cert.add_argument("--weights", default=None,
                        help="derive k0 and n from this weight tuple")
    p_cert.add_argument("--format", choices=("json", "table"), default="json")
    p_cert.add_argument("--output")
    p_cert.set_defaults(func=_cmd_certify)

    p_sweep = sub.add_parser("sweep", help="run invariant suites over a grid")
    p_sweep.add_argument("--config", required=True, help="flat TOML config")
    p_sweep.add_argument("--fail-fast", action="store_true")
    p_sweep.add_argument("--format", choices=("json", "table"), default="json")
    p_sweep.add_argument("--output")
    p_sweep.set_defaults(func=_cmd_sweep)

    return parser


def _error_payload(exc: Exception) -> dict:
    detail = {"type": type(exc).__name__, "message": str(exc)}
    for attr in ("index", "weight", "p", "i", "j", "iterate", "modulus"):
        if hasattr(exc, attr):
            detail[attr] = getattr(exc, attr)
    return {"error": detail}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; reserve 2 for verdicts.
        return 0 if exc.code == 0 else 1
    try:
        payload, negative = args.func(args)
    except InputError as exc:
        sys.stdout.write(json.dumps(_error_payload(exc), indent=2) + "\n")
        return 1
    except LensreebError as exc:
        sys.stdout.write(json.dumps(_error_payload(exc), indent=2) + "\n")
        return 2
    _emit(payload, args)
    return 2 if negative else 0


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
