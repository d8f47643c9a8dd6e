"""Parameter sweeps: run the named invariant suites over a weight grid.

A sweep iterates lens-space parameters (exhaustively over residue
tuples, or as a seeded random sample), runs each requested suite, and
reports pass/fail counts plus the first counterexample per suite.  The
invariants are theorems, so any failure is an implementation bug; the
sweep exists to make that claim falsifiable in bulk.

Reports are deterministic: points are enumerated in sorted order,
random mode draws from a caller-supplied seed, and multi-worker runs
chunk a pre-computed point list so counts and first counterexamples do
not depend on the worker count.
"""

from __future__ import annotations

import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

from . import chen_ruan, toric
from .errors import IdentityViolation, InputError, LensreebError
from .lens import LensSpace, normalize, validate

POINT_SUITES = ("cr_bounds",)
MODEL_SUITES = (
    "determinant",
    "basis_identity",
    "kernel_order",
    "bezout_unit",
    "periodicity",
    "bezout_invariance",
    "mean_index_sandwich",
    "sphere_reduction",
)
ALL_SUITES = POINT_SUITES + MODEL_SUITES


@dataclass(frozen=True)
class SweepConfig:
    p_min: int
    p_max: int
    n_values: tuple[int, ...]
    weight_mode: str
    seed: Optional[int]
    count: Optional[int]
    checks: tuple[str, ...]
    output: Optional[str]
    n_max: int


def load_sweep_config(path: str) -> SweepConfig:
    """Parse and validate a flat TOML config file."""
    try:
        with open(path, "rb") as handle:
            raw = _toml.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read config {path!r}: {exc}") from exc
    except _toml.TOMLDecodeError as exc:
        raise InputError(f"config {path!r} is not valid TOML: {exc}") from exc
    return sweep_config(**raw)


def sweep_config(
    p_min: int = 1,
    p_max: int = 10,
    n_values=(2,),
    weight_mode: str = "exhaustive",
    seed: Optional[int] = None,
    count: Optional[int] = None,
    checks=("all",),
    output: Optional[str] = None,
    n_max: int = 200,
    **unknown,
) -> SweepConfig:
    """Validate raw config values (TOML keys map 1:1 onto the arguments)."""
    if unknown:
        raise InputError(f"unknown config keys: {sorted(unknown)}")
    if not isinstance(p_min, int) or not isinstance(p_max, int):
        raise InputError("p_min and p_max must be integers")
    if p_min < 1 or p_max < p_min:
        raise InputError(f"need 1 <= p_min <= p_max, got [{p_min}, {p_max}]")
    n_values = tuple(n_values)
    if not n_values or any(not isinstance(n, int) or n < 1 for n in n_values):
        raise InputError(f"n_values must be positive integers, got {n_values}")
    if weight_mode not in ("exhaustive", "random"):
        raise InputError(
            f"weight_mode must be 'exhaustive' or 'random', got {weight_mode!r}"
        )
    if weight_mode == "random":
        if seed is None:
            raise InputError("random weight_mode requires a seed")
        if count is None or not isinstance(count, int) or count < 1:
            raise InputError("random weight_mode requires a positive count")
    checks = tuple(checks)
    if checks == ("all",):
        checks = ALL_SUITES
    unknown_checks = [c for c in checks if c not in ALL_SUITES]
    if unknown_checks:
        raise InputError(
            f"unknown checks {unknown_checks}; available: {list(ALL_SUITES)}"
        )
    if not isinstance(n_max, int) or n_max < 2:
        raise InputError(f"n_max must be an integer >= 2, got {n_max}")
    return SweepConfig(
        p_min=p_min,
        p_max=p_max,
        n_values=n_values,
        weight_mode=weight_mode,
        seed=seed,
        count=count,
        checks=checks,
        output=output,
        n_max=n_max,
    )


def _units(p: int) -> list[int]:
    return [u for u in range(1, p + 1) if gcd(u, p) == 1] if p > 1 else [1]


def _exhaustive_points(config: SweepConfig) -> list[tuple[int, tuple[int, ...]]]:
    points = []
    for p in range(config.p_min, config.p_max + 1):
        units = _units(p) if p > 1 else [1]
        for n in config.n_values:
            if p == 1:
                points.append((1, (1,) * (n + 1)))
                continue
            stack = [()]
            for _ in range(n + 1):
                stack = [t + (u,) for t in stack for u in units]
            points.extend((p, t) for t in stack)
    return points


def _random_points(config: SweepConfig) -> list[tuple[int, tuple[int, ...]]]:
    rng = random.Random(config.seed)
    points = []
    for _ in range(config.count):
        p = rng.randint(config.p_min, config.p_max)
        n = rng.choice(config.n_values)
        if p == 1:
            weights = tuple(rng.randint(1, 9) for _ in range(n + 1))
        else:
            units = _units(p)
            weights = tuple(rng.choice(units) for _ in range(n + 1))
        points.append((p, weights))
    return points


def sweep_points(config: SweepConfig) -> list[tuple[int, tuple[int, ...]]]:
    if config.weight_mode == "exhaustive":
        return _exhaustive_points(config)
    return _random_points(config)


def _check_cr_bounds(space: LensSpace) -> None:
    bound = 2 * space.n + 2
    for k in range(space.p):
        degree = 2 * chen_ruan.age(space, k)
        if k == 0:
            if degree != 0:
                raise IdentityViolation("untwisted degree must vanish", lhs=degree, rhs=0)
        elif not 0 < degree < bound:
            raise IdentityViolation(
                f"twisted degree out of range at k={k}", lhs=degree, rhs=bound
            )


def _check_model_suite(suite: str, model: toric.ToricModel, n_max: int) -> None:
    space = model.space
    if suite == "determinant":
        toric.verify_determinant(model)
    elif suite == "basis_identity":
        toric.verify_basis_identity(model)
    elif suite == "kernel_order":
        toric.verify_kernel_generator(model)
    elif suite == "bezout_unit":
        if model.k * model.d - model.m * model.c != 1:
            raise IdentityViolation(
                "Bezout relation failed", lhs=model.k * model.d - model.m * model.c, rhs=1
            )
        if gcd(model.k, model.m) != 1:
            raise IdentityViolation(
                "k must be a unit modulo m", lhs=gcd(model.k, model.m), rhs=1
            )
    elif suite == "periodicity":
        toric.verify_periodicity(model, max(n_max, space.p + 1))
    elif suite == "bezout_invariance":
        reference = [toric.cz_index(model, N) for N in range(1, min(n_max, 50) + 1)]
        for c, d in toric.bezout_pairs(model, count=5)[1:]:
            alt = toric.with_bezout_pair(model, c, d)
            for N, expect in enumerate(reference, start=1):
                got = toric.cz_index(alt, N)
                if got != expect:
                    raise IdentityViolation(
                        f"index changed under Bezout pair ({c}, {d}) at N={N}",
                        lhs=got,
                        rhs=expect,
                    )
    elif suite == "mean_index_sandwich":
        delta = toric.mean_index(model)
        n = space.n
        for N in range(1, n_max + 1):
            gap = toric.cz_index(model, N) - N * delta
            if not -n <= gap <= n:
                raise IdentityViolation(
                    f"mean-index deviation out of range at N={N}", lhs=gap, rhs=n
                )
    elif suite == "sphere_reduction":
        if space.p == 1:
            for N in range(1, n_max + 1):
                expect = Fraction(space.n + 2 * N)
                got = toric.cz_index(model, N)
                if got != expect:
                    raise IdentityViolation(
                        f"sphere index law failed at N={N}", lhs=got, rhs=expect
                    )
    else:
        raise InputError(f"unknown suite {suite!r}")


def _run_point_chunk(args):
    """Worker: run point suites over an indexed chunk of raw points."""
    chunk, checks, fail_fast = args
    counts = {s: 0 for s in checks if s in POINT_SUITES}
    failures = {s: 0 for s in counts}
    first = {s: None for s in counts}
    for index, (p, weights) in chunk:
        space = validate(p, weights)
        for suite in counts:
            counts[suite] += 1
            try:
                _check_cr_bounds(space)
            except LensreebError as exc:
                if fail_fast:
                    raise
                failures[suite] += 1
                if first[suite] is None:
                    first[suite] = (index, {"p": p, "weights": list(weights), "detail": str(exc)})
    return counts, failures, first


def _run_model_chunk(args):
    """Worker: run model suites over an indexed chunk of normalized spaces."""
    chunk, checks, n_max, fail_fast = args
    suites = [s for s in checks if s in MODEL_SUITES]
    counts = {s: 0 for s in suites}
    failures = {s: 0 for s in counts}
    first = {s: None for s in counts}
    for index, (p, weights) in chunk:
        space = validate(p, weights)
        try:
            model = toric.build_toric_model(space)
        except LensreebError as exc:
            if fail_fast:
                raise
            # Construction itself failed: charge every requested suite.
            for suite in suites:
                counts[suite] += 1
                failures[suite] += 1
                if first[suite] is None:
                    first[suite] = (index, {"p": p, "weights": list(weights), "detail": str(exc)})
            continue
        for suite in suites:
            if suite == "sphere_reduction" and p != 1:
                continue
            counts[suite] += 1
            try:
                _check_model_suite(suite, model, n_max)
            except LensreebError as exc:
                if fail_fast:
                    raise
                failures[suite] += 1
                if first[suite] is None:
                    first[suite] = (index, {"p": p, "weights": list(weights), "detail": str(exc)})
    return counts, failures, first


def _merge(results, suite_names):
    counts = {s: 0 for s in suite_names}
    failures = {s: 0 for s in suite_names}
    first = {s: None for s in suite_names}
    for part_counts, part_failures, part_first in results:
        for suite in part_counts:
            counts[suite] += part_counts[suite]
            failures[suite] += part_failures[suite]
            if part_first[suite] is not None:
                if first[suite] is None or part_first[suite][0] < first[suite][0]:
                    first[suite] = part_first[suite]
    return counts, failures, first


def _chunked(items, workers):
    if not items:
        return []
    size = max(1, (len(items) + workers - 1) // workers)
    return [items[i : i + size] for i in range(0, len(items), size)]


def run_sweep(config: SweepConfig, workers: int = 1, fail_fast: bool = False) -> dict:
    """Execute the sweep and return the JSON-ready report."""
    points = sweep_points(config)
    indexed_points = list(enumerate(points))

    # Model suites run once per distinct normalized form; normalization is
    # cheap, so dedup up front to keep counts worker-independent.
    seen = set()
    distinct = []
    for p, weights in points:
        normalized, _ = normalize(validate(p, weights))
        key = (normalized.p, normalized.reduced)
        if key not in seen:
            seen.add(key)
            distinct.append((normalized.p, normalized.reduced))
    indexed_models = list(enumerate(sorted(distinct)))

    point_suites = [s for s in config.checks if s in POINT_SUITES]
    model_suites = [s for s in config.checks if s in MODEL_SUITES]

    point_jobs = [
        (chunk, tuple(point_suites), fail_fast)
        for chunk in _chunked(indexed_points, workers)
        if point_suites
    ]
    model_jobs = [
        (chunk, tuple(model_suites), config.n_max, fail_fast)
        for chunk in _chunked(indexed_models, workers)
        if model_suites
    ]

    if workers > 1 and (len(point_jobs) > 1 or len(model_jobs) > 1):
        with ProcessPoolExecutor(max_workers=workers) as pool:
            point_results = list(pool.map(_run_point_chunk, point_jobs))
            model_results = list(pool.map(_run_model_chunk, model_jobs))
    else:
        point_results = [_run_point_chunk(job) for job in point_jobs]
        model_results = [_run_model_chunk(job) for job in model_jobs]

    counts_p, failures_p, first_p = _merge(point_results, point_suites)
    counts_m, failures_m, first_m = _merge(model_results, model_suites)
    counts = {**counts_p, **counts_m}
    failures = {**failures_p, **failures_m}
    first = {**first_p, **first_m}

    suites_report = {}
    total_failures = 0
    for suite in config.checks:
        entry = {
            "checked": counts.get(suite, 0),
            "failures": failures.get(suite, 0),
            "first_counterexample": first.get(suite)[1] if first.get(suite) else None,
        }
        total_failures += entry["failures"]
        suites_report[suite] = entry

    return {
        "config": {
            "p_min": config.p_min,
            "p_max": config.p_max,
            "n_values": list(config.n_values),
            "weight_mode": config.weight_mode,
            "seed": config.seed,
            "count": config.count,
            "checks": list(config.checks),
            "n_max": config.n_max,
        },
        "points": len(points),
        "models": len(indexed_models),
        "suites": suites_report,
        "failures": total_failures,
    }


__all__ = [
    "ALL_SUITES",
    "POINT_SUITES",
    "MODEL_SUITES",
    "SweepConfig",
    "sweep_config",
    "load_sweep_config",
    "sweep_points",
    "run_sweep",
]
