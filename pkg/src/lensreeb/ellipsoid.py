"""Ellipsoid quotients: the closed-spectrum sanity model.

An ellipsoid E(a_0, ..., a_n) in C^{n+1} with pairwise rationally
independent axes carries exactly n+1 simple closed Reeb orbits, the
coordinate axis circles; the weighted cyclic action preserves them, so
downstairs the quotient carries exactly n+1 embedded circles.  Every
index and action is available in closed form, which makes these models
the ground truth the counting certificates are tested against.

Conventions:

* Axis circle j upstairs, iterated N times, has Conley-Zehnder index
  mu = n + 2*(N + sum_{i != j} floor(N a_j / a_i)) and mean index
  2 a_j sum_i 1/a_i.
* The embedded quotient circle of axis j lies in the free homotopy class
  g_j = l_j^{-1} (mod p) (class 0 when p = 1).  Its N-th downstairs
  iterate has class N*g_j, action N*a_j/p, and mean index N/p times the
  upstairs mean index; its reported mu is the index of the N-th iterate
  of the upstairs axis circle (the "lift convention").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import Rat, mod_inverse, rat_floor, rat_str
from .certify import BudgetOrbit, OrbitBudget, orbit_budget
from .errors import InputError, ResonantAxes
from .lens import LensSpace


@dataclass(frozen=True)
class EllipsoidModel:
    space: LensSpace
    axes: tuple[Fraction, ...]


@dataclass(frozen=True)
class SpectrumRow:
    """One class-a downstairs orbit: the N-th iterate of axis circle j."""

    axis: int
    iterate: int
    action: Fraction
    mu: int
    simple_in_class: bool

    def to_json(self) -> dict:
        return {
            "axis": self.axis,
            "iterate": self.iterate,
            "action": rat_str(self.action),
            "mu": self.mu,
            "simple_in_class": self.simple_in_class,
        }


@dataclass(frozen=True)
class ConvexityVerdict:
    """Minimum index over all checked iterates versus the n+2 threshold."""

    min_index: int
    axis: int
    iterate: int
    threshold: int
    passes: bool
    checked: int
    skipped: int


def ellipsoid_model(space: LensSpace, axes) -> EllipsoidModel:
    """Validate axis lengths: one positive rational per coordinate."""
    axes = tuple(Fraction(a) for a in axes)
    if len(axes) != space.n + 1:
        raise InputError(
            f"need {space.n + 1} axes for {space.n + 1} coordinates, got {len(axes)}"
        )
    if any(a <= 0 for a in axes):
        raise InputError(f"axes must be positive, got {axes}")
    return EllipsoidModel(space=space, axes=axes)


def orbit_class(model: EllipsoidModel, j: int) -> int:
    """Free homotopy class of the embedded quotient circle of axis j."""
    space = model.space
    if not 0 <= j <= space.n:
        raise InputError(f"axis must satisfy 0 <= j <= {space.n}, got {j}")
    if space.p == 1:
        return 0
    return mod_inverse(space.reduced[j], space.p)


def ellipsoid_cz(model: EllipsoidModel, j: int, iterate: int) -> int:
    """Index of the `iterate`-th power of upstairs axis circle j.

    Refuses resonant evaluations: if some other axis closes up at the
    same time the rotation count is ambiguous.
    """
    if not 0 <= j <= model.space.n:
        raise InputError(f"axis must satisfy 0 <= j <= {model.space.n}, got {j}")
    if iterate < 1:
        raise InputError(f"iterate must be >= 1, got {iterate}")
    total = iterate
    for i, a_i in enumerate(model.axes):
        if i == j:
            continue
        ratio = iterate * model.axes[j] / a_i
        if ratio.denominator == 1:
            raise ResonantAxes(i, j, iterate)
        total += rat_floor(ratio)
    return model.space.n + 2 * total


def ellipsoid_mean_index(model: EllipsoidModel, j: int) -> Fraction:
    """Mean index of upstairs axis circle j: 2 a_j sum_i 1/a_i."""
    if not 0 <= j <= model.space.n:
        raise InputError(f"axis must satisfy 0 <= j <= {model.space.n}, got {j}")
    return 2 * model.axes[j] * sum((1 / a for a in model.axes), Fraction(0))


def _check_class(space: LensSpace, klass: int) -> None:
    if space.p == 1:
        if klass != 0:
            raise InputError(f"p = 1 has only class 0, got {klass}")
        return
    if not 0 <= klass < space.p or gcd(klass, space.p) != 1:
        raise InputError(
            f"class must be a generator of Z_{space.p}, got {klass}"
        )


def _first_class_iterate(model: EllipsoidModel, j: int, klass: int) -> int:
    p = model.space.p
    if p == 1:
        return 1
    # N*g_j = klass (mod p) with g_j a unit has the unique solution below.
    return (klass * model.space.reduced[j]) % p or p


def symmetric_spectrum(
    model: EllipsoidModel, klass: int, action_cap: Rat
) -> list[SpectrumRow]:
    """All class-`klass` downstairs orbits with action <= action_cap.

    Rows are sorted by action.  Exactly one row per axis carries
    simple_in_class = True: the first iterate of that axis family to hit
    the class.
    """
    _check_class(model.space, klass)
    action_cap = Fraction(action_cap)
    p = model.space.p
    rows = []
    for j in range(model.space.n + 1):
        first = _first_class_iterate(model, j, klass)
        iterate = first
        while iterate * model.axes[j] / p <= action_cap:
            rows.append(
                SpectrumRow(
                    axis=j,
                    iterate=iterate,
                    action=iterate * model.axes[j] / p,
                    mu=ellipsoid_cz(model, j, iterate),
                    simple_in_class=(iterate == first),
                )
            )
            iterate += p
    rows.sort(key=lambda r: (r.action, r.axis, r.iterate))
    return rows


def class_budget(model: EllipsoidModel, klass: int) -> OrbitBudget:
    """Budget of the n+1 simple-in-class orbits with exact mean indices."""
    _check_class(model.space, klass)
    p = model.space.p
    orbits = []
    for j in range(model.space.n + 1):
        first = _first_class_iterate(model, j, klass)
        mean = Fraction(first, p) * ellipsoid_mean_index(model, j)
        orbits.append(
            BudgetOrbit(label=f"axis{j}x{first}", klass=klass, mean_index=mean)
        )
    return orbit_budget(p=p, target=klass, orbits=orbits)


def check_dynamical_convexity(model: EllipsoidModel, n_max: int) -> ConvexityVerdict:
    """Scan all iterates up to n_max for an index below n + 2.

    The threshold n + 2 is the defining bound for dynamical convexity of
    the upstairs flow.  Resonant iterates have no well-defined index
    under the nondegeneracy convention and are skipped (they sit in
    degenerate families between their nondegenerate neighbors); if every
    single evaluation resonates, as for a round sphere, the degeneracy
    is total and ResonantAxes is raised.
    """
    if n_max < 1:
        raise InputError(f"n_max must be >= 1, got {n_max}")
    best = None
    checked = 0
    skipped = 0
    first_resonance = None
    for j in range(model.space.n + 1):
        for iterate in range(1, n_max + 1):
            try:
                mu = ellipsoid_cz(model, j, iterate)
            except ResonantAxes as exc:
                skipped += 1
                if first_resonance is None:
                    first_resonance = exc
                continue
            checked += 1
            if best is None or mu < best[0]:
                best = (mu, j, iterate)
    if best is None:
        raise first_resonance
    threshold = model.space.n + 2
    return ConvexityVerdict(
        min_index=best[0],
        axis=best[1],
        iterate=best[2],
        threshold=threshold,
        passes=best[0] >= threshold,
        checked=checked,
        skipped=skipped,
    )


__all__ = [
    "EllipsoidModel",
    "SpectrumRow",
    "ConvexityVerdict",
    "ellipsoid_model",
    "orbit_class",
    "ellipsoid_cz",
    "ellipsoid_mean_index",
    "symmetric_spectrum",
    "class_budget",
    "check_dynamical_convexity",
]
