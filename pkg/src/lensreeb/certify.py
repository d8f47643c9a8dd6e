"""Finite counting certificates for orbit budgets.

The counting argument compares two densities on the degree axis.  The
carrier sequence k0, k0 + 2, k0 + 4, ... must receive one closed orbit
per degree through an injective assignment that moves a degree by at
most its index window; it demands density 1/2.  A single orbit of mean
index D supplies iterates whose indices grow with slope D, and its
class-a iterates thin out by a further factor p, so it supplies density
1/(p*D).  A finite budget of orbits claiming to be the complete class-a
orbit set of a dynamically convex form is therefore contradicted
whenever

    p/2 <= sum_j 1/D_j

fails.  These checks are refutation-only: a finite horizon can expose
an impossible budget but can never confirm an infinite statement, hence
the three-valued verdict vocabulary (CONSISTENT / CONTRADICTION,
FEASIBLE-AT-HORIZON / INFEASIBLE, INCONCLUSIVE).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .arith import Rat, mod_inverse, rat_floor, rat_str
from .errors import EmptyBudget, InputError, NonpositiveMeanIndex

CONSISTENT = "CONSISTENT"
CONTRADICTION = "CONTRADICTION"
INCONCLUSIVE = "INCONCLUSIVE"
FEASIBLE = "FEASIBLE-AT-HORIZON"
INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class BudgetOrbit:
    """One hypothetical simple orbit: label, free homotopy class, mean index."""

    label: str
    klass: int
    mean_index: Fraction


@dataclass(frozen=True)
class OrbitBudget:
    """Hypothetical complete set of simple closed orbits relevant to a class."""

    p: int
    target: int
    orbits: tuple[BudgetOrbit, ...]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "class": self.target,
            "orbits": [
                {
                    "label": orb.label,
                    "class": orb.klass,
                    "mean_index": rat_str(orb.mean_index),
                }
                for orb in self.orbits
            ],
        }


@dataclass(frozen=True)
class CarrierSequence:
    """The degree progression k0, k0+2, ... with its index window 2n."""

    k0: Fraction
    n: int

    @property
    def window(self) -> int:
        return 2 * self.n

    def degree(self, k: int) -> Fraction:
        return self.k0 + 2 * k

    def degrees(self, count: int) -> list[Fraction]:
        return [self.degree(k) for k in range(count)]


@dataclass(frozen=True)
class DensityEstimate:
    symbolic: Fraction
    estimate: Fraction
    count: int
    horizon: int
    horizon_warning: bool


@dataclass(frozen=True)
class InequalityVerdict:
    lhs: Fraction
    rhs: Fraction
    verdict: str
    equality: bool
    orbits_counted: int


@dataclass(frozen=True)
class SingleOrbitVerdict:
    p: int
    mean_index: Fraction
    threshold: Fraction
    verdict: str


@dataclass(frozen=True)
class MatchingVerdict:
    verdict: str
    carriers: int
    candidates: int
    matched: int
    k0: Fraction
    window: int
    horizon: int


def orbit_budget(p: int, target: int, orbits: Sequence[BudgetOrbit]) -> OrbitBudget:
    """Validate and freeze a budget.

    Every mean index must be positive and at least one orbit must carry
    the target class itself.
    """
    if p < 1:
        raise InputError(f"group order must be >= 1, got {p}")
    if not 0 <= target < p:
        raise InputError(f"target class must satisfy 0 <= a < p={p}, got {target}")
    orbits = tuple(
        BudgetOrbit(
            label=str(orb.label),
            klass=orb.klass % p,
            mean_index=Fraction(orb.mean_index),
        )
        for orb in orbits
    )
    for orb in orbits:
        if orb.mean_index <= 0:
            raise NonpositiveMeanIndex(
                f"orbit {orb.label!r} has mean index {orb.mean_index} <= 0"
            )
    if not any(orb.klass == target for orb in orbits):
        raise EmptyBudget(
            f"budget has no orbit in the target class {target}"
        )
    return OrbitBudget(p=p, target=target, orbits=orbits)


def carrier_density() -> Fraction:
    """Asymptotic density of the carrier degrees: exactly 1/2."""
    return Fraction(1, 2)


def carrier_density_estimate(k0: Rat, horizon: int) -> DensityEstimate:
    """Finite truncation #{i : k0 + 2i <= horizon} / horizon.

    Converges to 1/2; very short horizons are flagged rather than trusted.
    """
    if horizon < 1:
        raise InputError(f"horizon must be >= 1, got {horizon}")
    k0 = Fraction(k0)
    if horizon < k0:
        count = 0
    else:
        count = rat_floor((horizon - k0) / 2) + 1
    return DensityEstimate(
        symbolic=carrier_density(),
        estimate=Fraction(count, horizon),
        count=count,
        horizon=horizon,
        horizon_warning=count < 10,
    )


def orbit_density(p: int, delta: Rat) -> Fraction:
    """Density 1/(p*delta) of class-matched iterates of one orbit."""
    if p < 1:
        raise InputError(f"group order must be >= 1, got {p}")
    delta = Fraction(delta)
    if delta <= 0:
        raise NonpositiveMeanIndex(f"mean index must be > 0, got {delta}")
    return 1 / (p * delta)


def check_final_inequality(budget: OrbitBudget) -> InequalityVerdict:
    """Evaluate p/2 <= sum over target-class orbits of 1/mean_index, exactly.

    CONTRADICTION means the budget cannot be the complete orbit set of
    the class for any dynamically convex form.
    """
    in_class = [orb for orb in budget.orbits if orb.klass == budget.target]
    rhs = sum((1 / orb.mean_index for orb in in_class), Fraction(0))
    lhs = Fraction(budget.p, 2)
    return InequalityVerdict(
        lhs=lhs,
        rhs=rhs,
        verdict=CONSISTENT if lhs <= rhs else CONTRADICTION,
        equality=lhs == rhs,
        orbits_counted=len(in_class),
    )


def single_orbit_contradiction(p: int, delta_simple: Rat) -> SingleOrbitVerdict:
    """Can one simple orbit of mean index delta_simple carry the whole class?

    Density demands 1/delta >= p/2, so delta > 2/p is impossible:
    CONTRADICTION certifies at least a second simple orbit.  At or below
    the threshold the check is INCONCLUSIVE.
    """
    if p < 1:
        raise InputError(f"group order must be >= 1, got {p}")
    delta = Fraction(delta_simple)
    if delta <= 0:
        raise NonpositiveMeanIndex(f"mean index must be > 0, got {delta}")
    threshold = Fraction(2, p)
    return SingleOrbitVerdict(
        p=p,
        mean_index=delta,
        threshold=threshold,
        verdict=CONTRADICTION if delta > threshold else INCONCLUSIVE,
    )


def iterate_mean_relation(delta_pth: Rat, p: int) -> Fraction:
    """Mean index is linear under iteration: Delta(orbit) = Delta(orbit^p)/p."""
    if p < 1:
        raise InputError(f"group order must be >= 1, got {p}")
    return Fraction(delta_pth) / p


def _rat_ceil(q: Fraction) -> int:
    return -rat_floor(-q)


def _class_iterates(p: int, klass: int, target: int) -> Optional[tuple[int, int]]:
    """Solve N*klass = target (mod p): (first N >= 1, step), or None."""
    if p == 1:
        return 1, 1
    c = klass % p
    g = gcd(c, p)
    if target % g != 0:
        return None
    step = p // g
    if step == 1:
        return 1, 1
    first = ((target // g) * mod_inverse(c // g, step)) % step
    return (first if first >= 1 else step), step


def _max_matching(adjacency: list[list[int]], n_right: int) -> int:
    """Maximum bipartite matching via BFS augmentation (iterative)."""
    from collections import deque

    match_left = [-1] * len(adjacency)
    match_right = [-1] * n_right
    matched = 0
    for source in range(len(adjacency)):
        parent: dict[int, int] = {}
        visited_left = {source}
        queue = deque([source])
        found = False
        while queue and not found:
            u = queue.popleft()
            for r in adjacency[u]:
                if r in parent:
                    continue
                parent[r] = u
                w = match_right[r]
                if w == -1:
                    # Augment: walk predecessors back to the source.
                    while r is not None:
                        u2 = parent[r]
                        prev = match_left[u2]
                        match_left[u2] = r
                        match_right[r] = u2
                        r = prev if prev != -1 else None
                    matched += 1
                    found = True
                    break
                if w not in visited_left:
                    visited_left.add(w)
                    queue.append(w)
    return matched


def matching_feasibility(
    budget: OrbitBudget,
    horizon: int,
    n: Optional[int] = None,
    k0: Optional[Rat] = None,
    model=None,
) -> MatchingVerdict:
    """Can the budget's class-matched iterates cover every carrier degree?

    Carriers are k0 + 2k for 0 <= k <= horizon.  A candidate iterate
    (orbit, N) in the target class sits near degree N*mean_index and may
    serve a carrier within the combined window 3n (index window 2n plus
    mean-index deviation n).  INFEASIBLE certifies the budget cannot be
    complete at this horizon; the verdict is monotone, staying
    INFEASIBLE at every larger horizon.

    k0 and n are taken from `model` (a ToricModel for the budget's
    space) when not supplied directly.
    """
    if horizon < 1:
        raise InputError(f"horizon must be >= 1, got {horizon}")
    if not budget.orbits:
        raise EmptyBudget("matching needs at least one orbit")
    if model is not None:
        from .toric import k0_threshold

        if n is None:
            n = model.space.n
        if k0 is None:
            k0 = k0_threshold(model, budget.target)
    if n is None or k0 is None:
        raise InputError(
            "matching needs the dimension n and threshold k0, "
            "directly or through a toric model"
        )
    if n < 1:
        raise InputError(f"dimension parameter must be >= 1, got {n}")
    k0 = Fraction(k0)
    window = 3 * n
    carriers = horizon + 1
    top = k0 + 2 * horizon + window

    candidates = []  # parallel lists: candidate values in enumeration order
    adjacency: list[list[int]] = [[] for _ in range(carriers)]
    for orb in budget.orbits:
        sol = _class_iterates(budget.p, orb.klass, budget.target)
        if sol is None:
            continue
        first, step = sol
        lo = _rat_ceil((k0 - window) / orb.mean_index)
        if lo > first:
            # Shift first to the smallest class-matched iterate >= lo.
            first += step * ((lo - first + step - 1) // step)
        hi = rat_floor(top / orb.mean_index)
        for N in range(first, hi + 1, step):
            value = N * orb.mean_index
            k_lo = max(0, _rat_ceil((value - k0 - window) / 2))
            k_hi = min(horizon, rat_floor((value - k0 + window) / 2))
            if k_lo > k_hi:
                continue
            idx = len(candidates)
            candidates.append((orb.label, N, value))
            for k in range(k_lo, k_hi + 1):
                adjacency[k].append(idx)

    matched = _max_matching(adjacency, len(candidates))
    return MatchingVerdict(
        verdict=FEASIBLE if matched == carriers else INFEASIBLE,
        carriers=carriers,
        candidates=len(candidates),
        matched=matched,
        k0=k0,
        window=window,
        horizon=horizon,
    )


__all__ = [
    "CONSISTENT",
    "CONTRADICTION",
    "INCONCLUSIVE",
    "FEASIBLE",
    "INFEASIBLE",
    "BudgetOrbit",
    "OrbitBudget",
    "CarrierSequence",
    "DensityEstimate",
    "InequalityVerdict",
    "SingleOrbitVerdict",
    "MatchingVerdict",
    "orbit_budget",
    "carrier_density",
    "carrier_density_estimate",
    "orbit_density",
    "check_final_inequality",
    "single_orbit_contradiction",
    "iterate_mean_relation",
    "matching_feasibility",
]
