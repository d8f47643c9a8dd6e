"""Lens-space data model.

A lens space L_p(l_0, ..., l_n) is the quotient of the unit sphere
S^{2n+1} in C^{n+1} by the Z_p action

    zeta . (z_0, ..., z_n) = (zeta^{l_0} z_0, ..., zeta^{l_n} z_n),

where zeta runs over p-th roots of unity and every weight l_i is coprime
to p so the action is free.  p = 1 is allowed and gives back the sphere.

Free homotopy classes of loops downstairs form Z_p.  Classes are labeled
in *normalized* coordinates: weights are rescaled by the unit c = l_n^{-1}
(mod p) so the last weight becomes 1, and the common Reeb fiber direction
then represents class 1.  Rescaling weights by a unit relabels classes by
that same unit; `normalize` reports the factor so callers can translate.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .arith import mod_inverse
from .errors import InputError, NonCoprimeWeight, TooFewWeights


@dataclass(frozen=True)
class LensSpace:
    """Validated quotient data.

    `weights` are kept as given; `reduced` holds the residues used by all
    arithmetic, each in {1, ..., p-1} (all 1 when p == 1).
    """

    p: int
    weights: tuple[int, ...]
    reduced: tuple[int, ...]

    @property
    def n(self) -> int:
        """Complex dimension parameter: the sphere is S^{2n+1}."""
        return len(self.weights) - 1

    def to_json(self) -> dict:
        return {"p": self.p, "weights": list(self.weights), "n": self.n}


def validate(p: int, weights: Sequence[int]) -> LensSpace:
    """Check the quotient data and build a `LensSpace`.

    Raises `TooFewWeights` for fewer than two weights and
    `NonCoprimeWeight` for any weight sharing a factor with p.
    """
    if p < 1:
        raise InputError(f"group order must be >= 1, got {p}")
    weights = tuple(int(w) for w in weights)
    if len(weights) < 2:
        raise TooFewWeights(
            f"need at least two weights (a 3-sphere), got {len(weights)}"
        )
    if p == 1:
        reduced = (1,) * len(weights)
    else:
        for i, w in enumerate(weights):
            if gcd(w, p) != 1:
                raise NonCoprimeWeight(i, w, p)
        reduced = tuple(w % p for w in weights)
    return LensSpace(p=p, weights=weights, reduced=reduced)


def is_normalized(space: LensSpace) -> bool:
    """True when the stored weights are the canonical representatives with l_n = 1."""
    return space.weights == space.reduced and space.reduced[-1] == 1


def normalize(space: LensSpace) -> tuple[LensSpace, int]:
    """Rescale weights by the unit c = l_n^{-1} (mod p) so the last weight is 1.

    Returns (normalized space, c).  Homotopy-class labels transform by the
    same unit: class a of the input space is class c*a (mod p)
    of the output.  Idempotent: a normalized space returns c = 1.
    """
    if space.p == 1:
        return validate(1, (1,) * len(space.weights)), 1
    c = mod_inverse(space.reduced[-1], space.p)
    rescaled = tuple((c * w) % space.p for w in space.reduced)
    return validate(space.p, rescaled), c


def first_chern_mod_p(space: LensSpace) -> int:
    """Sum of the weights modulo p.

    This residue controls how far the quotient is from being Gorenstein
    and, downstream, the torsion order m of the toric model.
    """
    return sum(space.reduced) % space.p


def generator_classes(space: LensSpace) -> list[int]:
    """Residues generating Z_p, ascending.  For p = 1 the single class [0]."""
    return [a for a in range(space.p) if gcd(a, space.p) == 1]


__all__ = [
    "LensSpace",
    "validate",
    "is_normalized",
    "normalize",
    "first_chern_mod_p",
    "generator_classes",
]
