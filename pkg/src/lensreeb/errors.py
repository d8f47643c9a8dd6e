"""Exception types shared by all modules.

Two families:

* ``InputError`` and its subclasses flag invalid user data (bad weights,
  malformed budgets, degenerate evaluation points).  The command-line
  driver maps these to exit code 1.
* ``IdentityViolation`` / ``BezoutFailure`` flag a broken exact identity.
  Under correct construction they are unreachable, so raising one means
  either corrupted input made it past validation or an implementation
  bug.  The driver maps these to exit code 2.
"""


class LensreebError(Exception):
    """Base class for every domain error raised by this package."""


class InputError(LensreebError):
    """Invalid input data."""


class TooFewWeights(InputError):
    """A weight tuple needs at least two entries."""


class NonCoprimeWeight(InputError):
    """A weight shares a factor with the group order p."""

    def __init__(self, index: int, weight: int, p: int):
        self.index = index
        self.weight = weight
        self.p = p
        super().__init__(
            f"weight {weight} at position {index} is not coprime with p={p}"
        )


class NotNormalized(InputError):
    """An operation requires weights already in normalized form."""


class BothZero(InputError):
    """gcd(0, 0) is undefined for the extended Euclid routine."""


class NotCoprime(InputError):
    """Modular inverse requested for a non-unit residue."""

    def __init__(self, x: int, modulus: int):
        self.x = x
        self.modulus = modulus
        super().__init__(f"{x} has no inverse modulo {modulus}")


class NonSquare(InputError):
    """Determinant requested for a non-square matrix."""


class ResonantAxes(InputError):
    """An ellipsoid index evaluation hit a rationally dependent pair of axes.

    The closed-form rotation-number count is only valid when no iterate
    closes up on two axes simultaneously, so the evaluation is refused
    rather than silently miscounted.
    """

    def __init__(self, i: int, j: int, iterate: int):
        self.i = i
        self.j = j
        self.iterate = iterate
        super().__init__(
            f"axes {i} and {j} are resonant at iterate {iterate}: "
            "the index formula requires a nondegenerate iterate"
        )


class NonpositiveMeanIndex(InputError):
    """Density arguments require every mean index to be positive."""


class EmptyBudget(InputError):
    """An orbit budget must contain at least one orbit in the target class."""


class IdentityViolation(LensreebError):
    """An exact algebraic identity failed.

    Carries both sides so the counterexample is reportable.
    """

    def __init__(self, message: str, lhs=None, rhs=None):
        self.lhs = lhs
        self.rhs = rhs
        if lhs is not None or rhs is not None:
            message = f"{message} (lhs={lhs!r}, rhs={rhs!r})"
        super().__init__(message)


class BezoutFailure(LensreebError):
    """A constructed Bezout pair failed its defining unit-determinant relation.

    Unreachable unless model construction is broken.
    """
