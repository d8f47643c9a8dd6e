"""Toric model of a lens space and the Conley-Zehnder spectrum it carries.

For a normalized space L_p(l_0, ..., l_{n-1}, 1) the quotient embeds as
the link of an affine toric singularity.  The model is cut out by n+1
integer normal vectors in Z^{n+1}, built from four derived integers:

    c1 = l_0 + ... + l_n          (first Chern residue before reduction)
    m  = p / gcd(p, c1)           (torsion order of the model lattice)
    k  = least nonnegative unit solution of  k*c1 = p/m  (mod p)
    q  = k*(l_1 + ... + l_n) - p/m

with normals (written as columns of the model matrix)

    nu_0 = (0, ..., 0, k, m)
    nu_j = (e_j, 0, m)            for j = 1, ..., n-1
    nu_n = (-l_1, ..., -l_{n-1}, q, m).

"Unit solution" means gcd(k, p) = 1; the congruence alone pins k only
modulo m, and representatives sharing a factor with p break the order-p
kernel identity below, so the least coprime representative is chosen
(k = 0 stays for the m = 1 case, where the congruence is trivial).

A Bezout pair (c, d) with k*d - m*c = 1 closes the lattice bookkeeping:
eta = (0, ..., 0, c, d) completes the normals to a basis through

    nu_n = a0*nu_0 - sum_j l_j*nu_j + p*eta,
    a0   = (l_1 + ... + l_n) - d*(p/m).

The canonical pair takes d minimal nonnegative; any other valid pair
(c + t*k, d + t*m) shifts a0 by -t*p and leaves every index value below
unchanged.

The Conley-Zehnder index of the N-th iterate of the Reeb fiber is the
closed form

    mu(N) = 2*( floor(N*a0/p) + sum_{j=1}^{n-1} floor(-N*l_j/p) + N*d/m ) + n,

a rational number on the 2/m grid satisfying mu(N + p) = mu(N) + 2 and
growing with mean slope mean_index() = 2/p after normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import det_int, mod_inverse
from .chen_ruan import GradedTable
from .errors import (
    BezoutFailure,
    IdentityViolation,
    InputError,
    NotNormalized,
)
from .lens import LensSpace, is_normalized


@dataclass(frozen=True)
class ToricModel:
    """Normal-vector presentation of a normalized lens space."""

    space: LensSpace
    m: int
    k: int
    q: int
    c: int
    d: int
    a0: int
    normals: tuple[tuple[int, ...], ...]
    eta: tuple[int, ...]


@dataclass(frozen=True)
class KernelVerdict:
    """Outcome of the kernel-generator check.

    status is "generator" when the distinguished rational vector has
    order exactly p in the quotient lattice, or "degenerate" for the
    k = 0 (Gorenstein) models where the vector collapses.
    """

    vector: tuple[Fraction, ...]
    order: int
    status: str


@dataclass(frozen=True)
class CzSpectrum:
    """Index table of fiber iterates in a fixed homotopy class."""

    klass: int
    rows: tuple[tuple[int, Fraction], ...]


def _scaled(vec: tuple[int, ...], s: int) -> tuple[int, ...]:
    return tuple(s * x for x in vec)


def _added(*vecs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(col) for col in zip(*vecs))


def _build_normals(space: LensSpace, k: int, q: int, m: int):
    n = space.n
    w = space.reduced
    zeros = (0,) * (n - 1)
    normals = [zeros + (k, m)]
    for j in range(1, n):
        e_j = tuple(1 if i == j - 1 else 0 for i in range(n - 1))
        normals.append(e_j + (0, m))
    normals.append(tuple(-w[j] for j in range(1, n)) + (q, m))
    return tuple(normals)


def model_matrix(model: ToricModel) -> list[list[int]]:
    """Square integer matrix whose columns are the normals."""
    size = model.space.n + 1
    return [[model.normals[j][i] for j in range(size)] for i in range(size)]


def _minimal_unit_k(p: int, c1: int, m: int) -> int:
    if m == 1:
        return 0
    g = p // m
    # k*c1 = g (mod p) reduces to k = (c1/g)^{-1} (mod m); among the g
    # representatives below p, the least one coprime to p always exists.
    base = mod_inverse((c1 // g) % m, m)
    for k in range(base, p, m):
        if gcd(k, p) == 1:
            return k
    raise IdentityViolation(
        f"no unit solution of k*{c1} = {g} (mod {p}); construction is broken"
    )


def build_toric_model(space: LensSpace) -> ToricModel:
    """Derive the model data for a normalized space and assert its identities."""
    if not is_normalized(space):
        raise NotNormalized(
            f"toric model needs normalized weights, got {space.weights}"
        )
    p = space.p
    w = space.reduced
    c1 = sum(w)
    m = p // gcd(p, c1)
    g = p // m
    k = _minimal_unit_k(p, c1, m)
    tail = sum(w[1:])
    q = k * tail - g
    if m == 1:
        c, d = -1, 0
    else:
        d = mod_inverse(k % m, m)
        c = (k * d - 1) // m
    a0 = tail - d * g
    normals = _build_normals(space, k, q, m)
    eta = (0,) * (space.n - 1) + (c, d)
    model = ToricModel(
        space=space, m=m, k=k, q=q, c=c, d=d, a0=a0, normals=normals, eta=eta
    )
    if k * d - m * c != 1:
        raise BezoutFailure(f"k*d - m*c = {k * d - m * c} != 1 for {model}")
    verify_basis_identity(model)
    verify_determinant(model)
    return model


def verify_determinant(model: ToricModel) -> int:
    """Exact determinant of the model matrix; must be +-p."""
    det = det_int(model_matrix(model))
    if abs(det) != model.space.p:
        raise IdentityViolation(
            "model determinant must equal the group order up to sign",
            lhs=det,
            rhs=model.space.p,
        )
    return det


def verify_basis_identity(model: ToricModel) -> None:
    """Check nu_n = a0*nu_0 - sum_j l_j*nu_j + p*eta exactly."""
    w = model.space.reduced
    parts = [_scaled(model.normals[0], model.a0)]
    for j in range(1, model.space.n):
        parts.append(_scaled(model.normals[j], -w[j]))
    parts.append(_scaled(model.eta, model.space.p))
    combined = _added(*parts)
    if combined != model.normals[-1]:
        raise IdentityViolation(
            "basis identity failed", lhs=combined, rhs=model.normals[-1]
        )


def verify_kernel_generator(model: ToricModel) -> KernelVerdict:
    """Check the distinguished rational vector maps integrally and has order p.

    The vector is v = (-q, k*l_1, ..., k*l_{n-1}, k) / p.  The model
    matrix must send it into the integer lattice, and its order in
    (Z^{n+1} + Zv)/Z^{n+1} must be p, except for k = 0 models where the
    vector degenerates and the verdict records that instead.
    """
    p = model.space.p
    w = model.space.reduced
    nums = [-model.q] + [model.k * w[j] for j in range(1, model.space.n)] + [model.k]
    vector = tuple(Fraction(x, p) for x in nums)
    matrix = model_matrix(model)
    for i, row in enumerate(matrix):
        image = sum(Fraction(row[j]) * vector[j] for j in range(len(vector)))
        if image.denominator != 1:
            raise IdentityViolation(
                f"model matrix row {i} sends the kernel vector outside the lattice",
                lhs=image,
                rhs=None,
            )
    order = p // gcd(p, *[x % p for x in nums]) if p > 1 else 1
    if order == p:
        status = "generator"
    elif model.k == 0:
        status = "degenerate"
    else:
        raise IdentityViolation(
            "kernel vector order must be the group order", lhs=order, rhs=p
        )
    return KernelVerdict(vector=vector, order=order, status=status)


def cz_index(model: ToricModel, iterate: int) -> Fraction:
    """Conley-Zehnder index of the `iterate`-th power of the Reeb fiber."""
    if iterate < 1:
        raise InputError(f"iterate must be >= 1, got {iterate}")
    p = model.space.p
    w = model.space.reduced
    n = model.space.n
    floors = (iterate * model.a0) // p
    for j in range(1, n):
        floors += (-iterate * w[j]) // p
    return Fraction(
        2 * floors * model.m + 2 * iterate * model.d + n * model.m, model.m
    )


def mean_index(model: ToricModel) -> Fraction:
    """Mean growth rate of cz_index per iterate; equals 2/p for every model."""
    p = model.space.p
    w = model.space.reduced
    return 2 * (
        Fraction(model.a0, p)
        - Fraction(sum(w[1 : model.space.n]), p)
        + Fraction(model.d, model.m)
    )


def verify_periodicity(model: ToricModel, n_max: int) -> int:
    """Check mu(N + p) = mu(N) + 2 for all N <= n_max - p; returns checks done."""
    p = model.space.p
    if n_max < p + 1:
        raise InputError(f"need n_max >= p + 1 = {p + 1}, got {n_max}")
    checked = 0
    for start in range(1, n_max - p + 1):
        lhs = cz_index(model, start + p)
        rhs = cz_index(model, start) + 2
        if lhs != rhs:
            raise IdentityViolation(
                f"index periodicity failed at iterate {start}", lhs=lhs, rhs=rhs
            )
        checked += 1
    return checked


def cz_spectrum(model: ToricModel, klass: int, max_iter: int) -> CzSpectrum:
    """Indices of all iterates N <= max_iter lying in homotopy class `klass`.

    Classes label iterates modulo p in normalized coordinates, so the
    rows are N = klass, klass + p, ... (N = p, 2p, ... for class 0).
    """
    p = model.space.p
    if not 0 <= klass < p:
        raise InputError(f"class must satisfy 0 <= a < p={p}, got {klass}")
    if max_iter < 1:
        raise InputError(f"max_iter must be >= 1, got {max_iter}")
    first = klass if klass >= 1 else p
    rows = tuple(
        (N, cz_index(model, N)) for N in range(first, max_iter + 1, p)
    )
    return CzSpectrum(klass=klass, rows=rows)


def class_min_index(model: ToricModel, klass: int) -> tuple[int, Fraction]:
    """Least index over the class, as (iterate, index).

    The recurrence mu(N + p) = mu(N) + 2 makes the first representative
    minimal, so only the first two are compared.
    """
    p = model.space.p
    if not 0 <= klass < p:
        raise InputError(f"class must satisfy 0 <= a < p={p}, got {klass}")
    first = klass if klass >= 1 else p
    index, iterate = min(
        (cz_index(model, N), N) for N in (first, first + p)
    )
    return iterate, index


def hc_table(model: ToricModel, klass: int, cap) -> tuple[GradedTable, Fraction]:
    """Degree table of the class: the progression k_a, k_a + 2, ... up to `cap`.

    Returns (table, k_a) where k_a = class_min_index.  Dimensions are all 1.
    """
    cap = Fraction(cap)
    _, k_a = class_min_index(model, klass)
    entries = {}
    degree = k_a
    while degree <= cap:
        entries[(klass, degree)] = 1
        degree += 2
    return GradedTable(entries=entries), k_a


def k0_threshold(model: ToricModel, klass: int) -> Fraction:
    """First degree of the class progression that is >= 2n + 1.

    Above this threshold the degree table climbs in lockstep with the
    carrier degrees used by the counting certificates.
    """
    _, k_a = class_min_index(model, klass)
    bound = 2 * model.space.n + 1
    if k_a >= bound:
        return k_a
    steps = math.ceil(Fraction(bound - k_a, 2))
    return k_a + 2 * steps


def bezout_pairs(model: ToricModel, count: int = 5) -> list[tuple[int, int]]:
    """The canonical Bezout pair followed by its neighbors (c + t*k, d + t*m)."""
    if count < 1:
        raise InputError(f"count must be >= 1, got {count}")
    pairs = [(model.c, model.d)]
    t = 1
    while len(pairs) < count:
        pairs.append((model.c + t * model.k, model.d + t * model.m))
        if len(pairs) < count:
            pairs.append((model.c - t * model.k, model.d - t * model.m))
        t += 1
    return pairs


def with_bezout_pair(model: ToricModel, c: int, d: int) -> ToricModel:
    """Rebuild the model on another valid Bezout pair.

    a0 shifts by a multiple of p and every cz_index value is unchanged;
    an invalid pair is rejected.
    """
    if model.k * d - model.m * c != 1:
        raise InputError(
            f"(c, d) = ({c}, {d}) is not a Bezout pair for "
            f"(k, m) = ({model.k}, {model.m})"
        )
    g = model.space.p // model.m
    tail = sum(model.space.reduced[1:])
    a0 = tail - d * g
    eta = (0,) * (model.space.n - 1) + (c, d)
    rebuilt = ToricModel(
        space=model.space,
        m=model.m,
        k=model.k,
        q=model.q,
        c=c,
        d=d,
        a0=a0,
        normals=model.normals,
        eta=eta,
    )
    verify_basis_identity(rebuilt)
    return rebuilt


__all__ = [
    "ToricModel",
    "KernelVerdict",
    "CzSpectrum",
    "build_toric_model",
    "model_matrix",
    "verify_determinant",
    "verify_basis_identity",
    "verify_kernel_generator",
    "cz_index",
    "mean_index",
    "verify_periodicity",
    "cz_spectrum",
    "class_min_index",
    "hc_table",
    "k0_threshold",
    "bezout_pairs",
    "with_bezout_pair",
]
