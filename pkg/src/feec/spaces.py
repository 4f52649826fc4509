"""The polynomial form spaces on a face: dimensions, spanning sets, bases.

The two families are the full space of polynomial k-forms of degree at most
r and the reduced ("trimmed") space spanned by monomial multiples of Whitney
forms; each comes in a whole-space and a zero-boundary-trace flavor.  The
spanning sets and the basis side conditions below pick out the standard
barycentric generators; all independence and membership questions are
settled by exact rational elimination over canonical coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .combinat import IncreasingMap, MultiIndex, binom, multiindices
from . import linalg
from .forms import FaceRef, PolyForm, bary_monomial, dlambda, whitney


class Family(str, Enum):
    FULL = "full"
    MINUS = "minus"


@dataclass(frozen=True)
class SpaceKind:
    """One of the four space flavors: family crossed with boundary condition."""

    family: Family
    zero_trace: bool = False


FULL = SpaceKind(Family.FULL)
MINUS = SpaceKind(Family.MINUS)
FULL_ZERO = SpaceKind(Family.FULL, zero_trace=True)
MINUS_ZERO = SpaceKind(Family.MINUS, zero_trace=True)


@dataclass(frozen=True)
class GeneratorDescriptor:
    """A basis/spanning generator lambda^alpha d lambda_sigma or lambda^alpha phi_sigma.

    Indices are global with respect to the parent simplex of `face`; the
    realized form lives in the face's own coordinates.
    """

    alpha: MultiIndex
    sigma: IncreasingMap
    family: Family
    face: FaceRef


def dim_space(kind: SpaceKind, n: int, r: int, k: int) -> int:
    """Dimension of the space on an n-simplex; out-of-range degrees give 0."""
    if k < 0 or k > n or n < 0:
        return 0
    if kind.family is Family.FULL and not kind.zero_trace:
        return binom(r + n, n) * binom(n, k) if r >= 0 else 0
    if kind.family is Family.MINUS and not kind.zero_trace:
        return binom(r + k - 1, k) * binom(n + r, n - k) if r >= 1 else 0
    if kind.family is Family.FULL:
        if r < 0:
            return 0
        if r == 0:
            # constants: only the volume form has (vacuously) vanishing trace
            return 1 if k == n else 0
        return binom(r - 1, n - k) * binom(r + k, r)
    return binom(n, k) * binom(r + k - 1, n) if r >= 1 else 0


def _sigma_descriptors(kind: SpaceKind, face: FaceRef, k: int) -> list[tuple[int, ...]]:
    arity = k + 1 if kind.family is Family.MINUS else k
    if arity == 0:
        return [()]
    if arity > face.dim + 1:
        return []
    from itertools import combinations

    return list(combinations(face.indices, arity))


def enumerate_spanning(kind: SpaceKind, face: FaceRef, r: int, k: int) -> list[GeneratorDescriptor]:
    """The spanning generators of the space on the given face."""
    return _enumerate(kind, face, r, k, basis_only=False)


def enumerate_basis(kind: SpaceKind, face: FaceRef, r: int, k: int) -> list[GeneratorDescriptor]:
    """The subset of spanning generators satisfying the basis side condition."""
    return _enumerate(kind, face, r, k, basis_only=True)


def _enumerate(
    kind: SpaceKind, face: FaceRef, r: int, k: int, basis_only: bool
) -> list[GeneratorDescriptor]:
    n = face.n
    if k < 0 or k > face.dim:
        return []
    mono_deg = r - 1 if kind.family is Family.MINUS else r
    if mono_deg < 0:
        return []
    domain_lo = 0 if kind.family is Family.MINUS else 1
    iface = set(face.indices)
    out: list[GeneratorDescriptor] = []
    for sigma in _sigma_descriptors(kind, face, k):
        sig_support = set(sigma)
        for local_alpha in multiindices(face.dim, mono_deg):
            alpha = [0] * (n + 1)
            for p, e in zip(face.indices, local_alpha):
                alpha[p] = e
            support = {i for i, e in enumerate(alpha) if e} | sig_support
            if kind.zero_trace:
                if support != iface:
                    continue
            elif not support <= iface:
                continue
            if basis_only and not _basis_condition(kind, face, tuple(alpha), sigma):
                continue
            out.append(
                GeneratorDescriptor(
                    MultiIndex(tuple(alpha)),
                    IncreasingMap(domain_lo, 0, n, sigma),
                    kind.family,
                    face,
                )
            )
    return out


def _basis_condition(
    kind: SpaceKind, face: FaceRef, alpha: tuple[int, ...], sigma: tuple[int, ...]
) -> bool:
    if kind.family is Family.MINUS:
        # no exponent below the first vertex of sigma
        lim = sigma[0]
        return all(alpha[i] == 0 for i in range(lim))
    if not kind.zero_trace:
        # sigma must avoid the first vertex of the face
        return not sigma or sigma[0] > face.indices[0]
    free = [i for i in face.indices if i not in set(sigma)]
    lim = min(free)
    return all(alpha[i] == 0 for i in range(lim))


def realize(g: GeneratorDescriptor) -> PolyForm:
    """The generator as a canonical form in its face's own coordinates."""
    face = g.face
    m = face.dim
    local_alpha = tuple(g.alpha.entries[i] for i in face.indices)
    local_sigma = tuple(face.position(s) for s in g.sigma.values)
    mono = bary_monomial(m, local_alpha)
    if g.family is Family.MINUS:
        return mono.wedge(whitney(m, local_sigma))
    if not local_sigma:
        return mono
    return mono.wedge(dlambda(m, local_sigma))


def basis_forms(kind: SpaceKind, face: FaceRef, r: int, k: int) -> list[PolyForm]:
    """Realized basis of the space, in enumeration order."""
    return [realize(g) for g in enumerate_basis(kind, face, r, k)]


def coefficient_vectors(forms: list[PolyForm]) -> list[list[Fraction]]:
    """Coefficient rows of the given forms over the union of canonical keys.

    All forms are first homogenized to one common degree so that the rows
    are comparable entry by entry.
    """
    if not forms:
        return []
    shapes = {(w.n, w.k) for w in forms if not w.is_zero}
    if len(shapes) > 1:
        raise ValueError(f"forms of mixed shape: {shapes}")
    r = max(w.r for w in forms)
    lifted = [w.lift(r) for w in forms]
    keys = sorted(set().union(*(w.coeffs.keys() for w in lifted)))
    zero = Fraction(0)
    return [[w.coeffs.get(key, zero) for key in keys] for w in lifted]


def rank_of(forms: list[PolyForm]) -> int:
    """Rank of a list of forms as vectors of canonical coefficients."""
    rows = coefficient_vectors([w for w in forms if not w.is_zero])
    return linalg.rank(rows)


def membership(
    w: PolyForm, kind: SpaceKind, face: FaceRef, r: int, k: int
) -> list[Fraction] | None:
    """Coordinates of w in the basis of the space, or None when outside it.

    The form must be expressed in the face's own coordinates.
    """
    if w.n != face.dim:
        raise ValueError(f"form lives on dimension {w.n}, face has dimension {face.dim}")
    if not w.is_zero and w.k != k:
        raise ValueError(f"form order {w.k} does not match k={k}")
    basis = basis_forms(kind, face, r, k)
    if not basis:
        return [] if w.is_zero else None
    vectors = coefficient_vectors(basis + [w])
    return linalg.solve_columns(vectors[:-1], vectors[-1])
