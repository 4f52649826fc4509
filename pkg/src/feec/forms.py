"""Polynomial differential forms in barycentric coordinates, exactly.

A form of order k on an n-dimensional face is stored in a canonical shape:
every monomial coefficient is homogenized to one common degree r using the
partition of unity lambda_0 + ... + lambda_n = 1, and the differential
d lambda_0 is eliminated through d lambda_0 = -(d lambda_1 + ... +
d lambda_n).  The surviving generators lambda^alpha d lambda_sigma with
|alpha| = r and sigma a strictly increasing sequence in {1..n} are linearly
independent, so two forms are equal exactly when their stored coefficient
dictionaries agree (after homogenizing to a common degree).

All coefficients are `fractions.Fraction`; nothing here ever touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Iterable, Iterator

from .combinat import multiindices

Scalar = Fraction

# A raw term: (exponent tuple over 0..n, differential index sequence, coefficient).
RawTerm = tuple[tuple[int, ...], tuple[int, ...], "Scalar | int"]
Key = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class FaceRef:
    """A subsimplex of the reference n-simplex, named by its vertex indices."""

    n: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = self.indices
        if not idx:
            raise ValueError("a face needs at least one vertex")
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise ValueError(f"face indices must be sorted and distinct: {idx}")
        if idx[0] < 0 or idx[-1] > self.n:
            raise ValueError(f"face indices {idx} not within 0..{self.n}")

    @classmethod
    def full(cls, n: int) -> FaceRef:
        """The whole reference n-simplex as a face of itself."""
        return cls(n, tuple(range(n + 1)))

    @property
    def dim(self) -> int:
        return len(self.indices) - 1

    @property
    def complement_indices(self) -> tuple[int, ...]:
        """Vertex indices of the opposite face."""
        mine = set(self.indices)
        return tuple(i for i in range(self.n + 1) if i not in mine)

    def contains(self, other: FaceRef) -> bool:
        return self.n == other.n and set(other.indices) <= set(self.indices)

    def position(self, i: int) -> int:
        """Local index of global vertex i within this face."""
        return self.indices.index(i)

    def to_local(self, sub: FaceRef) -> FaceRef:
        """Re-express a subface of this face with this face as the parent."""
        if not self.contains(sub):
            raise ValueError(f"{sub} is not a subface of {self}")
        return FaceRef(self.dim, tuple(self.position(i) for i in sub.indices))

    def subfaces(self, j: int) -> list[FaceRef]:
        """All j-dimensional subfaces, in lexicographic vertex order."""
        return [FaceRef(self.n, c) for c in combinations(self.indices, j + 1)]

    def all_subfaces(self) -> list[FaceRef]:
        """All subfaces including this face, by increasing dimension."""
        return [f for j in range(self.dim + 1) for f in self.subfaces(j)]

    def intersect(self, other: FaceRef) -> FaceRef | None:
        """Common subface, or None when the vertex sets are disjoint."""
        common = tuple(i for i in self.indices if i in set(other.indices))
        return FaceRef(self.n, common) if common else None


def _sort_sign(seq: Iterable[int]) -> tuple[tuple[int, ...], int] | None:
    """Sort a differential index sequence, tracking the permutation sign.

    Returns None when an index repeats (the wedge vanishes).
    """
    vals = list(seq)
    sign = 1
    for i in range(1, len(vals)):
        j = i
        while j > 0 and vals[j - 1] > vals[j]:
            vals[j - 1], vals[j] = vals[j], vals[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and vals[j - 1] == vals[j]:
            return None
    return tuple(vals), sign


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], int] | None:
    """Merge two increasing index sequences; None when they intersect."""
    out: list[int] = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining entries of a
            if (len(a) - i) % 2:
                sign = -sign
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), sign


def canonicalize(n: int, k: int, terms: Iterable[RawTerm], degree: int | None = None) -> PolyForm:
    """Build the canonical form of a raw sum of lambda^alpha d lambda_sigma terms.

    Accepts differential sequences in any order and containing the index 0,
    and monomials of any degree at most `degree`; homogenizes and eliminates
    d lambda_0.  `degree` defaults to the largest monomial degree present.
    """
    flat: list[tuple[tuple[int, ...], tuple[int, ...], Scalar]] = []
    max_deg = 0
    for alpha, sigma, c in terms:
        c = Fraction(c)
        if not c:
            continue
        if len(alpha) != n + 1 or any(e < 0 for e in alpha):
            raise ValueError(f"bad exponent tuple {alpha} for n={n}")
        if len(sigma) != k:
            raise ValueError(f"expected {k} differential indices, got {sigma}")
        if sigma and (min(sigma) < 0 or max(sigma) > n):
            raise ValueError(f"differential indices {sigma} not within 0..{n}")
        sorted_sig = _sort_sign(sigma)
        if sorted_sig is None:
            continue
        sig, sign = sorted_sig
        c *= sign
        max_deg = max(max_deg, sum(alpha))
        if sig and sig[0] == 0:
            rest = sig[1:]
            used = set(rest)
            for i in range(1, n + 1):
                if i in used:
                    continue
                merged = _merge_sign((i,), rest)
                assert merged is not None
                new_sig, s = merged
                flat.append((alpha, new_sig, -c * s))
        else:
            flat.append((alpha, sig, c))
    if degree is None:
        degree = max_deg
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    coeffs: dict[Key, Scalar] = {}
    for alpha, sig, c in flat:
        deficit = degree - sum(alpha)
        if deficit < 0:
            raise ValueError(f"monomial degree {sum(alpha)} exceeds target {degree}")
        if deficit == 0:
            key = (alpha, sig)
            coeffs[key] = coeffs.get(key, Fraction(0)) + c
            continue
        for beta in multiindices(n, deficit):
            w = 1
            rem = deficit
            for e in beta:
                w *= comb(rem, e)
                rem -= e
            key = (tuple(a + b for a, b in zip(alpha, beta)), sig)
            coeffs[key] = coeffs.get(key, Fraction(0)) + c * w
    coeffs = {key: v for key, v in coeffs.items() if v}
    return PolyForm(n, k, degree, coeffs)


class PolyForm:
    """A polynomial differential k-form on the reference n-simplex.

    Instances are immutable by convention; every operation returns a new
    form.  Construct forms through :func:`canonicalize` or the helper
    constructors below rather than passing coefficient dictionaries.
    """

    __slots__ = ("n", "k", "r", "coeffs")

    def __init__(self, n: int, k: int, r: int, coeffs: dict[Key, Scalar]):
        if n < 0 or k < 0 or r < 0:
            raise ValueError(f"bad shape n={n} k={k} r={r}")
        if coeffs and k > n:
            raise ValueError(f"nonzero {k}-form on a {n}-dimensional face")
        if not coeffs:
            r = 0
        self.n = n
        self.k = k
        self.r = r
        self.coeffs = coeffs

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, n: int, k: int) -> PolyForm:
        return cls(n, k, 0, {})

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], Scalar]]:
        """Canonical terms in a fixed deterministic order."""
        for alpha, sigma in sorted(self.coeffs):
            yield alpha, sigma, self.coeffs[(alpha, sigma)]

    def lift(self, degree: int) -> PolyForm:
        """The same form re-homogenized at a (higher) storage degree."""
        if self.is_zero:
            return PolyForm(self.n, self.k, 0, {})
        if degree == self.r:
            return self
        if degree < self.r:
            raise ValueError(f"cannot lower storage degree {self.r} to {degree}")
        raw = [(a, s, c) for (a, s), c in self.coeffs.items()]
        return canonicalize(self.n, self.k, raw, degree)

    # -- ring structure ------------------------------------------------------

    def __add__(self, other: PolyForm) -> PolyForm:
        if not isinstance(other, PolyForm):
            return NotImplemented
        if self.n != other.n or (self.k != other.k and not (self.is_zero or other.is_zero)):
            raise ValueError("cannot add forms of different shape")
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        r = max(self.r, other.r)
        a, b = self.lift(r), other.lift(r)
        coeffs = dict(a.coeffs)
        for key, c in b.coeffs.items():
            v = coeffs.get(key, Fraction(0)) + c
            if v:
                coeffs[key] = v
            else:
                coeffs.pop(key, None)
        return PolyForm(self.n, self.k, r, coeffs)

    def __neg__(self) -> PolyForm:
        return PolyForm(self.n, self.k, self.r, {key: -c for key, c in self.coeffs.items()})

    def __sub__(self, other: PolyForm) -> PolyForm:
        return self + (-other)

    def __mul__(self, scalar: Scalar | int) -> PolyForm:
        c = Fraction(scalar)
        if not c:
            return PolyForm.zero(self.n, self.k)
        return PolyForm(self.n, self.k, self.r, {key: v * c for key, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyForm):
            return NotImplemented
        if self.n != other.n:
            return False
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        if self.k != other.k:
            return False
        r = max(self.r, other.r)
        return self.lift(r).coeffs == other.lift(r).coeffs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        from .render import format_form

        body = format_form(self)
        return f"<{self.k}-form deg {self.r} on dim {self.n}: {body}>"

    # -- exterior calculus ---------------------------------------------------

    def wedge(self, other: PolyForm) -> PolyForm:
        """Exterior product.  Raises when the order would exceed the dimension."""
        if self.n != other.n:
            raise ValueError("wedge of forms on different faces")
        k = self.k + other.k
        if k > self.n:
            raise ValueError(f"wedge would have order {k} > dimension {self.n}")
        coeffs: dict[Key, Scalar] = {}
        for (a1, s1), c1 in self.coeffs.items():
            for (a2, s2), c2 in other.coeffs.items():
                merged = _merge_sign(s1, s2)
                if merged is None:
                    continue
                sig, sign = merged
                key = (tuple(x + y for x, y in zip(a1, a2)), sig)
                v = coeffs.get(key, Fraction(0)) + c1 * c2 * sign
                if v:
                    coeffs[key] = v
                else:
                    coeffs.pop(key, None)
        return PolyForm(self.n, k, self.r + other.r, coeffs)

    def d(self) -> PolyForm:
        """Exterior derivative."""
        if self.k >= self.n:
            return PolyForm.zero(self.n, self.k + 1)
        raw: list[RawTerm] = []
        for (alpha, sigma), c in self.coeffs.items():
            for i, e in enumerate(alpha):
                if e == 0:
                    continue
                a = list(alpha)
                a[i] -= 1
                raw.append((tuple(a), (i,) + sigma, c * e))
        return canonicalize(self.n, self.k + 1, raw, max(self.r - 1, 0))

    def koszul(self, origin: int = 0) -> PolyForm:
        """Contraction with the position field based at the given vertex.

        Acts on each d lambda_j factor via lambda_j minus its value at the
        origin vertex, with alternating signs from the wedge slots.
        """
        if origin < 0 or origin > self.n:
            raise ValueError(f"origin vertex {origin} not within 0..{self.n}")
        if self.k == 0:
            return PolyForm.zero(self.n, 0)
        raw: list[RawTerm] = []
        for (alpha, sigma), c in self.coeffs.items():
            for pos, s in enumerate(sigma):
                sign = -1 if pos % 2 else 1
                rest = sigma[:pos] + sigma[pos + 1 :]
                a = list(alpha)
                a[s] += 1
                raw.append((tuple(a), rest, c * sign))
                if s == origin:
                    raw.append((alpha, rest, -c * sign))
        return canonicalize(self.n, self.k - 1, raw, self.r + 1)

    def trace(self, face: FaceRef) -> PolyForm:
        """Pullback onto a subsimplex, in the face's own coordinates."""
        if face.n != self.n:
            raise ValueError(f"face {face} does not live on dimension {self.n}")
        m = face.dim
        if self.k > m:
            return PolyForm.zero(m, self.k)
        keep = set(face.indices)
        pos = {i: p for p, i in enumerate(face.indices)}
        raw: list[RawTerm] = []
        for (alpha, sigma), c in self.coeffs.items():
            if any(alpha[i] for i in range(self.n + 1) if i not in keep):
                continue
            if any(s not in keep for s in sigma):
                continue
            a = tuple(alpha[i] for i in face.indices)
            sig = tuple(pos[s] for s in sigma)
            raw.append((a, sig, c))
        return canonicalize(m, self.k, raw, self.r)

    def directional_derivative(self, j: int, l: int) -> PolyForm:
        """Derivative along the vertex difference vector from vertex l to j."""
        if j == l:
            raise ValueError("direction needs two distinct vertices")
        for i in (j, l):
            if i < 0 or i > self.n:
                raise ValueError(f"vertex {i} not within 0..{self.n}")
        raw: list[RawTerm] = []
        for (alpha, sigma), c in self.coeffs.items():
            for i, sign in ((j, 1), (l, -1)):
                if alpha[i] == 0:
                    continue
                a = list(alpha)
                a[i] -= 1
                raw.append((tuple(a), sigma, c * alpha[i] * sign))
        return canonicalize(self.n, self.k, raw, max(self.r - 1, 0))

    def contract(self, alpha: tuple[int, ...], l: int) -> PolyForm:
        """Contraction with the vector from vertex l to the weighted point of alpha.

        The differential d lambda_i evaluates on that vector to
        alpha_i / |alpha| - delta_{il}.
        """
        if self.k == 0:
            raise ValueError("cannot contract a 0-form")
        deg = sum(alpha)
        if deg < 1:
            raise ValueError("alpha must have positive degree")
        if l < 0 or l > self.n or alpha[l] != 0:
            raise ValueError(f"vertex {l} must lie outside the support of {alpha}")
        raw: list[RawTerm] = []
        for (beta, sigma), c in self.coeffs.items():
            for pos, s in enumerate(sigma):
                val = Fraction(alpha[s], deg) - (1 if s == l else 0)
                if not val:
                    continue
                sign = -1 if pos % 2 else 1
                rest = sigma[:pos] + sigma[pos + 1 :]
                raw.append((beta, rest, c * val * sign))
        return canonicalize(self.n, self.k - 1, raw, self.r)

    def eval_at_vertex(self, m: int) -> PolyForm:
        """Constant form whose coefficients are this form's, evaluated at vertex m."""
        if m < 0 or m > self.n:
            raise ValueError(f"vertex {m} not within 0..{self.n}")
        coeffs: dict[Key, Scalar] = {}
        zero_alpha = (0,) * (self.n + 1)
        for (alpha, sigma), c in self.coeffs.items():
            if alpha[m] == self.r:
                coeffs[(zero_alpha, sigma)] = c
        return PolyForm(self.n, self.k, 0, coeffs)


# -- named constructors -------------------------------------------------------


def one(n: int) -> PolyForm:
    """The constant 0-form 1."""
    return PolyForm(n, 0, 0, {((0,) * (n + 1), ()): Fraction(1)})


def bary_monomial(n: int, alpha: tuple[int, ...]) -> PolyForm:
    """The Bernstein monomial lambda^alpha as a 0-form."""
    return canonicalize(n, 0, [(tuple(alpha), (), 1)])


def dlambda(n: int, sigma: tuple[int, ...]) -> PolyForm:
    """The constant form d lambda_{sigma(1)} ^ ... ^ d lambda_{sigma(k)}."""
    return canonicalize(n, len(sigma), [((0,) * (n + 1), tuple(sigma), 1)], degree=0)


def whitney(n: int, sigma: tuple[int, ...]) -> PolyForm:
    """The Whitney form of the subsimplex with the given k+1 vertex indices."""
    sigma = tuple(sigma)
    if any(a >= b for a, b in zip(sigma, sigma[1:])):
        raise ValueError(f"vertex indices must be strictly increasing: {sigma}")
    k = len(sigma) - 1
    raw: list[RawTerm] = []
    for i, s in enumerate(sigma):
        a = [0] * (n + 1)
        a[s] = 1
        rest = sigma[:i] + sigma[i + 1 :]
        raw.append((tuple(a), rest, -1 if i % 2 else 1))
    return canonicalize(n, k, raw, degree=1)


def psi_one_form(alpha: tuple[int, ...], face: FaceRef, i: int) -> PolyForm:
    """Corrected differential attached to a monomial on a face.

    d lambda_i minus the alpha-weighted average of the face differentials;
    the correction makes the family sum to zero over the face and kills the
    contraction with every vector from the opposite face to the weighted
    point of alpha.
    """
    n = face.n
    deg = sum(alpha)
    if deg < 1:
        raise ValueError("alpha must have positive degree")
    if i not in face.indices:
        raise ValueError(f"vertex {i} not on face {face.indices}")
    if any(alpha[m] and m not in set(face.indices) for m in range(n + 1)):
        raise ValueError(f"support of {alpha} leaves face {face.indices}")
    zero_alpha = (0,) * (n + 1)
    raw: list[RawTerm] = [(zero_alpha, (i,), Fraction(1))]
    w = Fraction(alpha[i], deg)
    if w:
        raw.extend((zero_alpha, (j,), -w) for j in face.indices)
    return canonicalize(n, 1, raw, degree=0)


def psi_form(alpha: tuple[int, ...], face: FaceRef, sigma: tuple[int, ...]) -> PolyForm:
    """Wedge of corrected differentials over the indices of sigma."""
    w = one(face.n)
    for s in sigma:
        w = w.wedge(psi_one_form(alpha, face, s))
    return w


def integral_over_face(w: PolyForm) -> Scalar:
    """Exact integral of a top-order form over its unit-volume reference face.

    Each monomial lambda^beta d lambda_1 ^ ... ^ d lambda_d contributes
    beta! / (|beta| + d)! with the orientation of increasing vertex order.
    """
    d = w.n
    if w.k != d:
        raise ValueError(f"integrand must have order {d}, got {w.k}")
    total = Fraction(0)
    top = tuple(range(1, d + 1))
    for (beta, sigma), c in w.coeffs.items():
        assert sigma == top
        num = 1
        for e in beta:
            num *= factorial(e)
        total += c * Fraction(num, factorial(sum(beta) + d))
    return total
