"""Extension operators from a face to a containing face, and their laws.

Three computable families are provided: the Bernstein monomial map for
0-forms, the Whitney-generator map for the reduced family, and the
corrected-differential map for the full family, where each face
differential d lambda_i is replaced by

    psi_i = d lambda_i - (alpha_i / |alpha|) * sum_{j in I(f)} d lambda_j

so that the image depends only on the form and not on its barycentric
representation.  A fourth family extends by matching degrees of freedom.
A deliberately naive family, which maps d lambda_sigma to itself without
the correction, is kept as a negative control: it is a right inverse of
the trace but fails the compatibility law checked here.

The compatibility law for a family E is

    tr_{h,g} E_{f,h} = E_{f \\cap g, g} tr_{f, f \\cap g}   for f, g inside h,

with the convention that an empty intersection contributes zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .combinat import multiindices
from . import linalg
from .forms import FaceRef, PolyForm, bary_monomial, canonicalize, dlambda, psi_form, whitney
from .spaces import (
    Family,
    GeneratorDescriptor,
    SpaceKind,
    coefficient_vectors,
    dim_space,
    enumerate_basis,
    membership,
    realize,
)


class FamilyKind(Enum):
    BERNSTEIN_0FORM = "bernstein"
    MINUS_BARYCENTRIC = "minus"
    FULL_PSI = "full"
    DUAL_DOF = "dual"
    NAIVE_FULL = "naive"


@dataclass(frozen=True)
class ExtensionFamily:
    """A family of extension operators E_{f,g} for one space kind."""

    kind: FamilyKind
    r: int
    k: int
    family: Family | None = None

    def __post_init__(self) -> None:
        if self.kind is FamilyKind.BERNSTEIN_0FORM and self.k != 0:
            raise ValueError("the Bernstein family extends 0-forms only")
        if self.kind is FamilyKind.DUAL_DOF and self.family is None:
            raise ValueError("the degree-of-freedom family needs a primal family")

    @property
    def space_family(self) -> Family:
        if self.family is not None:
            return self.family
        if self.kind is FamilyKind.MINUS_BARYCENTRIC:
            return Family.MINUS
        return Family.FULL

    @property
    def space_kind(self) -> SpaceKind:
        return SpaceKind(self.space_family)


class VanishingOrder(Enum):
    NEITHER = "neither"
    ORDER_R = "order_r"
    ORDER_R_PLUS = "order_r_plus"


# -- index bookkeeping ---------------------------------------------------------


def _global_to_target(alpha: tuple[int, ...], sigma: tuple[int, ...], g: FaceRef):
    """Map global exponents/differential indices into g-local ones."""
    a = [0] * (g.dim + 1)
    for p, i in enumerate(g.indices):
        a[p] = alpha[i]
    s = tuple(g.position(i) for i in sigma)
    return tuple(a), s


def _relabel_form(mu: PolyForm, f: FaceRef, g: FaceRef) -> PolyForm:
    """Reinterpret an f-local canonical form on g by vertex correspondence."""
    if not g.contains(f):
        raise ValueError(f"{f.indices} is not a subface of {g.indices}")
    gpos = [g.position(i) for i in f.indices]
    raw = []
    for alpha, sigma, c in mu.terms():
        a = [0] * (g.dim + 1)
        for p, e in enumerate(alpha):
            a[gpos[p]] = e
        raw.append((tuple(a), tuple(gpos[s] for s in sigma), c))
    return canonicalize(g.dim, mu.k, raw, degree=mu.r)


# -- generator-level extension (exact on every spanning generator) -------------


def extend_minus_generator(alpha: tuple[int, ...], sigma: tuple[int, ...], g: FaceRef) -> PolyForm:
    """lambda^alpha phi_sigma realized on g; indices are global."""
    a, s = _global_to_target(alpha, sigma, g)
    return bary_monomial(g.dim, a).wedge(whitney(g.dim, s))


def extend_full_generator(
    alpha: tuple[int, ...], sigma: tuple[int, ...], f: FaceRef, g: FaceRef
) -> PolyForm:
    """lambda^alpha psi^{alpha,f,g}_sigma realized on g; indices are global."""
    a, s = _global_to_target(alpha, sigma, g)
    mono = bary_monomial(g.dim, a)
    if not s:
        return mono
    f_in_g = g.to_local(f)
    return mono.wedge(psi_form(a, f_in_g, s))


def naive_full_generator(alpha: tuple[int, ...], sigma: tuple[int, ...], g: FaceRef) -> PolyForm:
    """The uncorrected image lambda^alpha d lambda_sigma on g (negative control)."""
    a, s = _global_to_target(alpha, sigma, g)
    mono = bary_monomial(g.dim, a)
    return mono if not s else mono.wedge(dlambda(g.dim, s))


def _extend_descriptor(fam: ExtensionFamily, desc: GeneratorDescriptor, f: FaceRef, g: FaceRef) -> PolyForm:
    alpha, sigma = desc.alpha.entries, desc.sigma.values
    if fam.kind is FamilyKind.MINUS_BARYCENTRIC:
        return extend_minus_generator(alpha, sigma, g)
    if fam.kind is FamilyKind.FULL_PSI:
        return extend_full_generator(alpha, sigma, f, g)
    if fam.kind is FamilyKind.BERNSTEIN_0FORM:
        a, _ = _global_to_target(alpha, (), g)
        return bary_monomial(g.dim, a)
    raise ValueError(f"{fam.kind} has no generator-level extension")


# -- form-level extension -------------------------------------------------------


def extend_bernstein(p: PolyForm, f: FaceRef, g: FaceRef, r: int | None = None) -> PolyForm:
    """Extend a polynomial on f by mapping each barycentric monomial across."""
    if p.k != 0 and not p.is_zero:
        raise ValueError("Bernstein extension applies to 0-forms")
    return _relabel_form(p, f, g)


def _extend_by_basis(
    mu: PolyForm, f: FaceRef, g: FaceRef, r: int, k: int, fam: ExtensionFamily
) -> PolyForm:
    kind = fam.space_kind
    coords = membership(mu, kind, f, r, k)
    if coords is None:
        raise ValueError(f"form is not a member of the degree-{r} space on {f.indices}")
    out = PolyForm.zero(g.dim, k)
    for c, desc in zip(coords, enumerate_basis(kind, f, r, k)):
        if c:
            out = out + c * _extend_descriptor(fam, desc, f, g)
    return out


def extend_minus(mu: PolyForm, f: FaceRef, g: FaceRef, r: int, k: int) -> PolyForm:
    """Whitney-generator extension of a member of the reduced space on f."""
    fam = ExtensionFamily(FamilyKind.MINUS_BARYCENTRIC, r, k)
    return _extend_by_basis(mu, f, g, r, k, fam)


def extend_full(mu: PolyForm, f: FaceRef, g: FaceRef, r: int, k: int) -> PolyForm:
    """Corrected-differential extension of a member of the full space on f."""
    fam = ExtensionFamily(FamilyKind.FULL_PSI, r, k)
    return _extend_by_basis(mu, f, g, r, k, fam)


def extend_naive(mu: PolyForm, f: FaceRef, g: FaceRef) -> PolyForm:
    """Relabel the canonical representation of mu from f into g (negative control)."""
    return _relabel_form(mu, f, g)


def extend_form(fam: ExtensionFamily, mu: PolyForm, f: FaceRef, g: FaceRef) -> PolyForm:
    """Dispatch to the family's extension of an arbitrary space member."""
    if fam.kind is FamilyKind.BERNSTEIN_0FORM:
        return extend_bernstein(mu, f, g)
    if fam.kind is FamilyKind.NAIVE_FULL:
        return extend_naive(mu, f, g)
    if fam.kind is FamilyKind.DUAL_DOF:
        from .dof import dual_extend

        return dual_extend(fam.space_family, mu, f, g, fam.r, fam.k)
    return _extend_by_basis(mu, f, g, fam.r, fam.k, fam)


# -- the compatibility law ------------------------------------------------------


@dataclass
class ConsistencyWitness:
    f: FaceRef
    g: FaceRef
    mu: PolyForm
    lhs: PolyForm
    rhs: PolyForm


@dataclass
class ConsistencyResult:
    ok: bool
    witness: ConsistencyWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_consistency(fam: ExtensionFamily, h: FaceRef) -> ConsistencyResult:
    """Verify the compatibility law on every basis element, all face pairs in h.

    Works in the local coordinates of h, so h may itself be a proper face of
    a larger simplex.
    """
    top = FaceRef.full(h.dim)
    faces = top.all_subfaces()
    kind = fam.space_kind
    descriptor_level = fam.kind in (
        FamilyKind.MINUS_BARYCENTRIC,
        FamilyKind.FULL_PSI,
        FamilyKind.BERNSTEIN_0FORM,
    )
    for f in faces:
        basis = enumerate_basis(kind, f, fam.r, fam.k)
        for g in faces:
            fg = f.intersect(g)
            for desc in basis:
                if descriptor_level:
                    lhs = _extend_descriptor(fam, desc, f, top).trace(g)
                    support = desc.alpha.support | desc.sigma.support
                    # the restricted generator survives only when the whole
                    # index support fits and the order does not exceed the
                    # intersection dimension
                    if fg is not None and support <= set(fg.indices) and fam.k <= fg.dim:
                        rhs = _extend_descriptor(fam, desc, fg, g)
                    else:
                        rhs = PolyForm.zero(g.dim, fam.k)
                else:
                    mu = realize(desc)
                    lhs = extend_form(fam, mu, f, top).trace(g)
                    if fg is None:
                        rhs = PolyForm.zero(g.dim, fam.k)
                    else:
                        restricted = mu.trace(f.to_local(fg))
                        rhs = extend_form(fam, restricted, fg, g)
                if lhs != rhs:
                    return ConsistencyResult(False, ConsistencyWitness(f, g, realize(desc), lhs, rhs))
    return ConsistencyResult(True)


def naive_representative_discrepancy() -> PolyForm:
    """How the uncorrected map fails to be well defined on a triangle.

    On the edge [x1, x2] the generators lambda_1 lambda_2 d lambda_1 and
    -lambda_1 lambda_2 d lambda_2 are the same form, but their uncorrected
    images on the triangle differ; the difference is returned.
    """
    T = FaceRef.full(2)
    img_a = naive_full_generator((0, 1, 1), (1,), T)
    img_b = -1 * naive_full_generator((0, 1, 1), (2,), T)
    return img_a - img_b


# -- vanishing order ------------------------------------------------------------


def _face_supported(w: PolyForm, face: FaceRef) -> bool:
    keep = set(face.indices)
    return all(
        all(e == 0 for i, e in enumerate(alpha) if i not in keep) for alpha, _ in w.coeffs
    )


def _constant_contraction_rows(
    w: PolyForm, face: FaceRef, r: int
) -> list[Fraction]:
    """Values of the reduced order-r+ functionals on a degree-r form.

    For each opposite vertex l and each face-supported exponent alpha of
    degree r, contract the alpha-slice of w with the vector from x_l to the
    weighted point of alpha, and list the resulting constant coefficients.
    """
    n = w.n
    k = w.k
    values: list[Fraction] = []
    out_keys = sorted(
        tuple(s) for s in _increasing_tuples(k - 1, n)
    )
    for l in face.complement_indices:
        for alpha_local in multiindices(face.dim, r):
            alpha = [0] * (n + 1)
            for p, e in zip(face.indices, alpha_local):
                alpha[p] = e
            alpha = tuple(alpha)
            slice_form = PolyForm(
                n,
                k,
                0,
                {
                    ((0,) * (n + 1), sigma): c
                    for (a, sigma), c in w.coeffs.items()
                    if a == alpha
                },
            )
            if slice_form.is_zero:
                values.extend([Fraction(0)] * len(out_keys))
                continue
            contracted = slice_form.contract(alpha, l)
            values.extend(contracted.coeffs.get(((0,) * (n + 1), key), Fraction(0)) for key in out_keys)
    return values


def _increasing_tuples(k: int, n: int):
    from itertools import combinations

    if k < 0:
        return []
    return list(combinations(range(1, n + 1), k))


def vanishing_order_check(w: PolyForm, face: FaceRef, r: int) -> VanishingOrder:
    """Classify how strongly w vanishes on the face opposite to `face`.

    The plain order-r test is the monomial-support criterion on the
    canonical degree-r coefficients; the stronger order includes the
    directional-derivative contraction conditions, evaluated here on the
    alpha-slices (which is equivalent once the support criterion holds).
    """
    if w.is_zero:
        return VanishingOrder.ORDER_R_PLUS
    if w.r > r:
        raise ValueError(f"form has degree {w.r} > {r}")
    w = w.lift(r)
    if face.n != w.n:
        raise ValueError("face does not match the form's simplex")
    if not _face_supported(w, face):
        return VanishingOrder.NEITHER
    if w.k == 0 or set(face.indices) == set(range(w.n + 1)):
        return VanishingOrder.ORDER_R_PLUS
    if any(_constant_contraction_rows(w, face, r)):
        return VanishingOrder.ORDER_R
    return VanishingOrder.ORDER_R_PLUS


def characterization_equality(family: Family, face: FaceRef, r: int, k: int) -> bool:
    """Extended forms are exactly those vanishing to the right order opposite the face.

    Imposes the vanishing conditions as linear functionals on the whole
    space over the full simplex and compares the solution space with the
    span of the extended basis of the face space, in both dimension and
    membership.
    """
    n = face.n
    T = FaceRef.full(n)
    kind = SpaceKind(family)
    big_forms = [realize(d).lift(r) for d in enumerate_basis(kind, T, r, k)]
    keep = set(face.indices)
    sigmas = _increasing_tuples(k, n)
    bad_keys = [
        (tuple(a), s)
        for a in multiindices(n, r)
        if any(e and i not in keep for i, e in enumerate(a))
        for s in sigmas
    ]
    with_contractions = family is Family.FULL and k >= 1 and len(keep) < n + 1
    rows = []
    for w in big_forms:
        row = [w.coeffs.get(key, Fraction(0)) for key in bad_keys]
        if with_contractions:
            row.extend(_constant_contraction_rows(w, face, r))
        rows.append(row)
    kernel_dim = len(big_forms) - linalg.rank(rows)
    expected = dim_space(kind, face.dim, r, k)
    if kernel_dim != expected:
        return False
    extended = []
    for desc in enumerate_basis(kind, face, r, k):
        if family is Family.FULL:
            w = extend_full_generator(desc.alpha.entries, desc.sigma.values, face, T)
        else:
            w = extend_minus_generator(desc.alpha.entries, desc.sigma.values, T)
        level = vanishing_order_check(w, face, r)
        if level is VanishingOrder.NEITHER:
            return False
        if family is Family.FULL and level is not VanishingOrder.ORDER_R_PLUS:
            return False
        extended.append(w)
    rows = coefficient_vectors(extended)
    return linalg.rank(rows) == expected
