"""Executable property suites over the whole package.

Each suite yields one result per swept case; everything is exact, so a
suite either establishes its claim on the swept range or hands back a
witness.  The command line front end selects suites by name and renders
the matrix.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import linalg
from .assemble import assemble_basis, verify_direct_sum, verify_single_valued
from .combinat import binom, enumerate_increasing
from .dof import build_dofs, pairing_matrix, weight_space
from .extension import (
    ExtensionFamily,
    FamilyKind,
    VanishingOrder,
    characterization_equality,
    check_consistency,
    naive_representative_discrepancy,
    vanishing_order_check,
)
from .forms import FaceRef, PolyForm, bary_monomial, canonicalize, dlambda, whitney
from .mesh import Triangulation, from_cells
from .spaces import (
    Family,
    SpaceKind,
    basis_forms,
    dim_space,
    enumerate_basis,
    enumerate_spanning,
    rank_of,
    realize,
)

ALL_KINDS = (
    SpaceKind(Family.FULL),
    SpaceKind(Family.MINUS),
    SpaceKind(Family.FULL, True),
    SpaceKind(Family.MINUS, True),
)


@dataclass
class CheckResult:
    suite: str
    label: str
    passed: bool
    detail: str = ""


def builtin_meshes() -> dict[str, Triangulation]:
    return {
        "triangle": from_cells(2, [(0, 1, 2)]),
        "two-triangles": from_cells(2, [(0, 1, 2), (1, 2, 3)]),
        "fan": from_cells(2, [(0, 1, 2), (0, 2, 3), (0, 3, 4)]),
        "tet": from_cells(3, [(0, 1, 2, 3)]),
        "two-tets": from_cells(3, [(0, 1, 2, 3), (1, 2, 3, 4)]),
    }


def _kind_name(kind: SpaceKind) -> str:
    return kind.family.value + ("*0" if kind.zero_trace else "")


# -- individual suites ---------------------------------------------------------


def suite_dims(max_n: int = 4, max_r: int = 3) -> Iterator[CheckResult]:
    """Dimension formulas and basis cardinalities, all four kinds."""
    r_top = max(max_r, int(os.environ.get("FEEC_MAX_DEGREE", "6")))
    for n in range(1, max_n + 1):
        T = FaceRef.full(n)
        for r in range(1, r_top + 1):
            bad = ""
            for k in range(n + 1):
                full = dim_space(SpaceKind(Family.FULL), n, r, k)
                minus = dim_space(SpaceKind(Family.MINUS), n, r, k)
                if full != binom(r + n, n) * binom(n, k):
                    bad = f"full dimension off at k={k}"
                if minus != binom(r + k - 1, k) * binom(n + r, n - k):
                    bad = f"reduced dimension off at k={k}"
                for kind in ALL_KINDS:
                    got = len(enumerate_basis(kind, T, r, k))
                    if got != dim_space(kind, n, r, k):
                        bad = f"{_kind_name(kind)} basis count {got} at k={k}"
            yield CheckResult("dims", f"n={n} r={r}", not bad, bad)


def suite_ranks(max_n: int = 3, max_r: int = 4) -> Iterator[CheckResult]:
    """Spanning and basis ranks equal the dimension, exactly."""
    for n in (2, 3):
        if n > max_n:
            continue
        T = FaceRef.full(n)
        for r in range(1, max_r + 1):
            for kind in ALL_KINDS:
                bad = ""
                for k in range(n + 1):
                    dim = dim_space(kind, n, r, k)
                    basis = [realize(g) for g in enumerate_basis(kind, T, r, k)]
                    if len(basis) != dim or rank_of(basis) != dim:
                        bad = f"basis rank off at k={k}"
                        break
                    spanning = [realize(g) for g in enumerate_spanning(kind, T, r, k)]
                    if rank_of(spanning) != dim:
                        bad = f"spanning rank off at k={k}"
                        break
                yield CheckResult("ranks", f"{_kind_name(kind)} n={n} r={r}", not bad, bad)


def _random_form(rng: random.Random, n: int, k: int, r: int, homogeneous: bool) -> PolyForm:
    lo = 1 if homogeneous else 0
    raw = []
    for _ in range(3):
        alpha = [0] * (n + 1)
        for _ in range(r):
            alpha[rng.randint(lo, n)] += 1
        sigma = tuple(sorted(rng.sample(range(lo, n + 1), k)))
        raw.append((tuple(alpha), sigma, rng.randint(1, 4) * rng.choice((1, -1))))
    return canonicalize(n, k, raw, degree=r)


def suite_identities(
    max_n: int = 3, max_r: int = 3, samples: int = 200, seed: int = 2024
) -> Iterator[CheckResult]:
    """Differential and contraction identities on randomized forms."""
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            for k in range(n + 1):
                bad = ""
                for _ in range(samples):
                    w = _random_form(rng, n, k, r, homogeneous=False)
                    if not w.d().d().is_zero:
                        bad = "second derivative survived"
                        break
                    if not w.koszul().koszul().is_zero:
                        bad = "double contraction survived"
                        break
                    l = rng.randint(0, n - k)
                    eta = _random_form(rng, n, l, rng.randint(0, max_r), homogeneous=False)
                    lhs = w.wedge(eta).koszul()
                    rhs = w.koszul().wedge(eta) + (-1) ** k * w.wedge(eta.koszul())
                    if lhs != rhs:
                        bad = "product rule for the contraction failed"
                        break
                yield CheckResult("identities", f"n={n} r={r} k={k}", not bad, bad)


def suite_homotopy(
    max_n: int = 3, max_r: int = 3, samples: int = 200, seed: int = 4096
) -> Iterator[CheckResult]:
    """(d contraction + contraction d) scales homogeneous forms by r + k."""
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            for k in range(n + 1):
                bad = ""
                for _ in range(samples):
                    w = _random_form(rng, n, k, r, homogeneous=True)
                    if w.d().koszul() + w.koszul().d() != (r + k) * w:
                        bad = "homotopy identity failed"
                        break
                yield CheckResult("homotopy", f"n={n} r={r} k={k}", not bad, bad)


def suite_whitney(max_n: int = 4) -> Iterator[CheckResult]:
    """Boundary alternating sums, the partition identity, the contraction identity."""
    for n in range(2, max_n + 1):
        bad = ""
        for k in range(1, n + 1):
            for sigma in enumerate_increasing(0, k, 0, n):
                vals = sigma.values
                total = PolyForm.zero(n, k - 1)
                for j in range(k + 1):
                    lam = bary_monomial(n, tuple(1 if i == vals[j] else 0 for i in range(n + 1)))
                    total = total + (-1) ** j * lam.wedge(whitney(n, vals[:j] + vals[j + 1 :]))
                if not total.is_zero:
                    bad = f"alternating sum nonzero for {vals}"
        for k in range(0, n):
            for sigma in enumerate_increasing(0, k, 0, n):
                vals = sigma.values
                dls = dlambda(n, vals)
                total = PolyForm.zero(n, k + 1)
                for j in range(n + 1):
                    if j in vals:
                        continue
                    lam = bary_monomial(n, tuple(1 if i == j else 0 for i in range(n + 1)))
                    total = total + lam.wedge(dls) - dlambda(n, (j,)).wedge(whitney(n, vals))
                if total != dls:
                    bad = f"partition identity failed for {vals}"
                w = whitney(n, vals)
                if dls.koszul() != w - w.eval_at_vertex(0):
                    bad = f"contraction identity failed for {vals}"
        yield CheckResult("whitney", f"n={n}", not bad, bad)


def suite_consistency(max_r: int = 3, max_k: int = 2, dual_r: int = 2) -> Iterator[CheckResult]:
    """Compatibility of the extension families over the tetrahedron."""
    tet = FaceRef.full(3)
    for kind in (FamilyKind.MINUS_BARYCENTRIC, FamilyKind.FULL_PSI):
        for r in range(1, max_r + 1):
            for k in range(0, max_k + 1):
                res = check_consistency(ExtensionFamily(kind, r, k), tet)
                detail = "" if res.ok else (
                    f"faces {res.witness.f.indices} vs {res.witness.g.indices}"
                )
                yield CheckResult("consistency", f"{kind.value} r={r} k={k}", res.ok, detail)
    for fam in (Family.FULL, Family.MINUS):
        for r in range(1, dual_r + 1):
            for k in range(0, max_k + 1):
                res = check_consistency(
                    ExtensionFamily(FamilyKind.DUAL_DOF, r, k, family=fam), tet
                )
                yield CheckResult(
                    "consistency", f"dual-{fam.value} r={r} k={k}", res.ok,
                    "" if res.ok else "moment extension incompatible",
                )
    res = check_consistency(ExtensionFamily(FamilyKind.NAIVE_FULL, 2, 1), FaceRef.full(2))
    bad = naive_representative_discrepancy()
    expected = canonicalize(2, 1, [((0, 1, 1), (1,), 1), ((0, 1, 1), (2,), 1)])
    ok = (not res.ok) and bad == expected
    yield CheckResult(
        "consistency",
        "naive control fails",
        ok,
        "" if ok else "the uncorrected family unexpectedly passed",
    )


def suite_decomposition(max_r: int = 3) -> Iterator[CheckResult]:
    """Assembled bases on the built-in meshes: continuity and direct sum."""
    for name, mesh in builtin_meshes().items():
        for r in range(1, max_r + 1):
            for family in (Family.MINUS, Family.FULL):
                bad = ""
                for k in range(mesh.n + 1):
                    elements = assemble_basis(mesh, family, r, k)
                    witness = verify_single_valued(mesh, elements, k)
                    if witness is not None:
                        bad = f"multivalued trace on {witness.face.vertices} at k={k}"
                        break
                    report = verify_direct_sum(mesh, family, r, k)
                    if not report.ok:
                        bad = (
                            f"k={k}: count {report.count} expected {report.expected} "
                            f"constrained {report.constrained_dimension}"
                        )
                        break
                yield CheckResult(
                    "decomposition", f"{name} {family.value} r={r}", not bad, bad
                )


def suite_dof(max_n: int = 3, max_r: int = 3) -> Iterator[CheckResult]:
    """Moment counts and unisolvence for both families."""
    for n in range(1, max_n + 1):
        T = FaceRef.full(n)
        for family in (Family.FULL, Family.MINUS):
            for r in range(1, max_r + 1):
                bad = ""
                for k in range(n + 1):
                    dofs = build_dofs(family, n, r, k)
                    if len(dofs) != dim_space(SpaceKind(family), n, r, k):
                        bad = f"moment count at k={k}"
                        break
                    for face in T.all_subfaces():
                        if face.dim < k:
                            continue
                        kind, deg, order = weight_space(family, face.dim, r, k)
                        got = sum(1 for d in dofs if d.face == face)
                        if got != dim_space(kind, face.dim, deg, order):
                            bad = f"face group size on {face.indices} at k={k}"
                            break
                    if bad:
                        break
                    forms = basis_forms(SpaceKind(family), T, r, k)
                    if forms and not linalg.nonsingular(pairing_matrix(dofs, forms)):
                        bad = f"singular pairing at k={k}"
                        break
                yield CheckResult("dof", f"{family.value} n={n} r={r}", not bad, bad)
    bad = ""
    for n in range(1, max_n + 1):
        for r in range(1, max_r + 1):
            for k in range(n + 1):
                if dim_space(SpaceKind(Family.FULL, True), n, r, k) != dim_space(
                    SpaceKind(Family.MINUS), n, r + k - n, n - k
                ):
                    bad = f"full/reduced duality dims n={n} r={r} k={k}"
                if dim_space(SpaceKind(Family.MINUS, True), n, r, k) != dim_space(
                    SpaceKind(Family.FULL), n, r + k - n - 1, n - k
                ):
                    bad = f"reduced/full duality dims n={n} r={r} k={k}"
    yield CheckResult("dof", "duality dimensions", not bad, bad)


def suite_characterization(max_n: int = 3, max_r: int = 3) -> Iterator[CheckResult]:
    """Vanishing-order descriptions of the extended subspaces."""
    for n in (2, 3):
        if n > max_n:
            continue
        T = FaceRef.full(n)
        for family in (Family.FULL, Family.MINUS):
            for r in range(1, max_r + 1):
                bad = ""
                for face in T.all_subfaces():
                    for k in range(n + 1):
                        if not characterization_equality(family, face, r, k):
                            bad = f"face {face.indices} k={k}"
                            break
                    if bad:
                        break
                yield CheckResult(
                    "characterization", f"{family.value} n={n} r={r}", not bad, bad
                )
    w = canonicalize(2, 1, [((0, 1, 1), (1,), 1), ((0, 1, 1), (2,), 1)])
    level = vanishing_order_check(w, FaceRef(2, (1, 2)), 2)
    ok = level is VanishingOrder.ORDER_R
    yield CheckResult(
        "characterization",
        "bubble counterexample grade",
        ok,
        "" if ok else f"classified {level.value}",
    )


def suite_bernstein(max_r: int = 4) -> Iterator[CheckResult]:
    """For 0-forms the assembled decomposition is the monomial one, element for element."""
    for name, mesh in (("triangle", from_cells(2, [(0, 1, 2)])), ("tet", from_cells(3, [(0, 1, 2, 3)]))):
        n = mesh.n
        for r in range(1, max_r + 1):
            elements = assemble_basis(mesh, Family.FULL, r, 0)
            expected: dict[tuple[int, ...], list[PolyForm]] = {}
            from .combinat import multiindices

            for alpha in multiindices(n, r):
                support = tuple(i for i, e in enumerate(alpha) if e)
                expected.setdefault(support, []).append(bary_monomial(n, alpha))
            bad = ""
            seen: dict[tuple[int, ...], list[PolyForm]] = {}
            for el in elements:
                seen.setdefault(el.face.vertices, []).append(el.restrictions[0])
            if set(seen) != set(expected):
                bad = "face support sets differ"
            else:
                for verts, forms in expected.items():
                    got = seen[verts]
                    if len(got) != len(forms) or any(
                        not any(a == b for b in got) for a in forms
                    ):
                        bad = f"monomials at face {verts} differ"
                        break
            yield CheckResult("bernstein", f"{name} r={r}", not bad, bad)


SUITES: dict[str, Callable[..., Iterable[CheckResult]]] = {
    "dims": suite_dims,
    "ranks": suite_ranks,
    "identities": suite_identities,
    "homotopy": suite_homotopy,
    "whitney": suite_whitney,
    "consistency": suite_consistency,
    "decomposition": suite_decomposition,
    "dof": suite_dof,
    "characterization": suite_characterization,
    "bernstein": suite_bernstein,
}


def run_suites(
    names: list[str] | None = None,
    max_n: int = 3,
    max_r: int = 3,
    samples: int = 200,
) -> list[CheckResult]:
    """Run the selected suites (all by default) with the given sweep bounds.

    Bounds are clamped per suite to the documented limits; the dimension
    suite additionally honors FEEC_MAX_DEGREE.
    """
    chosen = list(SUITES) if not names else names
    results: list[CheckResult] = []
    for name in chosen:
        fn = SUITES.get(name)
        if fn is None:
            raise KeyError(name)
        if name == "dims":
            kwargs = dict(max_n=min(max_n, 4), max_r=max_r)
        elif name == "ranks":
            kwargs = dict(max_n=min(max_n, 3), max_r=min(max_r, 4))
        elif name in ("identities", "homotopy"):
            kwargs = dict(max_n=min(max_n, 4), max_r=min(max_r, 4), samples=samples)
        elif name == "whitney":
            kwargs = dict(max_n=min(max_n + 1, 4))
        elif name in ("consistency", "decomposition"):
            kwargs = dict(max_r=min(max_r, 3))
        elif name in ("dof", "characterization"):
            kwargs = dict(max_n=min(max_n, 3), max_r=min(max_r, 3))
        else:
            kwargs = dict(max_r=min(max_r + 1, 4))
        results.extend(fn(**kwargs))
    return results
