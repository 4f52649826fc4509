"""Assembled bases over a triangulation and their verification.

Every face of the mesh carries the zero-boundary-trace subspace of its form
space; extending each of its basis generators into every incident cell (and
by zero elsewhere) produces one global basis element per generator.  The
checks below establish the two halves of the direct-sum property: the
assembled elements are linearly independent, and their count equals the
dimension of the space of piecewise forms with single-valued traces,
computed independently by imposing the trace-matching constraints on the
product of the cell spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinat import multiindices
from . import linalg
from .extension import extend_full_generator, extend_minus_generator
from .forms import FaceRef, PolyForm
from .mesh import GlobalFace, Triangulation
from .spaces import Family, GeneratorDescriptor, SpaceKind, dim_space, enumerate_basis, membership, realize


@dataclass
class GlobalBasisElement:
    """One assembled basis form: a face generator extended into its cells."""

    face: GlobalFace
    descriptor: GeneratorDescriptor
    restrictions: dict[int, PolyForm]

    def restriction(self, cell_index: int, n: int, k: int) -> PolyForm:
        got = self.restrictions.get(cell_index)
        return got if got is not None else PolyForm.zero(n, k)


def _cell_generator(
    family: Family, desc: GeneratorDescriptor, fr: FaceRef, n: int
) -> PolyForm:
    """Extend a face-local generator into the cell holding the face at fr."""
    alpha = [0] * (n + 1)
    for p, e in enumerate(desc.alpha.entries):
        alpha[fr.indices[p]] = e
    sigma = tuple(fr.indices[s] for s in desc.sigma.values)
    cell = FaceRef.full(n)
    if family is Family.MINUS:
        return extend_minus_generator(tuple(alpha), sigma, cell)
    return extend_full_generator(tuple(alpha), sigma, fr, cell)


def assemble_basis(t: Triangulation, family: Family, r: int, k: int) -> list[GlobalBasisElement]:
    """The assembled basis, one element per zero-trace generator per face."""
    if r < 1:
        raise ValueError("assembly needs polynomial degree r >= 1")
    if k < 0 or k > t.n:
        raise ValueError(f"form order {k} outside 0..{t.n}")
    zero_kind = SpaceKind(family, zero_trace=True)
    out: list[GlobalBasisElement] = []
    for face in t.all_faces():
        if face.dim < k:
            continue
        local = FaceRef.full(face.dim)
        for desc in enumerate_basis(zero_kind, local, r, k):
            restrictions = {
                ci: _cell_generator(family, desc, fr, t.n) for ci, fr in face.incidence
            }
            out.append(GlobalBasisElement(face, desc, restrictions))
    return out


def assembled_dimension(t: Triangulation, family: Family, r: int, k: int) -> int:
    """Sum of zero-trace dimensions over the face lattice."""
    zero_kind = SpaceKind(family, zero_trace=True)
    return sum(dim_space(zero_kind, f.dim, r, k) for f in t.all_faces())


@dataclass
class SingleValuedWitness:
    element: GlobalBasisElement | None
    face: GlobalFace
    traces: tuple[PolyForm, PolyForm]


def _trace_mismatch(
    t: Triangulation, restrictions: dict[int, PolyForm], k: int, face: GlobalFace
) -> tuple[PolyForm, PolyForm] | None:
    first: PolyForm | None = None
    for ci, fr in face.incidence:
        w = restrictions.get(ci)
        tr = w.trace(fr) if w is not None else PolyForm.zero(face.dim, k)
        if first is None:
            first = tr
        elif tr != first:
            return (first, tr)
    return None


def verify_single_valued(
    t: Triangulation, elements: list[GlobalBasisElement], k: int
) -> SingleValuedWitness | None:
    """Check trace agreement on every shared face; None means all good."""
    shared = [
        f
        for j in range(k, t.n)
        for f in t.faces(j)
        if len(f.incidence) >= 1
    ]
    for el in elements:
        for face in shared:
            bad = _trace_mismatch(t, el.restrictions, k, face)
            if bad is not None:
                return SingleValuedWitness(el, face, bad)
    return None


def _cell_keys(n: int, r: int, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    return [
        (tuple(a), s)
        for a in multiindices(n, r)
        for s in combinations(range(1, n + 1), k)
    ]


def _stacked_vectors(
    t: Triangulation, elements: list[GlobalBasisElement], r: int, k: int
) -> list[list[Fraction]]:
    keys = _cell_keys(t.n, r, k)
    zero = Fraction(0)
    rows = []
    for el in elements:
        row: list[Fraction] = []
        for ci in range(len(t.cells)):
            w = el.restrictions.get(ci)
            if w is None:
                row.extend([zero] * len(keys))
            else:
                w = w.lift(r)
                row.extend(w.coeffs.get(key, zero) for key in keys)
        rows.append(row)
    return rows


@dataclass
class DirectSumReport:
    count: int
    expected: int
    independent: bool
    constrained_dimension: int
    cells_spanned: bool

    @property
    def ok(self) -> bool:
        return (
            self.count == self.expected
            and self.independent
            and self.constrained_dimension == self.count
            and self.cells_spanned
        )

    def __bool__(self) -> bool:
        return self.ok


def verify_direct_sum(t: Triangulation, family: Family, r: int, k: int) -> DirectSumReport:
    """Independence plus dimension match against the constrained product space."""
    elements = assemble_basis(t, family, r, k)
    count = len(elements)
    expected = assembled_dimension(t, family, r, k)
    independent = linalg.rank(_stacked_vectors(t, elements, r, k)) == count

    whole = SpaceKind(family)
    cell_basis = [realize(d) for d in enumerate_basis(whole, FaceRef.full(t.n), r, k)]
    per_cell = len(cell_basis)
    ncols = per_cell * len(t.cells)
    constraint_rows: list[list[Fraction]] = []
    zero = Fraction(0)
    for j in range(k, t.n):
        for face in t.faces(j):
            if len(face.incidence) < 2:
                continue
            keys = _cell_keys(face.dim, r, k)
            c0, fr0 = face.incidence[0]
            base = [w.trace(fr0) for w in cell_basis]
            for ci, fri in face.incidence[1:]:
                other = [w.trace(fri) for w in cell_basis]
                for key in keys:
                    row = [zero] * ncols
                    for b in range(per_cell):
                        v0 = base[b].lift(r).coeffs.get(key, zero)
                        vi = other[b].lift(r).coeffs.get(key, zero)
                        if v0:
                            row[c0 * per_cell + b] += v0
                        if vi:
                            row[ci * per_cell + b] -= vi
                    constraint_rows.append(row)
    constrained = ncols - linalg.rank(constraint_rows)

    cells_spanned = True
    want = dim_space(whole, t.n, r, k)
    for ci in range(len(t.cells)):
        forms = [el.restrictions[ci] for el in elements if ci in el.restrictions]
        from .spaces import rank_of

        if rank_of(forms) != want:
            cells_spanned = False
            break
    return DirectSumReport(count, expected, independent, constrained, cells_spanned)


def decompose(
    t: Triangulation, family: Family, r: int, k: int, piecewise: dict[int, PolyForm]
) -> dict[tuple[int, ...], PolyForm]:
    """Split a member of the assembled space into its per-face components.

    The input is a cellwise collection of forms with single-valued traces;
    the result maps each face's vertex tuple to the face-local component,
    which lies in the zero-trace subspace there.  Peeling proceeds upward
    by face dimension, subtracting each face's extended trace.
    """
    n = t.n
    zero_kind = SpaceKind(family, zero_trace=True)
    current = {ci: piecewise.get(ci, PolyForm.zero(n, k)) for ci in range(len(t.cells))}
    components: dict[tuple[int, ...], PolyForm] = {}
    for j in range(k, n + 1):
        for face in t.faces(j):
            c0, fr0 = face.incidence[0]
            mu = current[c0].trace(fr0)
            for ci, fri in face.incidence[1:]:
                if current[ci].trace(fri) != mu:
                    raise ValueError(f"traces on face {face.vertices} are not single-valued")
            if mu.is_zero:
                continue
            local = FaceRef.full(face.dim)
            coords = membership(mu, zero_kind, local, r, k)
            if coords is None:
                raise ValueError(
                    f"trace on face {face.vertices} leaves the zero-trace subspace"
                )
            components[face.vertices] = mu
            descriptors = enumerate_basis(zero_kind, local, r, k)
            for ci, fri in face.incidence:
                piece = PolyForm.zero(n, k)
                for c, desc in zip(coords, descriptors):
                    if c:
                        piece = piece + c * _cell_generator(family, desc, fri, n)
                current[ci] = current[ci] - piece
    for ci, w in current.items():
        if not w.is_zero:
            raise ValueError(f"nonzero residual on cell {ci} after peeling")
    return components
