"""Simplicial triangulations: cells, the face lattice, and incidence data.

All connectivity is combinatorial; vertex coordinates play no role in the
barycentric algebra and are not stored.  Cells keep their vertex ids sorted,
and a face's local indices inside a cell follow that sorted order, so traces
taken on a shared face from different cells use the same coordinate labels
automatically.

Mesh files are line oriented::

    simplicial-mesh v1 dim=<n> vertices=<V> cells=<C>
    <n+1 vertex ids>          # one line per cell, '#' starts a comment

Ids are base-10 non-negative integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .forms import FaceRef


class MeshFormatError(ValueError):
    """Raised for malformed mesh descriptions; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _is_id(token: str) -> bool:
    # ASCII decimal digits only; str.isdigit would admit other scripts
    return bool(token) and all("0" <= ch <= "9" for ch in token)


@dataclass(frozen=True)
class GlobalFace:
    """A face of the mesh with its (cell, local face) incidence list."""

    vertices: tuple[int, ...]
    incidence: tuple[tuple[int, FaceRef], ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class Triangulation:
    n: int
    num_vertices: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for cell in self.cells:
            if len(set(cell)) != self.n + 1:
                raise ValueError(f"cell {cell} must have {self.n + 1} distinct vertices")
            if tuple(sorted(cell)) != cell:
                raise ValueError(f"cell {cell} must be sorted")
            if cell[0] < 0 or cell[-1] >= self.num_vertices:
                raise ValueError(f"cell {cell} uses ids outside 0..{self.num_vertices - 1}")
        seen = set()
        for cell in self.cells:
            if cell in seen:
                raise ValueError(f"cell {cell} appears twice")
            seen.add(cell)

    def faces(self, j: int) -> list[GlobalFace]:
        """All distinct j-faces with incidence data, ordered by vertex tuple."""
        if j < 0 or j > self.n:
            raise ValueError(f"face dimension {j} outside 0..{self.n}")
        found: dict[tuple[int, ...], list[tuple[int, FaceRef]]] = {}
        for ci, cell in enumerate(self.cells):
            for verts in combinations(range(self.n + 1), j + 1):
                key = tuple(cell[v] for v in verts)
                found.setdefault(key, []).append((ci, FaceRef(self.n, verts)))
        return [
            GlobalFace(key, tuple(found[key])) for key in sorted(found)
        ]

    def all_faces(self) -> list[GlobalFace]:
        """The whole face lattice, by increasing dimension then vertex tuple."""
        return [f for j in range(self.n + 1) for f in self.faces(j)]


def loads(text: str) -> Triangulation:
    """Parse a mesh description from a string."""
    header = None
    cells: list[tuple[int, ...]] = []
    meta: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if parts[:2] != ["simplicial-mesh", "v1"]:
                raise MeshFormatError(lineno, "expected header 'simplicial-mesh v1 ...'")
            for item in parts[2:]:
                key, _, value = item.partition("=")
                if key not in ("dim", "vertices", "cells") or not _is_id(value):
                    raise MeshFormatError(lineno, f"bad header field {item!r}")
                meta[key] = int(value)
            missing = {"dim", "vertices", "cells"} - meta.keys()
            if missing:
                raise MeshFormatError(lineno, f"header missing {sorted(missing)}")
            header = lineno
            continue
        fields = line.split()
        if len(fields) != meta["dim"] + 1 or not all(_is_id(f) for f in fields):
            raise MeshFormatError(
                lineno, f"expected {meta['dim'] + 1} non-negative vertex ids"
            )
        ids = tuple(sorted(int(f) for f in fields))
        if len(set(ids)) != len(ids):
            raise MeshFormatError(lineno, f"repeated vertex id in cell {ids}")
        if ids[-1] >= meta["vertices"]:
            raise MeshFormatError(lineno, f"vertex id {ids[-1]} out of range")
        if ids in set(cells):
            raise MeshFormatError(lineno, f"cell {ids} appears twice")
        cells.append(ids)
    if header is None:
        raise MeshFormatError(1, "empty mesh description")
    if len(cells) != meta["cells"]:
        raise MeshFormatError(
            header, f"header promises {meta['cells']} cells, found {len(cells)}"
        )
    return Triangulation(meta["dim"], meta["vertices"], tuple(cells))


def load(path: str) -> Triangulation:
    """Parse a mesh description from a file."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            text = fh.read()
        except UnicodeDecodeError as err:
            raise MeshFormatError(1, f"not a text file: {err}") from err
    return loads(text)


def from_cells(n: int, cells: list[tuple[int, ...]]) -> Triangulation:
    """Build a triangulation from cell vertex tuples, sorting each cell."""
    sorted_cells = tuple(tuple(sorted(c)) for c in cells)
    nv = 1 + max(max(c) for c in sorted_cells)
    return Triangulation(n, nv, sorted_cells)
