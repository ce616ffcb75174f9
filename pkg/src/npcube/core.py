"""Finite cube complexes given by explicit facet gluings.

A complex is declared as a list of cubes (every cell, of every dimension,
is declared) together with one gluing per facet.  A facet of an ``n``-cube
is named by ``(cube, coordinate, side)``; coordinates are 0-based here and
1-based in the text formats.  The gluing carries a :class:`SignedPermutation`
from the facet's own coordinates (the cube's coordinates with the restricted
one removed, in order) onto the coordinates of the target ``(n-1)``-cube.

Compiling a presentation checks that the gluings compose consistently and
tabulates corners, edge ends at corners and per-vertex corner lists, which
is everything the link, hyperplane and map code needs.
"""

from __future__ import annotations

import os
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import product
from typing import Hashable, Iterable, Iterator

from .errors import (
    DimensionCapExceeded,
    DimensionMismatch,
    DuplicateGluing,
    InconsistentCorners,
    MissingGluing,
    PresentationError,
    UnknownCell,
)

Cell = Hashable
Face = tuple  # entries 0, 1 or None (free coordinate)
Corner = tuple  # entries 0 or 1

DEFAULT_DIM_CAP = int(os.environ.get("NPCUBE_DIM_CAP", "6"))


@dataclass(frozen=True)
class SignedPermutation:
    """Isometry of ``[0,1]^n`` preserving the coordinate-axis structure.

    Source coordinate ``q`` goes to target coordinate ``targets[q]``; a sign
    of ``-1`` reverses it (``x -> 1 - x``).
    """

    targets: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.targets)
        if len(self.signs) != n:
            raise ValueError("targets and signs differ in length")
        if sorted(self.targets) != list(range(n)):
            raise ValueError(f"not a bijection on {n} coordinates: {self.targets}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs must be +1/-1: {self.signs}")

    @classmethod
    def _trusted(cls, targets: tuple, signs: tuple) -> SignedPermutation:
        # internal constructor for results already known to be valid
        p = object.__new__(cls)
        object.__setattr__(p, "targets", targets)
        object.__setattr__(p, "signs", signs)
        return p

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls._trusted(tuple(range(n)), (1,) * n)

    @classmethod
    def from_signed(cls, images: Iterable[int]) -> SignedPermutation:
        """Build from 1-based signed images, e.g. ``(2, -1, 3)``."""
        images = tuple(images)
        if any(x == 0 for x in images):
            raise ValueError("signed images are 1-based and nonzero")
        return cls(tuple(abs(x) - 1 for x in images), tuple(1 if x > 0 else -1 for x in images))

    @property
    def size(self) -> int:
        return len(self.targets)

    def signed(self) -> tuple[int, ...]:
        return tuple((t + 1) * s for t, s in zip(self.targets, self.signs))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.signed()) + ")"

    def is_identity(self) -> bool:
        return self.targets == tuple(range(self.size)) and all(s == 1 for s in self.signs)

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """``self ∘ other``: apply ``other`` first."""
        if other.size != self.size:
            raise ValueError("size mismatch in composition")
        return SignedPermutation._trusted(
            tuple(self.targets[t] for t in other.targets),
            tuple(self.signs[t] * s for t, s in zip(other.targets, other.signs)),
        )

    def inverse(self) -> SignedPermutation:
        targets = [0] * self.size
        signs = [1] * self.size
        for q, (t, s) in enumerate(zip(self.targets, self.signs)):
            targets[t] = q
            signs[t] = s
        return SignedPermutation._trusted(tuple(targets), tuple(signs))

    def apply_point(self, x: Iterable[float]) -> tuple:
        x = tuple(x)
        y = [0] * self.size
        for q, (t, s) in enumerate(zip(self.targets, self.signs)):
            y[t] = x[q] if s == 1 else 1 - x[q]
        return tuple(y)

    def apply_face(self, face: Face) -> Face:
        y: list = [None] * self.size
        for q, (t, s) in enumerate(zip(self.targets, self.signs)):
            v = face[q]
            y[t] = v if (v is None or s == 1) else 1 - v
        return tuple(y)

    def induced(self, face: Face) -> SignedPermutation:
        """Map between the free coordinates of ``face`` and of its image."""
        free = [q for q, v in enumerate(face) if v is None]
        if len(free) == self.size:
            return self
        image_free = [self.targets[q] for q in free]
        rank = {t: k for k, t in enumerate(sorted(image_free))}
        return SignedPermutation._trusted(
            tuple(rank[t] for t in image_free),
            tuple(self.signs[q] for q in free),
        )


def drop(seq: tuple, i: int) -> tuple:
    return seq[:i] + seq[i + 1 :]


def corners_of(n: int) -> list[Corner]:
    """Corners of ``[0,1]^n``; coordinate 0 varies fastest."""
    return [tuple(reversed(c)) for c in product((0, 1), repeat=n)]


@dataclass
class GluingPresentation:
    cubes: dict = field(default_factory=dict)
    gluings: dict = field(default_factory=dict)

    def add_cube(self, cube: Cell, dim: int) -> None:
        if cube in self.cubes:
            raise PresentationError(f"cube {cube!r} declared twice")
        if dim < 0:
            raise PresentationError(f"negative dimension for cube {cube!r}")
        self.cubes[cube] = dim

    def glue(self, src: Cell, coord: int, side: int, dst: Cell, perm: SignedPermutation | None = None) -> None:
        key = (src, coord, side)
        if key in self.gluings:
            raise DuplicateGluing(f"facet {key!r} glued twice")
        if perm is None:
            perm = SignedPermutation.identity(self.cubes.get(dst, 0))
        self.gluings[key] = (dst, perm)

    @classmethod
    def from_squares(cls, vertices: Iterable[Cell], edges: Iterable[tuple], squares: Iterable[tuple]) -> GluingPresentation:
        """Dimension-<=2 input: edges ``(id, src, dst)``, squares ``(id, [w1..w4])``.

        A boundary letter is an edge id or ``("~", id)`` / ``"~id"`` for the
        reversed edge.  The word is read from corner (0,0): ``w1`` runs along
        coordinate 0 at x1 = 0, ``w2`` up the side x0 = 1, ``w3`` back along
        x1 = 1 and ``w4`` down x0 = 0.
        """
        pres = cls()
        for v in vertices:
            pres.add_cube(v, 0)
        for e, a, b in edges:
            pres.add_cube(e, 1)
            pres.glue(e, 0, 0, a)
            pres.glue(e, 0, 1, b)
        # (facet coord, side, sign when traversed forward)
        slots = [(1, 0, 1), (0, 1, 1), (1, 1, -1), (0, 0, -1)]
        for sq, word in squares:
            word = list(word)
            if len(word) != 4:
                raise PresentationError(f"square {sq!r} needs 4 boundary letters, got {len(word)}")
            pres.add_cube(sq, 2)
            for letter, (coord, side, fwd) in zip(word, slots):
                edge, inv = _parse_letter(letter)
                sign = -fwd if inv else fwd
                pres.glue(sq, coord, side, edge, SignedPermutation((0,), (sign,)))
        return pres


def _parse_letter(letter) -> tuple[Cell, bool]:
    if isinstance(letter, tuple) and len(letter) == 2 and letter[0] == "~":
        return letter[1], True
    if isinstance(letter, str) and letter.startswith("~"):
        return letter[1:], True
    return letter, False


class CubeComplex:
    """A compiled finite cube complex; treat as immutable."""

    def __init__(self, presentation: GluingPresentation, dim_cap: int | None = None):
        self.presentation = presentation
        self.dim_cap = DEFAULT_DIM_CAP if dim_cap is None else dim_cap
        self.dims: dict = dict(presentation.cubes)
        top = max(self.dims.values(), default=-1)
        if top > self.dim_cap:
            raise DimensionCapExceeded(f"dimension {top} exceeds cap {self.dim_cap}")
        self.cells: tuple[tuple, ...] = tuple(
            tuple(c for c, d in self.dims.items() if d == k) for k in range(top + 1)
        )
        self.index = {c: (k, i) for k, cs in enumerate(self.cells) for i, c in enumerate(cs)}
        self._face_memo: dict = {}
        self._check_gluings()
        self._check_cubical_identities()
        self._tabulate()
        self._cache: dict = {}

    # compile-time checks -------------------------------------------------

    def _check_gluings(self) -> None:
        pres = self.presentation
        for (src, coord, side), (dst, perm) in pres.gluings.items():
            if src not in self.dims:
                raise UnknownCell(f"gluing from undeclared cube {src!r}")
            if dst not in self.dims:
                raise UnknownCell(f"gluing of {(src, coord, side)!r} onto undeclared cube {dst!r}")
            n = self.dims[src]
            if not (0 <= coord < n) or side not in (0, 1):
                raise PresentationError(f"facet {(src, coord, side)!r} does not exist")
            if self.dims[dst] != n - 1:
                raise DimensionMismatch(
                    f"facet {(src, coord, side)!r} of a {n}-cube glued to {dst!r} of dimension {self.dims[dst]}"
                )
            if perm.size != n - 1:
                raise DimensionMismatch(f"correspondence {perm} on facet {(src, coord, side)!r} has wrong size")
        for c, n in self.dims.items():
            for coord in range(n):
                for side in (0, 1):
                    if (c, coord, side) not in pres.gluings:
                        raise MissingGluing(f"facet (cube={c!r}, coord={coord + 1}, side={side}) is not glued")

    def _route(self, cube: Cell, face: Face, j: int) -> tuple[Cell, SignedPermutation]:
        tgt, perm = self.presentation.gluings[(cube, j, face[j])]
        rest = drop(face, j)
        image = perm.apply_face(rest)
        cell, q = self.face(tgt, image)
        return cell, q.compose(perm.induced(rest))

    def _check_cubical_identities(self) -> None:
        for c, n in self.dims.items():
            for i in range(n):
                for j in range(i + 1, n):
                    for a, b in product((0, 1), repeat=2):
                        f = [None] * n
                        f[i], f[j] = a, b
                        f = tuple(f)
                        r1, r2 = self._route(c, f, i), self._route(c, f, j)
                        if r1 != r2:
                            raise InconsistentCorners(
                                f"cube {c!r}: restricting coords {i + 1}={a} and {j + 1}={b} reaches "
                                f"{r1[0]!r} {r1[1]} one way and {r2[0]!r} {r2[1]} the other"
                            )

    def _tabulate(self) -> None:
        self._corners: dict = {}
        self._edge_ends: dict = {}
        self._at_vertex: dict = defaultdict(list)
        for c, n in self.dims.items():
            if n == 0:
                continue
            corners = corners_of(n)
            verts = []
            ends = {}
            for kappa in corners:
                v, _ = self.face(c, kappa)
                verts.append(v)
                row = []
                for i in range(n):
                    f = kappa[:i] + (None,) + kappa[i + 1 :]
                    e, sigma = self.face(c, f)
                    row.append((e, kappa[i] if sigma.signs[0] == 1 else 1 - kappa[i]))
                ends[kappa] = tuple(row)
                self._at_vertex[v].append((c, kappa))
            self._corners[c] = tuple(verts)
            self._edge_ends[c] = ends

    # queries -------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    @property
    def vertices(self) -> tuple:
        return self.cells[0] if self.cells else ()

    @property
    def edges(self) -> tuple:
        return self.cells[1] if len(self.cells) > 1 else ()

    def cells_of_dim(self, k: int) -> tuple:
        return self.cells[k] if 0 <= k < len(self.cells) else ()

    def all_cells(self) -> Iterator:
        for cs in self.cells:
            yield from cs

    def cell_counts(self) -> tuple[int, ...]:
        return tuple(len(cs) for cs in self.cells)

    def dim_of(self, cell: Cell) -> int:
        try:
            return self.dims[cell]
        except KeyError:
            raise UnknownCell(f"unknown cell {cell!r}") from None

    def __contains__(self, cell) -> bool:
        return cell in self.dims

    def facet(self, cube: Cell, coord: int, side: int) -> tuple[Cell, SignedPermutation]:
        return self.presentation.gluings[(cube, coord, side)]

    def facets(self, cube: Cell) -> list[tuple[int, int, Cell, SignedPermutation]]:
        return [(i, s, *self.facet(cube, i, s)) for i in range(self.dim_of(cube)) for s in (0, 1)]

    def face(self, cube: Cell, face: Face) -> tuple[Cell, SignedPermutation]:
        """Resolve a face of ``cube`` to the cell it is identified with."""
        key = (cube, face)
        hit = self._face_memo.get(key)
        if hit is not None:
            return hit
        if len(face) != self.dim_of(cube):
            raise ValueError(f"face {face} has wrong length for cube {cube!r}")
        fixed = [k for k, v in enumerate(face) if v is not None]
        if not fixed:
            out = (cube, SignedPermutation.identity(len(face)))
        else:
            out = self._route(cube, face, fixed[0])
        self._face_memo[key] = out
        return out

    def corner_vertices(self, cube: Cell) -> tuple:
        """0-cells at the corners of ``cube``, in :func:`corners_of` order."""
        if self.dim_of(cube) == 0:
            return (cube,)
        return self._corners[cube]

    def corner(self, cube: Cell, kappa: Corner) -> Cell:
        return self.face(cube, tuple(kappa))[0]

    def edge_ends(self, cube: Cell, kappa: Corner) -> tuple:
        """For each coordinate, the ``(edge, end)`` leaving ``kappa`` along it."""
        return self._edge_ends[cube][tuple(kappa)]

    def corners_at(self, v: Cell) -> list[tuple[Cell, Corner]]:
        """All ``(cube, corner)`` pairs of positive-dimensional cubes at ``v``."""
        if self.dim_of(v) != 0:
            raise UnknownCell(f"{v!r} is not a 0-cell")
        return list(self._at_vertex.get(v, ()))

    def endpoints(self, e: Cell) -> tuple[Cell, Cell]:
        if self.dim_of(e) != 1:
            raise ValueError(f"{e!r} is not a 1-cell")
        return self._corners[e]

    def one_skeleton_adjacency(self) -> dict:
        """vertex -> list of (neighbour, edge, direction)."""
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            a, b = self.endpoints(e)
            adj[a].append((b, e, 1))
            adj[b].append((a, e, -1))
        return adj

    def __repr__(self) -> str:
        return f"CubeComplex(cells={self.cell_counts()})"


def compile_presentation(pres: GluingPresentation, dim_cap: int | None = None) -> CubeComplex:
    return CubeComplex(pres, dim_cap=dim_cap)


def skeleton(X: CubeComplex, k: int) -> CubeComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be >= 0")
    if k >= X.dim:
        return X
    pres = GluingPresentation()
    for c, d in X.presentation.cubes.items():
        if d <= k:
            pres.add_cube(c, d)
    for (src, coord, side), (dst, perm) in X.presentation.gluings.items():
        if src in pres.cubes:
            pres.glue(src, coord, side, dst, perm)
    return CubeComplex(pres, dim_cap=X.dim_cap)


def euler_characteristic(X: CubeComplex) -> int:
    return sum((-1) ** k * n for k, n in enumerate(X.cell_counts()))


def connected_components(X: CubeComplex, removed_edges: Iterable[Cell] = ()) -> list[set]:
    removed = set(removed_edges)
    adj = X.one_skeleton_adjacency()
    seen: set = set()
    comps = []
    for v in X.vertices:
        if v in seen:
            continue
        comp = {v}
        seen.add(v)
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w, e, _ in adj[u]:
                if e not in removed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


@dataclass(frozen=True)
class Simplex:
    cube: Cell | None
    corner: Corner | None
    vertices: tuple

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


@dataclass
class LinkComplex:
    """Combinatorial link of a vertex.

    Vertices are edge ends ``(edge, end)``.  A simplex records the corner it
    came from and its vertex slots in coordinate order; slots may repeat,
    which is how non-simplicial links show up.
    """

    base: Cell | None
    vertices: list
    simplices: dict  # dim -> list[Simplex]

    @classmethod
    def from_simplices(cls, vertices: Iterable, simplices: Iterable[Iterable]) -> LinkComplex:
        """Abstract link, mainly for tests; 0-simplices are added for the vertices."""
        vertices = list(vertices)
        table: dict = defaultdict(list)
        for v in vertices:
            table[0].append(Simplex(None, None, (v,)))
        for s in simplices:
            s = tuple(s)
            if len(s) > 1:
                table[len(s) - 1].append(Simplex(None, None, s))
        return cls(None, vertices, dict(table))

    @property
    def dim(self) -> int:
        return max((k for k, ss in self.simplices.items() if ss), default=-1)

    def edges(self) -> list[tuple]:
        return [s.vertices for s in self.simplices.get(1, ())]

    def simplex_count(self) -> int:
        return sum(len(ss) for ss in self.simplices.values())

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges():
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        return adj


def link(X: CubeComplex, v: Cell) -> LinkComplex:
    if v not in X or X.dim_of(v) != 0:
        raise UnknownCell(f"{v!r} is not a 0-cell of the complex")
    verts = []
    table: dict = defaultdict(list)
    for c, kappa in X.corners_at(v):
        slots = X.edge_ends(c, kappa)
        n = len(kappa)
        if n == 1:
            verts.append(slots[0])
        table[n - 1].append(Simplex(c, kappa, slots))
    return LinkComplex(v, verts, dict(table))
