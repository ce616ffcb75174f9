"""Builders for the standard complexes: cubes, tori, surfaces, Salvetti
complexes, products, cubical subdivision and covers of one-vertex complexes."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations, product as iproduct
from typing import Iterable

import networkx as nx

from .core import (
    DEFAULT_DIM_CAP,
    CubeComplex,
    GluingPresentation,
    SignedPermutation,
    drop,
)
from .errors import (
    DimensionCapExceeded,
    NotOneVertex,
    SquareRelationViolated,
    UnknownCell,
    UnsupportedGenus,
)


@dataclass(frozen=True)
class SimplicialGraph:
    vertices: tuple
    edges: frozenset = frozenset()

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex label")
        edges = set()
        for e in self.edges:
            pair = tuple(e)
            if len(pair) != 2 or pair[0] == pair[1]:
                raise ValueError(f"loops are not allowed: {pair}")
            if pair[0] not in vs or pair[1] not in vs:
                raise ValueError(f"edge {pair} uses an unknown vertex")
            edges.add(frozenset(pair))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> SimplicialGraph:
        vs = tuple(range(n))
        return cls(vs, frozenset(frozenset(p) for p in combinations(vs, 2)))

    @classmethod
    def path(cls, n: int) -> SimplicialGraph:
        return cls(tuple(range(n)), frozenset(frozenset((i, i + 1)) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> SimplicialGraph:
        return cls(tuple(range(n)), frozenset(frozenset((i, (i + 1) % n)) for i in range(n)))

    @classmethod
    def edgeless(cls, n: int) -> SimplicialGraph:
        return cls(tuple(range(n)))

    def adjacent(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def cliques(self) -> list[tuple]:
        """Every clique (including the empty one), vertices in declaration order."""
        order = {v: i for i, v in enumerate(self.vertices)}
        found = {()}
        for maximal in nx.find_cliques(self.to_networkx()):
            maximal = sorted(maximal, key=order.__getitem__)
            for k in range(1, len(maximal) + 1):
                found.update(combinations(maximal, k))
        return sorted(found, key=lambda c: (len(c), [order[v] for v in c]))


@dataclass
class PermutationAssignment:
    """Degree-``d`` cover data: a permutation of ``range(degree)`` per 1-cell."""

    degree: int
    perms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be >= 1")
        for e, p in self.perms.items():
            if sorted(p) != list(range(self.degree)):
                raise ValueError(f"permutation for {e!r} is not a bijection on {self.degree} sheets")
            self.perms[e] = tuple(p)

    def of(self, edge) -> tuple:
        return self.perms.get(edge, tuple(range(self.degree)))

    @staticmethod
    def from_cycles(degree: int, cycles: str) -> tuple:
        """Parse 1-based cycle notation such as ``"(1 2)(3 4)"``; ``"()"`` is the identity."""
        images = list(range(degree))
        for body in re.findall(r"\(([^)]*)\)", cycles):
            items = [int(x) - 1 for x in body.replace(",", " ").split()]
            for a, b in zip(items, items[1:] + items[:1]):
                images[a] = b
        return tuple(images)


# elementary complexes -----------------------------------------------------


def point() -> CubeComplex:
    pres = GluingPresentation()
    pres.add_cube("p", 0)
    return CubeComplex(pres)


def standard_cube(n: int, dim_cap: int | None = None) -> CubeComplex:
    """A single ``n``-cube with all faces distinct (free boundary)."""
    pres = GluingPresentation()
    faces = sorted(iproduct((0, 1, None), repeat=n), key=lambda f: sum(v is None for v in f))
    name = {f: "".join("*" if v is None else str(v) for v in f) or "pt" for f in faces}
    for f in faces:
        pres.add_cube(name[f], sum(v is None for v in f))
    for f in faces:
        free = [i for i, v in enumerate(f) if v is None]
        for j, i in enumerate(free):
            for side in (0, 1):
                g = f[:i] + (side,) + f[i + 1 :]
                pres.glue(name[f], j, side, name[g])
    return CubeComplex(pres, dim_cap=dim_cap)


def graph_complex(vertices: Iterable, edges: Iterable[tuple]) -> CubeComplex:
    """A 1-dimensional complex from ``(id, src, dst)`` edges."""
    return CubeComplex(GluingPresentation.from_squares(vertices, edges, ()))


def bouquet(n: int) -> CubeComplex:
    return graph_complex(["v"], [(f"e{i}", "v", "v") for i in range(n)])


def circle() -> CubeComplex:
    return graph_complex(["v"], [("e", "v", "v")])


def torus_complex(n: int, dim_cap: int | None = None) -> CubeComplex:
    """One ``n``-cube with opposite facets identified.

    A face of the cube is determined, after identification, by its set of free
    coordinates; cells are named by that set.
    """
    cap = DEFAULT_DIM_CAP if dim_cap is None else dim_cap
    if n > cap:
        raise DimensionCapExceeded(f"{n}-torus exceeds dimension cap {cap}")
    if n < 1:
        raise ValueError("torus dimension must be >= 1")
    pres = GluingPresentation()
    subsets = [s for k in range(n + 1) for s in combinations(range(1, n + 1), k)]
    for s in subsets:
        pres.add_cube(s, len(s))
    for s in subsets:
        for j in range(len(s)):
            for side in (0, 1):
                pres.glue(s, j, side, drop(s, j))
    return CubeComplex(pres, dim_cap=cap)


def salvetti(graph: SimplicialGraph, dim_cap: int | None = None) -> CubeComplex:
    """Salvetti complex: one vertex and one ``k``-cube per ``k``-clique.

    Both sides of coordinate ``i`` of a clique cube glue to the cube of the
    clique with its ``i``-th vertex removed.
    """
    cap = DEFAULT_DIM_CAP if dim_cap is None else dim_cap
    cliques = graph.cliques()
    top = max(len(c) for c in cliques)
    if top > cap:
        raise DimensionCapExceeded(f"clique number {top} exceeds dimension cap {cap}")
    pres = GluingPresentation()
    for c in cliques:
        pres.add_cube(c, len(c))
    for c in cliques:
        for j in range(len(c)):
            for side in (0, 1):
                pres.glue(c, j, side, drop(c, j))
    return CubeComplex(pres, dim_cap=cap)


def square_complex(vertices, edges, squares) -> CubeComplex:
    return CubeComplex(GluingPresentation.from_squares(vertices, edges, squares))


def klein_bottle() -> CubeComplex:
    """One square with boundary word ``a b a^-1 b``."""
    return square_complex(["v"], [("a", "v", "v"), ("b", "v", "v")], [("s", ["a", "b", "~a", "b"])])


def surface_complex(g: int, orientable: bool = True) -> CubeComplex:
    """Squared polygon for a closed surface.

    Orientable genus ``g`` uses the ``4g``-gon ``[a1,b1]...[ag,bg]``;
    non-orientable genus ``g`` uses the crosscap word ``a1 a1 ... ag ag``.
    A centre vertex ``x`` is joined to the midpoint of every side, cutting the
    polygon into one square per polygon corner.
    """
    if orientable and g < 1:
        raise UnsupportedGenus("the sphere has no NPC squaring of this kind (genus must be >= 1)")
    if not orientable and g < 2:
        raise UnsupportedGenus("non-orientable genus must be >= 2")
    if orientable:
        word = []
        for i in range(1, g + 1):
            word += [(f"a{i}", 1), (f"b{i}", 1), (f"a{i}", -1), (f"b{i}", -1)]
    else:
        word = [(f"a{i}", 1) for i in range(1, g + 1) for _ in (0, 1)]
    m = len(word)
    gens = list(dict.fromkeys(w for w, _ in word))

    # polygon corner P_k starts side k; identify corners through the side pairing
    parent = list(range(m + 2 * len(gens)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tail = {a: m + 2 * i for i, a in enumerate(gens)}
    head = {a: m + 2 * i + 1 for i, a in enumerate(gens)}
    for k, (a, e) in enumerate(word):
        start, end = (tail[a], head[a]) if e == 1 else (head[a], tail[a])
        parent[find(k)] = find(start)
        parent[find((k + 1) % m)] = find(end)
    roots = list(dict.fromkeys(find(k) for k in range(m)))
    corner_name = {r: f"v{i}" if len(roots) > 1 else "v" for i, r in enumerate(roots)}

    def corner(k):
        return corner_name[find(k % m)]

    vertices = ["x"] + [f"y_{a}" for a in gens] + list(corner_name.values())
    edges = []
    for a in gens:
        edges.append((f"{a}0", corner_name[find(tail[a])], f"y_{a}"))
        edges.append((f"{a}1", f"y_{a}", corner_name[find(head[a])]))
    for k in range(m):
        edges.append((f"s{k}", "x", f"y_{word[k][0]}"))

    def halves(k):
        a, e = word[k]
        return (f"{a}0", f"{a}1") if e == 1 else (f"~{a}1", f"~{a}0")

    squares = []
    for k in range(m):
        k1 = (k + 1) % m
        squares.append((f"q{k}", [f"s{k}", halves(k)[1], halves(k1)[0], f"~s{k1}"]))
    return square_complex(vertices, edges, squares)


# operations ---------------------------------------------------------------


def product(X: CubeComplex, Y: CubeComplex, dim_cap: int | None = None) -> CubeComplex:
    """Cells are pairs; coordinates of ``(x, y)`` are those of ``x`` then ``y``."""
    cap = DEFAULT_DIM_CAP if dim_cap is None else dim_cap
    if X.dim + Y.dim > cap:
        raise DimensionCapExceeded(f"product dimension {X.dim + Y.dim} exceeds cap {cap}")
    pres = GluingPresentation()
    pairs = sorted(
        ((x, y) for x in X.all_cells() for y in Y.all_cells()),
        key=lambda p: (X.dim_of(p[0]) + Y.dim_of(p[1]), X.index[p[0]], Y.index[p[1]]),
    )
    for x, y in pairs:
        pres.add_cube((x, y), X.dim_of(x) + Y.dim_of(y))
    for x, y in pairs:
        dx, dy = X.dim_of(x), Y.dim_of(y)
        for i in range(dx):
            for side in (0, 1):
                t, p = X.facet(x, i, side)
                pres.glue((x, y), i, side, (t, y), _direct_sum(p, SignedPermutation.identity(dy)))
        for i in range(dy):
            for side in (0, 1):
                t, p = Y.facet(y, i, side)
                pres.glue((x, y), dx + i, side, (x, t), _direct_sum(SignedPermutation.identity(dx), p))
    return CubeComplex(pres, dim_cap=cap)


def _direct_sum(p: SignedPermutation, q: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(p.targets + tuple(t + p.size for t in q.targets), p.signs + q.signs)


# subdivision pieces of a coordinate: lower half, midpoint, upper half
_LOW, _MID, _HIGH = "L", "M", "R"


def subdivide(X: CubeComplex) -> CubeComplex:
    """Cubical subdivision: every coordinate of every cube is cut at 1/2.

    New cells are ``(c, t)`` where ``t`` assigns each coordinate of ``c`` one of
    ``L`` (``[0,1/2]``), ``M`` (``{1/2}``) or ``R`` (``[1/2,1]``).
    """
    pres = GluingPresentation()
    new_cells = []
    for c in X.all_cells():
        for t in iproduct((_LOW, _MID, _HIGH), repeat=X.dim_of(c)):
            new_cells.append((c, "".join(t)))
    new_cells.sort(key=lambda ct: (sum(ch != _MID for ch in ct[1]), X.index[ct[0]], ct[1]))
    for c, t in new_cells:
        pres.add_cube((c, t), sum(ch != _MID for ch in t))
    flip = {_LOW: _HIGH, _HIGH: _LOW, _MID: _MID}
    for c, t in new_cells:
        free = [p for p, ch in enumerate(t) if ch != _MID]
        for j, p in enumerate(free):
            for side in (0, 1):
                m = len(free) - 1
                if (t[p], side) in ((_LOW, 1), (_HIGH, 0)):
                    target = (c, t[:p] + _MID + t[p + 1 :])
                    pres.glue((c, t), j, side, target, SignedPermutation.identity(m))
                    continue
                boundary_side = 0 if t[p] == _LOW else 1
                d, perm = X.facet(c, p, boundary_side)
                rest = drop(tuple(t), p)
                image = [None] * perm.size
                for q, (tq, sq) in enumerate(zip(perm.targets, perm.signs)):
                    image[tq] = rest[q] if sq == 1 else flip[rest[q]]
                face = tuple(None if ch != _MID else 0 for ch in rest)
                pres.glue((c, t), j, side, (d, "".join(image)), perm.induced(face))
    return CubeComplex(pres, dim_cap=X.dim_cap)


# covers -------------------------------------------------------------------


def _sheet_at(X: CubeComplex, cube, start: int, kappa: tuple, rho: PermutationAssignment) -> int:
    """Sheet reached at corner ``kappa`` of ``cube`` starting from its origin."""
    n = X.dim_of(cube)
    here = [0] * n
    sheet = start
    for i in range(n):
        if kappa[i] == 1:
            edge, end = X.edge_ends(cube, tuple(here))[i]
            perm = rho.of(edge)
            sheet = perm[sheet] if end == 0 else perm.index(sheet)
            here[i] = 1
    return sheet


def one_vertex_cover(X: CubeComplex, rho: PermutationAssignment):
    """Degree-``d`` cover of a one-vertex complex and its covering map.

    The lift of cube ``c`` on sheet ``s`` is ``(c, s)``; ``s`` is the sheet of
    its origin corner.
    """
    from .maps import CubicalMap

    if len(X.vertices) != 1:
        raise NotOneVertex(f"base has {len(X.vertices)} vertices")
    d = rho.degree
    for e in rho.perms:
        if e not in X or X.dim_of(e) != 1:
            raise UnknownCell(f"permutation given for {e!r}, which is not a 1-cell")
    for sq in X.cells_of_dim(2):
        for s in range(d):
            if _sheet_at(X, sq, s, (1, 1), rho) != _walk_square(X, sq, s, rho):
                raise SquareRelationViolated(f"boundary permutation of square {sq!r} is not the identity")
    pres = GluingPresentation()
    for c in X.all_cells():
        for s in range(d):
            pres.add_cube((c, s), X.dim_of(c))
    for c in X.all_cells():
        for s in range(d):
            for i, side, t, perm in X.facets(c):
                origin_in_facet = tuple(0 if sg == 1 else 1 for sg in perm.signs)
                kappa = origin_in_facet[:i] + (side,) + origin_in_facet[i:]
                pres.glue((c, s), i, side, (t, _sheet_at(X, c, s, kappa, rho)), perm)
    cover = CubeComplex(pres, dim_cap=X.dim_cap)
    assignment = {(c, s): (c, SignedPermutation.identity(X.dim_of(c))) for c in X.all_cells() for s in range(d)}
    return cover, CubicalMap(cover, X, assignment)


def _walk_square(X: CubeComplex, sq, s: int, rho: PermutationAssignment) -> int:
    """Sheet at corner (1,1) reached through corner (0,1) instead of (1,0)."""
    edge, end = X.edge_ends(sq, (0, 0))[1]
    perm = rho.of(edge)
    s = perm[s] if end == 0 else perm.index(s)
    edge, end = X.edge_ends(sq, (0, 1))[0]
    perm = rho.of(edge)
    return perm[s] if end == 0 else perm.index(s)
