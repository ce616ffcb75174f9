"""Hyperplanes as parallelism classes of midcubes, their carriers, and the
four pathologies that decide specialness."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from networkx.utils import UnionFind

from .constructions import SimplicialGraph, salvetti
from .core import CubeComplex, GluingPresentation, SignedPermutation, connected_components, link
from .curvature import is_npc
from .errors import NotNPC, NotSpecial
from .maps import CubicalMap


@dataclass
class Hyperplane:
    id: int
    midcubes: list  # (cube, coordinate), coordinates 0-based
    dual_edges: list
    two_sided: bool
    # midcube -> +1/-1 relative to the chosen co-orientation (two-sided only)
    orientation: dict = field(default_factory=dict)

    def direction(self, edge) -> int:
        """+1 if the co-orientation runs from end 0 to end 1 of ``edge``."""
        return self.orientation[(edge, 0)]

    def __len__(self) -> int:
        return len(self.midcubes)


def _parallelism(X: CubeComplex):
    """Union-finds on midcubes and on co-oriented midcubes ``(c, i, s)``."""
    plain, doubled = UnionFind(), UnionFind()
    for c in X.all_cells():
        for i in range(X.dim_of(c)):
            plain[(c, i)]
            doubled[(c, i, 0)]
            doubled[(c, i, 1)]
    for (c, j, _), (t, perm) in X.presentation.gluings.items():
        for i in range(X.dim_of(c)):
            if i == j:
                continue
            q = i if i < j else i - 1
            k, sign = perm.targets[q], perm.signs[q]
            plain.union((c, i), (t, k))
            for s in (0, 1):
                doubled.union((c, i, s), (t, k, s if sign == 1 else 1 - s))
    return plain, doubled


def hyperplanes(X: CubeComplex) -> list[Hyperplane]:
    """Hyperplanes in order of their first dual edge (declaration order)."""
    key = "hyperplanes"
    if key in X._cache:
        return X._cache[key]
    plain, doubled = _parallelism(X)
    classes: dict = defaultdict(list)
    for c in X.all_cells():
        for i in range(X.dim_of(c)):
            classes[plain[(c, i)]].append((c, i))
    out = []
    for members in sorted(classes.values(), key=lambda ms: X.index[ms[0][0]]):
        edges = [c for c, _ in members if X.dim_of(c) == 1]
        first = members[0]
        positive = doubled[first + (0,)]
        two_sided = positive != doubled[first + (1,)]
        orientation = {}
        if two_sided:
            orientation = {m: 1 if doubled[m + (0,)] == positive else -1 for m in members}
        out.append(Hyperplane(len(out), members, edges, two_sided, orientation))
    X._cache[key] = out
    return out


def hyperplane_of_edge(X: CubeComplex) -> dict:
    return {e: H.id for H in hyperplanes(X) for e in H.dual_edges}


def hyperplane_of_midcube(X: CubeComplex) -> dict:
    return {m: H.id for H in hyperplanes(X) for m in H.midcubes}


def edge_parallelism_classes(X: CubeComplex) -> list[frozenset]:
    """Edges up to the relation generated by opposite sides of squares."""
    uf = UnionFind(X.edges)
    for sq in X.cells_of_dim(2):
        for face_a, face_b in (((None, 0), (None, 1)), ((0, None), (1, None))):
            uf.union(X.face(sq, face_a)[0], X.face(sq, face_b)[0])
    return sorted((frozenset(s) for s in uf.to_sets()), key=lambda s: min(X.index[e] for e in s))


# carriers ------------------------------------------------------------------


def carrier(X: CubeComplex, H: Hyperplane) -> tuple[CubeComplex, CubicalMap]:
    """Abstract carrier ``H x [0,1]`` and its map into ``X``.

    ``("F", c, i)`` is the cube ``c`` viewed around its midcube ``i``;
    ``("S", c, i, d)`` is its facet on side ``d`` of coordinate ``i``.
    """
    members = set(H.midcubes)
    pres = GluingPresentation()
    for c, i in H.midcubes:
        pres.add_cube(("F", c, i), X.dim_of(c))
    for c, i in H.midcubes:
        for d in (0, 1):
            pres.add_cube(("S", c, i, d), X.dim_of(c) - 1)
    for c, i in H.midcubes:
        n = X.dim_of(c)
        for j, side, t, perm in X.facets(c):
            if j == i:
                pres.glue(("F", c, i), j, side, ("S", c, i, side), SignedPermutation.identity(n - 1))
                continue
            q = i if i < j else i - 1
            k = perm.targets[q]
            assert (t, k) in members
            pres.glue(("F", c, i), j, side, ("F", t, k), perm)
            # the matching facet of each side cell
            jj = j if j < i else j - 1
            for d in (0, 1):
                d2 = d if perm.signs[q] == 1 else 1 - d
                inner = drop_index(perm, q)
                pres.glue(("S", c, i, d), jj, side, ("S", t, k, d2), inner)
    Y = CubeComplex(pres, dim_cap=X.dim_cap)
    assignment = {}
    for c, i in H.midcubes:
        assignment[("F", c, i)] = (c, SignedPermutation.identity(X.dim_of(c)))
        for d in (0, 1):
            assignment[("S", c, i, d)] = X.facet(c, i, d)
    return Y, CubicalMap(Y, X, assignment)


def drop_index(perm: SignedPermutation, q: int) -> SignedPermutation:
    """Restrict ``perm`` to the complement of source coordinate ``q``."""
    face = tuple(0 if p == q else None for p in range(perm.size))
    return perm.induced(face)


# pathologies ---------------------------------------------------------------


@dataclass
class HyperplaneStatus:
    id: int
    two_sided: bool
    self_crossing: Any = None  # (cube, i, j)
    self_osculating: Any = None  # (vertex, end, end), same direction
    indirect_osculating: Any = None  # opposite directions, or H one-sided

    @property
    def clean(self) -> bool:
        return self.two_sided and self.self_crossing is None and self.self_osculating is None


@dataclass
class SpecialnessReport:
    hyperplanes: list
    inter_osculating: dict  # (h, h') -> (crossing cube, vertex, end, end)
    crossings: set

    @property
    def special(self) -> bool:
        return all(h.clean for h in self.hyperplanes) and not self.inter_osculating

    def __bool__(self) -> bool:
        return self.special

    def conditions(self) -> dict:
        hs = self.hyperplanes
        return {
            "two_sided": all(h.two_sided for h in hs),
            "no_self_crossing": all(h.self_crossing is None for h in hs),
            "no_self_osculation": all(h.self_osculating is None for h in hs),
            "no_inter_osculation": not self.inter_osculating,
        }

    def first_witness(self):
        for h in self.hyperplanes:
            if not h.two_sided:
                return ("one_sided", h.id)
            if h.self_crossing is not None:
                return ("self_crossing", h.id, h.self_crossing)
            if h.self_osculating is not None:
                return ("self_osculation", h.id, h.self_osculating)
        for pair, w in self.inter_osculating.items():
            return ("inter_osculation", pair, w)
        return None


def _initial(H: Hyperplane, end: tuple, reverse: bool) -> bool:
    """Whether the dual edge leaves the vertex at ``end`` along the co-orientation."""
    e, k = end
    forward = H.direction(e) == 1
    if reverse:
        forward = not forward
    return forward == (k == 0)


def pathologies(X: CubeComplex, reverse: frozenset = frozenset()) -> SpecialnessReport:
    """Scan every hyperplane and crossing pair; ``reverse`` flips the
    co-orientation of the listed hyperplanes."""
    hs = hyperplanes(X)
    of_mid = hyperplane_of_midcube(X)
    of_edge = hyperplane_of_edge(X)
    status = [HyperplaneStatus(H.id, H.two_sided) for H in hs]

    crossing_cube: dict = {}
    for c in X.all_cells():
        ids = [of_mid[(c, i)] for i in range(X.dim_of(c))]
        for i, j in combinations(range(len(ids)), 2):
            a, b = ids[i], ids[j]
            if a == b:
                if status[a].self_crossing is None:
                    status[a].self_crossing = (c, i, j)
            else:
                crossing_cube.setdefault((min(a, b), max(a, b)), c)

    inter: dict = {}
    for v in X.vertices:
        L = link(X, v)
        adj = L.adjacency()
        by_h: dict = defaultdict(list)
        for end in L.vertices:
            by_h[of_edge[end[0]]].append(end)
        for h, ends in by_h.items():
            H, st = hs[h], status[h]
            for a, b in combinations(ends, 2):
                if a[0] == b[0] or b in adj[a]:
                    continue
                if H.two_sided and _initial(H, a, h in reverse) == _initial(H, b, h in reverse):
                    if st.self_osculating is None:
                        st.self_osculating = (v, a, b)
                elif st.indirect_osculating is None:
                    st.indirect_osculating = (v, a, b)
        present = sorted(by_h)
        for h1, h2 in combinations(present, 2):
            pair = (h1, h2)
            if pair not in crossing_cube or pair in inter:
                continue
            for a in by_h[h1]:
                hit = next((b for b in by_h[h2] if b not in adj[a]), None)
                if hit is not None:
                    inter[pair] = (crossing_cube[pair], v, a, hit)
                    break
    return SpecialnessReport(status, inter, set(crossing_cube))


def is_special(X: CubeComplex) -> bool:
    if not is_npc(X):
        raise NotNPC("specialness is defined for non-positively curved complexes")
    return pathologies(X).special


def crossing_graph(X: CubeComplex) -> SimplicialGraph:
    hs = hyperplanes(X)
    of_mid = hyperplane_of_midcube(X)
    edges = set()
    for c in X.all_cells():
        ids = {of_mid[(c, i)] for i in range(X.dim_of(c))}
        edges.update(frozenset(p) for p in combinations(sorted(ids), 2))
    return SimplicialGraph(tuple(H.id for H in hs), frozenset(edges))


def complement_components(X: CubeComplex, H: Hyperplane) -> list[set]:
    """Components of the 1-skeleton once the dual edges of ``H`` are removed."""
    return connected_components(X, removed_edges=H.dual_edges)


def special_to_salvetti(X: CubeComplex) -> CubicalMap:
    """Label each cube by its hyperplanes; coordinates go to their clique
    positions, reversed where the co-orientation runs against them."""
    if not is_special(X):
        raise NotSpecial("complex is not special")
    hs = hyperplanes(X)
    of_mid = hyperplane_of_midcube(X)
    R = salvetti(crossing_graph(X), dim_cap=max(X.dim_cap, X.dim))
    assignment = {}
    for c in X.all_cells():
        n = X.dim_of(c)
        ids = [of_mid[(c, i)] for i in range(n)]
        clique = tuple(sorted(ids))
        rank = {h: r for r, h in enumerate(clique)}
        perm = SignedPermutation(
            tuple(rank[h] for h in ids),
            tuple(hs[h].orientation[(c, i)] for i, h in enumerate(ids)),
        )
        assignment[c] = (clique, perm)
    return CubicalMap(X, R, assignment)
