"""Finite wall spaces and their Sageev duals."""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .core import DEFAULT_DIM_CAP, CubeComplex, GluingPresentation, SignedPermutation, connected_components
from .curvature import Verdict
from .errors import (
    IndexOutOfRange,
    InvalidWallSpace,
    NotWallPreserving,
    UnknownPoint,
    WallCapExceeded,
)
from .hyperplanes import hyperplane_of_edge
from .maps import CubicalMap, validate as validate_map

DEFAULT_WALL_CAP = int(os.environ.get("NPCUBE_WALL_CAP", "16"))


@dataclass(frozen=True)
class WallSpace:
    points: tuple
    walls: tuple = ()  # (left, right) pairs of frozensets

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "walls", tuple((frozenset(a), frozenset(b)) for a, b in self.walls))

    @classmethod
    def from_halves(cls, points: Iterable, lefts: Iterable[Iterable]) -> WallSpace:
        """Walls given by their left halves; right halves are the complements."""
        points = tuple(points)
        return cls(points, tuple((frozenset(a), frozenset(points) - frozenset(a)) for a in lefts))

    def _wall(self, i: int):
        if not 0 <= i < len(self.walls):
            raise IndexOutOfRange(f"wall index {i} out of range (have {len(self.walls)})")
        return self.walls[i]

    def _point(self, p):
        if p not in self.points:
            raise UnknownPoint(f"unknown point {p!r}")
        return p

    def deduplicated(self) -> WallSpace:
        """Drop repeated bipartitions (either half order) with a warning."""
        seen = set()
        keep = []
        for a, b in self.walls:
            key = frozenset((a, b))
            if key in seen:
                warnings.warn(f"duplicate wall {sorted(a, key=str)} | {sorted(b, key=str)} dropped", stacklevel=2)
                continue
            seen.add(key)
            keep.append((a, b))
        return WallSpace(self.points, tuple(keep))


def validate(ws: WallSpace) -> Verdict:
    S = set(ws.points)
    if len(S) != len(ws.points):
        return Verdict(False, None, "repeated point")
    for i, (a, b) in enumerate(ws.walls):
        stray = (a | b) - S
        if stray:
            return Verdict(False, (i, next(iter(stray))), "half contains an unknown point")
        both = a & b
        if both:
            return Verdict(False, (i, next(iter(both))), "halves overlap")
        missing = S - (a | b)
        if missing:
            return Verdict(False, (i, next(iter(missing))), "halves do not cover the points")
        if not a or not b:
            return Verdict(False, (i,), "empty half")
    return Verdict(True)


def cross(ws: WallSpace, i: int, j: int) -> bool:
    (a, b), (c, d) = ws._wall(i), ws._wall(j)
    return bool(a & c and a & d and b & c and b & d)


def separation_count(ws: WallSpace, p, q) -> int:
    ws._point(p)
    ws._point(q)
    return sum((p in a) != (q in a) for a, _ in ws.walls)


def _half(ws: WallSpace, w: int, side: int) -> frozenset:
    return ws.walls[w][side]


def orientations(ws: WallSpace) -> list[tuple]:
    """All choices of one half per wall (0 = left, 1 = right) that pairwise
    intersect, by backtracking."""
    n = len(ws.walls)
    out = []
    chosen: list = []

    def extend(k):
        if k == n:
            out.append(tuple(chosen))
            return
        for side in (0, 1):
            h = _half(ws, k, side)
            if all(h & _half(ws, w, s) for w, s in enumerate(chosen)):
                chosen.append(side)
                extend(k + 1)
                chosen.pop()

    extend(0)
    return out


@dataclass
class DualComplex:
    complex: CubeComplex
    walls: WallSpace
    orientation_of: dict  # vertex -> orientation
    vertex_of: dict  # orientation -> vertex
    wall_hyperplane: list = field(default_factory=list)

    def principal(self, x) -> object:
        return principal_vertex(self, x)


def dual(ws: WallSpace, wall_cap: int | None = None) -> DualComplex:
    """Vertices are consistent orientations; a cube spans the orientations
    obtained by flipping any subset of its walls."""
    cap = DEFAULT_WALL_CAP if wall_cap is None else wall_cap
    ok = validate(ws)
    if not ok:
        raise InvalidWallSpace(f"{ok.reason}: {ok.witness}")
    ws = ws.deduplicated()
    n = len(ws.walls)
    if n > cap:
        raise WallCapExceeded(f"{n} walls exceed the cap of {cap}")
    verts = orientations(ws)
    present = {((), o) for o in verts}
    levels = [sorted(present, key=lambda c: c[1])]
    while levels[-1]:
        nxt = []
        for W, base in levels[-1]:
            for w in range(W[-1] + 1 if W else 0, n):
                if base[w] != 0:
                    continue
                up = base[:w] + (1,) + base[w + 1 :]
                if (W, up) in present:
                    nxt.append((W + (w,), base))
        present.update(nxt)
        levels.append(nxt)
    levels.pop()

    pres = GluingPresentation()
    for level in levels:
        for cube in level:
            pres.add_cube(cube, len(cube[0]))
    for level in levels[1:]:
        for W, base in level:
            for i, w in enumerate(W):
                rest = W[:i] + W[i + 1 :]
                for side in (0, 1):
                    pres.glue((W, base), i, side, (rest, base[:w] + (side,) + base[w + 1 :]))
    X = CubeComplex(pres, dim_cap=max(DEFAULT_DIM_CAP, n))
    if n and len(connected_components(X)) != 1:
        raise RuntimeError("dual complex is disconnected")
    of_edge = hyperplane_of_edge(X)
    table = [None] * n
    for e in X.edges:
        table[e[0][0]] = of_edge[e]
    vertex_of = {o: ((), o) for o in verts}
    return DualComplex(X, ws, {v: o for o, v in vertex_of.items()}, vertex_of, table)


def principal_vertex(D: DualComplex, x):
    D.walls._point(x)
    o = tuple(0 if x in a else 1 for a, _ in D.walls.walls)
    return D.vertex_of[o]


@dataclass
class Automorphism:
    map: CubicalMap
    wall_map: tuple  # wall index -> (wall index, swapped?)

    def vertex_permutation(self) -> dict:
        return {v: self.map.assignment[v][0] for v in self.map.source.vertices}

    def order(self) -> int:
        """Order as a permutation of cells."""
        cells = {c: d for c, (d, _) in self.map.assignment.items()}
        k, current = 1, dict(cells)
        while any(c != d for c, d in current.items()):
            current = {c: cells[d] for c, d in current.items()}
            k += 1
        return k


def induced_automorphism(D: DualComplex, pi: Mapping) -> Automorphism:
    """The action on the dual of a permutation of points that permutes walls."""
    ws = D.walls
    S = set(ws.points)
    if set(pi) != S or set(pi.values()) != S:
        raise NotWallPreserving("not a permutation of the points")
    index = {}
    for w, (a, b) in enumerate(ws.walls):
        index[a] = (w, 0)
        index[b] = (w, 1)
    wall_map = []
    for a, b in ws.walls:
        ia = index.get(frozenset(pi[p] for p in a))
        ib = index.get(frozenset(pi[p] for p in b))
        if ia is None or ib is None or ia[0] != ib[0]:
            raise NotWallPreserving(f"wall {sorted(a, key=str)} | {sorted(b, key=str)} is not sent to a wall")
        wall_map.append((ia[0], ia[1] == 1))

    def image(o):
        out = [0] * len(o)
        for w, side in enumerate(o):
            t, swapped = wall_map[w]
            out[t] = 1 - side if swapped else side
        return tuple(out)

    X = D.complex
    assignment = {}
    for W, base in X.all_cells():
        targets = [wall_map[w][0] for w in W]
        new_W = tuple(sorted(targets))
        rank = {t: r for r, t in enumerate(new_W)}
        b = list(image(base))
        for t in new_W:
            b[t] = 0
        perm = SignedPermutation(
            tuple(rank[t] for t in targets),
            tuple(-1 if wall_map[w][1] else 1 for w in W),
        )
        assignment[(W, base)] = ((new_W, tuple(b)), perm)
    phi = CubicalMap(X, X, assignment)
    ok = validate_map(phi)
    if not ok or len({d for d, _ in assignment.values()}) != len(assignment):
        raise RuntimeError(f"induced map is not an automorphism: {ok.reason}")
    return Automorphism(phi, tuple(wall_map))


def max_crossing_family(ws: WallSpace) -> int:
    """Largest set of pairwise-crossing walls (brute force)."""
    n = len(ws.walls)
    best = 0
    for k in range(1, n + 1):
        if any(all(cross(ws, i, j) for i, j in combinations(fam, 2)) for fam in combinations(range(n), k)):
            best = k
        else:
            break
    return best
