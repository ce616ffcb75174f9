"""Combinatorial metric on the 1-skeleton: distances, geodesics and convexity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import CubeComplex, connected_components, corners_of
from .curvature import Verdict
from .errors import Disconnected, NotSubcomplex, UnknownCell
from .hyperplanes import hyperplane_of_edge

DEFAULT_PATH_CAP = 8


def distances_from(X: CubeComplex, u) -> dict:
    cache = X._cache.setdefault("bfs", {})
    if u in cache:
        return cache[u]
    if u not in X or X.dim_of(u) != 0:
        raise UnknownCell(f"{u!r} is not a 0-cell")
    adj = X.one_skeleton_adjacency()
    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b, _, _ in adj[a]:
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    cache[u] = dist
    return dist


def distance(X: CubeComplex, u, v) -> int:
    d = distances_from(X, u)
    if v not in X or X.dim_of(v) != 0:
        raise UnknownCell(f"{v!r} is not a 0-cell")
    if v not in d:
        raise Disconnected(f"{u!r} and {v!r} lie in different components")
    return d[v]


@dataclass(frozen=True)
class EdgePath:
    """A walk in the 1-skeleton: ``steps`` are ``(edge, +1/-1)``, -1 meaning
    the edge is crossed from its end 1 to its end 0."""

    complex: CubeComplex
    start: object
    steps: tuple = ()

    def __post_init__(self):
        X = self.complex
        if self.start not in X or X.dim_of(self.start) != 0:
            raise UnknownCell(f"{self.start!r} is not a 0-cell")
        here = self.start
        for e, d in self.steps:
            if e not in X or X.dim_of(e) != 1:
                raise UnknownCell(f"{e!r} is not a 1-cell")
            a, b = X.endpoints(e)
            src, dst = (a, b) if d == 1 else (b, a)
            if src != here:
                raise ValueError(f"step {e!r} starts at {src!r}, path is at {here!r}")
            here = dst

    @classmethod
    def from_edges(cls, X: CubeComplex, steps: Iterable[tuple], start=None) -> EdgePath:
        steps = tuple(steps)
        if start is None:
            if not steps:
                raise ValueError("an empty path needs an explicit start vertex")
            e, d = steps[0]
            a, b = X.endpoints(e)
            start = a if d == 1 else b
        return cls(X, start, steps)

    def __len__(self) -> int:
        return len(self.steps)

    def vertices(self) -> list:
        out = [self.start]
        for e, d in self.steps:
            a, b = self.complex.endpoints(e)
            out.append(b if d == 1 else a)
        return out

    @property
    def end(self):
        return self.vertices()[-1]

    def extend(self, edge, direction: int) -> EdgePath:
        return EdgePath(self.complex, self.start, self.steps + ((edge, direction),))


def is_geodesic(p: EdgePath) -> bool:
    return len(p) == distance(p.complex, p.start, p.end)


def geodesic_by_hyperplanes(p: EdgePath) -> bool:
    """Every edge crosses a different hyperplane."""
    of_edge = hyperplane_of_edge(p.complex)
    hs = [of_edge[e] for e, _ in p.steps]
    return len(set(hs)) == len(hs)


def geodesics(X: CubeComplex, u, v, limit: int | None = None) -> Iterator[EdgePath]:
    """All geodesic edge paths from ``u`` to ``v`` (through the interval DAG)."""
    target = distance(X, u, v)
    to_v = distances_from(X, v)
    adj = X.one_skeleton_adjacency()
    count = 0
    stack = [(u, ())]
    while stack:
        a, steps = stack.pop()
        if a == v and len(steps) == target:
            yield EdgePath(X, u, steps)
            count += 1
            if limit is not None and count >= limit:
                return
            continue
        left = target - len(steps)
        for b, e, d in reversed(adj[a]):
            if to_v.get(b) == left - 1:
                stack.append((b, steps + ((e, d),)))


def check_geodesic_lemma(X: CubeComplex, max_len: int = 5) -> Verdict:
    """Compare both geodesic tests on every edge path up to ``max_len`` edges.

    Both predicates are inherited by prefixes, so a branch where both fail is
    pruned; a branch where exactly one fails is a counterexample.
    """
    of_edge = hyperplane_of_edge(X)
    adj = X.one_skeleton_adjacency()
    checked = 0
    for u in X.vertices:
        dist = distances_from(X, u)
        stack = [(u, (), frozenset())]
        while stack:
            a, steps, used = stack.pop()
            checked += 1
            if len(steps) == max_len:
                continue
            for b, e, d in adj[a]:
                bfs = dist[b] == len(steps) + 1
                hyp = of_edge[e] not in used
                if bfs != hyp:
                    return Verdict(False, EdgePath(X, u, steps + ((e, d),)), "tests disagree")
                if bfs:
                    stack.append((b, steps + ((e, d),), used | {of_edge[e]}))
    return Verdict(True, checked)


# convexity -------------------------------------------------------------------


def check_subcomplex(X: CubeComplex, cells: Iterable) -> frozenset:
    Y = frozenset(cells)
    for c in Y:
        if c not in X:
            raise NotSubcomplex(f"{c!r} is not a cell of the complex")
        for _, _, t, _ in X.facets(c):
            if t not in Y:
                raise NotSubcomplex(f"facet {t!r} of {c!r} is missing")
    return Y


def closure(X: CubeComplex, cells: Iterable) -> frozenset:
    """Smallest subcomplex containing ``cells``."""
    out = set()
    stack = list(cells)
    while stack:
        c = stack.pop()
        if c in out:
            continue
        out.add(c)
        stack.extend(t for _, _, t, _ in X.facets(c))
    return frozenset(out)


def full_subcomplex(X: CubeComplex, vertices: Iterable) -> frozenset:
    """All cells whose corners lie in ``vertices``."""
    vs = set(vertices)
    return frozenset(c for c in X.all_cells() if set(X.corner_vertices(c)) <= vs)


def _fullness(X: CubeComplex, Y: frozenset) -> Verdict:
    for c in X.all_cells():
        if X.dim_of(c) >= 1 and c not in Y and all(t in Y for _, _, t, _ in X.facets(c)):
            return Verdict(False, c, "boundary in the subcomplex but cube is not")
    return Verdict(True)


def _connected(X: CubeComplex, Y: frozenset) -> bool:
    vs = [c for c in Y if X.dim_of(c) == 0]
    if not vs:
        return True
    removed = [e for e in X.edges if e not in Y]
    comp = next(c for c in connected_components(X, removed) if vs[0] in c)
    return all(v in comp for v in vs)


def corner_criterion(X: CubeComplex, Y: frozenset) -> Verdict:
    """Connected, and every cube having a whole corner in ``Y`` lies in ``Y``."""
    if not _connected(X, Y):
        return Verdict(False, None, "not connected")
    for k in range(2, X.dim + 1):
        for c in X.cells_of_dim(k):
            if c in Y:
                continue
            for kappa, v in zip(corners_of(k), X.corner_vertices(c)):
                if v in Y and all(e in Y for e, _ in X.edge_ends(c, kappa)):
                    return Verdict(False, (c, kappa), "corner in the subcomplex, cube missing")
    return Verdict(True)


def brute_force_convex(X: CubeComplex, Y: frozenset) -> Verdict:
    """Full, and every geodesic between vertices of ``Y`` stays in ``Y``."""
    full = _fullness(X, Y)
    if not full:
        return full
    vs = [c for c in Y if X.dim_of(c) == 0]
    adj = X.one_skeleton_adjacency()
    for i, u in enumerate(vs):
        du = distances_from(X, u)
        for v in vs[i + 1 :]:
            if v not in du:
                return Verdict(False, (u, v), "endpoints in different components")
            dv = distances_from(X, v)
            n = du[v]
            for a in X.vertices:
                if du.get(a, n + 1) + dv.get(a, n + 1) != n:
                    continue
                if a not in Y:
                    return Verdict(False, (u, v, a), "geodesic leaves the subcomplex")
                for b, e, _ in adj[a]:
                    if du[a] + 1 + dv.get(b, n + 1) == n and e not in Y:
                        return Verdict(False, (u, v, e), "geodesic leaves the subcomplex")
    return Verdict(True)


@dataclass
class ConvexityReport:
    brute: Verdict
    corner: Verdict | None  # None: criterion not applicable

    @property
    def convex(self) -> bool:
        return self.brute.ok

    def __bool__(self) -> bool:
        return self.convex

    @property
    def agree(self) -> bool:
        return self.corner is None or self.corner.ok == self.brute.ok


def is_convex(X: CubeComplex, Y: Iterable, cat0: bool = True) -> ConvexityReport:
    """Convexity of the subcomplex ``Y``.  The corner criterion is only
    reported when the caller vouches that ``X`` is CAT(0)."""
    Y = check_subcomplex(X, Y)
    return ConvexityReport(brute_force_convex(X, Y), corner_criterion(X, Y) if cat0 else None)
