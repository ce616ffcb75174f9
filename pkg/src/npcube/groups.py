"""Presentations, small cancellation, RAAG normal forms, Cayley balls and
thin-triangle estimates.

Words are tuples of nonzero integers: ``k`` is the ``k``-th generator
(1-based) and ``-k`` its inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .constructions import SimplicialGraph
from .errors import (
    Disconnected,
    EmptyRelator,
    LengthCapExceeded,
    RadiusCapExceeded,
    UnknownGenerator,
)

Word = tuple

DEFAULT_LENGTH_CAP = 64
DEFAULT_RADIUS_CAP = 6


def free_reduce(w: Iterable[int]) -> Word:
    out: list = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Iterable[int]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i > 1 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        k = len(self.generators)
        rels = []
        for r in self.relators:
            r = tuple(r)
            for x in r:
                if x == 0 or abs(x) > k:
                    raise UnknownGenerator(f"letter {x} outside generators 1..{k}")
            rels.append(free_reduce(r))
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def parse(cls, gens: Sequence[str], rels: Iterable[str]) -> Presentation:
        """Relators as strings of generator letters, uppercase for inverses."""
        return cls(tuple(gens), tuple(parse_word(r, gens) for r in rels))

    def format(self, w: Word) -> str:
        return format_word(w, self.generators)


def parse_word(text: str, gens: Sequence[str]) -> Word:
    index = {g: i + 1 for i, g in enumerate(gens)}
    out = []
    for ch in text:
        if ch in " *.1":
            continue
        if ch in index:
            out.append(index[ch])
        elif ch.lower() in index and ch != ch.lower():
            out.append(-index[ch.lower()])
        else:
            raise UnknownGenerator(f"unknown letter {ch!r} in word {text!r}")
    return tuple(out)


def format_word(w: Word, gens: Sequence[str]) -> str:
    return "".join(gens[x - 1] if x > 0 else gens[-x - 1].upper() for x in w)


# symmetrization and pieces -----------------------------------------------------


def symmetrize(P: Presentation | Iterable[Word]) -> tuple[Word, ...]:
    """Cyclically reduced relators closed under rotation and inversion, sorted."""
    rels = P.relators if isinstance(P, Presentation) else tuple(tuple(r) for r in P)
    out = set()
    for r in rels:
        r = cyclic_reduce(r)
        if not r:
            raise EmptyRelator("a relator reduces to the empty word")
        for w in (r, inverse(r)):
            for i in range(len(w)):
                out.add(w[i:] + w[:i])
    return tuple(sorted(out))


def _lcp(a: Word, b: Word) -> int:
    n = 0
    for x, y in zip(a, b):
        if x != y:
            break
        n += 1
    return n


@dataclass
class PieceReport:
    max_length: int
    witness: tuple | None = None  # (r, r', piece)


def _longest_prefix_pieces(R: Sequence[Word]) -> dict:
    """For each element, the length of its longest prefix shared with another."""
    R = sorted(R)
    best = {r: 0 for r in R}
    for a, b in zip(R, R[1:]):
        n = _lcp(a, b)
        best[a] = max(best[a], n)
        best[b] = max(best[b], n)
    return best


def pieces(R: Sequence[Word]) -> PieceReport:
    R = sorted(set(R))
    report = PieceReport(0)
    for a, b in zip(R, R[1:]):
        n = _lcp(a, b)
        if n > report.max_length:
            report = PieceReport(n, (a, b, a[:n]))
    return report


def min_piece_cover(r: Word, best: dict) -> float:
    """Fewest pieces whose concatenation is ``r`` (``inf`` if impossible)."""
    n = len(r)
    reach = [float("inf")] * (n + 1)
    reach[0] = 0
    for i in range(n):
        if reach[i] == float("inf"):
            continue
        longest = best[r[i:] + r[:i]]
        for j in range(i + 1, min(n, i + longest) + 1):
            reach[j] = min(reach[j], reach[i] + 1)
    return reach[n]


def small_cancellation(P: Presentation | Sequence[Word], n: int) -> tuple[bool, bool]:
    """``(C'(1/n), C(n))`` for the symmetrization of ``P``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    R = symmetrize(P)
    best = _longest_prefix_pieces(R)
    cprime = all(n * best[r] < len(r) for r in R)
    c = all(min_piece_cover(r, best) >= n for r in R)
    return cprime, c


def surface_presentation(g: int) -> Presentation:
    gens = [f"{x}{i}" for i in range(1, g + 1) for x in "ab"]
    rel = []
    for i in range(g):
        a, b = 2 * i + 1, 2 * i + 2
        rel += [a, b, -a, -b]
    return Presentation(tuple(gens), (tuple(rel),))


# right-angled Artin groups ------------------------------------------------------


def _commutes(graph: SimplicialGraph, names: tuple, x: int, y: int) -> bool:
    return abs(x) == abs(y) or graph.adjacent(names[abs(x) - 1], names[abs(y) - 1])


def _letter_key(x: int) -> tuple:
    return (abs(x), 0 if x > 0 else 1)


def raag_normal_form(graph: SimplicialGraph, w: Iterable[int], length_cap: int = DEFAULT_LENGTH_CAP) -> Word:
    """Shortlex-least word for ``w`` in the RAAG of ``graph``.

    Letter ``k`` is the ``k``-th vertex of the graph; letters are ordered
    ``a < A < b < B < ...``.
    """
    names = graph.vertices
    w = list(w)
    if len(w) > length_cap:
        raise LengthCapExceeded(f"word length {len(w)} exceeds cap {length_cap}")
    for x in w:
        if x == 0 or abs(x) > len(names):
            raise UnknownGenerator(f"letter {x} is not a generator of this graph")
    # cancel x ... x^-1 whenever everything in between commutes with x
    changed = True
    while changed:
        changed = False
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                if w[j] == -w[i]:
                    del w[j], w[i]
                    changed = True
                    break
                if not _commutes(graph, names, w[i], w[j]):
                    break
            if changed:
                break
    # lexicographically least linear extension of the dependence order
    n = len(w)
    preds = [sum(1 for i in range(j) if not _commutes_strict(graph, names, w[i], w[j])) for j in range(n)]
    done = [False] * n
    out = []
    for _ in range(n):
        j = min((k for k in range(n) if not done[k] and preds[k] == 0), key=lambda k: (_letter_key(w[k]), k))
        done[j] = True
        out.append(w[j])
        for k in range(j + 1, n):
            if not done[k] and not _commutes_strict(graph, names, w[j], w[k]):
                preds[k] -= 1
    return tuple(out)


def _commutes_strict(graph: SimplicialGraph, names: tuple, x: int, y: int) -> bool:
    """Letters that may be swapped: distinct adjacent generators."""
    return abs(x) != abs(y) and graph.adjacent(names[abs(x) - 1], names[abs(y) - 1])


# Cayley graph balls --------------------------------------------------------------


@dataclass(frozen=True)
class GroupSpec:
    kind: str  # "free" or "raag"
    rank: int = 0
    graph: SimplicialGraph | None = None

    @classmethod
    def free(cls, k: int) -> GroupSpec:
        return cls("free", k)

    @classmethod
    def raag(cls, graph: SimplicialGraph) -> GroupSpec:
        return cls("raag", len(graph.vertices), graph)

    def normal_form(self, w: Iterable[int]) -> Word:
        if self.kind == "free":
            return free_reduce(w)
        return raag_normal_form(self.graph, w, length_cap=10**6)

    def letters(self) -> list[str]:
        if self.kind == "free":
            return [chr(ord("a") + i) if self.rank <= 26 else f"x{i + 1}" for i in range(self.rank)]
        return [str(v) for v in self.graph.vertices]


@dataclass
class CayleyGraphBall:
    """Ball of radius ``r`` about the identity.

    ``edges`` holds ``(g, g', s)`` with ``g (g')^{-1} = s``; each unordered
    pair appears once per label direction.
    """

    spec: GroupSpec
    radius: int
    vertices: list
    edges: list = field(default_factory=list)

    def graph(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from((a, b) for a, b, _ in self.edges)
        return G

    def interior(self) -> list:
        return [g for g in self.vertices if len(g) <= self.radius - 1]


def cayley_ball(spec: GroupSpec, r: int, radius_cap: int = DEFAULT_RADIUS_CAP) -> CayleyGraphBall:
    if r < 0:
        raise ValueError("radius must be >= 0")
    if r > radius_cap:
        raise RadiusCapExceeded(f"radius {r} exceeds cap {radius_cap}")
    gens = [s for k in range(1, spec.rank + 1) for s in (k, -k)]
    depth = {(): 0}
    queue = deque([()])
    while queue:
        g = queue.popleft()
        if depth[g] == r:
            continue
        for s in gens:
            h = spec.normal_form((-s,) + g)
            if h not in depth:
                depth[h] = depth[g] + 1
                queue.append(h)
    verts = sorted(depth, key=lambda g: (len(g), [_letter_key(x) for x in g]))
    edges = []
    for g in verts:
        for s in gens:
            h = spec.normal_form((-s,) + g)  # g h^{-1} = s
            if h in depth:
                edges.append((g, h, s))
    return CayleyGraphBall(spec, r, verts, edges)


# thin triangles --------------------------------------------------------------------


@dataclass
class DeltaEstimate:
    delta: int
    witness: tuple | None = None  # (x, y, z, point)
    exact: bool = False  # every pair had a unique geodesic

    def __int__(self) -> int:
        return self.delta


def delta_estimate(B: CayleyGraphBall | nx.Graph, geodesic_cap: int = 32) -> DeltaEstimate:
    """Lower bound on the thin-triangle constant.

    For a Cayley ball only triangles with corners in the interior (radius
    ``r - 1``) are used.  For each side, each point on it, and each choice
    of the other two sides among at most ``geodesic_cap`` geodesics, the
    distance from the point to the nearer of those sides is a thinness.
    """
    if isinstance(B, CayleyGraphBall):
        G = B.graph()
        corners = B.interior() if B.radius > 0 else list(B.vertices)
    else:
        G = B
        corners = list(G.nodes)
    if G.number_of_nodes() == 0:
        return DeltaEstimate(0, None, True)
    if not nx.is_connected(G):
        raise Disconnected("graph is not connected")
    dist = dict(nx.all_pairs_shortest_path_length(G))
    geo_cache: dict = {}
    unique = [True]

    def geos(a, b) -> list[tuple]:
        key = (a, b)
        if key not in geo_cache:
            paths = []
            for p in nx.all_shortest_paths(G, a, b):
                paths.append(tuple(p))
                if len(paths) >= geodesic_cap:
                    unique[0] = False
                    break
            if len(paths) > 1:
                unique[0] = False
            geo_cache[key] = paths
        return geo_cache[key]

    far_cache: dict = {}

    def far(p, a, b) -> int:
        # farthest p can be from some geodesic between a and b
        key = (p, a, b)
        if key not in far_cache:
            dp = dist[p]
            far_cache[key] = max(min(dp[q] for q in g) for g in geos(a, b))
        return far_cache[key]

    best = DeltaEstimate(0, None)
    for x, y, z in combinations(corners, 3):
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            for side in geos(a, b):
                for p in side:
                    t = min(far(p, b, c), far(p, c, a))
                    if t > best.delta:
                        best = DeltaEstimate(t, (a, b, c, p))
    best.exact = unique[0]
    return best
