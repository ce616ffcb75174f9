"""Independent reference computations used to cross-check the library.

Each function here takes a different route from the library code it is
compared with; most are brute force and only meant for tiny inputs.
"""

from __future__ import annotations

from collections import Counter, deque
from itertools import combinations, product

import networkx as nx


def torus_face_counts(n: int) -> tuple:
    """Faces of [0,1]^n modulo opposite-face identification.

    A face is a word over {0, 1, *}; identifying opposite faces makes 0 and 1
    interchangeable, so each class has a canonical representative with 1 -> 0.
    """
    classes = {tuple("0" if x == "1" else x for x in f) for f in product("01*", repeat=n)}
    counts = Counter(f.count("*") for f in classes)
    return tuple(counts[k] for k in range(n + 1))


def clique_counts(vertices, edges) -> tuple:
    """Number of k-subsets that are cliques, k >= 0, by brute force."""
    E = {frozenset(e) for e in edges}
    out = []
    for k in range(len(vertices) + 1):
        n = sum(all(frozenset(p) in E for p in combinations(s, 2)) for s in combinations(vertices, k))
        if n == 0:
            break
        out.append(n)
    return tuple(out)


def poly_product(a: tuple, b: tuple) -> tuple:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def edge_classes_by_squares(X) -> set:
    """Opposite edges of squares, read straight off the corner/edge tables."""
    parent = {e: e for e in X.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for sq in X.cells_of_dim(2):
        # edges at corners (0,0) and (1,1) give the four sides
        (e00_0, _), (e00_1, _) = X.edge_ends(sq, (0, 0))
        (e11_0, _), (e11_1, _) = X.edge_ends(sq, (1, 1))
        # at (0,0): slot 0 runs along coordinate 0 (side x1 = 0)
        # at (1,1): slot 0 runs along coordinate 0 (side x1 = 1)
        for a, b in ((e00_0, e11_0), (e00_1, e11_1)):
            parent[find(a)] = find(b)
    groups: dict = {}
    for e in X.edges:
        groups.setdefault(find(e), set()).add(e)
    return {frozenset(g) for g in groups.values()}


def _cancel_cyclically(r) -> list:
    r = list(r)
    while len(r) > 1:
        for i in range(len(r)):
            j = (i + 1) % len(r)
            if r[i] == -r[j]:
                for k in sorted((i, j), reverse=True):
                    del r[k]
                break
        else:
            break
    return r


def cyclic_piece_length(relators) -> int:
    """Longest word with occurrences in two different cyclic conjugates of the
    relators or their inverses, by listing every cyclic subword."""
    seen: dict = {}
    for r in map(_cancel_cyclically, relators):
        for w in (tuple(r), tuple(-x for x in reversed(r))):
            for i in range(len(w)):
                rot = w[i:] + w[:i]
                for k in range(1, len(rot) + 1):
                    seen.setdefault(rot[:k], set()).add(rot)
    return max((len(u) for u, rots in seen.items() if len(rots) >= 2), default=0)


def letter_key(x: int) -> tuple:
    return (abs(x), x < 0)


def raag_normal_form_bfs(commuting, w: tuple) -> tuple:
    """Close the word under cancellations and commuting swaps, keep the
    shortest words, return the least under a < A < b < B.

    ``commuting(x, y)`` decides whether generators ``|x|`` and ``|y|`` commute.
    """
    seen = {tuple(w)}
    queue = deque([tuple(w)])
    while queue:
        u = queue.popleft()
        for i in range(len(u) - 1):
            x, y = u[i], u[i + 1]
            nxt = []
            if x == -y:
                nxt.append(u[:i] + u[i + 2 :])
            elif abs(x) != abs(y) and commuting(abs(x), abs(y)):
                nxt.append(u[:i] + (y, x) + u[i + 2 :])
            for v in nxt:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    m = min(len(u) for u in seen)
    return min((u for u in seen if len(u) == m), key=lambda u: [letter_key(x) for x in u])


def free_ball_size(k: int, r: int) -> int:
    return 1 + sum(2 * k * (2 * k - 1) ** (i - 1) for i in range(1, r + 1))


def z2_ball_size(r: int) -> int:
    return sum(1 for x in range(-r, r + 1) for y in range(-r, r + 1) if abs(x) + abs(y) <= r)


def thinness(G: nx.Graph, corners=None) -> int:
    """Largest distance from a point on one side of a geodesic triangle to the
    union of the other two, over every triangle and every choice of sides."""
    dist = dict(nx.all_pairs_shortest_path_length(G))
    corners = list(G.nodes) if corners is None else list(corners)
    best = 0
    for x, y, z in combinations(corners, 3):
        for s1 in nx.all_shortest_paths(G, x, y):
            for s2 in nx.all_shortest_paths(G, y, z):
                for s3 in nx.all_shortest_paths(G, z, x):
                    for side, others in ((s1, s2 + s3), (s2, s3 + s1), (s3, s1 + s2)):
                        for p in side:
                            best = max(best, min(dist[p][q] for q in others))
    return best


def consistent_orientations(points, walls) -> list:
    """Every one of the 2^n half choices, filtered by pairwise intersection."""
    out = []
    for choice in product((0, 1), repeat=len(walls)):
        halves = [set(walls[i][s]) for i, s in enumerate(choice)]
        if all(a & b for a, b in combinations(halves, 2)):
            out.append(choice)
    return out


def quadrants_nonempty(points, w1, w2) -> bool:
    """Cross test by labelling every point with its pair of sides."""
    labels = {(p in w1[0], p in w2[0]) for p in points}
    return len(labels) == 4


def skeleton_graph(X) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(X.vertices)
    for e in X.edges:
        a, b = X.endpoints(e)
        G.add_edge(a, b, key=e)
    return G


def walks(X, max_len: int):
    """Every edge walk of length 1..max_len, as (start, [(edge, dir)])."""
    out_steps: dict = {v: [] for v in X.vertices}
    for e in X.edges:
        a, b = X.endpoints(e)
        out_steps[a].append((e, 1, b))
        out_steps[b].append((e, -1, a))
    stack = [(v, v, ()) for v in X.vertices]
    while stack:
        start, here, steps = stack.pop()
        if steps:
            yield start, steps
        if len(steps) < max_len:
            for e, d, there in out_steps[here]:
                stack.append((start, there, steps + ((e, d),)))


def convex_by_paths(X, vertex_set) -> bool:
    """Vertex-set convexity: every shortest path between members stays inside."""
    G = nx.Graph(skeleton_graph(X))
    vs = list(vertex_set)
    for u, v in combinations(vs, 2):
        for path in nx.all_shortest_paths(G, u, v):
            if not set(path) <= set(vs):
                return False
    return True
