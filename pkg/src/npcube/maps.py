"""Combinatorial cubical maps and the local isometry / covering checks."""

from __future__ import annotations

from dataclasses import dataclass

from .core import CubeComplex, SignedPermutation, link
from .curvature import Verdict
from .errors import DanglingCell


@dataclass
class CubicalMap:
    """``assignment[c] = (c', perm)``: cube ``c`` goes onto ``c'`` through ``perm``."""

    source: CubeComplex
    target: CubeComplex
    assignment: dict

    @classmethod
    def identity(cls, X: CubeComplex) -> CubicalMap:
        return cls(X, X, {c: (c, SignedPermutation.identity(X.dim_of(c))) for c in X.all_cells()})

    def __call__(self, cell):
        return self.assignment[cell]

    def image_vertex(self, v):
        return self.assignment[v][0]

    def image_end(self, end: tuple) -> tuple:
        """Image of a link vertex ``(edge, end)``."""
        e, k = end
        e2, perm = self.assignment[e]
        return (e2, k if perm.signs[0] == 1 else 1 - k)

    def image_corner(self, cube, kappa: tuple) -> tuple:
        c2, perm = self.assignment[cube]
        return c2, perm.apply_point(kappa)

    def compose(self, first: CubicalMap) -> CubicalMap:
        """``self ∘ first``."""
        out = {}
        for c, (c1, p) in first.assignment.items():
            c2, q = self.assignment[c1]
            out[c] = (c2, q.compose(p))
        return CubicalMap(first.source, self.target, out)


def _check_cells(phi: CubicalMap) -> None:
    X, Y = phi.source, phi.target
    for c, (d, perm) in phi.assignment.items():
        if c not in X:
            raise DanglingCell(f"assignment of unknown source cell {c!r}")
        if d not in Y:
            raise DanglingCell(f"{c!r} is sent to unknown target cell {d!r}")
    for c in X.all_cells():
        if c not in phi.assignment:
            raise DanglingCell(f"source cell {c!r} has no image")


def validate(phi: CubicalMap) -> Verdict:
    """Dimensions agree and facet maps commute with the assignment."""
    _check_cells(phi)
    X, Y = phi.source, phi.target
    for c in X.all_cells():
        d, R = phi.assignment[c]
        n = X.dim_of(c)
        if Y.dim_of(d) != n or R.size != n:
            return Verdict(False, (c,), f"{c!r} is not sent to a cube of dimension {n}")
        for i, side, t, P in X.facets(c):
            t2, Q = phi.assignment[t]
            j = R.targets[i]
            side2 = side if R.signs[i] == 1 else 1 - side
            d2, P2 = Y.facet(d, j, side2)
            face = tuple(None if k != i else side for k in range(n))
            lhs = Q.compose(P)
            rhs = P2.compose(R.induced(face))
            if t2 != d2 or lhs != rhs:
                return Verdict(False, (c, i, side), f"facet (coord {i + 1}, side {side}) of {c!r} does not commute")
    return Verdict(True)


def _link_data(X: CubeComplex, v):
    L = link(X, v)
    return L, L.adjacency()


def is_local_isometry(phi: CubicalMap) -> Verdict:
    """Locally injective on link vertices, and square corners in the image
    come from square corners in the source."""
    X, Y = phi.source, phi.target
    target_links: dict = {}
    for y in X.vertices:
        L, adj = _link_data(X, y)
        w = phi.image_vertex(y)
        if w not in target_links:
            target_links[w] = _link_data(Y, w)[1]
        adj_t = target_links[w]
        images = {a: phi.image_end(a) for a in L.vertices}
        seen: dict = {}
        for a, b in images.items():
            if b in seen:
                return Verdict(False, (y, seen[b], a), "not locally injective")
            seen[b] = a
        ends = L.vertices
        for p in range(len(ends)):
            for q in range(p + 1, len(ends)):
                a, b = ends[p], ends[q]
                if images[b] in adj_t.get(images[a], ()) and b not in adj[a]:
                    return Verdict(False, (y, a, b), "image spans a square corner the source does not")
    return Verdict(True)


def is_covering(phi: CubicalMap) -> Verdict:
    """Every link map is an isomorphism onto the target link, and every
    target cell is hit."""
    X, Y = phi.source, phi.target
    for y in X.vertices:
        L = link(X, y)
        w = phi.image_vertex(y)
        M = link(Y, w)
        src = [phi.image_end(a) for a in L.vertices]
        if len(set(src)) != len(src) or set(src) != set(M.vertices):
            return Verdict(False, (y,), "link vertices are not mapped bijectively")
        for k in set(L.simplices) | set(M.simplices):
            if k == 0:
                continue
            img = [phi.image_corner(s.cube, s.corner) for s in L.simplices.get(k, ())]
            tgt = [(s.cube, s.corner) for s in M.simplices.get(k, ())]
            if len(set(img)) != len(img) or set(img) != set(tgt):
                return Verdict(False, (y, k), f"link {k}-simplices are not mapped bijectively")
    hit = {d for d, _ in phi.assignment.values()}
    for c in Y.all_cells():
        if c not in hit:
            return Verdict(False, (c,), "target cell not in the image")
    return Verdict(True)
