"""Simpliciality, flag and NPC checks on vertex links."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import networkx as nx

from .core import CubeComplex, LinkComplex, link


@dataclass
class Verdict:
    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_simplicial(L: LinkComplex) -> Verdict:
    """No simplex with a repeated vertex and no two simplices on one vertex set."""
    seen: dict = {}
    for k in sorted(L.simplices):
        if k == 0:
            continue
        for s in L.simplices[k]:
            if len(set(s.vertices)) < len(s.vertices):
                return Verdict(False, (s,), "loop")
            key = frozenset(s.vertices)
            if key in seen:
                return Verdict(False, (seen[key], s), "parallel")
            seen[key] = s
    return Verdict(True)


def link_graph(L: LinkComplex) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(L.vertices)
    g.add_edges_from(e for e in L.edges() if e[0] != e[1])
    return g


def is_flag(L: LinkComplex, max_clique: int | None = None) -> Verdict:
    """Every clique of the link's 1-skeleton spans a simplex.

    ``max_clique`` bounds the clique size examined; a larger clique is itself
    reported as the witness since no cube of that dimension can fill it.
    """
    simp = is_simplicial(L)
    if not simp:
        return simp
    filled = {frozenset(s.vertices) for k, ss in L.simplices.items() if k >= 2 for s in ss}
    for clique in nx.enumerate_all_cliques(link_graph(L)):
        if len(clique) < 3:
            continue
        if max_clique is not None and len(clique) > max_clique:
            return Verdict(False, tuple(clique), "clique exceeds dimension cap")
        if frozenset(clique) not in filled:
            return Verdict(False, tuple(clique), "unfilled clique")
    return Verdict(True)


def link_girth(L: LinkComplex) -> float:
    """Girth of the link's 1-skeleton counting loops (1) and bigons (2)."""
    edges = L.edges()
    if any(a == b for a, b in edges):
        return 1
    if len({frozenset(e) for e in edges}) < len(edges):
        return 2
    return nx.girth(link_graph(L))


@dataclass
class VertexStatus:
    vertex: Any
    simplicial: bool
    flag: bool
    girth: float | None = None
    witness: Any = None


@dataclass
class NPCReport:
    npc: bool
    vertices: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.npc

    @property
    def failures(self) -> list[VertexStatus]:
        return [s for s in self.vertices if not s.flag]

    def girth_agrees(self) -> bool:
        """In dimension 2, flag links are exactly those of girth at least 4."""
        return all(s.girth is None or (s.girth >= 4) == s.flag for s in self.vertices)


def is_npc(X: CubeComplex) -> NPCReport:
    statuses = []
    cap = X.dim_cap + 1
    for v in X.vertices:
        L = link(X, v)
        simp = is_simplicial(L)
        flag = is_flag(L, max_clique=cap) if simp else simp
        girth = link_girth(L) if X.dim <= 2 else None
        statuses.append(VertexStatus(v, simp.ok, flag.ok, girth, None if flag else flag.witness))
    return NPCReport(all(s.flag for s in statuses), statuses)
