"""Text formats, JSON-friendly summaries and DOT export.

Every text format is a list of ``section:`` blocks; the content of a
section may start on the header line.  ``#`` starts a comment.
"""

from __future__ import annotations

import hashlib
import re
from collections import defaultdict

from .constructions import PermutationAssignment, SimplicialGraph
from .core import CubeComplex, GluingPresentation, SignedPermutation
from .errors import ParseError
from .groups import Presentation, parse_word
from .maps import CubicalMap
from .metric import EdgePath
from .walls import WallSpace

_HEADER = re.compile(r"^\s*([A-Za-z][\w-]*)\s*:(.*)$")


def digest(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode())
        h.update(b"\0")
    return h.hexdigest()[:16]


def _sections(text: str, allowed: set[str]) -> dict:
    """section -> list of (line number, content)."""
    out: dict = defaultdict(list)
    current = None
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = _HEADER.match(line)
        if m and m.group(1) in allowed:
            current = m.group(1)
            rest = m.group(2).strip()
            out.setdefault(current, [])
            if rest:
                out[current].append((no, rest))
            continue
        if current is None:
            raise ParseError(f"line {no}: content before any section header: {line.strip()!r}")
        out[current].append((no, line.strip()))
    return dict(out)


def parse_perm(text: str, no: int = 0) -> SignedPermutation:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(f"line {no}: permutation must look like (2,-1,3), got {text!r}")
    inner = body[1:-1].strip()
    try:
        images = [int(x) for x in inner.replace(",", " ").split()] if inner else []
        return SignedPermutation.from_signed(images)
    except ValueError as exc:
        raise ParseError(f"line {no}: bad permutation {text!r}: {exc}") from None


# cube complexes -----------------------------------------------------------------


def parse_complex_text(text: str) -> GluingPresentation:
    """Either the full ``cubes``/``gluings`` format or the
    ``vertices``/``edges``/``squares`` format."""
    secs = _sections(text, {"cubes", "gluings", "vertices", "edges", "squares"})
    if "cubes" in secs:
        if set(secs) - {"cubes", "gluings"}:
            raise ParseError("mixing 'cubes' with the vertices/edges/squares format")
        return _parse_full(secs)
    if not secs:
        raise ParseError("empty complex description")
    return _parse_small(secs)


def _parse_full(secs: dict) -> GluingPresentation:
    pres = GluingPresentation()
    for no, line in secs.get("cubes", []):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: cube line needs 'id dim', got {line!r}")
        try:
            dim = int(parts[1])
        except ValueError:
            raise ParseError(f"line {no}: dimension of cube {parts[0]!r} is not an integer") from None
        try:
            pres.add_cube(parts[0], dim)
        except Exception as exc:
            raise ParseError(f"line {no}: {exc}") from None
    for no, line in secs.get("gluings", []):
        m = re.match(r"^(\S+)\s+(\S+)\s+(\S+)\s*->\s*(\S+)\s*(\(.*\))?\s*$", line)
        if not m:
            raise ParseError(f"line {no}: gluing needs 'src coord side -> dst perm', got {line!r}")
        src, coord, side, dst, perm = m.groups()
        try:
            coord_i, side_i = int(coord), int(side)
        except ValueError:
            raise ParseError(f"line {no}: coord and side must be integers") from None
        if side_i not in (0, 1):
            raise ParseError(f"line {no}: side must be 0 or 1, got {side_i}")
        if coord_i < 1:
            raise ParseError(f"line {no}: coordinates are 1-based, got {coord_i}")
        p = parse_perm(perm, no) if perm else None
        pres.glue(src, coord_i - 1, side_i, dst, p)
    return pres


def _parse_small(secs: dict) -> GluingPresentation:
    vertices = [v for _, line in secs.get("vertices", []) for v in line.split()]
    edges = []
    for no, line in secs.get("edges", []):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {no}: edge line needs 'id src dst', got {line!r}")
        edges.append(tuple(parts))
    squares = []
    for no, line in secs.get("squares", []):
        parts = line.split()
        if len(parts) != 5:
            raise ParseError(f"line {no}: square line needs 'id w1 w2 w3 w4', got {line!r}")
        squares.append((parts[0], parts[1:]))
    return GluingPresentation.from_squares(vertices, edges, squares)


def cell_names(X: CubeComplex) -> dict:
    """Printable names: the ids themselves when they are plain tokens,
    otherwise ``c<dim>.<index>`` in declaration order."""
    plain = all(isinstance(c, str) and re.fullmatch(r"[^\s~()#:>-][^\s#()]*", c) for c in X.all_cells())
    if plain:
        return {c: c for c in X.all_cells()}
    return {c: f"c{X.index[c][0]}.{X.index[c][1]}" for c in X.all_cells()}


def format_complex(X: CubeComplex) -> str:
    names = cell_names(X)
    lines = ["cubes:"]
    for c in X.all_cells():
        lines.append(f"  {names[c]} {X.dim_of(c)}")
    lines.append("gluings:")
    for c in X.all_cells():
        for i, side, t, perm in X.facets(c):
            lines.append(f"  {names[c]} {i + 1} {side} -> {names[t]} {perm}")
    return "\n".join(lines) + "\n"


# graphs, covers, maps, paths ------------------------------------------------------


def parse_graph(text: str) -> SimplicialGraph:
    secs = _sections(text, {"vertices", "edges"})
    vertices = [v for _, line in secs.get("vertices", []) for v in line.split()]
    edges = set()
    for no, line in secs.get("edges", []):
        for tok in line.split():
            ends = tok.split("-")
            if len(ends) != 2 or not all(ends):
                raise ParseError(f"line {no}: edge must look like 'a-b', got {tok!r}")
            edges.add(frozenset(ends) if ends[0] != ends[1] else (ends[0], ends[1]))
    try:
        return SimplicialGraph(tuple(vertices), frozenset(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_graph(g: SimplicialGraph) -> str:
    order = {v: i for i, v in enumerate(g.vertices)}
    edges = sorted((tuple(sorted(e, key=order.__getitem__)) for e in g.edges), key=lambda e: (order[e[0]], order[e[1]]))
    return f"vertices: {' '.join(map(str, g.vertices))}\nedges: {' '.join(f'{a}-{b}' for a, b in edges)}\n"


def parse_assignment(text: str) -> PermutationAssignment:
    degree = None
    perms = {}
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^degree\s*:?\s*(\d+)$", line)
        if m:
            degree = int(m.group(1))
            continue
        m = re.match(r"^(\S+)\s*:\s*(.*)$", line)
        if not m:
            raise ParseError(f"line {no}: expected 'edge: (cycles)', got {line!r}")
        if degree is None:
            raise ParseError(f"line {no}: 'degree' must come before edge permutations")
        try:
            perms[m.group(1)] = PermutationAssignment.from_cycles(degree, m.group(2))
        except (ValueError, IndexError):
            raise ParseError(f"line {no}: bad cycle notation {m.group(2)!r}") from None
    if degree is None:
        raise ParseError("missing 'degree' line")
    try:
        return PermutationAssignment(degree, perms)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_map(text: str, X: CubeComplex, Y: CubeComplex) -> CubicalMap:
    secs = _sections(text, {"map"})
    assignment = {}
    for no, line in secs.get("map", []):
        m = re.match(r"^(\S+)\s*->\s*(\S+)\s*(\(.*\))?\s*$", line)
        if not m:
            raise ParseError(f"line {no}: map line needs 'src -> dst perm', got {line!r}")
        src, dst, perm = m.groups()
        p = parse_perm(perm, no) if perm else SignedPermutation.identity(X.dim_of(src) if src in X else 0)
        assignment[src] = (dst, p)
    return CubicalMap(X, Y, assignment)


def format_map(phi: CubicalMap) -> str:
    sn, tn = cell_names(phi.source), cell_names(phi.target)
    lines = ["map:"]
    for c in phi.source.all_cells():
        d, p = phi.assignment[c]
        lines.append(f"  {sn[c]} -> {tn[d]} {p}")
    return "\n".join(lines) + "\n"


def parse_path(text: str, X: CubeComplex, start=None) -> EdgePath:
    secs = _sections(text, {"path", "start"})
    if start is None and secs.get("start"):
        start = secs["start"][0][1].strip()
    steps = []
    for no, line in secs.get("path", []):
        for tok in line.split():
            e, d = (tok[1:], -1) if tok.startswith("~") else (tok, 1)
            if e not in X or X.dim_of(e) != 1:
                raise ParseError(f"line {no}: {e!r} is not an edge of the complex")
            steps.append((e, d))
    try:
        return EdgePath.from_edges(X, steps, start)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# wall spaces and presentations --------------------------------------------------------


def parse_walls(text: str) -> WallSpace:
    secs = _sections(text, {"points", "wall"})
    if "points" not in secs:
        raise ParseError("missing 'points' section")
    points = [p for _, line in secs["points"] for p in line.replace(",", " ").split()]
    walls = []
    for no, line in secs.get("wall", []):
        m = re.match(r"^\{([^}]*)\}\s*\|\s*\{([^}]*)\}$", line)
        if not m:
            raise ParseError(f"line {no}: wall must look like '{{a,b}} | {{c,d}}', got {line!r}")
        halves = [frozenset(x for x in part.replace(",", " ").split()) for part in m.groups()]
        walls.append(tuple(halves))
    return WallSpace(tuple(points), tuple(walls))


def format_walls(ws: WallSpace) -> str:
    lines = [f"points: {' '.join(map(str, ws.points))}"]
    order = {p: i for i, p in enumerate(ws.points)}
    for a, b in ws.walls:
        fa = ",".join(str(p) for p in sorted(a, key=order.__getitem__))
        fb = ",".join(str(p) for p in sorted(b, key=order.__getitem__))
        lines.append(f"wall: {{{fa}}} | {{{fb}}}")
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    secs = _sections(text, {"gens", "rels"})
    if "gens" not in secs:
        raise ParseError("missing 'gens' section")
    gens = [g for _, line in secs["gens"] for g in line.split()]
    for g in gens:
        if len(g) != 1 or not g.islower():
            raise ParseError(f"generator {g!r} must be a single lowercase letter")
    rels = []
    for no, line in secs.get("rels", []):
        for tok in line.split():
            try:
                rels.append(parse_word(tok, gens))
            except Exception as exc:
                raise ParseError(f"line {no}: {exc}") from None
    return Presentation(tuple(gens), tuple(rels))


# DOT ----------------------------------------------------------------------------------

_PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan", "olive", "navy"]


def _q(x) -> str:
    return '"' + str(x).replace('"', '\\"') + '"'


def complex_to_dot(X: CubeComplex) -> str:
    """1-skeleton with edges coloured by their hyperplane."""
    from .hyperplanes import hyperplane_of_edge

    names = cell_names(X)
    of_edge = hyperplane_of_edge(X)
    lines = ["digraph complex {"]
    for v in X.vertices:
        lines.append(f"  {_q(names[v])};")
    for e in X.edges:
        a, b = X.endpoints(e)
        h = of_edge[e]
        lines.append(f"  {_q(names[a])} -> {_q(names[b])} [label={_q(names[e])}, color={_PALETTE[h % len(_PALETTE)]}, hyperplane={h}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dot(g: SimplicialGraph, name: str = "graph") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {_q(v)};")
    order = {v: i for i, v in enumerate(g.vertices)}
    for e in sorted((tuple(sorted(e, key=order.__getitem__)) for e in g.edges), key=lambda e: (order[e[0]], order[e[1]])):
        lines.append(f"  {_q(e[0])} -- {_q(e[1])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def ball_to_dot(B, letters) -> str:
    from .groups import format_word

    def name(w):
        return format_word(w, letters) or "1"

    lines = ["digraph cayley {"]
    for g in B.vertices:
        lines.append(f"  {_q(name(g))};")
    for g, h, s in B.edges:
        if s > 0:
            lines.append(f"  {_q(name(g))} -> {_q(name(h))} [label={_q(name((s,)))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
