"""``npcube`` command line.

Exit status: 0 when the verdict is true (or a construction succeeded), 1 when
it is false, 2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import constructions as cons
from .core import CubeComplex, Simplex, connected_components, euler_characteristic
from .curvature import is_npc
from .errors import CubeComplexError
from .formats import (
    ball_to_dot,
    cell_names,
    complex_to_dot,
    digest,
    format_complex,
    format_graph,
    format_map,
    graph_to_dot,
    parse_assignment,
    parse_complex_text,
    parse_graph,
    parse_path,
    parse_presentation,
    parse_walls,
)
from .groups import GroupSpec, cayley_ball, delta_estimate, format_word, pieces, small_cancellation, symmetrize
from .hyperplanes import (
    carrier,
    crossing_graph,
    edge_parallelism_classes,
    hyperplanes,
    pathologies,
    special_to_salvetti,
)
from .maps import is_covering, is_local_isometry, validate
from .metric import closure, distance, geodesic_by_hyperplanes, is_convex, is_geodesic
from .walls import dual
from .walls import validate as validate_walls

SCHEMA = "npcube.report/1"


@dataclass
class Outcome:
    verdict: bool
    data: dict = field(default_factory=dict)
    text: str | None = None


class InputError(Exception):
    pass


class _Reader:
    """Reads input files and remembers their contents for the digest."""

    def __init__(self):
        self.texts: list[str] = []

    def read(self, path: str) -> str:
        try:
            text = sys.stdin.read() if path == "-" else Path(path).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        self.texts.append(text)
        return text

    def complex(self, path: str) -> CubeComplex:
        return CubeComplex(parse_complex_text(self.read(path)))


def _js(obj, names: dict | None = None):
    """JSON-ready copy of a witness, with cells replaced by printable names."""
    names = names or {}
    if isinstance(obj, Simplex):
        return {"cube": _js(obj.cube, names), "corner": list(obj.corner or ()), "vertices": _js(obj.vertices, names)}
    try:
        if obj in names:
            return names[obj]
    except TypeError:
        pass
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, (tuple, list)):
        return [_js(x, names) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((_js(x, names) for x in obj), key=str)
    if isinstance(obj, dict):
        return {str(_js(k, names)): _js(v, names) for k, v in obj.items()}
    return str(obj)


def _built(X: CubeComplex) -> Outcome:
    text = format_complex(X)
    return Outcome(True, {"cells": list(X.cell_counts()), "euler_characteristic": euler_characteristic(X), "presentation": text}, text)


# commands -----------------------------------------------------------------------


def cmd_compile(a, io: _Reader) -> Outcome:
    X = io.complex(a.file)
    data = {"cells": list(X.cell_counts()), "dimension": X.dim, "euler_characteristic": euler_characteristic(X)}
    if a.emit:
        data["presentation"] = format_complex(X)
    return Outcome(True, data, data.get("presentation", f"cells {' '.join(map(str, X.cell_counts()))}\n"))


def cmd_npc(a, io) -> Outcome:
    X = io.complex(a.file)
    names = cell_names(X)
    rep = is_npc(X)
    rows = [
        {
            "vertex": names[s.vertex],
            "simplicial": s.simplicial,
            "flag": s.flag,
            "girth": None if s.girth is None or s.girth == float("inf") else s.girth,
            "witness": _js(s.witness, names),
        }
        for s in rep.vertices
    ]
    text = "".join(f"{r['vertex']}: simplicial={r['simplicial']} flag={r['flag']} girth={r['girth']} witness={r['witness']}\n" for r in rows)
    return Outcome(rep.npc, {"npc": rep.npc, "vertices": rows}, text + f"npc {rep.npc}\n")


def cmd_hyperplanes(a, io) -> Outcome:
    X = io.complex(a.file)
    names = cell_names(X)
    hs = hyperplanes(X)
    agree = sorted(map(frozenset, (H.dual_edges for H in hs)), key=str) == sorted(edge_parallelism_classes(X), key=str)
    rows = [
        {"id": H.id, "two_sided": H.two_sided, "midcubes": len(H.midcubes), "dual_edges": [names[e] for e in H.dual_edges]}
        for H in hs
    ]
    text = "".join(f"H{r['id']}: two_sided={r['two_sided']} dual_edges={' '.join(r['dual_edges'])}\n" for r in rows)
    return Outcome(True, {"count": len(hs), "hyperplanes": rows, "edge_parallelism_agrees": agree}, text)


def cmd_special(a, io) -> Outcome:
    X = io.complex(a.file)
    names = cell_names(X)
    if not is_npc(X):
        return Outcome(False, {"special": False, "npc": False, "reason": "complex is not non-positively curved"}, "special False (not npc)\n")
    rep = pathologies(X)
    rows = [
        {
            "id": h.id,
            "two_sided": h.two_sided,
            "self_crossing": _js(h.self_crossing, names),
            "self_osculating": _js(h.self_osculating, names),
            "indirect_osculating": _js(h.indirect_osculating, names),
        }
        for h in rep.hyperplanes
    ]
    inter = [{"pair": list(p), "witness": _js(w, names)} for p, w in sorted(rep.inter_osculating.items())]
    data = {
        "special": rep.special,
        "npc": True,
        "conditions": rep.conditions(),
        "hyperplanes": rows,
        "inter_osculating": inter,
        "witness": _js(rep.first_witness(), names),
    }
    return Outcome(rep.special, data, f"special {rep.special}\nwitness {data['witness']}\n")


def cmd_carrier(a, io) -> Outcome:
    X = io.complex(a.file)
    hs = hyperplanes(X)
    chosen = hs if a.hyperplane is None else [hs[a.hyperplane]] if 0 <= a.hyperplane < len(hs) else None
    if chosen is None:
        raise InputError(f"--hyperplane must be between 0 and {len(hs) - 1}")
    rows = []
    for H in chosen:
        Y, phi = carrier(X, H)
        rows.append({"id": H.id, "cells": list(Y.cell_counts()), "valid": validate(phi).ok, "local_isometry": is_local_isometry(phi).ok})
    ok = all(r["valid"] and r["local_isometry"] for r in rows)
    text = "".join(f"H{r['id']}: cells={r['cells']} local_isometry={r['local_isometry']}\n" for r in rows)
    return Outcome(ok, {"carriers": rows}, text)


def cmd_crossing_graph(a, io) -> Outcome:
    X = io.complex(a.file)
    g = crossing_graph(X)
    text = graph_to_dot(g, "crossing") if a.dot else format_graph(g)
    return Outcome(True, {"vertices": list(g.vertices), "edges": sorted(sorted(e) for e in g.edges), "text": text}, text)


def cmd_to_salvetti(a, io) -> Outcome:
    X = io.complex(a.file)
    if not is_npc(X) or not pathologies(X).special:
        return Outcome(False, {"special": False, "reason": "complex is not special"}, "not special\n")
    phi = special_to_salvetti(X)
    ok = validate(phi).ok and is_local_isometry(phi).ok
    text = format_map(phi)
    return Outcome(ok, {"target_cells": list(phi.target.cell_counts()), "local_isometry": ok, "map": text}, text)


def cmd_salvetti(a, io) -> Outcome:
    return _built(cons.salvetti(parse_graph(io.read(a.graph))))


def cmd_surface(a, io) -> Outcome:
    return _built(cons.surface_complex(a.genus, orientable=not a.nonorientable))


def cmd_torus(a, io) -> Outcome:
    return _built(cons.torus_complex(a.dim))


def cmd_product(a, io) -> Outcome:
    return _built(cons.product(io.complex(a.left), io.complex(a.right)))


def cmd_subdivide(a, io) -> Outcome:
    return _built(cons.subdivide(io.complex(a.file)))


def cmd_cover(a, io) -> Outcome:
    X = io.complex(a.file)
    C, phi = cons.one_vertex_cover(X, parse_assignment(io.read(a.assignment)))
    ok = is_covering(phi).ok
    out = _built(C)
    out.verdict = ok
    out.data.update({"is_covering": ok, "components": len(connected_components(C))})
    return out


def cmd_dual(a, io) -> Outcome:
    ws = parse_walls(io.read(a.file))
    ok = validate_walls(ws)
    if not ok:
        raise InputError(f"invalid wall space: {ok.reason} (witness {_js(ok.witness)})")
    D = dual(ws)
    X = D.complex
    names = cell_names(X)
    table = [{"vertex": names[v], "orientation": list(o)} for v, o in D.orientation_of.items()]
    text = format_complex(X)
    return Outcome(
        True,
        {"cells": list(X.cell_counts()), "vertices": table, "wall_hyperplane": D.wall_hyperplane, "presentation": text},
        text,
    )


def cmd_geodesic(a, io) -> Outcome:
    X = io.complex(a.file)
    text = io.read(a.path) if a.path else f"path: {a.steps}"
    p = parse_path(text, X)
    g, h = is_geodesic(p), geodesic_by_hyperplanes(p)
    data = {"length": len(p), "distance": distance(X, p.start, p.end), "is_geodesic": g, "by_hyperplanes": h}
    return Outcome(g, data, f"geodesic {g} by_hyperplanes {h}\n")


def cmd_convex(a, io) -> Outcome:
    X = io.complex(a.file)
    lookup = {v: k for k, v in cell_names(X).items()}
    cells = []
    for name in a.cells:
        if name not in lookup:
            raise InputError(f"--cells: unknown cell {name!r}")
        cells.append(lookup[name])
    Y = closure(X, cells) if a.closure else cells
    rep = is_convex(X, Y, cat0=not a.not_cat0)
    names = cell_names(X)
    data = {
        "convex": rep.convex,
        "brute_force": {"ok": rep.brute.ok, "witness": _js(rep.brute.witness, names), "reason": rep.brute.reason},
        "corner_criterion": "not applicable" if rep.corner is None else {"ok": rep.corner.ok, "witness": _js(rep.corner.witness, names)},
    }
    return Outcome(rep.convex, data, f"convex {rep.convex}\n")


def cmd_smallcancel(a, io) -> Outcome:
    P = parse_presentation(io.read(a.file))
    R = symmetrize(P)
    pr = pieces(R)
    cprime, c = small_cancellation(P, a.n)
    wit = None if pr.witness is None else [P.format(w) for w in pr.witness]
    data = {"n": a.n, "symmetrized": len(R), "max_piece": pr.max_length, "piece_witness": wit, "cprime": cprime, "c": c}
    return Outcome(cprime, data, f"max_piece {pr.max_length}\nC'(1/{a.n}) {cprime}\nC({a.n}) {c}\n")


def _spec(a, io) -> GroupSpec:
    if a.free is not None:
        return GroupSpec.free(a.free)
    return GroupSpec.raag(parse_graph(io.read(a.raag)))


def cmd_cayley(a, io) -> Outcome:
    spec = _spec(a, io)
    B = cayley_ball(spec, a.radius)
    text = ball_to_dot(B, spec.letters()) if a.dot else f"vertices {len(B.vertices)}\nedges {len(B.edges) // 2}\n"
    return Outcome(True, {"vertices": len(B.vertices), "edges": len(B.edges) // 2}, text)


def cmd_delta(a, io) -> Outcome:
    spec = _spec(a, io)
    B = cayley_ball(spec, a.radius)
    est = delta_estimate(B)
    wit = None if est.witness is None else [format_word(w, spec.letters()) or "1" for w in est.witness]
    return Outcome(True, {"delta_lower_bound": est.delta, "exact": est.exact, "witness": wit}, f"delta >= {est.delta}\n")


def cmd_export_dot(a, io) -> Outcome:
    X = io.complex(a.file)
    text = complex_to_dot(X)
    return Outcome(True, {"dot": text}, text)


# parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="npcube", description="Non-positively curved cube complex toolkit.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timings", action="store_true", help="include elapsed time in the report")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(func=func)
        return s

    s = add("compile", cmd_compile, "compile a complex and report cell counts")
    s.add_argument("file")
    s.add_argument("--emit", action="store_true", help="print the canonical presentation")
    for name, func, help_ in (
        ("npc", cmd_npc, "check the flag condition at every vertex"),
        ("hyperplanes", cmd_hyperplanes, "list hyperplanes and their dual edges"),
        ("special", cmd_special, "report the four hyperplane pathologies"),
        ("to-salvetti", cmd_to_salvetti, "map a special complex to its Salvetti complex"),
        ("subdivide", cmd_subdivide, "cubical subdivision"),
        ("export-dot", cmd_export_dot, "1-skeleton as DOT, edges coloured by hyperplane"),
    ):
        add(name, func, help_).add_argument("file")
    s = add("carrier", cmd_carrier, "build hyperplane carriers and check the local isometry")
    s.add_argument("file")
    s.add_argument("--hyperplane", type=int, default=None)
    s = add("crossing-graph", cmd_crossing_graph, "hyperplane crossing graph")
    s.add_argument("file")
    s.add_argument("--dot", action="store_true")
    add("salvetti", cmd_salvetti, "Salvetti complex of a graph").add_argument("graph")
    s = add("surface", cmd_surface, "squared polygon of a closed surface")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--nonorientable", action="store_true")
    add("torus", cmd_torus, "the n-torus").add_argument("--dim", type=int, required=True)
    s = add("product", cmd_product, "product of two complexes")
    s.add_argument("left")
    s.add_argument("right")
    s = add("cover", cmd_cover, "finite cover of a one-vertex complex")
    s.add_argument("file")
    s.add_argument("assignment")
    add("dual", cmd_dual, "Sageev dual of a wall space").add_argument("file")
    s = add("geodesic", cmd_geodesic, "test whether an edge path is geodesic")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--path", help="file with a 'path:' line")
    g.add_argument("--steps", help="inline path such as 'a ~b c'")
    s = add("convex", cmd_convex, "convexity of a subcomplex")
    s.add_argument("file")
    s.add_argument("--cells", nargs="+", required=True)
    s.add_argument("--closure", action="store_true", help="close the cells under taking faces")
    s.add_argument("--not-cat0", action="store_true", help="skip the corner criterion")
    s = add("smallcancel", cmd_smallcancel, "pieces and small-cancellation conditions")
    s.add_argument("file")
    s.add_argument("--n", type=int, required=True)
    for name, func, help_ in (("cayley", cmd_cayley, "Cayley graph ball"), ("delta", cmd_delta, "thin-triangle lower bound")):
        s = add(name, func, help_)
        g = s.add_mutually_exclusive_group(required=True)
        g.add_argument("--free", type=int)
        g.add_argument("--raag")
        s.add_argument("--radius", type=int, required=True)
        if name == "cayley":
            s.add_argument("--dot", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    io = _Reader()
    t0 = time.perf_counter()
    try:
        out = args.func(args, io)
    except (InputError, CubeComplexError, ValueError, KeyError, IndexError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"npcube {args.command}: error: {msg}", file=sys.stderr)
        return 2
    report = {"schema": SCHEMA, "command": args.command, "input": digest(*io.texts), "verdict": out.verdict}
    report.update(out.data)
    if args.timings:
        report["timings"] = {"seconds": round(time.perf_counter() - t0, 6)}
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        sys.stdout.write(out.text if out.text is not None else f"{args.command} {out.verdict}\n")
    return 0 if out.verdict else 1


if __name__ == "__main__":
    sys.exit(main())
