import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from npcube import (
    CubeComplex,
    GluingPresentation,
    SignedPermutation,
    compile_presentation,
    euler_characteristic,
    link,
    skeleton,
    standard_cube,
    surface_complex,
    torus_complex,
)
from npcube.constructions import point
from npcube.core import corners_of
from npcube.curvature import link_graph
from npcube.errors import (
    DimensionCapExceeded,
    DimensionMismatch,
    InconsistentCorners,
    MissingGluing,
    UnknownCell,
)


def torus_presentation():
    pres = GluingPresentation()
    pres.add_cube("v", 0)
    pres.add_cube("a", 1)
    pres.add_cube("b", 1)
    pres.add_cube("s", 2)
    for e in ("a", "b"):
        pres.glue(e, 0, 0, "v")
        pres.glue(e, 0, 1, "v")
    for side in (0, 1):
        pres.glue("s", 0, side, "b")
        pres.glue("s", 1, side, "a")
    return pres


# signed permutations


signed_perms = st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.permutations(range(n)), st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)).map(
        lambda t: SignedPermutation(tuple(t[0]), tuple(t[1]))
    )
)


def same_size(n):
    return st.tuples(st.permutations(range(n)), st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n)).map(
        lambda t: SignedPermutation(tuple(t[0]), tuple(t[1]))
    )


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(same_size(n), same_size(n), same_size(n))))
def test_signed_permutations_form_a_group(triple):
    p, q, r = triple
    n = p.size
    assert p.compose(q).compose(r) == p.compose(q.compose(r))
    assert p.compose(p.inverse()) == SignedPermutation.identity(n)
    assert p.inverse().compose(p) == SignedPermutation.identity(n)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(same_size(n), same_size(n), st.lists(st.sampled_from((0.0, 0.25, 1.0)), min_size=n, max_size=n))))
def test_composition_acts_on_points(data):
    p, q, x = data
    assert p.compose(q).apply_point(x) == p.apply_point(q.apply_point(x))


@given(signed_perms)
def test_signed_round_trip(p):
    assert SignedPermutation.from_signed(p.signed()) == p


def test_signed_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        SignedPermutation((0, 0), (1, 1))


# compile


def test_torus_presentation_compiles_to_1_2_1():
    assert compile_presentation(torus_presentation()).cell_counts() == (1, 2, 1)


def test_three_torus_matches_face_enumeration():
    assert oracles.torus_face_counts(3) == (1, 3, 3, 1)
    for n in (1, 2, 3, 4):
        assert torus_complex(n).cell_counts() == oracles.torus_face_counts(n)


def test_unglued_facet_is_reported():
    pres = GluingPresentation()
    pres.add_cube("v", 0)
    pres.add_cube("e", 1)
    pres.add_cube("s", 2)
    pres.glue("e", 0, 0, "v")
    pres.glue("e", 0, 1, "v")
    pres.glue("s", 0, 0, "e")
    pres.glue("s", 1, 0, "e")
    pres.glue("s", 1, 1, "e")
    with pytest.raises(MissingGluing):
        compile_presentation(pres)


def test_gluing_to_wrong_dimension():
    pres = GluingPresentation()
    pres.add_cube("v", 0)
    pres.add_cube("e", 1)
    with pytest.raises(DimensionMismatch):
        pres.glue("e", 0, 0, "e")
        compile_presentation(pres)


def test_dimension_cap():
    with pytest.raises(DimensionCapExceeded):
        standard_cube(3, dim_cap=2)


def test_cubical_identity_violation():
    # two edges of a square sent to edges whose endpoints disagree at a corner
    pres = GluingPresentation()
    for v in ("p", "q"):
        pres.add_cube(v, 0)
    for e in ("a", "b"):
        pres.add_cube(e, 1)
    pres.glue("a", 0, 0, "p")
    pres.glue("a", 0, 1, "q")
    pres.glue("b", 0, 0, "q")
    pres.glue("b", 0, 1, "q")
    pres.add_cube("s", 2)
    for side in (0, 1):
        pres.glue("s", 0, side, "a")
        pres.glue("s", 1, side, "a")
    with pytest.raises(InconsistentCorners):
        compile_presentation(pres)


def test_compile_is_deterministic():
    a, b = compile_presentation(torus_presentation()), compile_presentation(torus_presentation())
    assert [a.cells_of_dim(k) for k in range(3)] == [b.cells_of_dim(k) for k in range(3)]
    assert all(a.facets(c) == b.facets(c) for c in a.all_cells())


def test_every_edge_has_two_endpoints():
    for X in (torus_complex(3), surface_complex(2), standard_cube(3)):
        for e in X.edges:
            ends = X.endpoints(e)
            assert len(ends) == 2 and all(X.dim_of(v) == 0 for v in ends)


def test_codimension_two_faces_agree():
    X = standard_cube(3)
    c = X.cells_of_dim(3)[0]
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for si in (0, 1):
                for sj in (0, 1):
                    face = [None] * 3
                    face[i], face[j] = si, sj
                    t, _ = X.face(c, tuple(face))
                    f1, p1 = X.facet(c, i, si)
                    # restrict f1 at j, renumbered after dropping i
                    jj = j if j < i else j - 1
                    k = p1.targets[jj]
                    side = sj if p1.signs[jj] == 1 else 1 - sj
                    t2, _ = X.facet(f1, k, side)
                    assert t == t2


# links


def test_torus_link_is_a_4_cycle():
    X = torus_complex(2)
    G = link_graph(link(X, X.vertices[0]))
    assert nx.is_isomorphic(G, nx.cycle_graph(4))


def test_link_of_isolated_point_is_empty():
    X = point()
    L = link(X, X.vertices[0])
    assert L.vertices == [] and L.simplex_count() == 0


def test_link_unknown_vertex():
    with pytest.raises(UnknownCell):
        link(torus_complex(2), "nope")


def test_link_simplex_count_matches_corners():
    for X in (torus_complex(3), surface_complex(2), standard_cube(3)):
        for v in X.vertices:
            expected = sum(
                sum(1 for kappa in corners_of(X.dim_of(c)) if X.corner(c, kappa) == v)
                for c in X.all_cells()
                if X.dim_of(c) >= 1
            )
            assert link(X, v).simplex_count() == expected


def test_three_torus_link_is_octahedron():
    X = torus_complex(3)
    L = link(X, X.vertices[0])
    G = link_graph(L)
    octahedron = nx.complete_multipartite_graph(2, 2, 2)
    assert nx.is_isomorphic(G, octahedron)
    assert len(L.simplices[2]) == 8


# skeleta and Euler characteristic


def test_skeleton_of_cube_is_its_surface():
    S = skeleton(standard_cube(3), 2)
    assert S.cell_counts() == (8, 12, 6)
    assert euler_characteristic(S) == 2


def test_skeleton_of_torus_is_a_wedge():
    assert skeleton(torus_complex(2), 1).cell_counts() == (1, 2)


def test_zero_skeleton():
    X = surface_complex(2)
    assert skeleton(X, 0).cell_counts() == (len(X.vertices),)


def test_euler_characteristics():
    assert euler_characteristic(torus_complex(2)) == 0
    assert euler_characteristic(surface_complex(2)) == 2 - 2 * 2
    for n in (1, 2, 3):
        assert euler_characteristic(torus_complex(n)) == 0


def test_skeleton_euler_uses_low_cells():
    X = torus_complex(3)
    for k in range(4):
        counts = X.cell_counts()[: k + 1]
        assert euler_characteristic(skeleton(X, k)) == sum((-1) ** i * n for i, n in enumerate(counts))


def test_from_squares_matches_explicit_presentation():
    X = CubeComplex(GluingPresentation.from_squares(["v"], [("a", "v", "v"), ("b", "v", "v")], [("s", ["a", "b", "~a", "~b"])]))
    assert X.cell_counts() == (1, 2, 1)
    assert nx.is_isomorphic(link_graph(link(X, "v")), nx.cycle_graph(4))
