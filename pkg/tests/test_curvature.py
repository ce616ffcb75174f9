import pytest
from hypothesis import given

import zoo
from npcube import LinkComplex, is_flag, is_npc, is_simplicial, link, salvetti, skeleton, standard_cube, torus_complex
from npcube.constructions import SimplicialGraph, point, square_complex
from npcube.curvature import link_girth
from strategies import one_vertex_square_complexes

LOOP = [("a", "v", "v")]


def test_torus_link_is_simplicial():
    X = torus_complex(2)
    assert is_simplicial(link(X, X.vertices[0])).ok


def test_loop_in_link():
    X = square_complex(["v"], LOOP, [("s", ["a", "a", "~a", "~a"])])
    v = is_simplicial(link(X, "v"))
    assert not v.ok and v.reason == "loop"
    s = v.witness[0]
    assert s.vertices[0] == s.vertices[1]


def test_parallel_simplices():
    edges = [("a", "v", "v"), ("b", "v", "v")]
    X = square_complex(["v"], edges, [("s", ["a", "b", "~a", "~b"]), ("t", ["a", "b", "~a", "~b"])])
    v = is_simplicial(link(X, "v"))
    assert not v.ok and v.reason == "parallel"
    assert link_girth(link(X, "v")) == 2
    assert not is_npc(X).npc


def test_empty_link_is_simplicial_and_flag():
    X = point()
    L = link(X, X.vertices[0])
    assert is_simplicial(L).ok and is_flag(L).ok


def test_four_cycle_is_flag():
    L = LinkComplex.from_simplices("abcd", ["ab", "bc", "cd", "da"])
    assert is_flag(L).ok


def test_empty_triangle_is_not_flag():
    L = LinkComplex.from_simplices("abc", ["ab", "bc", "ca"])
    v = is_flag(L)
    assert not v.ok and set(v.witness) == set("abc")


def test_filled_triangle_is_flag():
    L = LinkComplex.from_simplices("abc", ["ab", "bc", "ca", "abc"])
    assert is_flag(L).ok


def test_hollow_tetrahedron_is_not_flag():
    faces = ["ab", "ac", "ad", "bc", "bd", "cd", "abc", "abd", "acd", "bcd"]
    v = is_flag(LinkComplex.from_simplices("abcd", faces))
    assert not v.ok and set(v.witness) == set("abcd")
    assert is_flag(LinkComplex.from_simplices("abcd", faces + ["abcd"])).ok


def test_npc_examples():
    assert is_npc(torus_complex(2)).npc
    assert is_npc(salvetti(SimplicialGraph.complete(3))).npc
    report = is_npc(skeleton(standard_cube(3), 2))
    assert not report.npc
    assert all(len(s.witness) == 3 for s in report.failures)


def test_higher_skeleta_of_cubes():
    # the (n-1)-skeleton of an n-cube is never npc for n >= 3
    for n in (3, 4):
        assert not is_npc(skeleton(standard_cube(n), n - 1)).npc
        assert is_npc(standard_cube(n)).npc


@pytest.mark.parametrize("name", zoo.two_dimensional())
def test_girth_agrees_on_zoo(name):
    assert is_npc(zoo.get(name)).girth_agrees()


@given(one_vertex_square_complexes())
def test_dimension_two_npc_is_girth_four(X):
    report = is_npc(X)
    assert report.girth_agrees()
    assert report.npc == all(link_girth(link(X, v)) >= 4 for v in X.vertices)
