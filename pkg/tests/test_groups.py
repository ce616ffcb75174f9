import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
import zoo
from npcube import (
    GroupSpec,
    Presentation,
    SimplicialGraph,
    cayley_ball,
    delta_estimate,
    pieces,
    raag_normal_form,
    small_cancellation,
    symmetrize,
)
from npcube.errors import EmptyRelator, RadiusCapExceeded
from npcube.groups import cyclic_reduce, format_word, free_reduce, parse_word, surface_presentation
from strategies import graphs, words


def test_commutator_symmetrizes_to_eight_words():
    R = symmetrize(Presentation.parse("ab", ["abAB"]))
    assert len(R) == 8
    w = parse_word("abAB", "ab")
    expected = set()
    for u in (w, tuple(-x for x in reversed(w))):
        for i in range(4):
            expected.add(u[i:] + u[:i])
    assert set(R) == expected


def test_empty_presentation():
    assert symmetrize(Presentation(("a",), ())) == ()


def test_cyclic_reduction_in_symmetrize():
    R = symmetrize(Presentation.parse("ab", ["aAb"]))
    assert set(R) == {(2,), (-2,)}


def test_trivial_relator_rejected():
    with pytest.raises(EmptyRelator):
        symmetrize(Presentation.parse("a", ["aA"]))


@given(st.lists(words(3, 6).filter(lambda w: cyclic_reduce(w)), min_size=1, max_size=3))
def test_symmetrize_idempotent(rels):
    R = symmetrize(rels)
    assert symmetrize(R) == R


@given(st.lists(words(3, 7).filter(lambda w: cyclic_reduce(w)), min_size=1, max_size=3))
def test_pieces_against_subword_oracle(rels):
    assert pieces(symmetrize(rels)).max_length == oracles.cyclic_piece_length(rels)


def test_piece_lengths():
    assert pieces(symmetrize(surface_presentation(2))).max_length == 1
    assert pieces(symmetrize(Presentation.parse("ab", ["abAB"]))).max_length == 1
    assert pieces(()).max_length == 0


def test_free_group_conditions_vacuous():
    free = Presentation(("a", "b"), ())
    for n in range(2, 9):
        assert small_cancellation(free, n) == (True, True)


def test_surface_small_cancellation():
    assert small_cancellation(surface_presentation(2), 7)[0]
    assert not small_cancellation(surface_presentation(2), 8)[0]
    torus = Presentation.parse("ab", ["abAB"])
    assert small_cancellation(torus, 3)[0]
    assert not small_cancellation(torus, 4)[0]
    assert small_cancellation(torus, 4)[1]
    assert not small_cancellation(torus, 5)[1]


@pytest.mark.parametrize("name", sorted(zoo.presentations()))
def test_cprime_implies_c_next(name):
    P = zoo.presentations()[name]
    for n in range(2, 9):
        if small_cancellation(P, n)[0]:
            assert small_cancellation(P, n + 1)[1]


@given(st.lists(words(2, 8).filter(lambda w: cyclic_reduce(w)), min_size=1, max_size=3), st.integers(2, 8))
def test_random_cprime_implies_c_next(rels, n):
    if small_cancellation(rels, n)[0]:
        assert small_cancellation(rels, n + 1)[1]


def test_word_round_trip():
    w = parse_word("abAB", "ab")
    assert w == (1, 2, -1, -2)
    assert format_word(w, "ab") == "abAB"
    assert free_reduce((1, -1, 2)) == (2,)
    assert cyclic_reduce((1, 2, -1)) == (2,)


# RAAG normal forms


def test_normal_form_examples():
    edge = SimplicialGraph(("a", "b"), frozenset({frozenset("ab")}))
    assert raag_normal_form(edge, (2, 1)) == (1, 2)
    assert raag_normal_form(edge, (1, -1)) == ()
    free = SimplicialGraph.edgeless(2)
    assert raag_normal_form(free, (2, 1)) == (2, 1)


@given(graphs(4), words(4, 7))
def test_normal_form_matches_bfs_oracle(g, w):
    w = tuple(x for x in w if abs(x) <= len(g.vertices))
    vs = g.vertices

    def commuting(x, y):
        return g.adjacent(vs[x - 1], vs[y - 1])

    assert raag_normal_form(g, w) == oracles.raag_normal_form_bfs(commuting, w)


@given(graphs(4), words(4, 8))
def test_normal_form_idempotent_and_shorter(g, w):
    w = tuple(x for x in w if abs(x) <= len(g.vertices))
    nf = raag_normal_form(g, w)
    assert raag_normal_form(g, nf) == nf
    assert len(nf) <= len(w)
    assert raag_normal_form(g, nf + tuple(-x for x in reversed(w))) == ()


@given(words(3, 9))
def test_complete_graph_sorts(w):
    nf = raag_normal_form(SimplicialGraph.complete(3), w)
    exps = {g: sum(1 if x == g else -1 if x == -g else 0 for x in w) for g in (1, 2, 3)}
    expected = tuple(x for g in (1, 2, 3) for x in [g if exps[g] > 0 else -g] * abs(exps[g]))
    assert nf == expected


@given(words(3, 9))
def test_edgeless_graph_is_free_reduction(w):
    assert raag_normal_form(SimplicialGraph.edgeless(3), w) == free_reduce(w)


# Cayley balls and thin triangles


@pytest.mark.parametrize("k,r", [(1, 3), (2, 2), (2, 3), (3, 2)])
def test_free_ball_counts(k, r):
    assert len(cayley_ball(GroupSpec.free(k), r).vertices) == oracles.free_ball_size(k, r)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_z2_ball_counts(r):
    B = cayley_ball(GroupSpec.raag(SimplicialGraph.complete(2)), r)
    assert len(B.vertices) == oracles.z2_ball_size(r)


def test_ball_of_radius_zero():
    B = cayley_ball(GroupSpec.free(2), 0)
    assert B.vertices == [()] and B.edges == []


def test_radius_cap():
    with pytest.raises(RadiusCapExceeded):
        cayley_ball(GroupSpec.free(2), 9)


def test_edge_labels_follow_left_multiplication():
    spec = GroupSpec.free(2)
    B = cayley_ball(spec, 2)
    for g, h, s in B.edges:
        # g h^-1 = s
        assert spec.normal_form(g + tuple(-x for x in reversed(h))) == (s,)


def test_free_ball_is_a_tree():
    G = cayley_ball(GroupSpec.free(2), 3).graph()
    assert nx.is_tree(G)


def test_delta_on_trees_and_grids():
    assert delta_estimate(nx.path_graph(6)).delta == 0
    assert delta_estimate(nx.balanced_tree(2, 3)).delta == 0
    assert delta_estimate(nx.Graph([(0, 0)])).delta == 0
    G = nx.grid_2d_graph(3, 3)
    assert delta_estimate(G).delta == oracles.thinness(G)


@pytest.mark.parametrize("G", [nx.cycle_graph(6), nx.cycle_graph(7), nx.grid_2d_graph(2, 4), nx.petersen_graph()], ids=["c6", "c7", "grid", "petersen"])
def test_delta_matches_brute_force(G):
    assert delta_estimate(G).delta == oracles.thinness(G)


@given(st.integers(2, 12), st.integers(0, 10**6))
def test_delta_random_trees(n, s):
    T = nx.random_labeled_tree(n, seed=s) if hasattr(nx, "random_labeled_tree") else nx.random_tree(n, seed=s)
    assert delta_estimate(T).delta == 0


def test_z2_flat_triangle():
    B = cayley_ball(GroupSpec.raag(SimplicialGraph.complete(2)), 4)
    est = delta_estimate(B)
    assert est.delta >= 1 and not est.exact
    a, b, c, p = est.witness
    assert {a, b, c} <= set(B.interior())


def test_free_delta_zero():
    est = delta_estimate(cayley_ball(GroupSpec.free(2), 4))
    assert est.delta == 0 and est.exact
