import networkx as nx
import pytest
from hypothesis import given

from comaxdim.comaximal import build_bundle, build_gamma, build_gamma_prime, build_gamma_star
from comaxdim.errors import DisconnectedGraphError
from comaxdim.graph import Graph, diameter
from comaxdim.ring import enumerate_maximal_ideals
from comaxdim.strong_resolving import boundary, build_srg, is_maximally_distant, mmd_adjacency

from conftest import chain_specs_up_to, small_named_graphs, spec
from test_graph import graphs

CORPUS = chain_specs_up_to(30) + [spec(*([1] * 6)), spec(3, 3, 3), spec(2, 2, 2, 2)]


def brute_boundary(g):
    # definitional scan with networkx distances
    d = dict(nx.all_pairs_shortest_path_length(nx.Graph(g.edges()) if g.edges() else nx.empty_graph(g.n)))
    nbr = {u: list(g.neighborhoods(u)[0]) for u in range(g.n)}

    def md(u, v):
        return all(d[v][w] <= d[u][v] for w in nbr[u])

    return {u for u in range(g.n) for v in range(g.n) if u != v and md(u, v) and md(v, u)}


def test_maximally_distant_examples(z2_cubed):
    p = Graph.path(4)
    assert is_maximally_distant(p, 0, 3) and is_maximally_distant(p, 3, 0)
    g = build_gamma(z2_cubed)
    u = g.index(z2_cubed.ideal((1, 1, 0)))
    v = g.index(z2_cubed.ideal((0, 0, 1)))
    assert not is_maximally_distant(g, u, v)
    # false twins in C4 are mutually maximally distant
    c4 = Graph.cycle(4)
    assert is_maximally_distant(c4, 0, 2) and is_maximally_distant(c4, 2, 0)


def test_disconnected_rejected():
    g = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(DisconnectedGraphError):
        boundary(g)
    with pytest.raises(DisconnectedGraphError):
        is_maximally_distant(g, 0, 1)


def test_boundary_examples(z2_cubed, z4z4z8):
    g = build_gamma(z2_cubed)
    assert {g.labels[v].levels for v in boundary(g)} == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    s4 = spec(1, 1, 1, 1)
    g4 = build_gamma(s4)
    assert {g4.labels[v] for v in boundary(g4)} == set(g4.labels) - set(enumerate_maximal_ideals(s4))
    assert len(boundary(build_gamma(z4z4z8))) == 23


def test_srg_examples(z2_cubed, z4z4z8):
    assert build_srg(Graph.complete(1)).srg.n == 0
    for n in range(2, 7):
        assert build_srg(Graph.complete(n)).srg == Graph.complete(n)
    sr = build_srg(build_gamma(z2_cubed))
    assert sr.srg.n == 3 and sr.srg.is_complete()
    sr = build_srg(build_gamma(z4z4z8))
    assert sr.srg.n == 23
    assert sr.srg.same_labeled_graph(build_gamma_prime(z4z4z8))


@given(graphs(max_n=8))
def test_boundary_matches_definition(g):
    if g.n == 0 or not g.is_connected():
        return
    assert set(boundary(g)) == brute_boundary(g)


@given(graphs(max_n=8))
def test_srg_symmetric_and_contains_diametral_pairs(g):
    if g.n < 2 or not g.is_connected():
        return
    sr = build_srg(g)
    mmd = mmd_adjacency(g)
    for u in range(g.n):
        for v in range(g.n):
            assert (mmd[u] >> v & 1) == (mmd[v] >> u & 1)
    diam = diameter(g)
    pairs = set(sr.mmd_pairs)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.dist[u][v] == diam:
                assert (u, v) in pairs
    for i in range(sr.srg.n):
        assert sr.srg.adj[i], "every boundary vertex has an MMD partner"


@pytest.mark.parametrize("name, g", small_named_graphs().items())
def test_srg_maps_back_to_base(name, g):
    sr = build_srg(g)
    for i, j in sr.srg.edges():
        assert (sr.boundary[i], sr.boundary[j]) in set(sr.mmd_pairs)
    assert sr.to_base(range(sr.srg.n)) == sr.boundary


@pytest.mark.parametrize("s", [x for x in CORPUS if x.is_reduced], ids=lambda s: str(s.chain))
def test_reduced_srg_is_gamma_star(s):
    assert build_srg(build_gamma(s)).srg.same_labeled_graph(build_gamma_star(s))


@pytest.mark.parametrize("s", [x for x in CORPUS if not x.m_fields], ids=lambda s: str(s.chain))
def test_nonreduced_srg_is_gamma_prime(s):
    assert build_srg(build_gamma(s)).srg.same_labeled_graph(build_gamma_prime(s))


@pytest.mark.parametrize("s", [x for x in CORPUS if x.m_fields and x.n_nonfields], ids=lambda s: str(s.chain))
def test_mixed_srg_is_gamma_prime_on_boundary(s):
    b = build_bundle(s)
    sr = build_srg(b.gamma)
    assert len(sr.boundary) == b.gamma.n - s.m_fields
    assert b.gamma_prime.induced_subgraph(sr.boundary).same_labeled_graph(sr.srg)
