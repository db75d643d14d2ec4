from itertools import combinations

import networkx as nx
import pytest

from oracle import essentially_4_connected, to_nx
from tricirc.connectivity import (
    components_without,
    connectivity_at_least,
    is_essentially_4_connected,
    nontrivial_cuts,
    separating_triangles,
    three_cuts,
)
from tricirc.embedding import insert_vertex
from tricirc.errors import NotThreeConnected
from tricirc.generators import (
    double_wheel,
    extremal_expand,
    octahedron,
    random_triangulation,
    tetrahedron,
)


def _nx_three_cuts(G):
    return {
        frozenset(c)
        for c in combinations(G, 3)
        if not nx.is_connected(G.subgraph(set(G) - set(c)))
    }


@pytest.mark.parametrize("n, seed", [(n, s) for n in range(5, 11) for s in range(3)])
def test_three_cuts_are_separating_triangles(n, seed):
    g = random_triangulation(n, seed)
    expected = _nx_three_cuts(to_nx(g))
    assert {c.vertices for c in three_cuts(g)} == expected
    assert {c.vertices for c in separating_triangles(g)} == expected
    assert is_essentially_4_connected(g) == essentially_4_connected(to_nx(g))


@pytest.mark.parametrize("n, seed", [(6, 0), (8, 1), (9, 2), (10, 3)])
def test_connectivity_levels_match_networkx(n, seed):
    g = random_triangulation(n, seed)
    kappa = nx.node_connectivity(to_nx(g))
    for k in range(1, 6):
        assert connectivity_at_least(g, k) == (kappa >= k)
    assert g.is_4_connected == (kappa >= 4)


def test_octahedron_is_4_connected():
    o = octahedron()
    assert o.is_4_connected and o.is_essentially_4_connected
    assert separating_triangles(o) == []


def test_extremal_has_one_separating_triangle_per_base_face():
    g = extremal_expand(octahedron())
    seps = separating_triangles(g)
    assert len(seps) == 8
    assert all(c.trivial for c in seps)
    assert {c.vertices for c in seps} == {frozenset(f) for f in octahedron().faces}
    assert g.is_essentially_4_connected and not g.is_4_connected


def test_double_stacking_breaks_essential_4_connectivity():
    g = insert_vertex(double_wheel(5), (0, 1, 5))
    g = insert_vertex(g, (0, 1, 7))
    assert not is_essentially_4_connected(g)
    cut = nontrivial_cuts(g)[0]
    assert list(cut.sorted_vertices()) == [0, 1, 5]
    assert sorted(map(len, cut.components)) == [2, 4]


def test_components_without():
    comps = components_without(double_wheel(4), frozenset({4, 5}))
    assert comps == [frozenset(range(4))]


def test_not_three_connected_is_reported():
    # the tetrahedron is 3-connected but too small for a 3-cut
    assert three_cuts(tetrahedron()) == []
    g = nx.path_graph(4)
    from tricirc.embedding import Embedding

    path = Embedding(4, [list(g[v]) for v in range(4)])
    with pytest.raises(NotThreeConnected):
        three_cuts(path)
