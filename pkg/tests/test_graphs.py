import pytest

from specmult.errors import (
    CapExceeded,
    DuplicateEdge,
    IndexOutOfRange,
    LoopEdge,
    MissingEdge,
    ParameterOutOfRange,
    ParseError,
)
from specmult.graphs import (
    Graph,
    bfs_distances,
    components,
    cycle_graph,
    cyclomatic_number,
    delete_edge,
    delete_vertices,
    disjoint_union,
    induced_subgraph,
    infinity_graph,
    is_connected,
    parse_graph,
    path_graph,
    pendant_vertices,
    relabel,
    serialize_graph,
    star_graph,
    tadpole_graph,
    theta_graph,
)


def test_graph_normalizes_and_sorts_edges():
    g = Graph(4, [(3, 1), (0, 2)])
    assert g.edges == ((0, 2), (1, 3))
    assert g.has_edge(1, 3) and g.has_edge(3, 1)
    assert not g.has_edge(0, 1)


def test_graph_rejects_bad_edges():
    with pytest.raises(LoopEdge):
        Graph(3, [(1, 1)])
    with pytest.raises(DuplicateEdge):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(IndexOutOfRange):
        Graph(3, [(0, 3)])
    with pytest.raises(ParameterOutOfRange):
        Graph(-1, [])


def test_degrees_and_pendants():
    g = star_graph(3)
    assert g.degrees() == (3, 1, 1, 1)
    assert pendant_vertices(g) == (1, 2, 3)
    assert pendant_vertices(cycle_graph(5)) == ()


def test_parse_serialize_round_trip():
    g = theta_graph(2, 2, 1)
    text = serialize_graph(g)
    assert parse_graph(text) == g
    # header is "n m", one edge per line after
    head = text.splitlines()[0].split()
    assert int(head[0]) == g.n and int(head[1]) == len(g.edges)


def test_parse_graph_rejects_malformed():
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("3 1\n0\n")
    with pytest.raises(ParseError):
        parse_graph("3 2\n0 1\n")  # header promises 2 edges
    with pytest.raises(LoopEdge):
        parse_graph("3 1\n2 2\n")


def test_parse_graph_allows_comments_and_blanks():
    g = parse_graph("# a triangle\n3 3\n\n0 1\n1 2\n0 2\n")
    assert g == cycle_graph(3)


def test_components_and_connectivity():
    g = disjoint_union(cycle_graph(3), path_graph(2))
    comps = components(g)
    assert sorted(len(c) for c in comps) == [2, 3]
    assert not is_connected(g)
    assert is_connected(cycle_graph(4))
    # isolated vertices count as components
    assert len(components(Graph(3, []))) == 3


def test_cyclomatic_number():
    assert cyclomatic_number(path_graph(5)) == 0
    assert cyclomatic_number(cycle_graph(5)) == 1
    assert cyclomatic_number(theta_graph(2, 2, 1)) == 2
    assert cyclomatic_number(disjoint_union(cycle_graph(3), cycle_graph(3))) == 2


def test_induced_subgraph_map():
    g = cycle_graph(5)
    sub = induced_subgraph(g, [0, 1, 2, 4])
    assert sub.to_parent == (0, 1, 2, 4)
    assert sub.child.edges == ((0, 1), (0, 3), (1, 2))
    assert sub.parent_of(3) == 4
    with pytest.raises(IndexOutOfRange):
        induced_subgraph(g, [0, 9])


def test_delete_vertices_complements_induced():
    g = tadpole_graph(4, 2)
    a = delete_vertices(g, [0])
    b = induced_subgraph(g, [v for v in range(g.n) if v != 0])
    assert a.child == b.child and a.to_parent == b.to_parent


def test_delete_edge():
    g = cycle_graph(4)
    h = delete_edge(g, (0, 3))
    assert h.n == 4 and not h.has_edge(0, 3)
    assert cyclomatic_number(h) == 0
    with pytest.raises(MissingEdge):
        delete_edge(h, (0, 3))


def test_bfs_distances():
    g = path_graph(4)
    assert bfs_distances(g, 0) == [0, 1, 2, 3]
    g2 = disjoint_union(path_graph(2), path_graph(1))
    assert bfs_distances(g2, 0)[2] == -1


def test_builders_have_documented_shapes():
    p = path_graph(4)
    assert p.n == 4 and len(p.edges) == 3
    c = cycle_graph(6)
    assert c.n == 6 and len(c.edges) == 6 and all(c.degree(v) == 2 for v in range(6))
    s = star_graph(4)
    assert s.n == 5 and s.degree(0) == 4

    th = theta_graph(3, 2, 1)
    assert th.n == 3 + 2 + 1 - 1 and len(th.edges) == 3 + 2 + 1
    assert cyclomatic_number(th) == 2

    inf = infinity_graph(3, 4, 1)  # shared vertex
    assert inf.n == 3 + 4 + 1 - 2 and cyclomatic_number(inf) == 2
    assert max(inf.degrees()) == 4
    inf2 = infinity_graph(3, 3, 3)
    assert inf2.n == 7 and sorted(inf2.degrees()).count(3) == 2

    t = tadpole_graph(3, 2)
    assert t.n == 5 and len(pendant_vertices(t)) == 1


def test_builder_parameter_validation():
    with pytest.raises(ParameterOutOfRange):
        cycle_graph(2)
    with pytest.raises(ParameterOutOfRange):
        theta_graph(1, 1, 1)  # at most one path of length 1
    with pytest.raises(ParameterOutOfRange):
        infinity_graph(2, 3, 1)
    with pytest.raises(ParameterOutOfRange):
        tadpole_graph(3, 0)
    with pytest.raises(ParameterOutOfRange):
        path_graph(0)


def test_relabel_is_isomorphism():
    g = tadpole_graph(3, 2)
    perm = [4, 3, 2, 1, 0]
    h = relabel(g, perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert h.has_edge(perm[0], perm[1]) == g.has_edge(0, 1)
    with pytest.raises(ParameterOutOfRange):
        relabel(g, [0, 1, 2, 3, 3])
