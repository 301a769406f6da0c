"""
Тесты графов: степени, расстояния, обхват, складки и индуцированные подграфы.
"""

import networkx as nx
import pytest

from clique_powers.config import settings
from clique_powers.core.graph import (
    INFINITE,
    Graph,
    cliques,
    complement,
    components,
    contains_induced,
    dismantle,
    distances,
    find_fold,
    girth,
    induced,
    is_cone,
    is_connected,
    is_stability_free,
    maximal_cliques,
    power,
    remove_vertex,
    triangle_count,
)
from clique_powers.exceptions import InputError
from clique_powers.families import complete, cycle, path, petersen, random_graph, random_tree, three_sun


class TestGraph:
    """Тесты построения графа."""

    def test_edges_are_canonical(self):
        graph = Graph(3, [(1, 0), (0, 1), (2, 1)])
        assert graph.edge_list() == [(0, 1), (1, 2)]
        assert graph.edge_count == 2
        assert graph.neighbors(1) == (0, 2)

    def test_self_loop_rejected(self):
        with pytest.raises(InputError, match="self-loop"):
            Graph(3, [(1, 1)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(InputError):
            Graph(3, [(0, 3)])

    def test_equality_and_hash(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert len({Graph(3, [(0, 1)]), Graph(3, [(1, 0)])}) == 1
        assert Graph(3, [(0, 1)]) != Graph(4, [(0, 1)])

    def test_to_networkx(self):
        assert nx.is_isomorphic(petersen().to_networkx(), nx.petersen_graph())


class TestPower:
    """Тесты степеней графа."""

    def test_square_of_cycle(self):
        square = power(cycle(6), 2)
        assert square.edge_count == 12
        assert all(square.degree(v) == 4 for v in square.vertices)

    def test_zero_power_is_edgeless(self):
        assert power(cycle(5), 0).edge_count == 0

    def test_large_power_of_path_is_complete(self):
        assert power(path(5), 10) == complete(5)

    def test_negative_power_rejected(self):
        with pytest.raises(InputError):
            power(cycle(5), -1)

    @pytest.mark.parametrize("seed", range(5))
    def test_power_matches_networkx(self, seed):
        graph = random_graph(9, 0.3, seed)
        expected = nx.power(graph.to_networkx(), 3)
        assert power(graph, 3).edges == {tuple(sorted(e)) for e in expected.edges}

    def test_power_of_disconnected_graph(self):
        graph = Graph(4, [(0, 1), (2, 3)])
        assert power(graph, 3) == graph


class TestDistances:
    """Тесты расстояний и обхвата."""

    def test_cycle_distances(self):
        table = distances(cycle(6))
        assert table.dist(0, 3) == 3
        assert table.dist(1, 5) == 2
        assert table.set_distance([0, 1], [3, 4]) == 2

    def test_unreachable(self):
        table = distances(Graph(3, [(0, 1)]))
        assert table.dist(0, 2) is INFINITE
        assert table.set_distance([0], [2]) is INFINITE

    @pytest.mark.parametrize(
        "graph, expected",
        [(cycle(7), 7), (complete(4), 3), (petersen(), 5), (path(6), INFINITE), (random_tree(9, 3), INFINITE)],
    )
    def test_girth(self, graph, expected):
        assert girth(graph) == expected

    def test_components(self):
        graph = Graph(5, [(0, 3), (1, 4)])
        assert components(graph) == [[0, 3], [1, 4], [2]]
        assert not is_connected(graph)
        assert is_connected(cycle(4))


class TestCliques:
    """Тесты перечисления клик."""

    def test_all_cliques_of_k4(self):
        found = list(cliques(complete(4)))
        assert len(found) == 16
        assert len(set(found)) == 16
        assert () in found

    def test_clique_size_cap(self):
        assert max(len(c) for c in cliques(complete(5), max_size=2)) == 2

    @pytest.mark.parametrize("seed", range(6))
    def test_maximal_cliques_match_networkx(self, seed):
        graph = random_graph(10, 0.5, seed)
        expected = sorted(tuple(sorted(c)) for c in nx.find_cliques(graph.to_networkx()))
        assert sorted(maximal_cliques(graph)) == expected

    def test_triangle_count(self):
        assert triangle_count(complete(4)) == 4
        assert triangle_count(petersen()) == 0


class TestOperations:
    """Тесты дополнения, индуцированных подграфов и удаления вершин."""

    def test_complement_of_c5_is_c5(self):
        assert nx.is_isomorphic(complement(cycle(5)).to_networkx(), cycle(5).to_networkx())

    def test_induced_keeps_sequence_order(self):
        sub, mapping = induced(cycle(6), [3, 2, 1])
        assert mapping == (3, 2, 1)
        assert sub.edge_list() == [(0, 1), (1, 2)]

    def test_induced_rejects_duplicates(self):
        with pytest.raises(InputError):
            induced(cycle(6), [1, 1])

    def test_remove_vertex_renumbers(self):
        assert remove_vertex(cycle(4), 0) == path(3)


class TestFolds:
    """Тесты складок и разборности."""

    def test_find_fold_on_path(self):
        assert find_fold(path(3)) == (0, 1)

    def test_cycle_has_no_fold(self):
        assert find_fold(cycle(5)) is None
        assert dismantle(cycle(5)) is None

    @pytest.mark.parametrize("seed", range(4))
    def test_trees_are_dismantlable(self, seed):
        tree = random_tree(8, seed)
        folds = dismantle(tree)
        assert folds is not None
        assert len(folds) == 7

    def test_empty_graph_rejected(self):
        with pytest.raises(InputError):
            dismantle(Graph(0))

    def test_cone(self):
        assert is_cone(path(3))
        assert not is_cone(cycle(4))
        assert not is_cone(three_sun())


class TestInducedSubgraphs:
    """Тесты поиска индуцированных подграфов."""

    def test_contains_itself(self):
        assert contains_induced(cycle(6), cycle(6))

    def test_complete_graph_has_no_induced_c4(self):
        assert not contains_induced(complete(5), cycle(4))

    def test_pattern_above_cap(self, monkeypatch):
        monkeypatch.setattr(settings, "induced_search_cap", 3)
        with pytest.raises(InputError, match="search cap"):
            contains_induced(cycle(6), cycle(4))

    @pytest.mark.parametrize(
        "graph, expected",
        [(complete(5), True), (path(6), True), (cycle(4), False), (cycle(6), False), (three_sun(), False)],
    )
    def test_stability_free(self, graph, expected):
        assert is_stability_free(graph) is expected
