"""
Тесты валидаторов теорем и реестра проверок.
"""

import networkx as nx
import pytest

from clique_powers.core.complex import SimplicialComplex, independence_complex, simplex, simplex_boundary
from clique_powers.core.complex import disjoint_union as complex_union
from clique_powers.core.graph import Graph, power
from clique_powers.exceptions import InputError, PreconditionError
from clique_powers.families import (
    circular_complete,
    complete,
    cycle,
    path,
    petersen,
    random_tree,
    real_projective_plane,
    s_graph,
    three_sun,
)
from clique_powers.theorems import (
    REGISTRY,
    CheckRequest,
    check_square_condition,
    circular_instance,
    classify_total_facets,
    cycle_power_profile,
    labelled_graphs,
    sequence_extended_graph,
    random_corpus,
    resolve,
    signed_instance,
    star_cluster,
    table_cell,
    validate_covering,
    validate_dismantlable_power,
    validate_distance_lemma,
    validate_double_suspension,
    validate_h1_surjection,
    validate_girth_collapse,
    validate_girth_sharpness,
    validate_kozlov,
    validate_sequence_extension,
    validate_sequence_extension_circular,
    validate_predictions,
    validate_square_condition,
    validate_stability_free,
    validate_stable_kneser,
    validate_star_cluster,
    validate_suspension_props,
    validate_table,
    validate_table_cell,
    validate_total_and_line,
    validate_universality,
)
from clique_powers.types import HomologyTier, Verdict

THEOREM_IDS = {
    "table",
    "kozlov",
    "girth-collapse",
    "girth-sharpness",
    "square-condition",
    "stability-free",
    "star-cluster",
    "sequence-extension",
    "suspension",
    "double-suspension",
    "total-line",
    "kneser",
    "universality",
    "distance-lemma",
    "covering",
    "h1-surjection",
    "dismantle-power",
    "predictions",
}


class TestCyclePowerTable:
    """Тесты таблицы cl(C_n^r)."""

    def test_single_cell(self):
        report = validate_table_cell(6, 2)
        assert report.passed
        assert report.evidence["computed"] == "S^2"
        assert report.evidence["tier"] == "exact"

    @pytest.mark.parametrize("n", range(3, 13))
    def test_rows(self, n):
        reports = validate_table([n])
        assert len(reports) == n // 2 + 1
        assert all(r.passed for r in reports)

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(13, 21))
    def test_rows_up_to_twenty(self, n):
        assert all(r.passed for r in validate_table([n]))

    def test_field_tier(self):
        result = cycle_power_profile(9, 3, HomologyTier.FIELD)
        assert result.tier == HomologyTier.FIELD
        assert result.profile.render() == "v^2 S^2"

    def test_table_cell_conversion(self):
        cell = table_cell(validate_table_cell(9, 3))
        assert (cell.n, cell.r, cell.predicted, cell.computed, cell.agrees) == (9, 3, "v^2 S^2", "v^2 S^2", True)

    def test_resource_verdict(self, small_face_limit):
        report = validate_table_cell(12, 3)
        assert report.verdict == Verdict.RESOURCE
        assert report.evidence["limit"] == small_face_limit
        assert report.parameters == {"n": 12, "r": 3}
        cell = table_cell(report)
        assert cell.computed is None and cell.agrees is None

    @pytest.mark.parametrize("m", range(3, 15))
    def test_kozlov(self, m):
        assert validate_kozlov(m).passed


class TestCollapses:
    """Тесты стягиваемости клик-комплексов степеней."""

    def test_girth_collapse_on_cycle(self):
        report = validate_girth_collapse(cycle(13), 4)
        assert report.passed
        assert [stage["k"] for stage in report.evidence["stages"]] == [4, 3, 2]

    @pytest.mark.parametrize("seed", range(3))
    def test_girth_collapse_on_trees(self, seed):
        assert validate_girth_collapse(random_tree(9, seed), 3).passed

    def test_girth_too_small(self):
        with pytest.raises(PreconditionError):
            validate_girth_collapse(cycle(12), 4)
        with pytest.raises(InputError):
            validate_girth_collapse(cycle(12), 0)

    @pytest.mark.parametrize("r", [2, 3])
    def test_girth_sharpness(self, r):
        report = validate_girth_sharpness(r)
        assert report.passed
        assert report.evidence["cycle"] == "S^1"

    @pytest.mark.parametrize("graph", [random_tree(7, 0), complete(4), path(5)])
    def test_dismantlable_power(self, graph):
        assert validate_dismantlable_power(graph, 2).passed

    def test_cycle_is_not_dismantlable(self):
        with pytest.raises(PreconditionError):
            validate_dismantlable_power(cycle(5), 2)

    def test_resource_report_describes_graph(self, small_face_limit):
        report = validate_girth_collapse(cycle(40), 2)
        assert report.verdict == Verdict.RESOURCE
        assert report.parameters["graph"] == {"vertices": 40, "edges": 40}


class TestSquareCondition:
    """Тесты условия на квадрат графа."""

    def test_c6_witness(self):
        assert check_square_condition(cycle(6)) == (False, (0, 2, 4))

    def test_three_sun_witness(self):
        assert check_square_condition(three_sun()) == (False, (0, 1, 2, 3, 4, 5))

    def test_complete_graph_satisfies_condition(self):
        assert check_square_condition(complete(4)) == (True, None)

    def test_failing_condition_is_reported(self):
        report = validate_square_condition(cycle(6))
        assert report.passed
        assert report.evidence["condition"] is False

    @pytest.mark.parametrize("graph", [complete(4), path(5), petersen()])
    def test_condition_gives_equal_homology(self, graph):
        assert validate_square_condition(graph).passed

    def test_labelled_graphs(self):
        assert sum(1 for _ in labelled_graphs(3)) == 8

    def test_stability_free_small(self):
        report = validate_stability_free(4)
        assert report.passed
        assert report.evidence["checked"] == 64

    def test_stability_free_sampled(self):
        assert validate_stability_free(7, samples=10, seed=3).passed

    @pytest.mark.slow
    def test_stability_free_exhaustive(self):
        assert validate_stability_free(6).passed

    def test_exhaustive_limit(self):
        with pytest.raises(InputError):
            validate_stability_free(7)


class TestStarClusters:
    """Тесты звёздных кластеров и леммы о последовательностях."""

    def test_star_cluster_suspension(self):
        assert validate_star_cluster(cycle(5), 0).passed
        assert validate_star_cluster(circular_complete(9, 2), 0).passed

    def test_star_cluster_preconditions(self):
        with pytest.raises(PreconditionError, match="isolated"):
            star_cluster(Graph(3, [(0, 1)]), 2)
        with pytest.raises(PreconditionError, match="triangle"):
            star_cluster(complete(3), 0)
        with pytest.raises(InputError):
            star_cluster(cycle(5), 7)

    def test_circular_instance_gives_signed_graph(self):
        instance = circular_instance(9, 2)
        extension = sequence_extended_graph(instance.graph, instance.sequence)
        assert extension.equal
        assert extension.graph == s_graph(9, 2).graph

    def test_signed_instance(self):
        instance = signed_instance(11, 2)
        assert sequence_extended_graph(instance.graph, instance.sequence).equal

    @pytest.mark.parametrize("n, k", [(7, 2), (9, 2), (11, 2), (10, 3), (12, 3)])
    def test_sequence_extension_circular(self, n, k):
        report = validate_sequence_extension_circular(n, k)
        assert report.passed, report.evidence

    def test_sequence_extension_on_a_path(self):
        extension = sequence_extended_graph(path(3), [0, 2])
        assert extension.graph == Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert extension.equal
        assert (0, 2) not in extension.subcomplex
        report = validate_sequence_extension(path(3), [0, 2])
        assert report.verdict == Verdict.PASS
        assert report.parameters["sequence"] == [0, 2]
        assert report.evidence == {"L_faces": 4, "added_edges": 1}

    def test_sequence_extension_on_a_cycle(self):
        report = validate_sequence_extension(cycle(8), [0, 1, 2, 3])
        assert report.passed, report.counterexample
        assert report.evidence["added_edges"] > 0

    def test_signed_instance_fourteen_three(self):
        instance = signed_instance(14, 3)
        extension = sequence_extended_graph(instance.graph, instance.sequence)
        assert extension.equal
        assert extension.subcomplex == independence_complex(extension.graph)
        assert nx.is_isomorphic(extension.graph.to_networkx(), circular_complete(6, 3).to_networkx())
        report = validate_sequence_extension_circular(14, 3)
        assert report.passed
        assert report.evidence["signed_is_circular"] is True

    def test_sequence_extension_sequence_checks(self):
        with pytest.raises(InputError, match="even length"):
            sequence_extended_graph(cycle(5), [0, 1, 2])
        with pytest.raises(PreconditionError):
            sequence_extended_graph(cycle(5), [0, 0])

    def test_no_instance_applies(self):
        with pytest.raises(PreconditionError):
            validate_sequence_extension_circular(4, 3)


class TestSuspensions:
    """Тесты рекурсий надстройки."""

    @pytest.mark.parametrize("n, k", [(7, 2), (9, 2), (11, 2), (10, 3), (12, 3)])
    def test_suspension_props(self, n, k):
        report = validate_suspension_props(n, k)
        assert report.passed, report.evidence

    @pytest.mark.parametrize("n, k", [(9, 2), (11, 2), (12, 3), (13, 2)])
    def test_double_suspension(self, n, k):
        assert validate_double_suspension(n, k).passed

    def test_double_suspension_precondition(self):
        with pytest.raises(PreconditionError):
            validate_double_suspension(7, 2)


class TestTotalLineKneser:
    """Тесты тотальных и рёберных графов и графов Кнезера."""

    def test_classify_triangle(self):
        facets = classify_total_facets(complete(3))
        assert facets["counts"] == {"clique": 1, "edge": 3, "vertex_star": 3, "edge_triangle": 1}
        assert facets["other"] == []

    @pytest.mark.parametrize("graph", [complete(3), complete(4), cycle(5), path(4), petersen()])
    def test_total_and_line(self, graph):
        report = validate_total_and_line(graph)
        assert report.passed, report.evidence

    def test_disconnected_skips_line_part(self):
        report = validate_total_and_line(Graph(4, [(0, 1), (2, 3)]))
        assert report.passed
        assert "skipped" in report.note

    def test_default_corpus_size(self):
        jobs = REGISTRY["total-line"].jobs(CheckRequest())
        assert len(jobs) == 5 + 200
        assert len(REGISTRY["total-line"].jobs(CheckRequest(samples=10))) == 15

    @pytest.mark.slow
    def test_default_corpus(self):
        reports = [job() for job in REGISTRY["total-line"].jobs(CheckRequest())]
        assert len(reports) == 205
        assert [r.parameters for r in reports if not r.passed] == []

    @pytest.mark.parametrize("k", range(5))
    def test_stable_kneser(self, k):
        assert validate_stable_kneser(k).passed


class TestUniversality:
    """Тесты универсальности степеней подразбиений."""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_circle(self, r):
        assert validate_universality(simplex_boundary(2), 4, r).passed

    @pytest.mark.parametrize("s, r", [(3, 1), (4, 3)])
    def test_circle_at_range_ends(self, s, r):
        report = validate_universality(simplex_boundary(2), s, r)
        assert report.passed
        assert report.evidence["computed"] == report.evidence["K"]

    def test_two_circles(self):
        circles = complex_union(simplex_boundary(2), simplex_boundary(2))
        report = validate_universality(circles, 4, 2)
        assert report.passed, report.evidence

    def test_power_range(self):
        with pytest.raises(PreconditionError):
            validate_universality(simplex_boundary(2), 3, 2)

    @pytest.mark.slow
    def test_projective_plane(self):
        assert validate_universality(real_projective_plane(), 3, 1).passed

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_distance_lemma(self, s):
        report = validate_distance_lemma(simplex(2), s, 0, 1)
        assert report.passed
        assert report.evidence["distance"] == 2**s

    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_distance_lemma_on_tetrahedron_boundary(self, s):
        report = validate_distance_lemma(simplex_boundary(3), s, 0, 1)
        assert report.passed
        assert report.evidence["distance"] == 2**s

    def test_default_jobs(self):
        assert len(REGISTRY["universality"].jobs(CheckRequest())) == 4
        assert len(REGISTRY["universality"].jobs(CheckRequest(s=[5], r=[1, 2]))) == 2
        assert len(REGISTRY["distance-lemma"].jobs(CheckRequest())) == 6
        assert len(REGISTRY["distance-lemma"].jobs(CheckRequest(base=simplex(3), s=[2]))) == 1

    def test_distance_lemma_needs_an_edge(self):
        base = SimplicialComplex.from_facets(3, [(0, 1), (2,)])
        with pytest.raises(PreconditionError):
            validate_distance_lemma(base, 2, 0, 2)

    def test_covering(self):
        assert validate_covering(simplex(2), 3, 1).passed


class TestPowersAndPredictions:
    """Тесты для H1 и согласованности формул."""

    @pytest.mark.parametrize("graph", [cycle(7), petersen(), power(cycle(9), 1)])
    def test_h1_surjection(self, graph):
        assert validate_h1_surjection(graph, 2).passed

    def test_h1_surjection_on_random_graphs(self):
        for graph in random_corpus(8, seed=11, connected=True):
            assert validate_h1_surjection(graph, 3).passed

    def test_h1_surjection_needs_connected_graph(self):
        with pytest.raises(PreconditionError):
            validate_h1_surjection(Graph(4, [(0, 1)]), 2)

    def test_predictions(self):
        report = validate_predictions(60)
        assert report.passed
        assert report.evidence["cells"] > 0


class TestRegistry:
    """Тесты реестра проверок."""

    def test_ids(self):
        assert set(REGISTRY) == THEOREM_IDS

    def test_unknown_id(self):
        with pytest.raises(InputError, match="available"):
            resolve("riemann")

    def test_table_jobs(self):
        jobs = REGISTRY["table"].jobs(CheckRequest(n=[6, 7]))
        assert len(jobs) == 4 + 4
        assert jobs[0]().parameters["n"] == 6

    def test_jobs_use_input_graph(self):
        jobs = REGISTRY["square-condition"].jobs(CheckRequest(graph=cycle(6)))
        assert len(jobs) == 1
        assert jobs[0]().evidence["witness"] == (0, 2, 4)

    def test_sequence_extension_input_graph_needs_sequence(self):
        with pytest.raises(InputError, match="sequence"):
            REGISTRY["sequence-extension"].jobs(CheckRequest(graph=cycle(6)))

    def test_every_entry_builds_default_jobs(self):
        for entry in REGISTRY.values():
            assert entry.jobs(CheckRequest()), entry.theorem
