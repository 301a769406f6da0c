"""
Validators: each one builds the objects a statement is about, computes both sides and
returns a :class:`TheoremReport`.

Homotopy equivalences are compared through integer homology. A construction that would
exceed the configured face ceiling yields a ``resource`` verdict instead of an exception.
"""

import inspect
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import partial, wraps
from itertools import combinations, product
from typing import Any, TypeVar

import networkx as nx
from loguru import logger

from .config import settings
from .core.complex import (
    SimplicialComplex,
    clique_complex,
    complexes_equal,
    disjoint_union as complex_union,
    independence_complex,
    simplex,
    simplex_boundary,
    skeleton,
)
from .core.graph import (
    INFINITE,
    Graph,
    bfs_depths,
    complement,
    dismantle,
    girth,
    induced,
    is_connected,
    is_stability_free,
    maximal_cliques,
    power,
    remove_vertex,
    triangle_count,
)
from .core.homology import (
    ProfileComputation,
    compute_profile,
    h1_inclusion_surjective,
    independence_profile,
    matches_wedge,
)
from .core.morse import critical_faces, elementary_collapse, fold_matching, girth_matching, verify_matching
from .exceptions import InputError, PreconditionError, ResourceLimitError, SubcomplexError, handle_errors
from .families import (
    balls_and_spheres,
    circular_complete,
    circular_params,
    complete,
    cycle,
    line_graph,
    petersen,
    random_graph,
    random_tree,
    s_graph,
    signed_positions,
    stable_kneser,
    subdivided_skeleton,
    three_sun,
    total_graph,
)
from .predictions import (
    circular_double_suspension_source,
    complement_degree,
    double_suspension_source,
    predict_clique_cycle_power,
    predict_ind_circular,
    predict_ind_cycle,
)
from .types import HomologyTier, TableCell, TheoremReport, Verdict, WedgePrediction

HOMOLOGY_NOTE = "homotopy equivalence compared through integer homology (Betti numbers and torsion)"
FIELD_NOTE = "field tier: rational and mod-2 ranks; odd torsion is not detected"

F = TypeVar("F", bound=Callable[..., TheoremReport])


def _describe(value: Any) -> Any:
    if isinstance(value, Graph):
        return {"vertices": value.vertex_count, "edges": value.edge_count}
    if isinstance(value, SimplicialComplex):
        return {"vertices": value.vertex_count, "f_vector": list(value.f_vector)}
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_describe(v) for v in value]
    return value


def validator(theorem: str) -> Callable[[F], F]:
    """Turn a ResourceLimitError raised by the wrapped validator into a ``resource`` report."""

    def decorate(func: F) -> F:
        signature = inspect.signature(func)

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> TheoremReport:
            try:
                return func(*args, **kwargs)
            except ResourceLimitError as e:
                bound = signature.bind_partial(*args, **kwargs)
                parameters = {name: _describe(value) for name, value in bound.arguments.items()}
                logger.warning(f"{theorem} {parameters}: {e}")
                return TheoremReport(
                    theorem=theorem,
                    parameters=parameters,
                    verdict=Verdict.RESOURCE,
                    evidence={"what": e.what, "size": e.size, "limit": e.limit},
                    note=str(e),
                )

        return wrapper  # type: ignore[return-value]

    return decorate


def _report(
    theorem: str,
    parameters: dict[str, Any],
    ok: bool,
    evidence: dict[str, Any],
    counterexample: dict[str, Any] | None = None,
    note: str | None = HOMOLOGY_NOTE,
) -> TheoremReport:
    report = TheoremReport(
        theorem=theorem,
        parameters=parameters,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        evidence=evidence,
        counterexample=None if ok else (counterexample or {"evidence": evidence}),
        note=note,
    )
    logger.info(f"{theorem} {parameters}: {report.verdict}")
    return report


def _restrict(cx: SimplicialComplex, order: Sequence[int]) -> SimplicialComplex:
    """Reindex a complex living on ``order`` so that ``order[i]`` becomes vertex i."""
    position = {v: i for i, v in enumerate(order)}
    faces = []
    for face in cx.faces:
        if any(v not in position for v in face):
            raise SubcomplexError(f"face {face} leaves the vertex set {tuple(order)}")
        faces.append(tuple(position[v] for v in face))
    return SimplicialComplex(len(order), faces, validate=False)


# --- cycle powers -----------------------------------------------------------------------


def cycle_power_profile(n: int, r: int, tier: HomologyTier = HomologyTier.AUTO) -> ProfileComputation:
    """Homology of cl(C_n^r) computed as ind of its complement, split over components."""
    if tier == HomologyTier.AUTO and n > settings.exact_table_max_n:
        tier = HomologyTier.FIELD
    return independence_profile(complement(power(cycle(n), r)), tier)


@handle_errors
@validator("table")
def validate_table_cell(n: int, r: int, tier: HomologyTier = HomologyTier.AUTO) -> TheoremReport:
    predicted = predict_clique_cycle_power(n, r)
    result = cycle_power_profile(n, r, tier)
    return _report(
        "table",
        {"n": n, "r": r},
        matches_wedge(result.profile, predicted),
        evidence={
            "predicted": predicted.render(),
            "computed": result.profile.render(),
            "profile": result.profile.model_dump(),
            "tier": result.tier.value,
            "faces": result.faces,
        },
        note=HOMOLOGY_NOTE if result.tier == HomologyTier.EXACT else FIELD_NOTE,
    )


def validate_table(
    n_range: Sequence[int], r_range: Sequence[int] | None = None, tier: HomologyTier = HomologyTier.AUTO
) -> list[TheoremReport]:
    """One report per cell; without ``r_range`` every r = 0..floor(n/2) is checked."""
    reports = []
    for n in n_range:
        for r in r_range if r_range is not None else range(n // 2 + 1):
            reports.append(validate_table_cell(n, r, tier))
    return reports


def table_cell(report: TheoremReport) -> TableCell:
    n, r = report.parameters["n"], report.parameters["r"]
    predicted = predict_clique_cycle_power(n, r).render()
    if report.verdict == Verdict.RESOURCE:
        return TableCell(n=n, r=r, predicted=predicted, faces=report.evidence.get("size"))
    return TableCell(
        n=n,
        r=r,
        predicted=predicted,
        computed=report.evidence["computed"],
        tier=report.evidence["tier"],
        agrees=report.passed,
        faces=report.evidence["faces"],
    )


@handle_errors
@validator("kozlov")
def validate_kozlov(m: int, tier: HomologyTier = HomologyTier.AUTO) -> TheoremReport:
    """ind(C_m) against the three-way split by m mod 3."""
    predicted = predict_ind_cycle(m)
    result = independence_profile(cycle(m), tier)
    return _report(
        "kozlov",
        {"m": m},
        matches_wedge(result.profile, predicted),
        evidence={"predicted": predicted.render(), "computed": result.profile.render(), "faces": result.faces},
    )


# --- collapses ----------------------------------------------------------------------------


@handle_errors
@validator("girth-collapse")
def validate_girth_collapse(graph: Graph, r: int) -> TheoremReport:
    """cl(G^r) collapses through cl(G^{r-1}), ..., down to cl(G) when girth(G) >= 3r+1."""
    if r < 1:
        raise InputError(f"power must be >= 1, got {r}")
    g = girth(graph)
    if g is not INFINITE and g < 3 * r + 1:  # type: ignore[operator]
        raise PreconditionError(f"girth {g} is below 3r+1 = {3 * r + 1}")
    parameters = {"graph": _describe(graph), "r": r}
    stages = []
    for k in range(r, 1, -1):
        host = clique_complex(power(graph, k))
        target = clique_complex(power(graph, k - 1))
        matching = girth_matching(graph, k)
        check = verify_matching(host, matching)
        if not check.ok:
            return _report(
                "girth-collapse",
                parameters,
                False,
                evidence={"stages": stages},
                counterexample={"k": k, "violations": check.violations, "cycle": check.cycle},
            )
        critical = set(critical_faces(host, matching))
        if critical != set(target.faces):
            return _report(
                "girth-collapse",
                parameters,
                False,
                evidence={"stages": stages},
                counterexample={
                    "k": k,
                    "unexpected_critical": sorted(critical - target.face_set)[:10],
                    "missing_critical": sorted(target.face_set - critical)[:10],
                },
            )
        collapse = elementary_collapse(host, target)
        if not collapse.success:
            return _report(
                "girth-collapse",
                parameters,
                False,
                evidence={"stages": stages},
                counterexample={"k": k, "remaining_faces": collapse.remaining_faces, "target_faces": len(target)},
            )
        stages.append({"k": k, "faces": len(host), "matched_pairs": len(matching), "collapsed": len(collapse.pairs)})
    return _report(
        "girth-collapse",
        parameters,
        True,
        evidence={"girth": None if g is INFINITE else g, "stages": stages},
        note="collapse certified by an explicit acyclic matching and a greedy elementary collapse",
    )


@handle_errors
@validator("girth-sharpness")
def validate_girth_sharpness(r: int) -> TheoremReport:
    """cl(C_{3r}^r) is a wedge of r-1 two-spheres, so girth 3r does not suffice."""
    if r < 2:
        raise InputError(f"sharpness needs r >= 2, got {r}")
    n = 3 * r
    powered = compute_profile(clique_complex(power(cycle(n), r))).profile
    base = compute_profile(clique_complex(cycle(n))).profile
    expected = WedgePrediction.wedge(r - 1, 2)
    return _report(
        "girth-sharpness",
        {"r": r},
        matches_wedge(powered, expected) and powered != base,
        evidence={"cycle": base.render(), "power": powered.render(), "expected": expected.render()},
    )


@handle_errors
@validator("dismantle-power")
def validate_dismantlable_power(graph: Graph, r: int) -> TheoremReport:
    """A dismantlable G has dismantlable powers, and every fold of G^r induces a collapse."""
    if r < 1:
        raise InputError(f"power must be >= 1, got {r}")
    folds = dismantle(graph)
    if folds is None:
        raise PreconditionError("graph is not dismantlable")
    parameters = {"graph": _describe(graph), "r": r}

    current, labels = graph, list(graph.vertices)
    for u, v in folds.steps:
        index = labels.index(u)
        if power(remove_vertex(current, index), r) != remove_vertex(power(current, r), index):
            return _report(
                "dismantle-power", parameters, False, evidence={}, counterexample={"fold": [u, v], "reason": "power"}
            )
        current = remove_vertex(current, index)
        labels.remove(u)

    powered = power(graph, r)
    power_folds = dismantle(powered)
    if power_folds is None:
        return _report(
            "dismantle-power",
            parameters,
            False,
            evidence={},
            counterexample={"reason": "power is not dismantlable", "edges": powered.edge_list()},
        )
    current, labels = powered, list(powered.vertices)
    for u, v in power_folds.steps:
        iu, iv = labels.index(u), labels.index(v)
        cx = clique_complex(current)
        matching = fold_matching(current, iu, iv)
        check = verify_matching(cx, matching)
        survivors = tuple(f for f in cx.faces if iu not in f)
        if not check.ok or critical_faces(cx, matching) != survivors:
            return _report(
                "dismantle-power",
                parameters,
                False,
                evidence={},
                counterexample={"fold": [u, v], "violations": check.violations},
            )
        current = remove_vertex(current, iu)
        labels.remove(u)
    return _report(
        "dismantle-power",
        parameters,
        True,
        evidence={"graph_folds": len(folds), "power_folds": len(power_folds)},
        note="collapse of cl(G^r) to a point certified fold by fold",
    )


# --- the square condition -------------------------------------------------------------------


def check_square_condition(graph: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Whether every maximal clique of G^2 lies in some N_G[v]; the first failing clique otherwise."""
    neighbourhoods = [graph.closed_neighborhood(v) for v in graph.vertices]
    for clique in maximal_cliques(power(graph, 2)):
        members = set(clique)
        if not any(members <= closed for closed in neighbourhoods):
            return False, clique
    return True, None


def _same_square_homology(graph: Graph) -> bool:
    square = power(graph, 2)
    if square == graph:
        return True
    return compute_profile(clique_complex(graph)).profile == compute_profile(clique_complex(square)).profile


@handle_errors
@validator("square-condition")
def validate_square_condition(graph: Graph) -> TheoremReport:
    holds, witness = check_square_condition(graph)
    parameters = {"graph": _describe(graph)}
    if not holds:
        return _report(
            "square-condition",
            parameters,
            True,
            evidence={"condition": False, "witness": witness},
            note="the square condition fails, so there is nothing to compare",
        )
    base = compute_profile(clique_complex(graph)).profile
    square = compute_profile(clique_complex(power(graph, 2))).profile
    return _report(
        "square-condition",
        parameters,
        base == square,
        evidence={"condition": True, "graph": base.render(), "square": square.render()},
    )


def labelled_graphs(vertex_count: int) -> Iterator[Graph]:
    """Every graph on 0..vertex_count-1, edge subsets enumerated as bit masks."""
    pairs = list(combinations(range(vertex_count), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(vertex_count, (pair for i, pair in enumerate(pairs) if mask >> i & 1))


@handle_errors
@validator("stability-free")
def validate_stability_free(vertex_count: int = 6, samples: int | None = None, seed: int = 0) -> TheoremReport:
    """Forbidden-subgraph freeness implies the square condition, which implies equal homology.

    Exhaustive over labelled graphs unless ``samples`` is given.
    """
    if vertex_count < 1:
        raise InputError(f"vertex count must be positive, got {vertex_count}")
    if samples is None and vertex_count > 6:
        raise InputError("exhaustive enumeration is limited to 6 vertices; pass samples for larger graphs")
    corpus = (
        labelled_graphs(vertex_count)
        if samples is None
        else (random_graph(vertex_count, 0.5, seed + i) for i in range(samples))
    )
    parameters = {"vertex_count": vertex_count, "samples": samples, "seed": seed}
    checked = condition_count = 0
    for graph in corpus:
        checked += 1
        holds, witness = check_square_condition(graph)
        if holds:
            condition_count += 1
            if not _same_square_homology(graph):
                return _report(
                    "stability-free",
                    parameters,
                    False,
                    evidence={"checked": checked},
                    counterexample={"edges": graph.edge_list(), "reason": "square condition holds, homology differs"},
                )
        elif is_stability_free(graph):
            return _report(
                "stability-free",
                parameters,
                False,
                evidence={"checked": checked},
                counterexample={"edges": graph.edge_list(), "witness": witness, "reason": "free graph fails condition"},
            )
    return _report(
        "stability-free", parameters, True, evidence={"checked": checked, "square_condition": condition_count}
    )


# --- star clusters and the sequence lemma ---------------------------------------------------


def star_cluster(graph: Graph, v: int) -> SimplicialComplex:
    """st(v) intersected with the union of st(w) over neighbours w, all stars taken in ind(G)."""
    if not 0 <= v < graph.vertex_count:
        raise InputError(f"vertex {v} outside 0..{graph.vertex_count - 1}")
    neighbours = graph.neighbors(v)
    if not neighbours:
        raise PreconditionError(f"vertex {v} is isolated")
    if any(graph.has_edge(a, b) for a, b in combinations(neighbours, 2)):
        raise PreconditionError(f"vertex {v} lies in a triangle")
    closed = graph.closed_neighborhood(v)
    faces = []
    for face in independence_complex(graph).faces:
        members = set(face)
        if members & closed:
            continue
        if any(not members & graph.neighbor_set(w) for w in neighbours):
            faces.append(face)
    return SimplicialComplex(graph.vertex_count, faces, validate=False)


@handle_errors
@validator("star-cluster")
def validate_star_cluster(graph: Graph, v: int) -> TheoremReport:
    """ind(G) has the homology of the suspension of the star cluster of v."""
    cluster = star_cluster(graph, v)
    independence = independence_profile(graph).profile
    suspended = compute_profile(cluster).profile.suspend()
    return _report(
        "star-cluster",
        {"graph": _describe(graph), "v": v},
        independence == suspended,
        evidence={"ind": independence.render(), "suspended_cluster": suspended.render(), "cluster_faces": len(cluster)},
    )


@dataclass(frozen=True)
class SequenceExtension:
    """The graph H of the sequence construction and the subcomplex L of ind(G) it describes."""

    graph: Graph
    subcomplex: SimplicialComplex
    equal: bool


def sequence_extended_graph(graph: Graph, sequence: Sequence[int]) -> SequenceExtension:
    """Add (v_i, v_j) for i <= d < j with j - i <= d and compare L with ind(H).

    L holds the faces of ind(G) missing some window v_s..v_{s+d-1}, s = 1..d+1.
    """
    if len(sequence) % 2:
        raise InputError(f"sequence must have even length, got {len(sequence)}")
    for v in sequence:
        if not 0 <= v < graph.vertex_count:
            raise InputError(f"vertex {v} outside 0..{graph.vertex_count - 1}")
    d = len(sequence) // 2
    for i in range(d):
        window = sequence[i : i + d + 1]
        if len(set(window)) != len(window):
            raise PreconditionError(f"consecutive vertices {tuple(window)} are not pairwise distinct")

    extra = [(sequence[i], sequence[j]) for i in range(d) for j in range(d, 2 * d) if j - i <= d]
    extended = Graph(graph.vertex_count, list(graph.edges) + extra)
    windows = [set(sequence[s : s + d]) for s in range(d + 1)]
    subcomplex = SimplicialComplex(
        graph.vertex_count,
        (face for face in independence_complex(graph).faces if any(not w & set(face) for w in windows)),
        validate=False,
    )
    return SequenceExtension(
        graph=extended, subcomplex=subcomplex, equal=complexes_equal(subcomplex, independence_complex(extended))
    )


@dataclass(frozen=True)
class SequenceInstance:
    """G on a vertex subset of a circular graph; ``vertices`` are the host indices in G's order."""

    graph: Graph
    vertices: tuple[int, ...]
    sequence: tuple[int, ...]


def circular_instance(n: int, k: int) -> SequenceInstance:
    """T_{n,k} on {-r..-1, 1..r} with the sequence -(k-1)..-1, 1..k-1; H should be S_{n,k}."""
    r = circular_params(n, k).r
    if n < 3 * k - 1 or r < 1:
        raise PreconditionError(f"need n >= 3k-1 and r >= 1, got n={n}, k={k}")
    positions = signed_positions(n, r)
    graph, _ = induced(circular_complete(n, k), positions)
    labels = list(range(-r, 0)) + list(range(1, r + 1))
    index = {label: i for i, label in enumerate(labels)}
    sequence = [index[-x] for x in range(k - 1, 0, -1)] + [index[x] for x in range(1, k)]
    return SequenceInstance(graph=graph, vertices=tuple(positions), sequence=tuple(sequence))


def signed_instance(n: int, k: int) -> SequenceInstance:
    """S_{n,k} on {-r..-2, k..r-1} with the sequence -k..-2, -r..-r+k-2; H should be T_{n-2(k+1),k}."""
    r = circular_params(n, k).r
    if n < 3 * k + 3:
        raise PreconditionError(f"need n >= 3k+3, got n={n}, k={k}")
    signed = s_graph(n, k)
    labels = list(range(-r, -1)) + list(range(k, r))
    vertices = [signed.index_of(label) for label in labels]
    graph, _ = induced(signed.graph, vertices)
    index = {label: i for i, label in enumerate(labels)}
    sequence = [index[-x] for x in range(k, 1, -1)] + [index[-r + j] for j in range(k - 1)]
    return SequenceInstance(graph=graph, vertices=tuple(vertices), sequence=tuple(sequence))


@handle_errors
@validator("sequence-extension")
def validate_sequence_extension(graph: Graph, sequence: Sequence[int]) -> TheoremReport:
    extension = sequence_extended_graph(graph, sequence)
    return _report(
        "sequence-extension",
        {"graph": _describe(graph), "sequence": list(sequence)},
        extension.equal,
        evidence={"L_faces": len(extension.subcomplex), "added_edges": extension.graph.edge_count - graph.edge_count},
        counterexample={"extended_edges": extension.graph.edge_list()},
        note="exact face-set equality",
    )


@handle_errors
@validator("sequence-extension")
def validate_sequence_extension_circular(n: int, k: int) -> TheoremReport:
    """The sequence construction on the circular and signed instances for (n, k)."""
    checks: dict[str, bool] = {}
    if n >= 3 * k - 1 and circular_params(n, k).r >= 1:
        instance = circular_instance(n, k)
        extension = sequence_extended_graph(instance.graph, instance.sequence)
        checks["circular_faces"] = extension.equal
        checks["circular_is_signed"] = extension.graph == s_graph(n, k).graph
    if n >= 3 * k + 3:
        instance = signed_instance(n, k)
        extension = sequence_extended_graph(instance.graph, instance.sequence)
        checks["signed_faces"] = extension.equal
        checks["signed_is_circular"] = nx.is_isomorphic(
            extension.graph.to_networkx(), circular_complete(n - 2 * (k + 1), k).to_networkx()
        )
    if not checks:
        raise PreconditionError(f"no sequence instance applies to n={n}, k={k}")
    return _report(
        "sequence-extension", {"n": n, "k": k}, all(checks.values()), evidence=checks, note="exact face-set equality"
    )


# --- suspension recursions ---------------------------------------------------------------------


@handle_errors
@validator("suspension")
def validate_suspension_props(n: int, k: int, tier: HomologyTier = HomologyTier.AUTO) -> TheoremReport:
    """ind(T_{n,k}) ~ S ind(S_{n,k}) for n >= 3k-1 and ind(S_{n,k}) ~ S ind(T_{n-2(k+1),k}) for n >= 3k+3."""
    r = circular_params(n, k).r
    first = n >= 3 * k - 1 and r >= 1
    second = n >= 3 * k + 3
    if not (first or second):
        raise PreconditionError(f"neither suspension recursion applies to n={n}, k={k}")
    signed = s_graph(n, k)
    ind_signed = independence_profile(signed.graph, tier).profile
    checks: dict[str, bool] = {}
    evidence: dict[str, Any] = {"ind_S": ind_signed.render()}
    if first:
        host = circular_complete(n, k)
        ind_host = independence_profile(host, tier).profile
        evidence["ind_T"] = ind_host.render()
        checks["T_is_suspended_S"] = ind_host == ind_signed.suspend()
        cluster = _restrict(star_cluster(host, 0), signed_positions(n, r))
        checks["cluster_T_is_ind_S"] = complexes_equal(cluster, independence_complex(signed.graph))
    if second:
        smaller = independence_profile(circular_complete(n - 2 * (k + 1), k), tier).profile
        evidence["ind_T_smaller"] = smaller.render()
        checks["S_is_suspended_T"] = ind_signed == smaller.suspend()
        instance = signed_instance(n, k)
        cluster = _restrict(star_cluster(signed.graph, signed.index_of(-1)), instance.vertices)
        extension = sequence_extended_graph(instance.graph, instance.sequence)
        checks["cluster_S_is_ind_H"] = complexes_equal(cluster, independence_complex(extension.graph))
    evidence["checks"] = checks
    return _report("suspension", {"n": n, "k": k}, all(checks.values()), evidence=evidence)


@handle_errors
@validator("double-suspension")
def validate_double_suspension(n: int, k: int, tier: HomologyTier = HomologyTier.AUTO) -> TheoremReport:
    """ind(T_{n,k}) ~ double suspension of ind(T_{n-2(k+1),k}) for n >= 3k+3."""
    source = circular_double_suspension_source(n, k)
    if source is None:
        raise PreconditionError(f"double suspension needs n >= 3k+3, got n={n}, k={k}")
    big = independence_profile(circular_complete(n, k), tier).profile
    small = independence_profile(circular_complete(*source), tier).profile
    predicted = predict_ind_circular(n, k)
    checks = {
        "homology": big == small.suspend(2),
        "prediction": predicted == predict_ind_circular(*source).suspend(2),
        "matches_prediction": matches_wedge(big, predicted),
    }
    return _report(
        "double-suspension",
        {"n": n, "k": k},
        all(checks.values()),
        evidence={"ind_T": big.render(), "ind_T_smaller": small.render(), "checks": checks},
    )


# --- total and line graphs ----------------------------------------------------------------------


def classify_total_facets(graph: Graph) -> dict[str, Any]:
    """Sort the maximal faces of cl(T(G)) into the four kinds a maximal face can take.

    ``clique``: a maximal face of cl(G) of dimension >= 2; ``edge``: {u, uv, v};
    ``vertex_star``: v with all its edges; ``edge_triangle``: the three edges of a triangle.
    """
    n = graph.vertex_count
    edges = graph.edge_list()
    counts = {"clique": 0, "edge": 0, "vertex_star": 0, "edge_triangle": 0}
    other = []
    for facet in maximal_cliques(total_graph(graph)):
        originals = [x for x in facet if x < n]
        edge_part = [edges[x - n] for x in facet if x >= n]
        if len(originals) >= 3 and not edge_part:
            counts["clique"] += 1
        elif len(originals) == 2 and edge_part == [tuple(originals)]:
            counts["edge"] += 1
        elif len(originals) == 1 and set(edge_part) == {e for e in edges if originals[0] in e}:
            counts["vertex_star"] += 1
        elif not originals and len(edge_part) == 3 and len({v for e in edge_part for v in e}) == 3:
            counts["edge_triangle"] += 1
        else:
            other.append(list(facet))
    return {"counts": counts, "other": other}


@handle_errors
@validator("total-line")
def validate_total_and_line(graph: Graph) -> TheoremReport:
    """cl(T(G)) ~ cl(G) v t(G) 2-spheres; cl(L(G)) ~ 2-skeleton of cl(G) for connected non-discrete G."""
    triangles = triangle_count(graph)
    base = compute_profile(clique_complex(graph)).profile
    total = compute_profile(clique_complex(total_graph(graph))).profile
    facets = classify_total_facets(graph)
    checks = {"total": total == base.wedge_spheres(2, triangles), "total_facets": not facets["other"]}
    evidence: dict[str, Any] = {"triangles": triangles, "cl_G": base.render(), "cl_T": total.render(), "facets": facets}
    note = HOMOLOGY_NOTE
    if is_connected(graph) and graph.edge_count > 0:
        line = compute_profile(clique_complex(line_graph(graph))).profile
        two_skeleton = compute_profile(skeleton(clique_complex(graph), 2)).profile
        checks["line"] = line == two_skeleton
        evidence["cl_L"] = line.render()
    else:
        note = f"{HOMOLOGY_NOTE}; line graph part skipped (graph is disconnected or has no edges)"
    evidence["checks"] = checks
    return _report("total-line", {"graph": _describe(graph)}, all(checks.values()), evidence=evidence, note=note)


@handle_errors
@validator("kneser")
def validate_stable_kneser(k: int) -> TheoremReport:
    """complement(SG_{2,k}) = L(complement(C_{k+4})) and ind(SG_{2,k}) ~ 2-skeleton of ind(C_{k+4})."""
    m = k + 4
    kneser = stable_kneser(2, k)
    same_graph = complement(kneser) == line_graph(complement(cycle(m)))
    ind_kneser = independence_profile(kneser).profile
    two_skeleton = compute_profile(skeleton(independence_complex(cycle(m)), 2)).profile
    checks = {"complement_is_line_graph": same_graph, "homology": ind_kneser == two_skeleton}
    return _report(
        "kneser",
        {"k": k},
        all(checks.values()),
        evidence={"ind_SG": ind_kneser.render(), "skeleton": two_skeleton.render(), "checks": checks},
    )


# --- universality ----------------------------------------------------------------------------------


def _require_power_range(s: int, r: int) -> None:
    if not 1 <= r < 2 ** (s - 2):
        raise PreconditionError(f"need 1 <= r < 2^(s-2), got s={s}, r={r}")


@handle_errors
@validator("universality")
def validate_universality(
    base: SimplicialComplex, s: int, r: int, tier: HomologyTier = HomologyTier.AUTO
) -> TheoremReport:
    """cl(G_s^r) has the homology of K when 1 <= r < 2^(s-2)."""
    _require_power_range(s, r)
    graph = subdivided_skeleton(base, s).graph
    computed = compute_profile(clique_complex(power(graph, r)), tier)
    expected = compute_profile(base).profile
    return _report(
        "universality",
        {"complex": _describe(base), "s": s, "r": r},
        computed.profile == expected,
        evidence={"K": expected.summary(), "computed": computed.profile.summary(), "faces": computed.faces},
        note=HOMOLOGY_NOTE if computed.tier == HomologyTier.EXACT else FIELD_NOTE,
    )


@handle_errors
@validator("distance-lemma")
def validate_distance_lemma(base: SimplicialComplex, s: int, u: int, v: int) -> TheoremReport:
    """Inside B_u + B_v the sets B_u & S_v and S_u & B_v lie exactly 2^s apart."""
    if s < 1:
        raise InputError(f"subdivision depth must be >= 1, got {s}")
    if (min(u, v), max(u, v)) not in base:
        raise PreconditionError(f"{{{u}, {v}}} is not an edge of the complex")
    skel = subdivided_skeleton(base, s)
    ball_u, sphere_u = balls_and_spheres(skel, u)
    ball_v, sphere_v = balls_and_spheres(skel, v)
    sources = ball_u & sphere_v
    targets = sphere_u & ball_v
    depths = bfs_depths(skel.graph, sources, allowed=ball_u | ball_v)
    reached = [depths[t] for t in targets if t in depths]
    distance = min(reached) if reached else None
    return _report(
        "distance-lemma",
        {"complex": _describe(base), "s": s, "u": u, "v": v},
        distance == 2**s,
        evidence={"distance": distance, "expected": 2**s, "sources": len(sources), "targets": len(targets)},
        note="exact BFS distance",
    )


@handle_errors
@validator("covering")
def validate_covering(base: SimplicialComplex, s: int, r: int) -> TheoremReport:
    """The complexes cl((G_s[B_v])^r) cover cl(G_s^r) with nerve K and matching intersections."""
    _require_power_range(s, r)
    if len(base.vertices) > 12:
        raise InputError("covering check enumerates vertex subsets; at most 12 vertices are supported")
    skel = subdivided_skeleton(base, s)
    balls = {v: balls_and_spheres(skel, v)[0] for v in base.vertices}

    def local(vertices: frozenset[int]) -> set[tuple[int, ...]]:
        sub, mapping = induced(skel.graph, sorted(vertices))
        return {tuple(mapping[i] for i in face) for face in clique_complex(power(sub, r)).faces}

    pieces = {v: local(balls[v]) for v in base.vertices}
    whole = set(clique_complex(power(skel.graph, r)).faces)
    nerve_mismatch, intersection_mismatch = [], []
    for size in range(2, len(base.vertices) + 1):
        for subset in combinations(base.vertices, size):
            common = frozenset.intersection(*(balls[v] for v in subset))
            if bool(common) != (subset in base):
                nerve_mismatch.append(list(subset))
            elif common and set.intersection(*(pieces[v] for v in subset)) != local(common):
                intersection_mismatch.append(list(subset))
    checks = {"cover": set().union(*pieces.values()) == whole, "nerve": not nerve_mismatch}
    checks["intersections"] = not intersection_mismatch
    return _report(
        "covering",
        {"complex": _describe(base), "s": s, "r": r},
        all(checks.values()),
        evidence={"checks": checks, "faces": len(whole)},
        counterexample={"nerve": nerve_mismatch, "intersections": intersection_mismatch},
        note="exact face-set comparison",
    )


# --- powers and fundamental groups --------------------------------------------------------------


@handle_errors
@validator("h1-surjection")
def validate_h1_surjection(graph: Graph, r: int) -> TheoremReport:
    """H1(cl(G)) -> H1(cl(G^r)) is onto for connected G."""
    if r < 1:
        raise InputError(f"power must be >= 1, got {r}")
    if not is_connected(graph):
        raise PreconditionError("graph must be connected")
    onto = h1_inclusion_surjective(clique_complex(graph), clique_complex(power(graph, r)))
    return _report(
        "h1-surjection",
        {"graph": _describe(graph), "r": r},
        onto,
        evidence={"surjective": onto, "primes": list(settings.torsion_primes)},
        counterexample={"edges": graph.edge_list()},
        note="surjectivity on H1 over Q and Z/p stands in for the statement about fundamental groups",
    )


@handle_errors
@validator("predictions")
def validate_predictions(n_max: int = 60) -> TheoremReport:
    """Closed forms agree through the complement identity and the double-suspension shift."""
    if n_max < 3:
        raise InputError(f"n_max must be >= 3, got {n_max}")
    complement_mismatch, shift_mismatch = [], []
    cells = 0
    for n in range(3, n_max + 1):
        for r in range((n - 1) // 2 + 1):
            cells += 1
            predicted = predict_clique_cycle_power(n, r)
            k = complement_degree(n, r)
            if k >= 1 and predicted != predict_ind_circular(n, k):
                complement_mismatch.append([n, r])
            source = double_suspension_source(n, r)
            if source is not None and predicted != predict_clique_cycle_power(*source).suspend(2):
                shift_mismatch.append([n, r])
    return _report(
        "predictions",
        {"n_max": n_max},
        not complement_mismatch and not shift_mismatch,
        evidence={"cells": cells},
        counterexample={"complement": complement_mismatch, "double_suspension": shift_mismatch},
        note="pure arithmetic on the closed forms",
    )


# --- registry ------------------------------------------------------------------------------------

Job = Callable[[], TheoremReport]


@dataclass
class CheckRequest:
    """Instance parameters collected from the command line; every validator takes what it needs."""

    graph: Graph | None = None
    base: SimplicialComplex | None = None
    n: list[int] = field(default_factory=list)
    r: list[int] = field(default_factory=list)
    k: list[int] = field(default_factory=list)
    m: list[int] = field(default_factory=list)
    s: list[int] = field(default_factory=list)
    u: int | None = None
    v: int | None = None
    vertex: int | None = None
    sequence: list[int] | None = None
    samples: int | None = None
    seed: int = 0
    tier: HomologyTier = HomologyTier.AUTO


@dataclass(frozen=True)
class TheoremEntry:
    theorem: str
    summary: str
    jobs: Callable[[CheckRequest], list[Job]]


def random_corpus(count: int, seed: int, connected: bool = False) -> list[Graph]:
    """Seeded G(n, p) graphs with n in 4..9 and p cycling through 0.3, 0.5, 0.7."""
    graphs: list[Graph] = []
    attempt = 0
    while len(graphs) < count:
        graph = random_graph(4 + attempt % 6, (0.3, 0.5, 0.7)[attempt % 3], seed + attempt)
        attempt += 1
        if not connected or is_connected(graph):
            graphs.append(graph)
    return graphs


def _graphs(request: CheckRequest, default: Callable[[], list[Graph]]) -> list[Graph]:
    return [request.graph] if request.graph is not None else default()


def _circular_pairs(request: CheckRequest, applies: Callable[[int, int], bool]) -> list[tuple[int, int]]:
    ns = request.n or list(range(3, 19))
    pairs = []
    for n in ns:
        ks = request.k or list(range(1, n))
        pairs.extend((n, k) for k in ks if 1 <= k <= n - 1 and (n - k) % 2 == 1 and applies(n, k))
    if not pairs:
        raise InputError("no (n, k) pair satisfies the hypotheses")
    return pairs


def _table_jobs(request: CheckRequest) -> list[Job]:
    ns = request.n or list(range(3, settings.exact_table_max_n + 1))
    return [
        partial(validate_table_cell, n, r, request.tier)
        for n in ns
        for r in (request.r or range(n // 2 + 1))
    ]


def _girth_collapse_jobs(request: CheckRequest) -> list[Job]:
    if request.graph is not None:
        return [partial(validate_girth_collapse, request.graph, r) for r in request.r or [2]]
    return [
        partial(validate_girth_collapse, cycle(n), r)
        for r in request.r or [2, 3, 4]
        for n in range(3 * r + 1, 17)
    ]


def _square_corpus() -> list[Graph]:
    return [cycle(4), cycle(5), cycle(6), cycle(7), three_sun(), petersen()]


def _star_cluster_jobs(request: CheckRequest) -> list[Job]:
    if request.graph is not None:
        return [partial(validate_star_cluster, request.graph, request.vertex or 0)]
    two_edges = Graph(4, [(0, 1), (2, 3)])
    return [partial(validate_star_cluster, g, 0) for g in (cycle(5), circular_complete(9, 2), two_edges)]


def _sequence_jobs(request: CheckRequest) -> list[Job]:
    if request.graph is not None:
        if request.sequence is None:
            raise InputError("sequence-extension on an input graph needs --sequence")
        return [partial(validate_sequence_extension, request.graph, request.sequence)]
    pairs = _circular_pairs(request, lambda n, k: (n >= 3 * k - 1 and n - k >= 3) or n >= 3 * k + 3)
    return [partial(validate_sequence_extension_circular, n, k) for n, k in pairs]


def _h1_jobs(request: CheckRequest) -> list[Job]:
    graphs = _graphs(request, lambda: random_corpus(request.samples or 50, request.seed, connected=True))
    return [partial(validate_h1_surjection, g, r) for g, r in product(graphs, request.r or [2, 3])]


def _dismantle_jobs(request: CheckRequest) -> list[Job]:
    count = request.samples or 5
    graphs = _graphs(request, lambda: [random_tree(5 + i, request.seed + i) for i in range(count)])
    return [partial(validate_dismantlable_power, g, r) for g, r in product(graphs, request.r or [2, 3])]


def _total_line_jobs(request: CheckRequest) -> list[Job]:
    named = [complete(3), complete(4), cycle(5), cycle(6), petersen()]
    count = 200 if request.samples is None else request.samples
    graphs = _graphs(request, lambda: named + random_corpus(count, request.seed))
    return [partial(validate_total_and_line, g) for g in graphs]


def _universality_jobs(request: CheckRequest) -> list[Job]:
    if request.base is None and not request.s and not request.r:
        circle = simplex_boundary(2)
        cases = [(circle, 3, 1), (circle, 4, 2), (circle, 4, 3), (complex_union(circle, circle), 4, 2)]
        return [partial(validate_universality, base, s, r, request.tier) for base, s, r in cases]
    base = request.base or simplex_boundary(2)
    return [
        partial(validate_universality, base, s, r, request.tier) for s in request.s or [4] for r in request.r or [2]
    ]


def _first_edge(base: SimplicialComplex) -> tuple[int, int]:
    edges = base.faces_of_dimension(1)
    if not edges:
        raise InputError("complex has no edges")
    return edges[0][0], edges[0][1]


def _distance_jobs(request: CheckRequest) -> list[Job]:
    bases = [request.base] if request.base is not None else [simplex(2), simplex_boundary(3)]
    jobs: list[Job] = []
    for base in bases:
        edge = (request.u, request.v) if request.u is not None and request.v is not None else _first_edge(base)
        jobs.extend(partial(validate_distance_lemma, base, s, *edge) for s in request.s or [1, 2, 3])
    return jobs


REGISTRY: dict[str, TheoremEntry] = {
    entry.theorem: entry
    for entry in (
        TheoremEntry("table", "cl(C_n^r) against the closed form, cell by cell", _table_jobs),
        TheoremEntry(
            "kozlov",
            "ind(C_m) split by m mod 3",
            lambda q: [partial(validate_kozlov, m, q.tier) for m in q.m or range(3, 22)],
        ),
        TheoremEntry("girth-collapse", "cl(G^r) collapses to cl(G) when girth >= 3r+1", _girth_collapse_jobs),
        TheoremEntry(
            "girth-sharpness",
            "cl(C_3r^r) is a wedge of r-1 two-spheres",
            lambda q: [partial(validate_girth_sharpness, r) for r in q.r or [2, 3]],
        ),
        TheoremEntry(
            "square-condition",
            "cliques of G^2 inside closed neighbourhoods give cl(G) ~ cl(G^2)",
            lambda q: [partial(validate_square_condition, g) for g in _graphs(q, _square_corpus)],
        ),
        TheoremEntry(
            "stability-free",
            "C4, C5, C6, 3-sun free graphs satisfy the square condition",
            lambda q: [partial(validate_stability_free, n, q.samples, q.seed) for n in q.n or [6]],
        ),
        TheoremEntry("star-cluster", "ind(G) ~ suspension of the star cluster", _star_cluster_jobs),
        TheoremEntry("sequence-extension", "sequence construction: L = ind(H)", _sequence_jobs),
        TheoremEntry(
            "suspension",
            "ind(T_n,k) ~ S ind(S_n,k) and ind(S_n,k) ~ S ind(T_n-2k-2,k)",
            lambda q: [
                partial(validate_suspension_props, n, k, q.tier)
                for n, k in _circular_pairs(q, lambda n, k: (n >= 3 * k - 1 and n - k >= 3) or n >= 3 * k + 3)
            ],
        ),
        TheoremEntry(
            "double-suspension",
            "ind(T_n,k) ~ double suspension of ind(T_n-2k-2,k)",
            lambda q: [
                partial(validate_double_suspension, n, k, q.tier)
                for n, k in _circular_pairs(q, lambda n, k: n >= 3 * k + 3)
            ],
        ),
        TheoremEntry("total-line", "total graphs add t(G) 2-spheres; line graphs give 2-skeleta", _total_line_jobs),
        TheoremEntry(
            "kneser",
            "stable Kneser graphs SG_2,k through line graphs",
            lambda q: [partial(validate_stable_kneser, k) for k in q.k or range(7)],
        ),
        TheoremEntry("universality", "cl(G_s^r) ~ K for 1 <= r < 2^(s-2)", _universality_jobs),
        TheoremEntry("distance-lemma", "balls around adjacent vertices lie 2^s apart", _distance_jobs),
        TheoremEntry(
            "covering",
            "ball complexes cover cl(G_s^r) with nerve K",
            lambda q: [
                partial(validate_covering, q.base or simplex(2), s, r) for s in q.s or [3] for r in q.r or [1]
            ],
        ),
        TheoremEntry("h1-surjection", "H1(cl(G)) -> H1(cl(G^r)) is onto", _h1_jobs),
        TheoremEntry("dismantle-power", "powers of dismantlable graphs are dismantlable", _dismantle_jobs),
        TheoremEntry(
            "predictions",
            "closed forms agree under complement and double suspension",
            lambda q: [partial(validate_predictions, max(q.n) if q.n else 60)],
        ),
    )
}


def resolve(theorem: str) -> TheoremEntry:
    try:
        return REGISTRY[theorem]
    except KeyError:
        raise InputError(f"unknown theorem '{theorem}'; available: {', '.join(REGISTRY)}") from None

