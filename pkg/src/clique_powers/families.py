"""
Generators for the graph families used by the validators.
"""

import heapq
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from loguru import logger
from pydantic import ValidationError

from .core.complex import (
    Face,
    SimplicialComplex,
    barycentric_subdivision,
    one_skeleton_graph,
    simplex_boundary,
)
from .core.graph import Graph, bfs_depths, induced, power
from .exceptions import InputError
from .types import CircularParams

PRNG_ALGORITHM = "PCG64"


@dataclass(frozen=True)
class SignedGraph:
    """S_{n,k} with the signed labels -r..-1, 1..r of its vertices."""

    graph: Graph
    labels: tuple[int, ...]
    params: CircularParams

    def index_of(self, label: int) -> int:
        return self.labels.index(label)


@dataclass(frozen=True)
class SubdividedSkeleton:
    """G_s: the 1-skeleton of the s-th barycentric subdivision of K.

    ``labels[x]`` is the face of the (s-1)-th subdivision that vertex x stands for and
    ``origin[v]`` is the vertex of G_s sitting at the original vertex v of K.
    """

    graph: Graph
    base: SimplicialComplex
    s: int
    labels: tuple[Face, ...]
    origin: dict[int, int]


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise InputError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def edgeless(n: int) -> Graph:
    return Graph(n)


def circular_params(n: int, k: int) -> CircularParams:
    try:
        return CircularParams(n=n, k=k)
    except ValidationError as e:
        raise InputError(f"invalid circular parameters n={n}, k={k}: {e.errors()[0]['msg']}") from e


def circular_complete(n: int, k: int) -> Graph:
    """T_{n,k}: vertex i adjacent to i+r+1, ..., i+r+k (mod n), r = (n-k-1)/2."""
    params = circular_params(n, k)
    r = params.r
    return Graph(n, ((i, (i + r + j) % n) for i in range(n) for j in range(1, k + 1)))


def signed_positions(n: int, r: int) -> list[int]:
    """Cyclic positions of the labels -r..-1, 1..r, with -x stored as n - x."""
    return [n - x for x in range(r, 0, -1)] + list(range(1, r + 1))


def s_graph(n: int, k: int) -> SignedGraph:
    """S_{n,k}: T_{n,k} on {-r..-1, 1..r} plus the edges (-i, j) with i, j <= k-1 and i + j <= k."""
    params = circular_params(n, k)
    r = params.r
    if r < 1:
        raise InputError(f"S_{{{n},{k}}} needs r >= 1 (n >= k+3)")
    base, _ = induced(circular_complete(n, k), signed_positions(n, r))
    labels = tuple(range(-r, 0)) + tuple(range(1, r + 1))
    index = {label: i for i, label in enumerate(labels)}
    extra = [
        (index[-i], index[j]) for i in range(1, k) for j in range(1, k) if i + j <= k and i <= r and j <= r
    ]
    return SignedGraph(graph=Graph(base.vertex_count, list(base.edges) + extra), labels=labels, params=params)


def three_sun() -> Graph:
    """Triangle v1 v2 v3 (0, 1, 2) with w_i (3, 4, 5) adjacent to the two v's other than v_i."""
    edges = [(0, 1), (1, 2), (0, 2)]
    for i in range(3):
        edges.extend((3 + i, j) for j in range(3) if j != i)
    return Graph(6, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def subdivision(graph: Graph) -> Graph:
    """S(G): original vertices first, then one vertex per edge in canonical edge order."""
    n = graph.vertex_count
    edges = []
    for index, (a, b) in enumerate(graph.edge_list()):
        edges.extend([(a, n + index), (b, n + index)])
    return Graph(n + graph.edge_count, edges)


def total_graph(graph: Graph) -> Graph:
    """T(G) = S(G)^2."""
    return power(subdivision(graph), 2)


def line_graph(graph: Graph) -> Graph:
    """Edges of G as vertices, adjacent when they share an endpoint."""
    edges = graph.edge_list()
    if not edges:
        raise InputError("line graph needs at least one edge")
    return Graph(
        len(edges),
        ((i, j) for (i, e), (j, f) in combinations(enumerate(edges), 2) if set(e) & set(f)),
    )


def stable_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """n-subsets of {1..k+2n} without two cyclically consecutive elements, in lexicographic order."""
    if n < 1 or k < 0:
        raise InputError(f"stable Kneser graph needs n >= 1 and k >= 0, got n={n}, k={k}")
    m = k + 2 * n
    result = []
    for subset in combinations(range(1, m + 1), n):
        if any(b - a == 1 for a, b in zip(subset, subset[1:])):
            continue
        if n >= 2 and subset[0] == 1 and subset[-1] == m:
            continue
        result.append(subset)
    return result


def stable_kneser(n: int, k: int) -> Graph:
    """SG_{n,k}: stable n-subsets, adjacent when disjoint."""
    subsets = stable_subsets(n, k)
    return Graph(
        len(subsets),
        ((i, j) for (i, a), (j, b) in combinations(enumerate(subsets), 2) if not set(a) & set(b)),
    )


def subdivided_skeleton(base: SimplicialComplex, s: int) -> SubdividedSkeleton:
    """G_s = 1-skeleton of bary^s K, keeping track of where the original vertices went."""
    if s < 0:
        raise InputError(f"subdivision depth must be non-negative, got {s}")
    current = base
    origin = {v: v for v in base.vertices}
    labels: tuple[Face, ...] = tuple((v,) for v in range(base.vertex_count))
    for step in range(s):
        subdivided = barycentric_subdivision(current)
        position = {face: i for i, face in enumerate(subdivided.labels)}
        origin = {v: position[(x,)] for v, x in origin.items()}
        labels = subdivided.labels
        current = subdivided.complex
        logger.debug(f"subdivision {step + 1}: {current.vertex_count} vertices, {len(current)} faces")
    return SubdividedSkeleton(graph=one_skeleton_graph(current), base=base, s=s, labels=labels, origin=origin)


def balls_and_spheres(
    skeleton: SubdividedSkeleton, v: int, s: int | None = None
) -> tuple[frozenset[int], frozenset[int]]:
    """B_{s,v} (distance < 2^s from v) and S_{s,v} (distance exactly 2^s)."""
    if s is not None and s != skeleton.s:
        raise InputError(f"skeleton was built with s={skeleton.s}, not {s}")
    if v not in skeleton.origin:
        raise InputError(f"{v} is not a vertex of the base complex")
    radius = 2**skeleton.s
    depths = bfs_depths(skeleton.graph, [skeleton.origin[v]], limit=radius)
    ball = frozenset(w for w, d in depths.items() if d < radius)
    sphere = frozenset(w for w, d in depths.items() if d == radius)
    return ball, sphere


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) from a seeded PCG64 generator, pairs drawn in canonical order."""
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    return Graph(n, (pair for pair in combinations(range(n), 2) if rng.random() < p))


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree decoded from a random Prüfer sequence."""
    if n < 1:
        raise InputError(f"tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = np.random.default_rng(seed)
    sequence = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def real_projective_plane() -> SimplicialComplex:
    """The 6-vertex triangulation of RP^2."""
    facets = [
        (0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5), (0, 3, 4),
        (1, 2, 3), (1, 2, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5),
    ]  # fmt: skip
    return SimplicialComplex.from_facets(6, facets)


FAMILY_NAMES = (
    "cycle", "path", "complete", "circular", "sgraph", "threesun", "petersen",
    "line", "subdiv", "total", "kneser", "gss", "random", "tree",
)  # fmt: skip
DERIVED_FAMILIES = ("line", "subdiv", "total")


def build_family(
    name: str,
    params: Sequence[int] = (),
    base: Graph | None = None,
    base_complex: SimplicialComplex | None = None,
    seed: int = 0,
    p: float = 0.5,
) -> Graph:
    """Resolve a family name and integer parameters to a graph."""

    def need(count: int) -> list[int]:
        if len(params) != count:
            raise InputError(f"family '{name}' takes {count} integer parameter(s), got {len(params)}")
        return list(params)

    if name in DERIVED_FAMILIES:
        need(0)
        if base is None:
            raise InputError(f"family '{name}' needs an input graph")
        return {"line": line_graph, "subdiv": subdivision, "total": total_graph}[name](base)
    if name == "cycle":
        return cycle(*need(1))
    if name == "path":
        return path(*need(1))
    if name == "complete":
        return complete(*need(1))
    if name == "circular":
        return circular_complete(*need(2))
    if name == "sgraph":
        return s_graph(*need(2)).graph
    if name == "threesun":
        need(0)
        return three_sun()
    if name == "petersen":
        need(0)
        return petersen()
    if name == "kneser":
        return stable_kneser(*need(2))
    if name == "gss":
        (depth,) = need(1)
        return subdivided_skeleton(base_complex or simplex_boundary(2), depth).graph
    if name == "random":
        return random_graph(need(1)[0], p, seed)
    if name == "tree":
        return random_tree(need(1)[0], seed)
    raise InputError(f"unknown family '{name}'; available: {', '.join(FAMILY_NAMES)}")
