"""
Finite simple graphs with distance, power, girth, fold and induced-subgraph machinery.

Vertices are the integers ``0..vertex_count-1``. A :class:`Graph` is immutable once built,
so graphs and distance tables can be shared freely between threads.
"""

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

import networkx as nx
from loguru import logger

from ..config import settings
from ..exceptions import InputError

Edge = tuple[int, int]


class Unreachable(Enum):
    """Distance between vertices in different components."""

    INFINITE = "inf"

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = Unreachable.INFINITE
Hops = int | Unreachable


class Graph:
    """Finite simple undirected graph stored as an edge set plus sorted neighbour lists."""

    __slots__ = ("_vertex_count", "_edges", "_neighbors", "_neighbor_sets")

    def __init__(self, vertex_count: int, edges: Iterable[Edge] = ()):
        if vertex_count < 0:
            raise InputError(f"vertex count must be non-negative, got {vertex_count}")
        canonical: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            canonical.add((u, v) if u < v else (v, u))

        adjacency: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in canonical:
            adjacency[u].add(v)
            adjacency[v].add(u)

        self._vertex_count = vertex_count
        self._edges = frozenset(canonical)
        self._neighbor_sets = tuple(frozenset(a) for a in adjacency)
        self._neighbors = tuple(tuple(sorted(a)) for a in adjacency)

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self._vertex_count)

    def edge_list(self) -> list[Edge]:
        """Edges in canonical (lexicographic) order."""
        return sorted(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._neighbors[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self._neighbor_sets[v] | {v}

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edge_list())
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertex_count == other._vertex_count and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertex_count, self._edges))

    def __repr__(self) -> str:
        return f"Graph(vertex_count={self._vertex_count}, edges={self.edge_list()})"


@dataclass(frozen=True)
class DistanceTable:
    """All-pairs hop distances; ``-1`` in ``rows`` marks different components."""

    vertex_count: int
    rows: tuple[tuple[int, ...], ...]

    def dist(self, u: int, v: int) -> Hops:
        value = self.rows[u][v]
        return INFINITE if value < 0 else value

    def set_distance(self, xs: Iterable[int], ys: Iterable[int]) -> Hops:
        """Minimum distance between two vertex sets."""
        targets = list(ys)
        best: int | None = None
        for x in xs:
            for y in targets:
                value = self.rows[x][y]
                if value >= 0 and (best is None or value < best):
                    best = value
        return INFINITE if best is None else best


@dataclass(frozen=True)
class FoldSequence:
    """Ordered (removed vertex, dominating vertex) pairs of a dismantling."""

    steps: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.steps)


def build_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a canonical graph, rejecting loops and out-of-range endpoints."""
    graph = Graph(n, edges)
    logger.debug(f"built graph with {graph.vertex_count} vertices and {graph.edge_count} edges")
    return graph


def bfs_depths(
    graph: Graph, sources: Iterable[int], limit: int | None = None, allowed: frozenset[int] | None = None
) -> dict[int, int]:
    """Multi-source BFS depths, optionally truncated at ``limit`` and restricted to ``allowed``."""
    depths: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        if (allowed is None or s in allowed) and s not in depths:
            depths[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        if limit is not None and depths[u] >= limit:
            continue
        for w in graph.neighbors(u):
            if w not in depths and (allowed is None or w in allowed):
                depths[w] = depths[u] + 1
                queue.append(w)
    return depths


def distances(graph: Graph) -> DistanceTable:
    """All-pairs BFS distances."""
    rows = []
    for u in graph.vertices:
        depths = bfs_depths(graph, [u])
        rows.append(tuple(depths.get(v, -1) for v in graph.vertices))
    return DistanceTable(vertex_count=graph.vertex_count, rows=tuple(rows))


def power(graph: Graph, r: int) -> Graph:
    """G^r: same vertices, uv an edge iff 1 <= dist(u, v) <= r."""
    if r < 0:
        raise InputError(f"power exponent must be non-negative, got {r}")
    if r == 1:
        return graph
    edges = []
    if r > 0:
        for u in graph.vertices:
            edges.extend((u, v) for v in bfs_depths(graph, [u], limit=r) if v > u)
    return Graph(graph.vertex_count, edges)


def complement(graph: Graph) -> Graph:
    n = graph.vertex_count
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if not graph.has_edge(u, v)))


def induced(graph: Graph, subset: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph reindexed to ``0..|W|-1``; ``mapping[i]`` is the original vertex.

    Sequences keep their order, other iterables are sorted.
    """
    ordered = list(subset) if isinstance(subset, Sequence) else sorted(subset)
    if len(set(ordered)) != len(ordered):
        raise InputError("induced vertex set contains duplicates")
    for v in ordered:
        if not 0 <= v < graph.vertex_count:
            raise InputError(f"vertex {v} outside 0..{graph.vertex_count - 1}")
    position = {v: i for i, v in enumerate(ordered)}
    edges = [
        (position[u], position[v]) for u, v in graph.edges if u in position and v in position
    ]
    return Graph(len(ordered), edges), tuple(ordered)


def remove_vertex(graph: Graph, u: int) -> Graph:
    """G \\ u with the remaining vertices renumbered in increasing order."""
    sub, _ = induced(graph, [v for v in graph.vertices if v != u])
    return sub


def disjoint_union(first: Graph, second: Graph) -> Graph:
    shift = first.vertex_count
    return Graph(
        first.vertex_count + second.vertex_count,
        list(first.edges) + [(u + shift, v + shift) for u, v in second.edges],
    )


def components(graph: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest vertex."""
    seen: set[int] = set()
    result = []
    for v in graph.vertices:
        if v not in seen:
            component = sorted(bfs_depths(graph, [v]))
            seen.update(component)
            result.append(component)
    return result


def is_connected(graph: Graph) -> bool:
    return graph.vertex_count > 0 and len(components(graph)) == 1


def girth(graph: Graph) -> Hops:
    """Length of the shortest cycle, INFINITE for a forest."""
    best: int | None = None
    for root in graph.vertices:
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * depth[u] + 1 >= best:
                break
            for w in graph.neighbors(u):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = depth[u] + depth[w] + 1
                    if best is None or length < best:
                        best = length
    return INFINITE if best is None else best


def triangle_count(graph: Graph) -> int:
    return sum(
        1 for u, v in graph.edges for w in graph.neighbor_set(u) & graph.neighbor_set(v) if w > v
    )


def is_cone(graph: Graph) -> bool:
    """True iff some vertex is adjacent to every other vertex."""
    return any(graph.degree(v) == graph.vertex_count - 1 for v in graph.vertices)


def find_fold(graph: Graph) -> tuple[int, int] | None:
    """Lexicographically smallest (u, v), u != v, with N[u] contained in N[v]."""
    for u in graph.vertices:
        closed_u = graph.closed_neighborhood(u)
        for v in graph.neighbors(u):
            if closed_u <= graph.closed_neighborhood(v):
                return u, v
    return None


def dismantle(graph: Graph) -> FoldSequence | None:
    """Greedy fold sequence down to one vertex, or None when the greedy order gets stuck."""
    if graph.vertex_count == 0:
        raise InputError("cannot dismantle the empty graph")
    alive = set(graph.vertices)
    steps: list[tuple[int, int]] = []
    while len(alive) > 1:
        fold = _find_fold_within(graph, alive)
        if fold is None:
            logger.debug(f"dismantling stuck with {len(alive)} vertices left")
            return None
        steps.append(fold)
        alive.discard(fold[0])
    return FoldSequence(steps=tuple(steps))


def _find_fold_within(graph: Graph, alive: set[int]) -> tuple[int, int] | None:
    for u in sorted(alive):
        closed_u = graph.closed_neighborhood(u) & alive
        for v in graph.neighbors(u):
            if v in alive and closed_u <= graph.closed_neighborhood(v):
                return u, v
    return None


def contains_induced(graph: Graph, pattern: Graph) -> bool:
    """True iff some injection V(H) -> V(G) is an induced-subgraph isomorphism."""
    if pattern.vertex_count > settings.induced_search_cap:
        raise InputError(
            f"pattern has {pattern.vertex_count} vertices, above the search cap {settings.induced_search_cap}"
        )
    if pattern.vertex_count > graph.vertex_count:
        return False
    # highest-degree pattern vertices first prunes earlier
    order = sorted(pattern.vertices, key=lambda v: (-pattern.degree(v), v))
    return any(True for _ in _induced_embeddings(graph, pattern, order, {}))


def _induced_embeddings(
    graph: Graph, pattern: Graph, order: list[int], image: dict[int, int]
) -> Iterator[dict[int, int]]:
    if len(image) == len(order):
        yield dict(image)
        return
    h = order[len(image)]
    used = set(image.values())
    for g in graph.vertices:
        if g in used or graph.degree(g) < pattern.degree(h):
            continue
        if all(pattern.has_edge(h, h2) == graph.has_edge(g, g2) for h2, g2 in image.items()):
            image[h] = g
            yield from _induced_embeddings(graph, pattern, order, image)
            del image[h]


def is_stability_free(graph: Graph) -> bool:
    """True iff none of C4, C5, C6 and the 3-sun occurs as an induced subgraph."""
    from ..families import cycle, three_sun

    return not any(contains_induced(graph, h) for h in (cycle(4), cycle(5), cycle(6), three_sun()))


def maximal_cliques(graph: Graph) -> list[tuple[int, ...]]:
    """Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted canonically."""
    found: list[tuple[int, ...]] = []

    def expand(clique: list[int], candidates: set[int], excluded: set[int]) -> None:
        if not candidates and not excluded:
            found.append(tuple(sorted(clique)))
            return
        pivot = max(candidates | excluded, key=lambda u: len(candidates & graph.neighbor_set(u)))
        for v in sorted(candidates - graph.neighbor_set(pivot)):
            neighbors = graph.neighbor_set(v)
            clique.append(v)
            expand(clique, candidates & neighbors, excluded & neighbors)
            clique.pop()
            candidates.discard(v)
            excluded.add(v)

    if graph.vertex_count:
        expand([], set(graph.vertices), set())
    return sorted(found, key=lambda c: (len(c), c))


def cliques(graph: Graph, max_size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All cliques (the empty one included) as sorted tuples, each produced exactly once."""
    stack: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), tuple(graph.vertices))]
    while stack:
        clique, candidates = stack.pop()
        yield clique
        if max_size is not None and len(clique) >= max_size:
            continue
        for i, v in enumerate(candidates):
            later = graph.neighbor_set(v)
            stack.append((clique + (v,), tuple(w for w in candidates[i + 1 :] if w in later)))
