"""
Discrete Morse machinery: acyclic matchings, elementary collapses and the explicit
matchings that collapse clique complexes of graph powers and of folded graphs.
"""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from itertools import combinations

from loguru import logger

from ..exceptions import InputError, InvalidMatchingError, PreconditionError, SubcomplexError
from ..types import CollapseResult, MatchingReport
from .complex import Face, SimplicialComplex, face_key, is_subcomplex
from .graph import INFINITE, Graph, bfs_depths, cliques, girth, induced, is_connected, maximal_cliques, power


@dataclass(frozen=True)
class Matching:
    """Ordered face pairs (sigma, tau) with sigma a codimension-1 face of tau."""

    pairs: tuple[tuple[Face, Face], ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Iterable[int], Iterable[int]]]) -> "Matching":
        canonical = [(tuple(sorted(s)), tuple(sorted(t))) for s, t in pairs]
        return cls(pairs=tuple(sorted(canonical, key=lambda p: (face_key(p[0]), face_key(p[1])))))

    @property
    def matched_faces(self) -> set[Face]:
        return {face for pair in self.pairs for face in pair}

    def __len__(self) -> int:
        return len(self.pairs)


def _facets_of(face: Face) -> Iterable[Face]:
    return (face[:i] + face[i + 1 :] for i in range(len(face)))


def verify_matching(cx: SimplicialComplex, matching: Matching) -> MatchingReport:
    """Check pairing shape, disjointness and absence of closed gradient paths."""
    violations: list[str] = []
    seen: set[Face] = set()
    for sigma, tau in matching.pairs:
        for face in (sigma, tau):
            if face not in cx:
                raise InputError(f"matched face {face} is not a face of the complex")
            if face in seen:
                violations.append(f"face {face} occurs in more than one pair")
            seen.add(face)
        if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
            violations.append(f"{sigma} is not a codimension-1 face of {tau}")
    if violations:
        return MatchingReport(ok=False, violations=violations)

    cycle = _gradient_cycle(matching)
    if cycle is not None:
        return MatchingReport(ok=False, violations=["matching has a closed gradient path"], cycle=cycle)
    return MatchingReport(ok=True)


def _gradient_cycle(matching: Matching) -> list[Face] | None:
    """Closed path sigma_0, tau_0, sigma_1, tau_1, ... through distinct matched faces, if any."""
    up = dict(matching.pairs)

    def successors(sigma: Face) -> list[Face]:
        return [s for s in _facets_of(up[sigma]) if s != sigma and s in up]

    state: dict[Face, int] = {}  # 1 on the stack, 2 finished
    for start in up:
        if start in state:
            continue
        path = [start]
        iterators = [iter(successors(start))]
        state[start] = 1
        while iterators:
            nxt = next(iterators[-1], None)
            if nxt is None:
                state[path.pop()] = 2
                iterators.pop()
            elif state.get(nxt) == 1:
                loop = path[path.index(nxt) :]
                return [face for sigma in loop for face in (sigma, up[sigma])] + [nxt]
            elif nxt not in state:
                state[nxt] = 1
                path.append(nxt)
                iterators.append(iter(successors(nxt)))
    return None


def critical_faces(cx: SimplicialComplex, matching: Matching) -> tuple[Face, ...]:
    """Faces in no pair, in canonical order."""
    report = verify_matching(cx, matching)
    if not report.ok:
        raise InvalidMatchingError("; ".join(report.violations))
    matched = matching.matched_faces
    return tuple(face for face in cx.faces if face not in matched)


def elementary_collapse(cx: SimplicialComplex, target: SimplicialComplex) -> CollapseResult:
    """Greedily remove free pairs outside ``target``; success iff exactly ``target`` is left."""
    if not is_subcomplex(target, cx):
        raise SubcomplexError("collapse target is not a subcomplex")
    keep = target.face_set
    cofaces: dict[Face, list[Face]] = {face: [] for face in cx.faces}
    for face in cx.faces:
        if len(face) > 1:
            for sub in _facets_of(face):
                cofaces[sub].append(face)
    up_count = {face: len(c) for face, c in cofaces.items()}
    remaining = set(cx.faces)

    queue = deque(f for f in cx.faces if f and f not in keep and up_count[f] == 1)
    log: list[tuple[Face, Face]] = []

    def lower(face: Face) -> None:
        for sub in _facets_of(face):
            if not sub or sub not in remaining:
                continue
            up_count[sub] -= 1
            if up_count[sub] == 1 and sub not in keep:
                queue.append(sub)
            elif up_count[sub] == 0:
                queue.extend(g for g in _facets_of(sub) if g and g not in keep and up_count.get(g) == 1)

    while queue:
        sigma = queue.popleft()
        if sigma not in remaining or up_count[sigma] != 1:
            continue
        tau = next(c for c in cofaces[sigma] if c in remaining)
        if up_count[tau] != 0 or tau in keep:
            continue
        remaining.discard(tau)
        remaining.discard(sigma)
        log.append((sigma, tau))
        lower(tau)
        lower(sigma)

    success = remaining == set(keep)
    logger.debug(f"collapse removed {len(log)} pairs, {len(remaining)} faces left, success={success}")
    return CollapseResult(success=success, pairs=log, remaining_faces=len(remaining))


def tree_centre(tree: Graph) -> tuple[int, int]:
    """(centre, eccentricity) of a tree; ties go to the smaller vertex index."""
    best = (0, -1)
    for v in tree.vertices:
        ecc = max(bfs_depths(tree, [v]).values())
        if best[1] < 0 or ecc < best[1]:
            best = (v, ecc)
    return best


def girth_matching(graph: Graph, k: int) -> Matching:
    """Pairs (f, f + {v}) on cl(G^k) whose critical faces are cl(G^{k-1}).

    For each maximal clique sigma of G^k, G[sigma] is a tree and v is its centre; f runs
    over the faces of sigma - {v} that contain an edge of G^k missing from G^{k-1}.
    """
    if k < 2:
        raise PreconditionError(f"girth matching needs k >= 2, got {k}")
    g = girth(graph)
    if g is not INFINITE and g < 3 * k + 1:  # type: ignore[operator]
        raise PreconditionError(f"girth {g} is below 3k+1 = {3 * k + 1}")

    upper_power = power(graph, k)
    new_edges = upper_power.edges - power(graph, k - 1).edges
    pairs: dict[Face, Face] = {}
    for sigma in maximal_cliques(upper_power):
        tree, mapping = induced(graph, sigma)
        if not is_connected(tree) or tree.edge_count != tree.vertex_count - 1:
            raise PreconditionError(f"clique {sigma} of G^{k} does not span a tree of G")
        centre, ecc = tree_centre(tree)
        if ecc >= k:
            raise PreconditionError(f"tree on {sigma} has radius {ecc} >= {k}")
        v = mapping[centre]
        rest = [x for x in sigma if x != v]
        for size in range(2, len(rest) + 1):
            for f in combinations(rest, size):
                if not any(edge in new_edges for edge in combinations(f, 2)):
                    continue
                tau = tuple(sorted(f + (v,)))
                if pairs.setdefault(f, tau) != tau:
                    raise InvalidMatchingError(f"face {f} lies in two maximal faces with different centres")
    logger.debug(f"girth matching for k={k} has {len(pairs)} pairs")
    return Matching.from_pairs(pairs.items())


def fold_matching(graph: Graph, u: int, v: int) -> Matching:
    """Pairs (f, f + {v}) for cliques f containing u but not v, given N[u] inside N[v].

    Its critical faces are the cliques avoiding u, i.e. cl(G - u) on the original labels.
    """
    if u == v or not graph.closed_neighborhood(u) <= graph.closed_neighborhood(v):
        raise PreconditionError(f"N[{u}] is not contained in N[{v}]")
    link_graph, mapping = induced(graph, graph.neighbors(u))
    pairs = []
    for clique in cliques(link_graph):
        f = tuple(sorted((u,) + tuple(mapping[i] for i in clique)))
        if v not in f:
            pairs.append((f, tuple(sorted(f + (v,)))))
    return Matching.from_pairs(pairs)
