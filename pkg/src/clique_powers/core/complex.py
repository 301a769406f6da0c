"""
Finite abstract simplicial complexes and the constructions applied to them.

Faces are sorted vertex tuples kept in one canonical order, by dimension and then
lexicographically. Boundary matrices and every exported listing derive from this order.
The void complex has no faces at all; the empty complex is ``{()}``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from loguru import logger

from ..config import settings
from ..exceptions import InputError, ResourceLimitError
from .graph import Graph, cliques, complement, maximal_cliques

Face = tuple[int, ...]


def face_key(face: Face) -> tuple[int, Face]:
    return len(face), face


def check_face_count(count: int, what: str = "simplicial complex") -> None:
    if count > settings.face_limit:
        raise ResourceLimitError(what, count, settings.face_limit)


class SimplicialComplex:
    """Downward-closed family of faces over vertices ``0..vertex_count-1``."""

    __slots__ = ("_vertex_count", "_faces", "_face_set", "__dict__")

    def __init__(self, vertex_count: int, faces: Iterable[Sequence[int]], *, validate: bool = True):
        face_set = {tuple(sorted(face)) for face in faces}
        check_face_count(len(face_set))
        if validate:
            for face in face_set:
                if len(set(face)) != len(face):
                    raise InputError(f"face {face} repeats a vertex")
                if face and not (0 <= face[0] and face[-1] < vertex_count):
                    raise InputError(f"face {face} uses a vertex outside 0..{vertex_count - 1}")
                for i in range(len(face)):
                    if face[:i] + face[i + 1 :] not in face_set:
                        raise InputError(f"face {face} is missing its subface {face[:i] + face[i + 1:]}")
        self._vertex_count = vertex_count
        self._face_set = frozenset(face_set)
        self._faces = tuple(sorted(face_set, key=face_key))

    @classmethod
    def from_facets(cls, vertex_count: int, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        """Downward closure of the given faces."""
        faces: set[Face] = set()
        for facet in facets:
            facet = tuple(sorted(facet))
            if facet in faces:
                continue
            for size in range(len(facet) + 1):
                faces.update(combinations(facet, size))
            check_face_count(len(faces))
        return cls(vertex_count, faces)

    @classmethod
    def void(cls, vertex_count: int = 0) -> "SimplicialComplex":
        return cls(vertex_count, ())

    @property
    def vertex_count(self) -> int:
        return self._vertex_count

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._faces

    @property
    def face_set(self) -> frozenset[Face]:
        return self._face_set

    @property
    def is_void(self) -> bool:
        return not self._faces

    @property
    def dimension(self) -> int:
        """Largest face dimension; -1 for both {()} and the void complex."""
        return len(self._faces[-1]) - 1 if self._faces else -1

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Vertices that actually occur as singleton faces."""
        return tuple(face[0] for face in self.faces_of_dimension(0))

    @cached_property
    def _by_dimension(self) -> dict[int, tuple[Face, ...]]:
        groups: dict[int, list[Face]] = {}
        for face in self._faces:
            groups.setdefault(len(face) - 1, []).append(face)
        return {d: tuple(group) for d, group in groups.items()}

    def faces_of_dimension(self, d: int) -> tuple[Face, ...]:
        return self._by_dimension.get(d, ())

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts in dimensions 0..dim (the empty face is not counted)."""
        return tuple(len(self.faces_of_dimension(d)) for d in range(self.dimension + 1))

    @cached_property
    def facets(self) -> tuple[Face, ...]:
        """Inclusion-maximal faces in canonical order."""
        covered: set[Face] = set()
        for face in self._faces:
            for i in range(len(face)):
                covered.add(face[:i] + face[i + 1 :])
        return tuple(face for face in self._faces if face not in covered)

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic, the empty face counted in dimension -1."""
        return sum((-1) ** (len(face) - 1) for face in self._faces)

    def __contains__(self, face: object) -> bool:
        return face in self._face_set

    def __len__(self) -> int:
        return len(self._faces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._vertex_count == other._vertex_count and self._face_set == other._face_set

    def __hash__(self) -> int:
        return hash((self._vertex_count, self._face_set))

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertex_count={self._vertex_count}, f_vector={self.f_vector})"


@dataclass(frozen=True)
class VertexLabelledComplex:
    """A complex whose vertex i stands for the face ``labels[i]`` of a predecessor complex."""

    complex: SimplicialComplex
    labels: tuple[Face, ...]

    def __post_init__(self) -> None:
        if len(set(self.labels)) != len(self.labels):
            raise InputError("vertex labels must be distinct")
        if len(self.labels) != self.complex.vertex_count:
            raise InputError("one label per vertex is required")


def simplex(d: int) -> SimplicialComplex:
    """The full d-simplex on vertices 0..d."""
    return SimplicialComplex.from_facets(d + 1, [range(d + 1)])


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex, a (d-1)-sphere."""
    if d < 1:
        raise InputError(f"boundary of a simplex needs d >= 1, got {d}")
    return SimplicialComplex.from_facets(d + 1, combinations(range(d + 1), d))


def clique_complex(graph: Graph, dim_cap: int | None = None) -> SimplicialComplex:
    """cl(G): all cliques of G, optionally only those of dimension <= dim_cap."""
    faces: list[Face] = []
    max_size = None if dim_cap is None else dim_cap + 1
    for face in cliques(graph, max_size=max_size):
        faces.append(face)
        if len(faces) > settings.face_limit:
            raise ResourceLimitError("clique complex", len(faces), settings.face_limit)
    logger.debug(f"clique complex on {graph.vertex_count} vertices has {len(faces)} faces")
    cx = SimplicialComplex(graph.vertex_count, faces, validate=False)
    if dim_cap is None:
        # facets of cl(G) are the maximal cliques; seeds the cached property
        cx.__dict__["facets"] = tuple(maximal_cliques(graph)) or ((),)
    return cx


def independence_complex(graph: Graph) -> SimplicialComplex:
    """ind(G) = cl(complement of G)."""
    return clique_complex(complement(graph))


def skeleton(cx: SimplicialComplex, n: int) -> SimplicialComplex:
    if n < -1:
        raise InputError(f"skeleton dimension must be >= -1, got {n}")
    return SimplicialComplex(cx.vertex_count, (f for f in cx.faces if len(f) <= n + 1), validate=False)


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """Join with the vertices of ``second`` shifted past those of ``first``."""
    check_face_count(len(first) * len(second), "join")
    shift = first.vertex_count
    shifted = [tuple(v + shift for v in tau) for tau in second.faces]
    return SimplicialComplex(
        first.vertex_count + second.vertex_count,
        (sigma + tau for sigma in first.faces for tau in shifted),
        validate=False,
    )


def cone(cx: SimplicialComplex) -> SimplicialComplex:
    return join(cx, simplex(0))


def suspension(cx: SimplicialComplex) -> SimplicialComplex:
    """Unreduced suspension, the join with two points."""
    return join(cx, SimplicialComplex.from_facets(2, [(0,), (1,)]))


def disjoint_union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    shift = first.vertex_count
    faces = set(first.faces) | {tuple(v + shift for v in tau) for tau in second.faces}
    return SimplicialComplex(first.vertex_count + second.vertex_count, faces, validate=False)


def _require_vertex(cx: SimplicialComplex, v: int) -> None:
    if (v,) not in cx:
        raise InputError(f"{v} is not a vertex of the complex")


def star(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    """Closed star: faces whose union with {v} is a face."""
    _require_vertex(cx, v)
    return SimplicialComplex(
        cx.vertex_count, (f for f in cx.faces if tuple(sorted(set(f) | {v})) in cx), validate=False
    )


def link(cx: SimplicialComplex, v: int) -> SimplicialComplex:
    _require_vertex(cx, v)
    return SimplicialComplex(
        cx.vertex_count,
        (f for f in cx.faces if v not in f and tuple(sorted(f + (v,))) in cx),
        validate=False,
    )


def barycentric_subdivision(cx: SimplicialComplex) -> VertexLabelledComplex:
    """Order complex of the nonempty faces: vertices are faces, simplices are chains."""
    if cx.is_void or cx.dimension < 0:
        raise InputError("barycentric subdivision needs a nonempty complex")
    labels = tuple(f for f in cx.faces if f)
    index = {face: i for i, face in enumerate(labels)}
    edges = []
    for face in labels:
        for size in range(1, len(face)):
            edges.extend((index[sub], index[face]) for sub in combinations(face, size))
    comparability = Graph(len(labels), edges)
    return VertexLabelledComplex(complex=clique_complex(comparability), labels=labels)


def induced_subcomplex(cx: SimplicialComplex, subset: Iterable[int]) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """K[W] reindexed to 0..|W|-1 in increasing order of W; the empty W gives the void complex."""
    ordered = tuple(sorted(set(subset)))
    if any(not 0 <= v < cx.vertex_count for v in ordered):
        raise InputError(f"induced vertex set leaves 0..{cx.vertex_count - 1}")
    if not ordered:
        return SimplicialComplex.void(0), ()
    position = {v: i for i, v in enumerate(ordered)}
    faces = (tuple(position[v] for v in f) for f in cx.faces if all(v in position for v in f))
    return SimplicialComplex(len(ordered), faces, validate=False), ordered


def one_skeleton_graph(cx: SimplicialComplex) -> Graph:
    return Graph(cx.vertex_count, (tuple(f) for f in cx.faces_of_dimension(1)))  # type: ignore[misc]


def is_subcomplex(sub: SimplicialComplex, host: SimplicialComplex) -> bool:
    return sub.vertex_count <= host.vertex_count and sub.face_set <= host.face_set


def complexes_equal(first: SimplicialComplex, second: SimplicialComplex) -> bool:
    """Exact face-set equality on a shared vertex set."""
    if first.vertex_count != second.vertex_count:
        raise InputError(f"vertex counts differ: {first.vertex_count} vs {second.vertex_count}")
    return first.face_set == second.face_set
