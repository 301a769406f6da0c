"""
Exact reduced simplicial homology.

Boundary matrices are assembled as scipy sparse matrices in the canonical face order.
Ranks and invariant factors come from a sparse elimination that pivots only on unit
entries (columns with the fewest entries first, rows with the fewest entries among the
candidates) followed by a dense Smith normal form of whatever residue is left; for the
typical boundary matrix that residue is empty or tiny. Field ranks use the same
elimination with every nonzero entry a unit.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from math import gcd

import numpy as np
import scipy.sparse as sp
from loguru import logger
from sympy import factorint, isprime
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from ..config import settings
from ..exceptions import InputError, SubcomplexError
from ..types import HomologyProfile, HomologyTier, WedgePrediction
from .complex import SimplicialComplex, independence_complex, is_subcomplex
from .graph import Graph, components, induced

MatrixLike = sp.spmatrix | sp.sparray | np.ndarray | Sequence[Sequence[int]]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of the boundary map from d-faces (columns) to (d-1)-faces (rows).

    ``dimension == 0`` is the augmentation: one row for the empty face, one column per vertex.
    """

    dimension: int
    matrix: sp.csc_matrix

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape  # type: ignore[no-any-return]


@dataclass(frozen=True)
class SmithForm:
    """Nonzero Smith invariants d_1 | d_2 | ... | d_rank."""

    invariants: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariants)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariants if d > 1)


@dataclass(frozen=True)
class ProfileComputation:
    """A profile together with how it was obtained."""

    profile: HomologyProfile
    tier: HomologyTier
    faces: int


def boundary_matrices(cx: SimplicialComplex) -> list[BoundaryMatrix]:
    """One matrix per dimension 0..dim K, entry (-1)^i for deleting the i-th vertex."""
    if cx.is_void:
        return []
    matrices = []
    lower_index = {(): 0}
    for d in range(0, cx.dimension + 1):
        upper = cx.faces_of_dimension(d)
        rows, cols, data = [], [], []
        for j, face in enumerate(upper):
            for i in range(d + 1):
                rows.append(lower_index[face[:i] + face[i + 1 :]])
                cols.append(j)
                data.append(-1 if i % 2 else 1)
        matrix = sp.csc_matrix(
            (np.array(data, dtype=np.int64), (np.array(rows, dtype=np.int64), np.array(cols, dtype=np.int64))),
            shape=(len(lower_index), len(upper)),
        )
        matrices.append(BoundaryMatrix(dimension=d, matrix=matrix))
        lower_index = {face: i for i, face in enumerate(upper)}
    return matrices


def boundary_squares_vanish(matrices: Sequence[BoundaryMatrix]) -> bool:
    """True iff every composite of consecutive boundary maps is zero."""
    for lower, upper in zip(matrices, matrices[1:]):
        if (lower.matrix @ upper.matrix).count_nonzero():
            return False
    return True


class _SparseElimination:
    """Column-dictionary matrix with unit-pivot elimination over Z or Z/p."""

    def __init__(self, matrix: MatrixLike, modulus: int | None = None):
        csc = sp.csc_matrix(matrix, dtype=np.int64) if not isinstance(matrix, sp.csc_matrix) else matrix
        self.modulus = modulus
        self.columns: dict[int, dict[int, int]] = {}
        self.row_support: dict[int, set[int]] = {}
        for c in range(csc.shape[1]):
            column = {}
            for k in range(csc.indptr[c], csc.indptr[c + 1]):
                value = int(csc.data[k])
                if modulus is not None:
                    value %= modulus
                if value:
                    column[int(csc.indices[k])] = value
            if column:
                self.columns[c] = column
                for r in column:
                    self.row_support.setdefault(r, set()).add(c)

    def _is_unit(self, value: int) -> bool:
        return value != 0 if self.modulus is not None else value in (1, -1)

    def _inverse(self, value: int) -> int:
        return pow(value, -1, self.modulus) if self.modulus is not None else value

    def eliminate_units(self) -> int:
        """Pivot on unit entries until none remain; returns the number of pivots."""
        pivots = 0
        progress = True
        while progress and self.columns:
            progress = False
            for c in sorted(self.columns, key=lambda col: (len(self.columns[col]), col)):
                column = self.columns.get(c)
                if not column:
                    continue
                candidates = [r for r, v in column.items() if self._is_unit(v)]
                if not candidates:
                    continue
                pivot_row = min(candidates, key=lambda r: (len(self.row_support[r]), r))
                self._pivot(c, pivot_row)
                pivots += 1
                progress = True
        return pivots

    def _pivot(self, c: int, p: int) -> None:
        column = self.columns.pop(c)
        for r in column:
            self.row_support[r].discard(c)
        inverse = self._inverse(column[p])
        for other in list(self.row_support[p]):
            target = self.columns[other]
            factor = target[p] * inverse
            for r, value in column.items():
                updated = target.get(r, 0) - factor * value
                if self.modulus is not None:
                    updated %= self.modulus
                if updated:
                    if r not in target:
                        self.row_support[r].add(other)
                    target[r] = updated
                elif r in target:
                    del target[r]
                    self.row_support[r].discard(other)
            if not target:
                del self.columns[other]
        del self.row_support[p]

    def residual(self) -> list[list[int]]:
        """Dense copy of the remaining nonzero submatrix."""
        cols = sorted(self.columns)
        rows = sorted({r for c in cols for r in self.columns[c]})
        position = {r: i for i, r in enumerate(rows)}
        dense = [[0] * len(cols) for _ in rows]
        for j, c in enumerate(cols):
            for r, value in self.columns[c].items():
                dense[position[r]][j] = value
        return dense


def _divisibility_chain(values: Sequence[int]) -> tuple[int, ...]:
    """Normalize nonzero diagonal entries into d_1 | d_2 | ... by pairwise gcd/lcm."""
    chain = sorted(abs(int(v)) for v in values if v)
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            g = gcd(chain[i], chain[j])
            chain[i], chain[j] = g, chain[i] * chain[j] // g
    return tuple(chain)


def smith_normal_form(matrix: MatrixLike) -> SmithForm:
    """Nonzero Smith invariants of an integer matrix."""
    elimination = _SparseElimination(matrix)
    units = elimination.eliminate_units()
    dense = elimination.residual()
    rest: tuple[int, ...] = ()
    if dense:
        logger.debug(f"dense Smith form on a {len(dense)}x{len(dense[0])} residue after {units} unit pivots")
        domain_matrix = DomainMatrix([[ZZ(v) for v in row] for row in dense], (len(dense), len(dense[0])), ZZ)
        rest = tuple(int(v) for v in invariant_factors(domain_matrix))
    return SmithForm(invariants=(1,) * units + _divisibility_chain(rest))


def rational_rank(matrix: MatrixLike) -> int:
    elimination = _SparseElimination(matrix)
    units = elimination.eliminate_units()
    dense = elimination.residual()
    if not dense:
        return units
    domain_matrix = DomainMatrix([[QQ(v) for v in row] for row in dense], (len(dense), len(dense[0])), QQ)
    return units + int(domain_matrix.rank())


def rank_mod_p(matrix: MatrixLike, p: int) -> int:
    if not isprime(p):
        raise InputError(f"{p} is not a prime")
    return _SparseElimination(matrix, modulus=p).eliminate_units()


def _faces_per_dimension(cx: SimplicialComplex) -> list[int]:
    """Face counts for dimensions -1..dim."""
    return [len(cx.faces_of_dimension(d)) for d in range(-1, cx.dimension + 1)]


def _reduced_betti(cx: SimplicialComplex, ranks: list[int]) -> list[int]:
    counts = _faces_per_dimension(cx)
    ranks = ranks + [0]
    # ranks[d] is the rank of the boundary out of dimension d, so ranks[0] is the augmentation
    return [counts[d + 1] - (ranks[d] if d >= 0 else 0) - ranks[d + 1] for d in range(-1, cx.dimension + 1)]


def integer_homology(cx: SimplicialComplex) -> HomologyProfile:
    """Reduced integer homology from Smith forms of the boundary matrices."""
    if cx.is_void:
        return HomologyProfile()
    forms = [smith_normal_form(b.matrix) for b in boundary_matrices(cx)]
    betti = _reduced_betti(cx, [f.rank for f in forms])
    torsion = [list(forms[d + 1].torsion) if d + 1 < len(forms) else [] for d in range(cx.dimension + 1)]
    return HomologyProfile(betti_minus_one=betti[0], betti=betti[1:], torsion=torsion)


def betti_mod_p(cx: SimplicialComplex, p: int) -> list[int]:
    """Reduced Betti numbers b_0, b_1, ... over the field with p elements."""
    if cx.is_void:
        return []
    ranks = [rank_mod_p(b.matrix, p) for b in boundary_matrices(cx)]
    return _reduced_betti(cx, ranks)[1:]


def betti_rational(cx: SimplicialComplex) -> list[int]:
    if cx.is_void:
        return []
    ranks = [rational_rank(b.matrix) for b in boundary_matrices(cx)]
    return _reduced_betti(cx, ranks)[1:]


def field_profile(cx: SimplicialComplex) -> HomologyProfile:
    """Profile from rational and mod-2 ranks.

    When the two agree there is no 2-torsion. Otherwise each surplus mod-2 class is
    recorded as a torsion coefficient 2 in the dimension it comes from; the exact order
    of that 2-primary part is not resolved here.
    """
    if cx.is_void:
        return HomologyProfile()
    q_ranks = [rational_rank(b.matrix) for b in boundary_matrices(cx)]
    two_ranks = [rank_mod_p(b.matrix, 2) for b in boundary_matrices(cx)]
    rational = _reduced_betti(cx, q_ranks)
    modular = _reduced_betti(cx, two_ranks)
    torsion: list[list[int]] = []
    carried = 0
    for q, m in zip(rational[1:], modular[1:]):
        count = m - q - carried
        torsion.append([2] * count)
        carried = count
    return HomologyProfile(betti_minus_one=rational[0], betti=rational[1:], torsion=torsion)


def resolve_tier(cx: SimplicialComplex, tier: HomologyTier = HomologyTier.AUTO) -> HomologyTier:
    if tier != HomologyTier.AUTO:
        return tier
    return HomologyTier.EXACT if len(cx) <= settings.exact_face_limit else HomologyTier.FIELD


def compute_profile(cx: SimplicialComplex, tier: HomologyTier = HomologyTier.AUTO) -> ProfileComputation:
    chosen = resolve_tier(cx, tier)
    profile = integer_homology(cx) if chosen == HomologyTier.EXACT else field_profile(cx)
    logger.debug(f"{chosen.value} homology of a complex with {len(cx)} faces: {profile.summary()}")
    return ProfileComputation(profile=profile, tier=chosen, faces=len(cx))


def matches_wedge(profile: HomologyProfile, prediction: WedgePrediction) -> bool:
    """True iff the profile is that of the predicted wedge of spheres."""
    return (
        profile.is_torsion_free
        and profile.betti_minus_one == 0
        and list(profile.betti) == list(prediction.to_profile().betti)
    )


def h1_inclusion_surjective(sub: SimplicialComplex, host: SimplicialComplex) -> bool:
    """Whether H1(K) -> H1(L) is onto over Q and over Z/p for the configured primes.

    With pi the projection of 1-chains of L onto those of L modulo K, the map is onto iff
    dim Z1(K) + dim pi(B1(L)) = dim Z1(L).
    """
    if sub.vertex_count != host.vertex_count or not is_subcomplex(sub, host):
        raise SubcomplexError("first complex is not a subcomplex of the second on the same vertex set")
    sub_edges = sub.faces_of_dimension(1)
    host_edges = host.faces_of_dimension(1)
    sub_matrices = boundary_matrices(sub)
    host_matrices = boundary_matrices(host)
    if len(host_matrices) < 2:
        return True
    outside = [i for i, edge in enumerate(host_edges) if edge not in sub.face_set]
    relative = host_matrices[2].matrix[outside, :] if len(host_matrices) > 2 and outside else None

    def onto(rank: Callable[[MatrixLike], int]) -> bool:
        z_sub = len(sub_edges) - (rank(sub_matrices[1].matrix) if len(sub_matrices) > 1 else 0)
        z_host = len(host_edges) - rank(host_matrices[1].matrix)
        projected = rank(relative) if relative is not None else 0
        return bool(z_sub + projected == z_host)

    if not onto(rational_rank):
        return False
    return all(onto(lambda m, p=p: rank_mod_p(m, p)) for p in settings.torsion_primes)


def _cyclic_to_invariants(orders: Sequence[int]) -> list[int]:
    """Invariant factors of a direct sum of cyclic groups of the given orders."""
    powers: dict[int, list[int]] = {}
    for order in orders:
        for prime, exponent in factorint(order).items():
            powers.setdefault(prime, []).append(prime**exponent)
    if not powers:
        return []
    width = max(len(v) for v in powers.values())
    factors = [1] * width
    for values in powers.values():
        for i, value in enumerate(sorted(values, reverse=True)):
            factors[i] *= value
    return sorted(f for f in factors if f > 1)


def join_profiles(first: HomologyProfile, second: HomologyProfile) -> HomologyProfile:
    """Künneth formula for joins: H~_{n+1}(K*L) = (+) H~_i(K)(x)H~_j(L) (+) Tor terms."""

    def group(profile: HomologyProfile, degree: int) -> tuple[int, list[int]]:
        return profile.betti_at(degree), profile.torsion_at(degree)

    top = len(first.betti) + len(second.betti) + 1
    free: dict[int, int] = {}
    cyclic: dict[int, list[int]] = {}
    for i in range(-1, len(first.betti)):
        a_free, a_tor = group(first, i)
        for j in range(-1, len(second.betti)):
            b_free, b_tor = group(second, j)
            tensor_degree = i + j + 1
            free[tensor_degree] = free.get(tensor_degree, 0) + a_free * b_free
            orders = a_free * b_tor + b_free * a_tor + [gcd(s, t) for s in a_tor for t in b_tor]
            cyclic.setdefault(tensor_degree, []).extend(orders)
            cyclic.setdefault(tensor_degree + 1, []).extend(gcd(s, t) for s in a_tor for t in b_tor)
    return HomologyProfile(
        betti_minus_one=free.get(-1, 0),
        betti=[free.get(m, 0) for m in range(top)],
        torsion=[_cyclic_to_invariants([o for o in cyclic.get(m, []) if o > 1]) for m in range(top)],
    )


def independence_profile(graph: Graph, tier: HomologyTier = HomologyTier.AUTO) -> ProfileComputation:
    """Homology of ind(G), joining the profiles of the components of G."""
    parts = components(graph)
    if len(parts) <= 1:
        return compute_profile(independence_complex(graph), tier)
    profile = HomologyProfile(betti_minus_one=1)
    used = HomologyTier.EXACT
    largest = 0
    for part in parts:
        sub, _ = induced(graph, part)
        result = compute_profile(independence_complex(sub), tier)
        profile = join_profiles(profile, result.profile)
        largest = max(largest, result.faces)
        if result.tier == HomologyTier.FIELD:
            used = HomologyTier.FIELD
    logger.debug(f"ind profile joined over {len(parts)} components: {profile.summary()}")
    return ProfileComputation(profile=profile, tier=used, faces=largest)
