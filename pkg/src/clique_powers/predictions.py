"""
Closed-form homotopy types of clique complexes of cycle powers and of independence
complexes of cycles and circular complete graphs.

Case splits are done in exact rational arithmetic.
"""

from fractions import Fraction

from .exceptions import InputError
from .families import circular_params
from .types import WedgePrediction


def wedge_exponent(n: int, r: int) -> int:
    """l = floor(r / (n - 2r)), defined for 0 <= r < n/2."""
    if not 0 <= 2 * r < n:
        raise InputError(f"wedge exponent needs 0 <= r < n/2, got n={n}, r={r}")
    return r // (n - 2 * r)


def predict_clique_cycle_power(n: int, r: int) -> WedgePrediction:
    """Homotopy type of cl(C_n^r).

    With l = floor(r/(n-2r)): a wedge of n-2r-1 spheres S^{2l} when r/n = l/(2l+1),
    a single S^{2l+1} otherwise, and a point once r >= floor(n/2).
    """
    if n < 3 or r < 0:
        raise InputError(f"cycle power needs n >= 3 and r >= 0, got n={n}, r={r}")
    if 2 * r + 1 >= n:
        return WedgePrediction.contractible()
    l = wedge_exponent(n, r)
    if Fraction(r, n) == Fraction(l, 2 * l + 1):
        return WedgePrediction.wedge(n - 2 * r - 1, 2 * l)
    return WedgePrediction.wedge(1, 2 * l + 1)


def predict_ind_circular(n: int, k: int) -> WedgePrediction:
    """Homotopy type of ind(T_{n,k}).

    A wedge of k spheres S^{2l} when n/(k+1) = 2l+1, otherwise S^{2l+1} with
    2l+1 < n/(k+1) < 2l+3.
    """
    circular_params(n, k)
    ratio = Fraction(n, k + 1)
    if ratio.denominator == 1 and ratio.numerator % 2 == 1:
        return WedgePrediction.wedge(k, ratio.numerator - 1)
    l = int((ratio - 1) // 2)
    return WedgePrediction.wedge(1, 2 * l + 1)


def predict_ind_cycle(m: int) -> WedgePrediction:
    """ind(C_m): S^{j-1} v S^{j-1} for m = 3j, S^{j-1} for m = 3j+1, S^j for m = 3j+2."""
    if m < 3:
        raise InputError(f"cycle length must be >= 3, got {m}")
    j, rest = divmod(m, 3)
    if rest == 0:
        return WedgePrediction.wedge(2, j - 1)
    if rest == 1:
        return WedgePrediction.wedge(1, j - 1)
    return WedgePrediction.wedge(1, j)


def complement_degree(n: int, r: int) -> int:
    """k with complement(C_n^r) = T_{n,k}."""
    return n - 2 * r - 1


def double_suspension_source(n: int, r: int) -> tuple[int, int] | None:
    """(n', r') with cl(C_n^r) = double suspension of cl(C_{n'}^{r'}), when that reduction applies."""
    if 3 * r >= n and 2 * r < n and 4 * r - n >= 3:
        return 4 * r - n, 3 * r - n
    return None


def circular_double_suspension_source(n: int, k: int) -> tuple[int, int] | None:
    """(n - 2(k+1), k) when ind(T_{n,k}) is the double suspension of ind(T_{n-2(k+1),k})."""
    circular_params(n, k)
    if n >= 3 * k + 3:
        return n - 2 * (k + 1), k
    return None


def prediction_table(n_max: int, n_min: int = 3) -> dict[int, list[WedgePrediction]]:
    """Row C_n lists the predictions for r = 0..floor(n/2)."""
    if n_min < 3 or n_max < n_min:
        raise InputError(f"table rows need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    return {n: [predict_clique_cycle_power(n, r) for r in range(n // 2 + 1)] for n in range(n_min, n_max + 1)}
