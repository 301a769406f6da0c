"""
Type definitions for clique-powers using Pydantic models.
"""

from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

SCHEMA_VERSION = "1"


class Verdict(str, Enum):
    """Итог проверки теоремы."""

    PASS = "pass"
    FAIL = "fail"
    RESOURCE = "resource"


class ComplexKind(str, Enum):
    """Вид комплекса, строимого по графу."""

    CLIQUE = "clique"
    INDEPENDENCE = "independence"


class HomologyTier(str, Enum):
    """Способ вычисления гомологий."""

    EXACT = "exact"
    FIELD = "field"
    AUTO = "auto"


class OutputFormat(str, Enum):
    """Форматы вывода CLI."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"
    MARKDOWN = "markdown"


def _last_nonzero(values: list[Any]) -> int:
    for index in range(len(values) - 1, -1, -1):
        if values[index]:
            return index
    return -1


class HomologyProfile(BaseModel):
    """Приведённые числа Бетти и коэффициенты кручения по размерностям."""

    betti: list[int] = Field(default_factory=list, description="Reduced Betti numbers b_0, b_1, ...")
    torsion: list[list[int]] = Field(default_factory=list, description="Torsion coefficients per dimension")
    betti_minus_one: int = Field(0, ge=0, description="Reduced Betti number in degree -1 (1 only for {empty face})")

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        betti = [int(b) for b in data.get("betti", [])]
        torsion = [sorted(int(t) for t in group) for group in data.get("torsion", [])]
        length = max(_last_nonzero(betti), _last_nonzero(torsion)) + 1
        betti = (betti + [0] * length)[:length]
        torsion = (torsion + [[] for _ in range(length)])[:length]
        return {**data, "betti": betti, "torsion": torsion}

    @field_validator("betti")
    @classmethod
    def _non_negative(cls, value: list[int]) -> list[int]:
        if any(b < 0 for b in value):
            raise ValueError("Betti numbers must be non-negative")
        return value

    @field_validator("torsion")
    @classmethod
    def _divisibility_chain(cls, value: list[list[int]]) -> list[list[int]]:
        for group in value:
            if any(t <= 1 for t in group):
                raise ValueError("torsion coefficients must exceed 1")
            if any(b % a for a, b in zip(group, group[1:])):
                raise ValueError(f"torsion coefficients {group} do not form a divisibility chain")
        return value

    @classmethod
    def point(cls) -> "HomologyProfile":
        return cls()

    @classmethod
    def spheres(cls, counts: dict[int, int]) -> "HomologyProfile":
        """Profile of a wedge with ``counts[d]`` spheres of dimension d."""
        top = max(counts, default=-1)
        return cls(betti=[counts.get(d, 0) for d in range(top + 1)])

    @property
    def is_torsion_free(self) -> bool:
        return not any(self.torsion)

    def betti_at(self, dimension: int) -> int:
        if dimension == -1:
            return self.betti_minus_one
        return self.betti[dimension] if 0 <= dimension < len(self.betti) else 0

    def torsion_at(self, dimension: int) -> list[int]:
        return self.torsion[dimension] if 0 <= dimension < len(self.torsion) else []

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic, sum of (-1)^i b_i including degree -1."""
        return -self.betti_minus_one + sum((-1) ** i * b for i, b in enumerate(self.betti))

    def suspend(self, times: int = 1) -> "HomologyProfile":
        """Profile of the unreduced suspension, applied ``times`` times."""
        profile = self
        for _ in range(times):
            profile = HomologyProfile(
                betti=[profile.betti_minus_one] + list(profile.betti),
                torsion=[[]] + [list(group) for group in profile.torsion],
            )
        return profile

    def wedge_spheres(self, dimension: int, count: int) -> "HomologyProfile":
        """Profile after wedging ``count`` spheres of the given dimension onto the space."""
        betti = list(self.betti) + [0] * max(0, dimension + 1 - len(self.betti))
        betti[dimension] += count
        return HomologyProfile(betti=betti, torsion=[list(g) for g in self.torsion], betti_minus_one=self.betti_minus_one)

    def as_wedge(self) -> "WedgePrediction | None":
        """The wedge of spheres with this homology, or None when torsion or b_{-1} is present."""
        if not self.is_torsion_free or self.betti_minus_one:
            return None
        return WedgePrediction(summands=[(i, b) for i, b in enumerate(self.betti) if b])

    def render(self) -> str:
        wedge = self.as_wedge()
        return wedge.render() if wedge is not None else self.summary()

    def summary(self) -> str:
        parts = []
        if self.betti_minus_one:
            parts.append(f"b-1={self.betti_minus_one}")
        for i, b in enumerate(self.betti):
            if b:
                parts.append(f"b{i}={b}")
            if self.torsion[i]:
                parts.append(f"T{i}={'x'.join(map(str, self.torsion[i]))}")
        return ", ".join(parts) or "acyclic"


class WedgePrediction(BaseModel):
    """Формальный букет сфер: список пар (размерность, количество)."""

    summands: list[tuple[int, int]] = Field(default_factory=list, description="(sphere dimension, count) pairs")

    model_config = ConfigDict(frozen=True)

    @field_validator("summands")
    @classmethod
    def _check_summands(cls, value: list[tuple[int, int]]) -> list[tuple[int, int]]:
        dims = [d for d, _ in value]
        if len(set(dims)) != len(dims):
            raise ValueError("sphere dimensions must be distinct")
        if any(d < 0 for d in dims) or any(c < 1 for _, c in value):
            raise ValueError("dimensions must be >= 0 and counts >= 1")
        return sorted(value)

    @classmethod
    def contractible(cls) -> "WedgePrediction":
        return cls()

    @classmethod
    def wedge(cls, count: int, dimension: int) -> "WedgePrediction":
        return cls(summands=[(dimension, count)] if count > 0 else [])

    @property
    def is_contractible(self) -> bool:
        return not self.summands

    def suspend(self, times: int = 1) -> "WedgePrediction":
        return WedgePrediction(summands=[(d + times, c) for d, c in self.summands])

    def to_profile(self) -> HomologyProfile:
        return HomologyProfile.spheres(dict(self.summands))

    def render(self) -> str:
        """Table cell syntax: ``*``, ``S^d`` or ``v^k S^d``."""
        if not self.summands:
            return "*"
        return " v ".join(f"S^{d}" if c == 1 else f"v^{c} S^{d}" for d, c in self.summands)


class CircularParams(BaseModel):
    """Параметры кругового полного графа T_{n,k}."""

    n: int = Field(..., ge=2, description="Number of vertices")
    k: int = Field(..., ge=1, description="Degree of every vertex")

    @model_validator(mode="after")
    def _check_parity(self) -> "CircularParams":
        if self.k > self.n - 1:
            raise ValueError(f"k={self.k} must be at most n-1={self.n - 1}")
        if (self.n - self.k) % 2 == 0:
            raise ValueError(f"n={self.n} and k={self.k} must have opposite parity")
        return self

    @property
    def r(self) -> int:
        return (self.n - self.k - 1) // 2


class MatchingReport(BaseModel):
    """Результат проверки паросочетания на ацикличность."""

    ok: bool
    violations: list[str] = Field(default_factory=list, description="Human-readable violations")
    cycle: list[tuple[int, ...]] | None = Field(None, description="Faces of a closed gradient path, if any")


class CollapseResult(BaseModel):
    """Журнал элементарных стягиваний."""

    success: bool = Field(..., description="True iff the complex reduced exactly to the target")
    pairs: list[tuple[tuple[int, ...], tuple[int, ...]]] = Field(
        default_factory=list, description="Removed (free face, coface) pairs in order"
    )
    remaining_faces: int = Field(0, description="Number of faces left after the greedy pass")


class TheoremReport(BaseModel):
    """Отчёт о проверке одного утверждения на конкретном примере."""

    theorem: str = Field(..., description="Registry id of the checked statement")
    parameters: dict[str, Any] = Field(default_factory=dict, description="Instance parameters")
    verdict: Verdict
    evidence: dict[str, Any] = Field(default_factory=dict, description="Computed vs expected data")
    counterexample: dict[str, Any] | None = Field(None, description="Machine-readable failure data")
    note: str | None = Field(None, description="Limitations of the check")

    model_config = ConfigDict(use_enum_values=True)

    @model_validator(mode="after")
    def _fail_has_counterexample(self) -> "TheoremReport":
        if self.verdict == Verdict.FAIL and not self.counterexample:
            raise ValueError("a failing report must carry a counterexample")
        return self

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


class TableCell(BaseModel):
    """Ячейка таблицы cl(C_n^r)."""

    n: int
    r: int
    predicted: str = Field(..., description="Rendered closed-form prediction")
    computed: str | None = Field(None, description="Rendered computed profile, None when over the ceiling")
    tier: HomologyTier = Field(HomologyTier.EXACT, description="How the profile was computed")
    agrees: bool | None = Field(None, description="Computed profile matches the prediction")
    faces: int | None = Field(None, description="Face count of the largest complex built")

    model_config = ConfigDict(use_enum_values=True)
