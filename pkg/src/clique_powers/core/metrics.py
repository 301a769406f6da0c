"""
Metrics collection for validator runs.
"""

import time
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any

import psutil
from loguru import logger


@dataclass
class ReportMetrics:
    """Metrics for one report job."""

    theorem: str
    verdict: str
    duration: float
    memory_usage: float
    timestamp: datetime = field(default_factory=datetime.now)


class MetricsCollector:
    """Collector for report metrics."""

    def __init__(self) -> None:
        self.metrics: list[ReportMetrics] = []
        self.start_time: float | None = None
        self.process = psutil.Process()

    def start_run(self) -> None:
        """Start timing a suite run."""
        self.start_time = time.time()

    def get_memory_usage(self) -> float:
        """Get current memory usage in MB."""
        try:
            return self.process.memory_info().rss / 1024 / 1024
        except psutil.Error:
            return 0.0

    def record(self, metrics: ReportMetrics) -> None:
        self.metrics.append(metrics)
        logger.debug(
            f"report_completed theorem={metrics.theorem} verdict={metrics.verdict} "
            f"duration={metrics.duration:.3f}s memory={metrics.memory_usage:.1f}MB"
        )

    def get_summary(self) -> dict[str, Any]:
        """Get summary of all metrics."""
        if not self.metrics:
            return {}

        verdicts: dict[str, int] = {}
        for m in self.metrics:
            verdicts[m.verdict] = verdicts.get(m.verdict, 0) + 1
        total_duration = sum(m.duration for m in self.metrics)
        slowest = max(self.metrics, key=lambda m: m.duration)

        return {
            "total_reports": len(self.metrics),
            "verdicts": verdicts,
            "total_duration": total_duration,
            "avg_duration": total_duration / len(self.metrics),
            "max_duration": slowest.duration,
            "slowest_theorem": slowest.theorem,
            "max_memory_usage": max(m.memory_usage for m in self.metrics),
            "wall_time": time.time() - self.start_time if self.start_time is not None else None,
        }

    def clear(self) -> None:
        self.metrics.clear()
        self.start_time = None
