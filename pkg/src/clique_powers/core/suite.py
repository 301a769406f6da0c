"""
Concurrent runner for independent report jobs.
"""

import asyncio
import time
from collections.abc import Callable, Sequence

from loguru import logger

from ..config import settings
from ..types import TheoremReport, Verdict
from .metrics import MetricsCollector, ReportMetrics

Job = Callable[[], TheoremReport]


class TheoremSuite:
    """Runs report jobs in worker threads; results keep the order of the jobs."""

    def __init__(self, max_concurrent: int | None = None):
        self.max_concurrent = max_concurrent or settings.max_concurrent
        self.metrics_collector = MetricsCollector()

    async def _run_with_semaphore(self, semaphore: asyncio.Semaphore, job: Job) -> TheoremReport:
        async with semaphore:
            started = time.perf_counter()
            report = await asyncio.to_thread(job)
            self.metrics_collector.record(
                ReportMetrics(
                    theorem=report.theorem,
                    verdict=str(report.verdict),
                    duration=time.perf_counter() - started,
                    memory_usage=self.metrics_collector.get_memory_usage(),
                )
            )
            return report

    async def run(self, jobs: Sequence[Job]) -> list[TheoremReport]:
        """Run every job; the first exception propagates once all jobs have settled."""
        self.metrics_collector.start_run()
        semaphore = asyncio.Semaphore(self.max_concurrent)
        logger.info(f"Running {len(jobs)} report jobs with {self.max_concurrent} concurrent workers")
        results = await asyncio.gather(*(self._run_with_semaphore(semaphore, job) for job in jobs), return_exceptions=True)
        for result in results:
            if isinstance(result, BaseException):
                raise result
        reports: list[TheoremReport] = list(results)  # type: ignore[arg-type]
        logger.info(f"Suite finished: {self.metrics_collector.get_summary()}")
        return reports

    def run_sync(self, jobs: Sequence[Job]) -> list[TheoremReport]:
        return asyncio.run(self.run(jobs))

    def get_summary(self) -> dict:
        return self.metrics_collector.get_summary()


def overall_verdict(reports: Sequence[TheoremReport]) -> Verdict:
    """fail beats resource beats pass."""
    verdicts = {Verdict(r.verdict) for r in reports}
    if Verdict.FAIL in verdicts:
        return Verdict.FAIL
    if Verdict.RESOURCE in verdicts:
        return Verdict.RESOURCE
    return Verdict.PASS
