"""
Тесты параллельного запуска проверок и сбора метрик.
"""

import time

import pytest

from clique_powers.core.metrics import MetricsCollector, ReportMetrics
from clique_powers.core.suite import TheoremSuite, overall_verdict
from clique_powers.exceptions import PreconditionError
from clique_powers.types import TheoremReport, Verdict


def make_report(verdict: Verdict, index: int = 0) -> TheoremReport:
    counterexample = {"index": index} if verdict == Verdict.FAIL else None
    return TheoremReport(theorem="table", parameters={"index": index}, verdict=verdict, counterexample=counterexample)


def job(verdict: Verdict, index: int, delay: float = 0.0):
    def run() -> TheoremReport:
        time.sleep(delay)
        return make_report(verdict, index)

    return run


class TestOverallVerdict:
    """Тесты сводного вердикта."""

    @pytest.mark.parametrize(
        "verdicts, expected",
        [
            ([], Verdict.PASS),
            ([Verdict.PASS, Verdict.PASS], Verdict.PASS),
            ([Verdict.PASS, Verdict.RESOURCE], Verdict.RESOURCE),
            ([Verdict.RESOURCE, Verdict.FAIL, Verdict.PASS], Verdict.FAIL),
        ],
    )
    def test_precedence(self, verdicts, expected):
        assert overall_verdict([make_report(v, i) for i, v in enumerate(verdicts)]) == expected


class TestTheoremSuite:
    """Тесты TheoremSuite."""

    async def test_order_is_kept(self):
        suite = TheoremSuite(max_concurrent=4)
        jobs = [job(Verdict.PASS, i, delay=0.02 * (5 - i)) for i in range(5)]
        reports = await suite.run(jobs)
        assert [r.parameters["index"] for r in reports] == [0, 1, 2, 3, 4]

    def test_run_sync_and_summary(self):
        suite = TheoremSuite(max_concurrent=2)
        reports = suite.run_sync([job(Verdict.PASS, 0), job(Verdict.FAIL, 1), job(Verdict.PASS, 2)])
        assert overall_verdict(reports) == Verdict.FAIL

        summary = suite.get_summary()
        assert summary["total_reports"] == 3
        assert summary["verdicts"] == {"pass": 2, "fail": 1}
        assert summary["wall_time"] >= 0

    def test_default_concurrency(self):
        assert TheoremSuite().max_concurrent >= 1

    def test_error_propagates(self):
        def broken() -> TheoremReport:
            raise PreconditionError("graph is not dismantlable")

        with pytest.raises(PreconditionError):
            TheoremSuite().run_sync([job(Verdict.PASS, 0), broken])


class TestMetricsCollector:
    """Тесты MetricsCollector."""

    def test_empty_summary(self):
        assert MetricsCollector().get_summary() == {}

    def test_summary(self):
        collector = MetricsCollector()
        collector.start_run()
        collector.record(ReportMetrics(theorem="kozlov", verdict="pass", duration=0.5, memory_usage=10.0))
        collector.record(ReportMetrics(theorem="table", verdict="resource", duration=1.5, memory_usage=12.0))

        summary = collector.get_summary()
        assert summary["avg_duration"] == pytest.approx(1.0)
        assert summary["max_duration"] == 1.5
        assert summary["slowest_theorem"] == "table"
        assert summary["max_memory_usage"] == 12.0

        collector.clear()
        assert collector.get_summary() == {}

    def test_memory_usage(self):
        assert MetricsCollector().get_memory_usage() > 0
