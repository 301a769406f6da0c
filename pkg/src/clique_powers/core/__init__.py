"""
Core module: graphs, complexes, homology, matchings and the report runner.
"""

from .complex import SimplicialComplex, clique_complex, independence_complex
from .file_manager import AsyncFileManager
from .graph import Graph, power
from .homology import ProfileComputation, compute_profile, independence_profile
from .metrics import MetricsCollector, ReportMetrics
from .suite import TheoremSuite, overall_verdict

__all__ = [
    "Graph",
    "SimplicialComplex",
    "ProfileComputation",
    "AsyncFileManager",
    "MetricsCollector",
    "ReportMetrics",
    "TheoremSuite",
    "power",
    "clique_complex",
    "independence_complex",
    "compute_profile",
    "independence_profile",
    "overall_verdict",
]
