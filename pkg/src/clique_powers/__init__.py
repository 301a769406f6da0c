"""
clique-powers: exact topology of clique complexes of graph powers.
"""

from loguru import logger

from .core.complex import SimplicialComplex, clique_complex, independence_complex
from .core.graph import Graph, complement, power
from .core.homology import compute_profile, independence_profile
from .exceptions import CliquePowersError, InputError, PreconditionError, ResourceLimitError
from .predictions import predict_clique_cycle_power, predict_ind_circular, predict_ind_cycle
from .types import HomologyProfile, TheoremReport, Verdict, WedgePrediction

__version__ = "1.0.0"

logger.disable("clique_powers")

__all__ = [
    "Graph",
    "SimplicialComplex",
    "HomologyProfile",
    "WedgePrediction",
    "TheoremReport",
    "Verdict",
    "CliquePowersError",
    "InputError",
    "PreconditionError",
    "ResourceLimitError",
    "power",
    "complement",
    "clique_complex",
    "independence_complex",
    "compute_profile",
    "independence_profile",
    "predict_clique_cycle_power",
    "predict_ind_circular",
    "predict_ind_cycle",
]
