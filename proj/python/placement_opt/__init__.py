"""Product placement optimization under choice models and browsing distributions."""

import json

from ._core import (
    ALGORITHMS,
    DEFAULT_SEED,
    ContractError,
    Instance,
    NumericalError,
    ParseError,
    SizeGuardError,
    UnsupportedOperation,
    best_assortment,
    estimate,
    gen_instance_i,
    gen_lemma_single_1,
    gen_lemma_single_2,
    gen_max_coverage,
    gen_random,
    sample_size,
)
from ._core import solve as _solve


def solve(instance, algorithm, **kwargs):
    """Run a placement algorithm and return its report as a dict."""
    return json.loads(_solve(instance, algorithm, **kwargs))


def compare(instance, algorithms, **kwargs):
    """Solve with each algorithm; returns {name: report} sorted by name."""
    return {name: solve(instance, name, **kwargs) for name in sorted(set(algorithms))}


__all__ = [
    "ALGORITHMS",
    "DEFAULT_SEED",
    "ContractError",
    "Instance",
    "NumericalError",
    "ParseError",
    "SizeGuardError",
    "UnsupportedOperation",
    "best_assortment",
    "compare",
    "estimate",
    "gen_instance_i",
    "gen_lemma_single_1",
    "gen_lemma_single_2",
    "gen_max_coverage",
    "gen_random",
    "sample_size",
    "solve",
]
