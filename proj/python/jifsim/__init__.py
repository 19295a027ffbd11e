"""Journal publication and citation dynamics simulator.

The compiled core carries the model; this package re-exports it under a
stable name so `import jifsim` works both from an installed wheel and from a
build tree placed on PYTHONPATH.
"""

from ._core import (
    KernelParams,
    QualityDistribution,
    Rng,
    SimConfig,
    SimResult,
    __version__,
    age_factor,
    citation_count_factor,
    cite_probability,
    draw_reference_count,
    quality_from_continuous,
    run_simulation,
    sample_quality,
)

__all__ = [
    "KernelParams",
    "QualityDistribution",
    "Rng",
    "SimConfig",
    "SimResult",
    "__version__",
    "age_factor",
    "citation_count_factor",
    "cite_probability",
    "draw_reference_count",
    "quality_from_continuous",
    "run_simulation",
    "sample_quality",
]
