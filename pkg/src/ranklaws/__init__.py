"""Fitting and comparison of rank-order distribution laws.

The package covers four laws for positive values sorted in decreasing
order (zipf, zipf-mandelbrot, lavalette, and a two-exponent beta-like
law), least-squares fitting of each on logarithmic values, model
comparison by log-space R^2, and two generators for synthetic data: model
curves under lognormal noise and a Simon preferential-attachment process.
"""

__version__ = "0.1.0"

from .errors import (
    FitError,
    InsufficientDataError,
    ParseError,
    RankLawsError,
    ValidationError,
)
from .ingest import IngestOptions, RankedSeries, parse_csv, rank_raw
from .models import (
    MODEL_TAGS,
    BetaLikeParams,
    LavaletteParams,
    MandelbrotParams,
    ModelParams,
    ZipfParams,
    curve,
    evaluate,
    model_values,
)
from .fit import (
    ComparisonReport,
    FitReport,
    compare_models,
    fit_beta_like,
    fit_lavalette,
    fit_mandelbrot,
    fit_model,
    fit_zipf,
    r_squared_log,
)
from .generate import NoiseSpec, SimonConfig, generate_synthetic, simulate_simon

__all__ = [
    "BetaLikeParams",
    "ComparisonReport",
    "FitError",
    "FitReport",
    "IngestOptions",
    "InsufficientDataError",
    "LavaletteParams",
    "MODEL_TAGS",
    "MandelbrotParams",
    "ModelParams",
    "NoiseSpec",
    "ParseError",
    "RankLawsError",
    "RankedSeries",
    "SimonConfig",
    "ValidationError",
    "ZipfParams",
    "compare_models",
    "curve",
    "evaluate",
    "fit_beta_like",
    "fit_lavalette",
    "fit_mandelbrot",
    "fit_model",
    "fit_zipf",
    "generate_synthetic",
    "model_values",
    "parse_csv",
    "r_squared_log",
    "rank_raw",
    "simulate_simon",
    "__version__",
]
