"""Least-squares fitting of the four laws on logarithmic values.

Every fit minimizes the sum of squared residuals of log f(r) against the
observed log values. The three K-bearing laws are exactly log-linear, so
their estimates are closed-form ordinary least squares, solved through an
orthogonal decomposition of centered regressors (never by iterative
search). The zipf-mandelbrot law is different on two counts, documented
here because both surprise users:

* it has no scale factor K, so its log-space regression has no intercept
  and the fitted curve always passes through f(N) = 1;
* its rank offset rho enters nonlinearly; for fixed rho the best slope is
  closed-form, and rho itself is found by golden-section search on that
  profiled objective over (-0.99, 10 N].

Goodness of fit is the log-space coefficient of determination R^2. For a
constant series the total sum of squares vanishes; by convention R^2 is 1
when the model reproduces the data (SSE <= 1e-20) and 0 otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import accel, models
from .errors import FitError, InsufficientDataError, ValidationError
from .ingest import RankedSeries

_RHO_LOWER = -0.99
# Interval tolerance for the rho search. Far tighter than rho ever needs
# on its own, so the slope (and hence epsilon) inherits full precision.
_RHO_TOL = 1e-10
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0

#: Free-parameter count per model tag, used by the comparison tie-break.
PARAM_COUNTS = {"zipf": 2, "mandelbrot": 2, "lavalette": 2, "beta-like": 3}


@dataclass(frozen=True, eq=False)
class FitReport:
    """Outcome of fitting one model to one series.

    ``residuals[i]`` is log(observed value at rank i+1) minus
    log(evaluate(params, i+1)); ``log_sse`` is their sum of squares.
    """

    model: str
    params: models.ModelParams
    r_squared: float
    log_sse: float
    residuals: np.ndarray
    n: int
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        residuals = np.asarray(self.residuals, dtype=np.float64).copy()
        residuals.setflags(write=False)
        object.__setattr__(self, "residuals", residuals)


@dataclass(frozen=True)
class ComparisonReport:
    """All four fits of one series, plus the comparison verdicts.

    ``reports`` follows catalog order (zipf, mandelbrot, lavalette,
    beta-like). ``best_by_r2`` is the tag attaining the maximum R^2; exact
    ties go to the model with fewer parameters, then catalog order.
    ``nesting_ok`` records whether the beta-like SSE is no worse (within
    1e-9) than both of its restrictions, zipf and lavalette.
    """

    reports: tuple[FitReport, ...]
    best_by_r2: str
    nesting_ok: bool

    def report(self, tag: str) -> FitReport:
        for rep in self.reports:
            if rep.model == tag:
                return rep
        raise KeyError(tag)


def _require_length(series: RankedSeries, minimum: int, what: str) -> None:
    if series.n < minimum:
        raise InsufficientDataError(f"{what} needs at least {minimum} values, got {series.n}")


def _log_sums(log_obs: np.ndarray, log_model: np.ndarray) -> tuple[np.ndarray, float, float]:
    residuals = log_obs - log_model
    sse = float(residuals @ residuals)
    if np.all(log_obs == log_obs[0]):
        sst = 0.0
    else:
        centered = log_obs - log_obs.mean()
        sst = float(centered @ centered)
    return residuals, sse, sst


def _r2(sse: float, sst: float) -> float:
    if sst == 0.0:
        return 1.0 if sse <= 1e-20 else 0.0
    return 1.0 - sse / sst


def _finalize(series: RankedSeries, params: models.ModelParams, warnings: tuple[str, ...] = ()) -> FitReport:
    residuals, sse, sst = _log_sums(np.log(series.values), np.log(models.model_values(params, series.n)))
    return FitReport(
        model=type(params).model,
        params=params,
        r_squared=_r2(sse, sst),
        log_sse=sse,
        residuals=residuals,
        n=series.n,
        warnings=warnings,
    )


def _centered_ols(columns: tuple[np.ndarray, ...], y: np.ndarray) -> tuple[np.ndarray, float]:
    """OLS slope(s) and intercept, solved on centered columns."""
    design = np.column_stack(columns)
    col_means = design.mean(axis=0)
    y_mean = float(y.mean())
    coef, _, rank, _ = np.linalg.lstsq(design - col_means, y - y_mean, rcond=None)
    # Rank ranges over >= 3 distinct values, so the columns cannot collapse.
    assert rank == design.shape[1], "degenerate design matrix"
    return coef, y_mean - float(col_means @ coef)


def r_squared_log(observed: RankedSeries, fitted: models.ModelParams) -> float:
    """Log-space R^2 of a parameter set against an observed series."""
    if not isinstance(fitted, models.ZipfParams) and fitted.n != observed.n:
        raise ValidationError(f"fitted n={fitted.n} does not match series n={observed.n}")
    _, sse, sst = _log_sums(np.log(observed.values), np.log(models.model_values(fitted, observed.n)))
    return _r2(sse, sst)


def fit_zipf(series: RankedSeries) -> FitReport:
    """OLS of log value on log rank; alpha is the negated slope."""
    _require_length(series, 3, "zipf fit")
    log_rank = np.log(np.arange(1.0, series.n + 1.0))
    coef, intercept = _centered_ols((log_rank,), np.log(series.values))
    # + 0.0 turns the -0.0 produced by negating an exact-zero slope into 0.0.
    params = models.ZipfParams(k=math.exp(intercept), alpha=-float(coef[0]) + 0.0)
    return _finalize(series, params)


def fit_lavalette(series: RankedSeries) -> FitReport:
    """OLS of log value on log((N+1-r)/r)."""
    _require_length(series, 3, "lavalette fit")
    n = series.n
    ranks = np.arange(1.0, n + 1.0)
    x = np.log(n + 1.0 - ranks) - np.log(ranks)
    coef, intercept = _centered_ols((x,), np.log(series.values))
    params = models.LavaletteParams(k=math.exp(intercept), b=float(coef[0]), n=n)
    return _finalize(series, params)


def fit_beta_like(series: RankedSeries) -> FitReport:
    """Two-regressor OLS: log value on log(N+1-r) and log r."""
    _require_length(series, 4, "beta-like fit")
    n = series.n
    ranks = np.arange(1.0, n + 1.0)
    coef, intercept = _centered_ols(
        (np.log(n + 1.0 - ranks), np.log(ranks)), np.log(series.values)
    )
    params = models.BetaLikeParams(
        k=math.exp(intercept), a=-float(coef[1]) + 0.0, b=float(coef[0]), n=n
    )
    return _finalize(series, params)


def fit_mandelbrot(series: RankedSeries) -> FitReport:
    """Profiled fit of the offset power law.

    For each candidate rho the no-intercept slope is closed form; the
    golden-section search below minimizes that profiled SSE over rho in
    (-0.99, 10 N]. Lands at a bracket edge only when the objective keeps
    improving toward it, which is flagged as a warning on the report.
    """
    _require_length(series, 3, "mandelbrot fit")
    y = np.log(series.values)
    lo, hi = _RHO_LOWER, 10.0 * series.n

    def objective(rho: float) -> float:
        sse = accel.mandelbrot_profile(y, rho)[1]
        return sse if math.isfinite(sse) else math.inf

    a, b = lo, hi
    c = b - (b - a) * _INVPHI
    d = a + (b - a) * _INVPHI
    fc, fd = objective(c), objective(d)
    while b - a > _RHO_TOL:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INVPHI
            fc = objective(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INVPHI
            fd = objective(d)
    rho = (a + b) / 2.0

    slope, sse = accel.mandelbrot_profile(y, rho)
    if not (math.isfinite(slope) and math.isfinite(sse)):
        raise FitError("mandelbrot fit found no finite objective inside the rho bracket")
    warnings: tuple[str, ...] = ()
    edge = 1e-6 * (hi - lo)
    if rho <= lo + edge or rho >= hi - edge:
        warnings = (f"rho search converged at the bracket edge (rho={rho:.6g}); fit may be unreliable",)
    params = models.MandelbrotParams(rho=rho, epsilon=slope - 1.0, n=series.n)
    return _finalize(series, params, warnings)


_FITTERS = {
    "zipf": fit_zipf,
    "mandelbrot": fit_mandelbrot,
    "lavalette": fit_lavalette,
    "beta-like": fit_beta_like,
}


def fit_model(series: RankedSeries, tag: str) -> FitReport:
    """Fit one model selected by tag."""
    try:
        fitter = _FITTERS[tag]
    except KeyError:
        raise ValidationError(f"unknown model {tag!r}; expected one of {', '.join(models.MODEL_TAGS)}") from None
    return fitter(series)


def compare_models(series: RankedSeries) -> ComparisonReport:
    """Fit all four models and rank them by log-space R^2."""
    _require_length(series, 4, "model comparison")
    reports = []
    for tag in models.MODEL_TAGS:
        try:
            reports.append(_FITTERS[tag](series))
        except FitError as exc:
            raise type(exc)(f"{tag}: {exc}") from exc
    best = min(
        reports,
        key=lambda rep: (-rep.r_squared, PARAM_COUNTS[rep.model], models.MODEL_TAGS.index(rep.model)),
    )
    beta = reports[models.MODEL_TAGS.index("beta-like")]
    zipf = reports[models.MODEL_TAGS.index("zipf")]
    lavalette = reports[models.MODEL_TAGS.index("lavalette")]
    nesting_ok = beta.log_sse <= zipf.log_sse + 1e-9 and beta.log_sse <= lavalette.log_sse + 1e-9
    return ComparisonReport(reports=tuple(reports), best_by_r2=best.model, nesting_ok=nesting_ok)
