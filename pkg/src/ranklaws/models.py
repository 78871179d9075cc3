"""The four rank-order distribution laws and their evaluation.

Each law maps an integer rank r = 1..N to a positive value:

* zipf:        f(r) = K / r^alpha
* mandelbrot:  f(r) = ((N + rho) / (r + rho))^(1 + epsilon)   (no scale factor)
* lavalette:   f(r) = K ((N + 1 - r) / r)^b
* beta-like:   f(r) = K (N + 1 - r)^b / r^a

The beta-like law nests the others, and both reductions are floating-point
exact because all three share one expression shape K (N+1-r)^b / r^a:
b = 0 gives zipf and a = b gives lavalette, bit for bit. Parameters are
plain frozen dataclasses; all evaluation is pure, so everything here is
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Union

import math

import numpy as np

from .errors import ValidationError
from .ingest import RankedSeries


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValidationError(message)


@dataclass(frozen=True)
class ZipfParams:
    """Power law K / r^alpha; defined for every rank r >= 1."""

    k: float
    alpha: float

    model: ClassVar[str] = "zipf"

    def __post_init__(self):
        _require(math.isfinite(self.k) and self.k > 0, f"k must be finite and > 0, got {self.k}")
        _require(math.isfinite(self.alpha), f"alpha must be finite, got {self.alpha}")


@dataclass(frozen=True)
class MandelbrotParams:
    """Offset power law ((N + rho) / (r + rho))^(1 + epsilon).

    Carries no scale factor, so f(N) = 1 always; rho > -1 keeps r + rho
    positive for every rank.
    """

    rho: float
    epsilon: float
    n: int

    model: ClassVar[str] = "mandelbrot"

    def __post_init__(self):
        _require(math.isfinite(self.rho) and self.rho > -1, f"rho must be finite and > -1, got {self.rho}")
        _require(math.isfinite(self.epsilon), f"epsilon must be finite, got {self.epsilon}")
        _require(self.n >= 1, f"n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class LavaletteParams:
    """One-exponent law K ((N + 1 - r) / r)^b with a depleting numerator."""

    k: float
    b: float
    n: int

    model: ClassVar[str] = "lavalette"

    def __post_init__(self):
        _require(math.isfinite(self.k) and self.k > 0, f"k must be finite and > 0, got {self.k}")
        _require(math.isfinite(self.b), f"b must be finite, got {self.b}")
        _require(self.n >= 1, f"n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class BetaLikeParams:
    """Two-exponent law K (N + 1 - r)^b / r^a.

    ``a`` acts on the denominator (a > 0 gives a decreasing head), ``b`` on
    the depleting numerator (b > 0 bends the tail down).
    """

    k: float
    a: float
    b: float
    n: int

    model: ClassVar[str] = "beta-like"

    def __post_init__(self):
        _require(math.isfinite(self.k) and self.k > 0, f"k must be finite and > 0, got {self.k}")
        _require(math.isfinite(self.a), f"a must be finite, got {self.a}")
        _require(math.isfinite(self.b), f"b must be finite, got {self.b}")
        _require(self.n >= 1, f"n must be >= 1, got {self.n}")


ModelParams = Union[ZipfParams, MandelbrotParams, LavaletteParams, BetaLikeParams]

#: Model tags in catalog order (also the tie-break order used by comparisons).
MODEL_TAGS = ("zipf", "mandelbrot", "lavalette", "beta-like")


def evaluate(params: ModelParams, r: int) -> float:
    """Evaluate the law at integer rank ``r``.

    The laws are defined only on the rank lattice: 1 <= r <= n for the
    n-bearing models, r >= 1 for zipf. Raises ValidationError outside that
    range. The result is always finite and strictly positive.
    """
    if isinstance(r, bool) or not isinstance(r, (int, np.integer)):
        raise ValidationError(f"rank must be an integer, got {r!r}")
    r = int(r)
    if isinstance(params, ZipfParams):
        if r < 1:
            raise ValidationError(f"rank {r} outside valid range r >= 1")
        return params.k / r ** params.alpha
    if not 1 <= r <= params.n:
        raise ValidationError(f"rank {r} outside valid range 1..{params.n}")
    if isinstance(params, MandelbrotParams):
        return ((params.n + params.rho) / (r + params.rho)) ** (1.0 + params.epsilon)
    if isinstance(params, LavaletteParams):
        return params.k * (params.n + 1 - r) ** params.b / r ** params.b
    if isinstance(params, BetaLikeParams):
        return params.k * (params.n + 1 - r) ** params.b / r ** params.a
    raise TypeError(f"unknown model params: {params!r}")


def model_values(params: ModelParams, n: int) -> np.ndarray:
    """Tabulate the law over ranks 1..n as a float64 array.

    Unlike :func:`curve` this applies no monotonicity check, so it also
    serves fitted parameter sets whose exponents fall outside the
    decreasing regime.
    """
    if n < 1:
        raise ValidationError(f"series length must be >= 1, got {n}")
    r = np.arange(1, n + 1, dtype=np.float64)
    if isinstance(params, ZipfParams):
        return params.k / r ** params.alpha
    if n != params.n:
        raise ValidationError(f"requested length {n} does not match params n={params.n}")
    if isinstance(params, MandelbrotParams):
        return ((params.n + params.rho) / (r + params.rho)) ** (1.0 + params.epsilon)
    if isinstance(params, LavaletteParams):
        return params.k * (params.n + 1 - r) ** params.b / r ** params.b
    if isinstance(params, BetaLikeParams):
        return params.k * (params.n + 1 - r) ** params.b / r ** params.a
    raise TypeError(f"unknown model params: {params!r}")


def curve(params: ModelParams, n: int | None = None) -> RankedSeries:
    """Tabulate the law over ranks 1..n as a RankedSeries.

    ``n`` is required for zipf (its parameters carry no length) and must
    match ``params.n`` for the other models when given. Parameter sets
    whose tabulated values increase anywhere (e.g. a negative zipf alpha)
    cannot form a RankedSeries and raise ValidationError.
    """
    if isinstance(params, ZipfParams):
        if n is None:
            raise ValidationError("zipf curve needs an explicit length n")
    elif n is None:
        n = params.n
    values = model_values(params, n)
    try:
        return RankedSeries(values)
    except ValidationError as exc:
        raise ValidationError(f"params {params!r} do not produce a non-increasing curve: {exc}") from exc
