"""
Maximum-likelihood distribution fitting with KS model selection.

Families (location fixed at 0, since attempts are positive counts):

* gamma: shape ``a`` and ``scale`` by Nelder-Mead on log-parameters.
* weibull-min: shape ``c`` and ``scale`` by Nelder-Mead on log-parameters.
* pareto: ``scale`` is the sample minimum (the boundary maximum of the
  likelihood); shape ``b`` by Nelder-Mead.
* exponential: ``scale`` is the sample mean, no optimizer.

The optimizer minimises the *mean* negative log-likelihood so the
objective tolerance does not depend on sample size.  The best family is
the one with the smallest KS statistic, ties going to the earlier family.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize
from scipy import stats as sps

from lv_queens.analysis.stats import ks_statistic
from lv_queens.data.models import Family, FitResult
from lv_queens.infra.config import Settings, get_settings

logger = logging.getLogger(__name__)

# Rescales Gumbel moments of log(x) into a Weibull shape guess: pi / sqrt(6).
_WEIBULL_SHAPE_FACTOR = np.pi / np.sqrt(6.0)
_EULER_GAMMA = 0.5772156649015329


class FitError(Exception):
    """Raised when a family cannot be fitted; carries best-so-far diagnostics."""

    def __init__(self, family: Family, message: str, diagnostics: dict | None = None) -> None:
        super().__init__(f"{family.value}: {message}")
        self.family = family
        self.diagnostics = diagnostics or {}


# ---------------------------------------------------------------------------
# Per-family likelihoods
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _FamilySpec:
    dist: sps.rv_continuous
    shape_names: tuple[str, ...]
    n_params: int


_SPECS: dict[Family, _FamilySpec] = {
    Family.GAMMA: _FamilySpec(sps.gamma, ("a",), 2),
    Family.WEIBULL_MIN: _FamilySpec(sps.weibull_min, ("c",), 2),
    Family.PARETO: _FamilySpec(sps.pareto, ("b",), 2),
    Family.EXPONENTIAL: _FamilySpec(sps.expon, (), 1),
}


def _initial_guess(family: Family, arr: np.ndarray) -> np.ndarray:
    """Method-of-moments style starting point, in natural parameters."""
    mean = float(arr.mean())
    var = float(arr.var())
    if family is Family.GAMMA:
        return np.array([mean * mean / var, var / mean])
    if family is Family.WEIBULL_MIN:
        logs = np.log(arr)
        c0 = _WEIBULL_SHAPE_FACTOR / float(logs.std())
        return np.array([c0, float(np.exp(logs.mean() + _EULER_GAMMA / c0))])
    if family is Family.PARETO:
        # Hill estimator for the tail index.
        return np.array([arr.size / float(np.sum(np.log(arr / arr.min())))])
    raise ValueError(f"{family.value} has no optimizer starting point")


def _nelder_mead(
    family: Family,
    objective: Callable[[np.ndarray], float],
    start: np.ndarray,
    settings: Settings,
) -> optimize.OptimizeResult:
    res = optimize.minimize(
        objective,
        x0=np.log(start),
        method="Nelder-Mead",
        options={"maxiter": settings.fit_maxiter, "xatol": settings.fit_xatol, "fatol": settings.fit_fatol},
    )
    if not res.success:
        raise FitError(
            family,
            f"simplex did not converge: {res.message}",
            {"params": np.exp(res.x).tolist(), "mean_nll": float(res.fun), "iterations": int(res.nit)},
        )
    return res


def _finite(value: float) -> float:
    return value if np.isfinite(value) else np.finfo(float).max


def _check_sample(arr: np.ndarray, settings: Settings) -> None:
    if arr.size < settings.fit_min_samples:
        raise ValueError(f"need at least {settings.fit_min_samples} samples to fit, got {arr.size}")
    if np.any(arr <= 0):
        raise ValueError("all samples must be positive")
    if np.all(arr == arr[0]):
        raise ValueError("cannot fit a constant sample")


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def fit_mle(samples: Sequence[float] | np.ndarray, family: Family | str, settings: Settings | None = None) -> FitResult:
    """Fit *family* by maximum likelihood and score it with the KS statistic.

    Raises:
        ValueError: for too few, non-positive or constant samples.
        FitError: when the simplex fails to converge within ``fit_maxiter``.
    """
    s = settings or get_settings()
    family = Family(family)
    model = _SPECS[family]
    arr = np.asarray(samples, dtype=float).reshape(-1)
    _check_sample(arr, s)

    iterations = 0
    if family is Family.EXPONENTIAL:
        params = {"scale": float(arr.mean())}
    elif family is Family.PARETO:
        x_min = float(arr.min())

        def pareto_nll(theta: np.ndarray) -> float:
            return _finite(-float(np.mean(model.dist.logpdf(arr, np.exp(theta[0]), scale=x_min))))

        res = _nelder_mead(family, pareto_nll, _initial_guess(family, arr), s)
        iterations = int(res.nit)
        params = {"b": float(np.exp(res.x[0])), "scale": x_min}
    else:

        def nll(theta: np.ndarray) -> float:
            shape, scale = np.exp(theta)
            return _finite(-float(np.mean(model.dist.logpdf(arr, shape, scale=scale))))

        res = _nelder_mead(family, nll, _initial_guess(family, arr), s)
        iterations = int(res.nit)
        shape, scale = np.exp(res.x)
        params = {model.shape_names[0]: float(shape), "scale": float(scale)}

    frozen = model.dist(**params)
    log_likelihood = float(np.sum(frozen.logpdf(arr)))
    result = FitResult(
        family=family,
        params=params,
        log_likelihood=log_likelihood,
        ks_statistic=ks_statistic(arr, frozen.cdf),
        aic=2 * model.n_params - 2 * log_likelihood,
        iterations=iterations,
    )
    logger.debug("fitted %s: %s (KS %.4f)", family.value, params, result.ks_statistic)
    return result


@dataclass
class FamilyFits:
    """Per-family results in family order, plus the families that failed."""

    results: list[FitResult] = field(default_factory=list)
    failures: dict[Family, str] = field(default_factory=dict)

    @property
    def best(self) -> FitResult | None:
        if not self.results:
            return None
        return min(self.results, key=lambda r: r.ks_statistic)


def fit_families(
    samples: Sequence[float] | np.ndarray,
    families: Sequence[Family] = tuple(Family),
    settings: Settings | None = None,
) -> FamilyFits:
    """Fit every family; a failing family is logged and recorded, not raised."""
    arr = np.asarray(samples, dtype=float).reshape(-1)
    fits = FamilyFits()
    for family in families:
        try:
            fits.results.append(fit_mle(arr, family, settings))
        except FitError as exc:
            logger.warning("Fitting %s failed: %s", family.value, exc)
            fits.failures[family] = str(exc)
    return fits


def best_fit(
    samples: Sequence[float] | np.ndarray,
    families: Sequence[Family] = tuple(Family),
    settings: Settings | None = None,
) -> FitResult:
    """The family with the smallest KS statistic.

    Raises:
        ValueError: for an unusable sample (see :func:`fit_mle`).
        FitError: only when every family failed.
    """
    fits = fit_families(samples, families, settings)
    if fits.best is None:
        detail = "; ".join(fits.failures.values())
        raise FitError(families[0] if families else Family.GAMMA, f"no family could be fitted ({detail})")
    return fits.best
