"""Effectiveness regions, threshold curves and fidelity sweeps.

A code is effective at (mu, p) when its failure probability 1 - F falls
below the bare error probability p. Thresholds are located by a 64-point
pre-scan followed by bisection on the gap ``(1 - F) - p``. When the pre-scan
sees several crossings, the outermost one is reported.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, TypeVar, Union

import numpy as np
from scipy.optimize import bisect

from .channel import SYMMETRIC, ChannelParams
from .codes import CodeSpec, build_code
from .fidelity import fidelity

BISECTION_TOL = 1e-8
PRESCAN_POINTS = 64
# Guards the strict inequality against rounding where 1 - F equals p
# identically, e.g. at mu = 1.
EFFECTIVE_MARGIN = 1e-12
ASYMMETRIC_ALPHAS = (5 / 31, 1 / 31, 25 / 31)

T = TypeVar("T")
R = TypeVar("R")


def default_p_grid() -> np.ndarray:
    """200 log-spaced p values in [1e-4, 0.2]."""
    return np.geomspace(1e-4, 0.2, 200)


def worker_count() -> int:
    """Worker threads for sweeps, from ``QEC_THREADS`` (default 1)."""
    raw = os.environ.get("QEC_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"QEC_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"QEC_THREADS must be a positive integer, got {raw!r}")
    return value


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Ordered map, threaded when ``QEC_THREADS`` > 1."""
    items = list(items)
    workers = worker_count()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def resolve_code(code: Union[str, CodeSpec]) -> CodeSpec:
    if isinstance(code, CodeSpec):
        return code
    return build_code(code, allow_collisions=True)


def regime_alphas(regime: str, alphas: Optional[Sequence[float]] = None) -> tuple[float, float, float]:
    if regime == "symmetric":
        if alphas is not None and tuple(alphas) != SYMMETRIC:
            raise ValueError("symmetric regime takes no alphas")
        return SYMMETRIC
    if regime == "asymmetric":
        return tuple(alphas) if alphas is not None else ASYMMETRIC_ALPHAS
    raise ValueError(f"regime must be 'symmetric' or 'asymmetric', got {regime!r}")


def is_effective(
    code: Union[str, CodeSpec],
    params: ChannelParams,
    *,
    credit: str = "listed",
    margin: float = EFFECTIVE_MARGIN,
) -> bool:
    """True when ``1 - F < p`` (by more than ``margin``)."""
    code = resolve_code(code)
    return 1.0 - fidelity(code, params, credit) < params.p - margin


def _gap(code: CodeSpec, credit: str, margin: float, p: float, mu: float, alphas) -> float:
    params = ChannelParams(p, mu, alphas)
    return (1.0 - fidelity(code, params, credit)) - p + margin


def _outermost_crossing(
    gap: Callable[[float], float], grid: np.ndarray, tol: float
) -> float:
    """Largest x on ``grid``'s span where ``gap`` changes from < 0 to >= 0."""
    values = [gap(float(x)) for x in grid]
    inside = [v < 0 for v in values]
    if not any(inside):
        return 0.0
    last = max(i for i, ok in enumerate(inside) if ok)
    if last == len(grid) - 1:
        return float(grid[-1])
    lo, hi = float(grid[last]), float(grid[last + 1])
    if values[last + 1] == 0.0:
        return hi
    return float(bisect(gap, lo, hi, xtol=tol, rtol=4 * np.finfo(float).eps, maxiter=200))


def _p_prescan() -> np.ndarray:
    # Log spacing resolves thresholds down to ~1e-6; p = 1 closes the range.
    return np.concatenate([np.geomspace(1e-9, 1.0, PRESCAN_POINTS - 1, endpoint=False), [1.0]])


def p_threshold_at_mu(
    code: Union[str, CodeSpec],
    regime: str,
    mu: float,
    *,
    alphas: Optional[Sequence[float]] = None,
    credit: str = "listed",
    tol: float = BISECTION_TOL,
) -> float:
    """Largest p at which the code is still effective for memory ``mu``.

    Returns 0 when no p in (0, 1) is effective.
    """
    if not 0.0 <= mu <= 1.0:
        raise ValueError(f"mu must lie in [0, 1], got {mu}")
    spec = resolve_code(code)
    al = regime_alphas(regime, alphas)
    return _outermost_crossing(
        lambda p: _gap(spec, credit, EFFECTIVE_MARGIN, p, mu, al), _p_prescan(), tol
    )


def mu_threshold_at_p(
    code: Union[str, CodeSpec],
    regime: str,
    p: float,
    *,
    alphas: Optional[Sequence[float]] = None,
    credit: str = "listed",
    tol: float = BISECTION_TOL,
) -> float:
    """Largest mu at which the code is still effective for error rate ``p``."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    spec = resolve_code(code)
    al = regime_alphas(regime, alphas)
    return _outermost_crossing(
        lambda mu: _gap(spec, credit, EFFECTIVE_MARGIN, p, mu, al),
        np.linspace(0.0, 1.0, PRESCAN_POINTS),
        tol,
    )


@dataclass(frozen=True)
class ThresholdCurve:
    """Threshold values sampled along one axis.

    ``axis`` names the abscissa: ``"p"`` for mu_threshold(p) curves and
    ``"mu"`` for p_threshold(mu) curves.
    """

    code_name: str
    regime: str
    alphas: tuple[float, float, float]
    axis: str
    samples: tuple[tuple[float, float], ...]
    bisection_tol: float = BISECTION_TOL
    credit: str = "listed"
    label: str = ""
    grid: dict = field(default_factory=dict)

    @property
    def max_threshold(self) -> float:
        return max((t for _, t in self.samples), default=0.0)

    def monotonicity_violations(self) -> list[int]:
        """Indices i where the threshold rises from sample i to i + 1.

        Recorded for inspection; a violation is not treated as an error.
        """
        ts = [t for _, t in self.samples]
        return [i for i in range(len(ts) - 1) if ts[i + 1] > ts[i] + self.bisection_tol]

    def to_csv(self) -> str:
        value = "mu_threshold" if self.axis == "p" else "p_threshold"
        return rows_to_csv((self.axis, value, "curve"), ((x, t, self.label) for x, t in self.samples))


def mu_threshold_curve(
    code: Union[str, CodeSpec],
    regime: str,
    p_grid: Optional[Sequence[float]] = None,
    *,
    alphas: Optional[Sequence[float]] = None,
    credit: str = "listed",
    label: Optional[str] = None,
) -> ThresholdCurve:
    """mu_threshold(p) on ``p_grid`` (default :func:`default_p_grid`)."""
    spec = resolve_code(code)
    al = regime_alphas(regime, alphas)
    grid = np.asarray(default_p_grid() if p_grid is None else p_grid, dtype=float)
    if grid.ndim != 1 or len(grid) == 0:
        raise ValueError("p_grid must be a non-empty 1-d sequence")
    if np.any(np.diff(grid) <= 0) or grid[0] <= 0 or grid[-1] >= 1:
        raise ValueError("p_grid must be strictly increasing inside (0, 1)")
    values = parallel_map(
        lambda p: mu_threshold_at_p(spec, regime, float(p), alphas=al, credit=credit), grid
    )
    return ThresholdCurve(
        code_name=spec.name,
        regime=regime,
        alphas=al,
        axis="p",
        samples=tuple(zip(grid.tolist(), values)),
        credit=credit,
        label=label or f"{spec.name}_{regime}",
        grid={"min": float(grid[0]), "max": float(grid[-1]), "points": len(grid)},
    )


def p_threshold_curve(
    code: Union[str, CodeSpec],
    regime: str,
    mu_grid: Sequence[float],
    *,
    alphas: Optional[Sequence[float]] = None,
    credit: str = "listed",
    label: Optional[str] = None,
) -> ThresholdCurve:
    """p_threshold(mu) on ``mu_grid``."""
    spec = resolve_code(code)
    al = regime_alphas(regime, alphas)
    grid = np.asarray(mu_grid, dtype=float)
    values = parallel_map(
        lambda mu: p_threshold_at_mu(spec, regime, float(mu), alphas=al, credit=credit), grid
    )
    return ThresholdCurve(
        code_name=spec.name,
        regime=regime,
        alphas=al,
        axis="mu",
        samples=tuple(zip(grid.tolist(), values)),
        credit=credit,
        label=label or f"{spec.name}_{regime}",
        grid={"min": float(grid[0]), "max": float(grid[-1]), "points": len(grid)},
    )


@dataclass(frozen=True)
class FidelitySweep:
    code_name: str
    regime: str
    alphas: tuple[float, float, float]
    p: float
    rows: tuple[tuple[float, float], ...]
    label: str = ""

    def to_csv(self) -> str:
        return rows_to_csv(("mu", "fidelity", "curve"), ((mu, f, self.label) for mu, f in self.rows))


def fidelity_sweep(
    code: Union[str, CodeSpec],
    regime: str,
    p_fixed: float,
    mu_grid: Sequence[float],
    alphas: Optional[Sequence[float]] = None,
    *,
    credit: str = "listed",
    label: Optional[str] = None,
) -> FidelitySweep:
    """Rows ``(mu, F(mu, p_fixed))`` over ``mu_grid``."""
    spec = resolve_code(code)
    al = regime_alphas(regime, alphas)
    grid = [float(mu) for mu in mu_grid]
    values = parallel_map(lambda mu: fidelity(spec, ChannelParams(p_fixed, mu, al), credit), grid)
    return FidelitySweep(
        code_name=spec.name,
        regime=regime,
        alphas=al,
        p=p_fixed,
        rows=tuple(zip(grid, values)),
        label=label or f"{spec.name}_{regime}_p{p_fixed:g}",
    )


def format_float(x: float) -> str:
    return f"{x:.17g}"


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """CSV text with a ``# schema=1`` line; floats at 17 significant digits."""
    buf = io.StringIO()
    buf.write("# schema=1\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()
