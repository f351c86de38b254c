"""Hardy norms on torus grids, Fourier extraction, and extremal kernels.

The H_2 norm is the exact Parseval sum of squared coefficient norms.
The H_p norms are tensor-grid quadratures over scaled roots of unity;
for polynomials at radius 1 these quadratures are *exact* once the grid
has enough points per variable (discrete orthogonality), which is what
lets the test suite compare them against Parseval with no quadrature
error in the way.  The sup norm is estimated from below by grid maxima
over a schedule of grids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from ._linalg import operator_norm
from .multiindex import MultiIndex, simplex
from .series import PowerSeries, _evaluate_on_nodes

__all__ = [
    "TorusGrid",
    "cole_gamelin_kernel",
    "cole_gamelin_kernel_value",
    "fourier_coefficient",
    "h2_norm",
    "hinf_norm",
    "hp_norm",
    "point_evaluation_bound",
]


@dataclass(frozen=True)
class TorusGrid:
    """Tensor grid of M-th roots of unity scaled by ``radius`` in each of
    ``nvars`` variables."""

    nvars: int
    points_per_var: int
    radius: float = 1.0

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("nvars must be at least 1")
        if self.points_per_var < 1:
            raise ValueError("points_per_var must be at least 1")
        if not 0.0 < self.radius <= 1.0:
            raise ValueError("radius must lie in (0, 1]")

    @property
    def num_nodes(self) -> int:
        return self.points_per_var**self.nvars

    def nodes(self) -> np.ndarray:
        """All grid points as a (num_nodes, nvars) complex array."""
        roots = self.radius * np.exp(
            2j * np.pi * np.arange(self.points_per_var) / self.points_per_var
        )
        mesh = np.meshgrid(*([roots] * self.nvars), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)


def h2_norm(F) -> float:
    """Parseval norm: sqrt of the sum of squared coefficient norms.

    Exact for finitely supported series.  Accepts a vector power series
    or a vector Dirichlet series; the Bohr bijection is an isometry for
    this norm, so both sides give the same number.
    """
    if F.kind != "vector":
        raise ValueError(
            "h2_norm is defined for vector series; use hinf_norm for operator symbols"
        )
    total = 0.0
    for coeff in F.terms.values():
        total += float(np.sum(np.abs(coeff) ** 2))
    return math.sqrt(total)


def _grid_values_and_norms(F: PowerSeries, grid: TorusGrid) -> np.ndarray:
    if F.nvars_used > grid.nvars:
        raise ValueError(
            f"grid covers {grid.nvars} variables but the series uses {F.nvars_used}"
        )
    values = _evaluate_on_nodes(F, grid.nodes())
    if F.kind == "vector":
        return np.linalg.norm(values, axis=1)
    return np.array([operator_norm(m) for m in values])


def hp_norm(F: PowerSeries, p: float, grid: TorusGrid) -> float:
    """Grid H_p norm: ``(mean over nodes of ||F(r w)||^p)^(1/p)``.

    At radius 1 this is the trapezoid-exact torus integral for
    polynomials whenever points_per_var exceeds the relevant aliasing
    degree (2*deg for p = 2); at radius < 1 it is the norm of the
    uniformly dilated restriction.
    """
    p = float(p)
    if not p >= 1:
        raise ValueError("hp_norm requires p >= 1")
    if math.isinf(p):
        raise ValueError("p must be finite; use hinf_norm for the sup norm")
    if F.kind != "vector":
        raise ValueError("hp_norm is defined for vector series")
    norms = _grid_values_and_norms(F, grid)
    return float(np.mean(norms**p) ** (1.0 / p))


def hinf_norm(F: PowerSeries, grid_schedule: Sequence[TorusGrid]) -> float:
    """Sup-norm estimate: max pointwise norm over all grids in the schedule.

    Always a lower bound of the true sup over the polydisk, nondecreasing
    as more grids are appended; the grid metadata is the caller's record
    of how far the schedule reached.
    """
    grids = list(grid_schedule)
    if not grids:
        raise ValueError("grid schedule must be non-empty")
    best = 0.0
    for grid in grids:
        norms = _grid_values_and_norms(F, grid)
        if norms.size:
            best = max(best, float(np.max(norms)))
    return best


def fourier_coefficient(
    sampler: Callable[[np.ndarray], np.ndarray],
    alpha: MultiIndex | Iterable[int],
    grid: TorusGrid,
) -> np.ndarray:
    """Discrete Fourier coefficient: mean of ``sampler(w) * w^(-alpha)``.

    Requires the unit-radius grid.  Exact (to rounding) for trigonometric
    polynomials once points_per_var exceeds the sampled degree.
    """
    if not isinstance(alpha, MultiIndex):
        alpha = MultiIndex(alpha)
    if grid.radius != 1.0:
        raise ValueError("Fourier extraction requires radius 1 (unit torus grid)")
    if len(alpha) > grid.nvars:
        raise ValueError(
            f"multi-index uses {len(alpha)} variables but the grid has {grid.nvars}"
        )
    nodes = grid.nodes()
    exps = np.zeros(grid.nvars, dtype=np.int64)
    for pos, e in alpha.items():
        exps[pos] = e
    weights = np.conj(np.prod(nodes**exps, axis=1))
    values = np.stack([np.asarray(sampler(w), dtype=np.complex128) for w in nodes])
    return np.tensordot(weights, values, axes=(0, 0)) / grid.num_nodes


def point_evaluation_bound(z: Iterable[complex], p: float = 2.0) -> float:
    """Growth factor ``prod (1 - |z_j|^2)^(-1/p)`` in the point-evaluation
    inequality ``||G(z)|| <= ||G||_p * bound``."""
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("point must lie in the open polydisk")
    if not float(p) >= 1:
        raise ValueError("p must be at least 1")
    return float(np.prod((1.0 - np.abs(z) ** 2) ** (-1.0 / float(p))))


def cole_gamelin_kernel(
    x: Iterable[complex], z: Iterable[complex], degree: int
) -> PowerSeries:
    """Extremal kernel for p = 2 point evaluation, truncated at total degree.

    The full kernel is ``x * prod_j sqrt(1 - |z_j|^2) / (1 - conj(z_j) w_j)``,
    whose expansion has coefficient ``x * prod_j sqrt(1 - |z_j|^2) *
    conj(z)^alpha`` at ``w^alpha``.  Untruncated it has H_2 norm exactly
    ``||x||`` and attains the point-evaluation bound at ``w = z``.
    """
    x = np.atleast_1d(np.asarray(x, dtype=np.complex128))
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if x.ndim != 1 or x.size < 1:
        raise ValueError("x must be a nonempty vector")
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("kernel base point must lie in the open polydisk")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    amplitude = float(np.prod(np.sqrt(1.0 - np.abs(z) ** 2)))
    zbar = np.conj(z)
    terms = {}
    if z.size == 0:
        return PowerSeries("vector", x.size, {MultiIndex(): amplitude * x})
    for alpha in simplex(z.size, degree):
        mono = 1.0 + 0.0j
        for pos, e in alpha.items():
            mono *= zbar[pos] ** e
        terms[alpha] = (amplitude * mono) * x
    return PowerSeries("vector", x.size, terms)


def cole_gamelin_kernel_value(
    x: Iterable[complex],
    z: Iterable[complex],
    zeta: Iterable[complex],
    p: float = 2.0,
) -> np.ndarray:
    """Closed-form kernel value ``x * prod (1-|z_j|^2)^(1/p) / (1 - conj(z_j) zeta_j)^(2/p)``.

    Available for every p >= 1 (the series expansion is only built for
    p = 2, where Parseval applies); used for inequality spot checks.
    """
    x = np.atleast_1d(np.asarray(x, dtype=np.complex128))
    z = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    zeta = np.atleast_1d(np.asarray(zeta, dtype=np.complex128))
    p = float(p)
    if not p >= 1:
        raise ValueError("p must be at least 1")
    if np.any(np.abs(z) >= 1.0) or np.any(np.abs(zeta) >= 1.0):
        raise ValueError("points must lie in the open polydisk")
    if z.shape != zeta.shape:
        raise ValueError("z and zeta must have the same length")
    factors = (1.0 - np.abs(z) ** 2) ** (1.0 / p) / (1.0 - np.conj(z) * zeta) ** (2.0 / p)
    return x * np.prod(factors)
