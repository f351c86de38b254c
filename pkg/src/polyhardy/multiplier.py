"""Multiplication operators on truncated H_2 coefficient space.

An operator-valued symbol F acts on vector series by the convolution
product; restricting to the simplex of multi-indices with total degree
at most D (the compression) gives a finite matrix in the monomial basis
whose largest singular value lower-bounds the multiplier norm ``||M_F||``
and converges to the sup norm of the symbol as the window grows.  The
coefficient-space Euclidean norm *is* the H_2 norm, which is why p = 2
is the one exponent with an exact finite matrix picture; for other p a
randomized Rayleigh-quotient estimator is provided instead.
"""

from __future__ import annotations

import operator as _operator
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from ._linalg import operator_norm
from .hardy import TorusGrid, hp_norm
from .multiindex import MultiIndex, simplex
from .series import (
    PowerSeries,
    TruncationParams,
    _evaluate_on_nodes,
    op_vec_product,
)

__all__ = [
    "CompressionMatrix",
    "assemble_compression",
    "diagonal_example",
    "hp_rayleigh_lower_bound",
    "multiplier_norm_schedule",
    "operator_norm",
    "pointwise_vs_symbolic",
]


@dataclass(frozen=True)
class CompressionMatrix:
    """Matrix of a multiplication operator on the truncated coefficient space.

    Rows and columns are indexed by (basis multi-index, coordinate) with
    coordinates innermost; the d x d block at (row alpha, column gamma)
    is the symbol coefficient at alpha - gamma, or zero when that
    difference has a negative entry.
    """

    matrix: np.ndarray
    basis: tuple[MultiIndex, ...]
    trunc: TruncationParams

    @property
    def block_dim(self) -> int:
        return self.trunc.dim

    def basis_position(self, alpha: MultiIndex) -> int:
        return self.basis.index(alpha)

    def coefficients_of(self, G: PowerSeries) -> np.ndarray:
        """Stack the coefficients of G over the basis into one flat vector."""
        if G.kind != "vector" or G.dim != self.trunc.dim:
            raise ValueError("G must be a vector series of the compression dimension")
        extra = set(G.terms) - set(self.basis)
        if extra:
            raise ValueError("G has support outside the compression simplex")
        return np.concatenate([G.coefficient(alpha) for alpha in self.basis])

    def series_from_coefficients(self, coeffs: np.ndarray) -> PowerSeries:
        """Inverse of :meth:`coefficients_of`."""
        coeffs = np.asarray(coeffs, dtype=np.complex128)
        d = self.trunc.dim
        if coeffs.shape != (len(self.basis) * d,):
            raise ValueError("coefficient vector has the wrong length")
        terms = {
            alpha: coeffs[i * d : (i + 1) * d] for i, alpha in enumerate(self.basis)
        }
        return PowerSeries("vector", d, terms)

    def apply_to_series(self, G: PowerSeries) -> PowerSeries:
        """Matrix action expressed back as a series (for consistency checks)."""
        return self.series_from_coefficients(self.matrix @ self.coefficients_of(G))


def assemble_compression(
    F: PowerSeries, trunc: TruncationParams
) -> CompressionMatrix:
    """Compression of the multiplication operator of symbol F.

    For every vector series G supported in the simplex, the matrix sends
    the stacked coefficients of G to those of the truncated product
    ``truncate(F * G, trunc)`` -- exactly, by construction.
    """
    if F.kind != "operator":
        raise ValueError("compression requires an operator-valued symbol")
    if F.dim != trunc.dim:
        raise ValueError(f"dimension mismatch: symbol {F.dim} vs window {trunc.dim}")
    if trunc.exponent != 2:
        raise ValueError(
            "compression matrices realize the p = 2 coefficient inner product; "
            "use hp_rayleigh_lower_bound for other exponents"
        )
    basis = simplex(trunc.nvars, trunc.max_degree)
    position = {alpha: i for i, alpha in enumerate(basis)}
    d = trunc.dim
    matrix = np.zeros((len(basis) * d, len(basis) * d), dtype=np.complex128)
    for gamma, col in position.items():
        for beta, block in F.terms.items():
            row = position.get(beta + gamma)
            if row is not None:
                matrix[row * d : (row + 1) * d, col * d : (col + 1) * d] += block
    matrix.setflags(write=False)
    return CompressionMatrix(matrix=matrix, basis=basis, trunc=trunc)


def multiplier_norm_schedule(
    F: PowerSeries,
    degrees: Sequence[int],
    trunc_base: TruncationParams,
    tol: float = 1e-12,
) -> list[float]:
    """Compression norms over a strictly increasing list of degree cutoffs.

    Nested simplices make the sequence nondecreasing, and every entry is
    a lower bound of the symbol's sup norm; for symbols whose sup norm is
    attained at finite degree the sequence is eventually constant.
    """
    degrees = [_operator.index(D) for D in degrees]
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise ValueError("degrees must be strictly increasing")
    values = []
    for D in degrees:
        window = replace(trunc_base, max_degree=D)
        values.append(operator_norm(assemble_compression(F, window).matrix, tol=tol))
    return values


def diagonal_example(w: Iterable[complex], dim: int | None = None) -> np.ndarray:
    """Diagonal operator with the unimodular tuple w on the diagonal.

    The map ``w -> diag(w)`` is a sup-norm isometry into operators:
    ``||diag(w) - diag(w')|| = max_j |w_j - w'_j|``, which is exactly the
    uniform distance of the points on the d-torus.
    """
    w = np.atleast_1d(np.asarray(w, dtype=np.complex128))
    if w.ndim != 1 or w.size < 1:
        raise ValueError("w must be a nonempty vector")
    if dim is not None and _operator.index(dim) != w.size:
        raise ValueError(f"dim {dim} does not match len(w) = {w.size}")
    if np.any(np.abs(np.abs(w) - 1.0) > 1e-12):
        raise ValueError("entries must be unimodular (|w_j| = 1)")
    out = np.diag(w)
    out.setflags(write=False)
    return out


def pointwise_vs_symbolic(
    F: PowerSeries, G: PowerSeries, grid: TorusGrid
) -> float:
    """Largest coefficient gap between the sampled and symbolic products.

    Samples ``w -> F(w) @ G(w)`` on the unit-radius grid, extracts each
    Fourier coefficient over the symbolic product support, and returns
    the max Euclidean distance to the convolution coefficients.  For
    polynomial inputs on an exact-resolution grid this is pure rounding
    noise (<= 1e-10 by contract).
    """
    if F.kind != "operator" or G.kind != "vector":
        raise ValueError(
            f"kind mismatch: need operator * vector, got {F.kind} * {G.kind}"
        )
    if F.dim != G.dim:
        raise ValueError(f"dimension mismatch: {F.dim} vs {G.dim}")
    needed = F.total_degree + G.total_degree + 1
    if grid.radius != 1.0:
        raise ValueError("consistency check requires the unit-radius grid")
    if grid.points_per_var < needed:
        raise ValueError(
            f"grid resolution insufficient: need at least {needed} points per "
            f"variable, got {grid.points_per_var}"
        )
    nvars_needed = max(F.nvars_used, G.nvars_used, 1)
    if grid.nvars < nvars_needed:
        raise ValueError(
            f"grid covers {grid.nvars} variables but the inputs use {nvars_needed}"
        )

    window = TruncationParams(
        nvars=grid.nvars,
        max_degree=F.total_degree + G.total_degree,
        dim=F.dim,
    )
    product = op_vec_product(F, G, window)
    if product.is_zero:
        return 0.0

    nodes = grid.nodes()
    f_values = _evaluate_on_nodes(F, nodes)
    g_values = _evaluate_on_nodes(G, nodes)
    sampled = np.einsum("kij,kj->ki", f_values, g_values)

    alphas = product.support
    exps = np.zeros((len(alphas), grid.nvars), dtype=np.int64)
    for i, alpha in enumerate(alphas):
        for pos, e in alpha.items():
            exps[i, pos] = e
    weights = np.conj(np.prod(nodes[:, None, :] ** exps[None, :, :], axis=2))
    extracted = weights.T @ sampled / grid.num_nodes

    residual = 0.0
    for i, alpha in enumerate(alphas):
        gap = float(np.linalg.norm(extracted[i] - product.coefficient(alpha)))
        residual = max(residual, gap)
    return residual


def hp_rayleigh_lower_bound(
    F: PowerSeries,
    p: float,
    trunc: TruncationParams,
    grid: TorusGrid,
    num_samples: int = 16,
    seed: int = 0,
) -> float:
    """Randomized lower bound for the H_p multiplier norm, p != 2 included.

    Maximizes the Rayleigh quotient ``||F G||_p / ||G||_p`` over random
    polynomials G supported in the truncation simplex.  This is an
    estimator, not a certified norm: it never exceeds ``||M_F||`` (up to
    grid error) but can undershoot.
    """
    if F.kind != "operator":
        raise ValueError("the symbol must be operator-valued")
    if num_samples < 1:
        raise ValueError("num_samples must be at least 1")
    product_degree = F.total_degree + trunc.max_degree
    if grid.radius != 1.0 or grid.points_per_var < product_degree + 1:
        raise ValueError(
            f"estimator grid must have radius 1 and at least {product_degree + 1} "
            "points per variable so the H_p quadratures see the full product"
        )
    window = replace(trunc, max_degree=product_degree)
    rng = np.random.default_rng(seed)
    basis = simplex(trunc.nvars, trunc.max_degree)
    best = 0.0
    for _ in range(num_samples):
        coeffs = rng.standard_normal((len(basis), trunc.dim)) + 1j * rng.standard_normal(
            (len(basis), trunc.dim)
        )
        G = PowerSeries("vector", trunc.dim, dict(zip(basis, coeffs)))
        denom = hp_norm(G, p, grid)
        if denom == 0.0:
            continue
        best = max(best, hp_norm(op_vec_product(F, G, window), p, grid) / denom)
    return best
