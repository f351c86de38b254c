"""Sparse formal power series with vector or operator coefficients.

A series is a finitely supported map from multi-indices to coefficients.
Coefficients are either d-vectors (function values in C^d) or d x d
matrices (operator symbols acting on C^d); a single series never mixes
the two.  All arithmetic is exact sparse bookkeeping in complex double
precision; truncation windows are carried explicitly via
:class:`TruncationParams`.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Literal, Mapping

import numpy as np

from .multiindex import MultiIndex, graded_lex_key, weighted_degree

__all__ = [
    "Kind",
    "PowerSeries",
    "TruncationParams",
    "evaluate_power",
    "op_vec_product",
    "radial_dilate",
    "truncate",
]

Kind = Literal["vector", "operator"]

_KINDS = ("vector", "operator")


@dataclass(frozen=True)
class TruncationParams:
    """Finite computation window: first ``nvars`` variables, total degree
    at most ``max_degree``, coefficient dimension ``dim``, norm exponent
    ``exponent`` (p in [1, inf])."""

    nvars: int
    max_degree: int
    dim: int
    exponent: float = 2.0

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError("nvars must be at least 1")
        if self.max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        if self.dim < 1:
            raise ValueError("dim must be at least 1")
        if not self.exponent >= 1:
            raise ValueError("exponent must satisfy p >= 1")


def _coefficient_shape(kind: Kind, dim: int) -> tuple[int, ...]:
    return (dim,) if kind == "vector" else (dim, dim)


def _as_coefficient(value, kind: Kind, dim: int) -> np.ndarray:
    arr = np.array(value, dtype=np.complex128, copy=True)
    expected = _coefficient_shape(kind, dim)
    if arr.shape != expected:
        raise ValueError(
            f"{kind} coefficient must have shape {expected}, got {arr.shape}"
        )
    if not np.isfinite(arr).all():
        raise ValueError("coefficients must be finite (no NaN/Inf)")
    return arr


class PowerSeries:
    """Immutable sparse power series; zero coefficients are never stored."""

    __slots__ = ("_kind", "_dim", "_terms")

    def __init__(
        self,
        kind: Kind,
        dim: int,
        terms: Mapping | Iterable[tuple] = (),
    ):
        if kind not in _KINDS:
            raise ValueError(f"kind must be 'vector' or 'operator', got {kind!r}")
        dim = operator.index(dim)
        if dim < 1:
            raise ValueError("dim must be at least 1")
        accum: dict[MultiIndex, np.ndarray] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for alpha, value in items:
            if not isinstance(alpha, MultiIndex):
                alpha = MultiIndex(alpha)
            coeff = _as_coefficient(value, kind, dim)
            if alpha in accum:
                accum[alpha] = accum[alpha] + coeff
            else:
                accum[alpha] = coeff
        clean = {a: c for a, c in accum.items() if c.any()}
        for c in clean.values():
            c.setflags(write=False)
        self._kind = kind
        self._dim = dim
        self._terms = clean

    @classmethod
    def vector(cls, dim: int, terms=()) -> "PowerSeries":
        return cls("vector", dim, terms)

    @classmethod
    def operator(cls, dim: int, terms=()) -> "PowerSeries":
        return cls("operator", dim, terms)

    @classmethod
    def zero(cls, kind: Kind, dim: int) -> "PowerSeries":
        return cls(kind, dim)

    @classmethod
    def constant(cls, value) -> "PowerSeries":
        """Constant series; kind inferred from the array rank."""
        arr = np.asarray(value, dtype=np.complex128)
        if arr.ndim == 1:
            return cls("vector", arr.shape[0], {MultiIndex(): arr})
        if arr.ndim == 2 and arr.shape[0] == arr.shape[1]:
            return cls("operator", arr.shape[0], {MultiIndex(): arr})
        raise ValueError("constant must be a vector or a square matrix")

    @property
    def kind(self) -> Kind:
        return self._kind

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> Mapping[MultiIndex, np.ndarray]:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> tuple[MultiIndex, ...]:
        """Stored multi-indices in graded-lexicographic order."""
        return tuple(sorted(self._terms, key=graded_lex_key))

    @property
    def num_terms(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> int:
        """Largest total degree in the support (0 for the zero series)."""
        return max((a.degree for a in self._terms), default=0)

    @property
    def max_weighted_degree(self) -> int:
        return max((weighted_degree(a) for a in self._terms), default=0)

    @property
    def nvars_used(self) -> int:
        """Smallest N such that the support lives on the first N variables."""
        return max((len(a) for a in self._terms), default=0)

    def coefficient(self, alpha: MultiIndex | Iterable[int]) -> np.ndarray:
        if not isinstance(alpha, MultiIndex):
            alpha = MultiIndex(alpha)
        found = self._terms.get(alpha)
        if found is not None:
            return found
        return np.zeros(_coefficient_shape(self._kind, self._dim), dtype=np.complex128)

    def _check_compatible(self, other: "PowerSeries") -> None:
        if self._kind != other._kind:
            raise ValueError(f"kind mismatch: {self._kind} vs {other._kind}")
        if self._dim != other._dim:
            raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check_compatible(other)
        merged = dict(self._terms)
        for alpha, coeff in other._terms.items():
            merged[alpha] = merged[alpha] + coeff if alpha in merged else coeff
        return PowerSeries(self._kind, self._dim, merged)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar) -> "PowerSeries":
        if not np.isscalar(scalar):
            return NotImplemented
        return PowerSeries(
            self._kind,
            self._dim,
            {a: scalar * c for a, c in self._terms.items()},
        )

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self._kind == other._kind
            and self._dim == other._dim
            and self._terms.keys() == other._terms.keys()
            and all(np.array_equal(c, other._terms[a]) for a, c in self._terms.items())
        )

    def allclose(self, other: "PowerSeries", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        """Same kind/dim and coefficientwise agreement within tolerances."""
        if self._kind != other._kind or self._dim != other._dim:
            return False
        for alpha in set(self._terms) | set(other._terms):
            if not np.allclose(
                self.coefficient(alpha), other.coefficient(alpha), rtol=rtol, atol=atol
            ):
                return False
        return True

    def __repr__(self) -> str:
        return (
            f"PowerSeries(kind={self._kind!r}, dim={self._dim}, "
            f"num_terms={len(self._terms)})"
        )


def op_vec_product(
    F: PowerSeries, G: PowerSeries, trunc: TruncationParams
) -> PowerSeries:
    """Cauchy product of an operator symbol with a vector series.

    The coefficient at alpha is ``sum over beta + gamma = alpha of
    a_beta @ b_gamma``; terms whose total degree exceeds
    ``trunc.max_degree`` (or that use variables beyond ``trunc.nvars``)
    are discarded during accumulation, matching the compression window.
    Bilinear in (F, G).
    """
    if F.kind != "operator" or G.kind != "vector":
        raise ValueError(
            f"kind mismatch: need operator * vector, got {F.kind} * {G.kind}"
        )
    if F.dim != G.dim:
        raise ValueError(f"dimension mismatch: {F.dim} vs {G.dim}")
    accum: dict[MultiIndex, np.ndarray] = {}
    for beta, a in F.terms.items():
        for gamma, b in G.terms.items():
            alpha = beta + gamma
            if alpha.degree > trunc.max_degree or len(alpha) > trunc.nvars:
                continue
            contrib = a @ b
            if alpha in accum:
                accum[alpha] = accum[alpha] + contrib
            else:
                accum[alpha] = contrib
    return PowerSeries("vector", F.dim, accum)


def radial_dilate(F: PowerSeries, r: float) -> PowerSeries:
    """Scale the coefficient at alpha by ``r ** weighted_degree(alpha)``.

    This is substitution of ``(r w_1, r^2 w_2, r^3 w_3, ...)`` for the
    variables.  ``r = 1`` returns the series unchanged.
    """
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise ValueError("dilation radius must lie in (0, 1]")
    if r == 1.0:
        return F
    return PowerSeries(
        F.kind,
        F.dim,
        {a: (r ** weighted_degree(a)) * c for a, c in F.terms.items()},
    )


def _evaluate_at(F: PowerSeries, point: np.ndarray) -> np.ndarray:
    """Finite sum sum(c_alpha * z^alpha); no domain check (internal)."""
    out = np.zeros(_coefficient_shape(F.kind, F.dim), dtype=np.complex128)
    npoint = len(point)
    for alpha, coeff in F.terms.items():
        if len(alpha) > npoint:
            continue  # variables beyond the point are zero, killing the term
        mono = 1.0 + 0.0j
        for pos, e in alpha.items():
            mono *= point[pos] ** e
        out += coeff * mono
    return out


def _evaluate_on_nodes(F: PowerSeries, nodes: np.ndarray) -> np.ndarray:
    """Vectorized evaluation at a (num_nodes, nvars) array of points.

    Returns shape (num_nodes, dim) for vector series and
    (num_nodes, dim, dim) for operator series.  The support must fit in
    the node coordinate count.
    """
    nodes = np.asarray(nodes, dtype=np.complex128)
    if nodes.ndim != 2:
        raise ValueError("nodes must be a 2-d array of points")
    num_nodes, nvars = nodes.shape
    shape = _coefficient_shape(F.kind, F.dim)
    if F.is_zero:
        return np.zeros((num_nodes, *shape), dtype=np.complex128)
    if F.nvars_used > nvars:
        raise ValueError(
            f"series uses {F.nvars_used} variables but points have only {nvars}"
        )
    alphas = list(F.terms)
    exps = np.zeros((len(alphas), nvars), dtype=np.int64)
    for i, alpha in enumerate(alphas):
        for pos, e in alpha.items():
            exps[i, pos] = e
    monomials = np.prod(nodes[:, None, :] ** exps[None, :, :], axis=2)
    coeffs = np.stack([F.terms[a] for a in alphas])
    return np.tensordot(monomials, coeffs, axes=(1, 0))


def evaluate_power(F: PowerSeries, z: Iterable[complex]) -> np.ndarray:
    """Evaluate at a point of the open polydisk (every ``|z_j| < 1``).

    The point may list fewer variables than the series uses; missing
    coordinates are zero.  Finite sum, so no convergence questions.
    """
    point = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    if point.ndim != 1:
        raise ValueError("evaluation point must be one-dimensional")
    if np.any(np.abs(point) >= 1.0):
        raise ValueError("evaluation domain is the open polydisk: need |z_j| < 1")
    return _evaluate_at(F, point)


def truncate(F: PowerSeries, trunc: TruncationParams) -> PowerSeries:
    """Drop terms beyond the window; idempotent."""
    kept = {
        a: c
        for a, c in F.terms.items()
        if a.degree <= trunc.max_degree and len(a) <= trunc.nvars
    }
    return PowerSeries(F.kind, F.dim, kept)
