"""Deterministic largest-singular-value computation.

Power iteration on the Gram form M*M with a fixed-seed starting vector:
the same matrix always produces the same iterates, which keeps norm
schedules reproducible in CI.
"""

from __future__ import annotations

import numpy as np

__all__ = ["operator_norm"]

_START_SEED = 0x5EED


def operator_norm(
    matrix, tol: float = 1e-13, max_iterations: int = 1_000_000
) -> float:
    """Largest singular value of ``matrix``.

    Iterates ``v <- M*Mv / ||M*Mv||`` from a seeded random start.  The
    Rayleigh estimates ``||Mv||`` increase geometrically toward the top
    singular value, so the remaining error is extrapolated from the
    ratio of successive increments (Aitken style); iteration stops once
    that estimate drops below ``tol`` relative, or the increments hit
    the double-precision floor.  Raises ``ArithmeticError`` if the cap
    is reached first, and ``ValueError`` on non-finite input.
    """
    M = np.asarray(matrix, dtype=np.complex128)
    if M.ndim != 2:
        raise ValueError("operator_norm expects a 2-d matrix")
    if M.size == 0:
        return 0.0
    if not np.isfinite(M).all():
        raise ValueError("matrix entries must be finite")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not M.any():
        return 0.0

    rng = np.random.default_rng(_START_SEED)

    def fresh_vector() -> np.ndarray:
        v = rng.standard_normal(M.shape[1]) + 1j * rng.standard_normal(M.shape[1])
        return v / np.linalg.norm(v)

    v = fresh_vector()
    sigma: float | None = None
    prev_increment: float | None = None
    tiny = np.finfo(np.float64).tiny
    floor = 8.0 * np.finfo(np.float64).eps
    for _ in range(max_iterations):
        w = M @ v
        u = M.conj().T @ w
        norm_u = np.linalg.norm(u)
        if norm_u == 0.0:
            # v landed in the null space; restart (M is nonzero, so the
            # orthogonal complement of the null space is nontrivial).
            v = fresh_vector()
            sigma = None
            prev_increment = None
            continue
        new_sigma = float(np.linalg.norm(w))
        if sigma is not None:
            increment = abs(new_sigma - sigma)
            scale = max(new_sigma, tiny)
            if increment == 0.0:
                return new_sigma
            if prev_increment is not None:
                if increment <= floor * scale and prev_increment <= floor * scale:
                    return new_sigma  # rounding noise; double precision exhausted
                if increment < prev_increment:
                    ratio = increment / prev_increment
                    remaining = increment * ratio / (1.0 - ratio)
                    if remaining <= tol * scale:
                        return new_sigma
            prev_increment = increment
        sigma = new_sigma
        v = u / norm_u
    raise ArithmeticError(
        f"power iteration did not converge within {max_iterations} iterations"
    )
