"""Finitely supported multi-indices and the prime-power frequency bijection.

A multi-index is an eventually-zero sequence of non-negative integer
exponents.  Sending the exponent of variable k to the power of the k-th
prime identifies every multi-index with a unique positive integer, its
*frequency*: ``[2, 1] <-> 2^2 * 3^1 = 12``.  This bijection is the change
of coordinates between multivariate power series and Dirichlet series,
so it is the backbone of everything else in the package.

Frequencies are kept within signed 64-bit range; anything larger raises
``OverflowError`` rather than wrapping.  The prime tables are built by a
sieve and grow lazily up to ``SIEVE_LIMIT`` (a module attribute that can
be raised if deeper factorizations are ever needed).
"""

from __future__ import annotations

import operator
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "MAX_FREQUENCY",
    "MultiIndex",
    "graded_lex_key",
    "index_to_multiindex",
    "max_frequency_for_simplex",
    "multiindex_to_index",
    "primes",
    "simplex",
    "weighted_degree",
]

MAX_FREQUENCY = 2**63 - 1

#: Hard ceiling for lazy sieve growth.  Factoring a frequency requires the
#: prime table to reach its largest prime factor (the factor's *position*
#: in the prime sequence is needed, not just its primality).
SIEVE_LIMIT = 1 << 24

_MIN_SIEVE = 1 << 16

_spf: np.ndarray | None = None  # smallest-prime-factor table, index < bound
_prime_array: np.ndarray | None = None  # primes below the current bound
_bound = 0


def _rebuild_tables(bound: int) -> None:
    global _spf, _prime_array, _bound
    spf = np.zeros(bound, dtype=np.int32)
    i = 2
    while i * i < bound:
        if spf[i] == 0:
            block = spf[i * i :: i]
            block[block == 0] = i
        i += 1
    primes_found = np.nonzero(spf[2:] == 0)[0].astype(np.int64) + 2
    spf[primes_found] = primes_found
    _spf, _prime_array, _bound = spf, primes_found, bound


def _ensure_bound(bound: int) -> None:
    if bound <= _bound:
        return
    if bound > SIEVE_LIMIT:
        raise ValueError(
            f"required sieve bound {bound} exceeds SIEVE_LIMIT={SIEVE_LIMIT}; "
            "raise polyhardy.multiindex.SIEVE_LIMIT to factor deeper"
        )
    target = _MIN_SIEVE
    while target < bound:
        target *= 2
    _rebuild_tables(min(target, SIEVE_LIMIT))


def _ensure_count(count: int) -> None:
    _ensure_bound(_MIN_SIEVE)
    while len(_prime_array) < count:
        if _bound >= SIEVE_LIMIT:
            raise ValueError(
                f"need {count} primes but the sieve is capped at SIEVE_LIMIT={SIEVE_LIMIT}"
            )
        _rebuild_tables(min(_bound * 2, SIEVE_LIMIT))


def primes(count: int) -> tuple[int, ...]:
    """First ``count`` primes, from the lazily extended sieve."""
    count = operator.index(count)
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return ()
    _ensure_count(count)
    return tuple(int(p) for p in _prime_array[:count])


def _prime_at(position: int) -> int:
    _ensure_count(position + 1)
    return int(_prime_array[position])


def _prime_position(p: int) -> int:
    """Position of the prime ``p`` in the increasing prime sequence."""
    _ensure_bound(p + 1)
    pos = int(np.searchsorted(_prime_array, p))
    if pos >= len(_prime_array) or _prime_array[pos] != p:
        raise ValueError(f"{p} is not prime")
    return pos


class MultiIndex:
    """Immutable exponent sequence with the zero tail trimmed.

    Stored sparsely as ``(position, exponent)`` pairs so that indices of
    large frequencies (whose largest prime sits deep in the prime
    sequence) stay cheap.  Two multi-indices are equal iff their trimmed
    exponent sequences are equal.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, exponents: Iterable[int] = ()):
        if isinstance(exponents, MultiIndex):
            self._items = exponents._items
            self._hash = exponents._hash
            return
        items = []
        for pos, e in enumerate(exponents):
            e = operator.index(e)
            if e < 0:
                raise ValueError("exponents must be non-negative")
            if e:
                items.append((pos, e))
        self._items = tuple(items)
        self._hash = hash(self._items)

    @classmethod
    def from_items(cls, items: Iterable[tuple[int, int]]) -> "MultiIndex":
        """Build from sparse ``(position, exponent)`` pairs."""
        merged: dict[int, int] = {}
        for pos, e in items:
            pos = operator.index(pos)
            e = operator.index(e)
            if pos < 0:
                raise ValueError("positions must be non-negative")
            if e < 0:
                raise ValueError("exponents must be non-negative")
            if e:
                merged[pos] = merged.get(pos, 0) + e
        self = cls.__new__(cls)
        self._items = tuple(sorted(merged.items()))
        self._hash = hash(self._items)
        return self

    @classmethod
    def from_string(cls, text: str) -> "MultiIndex":
        """Parse the bracketed textual form, e.g. ``"[2,1]"`` or ``"[]"``."""
        stripped = text.strip()
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise ValueError(f"multi-index text must be bracketed: {text!r}")
        body = stripped[1:-1].strip()
        if not body:
            return cls()
        return cls(int(part) for part in body.split(","))

    def items(self) -> tuple[tuple[int, int], ...]:
        """Sparse ``(position, exponent)`` view, positions increasing."""
        return self._items

    @property
    def exponents(self) -> tuple[int, ...]:
        """Dense trimmed exponent tuple."""
        dense = [0] * len(self)
        for pos, e in self._items:
            dense[pos] = e
        return tuple(dense)

    @property
    def degree(self) -> int:
        """Total degree: sum of all exponents."""
        return sum(e for _, e in self._items)

    def divides(self, other: "MultiIndex") -> bool:
        """Componentwise ``self <= other``."""
        return all(e <= other[pos] for pos, e in self._items)

    def __len__(self) -> int:
        return self._items[-1][0] + 1 if self._items else 0

    def __getitem__(self, position: int) -> int:
        position = operator.index(position)
        if position < 0:
            raise IndexError("multi-index positions are non-negative")
        for pos, e in self._items:
            if pos == position:
                return e
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.exponents)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiIndex):
            return self._items == other._items
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: "MultiIndex") -> "MultiIndex":
        if not isinstance(other, MultiIndex):
            return NotImplemented
        return MultiIndex.from_items(self._items + other._items)

    def __sub__(self, other: "MultiIndex") -> "MultiIndex":
        if not isinstance(other, MultiIndex):
            return NotImplemented
        merged = dict(self._items)
        for pos, e in other._items:
            merged[pos] = merged.get(pos, 0) - e
            if merged[pos] < 0:
                raise ValueError("difference would have a negative exponent")
        return MultiIndex.from_items(merged.items())

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.exponents) + "]"

    def __repr__(self) -> str:
        if len(self) > 16:
            return f"MultiIndex.from_items({list(self._items)!r})"
        return f"MultiIndex({list(self.exponents)!r})"


def weighted_degree(alpha: MultiIndex | Iterable[int]) -> int:
    """Dilation weight sum(n * alpha_n) with 1-based variable weights.

    Additive under componentwise sums, which is what makes radial
    dilation multiplicative over products.
    """
    if not isinstance(alpha, MultiIndex):
        alpha = MultiIndex(alpha)
    return sum((pos + 1) * e for pos, e in alpha.items())


def index_to_multiindex(n: int) -> MultiIndex:
    """Exponent sequence of the prime factorization of ``n``.

    Total on positive integers: ``n == prod(p_i ** alpha_i)`` over the
    increasing primes.  ``n = 1`` maps to the empty index.
    """
    n = operator.index(n)
    if n < 1:
        raise ValueError("frequency must be a positive integer")
    if n > MAX_FREQUENCY:
        raise OverflowError(f"frequency {n} exceeds the 64-bit range")
    if n == 1:
        return MultiIndex()

    items: list[tuple[int, int]] = []
    rem = n
    if n < SIEVE_LIMIT:
        _ensure_bound(n + 1)
        spf = _spf
        while rem > 1:
            p = int(spf[rem])
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            items.append((_prime_position(p), e))
    else:
        pos = 0
        while rem > 1:
            p = _prime_at(pos)
            if p * p > rem:
                break
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            if e:
                items.append((pos, e))
            pos += 1
        if rem > 1:
            items.append((_prime_position(rem), 1))
    return MultiIndex.from_items(items)


def multiindex_to_index(alpha: MultiIndex | Iterable[int]) -> int:
    """Frequency ``prod(p_i ** alpha_i)``; inverse of ``index_to_multiindex``.

    Raises ``OverflowError`` once the product leaves the 64-bit range; the
    result is never silently wrapped.
    """
    if not isinstance(alpha, MultiIndex):
        alpha = MultiIndex(alpha)
    result = 1
    for pos, e in alpha.items():
        result *= _prime_at(pos) ** e
        if result > MAX_FREQUENCY:
            raise OverflowError(
                f"frequency of multi-index {alpha!r} exceeds the 64-bit range"
            )
    return result


def graded_lex_key(alpha: MultiIndex) -> tuple[int, tuple[int, ...]]:
    """Sort key: total degree first, then ascending lexicographic."""
    return (alpha.degree, alpha.exponents)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def simplex(nvars: int, max_degree: int) -> tuple[MultiIndex, ...]:
    """All multi-indices on ``nvars`` variables with total degree <= ``max_degree``.

    Returned in graded-lexicographic order, the canonical basis
    enumeration for compression matrices.
    """
    nvars = operator.index(nvars)
    max_degree = operator.index(max_degree)
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    return tuple(
        MultiIndex(t)
        for degree in range(max_degree + 1)
        for t in _compositions(degree, nvars)
    )


def max_frequency_for_simplex(nvars: int, max_degree: int) -> int:
    """Largest frequency attained on the (nvars, max_degree) simplex.

    The maximum of ``prod(p_i ** alpha_i)`` puts all degree on the largest
    prime, so this is ``p_nvars ** max_degree``.  Used to reconcile degree
    truncation with frequency truncation across the Bohr bijection.
    """
    nvars = operator.index(nvars)
    max_degree = operator.index(max_degree)
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    freq = _prime_at(nvars - 1) ** max_degree
    if freq > MAX_FREQUENCY:
        raise OverflowError(
            f"simplex frequency bound {freq} exceeds the 64-bit range"
        )
    return freq
