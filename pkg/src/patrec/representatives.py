"""Cluster representatives: the running-mean Centroid and the cache-bounded
MinSOD (minimum sum-of-distances element).

Both classes share an informal protocol used by the clustering algorithms:
``insert(x)``, ``value()``, ``distance(x)`` and ``len()``.  A representative
instance is single-writer: it may be handed between threads but must not be
mutated concurrently.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

import numpy as np

from .measures import DissimilarityFn, euclidean


class EmptyRepresentativeError(ValueError):
    """Raised when querying a representative with no inserted samples."""


class Centroid:
    """Arithmetic-mean representative of a cluster of real vectors.

    The mean generally does not belong to the input set.  The point-to-cluster
    dissimilarity is configurable and defaults to Euclidean.
    """

    def __init__(self, dissimilarity: DissimilarityFn = euclidean, seed=None):
        self.dissimilarity = dissimilarity
        self._sum: np.ndarray | None = None
        self._count = 0

    def __len__(self) -> int:
        return self._count

    def insert(self, x) -> None:
        x = np.asarray(x, dtype=float)
        if self._sum is None:
            self._sum = x.copy()
        else:
            if x.shape != self._sum.shape:
                raise ValueError(f"dimension mismatch: {x.shape} vs {self._sum.shape}")
            self._sum += x
        self._count += 1

    def value(self) -> np.ndarray:
        if self._count == 0:
            raise EmptyRepresentativeError("centroid of an empty cluster is undefined")
        return self._sum / self._count

    def distance(self, x) -> float:
        return float(self.dissimilarity(x, self.value()))


class MinSod:
    """Representative chosen as the cached sample minimizing the sum of
    dissimilarities to all other cached samples.

    The cache holds at most ``cache_size`` samples.  Once full, each insertion
    first evicts one sample: two distinct cached samples are drawn uniformly
    (seeded) and the one farther from the current representative is discarded.
    With ``cache_size == 1`` the two draws collapse and the sole cached sample
    is always replaced.

    Per-sample sums of distances are maintained incrementally, one
    dissimilarity evaluation per cached element on insert and on evict; this
    assumes a symmetric dissimilarity, which every measure shipped here is.
    Ties in the argmin are broken toward the earliest-inserted sample.
    """

    def __init__(self, dissimilarity: DissimilarityFn, cache_size: int = 50, seed=0):
        if cache_size < 1:
            raise ValueError(f"cache size must be >= 1, got {cache_size}")
        self.dissimilarity = dissimilarity
        self.cache_size = cache_size
        self._rng = np.random.default_rng(seed)
        self._cache: list = []    # insertion order
        self._sums: list[float] = []
        self._current = -1

    def __len__(self) -> int:
        return len(self._cache)

    @property
    def cache(self) -> tuple:
        return tuple(self._cache)

    @property
    def sums(self) -> np.ndarray:
        return np.asarray(self._sums, dtype=float)

    def _refresh_current(self) -> None:
        best = -1
        for i, s in enumerate(self._sums):
            if best < 0 or s < self._sums[best]:
                best = i
        self._current = best

    def _remove(self, idx: int) -> None:
        gone = self._cache.pop(idx)
        self._sums.pop(idx)
        d = self.dissimilarity
        for i, x in enumerate(self._cache):
            self._sums[i] -= d(gone, x)

    def insert(self, x) -> None:
        d = self.dissimilarity
        if len(self._cache) >= self.cache_size:
            if self.cache_size == 1:
                evict = 0
            else:
                rep = self._cache[self._current]
                i1, i2 = self._rng.choice(len(self._cache), size=2, replace=False)
                evict = int(i1) if d(self._cache[i1], rep) >= d(self._cache[i2], rep) else int(i2)
            self._remove(evict)
        new_sum = 0.0
        for i, y in enumerate(self._cache):
            v = d(x, y)
            self._sums[i] += v
            new_sum += v
        self._cache.append(x)
        self._sums.append(new_sum)
        self._refresh_current()

    def value(self):
        if not self._cache:
            raise EmptyRepresentativeError("MinSOD of an empty cluster is undefined")
        return self._cache[self._current]

    def distance(self, x) -> float:
        return float(self.dissimilarity(x, self.value()))


def rebuild(factory: Callable, samples: Iterable, seed=0):
    """Fresh representative equivalent to inserting ``samples`` in order."""
    state = factory(seed)
    for x in samples:
        state.insert(x)
    return state


def centroid_factory(dissimilarity: DissimilarityFn = euclidean) -> Callable:
    """Factory of Centroid states for the clustering algorithms (ignores seeds)."""
    return lambda seed=None: Centroid(dissimilarity)


def minsod_factory(dissimilarity: DissimilarityFn, cache_size: int = 50) -> Callable:
    """Factory of MinSod states; the per-rebuild seed drives cache eviction."""
    return lambda seed=0: MinSod(dissimilarity, cache_size=cache_size, seed=seed)
