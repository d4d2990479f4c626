"""Dissimilarity and similarity (kernel) measures.

A dissimilarity is any callable ``d(a, b) -> float`` that is nonnegative and
zero on identical arguments; it does not need to satisfy the triangle
inequality.  Everything in this module is a pure function of its inputs and
safe to call from multiple threads.

Point data is handled as 1-d float arrays, sequences as 2-d arrays of shape
``(length, dim)`` (or any nested structure convertible to one), and token
sequences as strings or lists of hashable tokens.
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
from scipy.spatial.distance import cdist

DissimilarityFn = Callable[..., float]

_KERNEL_KINDS = ("rbf", "laplacian", "exponential", "rational_quadratic")
_VECTOR_KERNEL_KINDS = ("cosine", "polynomial", "tanh")


def _as_point(x) -> np.ndarray:
    p = np.asarray(x, dtype=float)
    if p.ndim != 1:
        raise ValueError(f"expected a 1-d point, got shape {p.shape}")
    return p


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def euclidean(a, b) -> float:
    """Euclidean distance between two equal-dimension real vectors."""
    a, b = _as_point(a), _as_point(b)
    _check_same_dim(a, b)
    return float(np.linalg.norm(a - b))


def minkowski(a, b, p: float = 2.0) -> float:
    """Order-p Minkowski distance, ``(sum |a_i - b_i|^p)^(1/p)``, p >= 1."""
    if p < 1:
        raise ValueError(f"Minkowski order must be >= 1, got {p}")
    a, b = _as_point(a), _as_point(b)
    _check_same_dim(a, b)
    return float(np.sum(np.abs(a - b) ** p) ** (1.0 / p))


def hamming(a, b) -> int:
    """Number of differing positions between two {0,1} vectors."""
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    for v in (a, b):
        if not np.isin(v, (0, 1)).all():
            raise ValueError("Hamming distance requires binary {0,1} entries")
    return int(np.count_nonzero(a != b))


def levenshtein(a: Sequence, b: Sequence) -> int:
    """Minimum number of single-token insertions, deletions and
    substitutions (unit costs) turning ``a`` into ``b``."""
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ta in enumerate(a, start=1):
        current = [i]
        for j, tb in enumerate(b, start=1):
            current.append(min(
                previous[j] + 1,            # deletion
                current[j - 1] + 1,         # insertion
                previous[j - 1] + (ta != tb),
            ))
        previous = current
    return previous[-1]


def delta(a, b) -> int:
    """0 if the two objects compare equal, 1 otherwise."""
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return 0 if np.array_equal(np.asarray(a), np.asarray(b)) else 1
    return 0 if a == b else 1


def _as_sequence(x) -> np.ndarray:
    s = np.asarray(x, dtype=float)
    if s.ndim == 1:
        s = s.reshape(-1, 1)
    if s.ndim != 2 or s.shape[0] == 0:
        raise ValueError("sequences must be non-empty 2-d (length, dim) arrays")
    return s


def dtw(a, b, core: DissimilarityFn = euclidean) -> float:
    """Dynamic time warping dissimilarity between two sequences of points.

    Uses the unconstrained symmetric step pattern {(1,0), (0,1), (1,1)} with
    boundary alignment at both ends and no path-length normalization; the
    returned value is the minimal accumulated ``core`` cost.  The result is
    symmetric whenever ``core`` is, but does not satisfy the triangle
    inequality in general.
    """
    a, b = _as_sequence(a), _as_sequence(b)
    la, lb = a.shape[0], b.shape[0]
    if core is euclidean:
        if a.shape[1] != b.shape[1]:
            raise ValueError(f"dimension mismatch: {a.shape[1]} vs {b.shape[1]}")
        cost = cdist(a, b)
    else:
        cost = np.empty((la, lb))
        for i in range(la):
            for j in range(lb):
                cost[i, j] = core(a[i], b[j])

    acc = np.empty((la, lb))
    acc[0, 0] = cost[0, 0]
    for i in range(1, la):
        acc[i, 0] = acc[i - 1, 0] + cost[i, 0]
    for j in range(1, lb):
        acc[0, j] = acc[0, j - 1] + cost[0, j]
    for i in range(1, la):
        row = acc[i]
        prev = acc[i - 1]
        for j in range(1, lb):
            best = prev[j]
            if prev[j - 1] < best:
                best = prev[j - 1]
            if row[j - 1] < best:
                best = row[j - 1]
            row[j] = cost[i, j] + best
    return float(acc[la - 1, lb - 1])


def kernel_from_dissimilarity(kind: str, d: DissimilarityFn,
                              sigma: float = 1.0, c: float = 1.0):
    """Build a similarity function from a symmetric dissimilarity measure.

    Supported kinds and formulas (``t = d(x, y)``):

    * ``rbf``                 exp(-t^2 / (2 sigma^2))
    * ``laplacian``           exp(-t / sigma)
    * ``exponential``         exp(-t / (2 sigma^2))
    * ``rational_quadratic``  1 - t^2 / (t^2 + c)

    The first three map into (0, 1], the last into [0, 1].
    """
    if kind not in _KERNEL_KINDS:
        raise ValueError(f"unknown kernel kind {kind!r}, expected one of {_KERNEL_KINDS}")
    if kind == "rational_quadratic":
        if c <= 0:
            raise ValueError(f"rational quadratic offset must be > 0, got {c}")
    elif sigma <= 0:
        raise ValueError(f"kernel width must be > 0, got {sigma}")

    if kind == "rbf":
        return lambda x, y: float(np.exp(-d(x, y) ** 2 / (2.0 * sigma**2)))
    if kind == "laplacian":
        return lambda x, y: float(np.exp(-d(x, y) / sigma))
    if kind == "exponential":
        return lambda x, y: float(np.exp(-d(x, y) / (2.0 * sigma**2)))
    return lambda x, y: float(1.0 - d(x, y) ** 2 / (d(x, y) ** 2 + c))


def vector_kernel(kind: str, a, b, c: float = 1.0, degree: int = 2,
                  alpha: float = 1.0) -> float:
    """Similarity kernels defined directly on real vectors.

    * ``cosine``      <a,b> / (|a| |b|), both vectors must be nonzero
    * ``polynomial``  (<a,b> + c)^degree
    * ``tanh``        tanh(alpha <a,b> + c)
    """
    if kind not in _VECTOR_KERNEL_KINDS:
        raise ValueError(f"unknown kernel kind {kind!r}, expected one of {_VECTOR_KERNEL_KINDS}")
    a, b = _as_point(a), _as_point(b)
    _check_same_dim(a, b)
    dot = float(np.dot(a, b))
    if kind == "cosine":
        na, nb = np.linalg.norm(a), np.linalg.norm(b)
        if na == 0.0 or nb == 0.0:
            raise ValueError("cosine kernel is undefined for zero vectors")
        return dot / float(na * nb)
    if kind == "polynomial":
        return (dot + c) ** degree
    return float(np.tanh(alpha * dot + c))
