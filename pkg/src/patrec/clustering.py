"""Generic clustering algorithms parameterized by a representative factory.

The k-means here is a meta-algorithm: it works on any sample type for which a
representative (carrying its own dissimilarity) can be built, so the same code
clusters points with centroids, sequences with MinSOD over DTW, or labeled
graphs with MinSOD over a graph matcher.

A representative factory is a callable ``factory(seed) -> state`` where the
state implements ``insert``/``value``/``distance``/``len`` (see
``representatives``).  The factory is invoked with a deterministic seed at
initialization and at every rebuild so equal configurations yield identical
partitions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .representatives import rebuild

_INITIALIZERS = ("first_k", "random_k")


@dataclass
class KMeansConfig:
    k: int
    max_iterations: int = 100
    initializer: str = "first_k"
    seed: int = 0


@dataclass
class BsasConfig:
    theta: float
    max_clusters: int


@dataclass
class Partition:
    """Cluster assignment for a dataset: per-sample indices in ``[0, k)``,
    the final representative states, and the number of assignment steps."""
    labels: np.ndarray
    representatives: list
    iterations: int


def initialize(data: Sequence, config: KMeansConfig, factory: Callable) -> list:
    """Build the k initial representative states, each seeded with one sample.

    ``first_k`` seeds state i with sample i; ``random_k`` draws k distinct
    samples uniformly without replacement using ``config.seed``.
    """
    n = len(data)
    if config.k > n:
        raise ValueError(f"k={config.k} exceeds dataset size {n}")
    if config.initializer not in _INITIALIZERS:
        raise ValueError(f"unknown initializer {config.initializer!r}, expected one of {_INITIALIZERS}")
    if config.initializer == "first_k":
        seeds = list(range(config.k))
    else:
        rng = np.random.default_rng(config.seed)
        seeds = [int(i) for i in rng.choice(n, size=config.k, replace=False)]
    states = []
    for i, sample_idx in enumerate(seeds):
        state = factory((config.seed, 0, i))
        state.insert(data[sample_idx])
        states.append(state)
    return states


def _assign(data: Sequence, states: list) -> np.ndarray:
    """Each sample goes to the state with minimal distance, ties to the
    lowest cluster index."""
    k = len(states)
    labels = np.empty(len(data), dtype=int)
    for j, x in enumerate(data):
        best, best_d = 0, states[0].distance(x)
        for i in range(1, k):
            di = states[i].distance(x)
            if di < best_d:
                best, best_d = i, di
        labels[j] = best
    return labels


def _repair_empty(labels: np.ndarray, data: Sequence, states: list) -> np.ndarray:
    # A cluster that lost all samples is reseeded with the sample farthest
    # from its current representative; at most k repairs are ever needed.
    k = len(states)
    for i in range(k):
        if np.any(labels == i):
            continue
        distances = np.array([states[i].distance(x) for x in data])
        labels[int(np.argmax(distances))] = i
    return labels


def kmeans(data: Sequence, config: KMeansConfig, factory: Callable,
           callback: Callable | None = None) -> Partition:
    """Generic k-means: alternate assignment and representative rebuild until
    labels stop changing or ``max_iterations`` is reached.

    ``callback(iteration, labels, states)``, when given, is invoked after each
    update step (used e.g. to trace the clustering objective).
    """
    n = len(data)
    if n == 0:
        raise ValueError("cannot cluster an empty dataset")
    if config.k < 1 or config.k > n:
        raise ValueError(f"k={config.k} out of range for dataset size {n}")
    if config.max_iterations < 1:
        raise ValueError("max_iterations must be >= 1")

    states = initialize(data, config, factory)
    prev: np.ndarray | None = None
    labels = np.zeros(n, dtype=int)
    t = 0
    for t in range(1, config.max_iterations + 1):
        labels = _assign(data, states)
        labels = _repair_empty(labels, data, states)
        if prev is not None and np.array_equal(labels, prev):
            break
        states = [
            rebuild(factory, [data[j] for j in np.flatnonzero(labels == i)],
                    seed=(config.seed, t, i))
            for i in range(config.k)
        ]
        prev = labels
        if callback is not None:
            callback(t, labels.copy(), states)
    return Partition(labels=labels, representatives=states, iterations=t)


def bsas(data: Sequence, config: BsasConfig, factory: Callable) -> Partition:
    """Basic sequential scheme: one pass in presentation order.

    The first sample opens a cluster.  Each later sample joins its nearest
    cluster when that distance is below ``theta`` (updating the representative
    incrementally), otherwise opens a new cluster unless ``max_clusters``
    already exist, in which case it joins the nearest anyway.
    """
    if len(data) == 0:
        raise ValueError("cannot cluster an empty dataset")
    if config.theta <= 0:
        raise ValueError(f"theta must be > 0, got {config.theta}")
    if config.max_clusters < 1:
        raise ValueError("max_clusters must be >= 1")

    states: list = []
    labels = np.empty(len(data), dtype=int)
    for j, x in enumerate(data):
        if states:
            dists = [s.distance(x) for s in states]
            nearest = int(np.argmin(dists))
        if not states or (dists[nearest] >= config.theta and len(states) < config.max_clusters):
            state = factory(len(states))
            state.insert(x)
            labels[j] = len(states)
            states.append(state)
        else:
            states[nearest].insert(x)
            labels[j] = nearest
    return Partition(labels=labels, representatives=states, iterations=1)


def wcss(data, labels, centroids) -> float:
    """Within-cluster sum of squares: sum over samples of the squared
    Euclidean distance to their cluster's centroid."""
    data = np.asarray(data, dtype=float)
    labels = np.asarray(labels, dtype=int)
    centroids = np.asarray(centroids, dtype=float)
    diffs = data - centroids[labels]
    return float(np.sum(diffs * diffs))
