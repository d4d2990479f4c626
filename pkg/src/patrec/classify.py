"""k-nearest-neighbor classification/regression over arbitrary dissimilarities
and the evaluation metrics (accuracy, cluster purity)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .clustering import Partition
from .measures import DissimilarityFn


@dataclass
class LabeledDataset:
    """Parallel lists of samples and class labels (strings)."""
    samples: list
    labels: list

    def __post_init__(self):
        if len(self.samples) != len(self.labels):
            raise ValueError(
                f"{len(self.samples)} samples but {len(self.labels)} labels")

    def __len__(self) -> int:
        return len(self.samples)


@dataclass
class QualityReport:
    """Per-cluster purity values and their minimum as the overall index."""
    per_cluster_purity: list
    overall: float


def _vote(distances: np.ndarray, labels: Sequence[str], k: int) -> str:
    # Neighbor ties at the k-th distance break by training index (stable
    # sort); vote ties break by smaller summed neighbor distance, then by
    # lexicographically smaller label.
    order = np.argsort(distances, kind="stable")[:k]
    counts: dict[str, int] = {}
    sums: dict[str, float] = {}
    for i in order:
        lab = labels[int(i)]
        counts[lab] = counts.get(lab, 0) + 1
        sums[lab] = sums.get(lab, 0.0) + float(distances[int(i)])
    return min(counts, key=lambda lab: (-counts[lab], sums[lab], lab))


def knn_classify(train: LabeledDataset, query, k: int, d: DissimilarityFn) -> str:
    """Majority label among the k training samples nearest to the query."""
    if len(train) == 0:
        raise ValueError("cannot classify with an empty training set")
    if k < 1 or k > len(train):
        raise ValueError(f"k={k} out of range for training size {len(train)}")
    distances = np.array([d(query, s) for s in train.samples], dtype=float)
    return _vote(distances, train.labels, k)


def knn_classify_matrix(distances, train_labels: Sequence[str], k: int) -> list:
    """Vectorized variant of :func:`knn_classify` for a precomputed
    query-by-training distance matrix; identical voting rules."""
    distances = np.asarray(distances, dtype=float)
    if distances.ndim != 2 or distances.shape[1] == 0:
        raise ValueError("expected a (queries, training) distance matrix")
    if k < 1 or k > distances.shape[1]:
        raise ValueError(f"k={k} out of range for training size {distances.shape[1]}")
    return [_vote(row, train_labels, k) for row in distances]


def knn_regress(samples: Sequence, targets, query, k: int, d: DissimilarityFn) -> float:
    """Mean target value over the k training samples nearest to the query."""
    if len(samples) == 0:
        raise ValueError("cannot regress with an empty training set")
    targets = np.asarray(targets, dtype=float)
    if len(samples) != targets.shape[0]:
        raise ValueError(f"{len(samples)} samples but {targets.shape[0]} targets")
    if k < 1 or k > len(samples):
        raise ValueError(f"k={k} out of range for training size {len(samples)}")
    distances = np.array([d(query, s) for s in samples], dtype=float)
    order = np.argsort(distances, kind="stable")[:k]
    return float(np.mean(targets[order]))


def accuracy(predicted: Sequence, truth: Sequence) -> float:
    """Fraction of exact label matches."""
    if len(predicted) != len(truth):
        raise ValueError(f"length mismatch: {len(predicted)} vs {len(truth)}")
    if len(predicted) == 0:
        raise ValueError("accuracy of empty label lists is undefined")
    hits = sum(1 for p, t in zip(predicted, truth) if p == t)
    return hits / len(predicted)


def cluster_quality(partition, truth: Sequence) -> QualityReport:
    """Purity of each non-empty cluster (majority-class fraction) and the
    worst purity as the overall quality index.

    ``partition`` may be a :class:`Partition` or a plain label array.
    """
    labels = partition.labels if isinstance(partition, Partition) else np.asarray(partition)
    if len(labels) != len(truth):
        raise ValueError(f"{len(labels)} cluster labels but {len(truth)} class labels")
    purities = []
    for cluster in sorted(set(int(c) for c in labels)):
        members = [truth[i] for i in range(len(truth)) if labels[i] == cluster]
        counts: dict[str, int] = {}
        for lab in members:
            counts[lab] = counts.get(lab, 0) + 1
        purities.append(max(counts.values()) / len(members))
    return QualityReport(per_cluster_purity=purities, overall=min(purities))
