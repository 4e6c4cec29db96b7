"""k-means / k-median subroutines: D^2 seeding, Lloyd iteration and its trimmed variant."""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from sampleclust.core.objective import (
    nearest_centers,
    point_costs,
    trim_order,
    trimmed_aggregate,
)
from sampleclust.core.types import CenterSet, Dataset, ObjectiveKind, as_points
from sampleclust.errors import InputError
from sampleclust.logging import get_logger
from sampleclust.subroutines.base import IterationTrace, IterConfig


def kmeanspp_seed(
    P: Dataset | np.ndarray,
    k: int,
    rng: np.random.Generator,
    max_retries: int = 10,
    local_trials: int | None = 1,
) -> CenterSet:
    """k-means++ seeding.

    The first center is uniform; each next center is drawn with probability
    proportional to the squared distance to the nearest chosen center. With
    ``local_trials`` > 1 that many candidates are drawn per step and the one
    leaving the smallest total squared distance is kept (greedy k-means++);
    ``None`` means ``2 + int(ln k)``. When all remaining mass is zero the draw
    falls back to uniform, resampling exact duplicates up to ``max_retries``
    times before accepting one.
    """
    X = as_points(P)
    n = X.shape[0]
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    trials = 2 + int(np.log(k)) if local_trials is None else int(local_trials)
    if trials < 1:
        raise InputError(f"local_trials must be >= 1, got {local_trials}")

    chosen = [int(rng.integers(n))]
    d2 = cdist(X, X[chosen[0]:chosen[0] + 1], "sqeuclidean").ravel()
    for _ in range(1, k):
        total = float(d2.sum())
        if total > 0.0 and trials > 1:
            candidates = rng.choice(n, size=trials, p=d2 / total)
            pots = np.minimum(d2, cdist(X[candidates], X, "sqeuclidean"))
            best = int(np.argmin(pots.sum(axis=1)))
            chosen.append(int(candidates[best]))
            d2 = pots[best]
            continue
        if total > 0.0:
            idx = int(rng.choice(n, p=d2 / total))
        else:
            idx = int(rng.integers(n))
            for _ in range(max_retries):
                if not np.any(np.all(X[chosen] == X[idx], axis=1)):
                    break
                idx = int(rng.integers(n))
        chosen.append(idx)
        np.minimum(d2, cdist(X, X[idx:idx + 1], "sqeuclidean").ravel(), out=d2)

    return CenterSet.from_points(X, chosen)


def weiszfeld(
    points: np.ndarray,
    start: np.ndarray,
    tol: float = 1e-7,
    max_iters: int = 100,
) -> np.ndarray:
    """Geometric median by Weiszfeld iteration, started at ``start``.

    When an iterate coincides with data points the Vardi-Zhang step is used: the
    iterate is kept if it is already optimal, otherwise it moves toward the
    Weiszfeld target by the amount the coincident mass allows.
    """
    y = np.asarray(start, dtype=np.float64).copy()
    for _ in range(max_iters):
        diff = points - y
        d = np.sqrt(np.einsum("ij,ij->i", diff, diff))
        coincident = d <= 1e-12
        free = ~coincident
        if not free.any():
            break
        w = 1.0 / d[free]
        target = (w[:, None] * points[free]).sum(axis=0) / w.sum()
        if coincident.any():
            pull = np.linalg.norm((w[:, None] * diff[free]).sum(axis=0))
            mass = float(coincident.sum())
            if pull <= mass:
                break
            gamma = mass / pull
            y_new = (1.0 - gamma) * target + gamma * y
        else:
            y_new = target
        step = float(np.linalg.norm(y_new - y))
        y = y_new
        if step <= tol * max(1.0, float(np.linalg.norm(y))):
            break
    return y


def _sum_dist(points: np.ndarray, y: np.ndarray) -> float:
    return float(np.sqrt(((points - y) ** 2).sum(axis=1)).sum())


def _update_centers(
    X: np.ndarray,
    C: np.ndarray,
    idx: np.ndarray,
    inlier: np.ndarray,
    costs: np.ndarray,
    kind: ObjectiveKind,
    cfg: IterConfig,
) -> np.ndarray:
    """One center-update round with empty-cluster repair."""
    new_C = C.copy()
    empty: list[int] = []
    for j in range(C.shape[0]):
        members = X[inlier & (idx == j)]
        if members.shape[0] == 0:
            empty.append(j)
            continue
        if kind is ObjectiveKind.MEANS:
            new_C[j] = members.mean(axis=0)
        else:
            candidate = weiszfeld(members, C[j], cfg.weiszfeld_tol, cfg.weiszfeld_max_iters)
            if _sum_dist(members, candidate) <= _sum_dist(members, C[j]):
                new_C[j] = candidate

    if empty:
        # farthest eligible points first; stable so ties keep the lower index
        eligible = np.flatnonzero(inlier)
        order = eligible[np.argsort(-costs[eligible], kind="stable")]
        for slot, j in enumerate(empty):
            new_C[j] = X[order[slot % order.shape[0]]]

    if cfg.restrict_centers_to_input:
        _, snap = nearest_centers(new_C, X)
        new_C = X[snap].copy()
    return new_C


def _iterate(
    P: Dataset | np.ndarray,
    init: CenterSet,
    z: int,
    cfg: IterConfig,
    kind: ObjectiveKind,
) -> IterationTrace:
    """Alternate trimmed assignment and center update until convergence."""
    kind = ObjectiveKind.parse(kind)
    if kind is ObjectiveKind.CENTER:
        raise InputError("Lloyd-style iteration supports MEDIAN and MEANS only")
    X = as_points(P)
    init.check_dim(X.shape[1])
    n = X.shape[0]

    logger = get_logger()
    C = init.centers.copy()
    history: list[float] = []
    converged = False
    for round_idx in range(cfg.max_iters + 1):
        dists, idx = nearest_centers(X, C)
        costs = point_costs(dists, kind)
        objective = trimmed_aggregate(costs, z, kind)
        if history:
            prev = history[-1]
            history.append(objective)
            if objective == 0.0 or prev - objective < cfg.tol * prev:
                converged = True
                break
        else:
            history.append(objective)
            if objective == 0.0:
                converged = True
                break
        if round_idx == cfg.max_iters:
            break
        inlier = np.ones(n, dtype=bool)
        inlier[trim_order(costs, z)] = False
        C = _update_centers(X, C, idx, inlier, costs, kind, cfg)

    logger.debug(
        "lloyd iteration finished",
        kind=kind.value,
        z=z,
        rounds=len(history),
        objective=history[-1],
        converged=converged,
    )
    return IterationTrace(centers=CenterSet(C), history=history, converged=converged)


def lloyd_trace(
    P: Dataset | np.ndarray,
    init: CenterSet,
    cfg: IterConfig | None = None,
    kind: ObjectiveKind | str = ObjectiveKind.MEANS,
) -> IterationTrace:
    """Lloyd iteration returning the objective sequence as well."""
    return _iterate(P, init, 0, cfg or IterConfig(), ObjectiveKind.parse(kind))


def lloyd(
    P: Dataset | np.ndarray,
    init: CenterSet,
    cfg: IterConfig | None = None,
    kind: ObjectiveKind | str = ObjectiveKind.MEANS,
) -> CenterSet:
    """Lloyd iteration for k-means (coordinate mean) or k-median (Weiszfeld)."""
    return lloyd_trace(P, init, cfg, kind).centers


def trimmed_lloyd_trace(
    P: Dataset | np.ndarray,
    k: int,
    z: int,
    init: CenterSet,
    cfg: IterConfig | None = None,
    kind: ObjectiveKind | str = ObjectiveKind.MEANS,
) -> IterationTrace:
    """Trimmed Lloyd iteration returning the objective sequence as well."""
    n = as_points(P).shape[0]
    if z < 0 or z >= n:
        raise InputError(f"Outlier count must satisfy 0 <= z < n (n={n}), got z={z}")
    if len(init) != k:
        raise InputError(f"init has {len(init)} centers, expected k={k}")
    return _iterate(P, init, z, cfg or IterConfig(), ObjectiveKind.parse(kind))


def trimmed_lloyd(
    P: Dataset | np.ndarray,
    k: int,
    z: int,
    init: CenterSet,
    cfg: IterConfig | None = None,
    kind: ObjectiveKind | str = ObjectiveKind.MEANS,
) -> CenterSet:
    """k-means-- : every round discards the z costliest points before updating."""
    return trimmed_lloyd_trace(P, k, z, init, cfg, kind).centers
