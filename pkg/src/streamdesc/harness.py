"""Batch descriptor computation, nearest-neighbour evaluation, and the
approximation-error experiment.

Replica mode runs W independent estimators over the same stream and
averages their raw sampled-count accumulators before descriptor
assembly; exact quantities (degrees, n, m) are shared.  Averaging the
raw counts rather than finished descriptors matters because descriptor
assembly is not linear in the counts.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import ceil

import numpy as np

from .datasets import Dataset
from .descriptors import Descriptor, canberra, canberra_matrix
from .errors import BudgetTooSmallError, OracleSizeError
from .gabe import (
    GabeState,
    exact_gabe_descriptor,
    gabe_finalize,
    gabe_process_edge,
)
from .graph import EdgeStream, build_graph, derive_seed
from .maeve import (
    MaeveState,
    exact_maeve_descriptor,
    maeve_finalize,
    maeve_process_edge,
)
from .oracle import ORACLE_LIMIT
from .patterns import STREAM_ESTIMATED

METHODS = ("gabe", "maeve")


@dataclass(frozen=True)
class BudgetSpec:
    """Edge budget, either absolute or as a fraction of a stream's length."""

    fraction: float | None = None
    edges: int | None = None

    def __post_init__(self):
        if (self.fraction is None) == (self.edges is None):
            raise ValueError("give exactly one of fraction or edges")
        if self.fraction is not None and self.fraction <= 0:
            raise ValueError(f"fraction must be positive, got {self.fraction}")
        if self.edges is not None and self.edges < 1:
            raise ValueError(f"edges must be at least 1, got {self.edges}")

    def resolve(self, m: int) -> int:
        if self.edges is not None:
            return self.edges
        return max(1, ceil(self.fraction * m))


def _run_gabe(stream: EdgeStream, b: int, seed: int) -> GabeState:
    state = GabeState(b, seed, n_hint=stream.n_hint)
    for edge in stream:
        gabe_process_edge(state, edge)
    return state


def _run_maeve(stream: EdgeStream, b: int, seed: int) -> MaeveState:
    state = MaeveState(b, seed, n_hint=stream.n_hint)
    for edge in stream:
        maeve_process_edge(state, edge)
    return state


def replicated_gabe(stream: EdgeStream, b: int, workers: int, base_seed: int):
    """W replicas over one stream, raw estimates averaged, one descriptor."""
    states = [_run_gabe(stream, b, base_seed + i) for i in range(workers)]
    if workers == 1:
        return gabe_finalize(states[0])
    avg = {
        pid: sum(s.est[pid] for s in states) / workers for pid in STREAM_ESTIMATED
    }
    return gabe_finalize(states[0], est_override=avg)


def replicated_maeve(stream: EdgeStream, b: int, workers: int, base_seed: int):
    states = [_run_maeve(stream, b, base_seed + i) for i in range(workers)]
    if workers == 1:
        return maeve_finalize(states[0])
    tri: dict[int, float] = {}
    path: dict[int, float] = {}
    for s in states:
        for v, x in s.tri.items():
            tri[v] = tri.get(v, 0.0) + x
        for v, x in s.path.items():
            path[v] = path.get(v, 0.0) + x
    tri = {v: x / workers for v, x in tri.items()}
    path = {v: x / workers for v, x in path.items()}
    return maeve_finalize(states[0], tri_override=tri, path_override=path)


def compute_descriptors(
    ds: Dataset,
    method: str,
    b_spec: BudgetSpec,
    workers: int = 1,
    seed: int = 0,
    max_threads: int = 8,
) -> tuple[list[Descriptor | None], list[str | None]]:
    """Descriptors for every graph in the dataset, input order preserved.

    Returns (descriptors, errors), both aligned with ds.graphs.  A graph
    whose resolved budget is below the method's minimum gets None and an
    error string; the rest of the run continues.  Results depend only on
    (method, b_spec, workers, seed), not on thread scheduling.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    def one(item):
        idx, stream = item
        b = b_spec.resolve(len(stream))
        base = derive_seed(seed, "graph", idx)
        try:
            if method == "gabe":
                d = replicated_gabe(stream, b, workers, base)
                vec = d.phi
            else:
                d = replicated_maeve(stream, b, workers, base)
                vec = d.values
        except BudgetTooSmallError as exc:
            return None, f"graph {idx}: {exc}"
        desc = Descriptor(
            graph_id=idx, method=method, b=d.b, seed=base, n=d.n, m=d.m,
            values=vec)
        return desc, None

    pool_size = min(max_threads, max(1, len(ds.graphs)))
    with ThreadPoolExecutor(max_workers=pool_size) as pool:
        results = list(pool.map(one, enumerate(ds.graphs)))
    return [r[0] for r in results], [r[1] for r in results]


@dataclass
class ClassificationReport:
    fold_accuracies: list[float]
    mean_accuracy: float
    std_accuracy: float
    config: dict


def _contiguous_folds(order: list[int], folds: int) -> list[list[int]]:
    ":return: `folds` contiguous parts, the first len(order) % folds one longer."
    n = len(order)
    base = n // folds
    extra = n % folds
    parts = []
    at = 0
    for i in range(folds):
        size = base + (1 if i < extra else 0)
        parts.append(order[at:at + size])
        at += size
    return parts


def cross_validate(
    descriptors: list[Descriptor],
    labels,
    folds: int = 10,
    repeats: int = 10,
    seed: int = 0,
) -> ClassificationReport:
    """1-nearest-neighbour accuracy under repeated k-fold splits.

    Folds are plain (not stratified) contiguous cuts of a seeded
    shuffle.  Distance ties pick the training item with the lowest
    graph_id.  Train and test are disjoint by construction, so an item
    never matches itself.
    """
    labels = list(labels)
    if len(descriptors) != len(labels):
        raise ValueError(
            f"{len(descriptors)} descriptors but {len(labels)} labels")
    n = len(descriptors)
    if folds < 2:
        raise ValueError(f"folds must be at least 2, got {folds}")
    if n < folds:
        raise ValueError(f"cannot split {n} items into {folds} folds")
    if len(set(labels)) < 2:
        raise ValueError("need at least 2 classes")
    methods = {d.method for d in descriptors}
    if len(methods) > 1:
        raise ValueError(f"mixed descriptor methods: {sorted(methods)}")

    vectors = np.array([d.values for d in descriptors])
    dist = canberra_matrix(vectors, vectors)
    ids = np.array([d.graph_id for d in descriptors])
    y = np.array(labels)

    accuracies: list[float] = []
    for r in range(repeats):
        order = list(range(n))
        random.Random(derive_seed(seed, "cv", r)).shuffle(order)
        for part in _contiguous_folds(order, folds):
            test = np.array(part)
            in_test = np.zeros(n, dtype=bool)
            in_test[test] = True
            train = np.flatnonzero(~in_test)
            sub = dist[np.ix_(test, train)]
            correct = 0
            for row, t in zip(sub, test):
                best = row.min()
                candidates = train[row == best]
                if len(candidates) > 1:
                    pick = candidates[np.argmin(ids[candidates])]
                else:
                    pick = candidates[0]
                correct += int(y[pick] == y[t])
            accuracies.append(correct / len(test))
    return ClassificationReport(
        fold_accuracies=accuracies,
        mean_accuracy=float(np.mean(accuracies)),
        std_accuracy=float(np.std(accuracies)),
        config={
            "method": next(iter(methods)) if methods else None,
            "folds": folds,
            "repeats": repeats,
            "seed": seed,
        },
    )


def error_vs_budget(
    ds: Dataset,
    method: str,
    budgets,
    trials: int,
    seed: int = 0,
    oracle_limit: int = ORACLE_LIMIT,
) -> list[tuple[float, float]]:
    """Mean Canberra distance between estimated and exact descriptors,
    one row (budget_fraction, mean_error) per requested budget.

    Every graph must be within the exact oracle's size limit.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    budgets = [float(f) for f in budgets]
    if any(f <= 0 for f in budgets):
        raise ValueError("budget fractions must be positive")

    exact_vectors = []
    for stream in ds.graphs:
        g = build_graph(stream)
        if g.n > oracle_limit:
            raise OracleSizeError(
                f"graph has {g.n} vertices, exact enumeration is limited "
                f"to {oracle_limit}")
        if method == "gabe":
            exact_vectors.append(exact_gabe_descriptor(g, limit=oracle_limit).phi)
        else:
            exact_vectors.append(exact_maeve_descriptor(g).values)

    rows: list[tuple[float, float]] = []
    for fraction in budgets:
        spec = BudgetSpec(fraction=fraction)
        total = 0.0
        runs = 0
        for gi, stream in enumerate(ds.graphs):
            b = spec.resolve(len(stream))
            for trial in range(trials):
                run_seed = derive_seed(seed, "evb", method, fraction, gi, trial)
                if method == "gabe":
                    vec = replicated_gabe(stream, b, 1, run_seed).phi
                else:
                    vec = replicated_maeve(stream, b, 1, run_seed).values
                total += canberra(vec, exact_vectors[gi])
                runs += 1
        rows.append((fraction, total / runs))
    return rows
