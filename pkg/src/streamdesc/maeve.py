"""Single-pass per-vertex estimator and the moment descriptor over it.

For every vertex the stream yields its exact degree plus estimates of
its triangle count and its endpoint three-path count.  Five structural
features derive from those three numbers alone; the descriptor is the
four moments of each feature over all vertices, 20 values in a fixed
feature-major order.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb, sqrt

import numpy as np

from .errors import BudgetTooSmallError
from .graph import Edge, EdgeStream, Graph
from .oracle import exact_vertex_features
from .reservoir import ReservoirState, detection_probability, maybe_sample

_EMPTY: frozenset[int] = frozenset()

# A triangle's two prior edges must fit in the sample.
MIN_MAEVE_BUDGET = 2

FEATURE_NAMES = (
    "degree",
    "clustering",
    "avg_neighbor_degree",
    "egonet_edges",
    "egonet_boundary",
)

MOMENT_NAMES = ("mean", "std", "skewness", "kurtosis")


@dataclass
class VertexFeatures:
    degree: float
    clustering: float
    avg_neighbor_degree: float
    egonet_edges: float
    egonet_boundary: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (
            self.degree,
            self.clustering,
            self.avg_neighbor_degree,
            self.egonet_edges,
            self.egonet_boundary,
        )


@dataclass
class MaeveDescriptor:
    """Four moments of five per-vertex features, feature-major (20 values)."""

    values: np.ndarray
    b: int
    seed: int
    n: int
    m: int
    degenerate: bool = False


class MaeveState:
    """Streaming state: reservoir plus per-vertex accumulators."""

    def __init__(self, budget: int, seed: int = 0, n_hint: int | None = None):
        if budget < MIN_MAEVE_BUDGET:
            raise BudgetTooSmallError(
                f"budget {budget} cannot detect triangles; "
                f"need at least {MIN_MAEVE_BUDGET}")
        self.reservoir = ReservoirState(budget, seed)
        self.seed = seed
        self.n_hint = n_hint
        self.deg: dict[int, int] = defaultdict(int)
        self.tri: dict[int, float] = defaultdict(float)
        self.path: dict[int, float] = defaultdict(float)
        self.m_seen = 0
        self.max_label = -1

    @property
    def n(self) -> int:
        if self.n_hint is not None:
            return self.n_hint
        return self.max_label + 1


def maeve_process_edge(state: MaeveState, edge: Edge) -> MaeveState:
    """Credit the arriving edge's triangle and three-path completions to
    the vertices involved, then offer the edge to the reservoir.

    A common sampled neighbor w closes a triangle on u, v, and w.  A
    sampled neighbor w of u extends the edge to the three-path v-u-w,
    whose endpoints are v and w; symmetrically for neighbors of v.
    """
    u, v = edge
    res = state.reservoir
    t = res.t + 1
    b = res.budget

    state.deg[u] += 1
    state.deg[v] += 1
    state.m_seen += 1
    if v > state.max_label:
        state.max_label = v
    if u > state.max_label:
        state.max_label = u

    adj = res.adj
    na = adj.get(u, _EMPTY)
    nb = adj.get(v, _EMPTY)

    common = na & nb
    if common:
        w1 = 1.0 / detection_probability(t, b, 2)
        tri = state.tri
        for w in common:
            tri[u] += w1
            tri[v] += w1
            tri[w] += w1

    if na or nb:
        w2 = 1.0 / detection_probability(t, b, 1)
        path = state.path
        for w in na:
            path[w] += w2
        for w in nb:
            path[w] += w2
        path[v] += w2 * len(na)
        path[u] += w2 * len(nb)

    maybe_sample(res, edge)
    return state


def features_from_counts(degree: int, triangles: float, paths: float) -> VertexFeatures:
    """The five features as functions of (degree, triangle count,
    endpoint three-path count).

    Conventions for the undefined corners: clustering is 0 when
    degree < 2, average neighbor degree is 0 when degree = 0.
    """
    d = int(degree)
    if d <= 0:
        return VertexFeatures(0.0, 0.0, 0.0, 0.0, 0.0)
    clustering = triangles / comb(d, 2) if d >= 2 else 0.0
    # (d + paths) / d rather than 1 + paths/d: on exact inputs the
    # numerator equals the integer sum of neighbor degrees, so the
    # division result matches the egonet oracle bit for bit.
    avg_neighbor_degree = (d + paths) / d
    return VertexFeatures(
        degree=float(d),
        clustering=clustering,
        avg_neighbor_degree=avg_neighbor_degree,
        egonet_edges=d + triangles,
        egonet_boundary=paths - 2.0 * triangles,
    )


def vertex_features(state: MaeveState, v: int) -> VertexFeatures:
    """Feature tuple of one vertex from the state's accumulators."""
    return features_from_counts(
        state.deg.get(v, 0), state.tri.get(v, 0.0), state.path.get(v, 0.0))


def moments(values) -> tuple[float, float, float, float]:
    """Population moments (mean, std, skewness, kurtosis) of a sample.

    Central-moment definitions with the plain (non-excess) kurtosis; a
    constant sample reports skewness and kurtosis of 0.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise ValueError("moments of an empty sample are undefined")
    mean = float(arr.mean())
    dev = arr - mean
    m2 = float(np.mean(dev * dev))
    std = sqrt(m2)
    if std == 0.0:
        return (mean, 0.0, 0.0, 0.0)
    # standardize before raising to powers: std**4 can underflow to zero
    # for tiny spreads even though std itself is positive; plain
    # multiplication (not **) keeps odd powers exactly sign-symmetric
    z = dev / std
    z2 = z * z
    skew = float(np.mean(z2 * z))
    kurt = float(np.mean(z2 * z2))
    return (mean, std, skew, kurt)


def maeve_finalize(
    state: MaeveState,
    tri_override: dict | None = None,
    path_override: dict | None = None,
) -> MaeveDescriptor:
    """Aggregate per-vertex features into the 20-value moment descriptor.

    The override dicts substitute replica-averaged accumulators.  Every
    addressable vertex in [0, n) contributes a row, including isolated
    ones declared only through n_hint.
    """
    n = state.n
    b = state.reservoir.budget
    if n == 0:
        return MaeveDescriptor(
            values=np.zeros(20), b=b, seed=state.seed, n=0,
            m=state.m_seen, degenerate=True)
    tri = state.tri if tri_override is None else tri_override
    path = state.path if path_override is None else path_override
    rows = np.empty((n, 5))
    for v in range(n):
        rows[v] = features_from_counts(
            state.deg.get(v, 0), tri.get(v, 0.0), path.get(v, 0.0)).as_tuple()
    values = np.empty(20)
    for j in range(5):
        values[4 * j:4 * j + 4] = moments(rows[:, j])
    return MaeveDescriptor(
        values=values, b=b, seed=state.seed, n=n, m=state.m_seen)


def maeve_descriptor(stream: EdgeStream, budget: int, seed: int = 0) -> MaeveDescriptor:
    """Convenience one-shot: consume a stream and finalize."""
    state = MaeveState(budget, seed, n_hint=stream.n_hint)
    for edge in stream:
        maeve_process_edge(state, edge)
    return maeve_finalize(state)


def exact_maeve_descriptor(g: Graph) -> MaeveDescriptor:
    """Ground-truth descriptor from explicit egonet features."""
    if g.n == 0:
        return MaeveDescriptor(
            values=np.zeros(20), b=g.m, seed=0, n=0, m=g.m, degenerate=True)
    rows = np.array([exact_vertex_features(g, v) for v in range(g.n)])
    values = np.empty(20)
    for j in range(5):
        values[4 * j:4 * j + 4] = moments(rows[:, j])
    return MaeveDescriptor(values=values, b=g.m, seed=0, n=g.n, m=g.m)
