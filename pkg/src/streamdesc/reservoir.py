"""Budget-bounded reservoir over the edge stream, plus detection math.

The reservoir keeps the first b edges, then replaces a uniformly chosen
stored edge with probability b/t, which gives every prefix edge the same
b/t inclusion probability.  A per-vertex adjacency index over the stored
edges supports the neighborhood probes the estimators run on every
arrival.
"""

from __future__ import annotations

import random

from .errors import BudgetTooSmallError
from .graph import Edge

_EMPTY: frozenset[int] = frozenset()


class ReservoirState:
    """Sample of at most `budget` edges with an adjacency index.

    Single-writer: exactly one stream drives maybe_sample.  peak_stored
    records the largest sample ever held, for memory-bound checks.
    """

    __slots__ = ("budget", "t", "rng", "edges", "adj", "peak_stored")

    def __init__(self, budget: int, seed: int | None = 0):
        if budget < 1:
            raise ValueError(f"budget must be at least 1, got {budget}")
        self.budget = budget
        self.t = 0
        self.rng = random.Random(seed)
        self.edges: list[Edge] = []
        self.adj: dict[int, set[int]] = {}
        self.peak_stored = 0

    def __len__(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int):
        """Stored neighbors of v as a set; do not mutate."""
        return self.adj.get(v, _EMPTY)

    def contains_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, _EMPTY)

    def _link(self, u: int, v: int):
        self.adj.setdefault(u, set()).add(v)
        self.adj.setdefault(v, set()).add(u)

    def _unlink(self, u: int, v: int):
        for a, b in ((u, v), (v, u)):
            nbrs = self.adj.get(a)
            if nbrs is not None:
                nbrs.discard(b)
                if not nbrs:
                    del self.adj[a]


def maybe_sample(state: ReservoirState, edge: Edge) -> tuple[bool, Edge | None]:
    """Reservoir step for the next stream edge.

    Returns (stored, evicted): (True, None) when the edge was appended,
    (True, old_edge) when it replaced a stored edge, (False, None) when
    it was dropped.  Must be called exactly once per stream edge, after
    any counting that inspects the pre-arrival sample.
    """
    state.t += 1
    if state.t <= state.budget:
        state.edges.append(edge)
        state._link(*edge)
        if len(state.edges) > state.peak_stored:
            state.peak_stored = len(state.edges)
        return True, None
    if state.rng.random() < state.budget / state.t:
        slot = state.rng.randrange(state.budget)
        old = state.edges[slot]
        state._unlink(*old)
        state.edges[slot] = edge
        state._link(*edge)
        return True, old
    return False, None


def sampled_neighbors(state: ReservoirState, v: int) -> list[int]:
    """Neighbors of v in the current sample, sorted; empty if v is absent."""
    return sorted(state.adj.get(v, ()))


def detection_probability(t: int, b: int, m: int) -> float:
    """Probability that m specific earlier edges all survive in the
    reservoir when edge t arrives.

    Equals 1 while t-1 <= b, otherwise the product over i < m of
    (b - i) / (t - 1 - i).  m is the pattern's edge count minus one; a
    pattern needing more prior edges than the budget can hold is
    undetectable, hence the error for m > b.
    """
    if t < 1 or b < 1 or m < 1:
        raise ValueError(f"need t, b, m >= 1, got t={t} b={b} m={m}")
    if m > b:
        raise BudgetTooSmallError(
            f"budget {b} cannot hold the {m} prior edges the pattern needs")
    if t - 1 <= b:
        return 1.0
    p = 1.0
    for i in range(m):
        p *= (b - i) / (t - 1 - i)
    return p


def variance_bound(count: float, m_total: int, pattern_edges: int, b: int) -> float:
    """Upper bound on the variance of a stream-estimated pattern count.

    count is the true (or best known) pattern count, m_total the full
    stream length, pattern_edges the pattern's edge count.  The bound is
    count^2 times the product over i < pattern_edges - 1 of
    (m_total - i) / (b - i).  Returns 0 in the deterministic regime
    (b >= m_total - 1) and for count = 0.
    """
    if pattern_edges < 2:
        raise ValueError("pattern_edges must be at least 2")
    if b <= pattern_edges - 2:
        raise BudgetTooSmallError(
            f"budget {b} cannot hold the {pattern_edges - 1} prior edges the pattern needs")
    if count == 0 or b >= m_total - 1:
        return 0.0
    prod = 1.0
    for i in range(pattern_edges - 1):
        prod *= (m_total - i) / (b - i)
    return count * count * prod
