"""Single-pass estimator of all 17 pattern counts and the frequency
descriptor built from them.

Six connected patterns (triangle, path-4, cycle-4, paw, diamond, K4) are
counted edge-centrically against the reservoir sample, each detected
copy weighted by the reciprocal of its detection probability.  The other
eleven counts have closed forms in n, m, and the exact degree array.
Finalization converts plain counts to induced counts through the overlap
matrix and normalizes each order block by C(n, k).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import BudgetTooSmallError
from .graph import Edge, EdgeStream, Graph
from .oracle import ORACLE_LIMIT, exact_induced_counts, phi_from_induced
from .patterns import (
    INDUCED,
    N_PATTERNS,
    PatternCounts,
    PatternId,
    STREAM_ESTIMATED,
    subgraph_to_induced,
)
from .reservoir import ReservoirState, detection_probability, maybe_sample

_EMPTY: frozenset[int] = frozenset()

# K4 detection needs its 5 other edges resident in the sample.
MIN_GABE_BUDGET = 5


@dataclass
class GabeDescriptor:
    """17 normalized frequencies: orders 2, 3, 4 concatenated."""

    phi: np.ndarray
    b: int
    seed: int
    n: int
    m: int
    degenerate: bool = False


class GabeState:
    """Streaming state: reservoir plus exact degree/m/label trackers."""

    def __init__(self, budget: int, seed: int = 0, n_hint: int | None = None):
        if budget < MIN_GABE_BUDGET:
            raise BudgetTooSmallError(
                f"budget {budget} cannot detect 6-edge patterns; "
                f"need at least {MIN_GABE_BUDGET}")
        self.reservoir = ReservoirState(budget, seed)
        self.seed = seed
        self.n_hint = n_hint
        self.degrees: dict[int, int] = defaultdict(int)
        self.m_seen = 0
        self.max_label = -1
        self.est: dict[PatternId, float] = {pid: 0.0 for pid in STREAM_ESTIMATED}

    @property
    def n(self) -> int:
        if self.n_hint is not None:
            return self.n_hint
        return self.max_label + 1


def _edges_within(adj: dict, verts) -> int:
    """Sampled edges with both endpoints in verts."""
    total = 0
    for x in verts:
        nbrs = adj.get(x)
        if nbrs:
            total += len(nbrs & verts)
    return total // 2


def gabe_process_edge(state: GabeState, edge: Edge) -> GabeState:
    """Count every tracked pattern copy the arriving edge completes
    against the current sample, then offer the edge to the reservoir.

    Expects a preprocessed stream (no self-loops or duplicates).
    """
    u, v = edge
    res = state.reservoir
    t = res.t + 1
    b = res.budget

    state.degrees[u] += 1
    state.degrees[v] += 1
    state.m_seen += 1
    if v > state.max_label:
        state.max_label = v
    if u > state.max_label:
        state.max_label = u

    adj = res.adj
    na = adj.get(u, _EMPTY)
    nb = adj.get(v, _EMPTY)
    common = na & nb
    a, bb, c = len(na), len(nb), len(common)
    est = state.est

    # triangle u-v-w: w adjacent to both endpoints
    if c:
        est[PatternId.TRIANGLE] += c / detection_probability(t, b, 2)

    # path on 4 vertices: edge in the middle (x-u-v-y), or at an end,
    # continuing two hops out of one endpoint
    p4 = a * bb - c
    for x in na:
        p4 += len(adj[x]) - 1 - (x in nb)
    for y in nb:
        p4 += len(adj[y]) - 1 - (y in na)
    if p4:
        est[PatternId.PATH_4] += p4 / detection_probability(t, b, 2)

    # cycle u-x-y-v-u: x next to u, y next to v, x-y sampled
    c4 = 0
    for x in na:
        c4 += len(adj[x] & nb)
    if c4:
        est[PatternId.CYCLE_4] += c4 / detection_probability(t, b, 3)

    # paw: either the edge lies in the triangle (pendant off any of its
    # three vertices) or it is the pendant of a sampled triangle
    paw = 0
    if c:
        for w in common:
            paw += (a - 1) + (bb - 1) + (len(adj[w]) - 2)
    if a >= 2:
        paw += _edges_within(adj, na)
    if bb >= 2:
        paw += _edges_within(adj, nb)
    if paw:
        est[PatternId.PAW] += paw / detection_probability(t, b, 3)

    if c:
        # diamond: the edge is the shared side of two triangles
        # (pick 2 common neighbors) or a rim edge (one triangle plus a
        # second one hanging off either of its sides)
        dia = c * (c - 1) // 2
        for w in common:
            nw = adj[w]
            dia += len(nw & na) + len(nw & nb)
        if dia:
            est[PatternId.DIAMOND] += dia / detection_probability(t, b, 4)
        if c >= 2:
            k4 = _edges_within(adj, common)
            if k4:
                est[PatternId.K4] += k4 / detection_probability(t, b, 5)

    maybe_sample(res, edge)
    return state


def closed_form_counts(state: GabeState, est: dict | None = None) -> dict[PatternId, float]:
    """The 11 pattern counts that follow from n, m, and exact degrees.

    Triangle-plus-isolated is the one entry built on an estimate; `est`
    lets replica-averaged estimates flow in (defaults to state.est).
    """
    if est is None:
        est = state.est
    n = state.n
    m = state.m_seen
    degs = state.degrees.values()
    wedges = sum(comb(d, 2) for d in degs)
    claws = sum(comb(d, 3) for d in degs)
    return {
        PatternId.EDGELESS_2: float(comb(n, 2)),
        PatternId.EDGE: float(m),
        PatternId.EDGELESS_3: float(comb(n, 3)),
        PatternId.EDGE_PLUS_ISOLATED: float(m * max(n - 2, 0)),
        PatternId.WEDGE: float(wedges),
        PatternId.EDGELESS_4: float(comb(n, 4)),
        PatternId.EDGE_PLUS_2_ISOLATED: float(m * comb(max(n - 2, 0), 2)),
        PatternId.TWO_DISJOINT_EDGES: float(comb(m, 2) - wedges),
        PatternId.WEDGE_PLUS_ISOLATED: float(wedges * max(n - 3, 0)),
        PatternId.TRIANGLE_PLUS_ISOLATED: est[PatternId.TRIANGLE] * max(n - 3, 0),
        PatternId.CLAW: float(claws),
    }


def gabe_finalize(state: GabeState, est_override: dict | None = None) -> GabeDescriptor:
    """Assemble the descriptor once the stream is fully consumed.

    est_override substitutes replica-averaged stream estimates.  Induced
    estimates can come out negative under sampling noise; they are kept
    raw rather than clamped, which preserves unbiasedness.
    """
    n = state.n
    b = state.reservoir.budget
    if n < 2:
        return GabeDescriptor(
            phi=np.zeros(N_PATTERNS), b=b, seed=state.seed, n=n,
            m=state.m_seen, degenerate=True)
    est = state.est if est_override is None else est_override
    counts = np.zeros(N_PATTERNS)
    for pid, val in closed_form_counts(state, est).items():
        counts[pid - 1] = val
    for pid, val in est.items():
        counts[pid - 1] = val
    induced = PatternCounts(values=subgraph_to_induced(counts), kind=INDUCED)
    phi = phi_from_induced(induced, n)
    return GabeDescriptor(phi=phi, b=b, seed=state.seed, n=n, m=state.m_seen)


def gabe_descriptor(stream: EdgeStream, budget: int, seed: int = 0) -> GabeDescriptor:
    """Convenience one-shot: consume a stream and finalize."""
    state = GabeState(budget, seed, n_hint=stream.n_hint)
    for edge in stream:
        gabe_process_edge(state, edge)
    return gabe_finalize(state)


def exact_gabe_descriptor(g: Graph, limit: int = ORACLE_LIMIT) -> GabeDescriptor:
    """Ground-truth descriptor straight from the induced-count oracle."""
    if g.n < 2:
        return GabeDescriptor(
            phi=np.zeros(N_PATTERNS), b=g.m, seed=0, n=g.n, m=g.m, degenerate=True)
    induced = exact_induced_counts(g, limit=limit)
    return GabeDescriptor(
        phi=phi_from_induced(induced, g.n), b=g.m, seed=0, n=g.n, m=g.m)
