"""Brute-force ground truth used to validate every estimator.

Induced counts come from one enumeration of all vertex subsets of size
<= 4, classified by degree-sequence fingerprint; plain subgraph counts
follow by applying the overlap matrix.  Per-vertex quantities are
computed independently of the streaming identities so they can stand as
an oracle for those identities.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np

from .errors import OracleSizeError
from .graph import Graph
from .patterns import (
    DEGREE_SEQUENCE,
    INDUCED,
    N_PATTERNS,
    ORDER_SLICES,
    SUBGRAPH,
    PatternCounts,
    PatternId,
    overlap_matrix,
)

# Enumeration is over all C(n,4) vertex subsets; past this size the cost
# and memory stop being desk-scale.
ORACLE_LIMIT = 60

_PAIR_COLS = {k: list(itertools.combinations(range(k), 2)) for k in (3, 4)}


def _check_size(g: Graph, limit: int):
    if g.n > limit:
        raise OracleSizeError(
            f"graph has {g.n} vertices, exact enumeration is limited to {limit}")


def _adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=bool)
    for u in range(g.n):
        nbrs = list(g.adj[u])
        if nbrs:
            a[u, nbrs] = True
    return a


def _combo_array(n: int, k: int) -> np.ndarray:
    count = comb(n, k)
    flat = np.fromiter(
        itertools.chain.from_iterable(itertools.combinations(range(n), k)),
        dtype=np.int64,
        count=count * k,
    )
    return flat.reshape(count, k)


def _degseq_lut(k: int) -> np.ndarray:
    """Sorted-degree-sequence code (base 4) -> pattern index, for order k."""
    lut = np.full(4 ** k, -1, dtype=np.int64)
    for pid in PatternId:
        if pid.order != k:
            continue
        code = 0
        for d in DEGREE_SEQUENCE[pid]:
            code = code * 4 + d
        lut[code] = int(pid) - 1
    return lut


_LUT = {k: _degseq_lut(k) for k in (3, 4)}


def exact_induced_counts(g: Graph, limit: int = ORACLE_LIMIT) -> PatternCounts:
    """Induced counts of all 17 patterns; order-k entries sum to C(n,k)."""
    _check_size(g, limit)
    values = np.zeros(N_PATTERNS)
    values[PatternId.EDGE - 1] = g.m
    values[PatternId.EDGELESS_2 - 1] = comb(g.n, 2) - g.m
    adj = _adjacency_matrix(g)
    for k in (3, 4):
        if g.n < k:
            continue
        combos = _combo_array(g.n, k)
        degs = np.zeros((len(combos), k), dtype=np.int64)
        for i, j in _PAIR_COLS[k]:
            present = adj[combos[:, i], combos[:, j]]
            degs[:, i] += present
            degs[:, j] += present
        degs.sort(axis=1)
        codes = degs @ (4 ** np.arange(k - 1, -1, -1))
        values += np.bincount(_LUT[k][codes], minlength=N_PATTERNS)
    return PatternCounts(values=values, kind=INDUCED)


def exact_subgraph_counts(g: Graph, limit: int = ORACLE_LIMIT) -> PatternCounts:
    """Not-necessarily-induced counts, derived from the induced counts."""
    induced = exact_induced_counts(g, limit=limit)
    return PatternCounts(values=overlap_matrix() @ induced.values, kind=SUBGRAPH)


def exact_vertex_triangle_path_counts(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex triangle count and endpoint three-path count, as int64.

    path[v] counts paths on three vertices with v as an endpoint, which
    equals sum over neighbors u of (deg(u) - 1).
    """
    adj = _adjacency_matrix(g).astype(np.int64)
    deg = adj.sum(axis=1)
    tri = ((adj @ adj) * adj).sum(axis=1) // 2
    path = adj @ deg - deg
    return tri, path


def exact_vertex_features(g: Graph, v: int) -> tuple[float, float, float, float, float]:
    """Five per-vertex features from an explicit egonet construction.

    Returns (degree, clustering coefficient, average neighbor degree,
    egonet edge count, egonet boundary edge count).  Conventions:
    clustering is 0 when degree < 2, average neighbor degree is 0 for
    an isolated vertex.  Deliberately avoids the d/T/P shortcut
    identities so it can validate them.
    """
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for a {g.n}-vertex graph")
    nbrs = g.adj[v]
    d = len(nbrs)
    if d == 0:
        return (0.0, 0.0, 0.0, 0.0, 0.0)
    ego = {v} | nbrs
    inside = 0
    leaving = 0
    for x in ego:
        for y in g.adj[x]:
            if y in ego:
                if x < y:
                    inside += 1
            else:
                leaving += 1
    nbr_edges = sum(len(g.adj[u] & nbrs) for u in nbrs) // 2
    clustering = nbr_edges / comb(d, 2) if d >= 2 else 0.0
    avg_nbr_deg = sum(len(g.adj[u]) for u in nbrs) / d
    return (float(d), clustering, avg_nbr_deg, float(inside), float(leaving))


def phi_from_induced(induced: PatternCounts, n: int) -> np.ndarray:
    """Normalized frequency vector: order-k block divided by C(n,k).

    Blocks with C(n,k) = 0 are defined as all zeros.
    """
    phi = np.zeros(N_PATTERNS)
    for k, block in ORDER_SLICES.items():
        denom = comb(n, k)
        if denom:
            phi[block] = induced.values[block] / denom
    return phi
