"""Shared fixtures and an independent brute-force counting oracle.

The production oracle classifies vertex subsets through a degree-sequence
fingerprint and converts between count kinds with the overlap matrix.
The oracle below shares none of that machinery: it recognizes patterns by
permutation matching against a hand-typed catalog and tallies both count
kinds by direct enumeration.  Slow, but an honest second opinion.
"""

import itertools
import random

import numpy as np
import pytest

from streamdesc import EdgeStream, Graph, preprocess
from streamdesc.datasets import gnp_edges

# id -> (order, reference edge tuple); ids follow the canonical ordering
HAND_CATALOG = {
    1: (2, ()),
    2: (2, ((0, 1),)),
    3: (3, ()),
    4: (3, ((0, 1),)),
    5: (3, ((0, 1), (1, 2))),
    6: (3, ((0, 1), (1, 2), (0, 2))),
    7: (4, ()),
    8: (4, ((0, 1),)),
    9: (4, ((0, 1), (2, 3))),
    10: (4, ((0, 1), (1, 2))),
    11: (4, ((0, 1), (1, 2), (0, 2))),
    12: (4, ((0, 1), (0, 2), (0, 3))),
    13: (4, ((0, 1), (1, 2), (2, 3))),
    14: (4, ((0, 1), (1, 2), (2, 3), (0, 3))),
    15: (4, ((0, 1), (1, 2), (0, 2), (0, 3))),
    16: (4, ((0, 1), (1, 2), (0, 2), (0, 3), (1, 3))),
    17: (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
}


def _permuted(edges, perm):
    return frozenset(
        (min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in edges)


def _edgeset_tables():
    """Per order: every labeled edge set on k vertices -> pattern id."""
    tables = {2: {}, 3: {}, 4: {}}
    for pid, (k, edges) in HAND_CATALOG.items():
        for perm in itertools.permutations(range(k)):
            key = _permuted(edges, perm)
            claimed = tables[k].setdefault(key, pid)
            assert claimed == pid, "two patterns claim one labeled edge set"
    for k, table in tables.items():
        # the catalog must cover every possible edge subset of K_k
        assert len(table) == 2 ** (k * (k - 1) // 2)
    return tables


EDGESET_TO_ID = _edgeset_tables()


def brute_force_counts(g: Graph):
    """(subgraph, induced) 17-vectors by raw enumeration.

    A subgraph copy of a pattern is a (vertex k-subset, edge subset of
    the induced edges) pair; an induced copy fixes the edge subset to
    all induced edges.  No overlap matrix, no fingerprints.
    """
    sub = np.zeros(17)
    ind = np.zeros(17)
    for k in (2, 3, 4):
        table = EDGESET_TO_ID[k]
        for combo in itertools.combinations(range(g.n), k):
            pos = {v: i for i, v in enumerate(combo)}
            edges = [
                (pos[u], pos[v])
                for u, v in itertools.combinations(combo, 2)
                if g.has_edge(u, v)
            ]
            ind[table[frozenset(edges)] - 1] += 1
            for r in range(len(edges) + 1):
                for subset in itertools.combinations(edges, r):
                    sub[table[frozenset(subset)] - 1] += 1
    return sub, ind


def random_stream(n: int, p: float, seed: int) -> EdgeStream:
    """One preprocessed G(n, p) stream; n_hint keeps isolated vertices."""
    rng = random.Random(seed)
    stream = preprocess(gnp_edges(n, p, rng), seed=seed)
    stream.n_hint = n
    return stream


@pytest.fixture(scope="session")
def small_corpus():
    """60 mixed-density streams with n in [4, 10], shared across modules."""
    return [
        random_stream(4 + i % 7, (0.2, 0.5, 0.8)[i % 3], seed=1000 + i)
        for i in range(60)
    ]
