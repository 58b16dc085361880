"""Edge streams, stream preprocessing, and the exact in-memory graph."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass

from .errors import DataFormatError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the endpoints as (min, max); self-loops are rejected."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    if u < 0 or v < 0:
        raise ValueError(f"vertex labels must be non-negative, got ({u}, {v})")
    return (u, v) if u < v else (v, u)


@dataclass
class EdgeStream:
    """An ordered sequence of normalized edges.

    n_hint overrides the vertex count for graphs whose trailing vertices
    are isolated and therefore never appear in any edge.
    """

    edges: list[Edge]
    n_hint: int | None = None

    def __iter__(self):
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def n(self) -> int:
        """Vertex count: n_hint when given, else max label + 1 (0 if empty)."""
        if self.n_hint is not None:
            return self.n_hint
        if not self.edges:
            return 0
        return max(v for _, v in self.edges) + 1


def preprocess(raw_edges, seed: int) -> EdgeStream:
    """Clean a raw pair list into a stream ready for the estimators.

    Self-loops are dropped, duplicates (in either orientation) keep the
    first occurrence, labels are remapped to a contiguous 0-based range
    in order of first appearance, and the result is shuffled by a seeded
    permutation.  An input that is empty after cleaning yields an empty
    stream, not an error.
    """
    seen: set[Edge] = set()
    relabel: dict[int, int] = {}
    edges: list[Edge] = []
    for a, b in raw_edges:
        if a < 0 or b < 0:
            raise ValueError(f"vertex labels must be non-negative, got ({a}, {b})")
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        if key in seen:
            continue
        seen.add(key)
        for x in (a, b):
            if x not in relabel:
                relabel[x] = len(relabel)
        edges.append(normalize_edge(relabel[a], relabel[b]))
    random.Random(seed).shuffle(edges)
    return EdgeStream(edges)


@dataclass
class Graph:
    """Symmetric adjacency view of a simple undirected graph."""

    n: int
    adj: list[set[int]]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


def build_graph(stream: EdgeStream) -> Graph:
    """Materialize a stream as an exact adjacency structure.

    Duplicate edges are rejected; run preprocess first on raw data.
    """
    max_label = max((v for _, v in stream.edges), default=-1)
    if stream.n_hint is not None and stream.n_hint < max_label + 1:
        raise ValueError(
            f"n_hint={stream.n_hint} is below max vertex label {max_label}")
    n = stream.n
    adj: list[set[int]] = [set() for _ in range(n)]
    m = 0
    for u, v in stream:
        u, v = normalize_edge(u, v)
        if v in adj[u]:
            raise ValueError(f"duplicate edge ({u}, {v}); preprocess the stream first")
        adj[u].add(v)
        adj[v].add(u)
        m += 1
    return Graph(n=n, adj=adj, m=m)


def read_edge_list(path) -> list[tuple[int, int]]:
    """Parse a text edge list: one "u v" pair per line, '#' starts a comment."""
    pairs: list[tuple[int, int]] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.split()
            if len(parts) != 2:
                raise DataFormatError(
                    f"{path}:{lineno}: expected 'u v', got {text!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise DataFormatError(
                    f"{path}:{lineno}: non-integer vertex label in {text!r}") from None
            if u < 0 or v < 0:
                raise DataFormatError(
                    f"{path}:{lineno}: negative vertex label in {text!r}")
            pairs.append((u, v))
    return pairs


def derive_seed(*parts) -> int:
    """Stable 63-bit seed derived from the given parts.

    Hash-based so that unrelated consumers (per-graph shuffles, replica
    reservoirs, fold shuffles) get independent streams from one root seed.
    """
    text = "\x1f".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") >> 1
