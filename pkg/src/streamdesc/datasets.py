"""Benchmark bundle loading and synthetic graph corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DataFormatError
from .graph import EdgeStream, derive_seed, preprocess


@dataclass
class Dataset:
    graphs: list[EdgeStream]
    labels: list[int]
    name: str = ""

    def __post_init__(self):
        if len(self.graphs) != len(self.labels):
            raise ValueError(
                f"{len(self.graphs)} graphs but {len(self.labels)} labels")

    def __len__(self) -> int:
        return len(self.graphs)


def _read_int_column(path) -> list[int]:
    out: list[int] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            try:
                out.append(int(text))
            except ValueError:
                raise DataFormatError(
                    f"{path}:{lineno}: expected an integer, got {text!r}") from None
    return out


def load_benchmark_dataset(directory, seed: int = 0) -> Dataset:
    """Load a multi-graph classification bundle from a directory.

    Expects PREFIX_A.txt (1-indexed comma-separated edge endpoints),
    PREFIX_graph_indicator.txt (vertex -> graph id), and
    PREFIX_graph_labels.txt (graph -> class).  Each graph comes out as a
    preprocessed 0-based stream with n_hint preserving its isolated
    vertices.
    """
    root = Path(directory)
    if not root.is_dir():
        raise DataFormatError(f"{directory}: not a directory")
    candidates = sorted(root.glob("*_A.txt"))
    if not candidates:
        raise DataFormatError(f"{directory}: no *_A.txt file found")
    if len(candidates) > 1:
        names = ", ".join(p.name for p in candidates)
        raise DataFormatError(f"{directory}: multiple *_A.txt files: {names}")
    a_path = candidates[0]
    prefix = a_path.name[: -len("_A.txt")]
    indicator_path = root / f"{prefix}_graph_indicator.txt"
    labels_path = root / f"{prefix}_graph_labels.txt"
    for p in (indicator_path, labels_path):
        if not p.is_file():
            raise DataFormatError(f"{directory}: missing {p.name}")

    indicator = _read_int_column(indicator_path)
    labels = _read_int_column(labels_path)
    if not indicator:
        raise DataFormatError(f"{indicator_path}: no vertices listed")
    n_graphs = len(labels)
    lo, hi = min(indicator), max(indicator)
    if lo < 1 or hi > n_graphs:
        raise DataFormatError(
            f"{indicator_path}: graph ids span [{lo}, {hi}] but "
            f"{labels_path.name} lists {n_graphs} graphs")

    n_vertices = [0] * (n_graphs + 1)
    local = [0] * (len(indicator) + 1)  # global vertex id -> local 0-based id
    for global_v, gid in enumerate(indicator, start=1):
        local[global_v] = n_vertices[gid]
        n_vertices[gid] += 1

    per_graph: list[list[tuple[int, int]]] = [[] for _ in range(n_graphs + 1)]
    n_total = len(indicator)
    with open(a_path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            parts = text.replace(",", " ").split()
            if len(parts) != 2:
                raise DataFormatError(
                    f"{a_path}:{lineno}: expected 'u, v', got {text!r}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise DataFormatError(
                    f"{a_path}:{lineno}: non-integer endpoint in {text!r}") from None
            if not (1 <= u <= n_total and 1 <= v <= n_total):
                raise DataFormatError(
                    f"{a_path}:{lineno}: vertex id out of range in {text!r}")
            gu, gv = indicator[u - 1], indicator[v - 1]
            if gu != gv:
                raise DataFormatError(
                    f"{a_path}:{lineno}: edge ({u}, {v}) crosses graphs {gu} and {gv}")
            per_graph[gu].append((local[u], local[v]))

    graphs = []
    for g in range(1, n_graphs + 1):
        stream = preprocess(per_graph[g], seed=derive_seed(seed, "shuffle", g))
        stream.n_hint = n_vertices[g]
        graphs.append(stream)
    return Dataset(graphs=graphs, labels=labels, name=prefix)


def gnp_edges(n: int, p: float, rng: random.Random) -> list[tuple[int, int]]:
    """Edge list of one uniform random graph: each pair kept with probability p."""
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return edges


def preferential_attachment_edges(
    n: int, m_attach: int, rng: random.Random
) -> list[tuple[int, int]]:
    """Growth model: each new vertex attaches to m_attach distinct existing
    vertices chosen proportionally to degree, which yields the heavy-tailed
    degree profile random graphs lack."""
    if m_attach < 1:
        raise ValueError("m_attach must be at least 1")
    if n < m_attach + 1:
        raise ValueError(f"need n >= m_attach + 1, got n={n} m_attach={m_attach}")
    edges: list[tuple[int, int]] = []
    weighted: list[int] = []  # one entry per incident edge endpoint
    for v in range(m_attach, n):
        if weighted:
            targets: set[int] = set()
            while len(targets) < m_attach:
                targets.add(rng.choice(weighted))
        else:
            targets = set(range(m_attach))
        for u in sorted(targets):
            edges.append((u, v))
            weighted.append(u)
            weighted.append(v)
    return edges


def synthetic_two_class_dataset(
    per_class: int = 60,
    n_range: tuple[int, int] = (50, 100),
    seed: int = 0,
    p: float = 0.1,
    m_attach: int = 3,
) -> Dataset:
    """Uniform random graphs (class 0) versus preferential-attachment
    graphs (class 1), sizes drawn uniformly from n_range."""
    lo, hi = n_range
    graphs: list[EdgeStream] = []
    labels: list[int] = []
    for i in range(per_class):
        rng = random.Random(derive_seed(seed, "gnp", i))
        n = rng.randint(lo, hi)
        stream = preprocess(gnp_edges(n, p, rng), seed=derive_seed(seed, "gnp-shuffle", i))
        stream.n_hint = n
        graphs.append(stream)
        labels.append(0)
    for i in range(per_class):
        rng = random.Random(derive_seed(seed, "pa", i))
        n = rng.randint(lo, hi)
        stream = preprocess(
            preferential_attachment_edges(n, m_attach, rng),
            seed=derive_seed(seed, "pa-shuffle", i))
        stream.n_hint = n
        graphs.append(stream)
        labels.append(1)
    return Dataset(graphs=graphs, labels=labels, name="synthetic-two-class")
