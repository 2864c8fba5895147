"""Density feature vectors for graph datasets.

Each graph gets one oracle and one sampled density per pattern; the
feature CSV carries (id, label, node count, densities) per row so a
downstream classifier can concatenate the node count with the density
vector.
"""

from __future__ import annotations

import csv
import io
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, PatternFamily
from .oracles import build_oracle
from .sampling import SamplingConfig, sample_density_many
from .seeding import DOMAIN_EMBED, derive_seed


@dataclass
class EmbeddingRecord:
    id: str
    label: str
    n_nodes: int
    features: np.ndarray


def embed_graph(g: Graph, patterns: PatternFamily, config: SamplingConfig,
                filter_choice: str = "auto", *, fpr: float = 0.01,
                graph_id: str = "", label: str = "",
                threads: int = 1) -> EmbeddingRecord:
    """Sampled density vector for one graph over a pattern family."""
    if g.n < 1:
        raise ValueError("cannot embed an empty graph")
    oracle = build_oracle(g, filter_choice, fpr)
    estimates = sample_density_many(g, patterns, oracle, config,
                                    threads=threads)
    features = np.array([e.t_bar for e in estimates], dtype=np.float64)
    return EmbeddingRecord(id=graph_id, label=label, n_nodes=g.n,
                           features=features)


def embed_dataset(records, patterns: PatternFamily, config: SamplingConfig,
                  filter_choice: str = "auto", sample_index: int = 0, *,
                  fpr: float = 0.01, threads: int = 1,
                  error_stream=None) -> list[EmbeddingRecord]:
    """Embed every (id, graph, label) record, in input order.

    The per-graph seed is derive_seed(config.seed, DOMAIN_EMBED,
    sample_index, position), so replicates with different sample_index
    values are independent. Failing records are skipped; one line per
    failed id goes to stderr and processing continues.
    """
    if sample_index < 0:
        raise ValueError("sample_index must be non-negative")
    if error_stream is None:
        error_stream = sys.stderr

    def embed_one(position_record):
        position, (rid, g, label) = position_record
        sub = config.with_seed(derive_seed(config.seed, DOMAIN_EMBED,
                                           sample_index, position))
        return embed_graph(g, patterns, sub, filter_choice, fpr=fpr,
                           graph_id=rid, label=label)

    out: list[EmbeddingRecord] = []
    failures: list[tuple[str, str]] = []
    jobs = list(enumerate(records))
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [pool.submit(embed_one, job) for job in jobs]
            for job, fut in zip(jobs, futures):
                try:
                    out.append(fut.result())
                except ValueError as exc:
                    failures.append((job[1][0], str(exc)))
    else:
        for job in jobs:
            try:
                out.append(embed_one(job))
            except ValueError as exc:
                failures.append((job[1][0], str(exc)))
    for rid, msg in failures:
        print(f"embed failed for record {rid!r}: {msg}", file=error_stream)
    return out


def format_density(value: float) -> str:
    """At least nine significant digits; plain decimals when they suffice."""
    if value == 0.0:
        return "0.000000000"
    if value >= 0.1:
        return f"{value:.9f}"
    return f"{value:.9e}"


def write_embeddings_csv(records: list[EmbeddingRecord]) -> str:
    """CSV with header id,label,n,t_0,...,t_{K-1} and one row per record."""
    if not records:
        return "id,label,n\n"
    width = records[0].features.shape[0]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "label", "n"] + [f"t_{i}" for i in range(width)])
    for rec in records:
        if rec.features.shape[0] != width:
            raise ValueError(f"record {rec.id!r} has {rec.features.shape[0]} "
                             f"features, expected {width}")
        writer.writerow([rec.id, rec.label, rec.n_nodes]
                        + [format_density(float(v)) for v in rec.features])
    return buf.getvalue()
