"""Loading of density-feature CSVs.

Expected schema (produced by `homsample embed`): header
``id,label,n,t_0,...,t_{K-1}``, one row per graph. The feature matrix
fed to models concatenates the node count with the density columns.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass
class FeatureTable:
    ids: list
    labels: np.ndarray  # string labels, one per graph
    features: np.ndarray  # column 0 is the node count, then densities

    @property
    def n_graphs(self) -> int:
        return len(self.ids)


def load_embeddings(path) -> FeatureTable:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path}: empty file")
    header = rows[0]
    if header[:3] != ["id", "label", "n"]:
        raise ValueError(f"{path}: unexpected header {header[:3]}")
    width = len(header)
    ids, labels, feats = [], [], []
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != width:
            raise ValueError(f"{path}: row {i} has {len(row)} fields, "
                             f"expected {width}")
        ids.append(row[0])
        labels.append(row[1])
        feats.append([float(v) for v in row[2:]])
    return FeatureTable(ids=ids, labels=np.array(labels),
                        features=np.array(feats, dtype=np.float64))


def load_replicates(paths) -> list[FeatureTable]:
    """Load one table per replicate and check they describe the same graphs."""
    paths = [Path(p) for p in paths]
    if not paths:
        raise ValueError("no embedding files given")
    tables = [load_embeddings(p) for p in paths]
    first = tables[0]
    for path, table in zip(paths[1:], tables[1:]):
        if table.ids != first.ids:
            raise ValueError(f"{path}: graph ids differ from {paths[0]}")
        if not np.array_equal(table.labels, first.labels):
            raise ValueError(f"{path}: labels differ from {paths[0]}")
        if table.features.shape != first.features.shape:
            raise ValueError(f"{path}: feature shape {table.features.shape} "
                             f"differs from {first.features.shape}")
    return tables
