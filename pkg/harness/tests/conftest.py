import numpy as np
import pytest

from tablegen import write_embedding_csv


@pytest.fixture
def separable_csv(tmp_path):
    """200 graphs, one feature that cleanly splits the two classes."""
    rng = np.random.default_rng(42)
    ids = [f"g{i}" for i in range(200)]
    labels = [i % 2 for i in range(200)]
    n_nodes = rng.integers(10, 30, size=200)
    base = np.where(np.array(labels) == 0, 0.1, 0.9)
    feats = (base + rng.uniform(-0.03, 0.03, size=200)).reshape(-1, 1)
    return write_embedding_csv(tmp_path / "sep.csv", ids, labels, n_nodes,
                               feats)
