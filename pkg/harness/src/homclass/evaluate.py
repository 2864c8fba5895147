"""Nested cross-validation of logistic regression on feature tables.

Per replicate: a stratified 10-fold outer split; within each fold an
80/20 train/validation holdout selects the regularization setting by
validation accuracy, and the selected model is retrained on the whole
training fold and scored 3 times (distinct solver seeds) on the test
fold. Replicate scores are averaged and the reported spread is the mean
over replicates of the per-replicate fold standard deviation.

"No regularization" is approximated by the largest grid C under l2,
since the liblinear solver always regularizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.linear_model import LogisticRegression
from sklearn.model_selection import StratifiedKFold, train_test_split

from .data import FeatureTable, load_replicates

C_GRID = (1e-4, 1e-2, 10.0, 1e4)
PENALTIES = ("l1", "l2", "none")


@dataclass(frozen=True)
class EvalProtocol:
    outer_folds: int = 10
    validation_fraction: float = 0.2  # 4:1 train/validation holdout
    final_repeats: int = 3
    c_grid: tuple = C_GRID
    penalties: tuple = PENALTIES
    seed: int = 0

    def __post_init__(self):
        if self.outer_folds < 2:
            raise ValueError("need at least 2 outer folds")
        if not 0.0 < self.validation_fraction < 1.0:
            raise ValueError("validation fraction must lie in (0, 1)")
        if self.final_repeats < 1:
            raise ValueError("final_repeats must be positive")

    def grid(self):
        for penalty in self.penalties:
            if penalty == "none":
                yield ("none", max(self.c_grid))
            else:
                for c in self.c_grid:
                    yield (penalty, c)


@dataclass
class EvalReport:
    fold_accuracies: list  # one array of fold scores per replicate
    mean_accuracy: float
    std_accuracy: float  # mean over replicates of per-replicate fold std
    n_replicates: int
    n_folds: int
    selected: list = field(default_factory=list)  # (penalty, C) per fold


def _rand_state(seed: int, *parts: int) -> int:
    return int(np.random.SeedSequence([seed, *parts]).generate_state(1)[0])


def _model(penalty: str, c: float, random_state: int) -> LogisticRegression:
    if penalty == "none":
        penalty = "l2"
    return LogisticRegression(solver="liblinear", penalty=penalty, C=c,
                              max_iter=2000, random_state=random_state)


def _evaluate_fold(X, y, train_idx, test_idx, protocol, rep, fold):
    assert not set(train_idx) & set(test_idx)
    X_train, y_train = X[train_idx], y[train_idx]
    inner_state = _rand_state(protocol.seed, rep, fold, 0)
    tr, val, y_tr, y_val = train_test_split(
        X_train, y_train, test_size=protocol.validation_fraction,
        stratify=y_train, random_state=inner_state)
    best = None
    for gi, (penalty, c) in enumerate(protocol.grid()):
        model = _model(penalty, c, _rand_state(protocol.seed, rep, fold,
                                               1, gi))
        model.fit(tr, y_tr)
        score = model.score(val, y_val)
        if best is None or score > best[0]:
            best = (score, penalty, c)
    _, penalty, c = best
    scores = []
    for r in range(protocol.final_repeats):
        model = _model(penalty, c, _rand_state(protocol.seed, rep, fold,
                                               2, r))
        model.fit(X_train, y_train)
        scores.append(model.score(X[test_idx], y[test_idx]))
    return float(np.mean(scores)), (penalty, c)


def evaluate_tables(tables: list[FeatureTable],
                    protocol: EvalProtocol) -> EvalReport:
    if not tables:
        raise ValueError("no replicates to evaluate")
    labels = tables[0].labels
    classes, counts = np.unique(labels, return_counts=True)
    if classes.size < 2:
        raise ValueError("need at least 2 classes")
    if counts.min() < protocol.outer_folds:
        raise ValueError(
            f"smallest class has {counts.min()} graphs, cannot stratify "
            f"{protocol.outer_folds} folds; reduce --folds")
    per_replicate = []
    selected = []
    for rep, table in enumerate(tables):
        X, y = table.features, table.labels
        splitter = StratifiedKFold(n_splits=protocol.outer_folds,
                                   shuffle=True,
                                   random_state=_rand_state(protocol.seed,
                                                            rep))
        fold_scores = []
        for fold, (train_idx, test_idx) in enumerate(splitter.split(X, y)):
            score, choice = _evaluate_fold(X, y, train_idx, test_idx,
                                           protocol, rep, fold)
            fold_scores.append(score)
            selected.append(choice)
        per_replicate.append(np.array(fold_scores))
    mean_accuracy = float(np.mean([s.mean() for s in per_replicate]))
    std_accuracy = float(np.mean([s.std() for s in per_replicate]))
    return EvalReport(fold_accuracies=per_replicate,
                      mean_accuracy=mean_accuracy,
                      std_accuracy=std_accuracy,
                      n_replicates=len(tables),
                      n_folds=protocol.outer_folds,
                      selected=selected)


def evaluate(csv_paths, protocol: EvalProtocol) -> EvalReport:
    """Evaluate one classifier run from per-replicate embedding CSVs."""
    return evaluate_tables(load_replicates(csv_paths), protocol)
