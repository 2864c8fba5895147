"""Plain-text reporting of evaluation results."""

from __future__ import annotations

from .evaluate import EvalReport


def format_score(mean: float, std: float) -> str:
    """Accuracy as percent with one decimal, e.g. 83.6+/-8.7 -> "83.6±8.7"."""
    return f"{100 * mean:.1f}±{100 * std:.1f}"


def report_table(reports: list[tuple[str, EvalReport]]) -> str:
    """One row per labeled report."""
    if not reports:
        raise ValueError("nothing to report")
    width = max(len(name) for name, _ in reports)
    lines = []
    for name, rep in reports:
        lines.append(f"{name:<{width}}  "
                     f"{format_score(rep.mean_accuracy, rep.std_accuracy)}  "
                     f"({rep.n_replicates} replicates, {rep.n_folds} folds)")
    return "\n".join(lines) + "\n"
