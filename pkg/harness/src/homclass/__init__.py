"""Cross-validation harness for graph density feature CSVs."""

from .data import FeatureTable, load_embeddings, load_replicates
from .evaluate import (C_GRID, PENALTIES, EvalProtocol, EvalReport, evaluate,
                       evaluate_tables)
from .report import format_score, report_table

__version__ = "0.1.0"

__all__ = [
    "C_GRID", "EvalProtocol", "EvalReport", "FeatureTable", "PENALTIES",
    "evaluate", "evaluate_tables", "format_score", "load_embeddings",
    "load_replicates", "report_table",
]
