"""Evaluation bench: intent accuracy, latency methodology, report rendering."""

from .dataset import CANONICAL_ROWS, generate_eval_dataset, write_eval_dataset
from .eval import DatasetError, LabeledUtterance, eval_intents, load_eval_dataset
from .latency import ConversationScript, LatencySample, bench_latency, classify_turn, load_scripts
from .report import (
    ACTION_API,
    ACTION_CONFIRM,
    ACTION_INTENT,
    ACTION_TYPES,
    MODULES,
    EvalReport,
    load_report,
    render_report,
    save_report,
)

__all__ = [
    "ACTION_API",
    "ACTION_CONFIRM",
    "ACTION_INTENT",
    "ACTION_TYPES",
    "CANONICAL_ROWS",
    "ConversationScript",
    "DatasetError",
    "EvalReport",
    "LabeledUtterance",
    "LatencySample",
    "MODULES",
    "bench_latency",
    "classify_turn",
    "eval_intents",
    "generate_eval_dataset",
    "load_eval_dataset",
    "load_report",
    "load_scripts",
    "render_report",
    "save_report",
    "write_eval_dataset",
]
