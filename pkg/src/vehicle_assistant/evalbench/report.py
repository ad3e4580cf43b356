"""Evaluation report: accuracy with confusion matrix, latency means, rendering.

Row orders are fixed so the text tables always come out in the same layout:
action types as intent identification / input & confirmation / api call &
output, modules as general, music, navigation, communication, weather, news.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

ACTION_INTENT = "intent_identification"
ACTION_CONFIRM = "input_confirmation"
ACTION_API = "api_call_output"
ACTION_TYPES = (ACTION_INTENT, ACTION_CONFIRM, ACTION_API)

MODULES = ("general", "music", "navigation", "communication", "weather", "news")

ACTION_LABELS = {
    ACTION_INTENT: "Intent Identification",
    ACTION_CONFIRM: "Input & Confirmation",
    ACTION_API: "API Call & Output",
}

MODULE_LABELS = {
    "general": "General Interaction",
    "music": "Music",
    "navigation": "Navigation",
    "communication": "Communication",
    "weather": "Weather",
    "news": "News",
}


@dataclass(frozen=True)
class EvalReport:
    """All numbers a bench or eval run produces; sections may be empty."""

    intents: tuple[str, ...] = ()
    confusion: tuple[tuple[int, ...], ...] = ()  # [expected][predicted]
    correct_count: int = 0
    total_count: int = 0
    samples: tuple[tuple[str, str, str], ...] = ()  # (text, predicted, expected)
    latency_by_action: dict[str, float] = field(default_factory=dict)  # mean ms
    latency_by_module: dict[str, float] = field(default_factory=dict)
    latency_counts_by_action: dict[str, int] = field(default_factory=dict)
    latency_counts_by_module: dict[str, int] = field(default_factory=dict)
    reps: int = 0
    ordered_reps: int = 0

    @property
    def accuracy(self) -> float:
        return self.correct_count / self.total_count if self.total_count else 0.0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvalReport):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self) -> dict:
        return {
            "intents": list(self.intents),
            "confusion": [list(row) for row in self.confusion],
            "correct_count": self.correct_count,
            "total_count": self.total_count,
            "accuracy": self.accuracy,
            "samples": [list(sample) for sample in self.samples],
            "latency_by_action": dict(self.latency_by_action),
            "latency_by_module": dict(self.latency_by_module),
            "latency_counts_by_action": dict(self.latency_counts_by_action),
            "latency_counts_by_module": dict(self.latency_counts_by_module),
            "reps": self.reps,
            "ordered_reps": self.ordered_reps,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvalReport":
        return cls(
            intents=tuple(data["intents"]),
            confusion=tuple(tuple(row) for row in data["confusion"]),
            correct_count=data["correct_count"],
            total_count=data["total_count"],
            samples=tuple(tuple(sample) for sample in data["samples"]),
            latency_by_action=dict(data["latency_by_action"]),
            latency_by_module=dict(data["latency_by_module"]),
            latency_counts_by_action=dict(data["latency_counts_by_action"]),
            latency_counts_by_module=dict(data["latency_counts_by_module"]),
            reps=data["reps"],
            ordered_reps=data["ordered_reps"],
        )

    def merged_with(self, other: "EvalReport") -> "EvalReport":
        """Combine an accuracy-only and a latency-only report into one."""
        return EvalReport(
            intents=self.intents or other.intents,
            confusion=self.confusion or other.confusion,
            correct_count=self.correct_count or other.correct_count,
            total_count=self.total_count or other.total_count,
            samples=self.samples or other.samples,
            latency_by_action={**other.latency_by_action, **self.latency_by_action},
            latency_by_module={**other.latency_by_module, **self.latency_by_module},
            latency_counts_by_action={**other.latency_counts_by_action, **self.latency_counts_by_action},
            latency_counts_by_module={**other.latency_counts_by_module, **self.latency_counts_by_module},
            reps=self.reps or other.reps,
            ordered_reps=self.ordered_reps or other.ordered_reps,
        )


def save_report(report: EvalReport, path: str | Path) -> None:
    Path(path).write_text(json.dumps(report.to_dict(), indent=2), encoding="utf-8")


def load_report(path: str | Path) -> EvalReport:
    return EvalReport.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def _table(title: str, header: tuple[str, str], rows: list[tuple[str, str]]) -> list[str]:
    width = max(len(header[0]), *(len(r[0]) for r in rows)) if rows else len(header[0])
    lines = [title, "-" * (width + 4 + len(header[1]))]
    lines.append(f"{header[0]:<{width}}    {header[1]}")
    for label, value in rows:
        lines.append(f"{label:<{width}}    {value}")
    return lines


def render_report(report: EvalReport) -> str:
    """Aligned text tables: per-action and per-module latency means (reported
    in seconds), the accuracy summary with samples, and the confusion grid."""
    sections: list[str] = []

    if report.latency_by_action:
        rows = [
            (ACTION_LABELS[a], f"{report.latency_by_action[a] / 1000.0:.3f}")
            for a in ACTION_TYPES
            if a in report.latency_by_action
        ]
        sections.append(
            "\n".join(
                _table(
                    "Average response times of the bot for each type of action",
                    ("Type of Action", "Avg Response Time (in seconds)"),
                    rows,
                )
            )
        )

    if report.latency_by_module:
        rows = [
            (MODULE_LABELS[m], f"{report.latency_by_module[m] / 1000.0:.3f}")
            for m in MODULES
            if m in report.latency_by_module
        ]
        sections.append(
            "\n".join(
                _table(
                    "Average response times of the bot for each module",
                    ("Module", "Avg Response Time (in seconds)"),
                    rows,
                )
            )
        )
        if report.reps:
            sections.append(f"Latency ordering held in {report.ordered_reps} of {report.reps} repetitions.")

    if report.total_count:
        lines = [
            "Accuracy of identifying intents",
            "-" * 40,
            f"Correctly classified {report.correct_count} out of {report.total_count} instances "
            f"({report.accuracy * 100:.2f}%).",
        ]
        if report.samples:
            width = max(len(s[0]) for s in report.samples)
            pwidth = max(len(s[1]) for s in report.samples)
            lines.append("")
            lines.append(f"{'Input':<{width}}  {'Identified':<{pwidth}}  {'Expected':<{pwidth}}  Result")
            for text, predicted, expected in report.samples:
                result = "Y" if predicted == expected else "N"
                lines.append(f"{text:<{width}}  {predicted:<{pwidth}}  {expected:<{pwidth}}  {result}")
        sections.append("\n".join(lines))

    if report.confusion:
        lines = ["Confusion matrix (rows: expected, columns: predicted)", "-" * 54]
        for i, name in enumerate(report.intents):
            lines.append(f"  [{i:2d}] {name}")
        header = "      " + " ".join(f"[{i:2d}]" for i in range(len(report.intents)))
        lines.append(header)
        for i, row in enumerate(report.confusion):
            lines.append(f"[{i:2d}] " + " ".join(f"{count:4d}" for count in row))
        sections.append("\n".join(lines))

    return "\n\n".join(sections) + "\n"
