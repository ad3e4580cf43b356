"""Eval bench: accuracy arithmetic, confusion conservation, latency ordering."""

from __future__ import annotations

import json

import pytest

from vehicle_assistant.data import eval_dataset_path, scripts_dir
from vehicle_assistant.evalbench.dataset import generate_eval_dataset
from vehicle_assistant.evalbench.eval import DatasetError, LabeledUtterance, eval_intents, load_eval_dataset
from vehicle_assistant.evalbench.latency import bench_latency, load_scripts
from vehicle_assistant.evalbench.report import (
    ACTION_API,
    ACTION_CONFIRM,
    ACTION_INTENT,
    EvalReport,
    load_report,
    render_report,
    save_report,
)


class TestEvalIntents:
    def test_all_correct_dataset(self, pack_model):
        dataset = [
            LabeledUtterance("hello", "greet"),
            LabeledUtterance("goodbye", "goodbye"),
            LabeledUtterance("Mumbai", "inform_location"),
        ]
        report = eval_intents(pack_model, dataset)
        assert report.accuracy == 1.0
        assert report.correct_count == report.total_count == 3
        # only diagonal entries populated
        for i, row in enumerate(report.confusion):
            for j, count in enumerate(row):
                assert count == 0 or i == j

    def test_281_of_300_arithmetic(self, pack_model):
        # 281 matching + 19 mismatching pairs; predictions are known because
        # "hello" reliably classifies as greet.
        dataset = [LabeledUtterance("hello", "greet")] * 281 + [
            LabeledUtterance("hello", "goodbye")
        ] * 19
        report = eval_intents(pack_model, dataset)
        assert report.total_count == 300
        assert report.correct_count == 281
        assert report.accuracy == pytest.approx(0.93667, abs=5e-5)
        assert sum(sum(row) for row in report.confusion) == 300

    def test_unknown_expected_intent_rejected(self, pack_model):
        with pytest.raises(DatasetError):
            eval_intents(pack_model, [LabeledUtterance("hi", "nonexistent")])

    def test_empty_dataset_rejected(self, pack_model):
        with pytest.raises(DatasetError):
            eval_intents(pack_model, [])

    def test_confusion_conservation_on_shipped_set(self, pack_model):
        dataset = load_eval_dataset(eval_dataset_path())
        report = eval_intents(pack_model, dataset)
        index = {name: i for i, name in enumerate(report.intents)}
        per_intent: dict[str, int] = {}
        for item in dataset:
            per_intent[item.expected_intent] = per_intent.get(item.expected_intent, 0) + 1
        for intent, count in per_intent.items():
            assert sum(report.confusion[index[intent]]) == count
        assert sum(sum(row) for row in report.confusion) == len(dataset)
        diagonal = sum(report.confusion[i][i] for i in range(len(report.intents)))
        assert diagonal == report.correct_count
        assert report.accuracy * report.total_count == pytest.approx(diagonal)

    def test_committed_dataset_matches_generator(self):
        committed = load_eval_dataset(eval_dataset_path())
        assert committed == generate_eval_dataset()
        assert len(committed) == 300


class TestLatency:
    def test_injected_delays_force_ordering(self, make_engine):
        engine = make_engine()
        scripts = load_scripts(scripts_dir())
        assert {s.module for s in scripts} == {
            "general", "music", "navigation", "communication", "weather", "news",
        }
        report, samples = bench_latency(engine, scripts, repetitions=2, delays_ms=(0, 5, 20))
        assert report.reps == 2
        by_action = report.latency_by_action
        assert by_action[ACTION_INTENT] < by_action[ACTION_CONFIRM] < by_action[ACTION_API]
        assert report.ordered_reps == 2
        # per rep: 4 slot-module confirms x2, 4 slot-module api + 2 news api,
        # and 3 plain turns (hello, goodbye, news stop)
        assert report.latency_counts_by_action == {ACTION_INTENT: 6, ACTION_CONFIRM: 16, ACTION_API: 12}
        # general interaction never touches a provider: smallest module mean
        assert min(report.latency_by_module, key=report.latency_by_module.get) == "general"
        assert all(sample.elapsed_ms >= 0 for sample in samples)

    def test_single_repetition_report_is_well_formed(self, make_engine):
        engine = make_engine()
        report, _ = bench_latency(engine, load_scripts(scripts_dir()), repetitions=1)
        assert report.reps == 1
        assert set(report.latency_counts_by_module) == {
            "general", "music", "navigation", "communication", "weather", "news",
        }
        assert sum(report.latency_counts_by_action.values()) == sum(
            report.latency_counts_by_module.values()
        )

    def test_wake_turns_carry_no_sample(self, make_engine):
        engine = make_engine()
        scripts = load_scripts(scripts_dir())
        _, samples = bench_latency(engine, scripts, repetitions=1)
        turns_with_wake = sum(len(s.turns) for s in scripts)
        assert len(samples) == turns_with_wake - len(scripts)  # one "coffee" per script


class TestReport:
    def test_json_round_trip(self, pack_model, make_engine):
        dataset = [LabeledUtterance("hello", "greet"), LabeledUtterance("bye", "goodbye")]
        accuracy = eval_intents(pack_model, dataset)
        latency, _ = bench_latency(make_engine(), load_scripts(scripts_dir()), repetitions=1)
        report = accuracy.merged_with(latency)
        path_round_trip(report)

    def test_action_table_layout(self, make_engine):
        report, _ = bench_latency(make_engine(), load_scripts(scripts_dir()), repetitions=1)
        text = render_report(report)
        lines = text.splitlines()
        assert "Average response times of the bot for each type of action" in lines[0]
        idx = lines.index("Average response times of the bot for each type of action")
        table = lines[idx : idx + 6]
        assert any("Type of Action" in line and "Avg Response Time (in seconds)" in line for line in table)
        order = [line.split("  ")[0].strip() for line in table if line.startswith(("Intent", "Input", "API"))]
        assert order == ["Intent Identification", "Input & Confirmation", "API Call & Output"]

    def test_module_table_layout(self, make_engine):
        report, _ = bench_latency(make_engine(), load_scripts(scripts_dir()), repetitions=1)
        text = render_report(report)
        start = text.index("Average response times of the bot for each module")
        section = text[start:].splitlines()
        labels = [line.split("  ")[0].strip() for line in section[3:9]]
        assert labels == ["General Interaction", "Music", "Navigation", "Communication", "Weather", "News"]

    def test_accuracy_only_report(self, pack_model):
        report = eval_intents(pack_model, [LabeledUtterance("hello", "greet")])
        text = render_report(report)
        assert "Accuracy of identifying intents" in text
        assert "each type of action" not in text

    def test_sample_rows_render_results(self, pack_model):
        report = eval_intents(
            pack_model,
            [LabeledUtterance("hello", "greet"), LabeledUtterance("hello", "goodbye")],
        )
        text = render_report(report)
        assert "  Y" in text and "  N" in text


def path_round_trip(report: EvalReport, tmp_dir: str | None = None) -> None:
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "report.json"
        save_report(report, path)
        clone = load_report(path)
        assert clone == report
        assert json.loads(path.read_text())["accuracy"] == pytest.approx(report.accuracy)
