"""Latency methodology: time scripted turns, tag them by action type and
module, and aggregate means the way the response-time tables expect.

Turn tagging is rule-based: a turn that executed a provider-backed action is
an API call turn; otherwise a turn that asked for or confirmed a slot
(responses named ``utter_ask_*`` / ``utter_confirm_*``) is an input &
confirmation turn; everything else is plain intent identification. Injected
per-type delays (slept inside the timed window) dominate compute noise, which
is what makes the expected ordering checkable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

import yaml

from ..actions.builtin import PROVIDER_ACTIONS
from ..channel.wake import WakeState, detect_wake
from ..core.engine import DialogueEngine
from ..core.events import ACTION_EXECUTED, Tracker
from .report import ACTION_API, ACTION_CONFIRM, ACTION_INTENT, ACTION_TYPES, MODULES, EvalReport

ASK_PREFIX = "utter_ask_"
CONFIRM_PREFIX = "utter_confirm_"


@dataclass(frozen=True)
class ConversationScript:
    name: str
    module: str
    turns: tuple[str, ...]


@dataclass(frozen=True)
class LatencySample:
    action_type: str
    module: str
    elapsed_ms: float


def load_scripts(directory: str | Path) -> list[ConversationScript]:
    scripts: list[ConversationScript] = []
    for path in sorted(Path(directory).glob("*.yml")):
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
        module = data["module"]
        if module not in MODULES:
            raise ValueError(f"{path.name}: unknown module {module!r}")
        scripts.append(ConversationScript(data["name"], module, tuple(str(t) for t in data["turns"])))
    return scripts


def classify_turn(before: Tracker, after: Tracker) -> str:
    """Tag one turn by the actions it executed (see module docstring)."""
    executed = [
        event.data["action"]
        for event in after.events[len(before.events) :]
        if event.type == ACTION_EXECUTED
    ]
    if any(action in PROVIDER_ACTIONS for action in executed):
        return ACTION_API
    if any(action.startswith((ASK_PREFIX, CONFIRM_PREFIX)) for action in executed):
        return ACTION_CONFIRM
    return ACTION_INTENT


def bench_latency(
    engine: DialogueEngine,
    scripts: list[ConversationScript],
    repetitions: int = 100,
    delays_ms: tuple[float, float, float] = (0.0, 0.0, 0.0),
    wake_word: str = "coffee",
) -> tuple[EvalReport, list[LatencySample]]:
    """Run each script ``repetitions`` times, timing every dialogue turn.

    Wake-word turns are channel business, not dialogue actions, and carry no
    sample. Each repetition talks to fresh senders so state never leaks
    between runs. ``delays_ms`` maps onto the three action types.
    """
    delay_for = dict(zip(ACTION_TYPES, delays_ms))
    gate = WakeState(engine, wake_word)
    samples: list[LatencySample] = []
    ordered_reps = 0
    for rep in range(repetitions):
        rep_samples: list[LatencySample] = []
        for script in scripts:
            sender = f"bench/{script.name}/{rep}"
            for turn in script.turns:
                if not engine.listening(sender) and detect_wake(turn, wake_word):
                    gate.accept(sender, turn)
                    continue
                before = engine.tracker(sender)
                started = time.perf_counter()
                gate.accept(sender, turn)
                action_type = classify_turn(before, engine.tracker(sender))
                delay = delay_for.get(action_type, 0.0)
                if delay:
                    time.sleep(delay / 1000.0)
                elapsed_ms = (time.perf_counter() - started) * 1000.0
                rep_samples.append(LatencySample(action_type, script.module, elapsed_ms))
        if _ordered(rep_samples):
            ordered_reps += 1
        samples.extend(rep_samples)
    return _aggregate(samples, repetitions, ordered_reps), samples


def _means(samples: list[LatencySample], key: str) -> tuple[dict[str, float], dict[str, int]]:
    totals: dict[str, float] = {}
    counts: dict[str, int] = {}
    for sample in samples:
        bucket = getattr(sample, key)
        totals[bucket] = totals.get(bucket, 0.0) + sample.elapsed_ms
        counts[bucket] = counts.get(bucket, 0) + 1
    return {k: totals[k] / counts[k] for k in totals}, counts


def _ordered(samples: list[LatencySample]) -> bool:
    means, _ = _means(samples, "action_type")
    if any(t not in means for t in ACTION_TYPES):
        return False
    return means[ACTION_INTENT] < means[ACTION_CONFIRM] < means[ACTION_API]


def _aggregate(samples: list[LatencySample], reps: int, ordered_reps: int) -> EvalReport:
    by_action, action_counts = _means(samples, "action_type")
    by_module, module_counts = _means(samples, "module")
    return EvalReport(
        latency_by_action=by_action,
        latency_by_module=by_module,
        latency_counts_by_action=action_counts,
        latency_counts_by_module=module_counts,
        reps=reps,
        ordered_reps=ordered_reps,
    )
