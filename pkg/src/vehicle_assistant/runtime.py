"""Convenience assembly of a ready-to-talk engine from shipped parts."""

from __future__ import annotations

from pathlib import Path
from typing import Callable

from .actions.base import ActionRegistry
from .actions.builtin import register_builtin_actions
from .actions.mocks import load_mock_registry
from .actions.pack import load_vehicle_pack
from .actions.providers import ProviderRegistry
from .core.engine import DialogueEngine
from .core.store import TrackerStore
from .data import fixtures_dir
from .dsl.types import DomainSpec
from .nlu.classifier import ClassifierModel, train


def build_engine(
    spec: DomainSpec | None = None,
    model: ClassifierModel | None = None,
    providers: ProviderRegistry | None = None,
    fixtures: str | Path | None = None,
    tracker_dir: str | Path | None = None,
    clock: Callable[[], int] | None = None,
    delay_ms: int = 0,
) -> DialogueEngine:
    """Engine over the shipped pack, mock providers, and builtin actions.

    Every part can be swapped: pass a custom spec/model, a provider registry,
    or a fixtures directory for the mocks.
    """
    spec = spec if spec is not None else load_vehicle_pack()
    model = model if model is not None else train(spec)
    if providers is None:
        providers = load_mock_registry(fixtures if fixtures is not None else fixtures_dir(), delay_ms)
    registry = register_builtin_actions(ActionRegistry())
    store = TrackerStore(spec.initial_slots(), tracker_dir)
    return DialogueEngine(spec, model, providers, registry, store=store, clock=clock)
