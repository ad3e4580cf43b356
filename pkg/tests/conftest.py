"""Shared fixtures: the shipped pack, a trained model, and engine builders."""

from __future__ import annotations

import pytest
from hypothesis import settings

from vehicle_assistant.actions.base import ActionRegistry
from vehicle_assistant.actions.builtin import register_builtin_actions
from vehicle_assistant.actions.mocks import load_mock_registry
from vehicle_assistant.actions.pack import load_vehicle_pack
from vehicle_assistant.core.engine import DialogueEngine
from vehicle_assistant.core.store import TrackerStore
from vehicle_assistant.data import fixtures_dir
from vehicle_assistant.nlu.classifier import train

settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")


class FakeClock:
    """Deterministic millisecond clock for replay-identical event logs."""

    def __init__(self, start: int = 1000):
        self.now = start

    def __call__(self) -> int:
        self.now += 1
        return self.now


@pytest.fixture(scope="session")
def pack_spec():
    return load_vehicle_pack()


@pytest.fixture(scope="session")
def pack_model(pack_spec):
    return train(pack_spec)


@pytest.fixture()
def mock_providers():
    return load_mock_registry(fixtures_dir())


@pytest.fixture()
def make_engine(pack_spec, pack_model):
    """Factory for isolated engines over the shipped pack and fresh mocks."""

    def _make(clock=None, providers=None, tracker_dir=None, spec=None, model=None, registry=None):
        spec = spec if spec is not None else pack_spec
        model = model if model is not None else pack_model
        if providers is None:
            providers = load_mock_registry(fixtures_dir())
        if registry is None:
            registry = register_builtin_actions(ActionRegistry())
        store = TrackerStore(spec.initial_slots(), tracker_dir)
        return DialogueEngine(spec, model, providers, registry, store=store, clock=clock)

    return _make


@pytest.fixture()
def engine(make_engine):
    return make_engine(clock=FakeClock())
