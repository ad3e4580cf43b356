"""Tracker storage: in-memory by default, append-only JSON-lines when given
a directory. One lock per sender serializes turns; distinct senders proceed
in parallel."""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Mapping
from urllib.parse import quote, unquote

from .events import Event, Tracker, replay


class TrackerStore:
    def __init__(self, initial_slots: Mapping[str, str | bool | None] | None = None, directory: str | Path | None = None):
        self._initial_slots = dict(initial_slots or {})
        self._directory = Path(directory) if directory is not None else None
        self._trackers: dict[str, Tracker] = {}
        self._persisted: dict[str, int] = {}
        self._locks: dict[str, threading.RLock] = {}
        self._registry_lock = threading.Lock()
        if self._directory is not None:
            self._directory.mkdir(parents=True, exist_ok=True)
            self._load_all()

    def _path(self, sender_id: str) -> Path:
        assert self._directory is not None
        return self._directory / (quote(sender_id, safe="") + ".jsonl")

    def _load_all(self) -> None:
        assert self._directory is not None
        for path in sorted(self._directory.glob("*.jsonl")):
            sender_id = unquote(path.stem)
            lines = [line for line in path.read_text(encoding="utf-8").splitlines() if line.strip()]
            events = [Event.from_json_line(line) for line in lines]
            self._trackers[sender_id] = replay(sender_id, self._initial_slots, events)
            self._persisted[sender_id] = len(events)

    def lock(self, sender_id: str) -> threading.RLock:
        with self._registry_lock:
            if sender_id not in self._locks:
                self._locks[sender_id] = threading.RLock()
            return self._locks[sender_id]

    def get(self, sender_id: str) -> Tracker:
        with self._registry_lock:
            if sender_id not in self._trackers:
                self._trackers[sender_id] = Tracker.fresh(sender_id, self._initial_slots)
                self._persisted[sender_id] = 0
            return self._trackers[sender_id]

    def put(self, tracker: Tracker) -> None:
        """Store the tracker, appending any new events to its log file."""
        with self._registry_lock:
            persisted = self._persisted.get(tracker.sender_id, 0)
            self._trackers[tracker.sender_id] = tracker
            new_events = tracker.events[persisted:]
            self._persisted[tracker.sender_id] = len(tracker.events)
        if self._directory is not None and new_events:
            with open(self._path(tracker.sender_id), "a", encoding="utf-8") as fh:
                for event in new_events:
                    fh.write(event.to_json_line() + "\n")

    def reset(self, sender_id: str) -> Tracker:
        """Replace the tracker with a fresh one and truncate its log."""
        with self._registry_lock:
            tracker = Tracker.fresh(sender_id, self._initial_slots)
            self._trackers[sender_id] = tracker
            self._persisted[sender_id] = 0
        if self._directory is not None:
            self._path(sender_id).write_text("", encoding="utf-8")
        return tracker

    def sender_ids(self) -> list[str]:
        with self._registry_lock:
            return sorted(self._trackers)
