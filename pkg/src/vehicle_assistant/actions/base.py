"""Custom action plumbing: context, results, and the dispatching registry."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from concurrent.futures import TimeoutError as FutureTimeoutError
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Callable

from ..dsl.types import DomainSpec
from ..nlu.pipeline import NluResult
from ..wire import MediaRef
from .providers import ProviderRegistry

if TYPE_CHECKING:  # core imports actions.base; keep the reverse edge lazy
    from ..core.events import Event, Tracker

DEFAULT_ACTION_TIMEOUT_S = 5.0


class ActionError(Exception):
    """An action could not complete; the engine answers with a fallback."""


@dataclass(frozen=True)
class ActionContext:
    """Read-only view an action gets: tracker snapshot, NLU, providers, clock.

    Actions never mutate the tracker; state changes travel back as events in
    the ActionResult.
    """

    tracker: Tracker
    nlu: NluResult | None
    providers: ProviderRegistry
    clock: Callable[[], int]

    def slot(self, name: str) -> str | bool | None:
        return self.tracker.slots.get(name)


@dataclass
class ActionResult:
    responses: list[tuple[str, MediaRef | None]] = field(default_factory=list)
    events: list[Event] = field(default_factory=list)

    @classmethod
    def say(cls, *texts: str) -> "ActionResult":
        return cls(responses=[(text, None) for text in texts])


ActionFn = Callable[[ActionContext], ActionResult]


class ActionRegistry:
    """Named custom actions plus the dispatcher that runs them with a timeout."""

    def __init__(self, timeout_s: float = DEFAULT_ACTION_TIMEOUT_S):
        self._actions: dict[str, ActionFn] = {}
        self.timeout_s = timeout_s
        self._executor = ThreadPoolExecutor(max_workers=8, thread_name_prefix="action")

    def register(self, name: str, fn: ActionFn) -> None:
        self._actions[name] = fn

    def __contains__(self, name: str) -> bool:
        return name in self._actions

    def missing_for(self, spec: DomainSpec) -> list[str]:
        """Declared action names with no registered implementation."""
        return [name for name in spec.custom_action_names if name not in self._actions]

    def run(self, name: str, ctx: ActionContext) -> ActionResult:
        """Execute the action, bounding its wall time. Timeouts and unknown
        names surface as ActionError."""
        fn = self._actions.get(name)
        if fn is None:
            raise ActionError(f"no implementation registered for action {name!r}")
        future = self._executor.submit(fn, ctx)
        try:
            return future.result(timeout=self.timeout_s)
        except FutureTimeoutError:
            future.cancel()
            raise ActionError(f"action {name!r} timed out after {self.timeout_s:g}s")
