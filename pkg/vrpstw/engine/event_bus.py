"""
Progress bus for solver runs.

Solvers publish what they do (every evaluation, every archive acceptance,
every GA iteration or MOLSD expansion) as plain dict events. The bus does
not interpret them; it hands each event to the registered subscribers in
registration order. Tests subscribe a ReplayLog to watch a run.

Solvers skip publishing entirely when no bus is attached.
"""

from collections.abc import Callable
from typing import Any

from vrpstw.errors import RunError

Event = dict[str, Any]
Subscriber = Callable[[Event], None]

EVALUATION = "evaluation"
ARCHIVE_ACCEPTED = "archive.accepted"
GA_ITERATION = "ga.iteration"
MOLSD_EXPANSION = "molsd.expansion"


class EventBus:
    """
    Synchronous progress bus owned by one solver run.

    Handlers see events in the order the solver produced them. A handler
    that raises aborts the run with its own error. Once the run's bus is
    closed, a late subscriber or a stray event is a RunError.
    """

    def __init__(self) -> None:
        self._subscribers: list[Subscriber] = []
        self._closed: bool = False

    def _require_open(self, what: str) -> None:
        if self._closed:
            raise RunError(f"Progress bus is closed; {what} rejected")

    def subscribe(self, handler: Subscriber) -> None:
        self._require_open("new subscriber")
        self._subscribers.append(handler)

    def publish(self, event: Event) -> None:
        self._require_open(f"{event.get('event_type', 'untyped')} event")
        for handler in self._subscribers:
            handler(event)

    def close(self) -> None:
        """End of run."""
        self._closed = True

    @property
    def closed(self) -> bool:
        return self._closed


class ReplayLog:
    """Subscriber that records every event it receives, grouped by type."""

    def __init__(self) -> None:
        self.events: list[Event] = []

    def __call__(self, event: Event) -> None:
        self.events.append(event)

    def of_type(self, event_type: str) -> list[Event]:
        return [event for event in self.events if event["event_type"] == event_type]
