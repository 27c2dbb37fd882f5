"""Typed events and the dispatcher that carries them from commands to the renderer."""

from __future__ import annotations

import threading
from collections.abc import Callable
from dataclasses import dataclass
from typing import TypeVar

_T = TypeVar("_T", bound="RtkEvent")

Listener = Callable[["RtkEvent"], None]


@dataclass(frozen=True)
class RtkEvent:
    """Base class for all rtk events."""


class EventDispatcher:
    """Synchronous publish/subscribe bus.

    A listener subscribed to an event type also receives its subclasses, so a
    listener on RtkEvent sees everything. For one event, listeners on the most
    specific type run first, each type's listeners in registration order.
    Emits from worker threads are serialized.
    """

    def __init__(self) -> None:
        self._listeners: dict[type[RtkEvent], list[Listener]] = {}
        self._lock = threading.RLock()

    def subscribe(self, event_type: type[_T], listener: Callable[[_T], None]) -> None:
        with self._lock:
            self._listeners.setdefault(event_type, []).append(listener)  # type: ignore[arg-type]

    def emit(self, event: RtkEvent) -> None:
        with self._lock:
            for cls in type(event).__mro__:
                if cls is object:
                    break
                for listener in self._listeners.get(cls, ()):
                    listener(event)
