"""External-service seams: abstract providers plus their data records.

Every provider has a deterministic file-backed mock (see mocks.py). Live
adapters would implement the same interfaces and read credentials from the
environment; they are never required for tests.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

COMPASS_POINTS = (
    "N", "NNE", "NE", "ENE", "E", "ESE", "SE", "SSE",
    "S", "SSW", "SW", "WSW", "W", "WNW", "NW", "NNW",
)

DAY_CURRENT = "current"
DAY_NEXT = "next"


class ProviderError(Exception):
    """A provider failed to produce a result."""

    def __init__(self, provider: str, message: str):
        super().__init__(f"{provider}: {message}")
        self.provider = provider


class UnknownLocationError(ProviderError):
    pass


class TrackNotFoundError(ProviderError):
    pass


class ContactNotFoundError(ProviderError):
    pass


@dataclass(frozen=True)
class Headline:
    title: str
    source: str


@dataclass(frozen=True)
class WeatherReport:
    location: str
    temperature_c: float
    humidity_pct: float
    pressure_hpa: float
    wind_speed_kmh: float
    wind_direction: str
    cloud_cover_pct: float
    day: str  # "current" | "next"

    def __post_init__(self) -> None:
        if not 0 <= self.humidity_pct <= 100:
            raise ValueError(f"humidity {self.humidity_pct} outside [0, 100]")
        if not 0 <= self.cloud_cover_pct <= 100:
            raise ValueError(f"cloud cover {self.cloud_cover_pct} outside [0, 100]")
        if self.wind_direction not in COMPASS_POINTS:
            raise ValueError(f"wind direction {self.wind_direction!r} not a 16-point compass value")
        if self.day not in (DAY_CURRENT, DAY_NEXT):
            raise ValueError(f"day must be current or next, got {self.day!r}")


@dataclass(frozen=True)
class Route:
    origin: str
    destination: str
    distance_km: float
    duration_min: float
    map_ref: str


@dataclass(frozen=True)
class Track:
    id: str
    title: str
    artist: str
    duration_s: int


class NewsProvider(ABC):
    @abstractmethod
    def headlines(self, page: int, page_size: int) -> list[Headline]:
        """Headlines for a 1-based page; empty list past the end."""


class WeatherProvider(ABC):
    @abstractmethod
    def report(self, location: str) -> tuple[WeatherReport, WeatherReport]:
        """(current, next-day) reports. Raises UnknownLocationError."""


class NavigationProvider(ABC):
    @abstractmethod
    def origin_label(self) -> str:
        """Label of the configured current position."""

    @abstractmethod
    def route(self, destination: str) -> Route:
        """Route from the current position. Raises UnknownLocationError."""


class MusicProvider(ABC):
    @abstractmethod
    def find_track(self, query: str) -> Track:
        """Resolve a song query. Raises TrackNotFoundError."""


class PhoneProvider(ABC):
    @abstractmethod
    def lookup(self, name: str) -> str:
        """Contact's number. Raises ContactNotFoundError."""

    @abstractmethod
    def dial(self, name: str, number: str) -> None:
        """Place the call (mocks only record it)."""


@dataclass
class ProviderRegistry:
    news: NewsProvider
    weather: WeatherProvider
    nav: NavigationProvider
    music: MusicProvider
    phone: PhoneProvider
