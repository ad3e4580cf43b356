"""Deterministic file-backed providers for tests and offline runs.

Each mock loads one JSON fixture, answers the same query identically every
time, and supports an injectable delay (milliseconds) for latency-bench
experiments. Setting ``broken = True`` makes the next calls raise, which is
how tests exercise error containment.
"""

from __future__ import annotations

import json
import time
from pathlib import Path

from .providers import (
    ContactNotFoundError,
    Headline,
    MusicProvider,
    NavigationProvider,
    NewsProvider,
    PhoneProvider,
    ProviderError,
    ProviderRegistry,
    Route,
    Track,
    TrackNotFoundError,
    UnknownLocationError,
    WeatherProvider,
    WeatherReport,
)

NEWS_FIXTURE = "news.json"
WEATHER_FIXTURE = "weather.json"
ROUTES_FIXTURE = "routes.json"
TRACKS_FIXTURE = "tracks.json"
CONTACTS_FIXTURE = "contacts.json"


class _MockBase:
    provider_name = "mock"

    def __init__(self, delay_ms: int = 0):
        self.delay_ms = delay_ms
        self.broken = False

    def _enter(self) -> None:
        if self.delay_ms:
            time.sleep(self.delay_ms / 1000.0)
        if self.broken:
            raise ProviderError(self.provider_name, "simulated outage")


def _load(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


class MockNewsProvider(_MockBase, NewsProvider):
    provider_name = "news"

    def __init__(self, fixture: Path, delay_ms: int = 0):
        super().__init__(delay_ms)
        self._headlines = [Headline(h["title"], h["source"]) for h in _load(fixture)["headlines"]]

    def headlines(self, page: int, page_size: int) -> list[Headline]:
        self._enter()
        start = (page - 1) * page_size
        return self._headlines[start : start + page_size]


class MockWeatherProvider(_MockBase, WeatherProvider):
    provider_name = "weather"

    def __init__(self, fixture: Path, delay_ms: int = 0):
        super().__init__(delay_ms)
        self._reports: dict[str, tuple[WeatherReport, WeatherReport]] = {}
        for location, days in _load(fixture).items():
            self._reports[location.lower()] = (
                self._report(location, days["current"], "current"),
                self._report(location, days["next"], "next"),
            )

    @staticmethod
    def _report(location: str, data: dict, day: str) -> WeatherReport:
        return WeatherReport(
            location=location,
            temperature_c=float(data["temperature_c"]),
            humidity_pct=float(data["humidity_pct"]),
            pressure_hpa=float(data["pressure_hpa"]),
            wind_speed_kmh=float(data["wind_speed_kmh"]),
            wind_direction=data["wind_direction"],
            cloud_cover_pct=float(data["cloud_cover_pct"]),
            day=day,
        )

    def report(self, location: str) -> tuple[WeatherReport, WeatherReport]:
        self._enter()
        try:
            return self._reports[location.lower()]
        except KeyError:
            raise UnknownLocationError("weather", f"no data for {location!r}")


class MockNavigationProvider(_MockBase, NavigationProvider):
    provider_name = "nav"

    def __init__(self, fixture: Path, delay_ms: int = 0):
        super().__init__(delay_ms)
        data = _load(fixture)
        self._origin = data["origin"]["label"]
        self._routes = {
            destination.lower(): Route(
                origin=self._origin,
                destination=destination,
                distance_km=float(info["distance_km"]),
                duration_min=float(info["duration_min"]),
                map_ref=info["map_ref"],
            )
            for destination, info in data["routes"].items()
        }

    def origin_label(self) -> str:
        return self._origin

    def route(self, destination: str) -> Route:
        self._enter()
        try:
            return self._routes[destination.lower()]
        except KeyError:
            raise UnknownLocationError("nav", f"no route to {destination!r}")


class MockMusicProvider(_MockBase, MusicProvider):
    provider_name = "music"

    def __init__(self, fixture: Path, delay_ms: int = 0):
        super().__init__(delay_ms)
        self._tracks = {
            t["title"].lower(): Track(t["id"], t["title"], t["artist"], int(t["duration_s"]))
            for t in _load(fixture)["tracks"]
        }

    def find_track(self, query: str) -> Track:
        self._enter()
        try:
            return self._tracks[query.lower()]
        except KeyError:
            raise TrackNotFoundError("music", f"no track matching {query!r}")


class MockPhoneProvider(_MockBase, PhoneProvider):
    provider_name = "phone"

    def __init__(self, fixture: Path, delay_ms: int = 0):
        super().__init__(delay_ms)
        self._contacts = {name.lower(): (name, number) for name, number in _load(fixture).items()}
        self.dialed: list[tuple[str, str]] = []

    def lookup(self, name: str) -> str:
        self._enter()
        try:
            return self._contacts[name.lower()][1]
        except KeyError:
            raise ContactNotFoundError("phone", f"no contact named {name!r}")

    def dial(self, name: str, number: str) -> None:
        # Log-only: desks have no telephony.
        self.dialed.append((name, number))


def load_mock_registry(fixtures_dir: str | Path, delay_ms: int = 0) -> ProviderRegistry:
    base = Path(fixtures_dir)
    return ProviderRegistry(
        news=MockNewsProvider(base / NEWS_FIXTURE, delay_ms),
        weather=MockWeatherProvider(base / WEATHER_FIXTURE, delay_ms),
        nav=MockNavigationProvider(base / ROUTES_FIXTURE, delay_ms),
        music=MockMusicProvider(base / TRACKS_FIXTURE, delay_ms),
        phone=MockPhoneProvider(base / CONTACTS_FIXTURE, delay_ms),
    )
