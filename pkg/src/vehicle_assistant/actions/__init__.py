"""Task actions, provider seams, deterministic mocks, and the shipped pack."""

from .base import ActionContext, ActionError, ActionFn, ActionRegistry, ActionResult
from .builtin import (
    ACTION_FETCH_NEWS,
    ACTION_FETCH_WEATHER,
    ACTION_NAVIGATE,
    ACTION_PAUSE,
    ACTION_PLACE_CALL,
    ACTION_PLAY_MUSIC,
    CONFIRMED_ACTIONS,
    PROVIDER_ACTIONS,
    register_builtin_actions,
)
from .mocks import load_mock_registry
from .pack import build_vehicle_pack, load_vehicle_pack, vehicle_pack_documents
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

__all__ = [
    "ACTION_FETCH_NEWS",
    "ACTION_FETCH_WEATHER",
    "ACTION_NAVIGATE",
    "ACTION_PAUSE",
    "ACTION_PLACE_CALL",
    "ACTION_PLAY_MUSIC",
    "ActionContext",
    "ActionError",
    "ActionFn",
    "ActionRegistry",
    "ActionResult",
    "CONFIRMED_ACTIONS",
    "ContactNotFoundError",
    "Headline",
    "MusicProvider",
    "NavigationProvider",
    "NewsProvider",
    "PROVIDER_ACTIONS",
    "PhoneProvider",
    "ProviderError",
    "ProviderRegistry",
    "Route",
    "Track",
    "TrackNotFoundError",
    "UnknownLocationError",
    "WeatherProvider",
    "WeatherReport",
    "build_vehicle_pack",
    "load_mock_registry",
    "load_vehicle_pack",
    "register_builtin_actions",
    "vehicle_pack_documents",
]
