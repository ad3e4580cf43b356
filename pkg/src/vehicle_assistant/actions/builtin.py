"""The six vehicle-assistant task actions plus the session-pause action.

Every provider-backed action follows the same containment contract: a
provider failure produces exactly one apology response, and the only slot it
may touch is the one it clears to re-ask.
"""

from __future__ import annotations

from ..core.events import conversation_paused, slot_set
from ..wire import MEDIA_ROUTE, MEDIA_TRACK, MediaRef
from .base import ActionContext, ActionRegistry, ActionResult
from .providers import (
    ContactNotFoundError,
    ProviderError,
    TrackNotFoundError,
    UnknownLocationError,
    WeatherReport,
)

HEADLINES_PER_PAGE = 5

SLOT_LOCATION = "location"
SLOT_DESTINATION = "destination"
SLOT_SONG = "song"
SLOT_CONTACT = "contact"
SLOT_NEWS_PAGE = "news_page"
SLOT_NOW_PLAYING = "now_playing"

ACTION_FETCH_NEWS = "action_fetch_news"
ACTION_FETCH_WEATHER = "action_fetch_weather"
ACTION_NAVIGATE = "action_navigate"
ACTION_PLAY_MUSIC = "action_play_music"
ACTION_PLACE_CALL = "action_place_call"
ACTION_PAUSE = "action_pause"

# Actions that reach an external provider; these are the confirmation-gated
# ones, except news which the stories invoke straight from the request.
PROVIDER_ACTIONS = frozenset(
    {ACTION_FETCH_NEWS, ACTION_FETCH_WEATHER, ACTION_NAVIGATE, ACTION_PLAY_MUSIC, ACTION_PLACE_CALL}
)
CONFIRMED_ACTIONS = PROVIDER_ACTIONS - {ACTION_FETCH_NEWS}


def action_fetch_news(ctx: ActionContext) -> ActionResult:
    page_slot = ctx.slot(SLOT_NEWS_PAGE)
    page = int(page_slot) if isinstance(page_slot, str) and page_slot.isdigit() else 1
    if ctx.nlu is not None and ctx.nlu.intent == "news_request":
        page = 1  # a fresh request starts from the latest headlines
    try:
        headlines = ctx.providers.news.headlines(page, HEADLINES_PER_PAGE)
    except ProviderError:
        return ActionResult.say("Sorry, I couldn't fetch the news right now.")
    if not headlines:
        return ActionResult(
            responses=[("That's all the headlines I have for now.", None)],
            events=[slot_set(SLOT_NEWS_PAGE, "1", ctx.clock())],
        )
    lines = [f"{(page - 1) * HEADLINES_PER_PAGE + i + 1}. {h.title} ({h.source})" for i, h in enumerate(headlines)]
    return ActionResult(
        responses=[
            ("Here are the latest headlines. " + " ".join(lines), None),
            ("Would you like to hear more headlines?", None),
        ],
        events=[slot_set(SLOT_NEWS_PAGE, str(page + 1), ctx.clock())],
    )


def _weather_sentence(report: WeatherReport) -> str:
    lead = f"Right now in {report.location}" if report.day == "current" else f"Tomorrow in {report.location}"
    return (
        f"{lead} it is {report.temperature_c:g} degrees with {report.humidity_pct:g} percent humidity, "
        f"pressure at {report.pressure_hpa:g} hectopascals, wind {report.wind_speed_kmh:g} kilometers "
        f"per hour from the {report.wind_direction}, and {report.cloud_cover_pct:g} percent cloud cover."
    )


def action_fetch_weather(ctx: ActionContext) -> ActionResult:
    location = ctx.slot(SLOT_LOCATION)
    if not isinstance(location, str) or not location:
        return ActionResult.say("Which location should I check the weather for?")
    try:
        current, tomorrow = ctx.providers.weather.report(location)
    except UnknownLocationError:
        return ActionResult(
            responses=[(f"I couldn't find weather for {location}. Which location did you mean?", None)],
            events=[slot_set(SLOT_LOCATION, None, ctx.clock())],
        )
    except ProviderError:
        return ActionResult.say("Sorry, the weather service isn't responding right now.")
    return ActionResult.say(_weather_sentence(current), _weather_sentence(tomorrow))


def action_navigate(ctx: ActionContext) -> ActionResult:
    destination = ctx.slot(SLOT_DESTINATION)
    if not isinstance(destination, str) or not destination:
        return ActionResult.say("Where would you like to go?")
    origin = ctx.providers.nav.origin_label()
    if destination.lower() == origin.lower():
        return ActionResult.say(f"You are already there: {origin} is your current location, distance 0 km.")
    try:
        route = ctx.providers.nav.route(destination)
    except UnknownLocationError:
        return ActionResult(
            responses=[(f"I couldn't find a route to {destination}. Where should I navigate?", None)],
            events=[slot_set(SLOT_DESTINATION, None, ctx.clock())],
        )
    except ProviderError:
        return ActionResult.say("Sorry, the navigation service isn't responding right now.")
    return ActionResult(
        responses=[
            (
                f"Route from {route.origin} to {route.destination}: {route.distance_km:g} km, "
                f"about {route.duration_min:g} minutes.",
                MediaRef(MEDIA_ROUTE, route.map_ref),
            )
        ]
    )


def action_play_music(ctx: ActionContext) -> ActionResult:
    song = ctx.slot(SLOT_SONG)
    if not isinstance(song, str) or not song:
        return ActionResult.say("Which song should I play?")
    try:
        track = ctx.providers.music.find_track(song)
    except TrackNotFoundError:
        return ActionResult(
            responses=[(f"I couldn't find a song called {song}. Which song should I play?", None)],
            events=[slot_set(SLOT_SONG, None, ctx.clock())],
        )
    except ProviderError:
        return ActionResult.say("Sorry, the music service isn't responding right now.")
    return ActionResult(
        responses=[(f"Now playing {track.title} by {track.artist}.", MediaRef(MEDIA_TRACK, track.id))],
        events=[slot_set(SLOT_NOW_PLAYING, track.title, ctx.clock())],
    )


def action_place_call(ctx: ActionContext) -> ActionResult:
    contact = ctx.slot(SLOT_CONTACT)
    if not isinstance(contact, str) or not contact:
        return ActionResult.say("Who should I call?")
    try:
        number = ctx.providers.phone.lookup(contact)
    except ContactNotFoundError:
        return ActionResult(
            responses=[(f"I don't have a contact named {contact}. Who should I call?", None)],
            events=[slot_set(SLOT_CONTACT, None, ctx.clock())],
        )
    except ProviderError:
        return ActionResult.say("Sorry, I can't place calls right now.")
    ctx.providers.phone.dial(contact, number)
    return ActionResult.say(f"Calling {contact}.")


def action_pause(ctx: ActionContext) -> ActionResult:
    return ActionResult(events=[conversation_paused(ctx.clock())])


def register_builtin_actions(registry: ActionRegistry) -> ActionRegistry:
    registry.register(ACTION_FETCH_NEWS, action_fetch_news)
    registry.register(ACTION_FETCH_WEATHER, action_fetch_weather)
    registry.register(ACTION_NAVIGATE, action_navigate)
    registry.register(ACTION_PLAY_MUSIC, action_play_music)
    registry.register(ACTION_PLACE_CALL, action_place_call)
    registry.register(ACTION_PAUSE, action_pause)
    return registry
