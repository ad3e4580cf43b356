"""The committed 300-utterance eval set.

Rows are built from the vehicle pack's vocabulary: mostly held-out
recombinations of each intent's training tokens, plus the ten canonical
single-value inputs up front and a small adversarial tail (unseen names,
genuinely ambiguous phrases) so the measured accuracy stays honest.

``Paris`` is labeled as a song on purpose: the phrase is a real ambiguity,
a city name that is also a track title, and the assistant resolves bare
gazetteer hits toward locations, so this row is expected to score as an
error. ``eval.yml`` is the generator's frozen output.
"""

from __future__ import annotations

from pathlib import Path

import yaml

from .eval import LabeledUtterance

# The ten canonical inputs (value -> expected label); the two trailing
# comments mark the documented ambiguities, not regressions.
CANONICAL_ROWS = [
    ("Sunlight", "inform_song"),
    ("Mumbai", "inform_location"),
    ("Delhi", "inform_location"),
    ("John", "inform_person"),
    ("Suresh", "inform_person"),
    ("99 Problems", "inform_song"),
    ("Sachin", "inform_person"),
    ("New York", "inform_location"),
    ("Stan", "inform_song"),
    ("Paris", "inform_song"),  # city/track ambiguity: resolves to location
]

_PHRASES: dict[str, list[str]] = {
    "greet": [
        "hello hello", "hey hey", "hi hi", "hello assistant", "hi assistant",
        "hey there", "hello good morning", "good morning assistant", "good evening assistant",
        "hey good evening", "hello hi", "hi hey", "hello there assistant", "good morning",
        "good evening", "hey hi there", "hello good evening", "hi there assistant",
        "hello hey assistant", "morning assistant", "evening assistant", "hello hello there",
        "good morning good morning", "hi good morning", "hey there assistant",
    ],
    "goodbye": [
        "goodbye bye", "bye bye bye", "see you", "goodbye see you later", "good night bye",
        "talk to you", "farewell goodbye", "bye see you", "goodbye goodbye", "see you later bye",
        "good night good night", "talk to you later bye", "farewell", "bye later",
        "goodbye farewell", "night night", "see you talk to you later", "goodbye good night",
        "bye bye see you", "farewell see you later", "talk to you goodbye", "later",
        "good night farewell", "bye good night", "goodbye talk to you later",
    ],
    "affirm": [
        "yes yes", "yeah sure", "yep correct", "absolutely right", "yes absolutely",
        "sure sure", "that is correct", "indeed yes", "yes indeed", "correct correct",
        "yeah yeah", "yup yup", "right right", "yes that is right", "sure yes",
        "absolutely correct", "yeah that is right", "indeed", "yes sure", "yep yes",
        "correct indeed", "that is absolutely right", "yeah correct", "sure indeed", "yes correct",
    ],
    "deny": [
        "no no", "nope no", "nah no", "that is incorrect", "wrong wrong", "no nope",
        "incorrect wrong", "no negative", "negative no", "nope nah", "that is wrong wrong",
        "no not really", "really not", "incorrect incorrect", "no thanks no", "nah nope",
        "negative negative", "wrong incorrect", "no no no", "that is really wrong",
        "nope thanks", "nah that is wrong", "no really", "not that", "no thanks nope",
    ],
    "news_request": [
        "the latest headlines", "give me the news", "read the headlines", "any news",
        "news news", "what is the latest news", "tell me the headlines", "news headlines",
        "the news update", "give me news updates", "latest headlines", "read me the headlines",
        "what is happening", "tell me what is in the news", "any headlines",
        "news in the world", "the latest news update", "give me the headlines",
        "what is the news", "read the news", "tell me news", "headlines update",
        "latest news updates", "world news", "news updates",
    ],
    "weather_request": [
        "the weather", "weather report", "today's weather", "what is the weather today",
        "weather forecast today", "how is the weather today", "the weather forecast",
        "will it rain", "is it hot", "temperature outside", "what is the temperature",
        "weather today", "give me the weather", "the weather report today",
        "how hot is it outside", "weather weather", "is it hot today", "will it rain outside",
        "today's forecast", "the temperature today", "what is today's weather",
        "give me the forecast", "how is the weather outside", "weather updates", "rain forecast",
    ],
    "navigation_request": [
        "open the maps", "show me directions", "get me directions", "start the navigation",
        "navigate me", "i need the route", "show the route", "open navigation", "the map",
        "set up the navigation", "directions directions", "show me the map", "need directions",
        "maps directions", "open the route", "get the directions", "navigate navigate",
        "start maps", "set up maps", "show me the route map", "map route", "i need navigation",
        "the navigation", "route directions", "open up the map",
    ],
    "music_request": [
        "play music", "some music", "play the music", "i want music", "let's play a song",
        "put on a song", "music music", "start a song", "i want to listen to a song",
        "play some song", "put on music", "let's have music", "song please", "start music",
        "play a song please", "let's listen to some music", "i want a song", "put on something",
        "play some music please", "listen to music", "music song", "i want to listen",
        "play play music", "something to listen to", "start the song",
    ],
    "call_request": [
        "make a phone call", "place a phone call", "dial someone", "call contact",
        "i want to call", "i need to make a call", "phone call", "dial a phone",
        "call call", "i want to place a call", "need to call someone", "make a call to someone",
        "dial contact", "phone a contact", "i need to phone someone", "place a call to a contact",
        "want to make a call", "call a contact", "i want to dial", "make a phone call to someone",
        "phone phone", "dial a call", "i need a phone call", "someone to call", "place a call please",
    ],
    "inform_location": [
        "Pune", "London", "Chennai", "Kolkata", "Hyderabad", "Bangalore", "Nagpur",
        "it is Delhi", "it is Pune", "the location is Mumbai", "the location is London",
        "it is New York", "the location is Chennai", "it is Hyderabad",
        "the location is Bangalore", "it is Nagpur", "it is London", "the location is Pune",
        "it is Kolkata", "the location is New York", "it is Chennai",
        "Berlin",  # unseen city: expected to confuse the closed-vocabulary model
    ],
    "inform_song": [
        "Believer", "Numb", "Lose Yourself", "Shape of You", "Thunder", "Radioactive",
        "Perfect", "the song is Stan", "the song is Believer", "play Sunlight",
        "play Believer", "the song is Numb", "play 99 Problems", "the song is Thunder",
        "play Radioactive", "the song is Perfect", "play Lose Yourself",
        "the song is Shape of You", "play Numb", "play Thunder",
        "call me maybe",  # unseen title phrased like a call request: expected miss
    ],
    "inform_person": [
        "Maria", "David", "Priya", "Rahul", "Amit", "Sneha", "Kiran",
        "the contact is John", "the contact is Maria", "call Sachin", "call Maria",
        "the contact is David", "call Priya", "the contact is Rahul", "call Amit",
        "the contact is Sneha", "call Kiran", "the contact is Priya", "call David",
        "the contact is Kiran", "call Rahul", "the contact is Amit",
    ],
}

DATASET_SIZE = 300


def generate_eval_dataset() -> list[LabeledUtterance]:
    """The full 300-row set: canonical rows first, then per-intent phrases."""
    rows = [LabeledUtterance(text, intent) for text, intent in CANONICAL_ROWS]
    for intent, phrases in _PHRASES.items():
        rows.extend(LabeledUtterance(text, intent) for text in phrases)
    assert len(rows) == DATASET_SIZE, f"eval set has {len(rows)} rows, expected {DATASET_SIZE}"
    return rows


def write_eval_dataset(path: str | Path) -> None:
    rows = generate_eval_dataset()
    payload = {"dataset": [{"text": row.text, "intent": row.expected_intent} for row in rows]}
    Path(path).write_text(
        yaml.safe_dump(payload, sort_keys=False, allow_unicode=True), encoding="utf-8"
    )
