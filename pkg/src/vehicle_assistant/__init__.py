"""Self-contained in-vehicle voice assistant: domain DSL, NLU pipeline,
dialogue core, task actions, webhook channel, and evaluation bench."""

from .actions.pack import build_vehicle_pack, load_vehicle_pack
from .core.engine import DialogueEngine
from .dsl.parser import load_domain, parse_domain
from .dsl.serializer import serialize_domain
from .nlu.classifier import load_model, save_model, train
from .nlu.pipeline import NluResult, nlu
from .runtime import build_engine
from .wire import BotResponse, ChannelMessage, MediaRef

__version__ = "0.1.0"

__all__ = [
    "BotResponse",
    "ChannelMessage",
    "DialogueEngine",
    "MediaRef",
    "NluResult",
    "build_engine",
    "build_vehicle_pack",
    "load_domain",
    "load_model",
    "load_vehicle_pack",
    "nlu",
    "parse_domain",
    "save_model",
    "serialize_domain",
    "train",
    "__version__",
]
