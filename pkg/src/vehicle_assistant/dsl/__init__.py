"""Declarative domain DSL: parsing, serialization, and linting."""

from .errors import DomainError, DomainSyntaxError, SourceLocation, ValidationError
from .lint import LintWarning, lint_domain
from .parser import DOCUMENT_FILES, load_domain, parse_domain, parse_example_markup, render_example_markup
from .serializer import serialize_domain
from .types import (
    ACTION_DEFAULT_FALLBACK,
    ACTION_LISTEN,
    BUILTIN_ACTIONS,
    RESERVED_RESPONSES,
    BotStep,
    DomainSpec,
    EntityAnnotation,
    EntityDef,
    IntentDef,
    PipelineConfig,
    ResponseDef,
    RuleDef,
    SlotDef,
    StoryDef,
    UserStep,
)

__all__ = [
    "ACTION_DEFAULT_FALLBACK",
    "ACTION_LISTEN",
    "BUILTIN_ACTIONS",
    "BotStep",
    "DOCUMENT_FILES",
    "DomainError",
    "DomainSpec",
    "DomainSyntaxError",
    "EntityAnnotation",
    "EntityDef",
    "IntentDef",
    "LintWarning",
    "PipelineConfig",
    "RESERVED_RESPONSES",
    "ResponseDef",
    "RuleDef",
    "SlotDef",
    "SourceLocation",
    "StoryDef",
    "UserStep",
    "ValidationError",
    "lint_domain",
    "load_domain",
    "parse_domain",
    "parse_example_markup",
    "render_example_markup",
    "serialize_domain",
]
