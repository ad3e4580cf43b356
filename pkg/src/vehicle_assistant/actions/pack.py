"""The shipped vehicle domain pack: six task modules wired into stories with
confirmation sub-dialogues, greet/goodbye rules, and gazetteer entities."""

from __future__ import annotations

from pathlib import Path

from ..data import fixtures_dir, pack_dir
from ..dsl.parser import DOCUMENT_FILES, load_domain, parse_domain
from ..dsl.types import DomainSpec


def vehicle_pack_documents() -> dict[str, str]:
    """The pack's five domain documents, keyed by filename."""
    base = pack_dir()
    return {
        name: (base / name).read_text(encoding="utf-8")
        for name in DOCUMENT_FILES
        if (base / name).is_file()
    }


def load_vehicle_pack() -> DomainSpec:
    return load_domain(pack_dir())


def build_vehicle_pack(dest: str | Path) -> DomainSpec:
    """Write the pack's domain files (and provider fixtures) into ``dest``
    so a project can be scaffolded from them; returns the parsed spec."""
    target = Path(dest)
    target.mkdir(parents=True, exist_ok=True)
    docs = vehicle_pack_documents()
    for name, text in docs.items():
        (target / name).write_text(text, encoding="utf-8")
    fixtures_target = target / "fixtures"
    fixtures_target.mkdir(exist_ok=True)
    for fixture in sorted(fixtures_dir().glob("*.json")):
        (fixtures_target / fixture.name).write_text(fixture.read_text(encoding="utf-8"), encoding="utf-8")
    return parse_domain(docs)
