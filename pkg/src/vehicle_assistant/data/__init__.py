"""Paths to the shipped domain pack, provider fixtures, eval set, and scripts."""

from importlib.resources import files
from pathlib import Path


def data_root() -> Path:
    return Path(str(files("vehicle_assistant") / "data"))


def pack_dir() -> Path:
    return data_root() / "pack"


def fixtures_dir() -> Path:
    return data_root() / "fixtures"


def scripts_dir() -> Path:
    return data_root() / "scripts"


def eval_dataset_path() -> Path:
    return data_root() / "eval.yml"
