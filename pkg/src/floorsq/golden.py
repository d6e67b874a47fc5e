"""Immutable reference data shipped with the package, checksummed on load."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources


class GoldenCorrupted(RuntimeError):
    pass


def payload_checksum(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class GoldenSet:
    identifier: str
    source: str
    payload: dict
    checksum: str


def load(identifier: str) -> GoldenSet:
    text = resources.files("floorsq").joinpath("data", f"{identifier}.json").read_text()
    doc = json.loads(text)
    if payload_checksum(doc["payload"]) != doc["checksum"]:
        raise GoldenCorrupted(f"golden file {identifier!r} does not match its checksum")
    return GoldenSet(doc["identifier"], doc["source"], doc["payload"], doc["checksum"])


def _triples(rows):
    return [tuple(int(v) for v in t) for t in rows]


def table1() -> dict[Fraction, list]:
    """alpha -> sorted index triples of U_{<=10^4}(alpha)."""
    g = load("table1")
    return {Fraction(r["alpha"]): _triples(r["index_triples"]) for r in g.payload["rows"]}


def table1_labels() -> dict[Fraction, str]:
    return {Fraction(r["alpha"]): r["label"] for r in load("table1").payload["rows"]}


def v46300() -> list:
    return _triples(load("v46300").payload["index_triples"])
