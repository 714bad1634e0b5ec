"""JSON export of MV polytopes (schema ``foldmv/1``)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .folding import build_folding, cycle_notation, is_sigma_invariant, parse_sigma
from .lusztig import LusztigDatum
from .polytope import MVPolytope, build_polytope, lies_in_weyl_hull
from .root_datum import parse_type

SCHEMA = "foldmv/1"


@dataclass(frozen=True)
class PolytopeRecord:
    type: str
    rank: int
    sigma: str | None
    base_word: tuple[int, ...]
    datum: tuple[int, ...]
    coweight: tuple[int, ...]
    vertices: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    sigma_invariant: bool | None = None
    lam: tuple[int, ...] | None = None
    in_vlambda: bool | None = None

    def to_json(self) -> dict:
        return {
            "type": self.type,
            "rank": self.rank,
            "sigma": self.sigma,
            "base_word": list(self.base_word),
            "datum": list(self.datum),
            "coweight": list(self.coweight),
            "vertices": [{"word": list(w), "coweight": list(mu)} for w, mu in self.vertices],
            "flags": {"sigma_invariant": self.sigma_invariant, "in_vlambda": self.in_vlambda},
            "lambda": None if self.lam is None else list(self.lam),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PolytopeRecord":
        return cls(
            type=obj["type"],
            rank=int(obj["rank"]),
            sigma=obj["sigma"],
            base_word=tuple(obj["base_word"]),
            datum=tuple(obj["datum"]),
            coweight=tuple(obj["coweight"]),
            vertices=tuple((tuple(v["word"]), tuple(v["coweight"])) for v in obj["vertices"]),
            sigma_invariant=obj["flags"]["sigma_invariant"],
            lam=None if obj.get("lambda") is None else tuple(obj["lambda"]),
            in_vlambda=obj["flags"]["in_vlambda"],
        )


def record_from_polytope(
    polytope: MVPolytope, sigma: Sequence[int] | None = None, lam: Sequence[int] | None = None
) -> PolytopeRecord:
    root = polytope.root
    invariant = None
    if sigma is not None:
        invariant = is_sigma_invariant(build_folding(root, tuple(sigma)), polytope)
    return PolytopeRecord(
        type=root.name,
        rank=root.rank,
        sigma=None if sigma is None else cycle_notation(sigma),
        base_word=polytope.base_word,
        datum=polytope.datum.values,
        coweight=polytope.coweight,
        vertices=tuple((w.word, mu) for w, mu in polytope.items()),
        sigma_invariant=invariant,
        lam=None if lam is None else tuple(lam),
        in_vlambda=None if lam is None else lies_in_weyl_hull(polytope, lam),
    )


def rebuild(record: PolytopeRecord) -> PolytopeRecord:
    """Recompute a record from its type, word and datum."""
    root = parse_type(record.type)
    polytope = build_polytope(LusztigDatum(root, record.base_word, record.datum))
    sigma = None if record.sigma is None else parse_sigma(root, record.sigma)
    return record_from_polytope(polytope, sigma, record.lam)


def export_json(records: Iterable[PolytopeRecord]) -> bytes:
    doc = {"schema": SCHEMA, "records": [r.to_json() for r in records]}
    return (json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def load_records(data: bytes | str) -> list[PolytopeRecord]:
    doc = json.loads(data)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return [PolytopeRecord.from_json(obj) for obj in doc["records"]]


__all__ = ["PolytopeRecord", "SCHEMA", "export_json", "load_records", "rebuild", "record_from_polytope"]
