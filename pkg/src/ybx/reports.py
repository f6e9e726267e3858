"""JSON certificates emitted by every theorem check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def _plain(obj: Any):
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_plain(v) for v in obj]
        return sorted(items, key=repr) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    return str(obj)


@dataclass
class Certificate:
    theorem: str
    parameters: dict
    status: str  # "pass" or "fail"
    witness: Any = None
    counterexample: Any = None
    degree_bound: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {
            "theorem": self.theorem,
            "parameters": _plain(self.parameters),
            "status": self.status,
            "witness": _plain(self.witness),
            "counterexample": _plain(self.counterexample),
            "degree_bound": self.degree_bound,
        }
        out.update(_plain(self.extra))
        return out

    def to_json(self) -> str:
        return dumps(self.to_dict())


def dumps(obj: Any) -> str:
    return json.dumps(_plain(obj), sort_keys=True, ensure_ascii=False, indent=2)
