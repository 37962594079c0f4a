"""Machine-readable reports with a lossless JSON round trip.

Results are stored as JSON-native structures (ints, strings, lists,
dicts); exact rationals are encoded as "num/den" strings. Multi-index
positions are 1-based in reports, matching the human-readable output;
the Python API itself is 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

SCHEMA_VERSION = 1


def encode_fraction(x):
    return f"{x.numerator}/{x.denominator}"


def decode_fraction(s):
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def one_based(index):
    return [i + 1 for i in index]


@dataclass(frozen=True)
class Report:
    command: str
    inputs: dict
    results: dict
    fixture: str | None = None
    schema: int = SCHEMA_VERSION

    def to_json(self, indent=None):
        payload = {
            "schema": self.schema,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "fixture": self.fixture,
        }
        return json.dumps(payload, sort_keys=True, indent=indent)

    @staticmethod
    def from_json(text):
        payload = json.loads(text)
        schema = payload.get("schema")
        if schema != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema: {schema!r}")
        return Report(
            command=payload["command"],
            inputs=payload["inputs"],
            results=payload["results"],
            fixture=payload.get("fixture"),
            schema=schema,
        )


def monomial_str(exp):
    """Readable monomial like z1^5 z2^3; '1' for the zero exponent."""
    parts = []
    for i, a in enumerate(exp):
        if a == 1:
            parts.append(f"z{i + 1}")
        elif a > 1:
            parts.append(f"z{i + 1}^{a}")
    return " ".join(parts) if parts else "1"


def ideal_str(gens):
    return "(" + ", ".join(monomial_str(g) for g in gens) + ")"


def index_str(index):
    return "{" + ",".join(str(i + 1) for i in index) + "}"


def valuation_str(normal):
    terms = []
    for i, a in enumerate(normal):
        if a == 1:
            terms.append(f"b{i + 1}")
        elif a != 0:
            terms.append(f"{a} b{i + 1}")
    return " + ".join(terms)
