"""Experiment specifications: a flat ``key = value`` text format.

List-valued keys take comma-separated items.  Size grids accept integers, reals
or exponents of the modulus written ``q^0.75`` (resolved per modulus, rounded).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields

from ..errors import SpecParse, UnknownKind

KINDS = (
    "salie-verify",
    "bilinear-sweep",
    "type2-sweep",
    "hyperbolic-sweep",
    "prime-sum",
    "vaughan-check",
    "hb-check",
    "distribution",
    "discrepancy",
)

DEFAULT_BUDGET = 10**9

_LIST_KEYS = ("q", "a", "b", "lambda", "M", "N", "P", "U", "V", "J", "hmax")


@dataclass
class ExperimentSpec:
    kind: str
    q: list[int] = field(default_factory=list)
    a: list[str] = field(default_factory=list)
    b: list[str] = field(default_factory=list)
    lam: list[str] = field(default_factory=list)
    shifts: str = ""  # "random:count:seed" draws (a, b, lambda) instead of the lists
    M: list[str] = field(default_factory=list)
    N: list[str] = field(default_factory=list)
    P: list[str] = field(default_factory=list)
    U: list[str] = field(default_factory=list)
    V: list[str] = field(default_factory=list)
    J: list[str] = field(default_factory=list)
    hmax: list[str] = field(default_factory=list)
    seeds: int = 1  # weight draws per grid point
    cal_c: float = 10.0
    cal_kappa: float = 0.0
    seed: int = 0
    out: str = "-"
    format: str = "csv"
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnknownKind(f"unknown experiment kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.shifts:
            parse_random_shifts(self.shifts)
        if not 0 <= self.seed < 2**64:
            raise SpecParse("seed must be a 64-bit unsigned integer")

    # serialisation -----------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            key = _external(f.name)
            value = getattr(self, f.name)
            if isinstance(value, list):
                value = ",".join(str(v) for v in value)
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{key} = {value}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {_external(f.name): getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_text(cls, text: str, overrides: dict | None = None) -> ExperimentSpec:
        raw: dict[str, tuple[int, str]] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SpecParse(f"line {lineno}: expected 'key = value', got {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            raw[key] = (lineno, value)
        for key, value in (overrides or {}).items():
            if value is not None:
                raw[key] = (0, str(value))
        return cls._from_raw(raw)

    @classmethod
    def _from_raw(cls, raw: dict) -> ExperimentSpec:
        names = {_external(f.name): f for f in fields(cls)}
        kwargs = {}
        for key, (lineno, value) in raw.items():
            where = f"line {lineno}" if lineno else "command line"
            if key not in names:
                raise SpecParse(f"{where}: unknown field {key!r}")
            f = names[key]
            try:
                kwargs[f.name] = _convert(f.name, key, value)
            except ValueError as exc:
                raise SpecParse(f"{where}: bad value for {key!r}: {exc}") from None
        if "kind" not in kwargs:
            raise SpecParse("missing required field 'kind'")
        return cls(**kwargs)


def _external(name: str) -> str:
    return "lambda" if name == "lam" else name


def _convert(name: str, key: str, value: str):
    if key in _LIST_KEYS:
        items = [v.strip() for v in value.split(",") if v.strip()]
        if key == "q":
            return [int(v) for v in items]
        for v in items:
            resolve(v, 3)  # validates syntax
        return items
    if name in ("seed", "budget", "seeds"):
        return int(value)
    if name in ("cal_c", "cal_kappa"):
        return float(value)
    return value


def resolve(token: str, q: int) -> float:
    """Evaluate a grid token: a number, ``q``, ``q^e`` (rounded) or ``ceil(q^e)``."""
    token = token.strip()
    if token == "q":
        return float(q)
    if token.startswith("q^"):
        return float(round(q ** float(token[2:])))
    if token.startswith("ceil(q^") and token.endswith(")"):
        return float(math.ceil(q ** float(token[7:-1])))
    return float(token)


def parse_random_shifts(text: str) -> tuple[int, int]:
    parts = text.split(":")
    if len(parts) != 3 or parts[0] != "random":
        raise SpecParse(f"shifts must look like random:count:seed, got {text!r}")
    try:
        return int(parts[1]), int(parts[2])
    except ValueError:
        raise SpecParse(f"shifts must look like random:count:seed, got {text!r}") from None
