"""Domain-spec files: the JSON schema the CLI reads regions from.

Two forms are accepted:

* named: ``{"shape": "ball", "params": ["3/2"]}`` with shapes ball(r),
  ellipsoid(a, b), polydisk(a, b), all convex flavor;
* explicit: ``{"flavor": "convex", "vertices": [["8","0"],["8","2"],["0","2"]]}``
  listing the chain from (a, 0) to (0, b).

Rationals travel as strings "p/q" or "n" and are parsed exactly; float
literals are rejected with a hint.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    CONCAVE,
    CONVEX,
    Flavor,
    ToricRegion,
    ball,
    ellipsoid,
    polydisk,
)

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")

_SHAPE_ARITY = {"ball": 1, "ellipsoid": 2, "polydisk": 2}


class SpecError(ValueError):
    pass


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise SpecError(
            f"expected a rational string like \"3/2\" or \"2\", got {text!r}"
            " (float literals are not accepted; use p/q)"
        )
    s = str(text).strip()
    if not _RATIONAL_RE.match(s):
        raise SpecError(
            f"bad rational {s!r}; use an integer or p/q string"
            " (float literals are not accepted)"
        )
    if "/" in s and int(s.split("/")[1]) == 0:
        raise SpecError(f"zero denominator in {s!r}")
    return Fraction(s)


def format_rational(value) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class DomainSpec:
    """Normalized domain description: named shape or explicit vertex chain."""

    shape: str | None = None
    params: tuple[Fraction, ...] = ()
    flavor: Flavor | None = None
    vertices: tuple[tuple[Fraction, Fraction], ...] = ()

    def is_named(self) -> bool:
        return self.shape is not None


def parse_domain_spec(obj) -> DomainSpec:
    if not isinstance(obj, dict):
        raise SpecError("domain spec must be a JSON object")
    if "shape" in obj:
        shape = obj["shape"]
        if shape not in _SHAPE_ARITY:
            raise SpecError(f"unknown shape {shape!r}; use ball, ellipsoid, or polydisk")
        raw = obj.get("params")
        if not isinstance(raw, list) or len(raw) != _SHAPE_ARITY[shape]:
            raise SpecError(f"shape {shape!r} takes {_SHAPE_ARITY[shape]} parameter(s)")
        params = tuple(parse_rational(p) for p in raw)
        if any(p <= 0 for p in params):
            raise SpecError("shape parameters must be positive")
        spec = DomainSpec(shape=shape, params=params)
    elif "vertices" in obj:
        flavor = obj.get("flavor")
        if flavor not in (CONVEX, CONCAVE):
            raise SpecError("explicit specs need \"flavor\": \"convex\" or \"concave\"")
        raw = obj["vertices"]
        if not isinstance(raw, list) or not all(isinstance(v, list) and len(v) == 2 for v in raw):
            raise SpecError("\"vertices\" must be a list of [x, y] rational-string pairs")
        vertices = tuple((parse_rational(x), parse_rational(y)) for x, y in raw)
        spec = DomainSpec(flavor=flavor, vertices=vertices)
    else:
        raise SpecError("domain spec needs either \"shape\" or \"vertices\"")
    to_region(spec)  # validate eagerly so errors carry spec context
    return spec


def to_region(spec: DomainSpec) -> ToricRegion:
    if spec.is_named():
        if spec.shape == "ball":
            return ball(spec.params[0])
        if spec.shape == "ellipsoid":
            return ellipsoid(*spec.params)
        return polydisk(*spec.params)
    try:
        return ToricRegion(spec.flavor, spec.vertices)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def normalize(spec: DomainSpec) -> dict:
    """Canonical JSON object; serialize -> parse is the identity."""
    if spec.is_named():
        return {"shape": spec.shape, "params": [format_rational(p) for p in spec.params]}
    return {
        "flavor": spec.flavor,
        "vertices": [[format_rational(x), format_rational(y)] for x, y in spec.vertices],
    }


def load_domain_file(path: str) -> DomainSpec:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise SpecError(f"cannot read domain file {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON ({exc.msg})") from exc
    if isinstance(obj, dict):
        for key in ("params",):
            raw = obj.get(key)
            if isinstance(raw, list) and any(isinstance(p, float) for p in raw):
                raise SpecError(f"{path}: float literal in {key}; use rational strings p/q")
        if isinstance(obj.get("vertices"), list):
            for v in obj["vertices"]:
                if isinstance(v, list) and any(isinstance(c, float) for c in v):
                    raise SpecError(f"{path}: float literal in vertices; use rational strings p/q")
    try:
        return parse_domain_spec(obj)
    except SpecError as exc:
        raise SpecError(f"{path}: {exc}") from exc
