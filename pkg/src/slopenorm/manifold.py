"""Manifold data bundles and their on-disk JSON form.

A ManifoldData ties together a name, the boundary-slope set, and whatever
else is known: the cusp lattice, the norm data, essential-surface records,
and an optional certified meridian-norm value.  Loading re-validates every
invariant and reports all violations at once; saving is deterministic, with
rationals written as exact "p/q" strings, never as floats.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .cusp import CuspLattice
from .norm import BoundarySlopeSet, CSNormData
from .slopes import Slope

__all__ = [
    "SurfaceData",
    "ManifoldData",
    "ManifoldFormatError",
    "load",
    "save",
    "to_document",
    "from_document",
]

_RATIONAL_TEXT = re.compile(r"[+-]?\d+(?:/[1-9]\d*)?")


def _parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_TEXT.fullmatch(text.strip()):
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(text.strip())


@dataclass(frozen=True)
class SurfaceData:
    """Record of one essential surface: slope, Euler characteristic,
    boundary-component count, and the strict / ideal-point flags."""

    slope: Slope
    euler: int
    b: int
    strict: bool = False
    ideal_point: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.b, int) or isinstance(self.b, bool) or self.b < 1:
            raise ValueError("boundary component count must be a positive integer")
        if not isinstance(self.euler, int) or isinstance(self.euler, bool):
            raise ValueError("Euler characteristic must be an integer")


@dataclass(frozen=True)
class ManifoldData:
    """Named bundle of everything known about one manifold boundary."""

    name: str
    boundary_slopes: BoundarySlopeSet
    cusp: CuspLattice | None = None
    norm: CSNormData | None = None
    surfaces: tuple[SurfaceData, ...] = field(default=())
    meridian_norm_certificate: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "surfaces", tuple(self.surfaces))
        problems = self._membership_problems()
        if problems:
            raise ValueError("; ".join(problems))

    def _membership_problems(self) -> list[str]:
        problems = []
        if self.norm is not None:
            for s in self.norm.support:
                if s not in self.boundary_slopes:
                    problems.append(f"norm slope {s} not in boundary_slopes")
        for surf in self.surfaces:
            if surf.slope not in self.boundary_slopes:
                problems.append(f"surface slope {surf.slope} not in boundary_slopes")
        return problems


class ManifoldFormatError(ValueError):
    """Raised on load with the full list of violated invariants."""

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("invalid manifold document: " + "; ".join(self.problems))


def _parse_cusp(doc, problems: list[str]) -> CuspLattice | None:
    if doc is None:
        return None
    if not isinstance(doc, dict):
        problems.append("cusp must be an object")
        return None
    entries = {}
    for key in ("g_mm", "g_ml", "g_ll"):
        if key not in doc:
            problems.append(f"cusp missing {key}")
            continue
        try:
            entries[key] = _parse_rational(doc[key])
        except ValueError as exc:
            problems.append(f"cusp {key}: {exc}")
    maximal = doc.get("maximal", False)
    if not isinstance(maximal, bool):
        problems.append("cusp maximal flag must be a boolean")
        maximal = False
    if len(entries) != 3:
        return None
    g_mm, g_ml, g_ll = entries["g_mm"], entries["g_ml"], entries["g_ll"]
    if g_mm <= 0 or g_ll <= 0 or g_mm * g_ll - g_ml * g_ml <= 0:
        problems.append("Gram matrix is not positive definite")
        return None
    bare = CuspLattice(g_mm, g_ml, g_ll, maximal=False)
    if maximal:
        systole, _ = bare.systole_squared()
        if systole < 1:
            problems.append(f"maximal flag violates length >= 1 (systole^2 = {systole})")
            return None
    return CuspLattice(g_mm, g_ml, g_ll, maximal=maximal)


def _parse_norm(doc, problems: list[str]) -> CSNormData | None:
    if doc is None:
        return None
    if not isinstance(doc, dict) or not isinstance(doc.get("terms"), list):
        problems.append("culler_shalen must be an object with a terms list")
        return None
    local: list[str] = []
    terms = []
    for i, entry in enumerate(doc["terms"]):
        if not isinstance(entry, dict):
            local.append(f"norm term {i} must be an object")
            continue
        slope = None
        try:
            slope = Slope.parse(str(entry.get("slope")))
        except ValueError as exc:
            local.append(f"norm term {i}: {exc}")
        weight = entry.get("weight")
        if not isinstance(weight, int) or isinstance(weight, bool) or weight <= 0 or weight % 2:
            local.append(f"norm term {i}: weight must be positive even")
            weight = None
        if slope is not None and weight is not None:
            terms.append((slope, weight))
    if local:
        problems.extend(local)
        return None
    try:
        return CSNormData(tuple(terms))
    except ValueError as exc:
        problems.append(str(exc))
        return None


def _parse_surfaces(doc, problems: list[str]) -> tuple[SurfaceData, ...]:
    if doc is None:
        return ()
    if not isinstance(doc, list):
        problems.append("surfaces must be a list")
        return ()
    surfaces = []
    for i, entry in enumerate(doc):
        if not isinstance(entry, dict):
            problems.append(f"surface {i} must be an object")
            continue
        try:
            slope = Slope.parse(str(entry.get("slope")))
            surfaces.append(
                SurfaceData(
                    slope=slope,
                    euler=entry.get("euler"),
                    b=entry.get("boundary_components"),
                    strict=bool(entry.get("strict", False)),
                    ideal_point=bool(entry.get("ideal_point", False)),
                )
            )
        except (TypeError, ValueError) as exc:
            problems.append(f"surface {i}: {exc}")
    return tuple(surfaces)


def from_document(doc) -> ManifoldData:
    """Build a validated ManifoldData from a parsed JSON document.

    Rejection is total: every violated invariant is collected and reported
    in one ManifoldFormatError, and no partial object escapes.
    """
    if not isinstance(doc, dict):
        raise ManifoldFormatError(["document must be a JSON object"])
    problems: list[str] = []

    name = doc.get("name")
    if not isinstance(name, str) or not name:
        problems.append("missing or empty name")

    slopes = []
    raw_slopes = doc.get("boundary_slopes")
    if not isinstance(raw_slopes, list) or not raw_slopes:
        problems.append("missing boundary_slopes list")
    else:
        for i, text in enumerate(raw_slopes):
            try:
                slopes.append(Slope.parse(str(text)))
            except ValueError as exc:
                problems.append(f"boundary slope {i}: {exc}")

    bset = None
    if slopes:
        try:
            bset = BoundarySlopeSet(tuple(slopes))
        except ValueError as exc:
            problems.append(str(exc))

    cusp = _parse_cusp(doc.get("cusp"), problems)
    norm = _parse_norm(doc.get("culler_shalen"), problems)
    surfaces = _parse_surfaces(doc.get("surfaces"), problems)

    certificate = doc.get("meridian_norm_certificate")
    if certificate is not None and (not isinstance(certificate, int) or isinstance(certificate, bool)):
        problems.append("meridian_norm_certificate must be an integer")
        certificate = None

    if bset is not None:
        if norm is not None:
            for s in norm.support:
                if s not in bset:
                    problems.append(f"norm slope {s} not in boundary_slopes")
        for surf in surfaces:
            if surf.slope not in bset:
                problems.append(f"surface slope {surf.slope} not in boundary_slopes")

    if problems or bset is None:
        raise ManifoldFormatError(problems or ["missing boundary_slopes list"])
    return ManifoldData(
        name=name,
        boundary_slopes=bset,
        cusp=cusp,
        norm=norm,
        surfaces=surfaces,
        meridian_norm_certificate=certificate,
    )


def to_document(m: ManifoldData) -> dict:
    """Plain-JSON form of a ManifoldData; inverse of from_document."""
    doc: dict = {
        "name": m.name,
        "boundary_slopes": [str(s) for s in m.boundary_slopes],
    }
    if m.cusp is not None:
        doc["cusp"] = {
            "g_mm": str(m.cusp.g_mm),
            "g_ml": str(m.cusp.g_ml),
            "g_ll": str(m.cusp.g_ll),
            "maximal": m.cusp.maximal,
        }
    if m.norm is not None:
        doc["culler_shalen"] = {
            "terms": [{"slope": str(s), "weight": a} for s, a in m.norm.terms]
        }
    if m.surfaces:
        doc["surfaces"] = [
            {
                "slope": str(s.slope),
                "euler": s.euler,
                "boundary_components": s.b,
                "strict": s.strict,
                "ideal_point": s.ideal_point,
            }
            for s in m.surfaces
        ]
    if m.meridian_norm_certificate is not None:
        doc["meridian_norm_certificate"] = m.meridian_norm_certificate
    return doc


def load(path) -> ManifoldData:
    """Read and validate a manifold document from a JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ManifoldFormatError([f"malformed JSON: {exc}"]) from exc
    return from_document(doc)


def save(m: ManifoldData, path) -> None:
    """Write the document form with sorted keys; equal inputs give equal bytes."""
    text = json.dumps(to_document(m), indent=2, sort_keys=True) + "\n"
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
