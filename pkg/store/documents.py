"""
store/documents.py
~~~~~~~~~~~~~~~~~~
SpectrumDocument: the JSON interchange format for computed spectra, plus
its CSV rendering.

Floats are written with 17 significant digits in both JSON and CSV. That
always round-trips a double, so a document read back compares equal to the
one written. Key order is fixed and nothing time- or locale-dependent is
stored.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable

from config import SCHEMA_VERSION, TOOL_VERSION
from services.spectrum import Eigenvalue, ModeFamily
from utils.errors import SchemaMismatch

CSV_HEADER = ("re", "im", "n", "family", "multiplicity", "w0_re", "w0_im", "residual_poly", "residual_hankel")

_FLOAT_FIELDS = ("re", "im", "w0_re", "w0_im", "residual_poly", "residual_hankel")
_INT_FIELDS   = ("n", "multiplicity")
_DOC_FIELDS   = ("schema_version", "tool_version", "gamma", "n_max", "precision_bits", "eigenvalues")


def _g17(x: float) -> str:
    return format(x, ".17g")


def json_text(value: Any, depth: int = 0) -> str:
    """JSON with a two-space indent and every float at 17 significant digits."""
    inner, outer = "  " * (depth + 1), "  " * depth
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = (f"{inner}{json.dumps(str(k))}: {json_text(v, depth + 1)}" for k, v in value.items())
        return "{\n" + ",\n".join(items) + f"\n{outer}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = (f"{inner}{json_text(v, depth + 1)}" for v in value)
        return "[\n" + ",\n".join(items) + f"\n{outer}]"
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"{value!r} has no JSON representation")
        return _g17(value)
    return json.dumps(value)


@dataclass(frozen=True)
class EigenRecord:
    re: float
    im: float
    n: int
    family: str
    multiplicity: int
    w0_re: float
    w0_im: float
    residual_poly: float
    residual_hankel: float

    @classmethod
    def from_eigenvalue(cls, e: Eigenvalue) -> "EigenRecord":
        return cls(
            re=float(e.lambda_.re),
            im=float(e.lambda_.im),
            n=e.n,
            family=e.family.value,
            multiplicity=e.multiplicity,
            w0_re=float(e.w0.re),
            w0_im=float(e.w0.im),
            residual_poly=float(e.residual_poly),
            residual_hankel=float(e.residual_hankel),
        )

    @classmethod
    def from_dict(cls, data: Any) -> "EigenRecord":
        if not isinstance(data, dict) or set(data) != set(CSV_HEADER):
            raise SchemaMismatch(f"eigenvalue record must have exactly the fields {', '.join(CSV_HEADER)}")
        for key in _FLOAT_FIELDS:
            if isinstance(data[key], bool) or not isinstance(data[key], (int, float)):
                raise SchemaMismatch(f"field {key!r} must be a number")
        for key in _INT_FIELDS:
            if isinstance(data[key], bool) or not isinstance(data[key], int):
                raise SchemaMismatch(f"field {key!r} must be an integer")
        if data["family"] not in {f.value for f in ModeFamily}:
            raise SchemaMismatch(f"unknown family {data['family']!r}")
        return cls(**{k: float(data[k]) if k in _FLOAT_FIELDS else data[k] for k in CSV_HEADER})

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> list[str]:
        return [
            _g17(self.re), _g17(self.im), str(self.n), self.family, str(self.multiplicity),
            _g17(self.w0_re), _g17(self.w0_im), _g17(self.residual_poly), _g17(self.residual_hankel),
        ]


@dataclass(frozen=True)
class SpectrumDocument:
    gamma: float
    n_max: int
    precision_bits: int
    eigenvalues: tuple[EigenRecord, ...] = field(default_factory=tuple)
    schema_version: str = SCHEMA_VERSION
    tool_version: str = TOOL_VERSION

    @classmethod
    def from_spectrum(cls, gamma: float, n_max: int, precision_bits: int,
                      eigs: Iterable[Eigenvalue]) -> "SpectrumDocument":
        return cls(
            gamma=float(gamma),
            n_max=n_max,
            precision_bits=precision_bits,
            eigenvalues=tuple(EigenRecord.from_eigenvalue(e) for e in eigs),
        )

    # ── JSON ──────────────────────────────────────────────────────────────────

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "tool_version":   self.tool_version,
            "gamma":          self.gamma,
            "n_max":          self.n_max,
            "precision_bits": self.precision_bits,
            "eigenvalues":    [r.to_dict() for r in self.eigenvalues],
        }

    def to_json(self) -> str:
        return json_text(self.to_dict()) + "\n"

    @classmethod
    def from_dict(cls, data: Any) -> "SpectrumDocument":
        if not isinstance(data, dict):
            raise SchemaMismatch("a spectrum document must be a JSON object")
        missing = [k for k in _DOC_FIELDS if k not in data]
        if missing:
            raise SchemaMismatch(f"missing fields: {', '.join(missing)}")
        if data["schema_version"] != SCHEMA_VERSION:
            raise SchemaMismatch(
                f"schema_version {data['schema_version']!r} does not match {SCHEMA_VERSION!r}"
            )
        if not isinstance(data["eigenvalues"], list):
            raise SchemaMismatch("eigenvalues must be a list")
        try:
            gamma = float(data["gamma"])
            n_max = int(data["n_max"])
            precision_bits = int(data["precision_bits"])
        except (TypeError, ValueError) as exc:
            raise SchemaMismatch(f"bad header field: {exc}") from exc
        return cls(
            gamma=gamma,
            n_max=n_max,
            precision_bits=precision_bits,
            eigenvalues=tuple(EigenRecord.from_dict(r) for r in data["eigenvalues"]),
            schema_version=data["schema_version"],
            tool_version=str(data["tool_version"]),
        )

    @classmethod
    def from_json(cls, text: str) -> "SpectrumDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaMismatch(f"not valid JSON: {exc}") from exc
        return cls.from_dict(data)

    # ── CSV ───────────────────────────────────────────────────────────────────

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(r.csv_row() for r in self.eigenvalues)
        return buffer.getvalue()

    def render(self, fmt: str) -> str:
        return self.to_csv() if fmt == "csv" else self.to_json()
