"""Certificate report assembly and reproducibility hashing.

A report is reproducible byte for byte given (tensor, seed, version)
except for wall-time fields, which are stripped before hashing.
"""

from __future__ import annotations

import hashlib

from .certificates import BatteryResult
from .io import canonical_json, content_hash
from .tensor import Tensor3

TOOL_VERSION = "0.1.0"


def _obstruction_dict(rec) -> dict:
    out = {
        "name": rec.name,
        "verdict": rec.verdict,
        "payload": _jsonable(rec.payload),
        "field": rec.field_tag,
    }
    if rec.bound is not None:
        out["bound"] = rec.bound
    if rec.seed is not None:
        out["seed"] = rec.seed
    if rec.wall_ms is not None:
        out["wall_ms"] = round(rec.wall_ms, 3)
    return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def strip_volatile(doc):
    """Copy of the report without wall-time fields."""
    if isinstance(doc, dict):
        return {k: strip_volatile(v) for k, v in doc.items()
                if k != "wall_ms"}
    if isinstance(doc, list):
        return [strip_volatile(v) for v in doc]
    return doc


def report_hash(doc: dict) -> str:
    body = {k: v for k, v in strip_volatile(doc).items()
            if k != "report_hash"}
    return hashlib.sha256(canonical_json(body).encode("utf-8")).hexdigest()


def build_report(T: Tensor3, battery: BatteryResult,
                 name: str | None = None, upper_facts=None,
                 target_r: int | None = None,
                 exact_recheck: dict | None = None) -> dict:
    doc = {
        "tool_version": TOOL_VERSION,
        "tensor": {
            "name": name or "",
            "dims": list(T.dims),
            "field": T.field.tag,
            "content_hash": content_hash(T),
        },
        "seed": battery.seed,
        "concise": battery.concise,
        "slice_dims": list(battery.slice_dims),
        "genericity": _jsonable(battery.genericity),
        "obstructions": [_obstruction_dict(rec) for rec in battery.records],
        "aggregate_lower_bound": battery.aggregate_lower_bound,
        "minimal_border_rank": battery.minimal_border_rank,
    }
    if upper_facts:
        doc["upper_bounds"] = [{"tensor_id": f.tensor_id, "value": f.value,
                                "provenance": f.provenance}
                               for f in upper_facts]
    if target_r is not None:
        doc["target_r"] = target_r
        doc["border_rank_exceeds_target"] = \
            battery.aggregate_lower_bound > target_r
    if exact_recheck is not None:
        doc["exact_recheck"] = _jsonable(exact_recheck)
    doc["report_hash"] = report_hash(doc)
    return doc


def summary_lines(doc: dict) -> list:
    """Human-oriented one-line-per-method summary."""
    t = doc["tensor"]
    lines = [
        f"tensor {t['name'] or t['content_hash'][:12]}  "
        f"dims={tuple(t['dims'])}  field={t['field']}",
        f"concise={doc['concise']}  slice_dims={tuple(doc['slice_dims'])}  "
        f"seed={doc['seed']}",
    ]
    for rec in doc["obstructions"]:
        bound = f"  bound={rec['bound']}" if "bound" in rec else ""
        lines.append(f"  {rec['name']:<16} {rec['verdict']:<12}{bound}")
    lines.append(f"aggregate lower bound: {doc['aggregate_lower_bound']}")
    lines.append(f"minimal border rank:   {doc['minimal_border_rank']}")
    if "upper_bounds" in doc:
        for fact in doc["upper_bounds"]:
            lines.append(f"upper bound: {fact['tensor_id']} <= "
                         f"{fact['value']} ({fact['provenance']})")
    if "target_r" in doc:
        verdict = ("exceeds" if doc["border_rank_exceeds_target"]
                   else "does not exceed")
        lines.append(f"certified bound {verdict} target r="
                     f"{doc['target_r']}")
    return lines
