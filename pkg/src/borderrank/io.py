"""JSON interchange: tensor files, decomposition certificates, ledgers.

Values travel as decimal-integer or "num/den" strings so that rational
entries round-trip exactly. Omitted entries are zero; duplicate index
triples are rejected. The content hash is taken over the canonicalized
entry list, so it does not depend on entry order in the file.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .decomposition import EpsDecomposition
from .errors import InputFormatError
from .exponent import BrFact
from .fields import QQ, field_from_tag
from .tensor import Tensor3

FORMAT_VERSION = 1


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_value(text, field):
    try:
        if isinstance(text, str):
            return field.convert(Fraction(text))
        if isinstance(text, int):
            return field.convert(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(f"bad entry value {text!r}: {exc}") from None
    raise InputFormatError(f"entry values must be strings or integers, "
                           f"got {type(text).__name__}")


def tensor_to_dict(T: Tensor3, name: str | None = None,
                   provenance: str | None = None) -> dict:
    entries = [{"i": i, "j": j, "k": k, "value": T.field.to_str(v)}
               for i, j, k, v in T.nonzero_entries()]
    doc = {
        "format": FORMAT_VERSION,
        "dims": list(T.dims),
        "field": T.field.tag,
        "entries": entries,
    }
    meta = {}
    if name:
        meta["name"] = name
    if provenance:
        meta["provenance"] = provenance
    if meta:
        doc["metadata"] = meta
    return doc


def tensor_from_dict(doc: dict) -> tuple:
    """Returns (tensor, metadata dict)."""
    if not isinstance(doc, dict):
        raise InputFormatError("tensor file must be a JSON object")
    try:
        dims = doc["dims"]
        field_tag = doc["field"]
        entries = doc["entries"]
    except KeyError as exc:
        raise InputFormatError(f"missing tensor file key: {exc}") from None
    if (not isinstance(dims, list) or len(dims) != 3
            or not all(isinstance(d, int) and d >= 1 for d in dims)):
        raise InputFormatError("dims must be three positive integers")
    try:
        field = field_from_tag(field_tag)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None
    a, b, c = dims
    T = Tensor3.zeros((a, b, c), field)
    seen = set()
    if not isinstance(entries, list):
        raise InputFormatError("entries must be a list")
    for ent in entries:
        try:
            i, j, k, raw = ent["i"], ent["j"], ent["k"], ent["value"]
        except (TypeError, KeyError):
            raise InputFormatError(f"malformed entry {ent!r}") from None
        if not all(isinstance(t, int) for t in (i, j, k)):
            raise InputFormatError(f"entry indices must be integers: {ent!r}")
        if not (0 <= i < a and 0 <= j < b and 0 <= k < c):
            raise InputFormatError(f"entry index out of range: {ent!r}")
        if (i, j, k) in seen:
            raise InputFormatError(f"duplicate entry at ({i},{j},{k})")
        seen.add((i, j, k))
        T.entries[i][j][k] = _parse_value(raw, field)
    meta = doc.get("metadata") or {}
    if not isinstance(meta, dict):
        raise InputFormatError("metadata must be an object")
    return T, meta


def load_tensor(path: str) -> tuple:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None
    return tensor_from_dict(doc)


def save_tensor(T: Tensor3, path: str, name: str | None = None,
                provenance: str | None = None) -> None:
    doc = tensor_to_dict(T, name=name, provenance=provenance)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def content_hash(T: Tensor3) -> str:
    """Order-independent hash of (dims, field, nonzero entries)."""
    payload = canonical_json({
        "dims": list(T.dims),
        "field": T.field.tag,
        "entries": [[i, j, k, T.field.to_str(v)]
                    for i, j, k, v in T.nonzero_entries()],
    })
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def convert_tensor(T: Tensor3, field) -> Tensor3:
    """Re-express a tensor over another field (rational to prime is a
    reduction; anything else must match)."""
    if T.field == field:
        return T
    if T.field != QQ:
        raise InputFormatError(
            f"cannot convert entries from {T.field.tag} to {field.tag}")
    out = Tensor3.zeros(T.dims, field)
    for i, j, k, v in T.nonzero_entries():
        out.entries[i][j][k] = field.convert(v)
    return out


# ---------------------------------------------------------------------------
# decomposition certificates

def _parse_poly(raw):
    if isinstance(raw, list):
        return [x for x in raw]
    return [raw]


def decomposition_from_dict(doc: dict) -> EpsDecomposition:
    if not isinstance(doc, dict):
        raise InputFormatError("certificate must be a JSON object")
    try:
        r = doc["r"]
        h = doc["h"]
        raw_terms = doc["terms"]
    except KeyError as exc:
        raise InputFormatError(f"missing certificate key: {exc}") from None
    if not isinstance(r, int) or not isinstance(h, int) or h < 0 or r < 0:
        raise InputFormatError("r and h must be nonnegative integers")
    if not isinstance(raw_terms, list) or len(raw_terms) != r:
        raise InputFormatError("terms must be a list of length r")
    terms = []
    for term in raw_terms:
        try:
            av = [_parse_poly(x) for x in term["a"]]
            bv = [_parse_poly(x) for x in term["b"]]
            cv = [_parse_poly(x) for x in term["c"]]
        except (TypeError, KeyError):
            raise InputFormatError(f"malformed term {term!r}") from None
        terms.append((av, bv, cv))
    return EpsDecomposition(r=r, h=h, terms=terms)


def load_decomposition(path: str) -> EpsDecomposition:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None
    return decomposition_from_dict(doc)


# ---------------------------------------------------------------------------
# ledgers of border-rank facts

def facts_to_list(facts) -> list:
    return [{"tensor_id": f.tensor_id, "kind": f.kind, "value": f.value,
             "provenance": f.provenance} for f in facts]


def facts_from_list(items) -> list:
    facts = []
    if not isinstance(items, list):
        raise InputFormatError("ledger must be a JSON list of fact objects")
    for item in items:
        try:
            facts.append(BrFact(item["tensor_id"], item["kind"],
                                item["value"], item.get("provenance", "")))
        except (TypeError, KeyError, ValueError) as exc:
            raise InputFormatError(f"malformed fact {item!r}: {exc}") from None
    return facts


def load_ledger(path: str) -> list:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return facts_from_list(json.load(fh))
    except FileNotFoundError:
        return []
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from None


def save_ledger(facts, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(facts_to_list(facts), fh, indent=2, sort_keys=True)
        fh.write("\n")
