"""SquareDocument JSON (schema 1).

::

    {"schema": 1,
     "field": {"p": 2, "n": 2, "modulus": [1, 1, 1]},   # or "group": {"cyclic": [6]}
     "blocks": [[[x, y], ...], ...],
     "labels": [1, 2, ...]}

Cells are pairs of element indices in [0, D): field elements use their
polynomial-basis index, cyclic-group elements their position in the group's
element order.  ``labels[j]`` is the number written in the cells of block j.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidArgument
from .finite_field import make_field
from .squares import CyclicGroup, FieldGroup, GroupSpec, Square, square_from_partition

SCHEMA = 1


class DocumentError(InvalidArgument):
    """Malformed or inconsistent SquareDocument."""


def _group_descriptor(group: GroupSpec) -> tuple[str, dict]:
    if isinstance(group, FieldGroup):
        F = group.field
        return "field", {"p": F.p, "n": F.n, "modulus": list(F.modulus)}
    if isinstance(group, CyclicGroup):
        return "group", {"cyclic": list(group.orders)}
    raise DocumentError(f"cannot serialise group {group!r}")


def _encode(group: GroupSpec, a) -> int:
    return a if isinstance(group, FieldGroup) else group.rank(a)


def _decode(group: GroupSpec, i) -> object:
    if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < group.order:
        raise DocumentError(f"element index {i!r} out of range [0, {group.order})")
    return i if isinstance(group, FieldGroup) else group.elements[i]


def to_document(S: Square) -> dict:
    key, desc = _group_descriptor(S.group)
    return {
        "schema": SCHEMA,
        key: desc,
        "blocks": [[[_encode(S.group, x), _encode(S.group, y)] for x, y in b] for b in S.blocks],
        "labels": list(range(1, len(S.blocks) + 1)),
    }


def _parse_group(doc: dict) -> GroupSpec:
    if "field" in doc:
        f = doc["field"]
        try:
            F = make_field(f["p"], f["n"])
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"bad field descriptor: {exc}") from None
        except InvalidArgument as exc:
            raise DocumentError(str(exc)) from None
        if "modulus" in f and list(f["modulus"]) != list(F.modulus):
            raise DocumentError(f"unsupported modulus {f['modulus']}, expected {list(F.modulus)}")
        return FieldGroup(F)
    if "group" in doc:
        try:
            return CyclicGroup(doc["group"]["cyclic"])
        except (KeyError, TypeError) as exc:
            raise DocumentError(f"bad group descriptor: {exc}") from None
    raise DocumentError("document needs a 'field' or 'group' descriptor")


def from_document(doc) -> Square:
    if not isinstance(doc, dict):
        raise DocumentError("a SquareDocument must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema {doc.get('schema')!r}")
    group = _parse_group(doc)
    blocks = doc.get("blocks")
    if not isinstance(blocks, list):
        raise DocumentError("'blocks' must be a list")
    try:
        cells = [[(_decode(group, c[0]), _decode(group, c[1])) for c in b] for b in blocks]
    except (TypeError, IndexError, KeyError):
        raise DocumentError("cells must be [x, y] index pairs") from None
    labels = doc.get("labels", list(range(1, len(blocks) + 1)))
    valid = (
        isinstance(labels, list)
        and all(isinstance(x, int) and not isinstance(x, bool) for x in labels)
        and sorted(labels) == list(range(1, len(blocks) + 1))
    )
    if not valid:
        raise DocumentError("labels must be a permutation of 1..D")
    ordered = [None] * len(blocks)
    for lab, b in zip(labels, cells):
        ordered[lab - 1] = b
    try:
        return square_from_partition(group, ordered)
    except InvalidArgument as exc:
        raise DocumentError(str(exc)) from None


def dumps(docs) -> str:
    return json.dumps(docs, indent=None, separators=(", ", ": ")) + "\n"


def load_squares(path) -> list[Square]:
    """Read a file holding one SquareDocument or a JSON array of them."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"{path}: {exc}") from None
    docs = data if isinstance(data, list) else [data]
    return [from_document(d) for d in docs]
