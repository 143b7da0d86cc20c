"""Reading and writing structure files.

A structure file is JSON with tables keyed by element name.  The order
can be given as covering pairs (any generating relation works), as a
full 0/1 matrix, or implicitly through explicit join and meet tables;
when both an order and explicit tables are present they must agree.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidBaseLattice, MalformedTables, StructureFileError
from .modelgen import Lattice, lattice_from_order
from .structure import Structure, order_from_pairs, order_tables


def _name_index(elements) -> dict[str, int]:
    index = {}
    for i, name in enumerate(elements):
        if name in index:
            raise StructureFileError(f"duplicate element name: {name!r}")
        index[name] = i
    return index


def _parse_table(data, field: str, index: dict[str, int]):
    n = len(index)
    if not isinstance(data, list) or len(data) != n:
        raise StructureFileError(f"{field} must be a list of {n} rows")
    rows = []
    for row in data:
        if not isinstance(row, list) or len(row) != n:
            raise StructureFileError(f"{field} rows must have {n} entries")
        try:
            rows.append(tuple(index[v] for v in row))
        except KeyError as exc:
            raise StructureFileError(
                f"{field} entry is not an element name: {exc.args[0]!r}"
            ) from None
    return tuple(rows)


def _parse_order(data, index: dict[str, int]):
    n = len(index)
    if "leq" in data:
        matrix = data["leq"]
        if not isinstance(matrix, list) or len(matrix) != n:
            raise StructureFileError(f"leq must be a {n}x{n} 0/1 matrix")
        up = []
        for row in matrix:
            if not isinstance(row, list) or len(row) != n:
                raise StructureFileError(f"leq must be a {n}x{n} 0/1 matrix")
            up.append(sum(1 << y for y in range(n) if row[y]))
        pairs = [(x, y) for x in range(n) for y in range(n) if up[x] >> y & 1]
        return order_from_pairs(n, pairs)
    pairs = []
    for entry in data["order"]:
        if not isinstance(entry, list) or len(entry) != 2:
            raise StructureFileError("order entries must be [low, high] name pairs")
        a, b = entry
        if a not in index or b not in index:
            missing = a if a not in index else b
            raise StructureFileError(f"order entry is not an element name: {missing!r}")
        pairs.append((index[a], index[b]))
    return order_from_pairs(n, pairs)


def _parse_common(data):
    if not isinstance(data, dict):
        raise StructureFileError("structure file must hold a JSON object")
    for field in ("elements", "bot", "top"):
        if field not in data:
            raise StructureFileError(f"missing field: {field}")
    elements = data["elements"]
    if not isinstance(elements, list) or len(elements) < 2:
        raise StructureFileError("elements must list at least two names")
    index = _name_index(elements)
    for field in ("bot", "top"):
        if data[field] not in index:
            raise StructureFileError(f"{field} is not an element name: {data[field]!r}")
    return elements, index


def parse_structure(data: dict, fallback_name: str = "structure") -> Structure:
    elements, index = _parse_common(data)
    n = len(elements)
    for field in ("times", "residuum"):
        if field not in data:
            raise StructureFileError(f"missing field: {field}")

    has_tables = "join" in data and "meet" in data
    has_order = "order" in data or "leq" in data
    if not has_tables and not has_order:
        raise StructureFileError("give join and meet tables, or an order relation")

    if has_tables:
        join = _parse_table(data["join"], "join", index)
        meet = _parse_table(data["meet"], "meet", index)
        if has_order:
            up = _parse_order(data, index)
            derived_join, derived_meet = order_tables(n, up)
            if derived_join != join or derived_meet != meet:
                raise MalformedTables(
                    "explicit join/meet tables disagree with the order relation"
                )
    else:
        up = _parse_order(data, index)
        join, meet = order_tables(n, up)

    return Structure(
        n=n,
        names=tuple(elements),
        join=join,
        meet=meet,
        times=_parse_table(data["times"], "times", index),
        residuum=_parse_table(data["residuum"], "residuum", index),
        bot=index[data["bot"]],
        top=index[data["top"]],
    )


def structure_name(data: dict, fallback: str) -> str:
    name = data.get("name", fallback)
    if not isinstance(name, str) or not name:
        raise StructureFileError("name must be a nonempty string")
    return name


def load_structure(path) -> tuple[Structure, str]:
    """Parse a structure file; returns the structure and its name."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise StructureFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"{path} is not valid JSON: {exc}") from None
    return parse_structure(data, path.stem), structure_name(data, path.stem)


def dump_structure(s: Structure, name: str) -> dict:
    """Complete structure file dict; parsing it back gives equal tables."""
    def table(rows):
        return [[s.names[v] for v in row] for row in rows]

    return {
        "name": name,
        "elements": list(s.names),
        "bot": s.names[s.bot],
        "top": s.names[s.top],
        "order": [[s.names[x], s.names[y]] for x, y in s.covers],
        "join": table(s.join),
        "meet": table(s.meet),
        "times": table(s.times),
        "residuum": table(s.residuum),
    }


def load_lattice(path) -> tuple[Lattice, str]:
    """Parse only the order part of a structure file into a lattice."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise StructureFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"{path} is not valid JSON: {exc}") from None
    elements, index = _parse_common(data)
    n = len(elements)
    if "order" in data or "leq" in data:
        up = _parse_order(data, index)
    elif "join" in data:
        join = _parse_table(data["join"], "join", index)
        up = tuple(
            sum(1 << y for y in range(n) if join[x][y] == y) for x in range(n)
        )
    else:
        raise StructureFileError("give an order relation or a join table")
    try:
        lat = lattice_from_order(elements, up, index[data["bot"]], index[data["top"]])
    except InvalidBaseLattice:
        raise
    return lat, structure_name(data, path.stem)
