"""Instance and solution documents, plus DOT export.

Documents are JSON: human-readable, diffable, and round-trip lossless.
An instance holds vertices, edges with stable ids, the matching classes,
and optionally a transversal; a solution holds the bags and optionally the
reduction trace.
"""

from __future__ import annotations

import json
from typing import Any, Optional

from .coloring import MatchingPartition
from .errors import (
    DuplicateEdgeIdError,
    KempeMinorError,
    ParseError,
    SchemaViolationError,
)
from .graph import EdgeRecord, LineGraphView, Multigraph
from .solver import BagSystem, ReductionTrace

ParsedInstance = tuple[Multigraph, MatchingPartition, Optional[frozenset]]


def _expect_list_of_str(value: Any, path: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaViolationError(path, "expected a list of strings")
    return value


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def parse_instance(text: str) -> ParsedInstance:
    doc = _load(text)
    if not isinstance(doc, dict):
        raise SchemaViolationError("$", "instance document must be an object")
    for key in ("vertices", "edges", "classes"):
        if key not in doc:
            raise SchemaViolationError(key, "missing required field")
    vertices = _expect_list_of_str(doc["vertices"], "vertices")
    if not isinstance(doc["edges"], list):
        raise SchemaViolationError("edges", "expected a list")
    records: list[EdgeRecord] = []
    for i, item in enumerate(doc["edges"]):
        path = f"edges[{i}]"
        if not isinstance(item, dict) or "id" not in item or "ends" not in item:
            raise SchemaViolationError(path, "expected an object with id and ends")
        if not isinstance(item["id"], str):
            raise SchemaViolationError(f"{path}.id", "expected a string")
        ends = _expect_list_of_str(item["ends"], f"{path}.ends")
        if len(ends) != 2:
            raise SchemaViolationError(f"{path}.ends", "expected exactly two endpoints")
        try:
            records.append(EdgeRecord(item["id"], (ends[0], ends[1])))
        except KempeMinorError as exc:
            raise SchemaViolationError(path, str(exc)) from None
    try:
        H = Multigraph(vertices, records)
    except DuplicateEdgeIdError as exc:
        raise ParseError(str(exc)) from None
    except KempeMinorError as exc:
        raise SchemaViolationError("edges", str(exc)) from None
    if not isinstance(doc["classes"], list):
        raise SchemaViolationError("classes", "expected a list")
    classes: list[list[str]] = []
    for i, cls in enumerate(doc["classes"]):
        ids = _expect_list_of_str(cls, f"classes[{i}]")
        for j, eid in enumerate(ids):
            if eid not in H:
                raise SchemaViolationError(
                    f"classes[{i}][{j}]", f"unknown edge id {eid!r}"
                )
        classes.append(ids)
    part = MatchingPartition.of(classes)
    transversal: Optional[frozenset] = None
    if doc.get("transversal") is not None:
        ids = _expect_list_of_str(doc["transversal"], "transversal")
        for j, eid in enumerate(ids):
            if eid not in H:
                raise SchemaViolationError(
                    f"transversal[{j}]", f"unknown edge id {eid!r}"
                )
        transversal = frozenset(ids)
    return H, part, transversal


def emit_instance(
    H: Multigraph, part: MatchingPartition, transversal=None
) -> str:
    doc: dict[str, Any] = {
        "vertices": list(H.vertices),
        "edges": [{"id": e.id, "ends": list(e.ends)} for e in H.edges()],
        "classes": [sorted(cls) for cls in part.classes],
    }
    if transversal is not None:
        doc["transversal"] = sorted(transversal)
    return json.dumps(doc, indent=2) + "\n"


def parse_solution(text: str) -> BagSystem:
    doc = _load(text)
    if not isinstance(doc, dict) or "bags" not in doc:
        raise SchemaViolationError("bags", "missing required field")
    if not isinstance(doc["bags"], list):
        raise SchemaViolationError("bags", "expected a list")
    bags = [
        _expect_list_of_str(bag, f"bags[{i}]") for i, bag in enumerate(doc["bags"])
    ]
    return BagSystem.of(bags)


def emit_solution(bags: BagSystem, trace: Optional[ReductionTrace] = None) -> str:
    doc: dict[str, Any] = {"bags": [sorted(bag) for bag in bags.bags]}
    if trace is not None:
        doc["trace"] = [
            {"kind": step.kind, "details": _jsonable(step.details)}
            for step in trace.steps
        ]
    return json.dumps(doc, indent=2) + "\n"


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (frozenset, set)):
        return sorted(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


# ---------------------------------------------------------------------------
# DOT export

_PALETTE = (
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a",
    "#66a61e", "#e6ab02", "#a6761d", "#666666",
)


def instance_to_dot(
    H: Multigraph,
    part: MatchingPartition,
    bags: Optional[BagSystem] = None,
) -> str:
    """Render H with class-indexed edge colors; bag membership, if given,
    is shown in the edge label."""
    bag_of: dict[str, int] = {}
    if bags is not None:
        for i, bag in enumerate(bags.bags):
            for eid in bag:
                bag_of[eid] = i
    lines = ["graph H {", "  node [shape=circle];"]
    for v in H.vertices:
        lines.append(f'  "{v}";')
    for e in H.edges():
        cls = part.class_of(e.id) if e.id in part.all_edges() else -1
        color = _PALETTE[cls % len(_PALETTE)] if cls >= 0 else "black"
        label = e.id if e.id not in bag_of else f"{e.id} [bag {bag_of[e.id]}]"
        u, v = e.ends
        lines.append(
            f'  "{u}" -- "{v}" [label="{label}", color="{color}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def line_graph_to_dot(L: LineGraphView) -> str:
    lines = ["graph L {", "  node [shape=box];"]
    for n in sorted(L.nodes):
        lines.append(f'  "{n}";')
    done = set()
    for n in sorted(L.nodes):
        for m in sorted(L.neighbors(n)):
            if (m, n) in done:
                continue
            done.add((n, m))
            lines.append(f'  "{n}" -- "{m}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
