"""Link diagrams, quandle colorings and the Φ_qp invariant.

A diagram is reduced to arcs (pieces of strand between undercrossings)
and one relation per crossing. At a crossing of sign +1 the outgoing
under-arc is coloured under_in ▷ over; at sign -1 the roles of the two
under-arcs swap, so under_in = under_out ▷ over.

PD codes list each crossing as X[a, b, c, d] with a the incoming and c the
outgoing under-edge and b, d the over-edges. A crossing is positive when
its over-strand runs from d to b.
"""

from __future__ import annotations

import concurrent.futures
import logging
import re
import time
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from quandle_toolkit.core import QuandleTable, require_quandle, subquandle_closure
from quandle_toolkit.errors import InputError, MalformedInputError, ParseError
from quandle_toolkit.polynomial import BivariatePoly, PolyMultiset, ZPoly, sub_qp

_logger = logging.getLogger(__name__)

_PD_TOKEN = re.compile(r"X\[([^\]]*)\]")
_PD_FILLER = re.compile(r"[\s,;]*")
_SIGNS = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}


class Crossing(NamedTuple):
    under_in: int
    over: int
    under_out: int
    sign: int


@dataclass(frozen=True)
class LinkDiagram:
    arc_count: int
    crossings: tuple[Crossing, ...]
    components: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.arc_count < 1:
            raise MalformedInputError("a diagram needs at least one arc")
        incoming = [0] * self.arc_count
        outgoing = [0] * self.arc_count
        for number, crossing in enumerate(self.crossings, start=1):
            if crossing.sign not in (1, -1):
                raise MalformedInputError(f"crossing {number}: sign must be +1 or -1")
            for arc in crossing[:3]:
                if not 0 <= arc < self.arc_count:
                    raise MalformedInputError(f"crossing {number}: arc {arc + 1} outside 1..{self.arc_count}")
            incoming[crossing.under_in] += 1
            outgoing[crossing.under_out] += 1
        for arc, counts in enumerate(zip(incoming, outgoing)):
            if counts not in ((0, 0), (1, 1)):
                raise MalformedInputError(
                    f"arc {arc + 1} ends under {counts[0]} crossing(s) and starts under {counts[1]}"
                )
        if self.components is not None:
            listed = sorted(arc for component in self.components for arc in component)
            if listed != list(range(self.arc_count)):
                raise MalformedInputError("components must partition the arcs")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def component_count(self) -> int:
        return len(self.components) if self.components is not None else len(_trace_components(self))

    def writhe(self) -> int:
        return sum(crossing.sign for crossing in self.crossings)


def _trace_components(diagram: LinkDiagram) -> tuple[tuple[int, ...], ...]:
    # Follows each arc to the arc that leaves its terminal undercrossing.
    successor = {crossing.under_in: crossing.under_out for crossing in diagram.crossings}
    seen: set[int] = set()
    components = []
    for start in range(diagram.arc_count):
        if start in seen:
            continue
        component = []
        arc = start
        while arc not in seen:
            seen.add(arc)
            component.append(arc)
            if arc not in successor:
                break
            arc = successor[arc]
        components.append(tuple(component))
    return tuple(components)


class _Passage(NamedTuple):
    crossing: int
    entry: int
    exit: int
    label_in: int
    label_out: int


def _parse_pd_crossings(text: str) -> list[tuple[int, int, int, int]]:
    body = text.strip()
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    crossings = []
    for match in _PD_TOKEN.finditer(body):
        fields = [field for field in re.split(r"[\s,]+", match.group(1).strip()) if field]
        try:
            labels = tuple(int(field) for field in fields)
        except ValueError as exc:
            raise ParseError(f"X[{match.group(1)}]: labels must be integers") from exc
        if len(labels) != 4:
            raise ParseError(f"X[{match.group(1)}]: expected 4 labels, got {len(labels)}")
        if min(labels) < 1:
            raise ParseError(f"X[{match.group(1)}]: labels are 1-based")
        crossings.append(labels)
    if not _PD_FILLER.fullmatch(_PD_TOKEN.sub(" ", body)):
        raise ParseError("unexpected text between PD crossings")
    if not crossings:
        raise ParseError("PD code has no crossings")
    return crossings


def _label_slots(crossings: Sequence[tuple[int, ...]]) -> dict[int, list[tuple[int, int]]]:
    slots: dict[int, list[tuple[int, int]]] = {}
    for index, labels in enumerate(crossings):
        for position, label in enumerate(labels):
            slots.setdefault(label, []).append((index, position))
    for label, places in slots.items():
        if len(places) != 2:
            raise ParseError(f"edge label {label} appears {len(places)} time(s), expected 2")
    return slots


def _walk_components(crossings: Sequence[tuple[int, ...]]) -> list[list[_Passage]]:
    slots = _label_slots(crossings)
    visited: set[tuple[int, int]] = set()
    components = []
    for index in range(len(crossings)):
        for position in range(4):
            if (index, position) in visited:
                continue
            passages = []
            exit_slot = (index, position)
            while exit_slot not in visited:
                visited.add(exit_slot)
                label = crossings[exit_slot[0]][exit_slot[1]]
                first, second = slots[label]
                entry_slot = second if first == exit_slot else first
                visited.add(entry_slot)
                crossing, entry = entry_slot
                leave = entry ^ 2
                passages.append(_Passage(crossing, entry, leave, label, crossings[crossing][leave]))
                exit_slot = (crossing, leave)
            components.append(passages)
    return components


def _reverse(passages: list[_Passage]) -> list[_Passage]:
    return [
        _Passage(p.crossing, p.exit, p.entry, p.label_out, p.label_in)
        for p in reversed(passages)
    ]


def _follows_labels(passages: list[_Passage]) -> bool:
    labels = [p.label_in for p in passages]
    low, high = min(labels), max(labels)
    return all(
        p.label_out == p.label_in + 1 or (p.label_in == high and p.label_out == low)
        for p in passages
    )


def _orient(passages: list[_Passage]) -> list[_Passage]:
    under_entries = {p.entry for p in passages if p.entry in (0, 2)}
    if under_entries == {0}:
        return passages
    if under_entries == {2}:
        return _reverse(passages)
    if under_entries:
        raise ParseError("a component enters its undercrossings from both directions")
    reversed_passages = _reverse(passages)
    forward, backward = _follows_labels(passages), _follows_labels(reversed_passages)
    if forward and not backward:
        return passages
    if backward and not forward:
        return reversed_passages
    labels = sorted(p.label_in for p in passages)
    raise ParseError(f"cannot orient the over-only component with edges {labels}")


def parse_pd(text: str) -> LinkDiagram:
    """Diagram from a PD code such as 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'."""
    crossings = _parse_pd_crossings(text)
    walked = [_orient(passages) for passages in _walk_components(crossings)]

    parent = {label: label for labels in crossings for label in labels}

    def find(label: int) -> int:
        while parent[label] != label:
            parent[label] = parent[parent[label]]
            label = parent[label]
        return label

    signs = [0] * len(crossings)
    for passages in walked:
        for passage in passages:
            if passage.entry in (1, 3):
                signs[passage.crossing] = 1 if passage.entry == 3 else -1
                low, high = sorted((find(passage.label_in), find(passage.label_out)))
                parent[high] = low

    roots = sorted({find(label) for label in parent})
    arc_of = {label: roots.index(find(label)) for label in parent}
    diagram_crossings = tuple(
        Crossing(arc_of[a], arc_of[b], arc_of[c], signs[index])
        for index, (a, b, c, _d) in enumerate(crossings)
    )
    components = []
    for passages in sorted(walked, key=lambda ps: min(p.label_in for p in ps)):
        ordered: list[int] = []
        for passage in passages:
            arc = arc_of[passage.label_in]
            if arc not in ordered:
                ordered.append(arc)
        components.append(tuple(ordered))
    diagram = LinkDiagram(len(roots), diagram_crossings, tuple(components))
    _logger.debug(
        "Parsed PD code: %d crossings, %d arcs, %d components",
        diagram.crossing_count,
        diagram.arc_count,
        len(components),
    )
    return diagram


def _records(text: str) -> list[list[str]]:
    records = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        for record in line.split(";"):
            tokens = record.split()
            if tokens:
                records.append(tokens)
    return records


def _parse_arc(token: str, arc_count: int, where: str) -> int:
    try:
        arc = int(token)
    except ValueError as exc:
        raise ParseError(f"{where}: arc {token!r} is not an integer") from exc
    if not 1 <= arc <= arc_count:
        raise ParseError(f"{where}: arc {arc} outside 1..{arc_count}")
    return arc - 1


def parse_native(text: str) -> LinkDiagram:
    """Diagram from 'arcs N' followed by 'under_in over under_out sign' records."""
    records = _records(text)
    if not records:
        raise ParseError("empty link description")
    header = records[0]
    if len(header) == 2 and header[0] == "arcs":
        count_token = header[1]
    elif len(header) == 2 and header[1] == "arcs":
        count_token = header[0]
    else:
        raise ParseError(f"first record must be 'arcs <n>', got {' '.join(header)!r}")
    try:
        arc_count = int(count_token)
    except ValueError as exc:
        raise ParseError(f"arc count {count_token!r} is not an integer") from exc
    if arc_count < 1:
        raise ParseError(f"arc count must be positive, got {arc_count}")

    crossings = []
    components = []
    for number, tokens in enumerate(records[1:], start=2):
        where = f"record {number}"
        if tokens[0] == "component":
            components.append(tuple(_parse_arc(token, arc_count, where) for token in tokens[1:]))
            continue
        if len(tokens) != 4:
            raise ParseError(f"{where}: expected 'under_in over under_out sign', got {' '.join(tokens)!r}")
        if tokens[3] not in _SIGNS:
            raise ParseError(f"{where}: sign must be + or -, got {tokens[3]!r}")
        under_in, over, under_out = (_parse_arc(token, arc_count, where) for token in tokens[:3])
        crossings.append(Crossing(under_in, over, under_out, _SIGNS[tokens[3]]))

    try:
        diagram = LinkDiagram(arc_count, tuple(crossings), tuple(components) or None)
    except MalformedInputError as exc:
        raise ParseError(str(exc)) from exc
    if diagram.components is None:
        diagram = LinkDiagram(arc_count, diagram.crossings, _trace_components(diagram))
    return diagram


def parse_link(text: str) -> LinkDiagram:
    if "X[" in text:
        return parse_pd(text)
    return parse_native(text)


def read_link(path: str) -> LinkDiagram:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return parse_link(text)
    except InputError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def format_native(diagram: LinkDiagram) -> str:
    lines = [f"arcs {diagram.arc_count}"]
    for component in diagram.components or ():
        lines.append("component " + " ".join(str(arc + 1) for arc in component))
    for crossing in diagram.crossings:
        sign = "+" if crossing.sign > 0 else "-"
        lines.append(f"{crossing.under_in + 1} {crossing.over + 1} {crossing.under_out + 1} {sign}")
    return "\n".join(lines) + "\n"


# Relation (tail, over, head) means colour(head) = colour(tail) ▷ colour(over).
Relation = tuple[int, int, int]


def _relations(diagram: LinkDiagram) -> list[Relation]:
    relations = []
    for crossing in diagram.crossings:
        if crossing.sign > 0:
            relations.append((crossing.under_in, crossing.over, crossing.under_out))
        else:
            relations.append((crossing.under_out, crossing.over, crossing.under_in))
    return relations


def satisfies(diagram: LinkDiagram, table: QuandleTable, coloring: Sequence[int]) -> bool:
    rows = table.rows
    return len(coloring) == diagram.arc_count and all(
        rows[coloring[tail]][coloring[over]] == coloring[head]
        for tail, over, head in _relations(diagram)
    )


class _ColoringSearch:
    def __init__(self, diagram: LinkDiagram, table: QuandleTable) -> None:
        self.arc_count = diagram.arc_count
        self.order = table.order
        self.rows = table.rows
        # inverse[y][j] is the x with x ▷ j = y
        inverse = np.empty_like(table.table)
        columns = np.arange(table.order)
        inverse[table.table, columns[None, :]] = columns[:, None]
        self.inverse = tuple(tuple(row) for row in inverse.tolist())
        watching: list[list[Relation]] = [[] for _ in range(self.arc_count)]
        for relation in _relations(diagram):
            for arc in set(relation):
                watching[arc].append(relation)
        self.watching = watching
        self.nodes = 0

    def propagate(self, colors: list[int], changed: int) -> bool:
        queue = [changed]
        while queue:
            arc = queue.pop()
            for tail, over, head in self.watching[arc]:
                c_over = colors[over]
                if c_over < 0:
                    continue
                c_tail, c_head = colors[tail], colors[head]
                if c_tail >= 0:
                    expected = self.rows[c_tail][c_over]
                    if c_head < 0:
                        colors[head] = expected
                        queue.append(head)
                    elif c_head != expected:
                        return False
                elif c_head >= 0:
                    colors[tail] = self.inverse[c_head][c_over]
                    queue.append(tail)
        return True

    def extend(self, colors: list[int]) -> Iterator[tuple[int, ...]]:
        try:
            arc = colors.index(-1)
        except ValueError:
            yield tuple(colors)
            return
        for color in range(self.order):
            self.nodes += 1
            trial = list(colors)
            trial[arc] = color
            if self.propagate(trial, arc):
                yield from self.extend(trial)

    def run(self, first_colors: Sequence[int] | None = None) -> list[tuple[int, ...]]:
        if first_colors is None:
            return list(self.extend([-1] * self.arc_count))
        found = []
        for color in first_colors:
            colors = [-1] * self.arc_count
            colors[0] = color
            if self.propagate(colors, 0):
                found.extend(self.extend(colors))
        return found


@dataclass(frozen=True)
class ColoringSet:
    diagram: LinkDiagram
    target: QuandleTable
    colorings: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.colorings)

    @cached_property
    def images(self) -> tuple[frozenset[int], ...]:
        return tuple(subquandle_closure(self.target, coloring) for coloring in self.colorings)


def colorings(diagram: LinkDiagram, table: object, *, workers: int = 1) -> ColoringSet:
    """Every arc colouring by the quandle, sorted lexicographically."""
    target = require_quandle(table, "colorings")
    started = time.perf_counter()
    if workers <= 1:
        search = _ColoringSearch(diagram, target)
        found = search.run()
        nodes = search.nodes
    else:
        found = []
        nodes = 0
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            searches = [_ColoringSearch(diagram, target) for _color in range(target.order)]
            futures = [pool.submit(search.run, (color,)) for color, search in enumerate(searches)]
            for future in futures:
                found.extend(future.result())
            nodes = sum(search.nodes for search in searches)
    _logger.debug(
        "Coloured %d arcs by an order-%d quandle: %d colorings, %d nodes, %.3fs",
        diagram.arc_count,
        target.order,
        len(found),
        nodes,
        time.perf_counter() - started,
    )
    return ColoringSet(diagram, target, tuple(sorted(found)))


def counting_invariant(diagram: LinkDiagram, table: object, *, workers: int = 1) -> int:
    return len(colorings(diagram, table, workers=workers))


def phi_qp(diagram: LinkDiagram, table: object, *, workers: int = 1) -> PolyMultiset:
    """Multiset of subquandle polynomials of the coloring images."""
    found = colorings(diagram, table, workers=workers)
    by_image: dict[frozenset[int], BivariatePoly] = {}
    values = []
    for image in found.images:
        if image not in by_image:
            by_image[image] = sub_qp(found.target, image)
        values.append(by_image[image])
    return PolyMultiset.from_iterable(values)


def phi_qp_specialized(diagram: LinkDiagram, table: object, s0: int, t0: int, *, workers: int = 1) -> ZPoly:
    return phi_qp(diagram, table, workers=workers).specialize(s0, t0)


__all__ = [
    "Crossing",
    "LinkDiagram",
    "ColoringSet",
    "parse_pd",
    "parse_native",
    "parse_link",
    "read_link",
    "format_native",
    "satisfies",
    "colorings",
    "counting_invariant",
    "phi_qp",
    "phi_qp_specialized",
]
