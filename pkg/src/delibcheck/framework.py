"""Attack graphs, their weakly connected components, and the APX text format."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .arguments import Arg, arg, is_reserved
from .errors import ApxFormatError, DomainError

Attack = tuple[Arg, Arg]


@dataclass(frozen=True)
class Framework:
    """A finite directed attack graph: (x, y) in edges means x attacks y."""

    nodes: frozenset[Arg]
    edges: frozenset[Attack]

    def __post_init__(self):
        for x, y in self.edges:
            if x not in self.nodes or y not in self.nodes:
                raise DomainError(f"attack ({x},{y}) has an endpoint outside the framework")


def framework(nodes: Iterable[Arg | str] = (), edges: Iterable[tuple[Arg | str, Arg | str]] = ()) -> Framework:
    """Build a Framework, interning names and adding edge endpoints to the nodes."""
    edge_set = frozenset((arg(x), arg(y)) for x, y in edges)
    node_set = frozenset(arg(n) for n in nodes) | {v for e in edge_set for v in e}
    return Framework(node_set, edge_set)


EMPTY_FRAMEWORK = framework()


def _check_members(fw: Framework, args: Iterable[Arg]) -> frozenset[Arg]:
    members = frozenset(args)
    outside = members - fw.nodes
    if outside:
        raise DomainError(f"arguments outside the framework: {sorted(outside)}")
    return members


def attackers(fw: Framework, args: Iterable[Arg]) -> frozenset[Arg]:
    """E-(X): the nodes attacking some member of `args`."""
    members = _check_members(fw, args)
    return frozenset(x for (x, y) in fw.edges if y in members)


def targets(fw: Framework, args: Iterable[Arg]) -> frozenset[Arg]:
    """E+(X): the nodes attacked by some member of `args`."""
    members = _check_members(fw, args)
    return frozenset(y for (x, y) in fw.edges if x in members)


def components(fw: Framework) -> list[Framework]:
    """Split into maximal weakly connected components, ordered by smallest node."""
    neighbours: dict[Arg, set[Arg]] = {n: set() for n in fw.nodes}
    for x, y in fw.edges:
        neighbours[x].add(y)
        neighbours[y].add(x)
    seen: set[Arg] = set()
    out: list[Framework] = []
    for start in sorted(fw.nodes):
        if start in seen:
            continue
        block = {start}
        stack = [start]
        while stack:
            for nxt in neighbours[stack.pop()]:
                if nxt not in block:
                    block.add(nxt)
                    stack.append(nxt)
        seen |= block
        inner = frozenset(e for e in fw.edges if e[0] in block)
        out.append(Framework(frozenset(block), inner))
    return out


def components_containing(fw: Framework, symbols: Iterable[Arg]) -> Framework:
    """C(q, Phi): the union of the components that meet `symbols`.

    Symbols absent from the framework contribute nothing.
    """
    wanted = frozenset(symbols)
    nodes: set[Arg] = set()
    edges: set[Attack] = set()
    for comp in components(fw):
        if comp.nodes & wanted:
            nodes |= comp.nodes
            edges |= comp.edges
    return Framework(frozenset(nodes), frozenset(edges))


_ARG_LINE = re.compile(r"arg\(\s*([A-Za-z0-9_]+)\s*\)\.\Z")
_ATT_LINE = re.compile(r"att\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\.\Z")


def parse_apx(text: str) -> Framework:
    """Parse the APX-style format: `arg(name).` and `att(a,b).` lines.

    Blank lines are skipped and everything after a `%` is a comment.
    Attacks may only mention declared arguments.
    """
    names: list[str] = []
    pairs: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        m = _ARG_LINE.match(line)
        if m:
            if is_reserved(m.group(1)):
                raise ApxFormatError(f"argument name {m.group(1)!r} is reserved", lineno)
            names.append(m.group(1))
            continue
        m = _ATT_LINE.match(line)
        if m:
            pairs.append((m.group(1), m.group(2), lineno))
            continue
        raise ApxFormatError(f"cannot parse {line!r}", lineno)
    declared = {n: arg(n) for n in names}
    edges = []
    for a, b, lineno in pairs:
        if a not in declared or b not in declared:
            missing = a if a not in declared else b
            raise ApxFormatError(f"attack mentions undeclared argument {missing!r}", lineno)
        edges.append((declared[a], declared[b]))
    return Framework(frozenset(declared.values()), frozenset(edges))


def format_apx(fw: Framework) -> str:
    lines = [f"arg({a.name})." for a in sorted(fw.nodes)]
    lines += [f"att({x.name},{y.name})." for x, y in sorted(fw.edges)]
    return "\n".join(lines) + ("\n" if lines else "")
