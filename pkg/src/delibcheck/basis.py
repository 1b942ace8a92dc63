"""Multi-agent views and the deliberative state space.

A basis maps each agent to a private attack graph (its view). A state is a
partial consensus: a set of arguments discussed so far plus an edge set that
is faithful to the views, meaning it lies between the agents' intersection
and union restricted to those arguments. Updates grow states one argument at
a time while preserving faithfulness.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping

from .arguments import Arg, arg, is_reserved
from .errors import BasisFormatError, DomainError
from .formulas import WhiteFormula, black_atoms, white_depth
from .framework import Attack

EdgeSet = frozenset[Attack]


def _coerce_edges(pairs: Iterable) -> EdgeSet:
    return frozenset((arg(x), arg(y)) for x, y in pairs)


def _endpoints(edges: Iterable[Attack]) -> frozenset[Arg]:
    return frozenset(v for e in edges for v in e)


class Basis:
    """An agent-indexed family of views over the argument universe."""

    __slots__ = ("views", "extra_args", "union_view", "intersection_view")

    def __init__(self, views: Mapping[str, Iterable], extra_args: Iterable = ()):
        if not views:
            raise BasisFormatError("a basis needs at least one agent")
        self.views: dict[str, EdgeSet] = {}
        for agent, edges in views.items():
            if not isinstance(agent, str) or not agent:
                raise BasisFormatError(f"invalid agent name {agent!r}")
            self.views[agent] = _coerce_edges(edges)
        self.extra_args: frozenset[Arg] = frozenset(arg(a) for a in extra_args)
        self.union_view: EdgeSet = frozenset().union(*self.views.values())
        self.intersection_view: EdgeSet = reduce(
            frozenset.__and__, self.views.values()
        )

    @property
    def agents(self) -> tuple[str, ...]:
        return tuple(sorted(self.views))

    @property
    def arguments(self) -> frozenset[Arg]:
        """Every argument mentioned in a view, plus declared isolated ones."""
        return _endpoints(self.union_view) | self.extra_args

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Basis)
            and self.views == other.views
            and self.arguments == other.arguments
        )

    def __repr__(self) -> str:
        return f"Basis(agents={self.agents}, arguments={sorted(self.arguments)})"


@dataclass(frozen=True)
class State:
    """A partial consensus: arguments on the table and the agreed attacks."""

    args: frozenset[Arg]
    edges: EdgeSet

    def __post_init__(self):
        for x, y in self.edges:
            if x not in self.args or y not in self.args:
                raise DomainError(f"edge ({x},{y}) has an endpoint outside the state")


def state(args: Iterable = (), edges: Iterable = ()) -> State:
    edge_set = _coerce_edges(edges)
    return State(frozenset(arg(a) for a in args) | _endpoints(edge_set), edge_set)


ROOT = State(frozenset(), frozenset())


def restrict(edges: Iterable[Attack], args: Iterable[Arg]) -> EdgeSet:
    """Keep only the edges with both endpoints in `args`."""
    members = frozenset(args)
    return frozenset((x, y) for x, y in edges if x in members and y in members)


def _bounds(b: Basis, args: frozenset[Arg]) -> tuple[EdgeSet, EdgeSet]:
    restricted = [restrict(view, args) for view in b.views.values()]
    return reduce(frozenset.__and__, restricted), frozenset().union(*restricted)


def satisfies_carrier(b: Basis, q: State) -> bool:
    """Is `q` a point of the deliberative model for `b`?"""
    lower, upper = _bounds(b, q.args)
    return lower <= q.edges <= upper


def update_set(b: Basis, q: State, p: Arg) -> tuple[EdgeSet, ...]:
    """All faithful events for putting `p` on the table at `q`.

    Every edge set between the intersection and the union of the views
    restricted to q.args + {p}; an event may also settle pairs among the old
    arguments. Enumerated by a binary counter over the gap edges, so the
    order is deterministic.
    """
    lower, upper = _bounds(b, q.args | {arg(p)})
    gap = sorted(upper - lower)
    out = []
    for mask in range(1 << len(gap)):
        extra = frozenset(gap[i] for i in range(len(gap)) if mask >> i & 1)
        out.append(lower | extra)
    return tuple(out)


def successors(b: Basis, q: State, p: Arg) -> tuple[State, ...]:
    """The deliberative successors of `q` via `p`, in event order, deduplicated."""
    p = arg(p)
    args = q.args | {p}
    seen: dict[State, None] = {}
    for event in update_set(b, q, p):
        seen.setdefault(State(args, q.edges | event))
    return tuple(seen)


def complete_assents(b: Basis, universe: Iterable) -> frozenset[EdgeSet]:
    """All full attack graphs over `universe` that are faithful to every view."""
    members = frozenset(arg(a) for a in universe)
    missing = _endpoints(b.union_view) - members
    if missing:
        raise DomainError(f"universe is missing view endpoints: {sorted(missing)}")
    lower, upper = b.intersection_view, b.union_view
    gap = sorted(upper - lower)
    out = []
    for mask in range(1 << len(gap)):
        extra = frozenset(gap[i] for i in range(len(gap)) if mask >> i & 1)
        out.append(lower | extra)
    return frozenset(out)


def vicinity(b: Basis, symbols: Iterable[Arg], n: int) -> frozenset[Arg]:
    """Arguments within undirected distance `n` of `symbols` in the union view."""
    neighbours: dict[Arg, set[Arg]] = {}
    for x, y in b.union_view:
        neighbours.setdefault(x, set()).add(y)
        neighbours.setdefault(y, set()).add(x)
    reached = set(arg(s) for s in symbols)
    frontier = set(reached)
    for _ in range(n):
        frontier = {
            nxt
            for cur in frontier
            for nxt in neighbours.get(cur, ())
            if nxt not in reached
        }
        if not frontier:
            break
        reached |= frontier
    return frozenset(reached)


def shrink(b: Basis, phi: WhiteFormula) -> Basis:
    """Restrict every view to the vicinity of the formula's black atoms.

    The vicinity is computed once from the union view, at the formula's white
    modal depth; each view keeps exactly the edges with both endpoints inside
    it. Agents and the declared argument universe are unchanged.
    """
    region = vicinity(b, black_atoms(phi), white_depth(phi))
    views = {
        agent: frozenset((x, y) for x, y in view if x in region and y in region)
        for agent, view in b.views.items()
    }
    kept_endpoints = frozenset().union(*(_endpoints(v) for v in views.values()))
    return Basis(views, b.arguments - kept_endpoints)


# --- file formats ------------------------------------------------------------

_LINE_RE = re.compile(
    r"\s*([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\s*\Z"
)


def _checked_arg(name, where: str) -> Arg:
    if not isinstance(name, str):
        raise BasisFormatError(f"{where}: argument names must be strings, got {name!r}")
    if is_reserved(name):
        raise BasisFormatError(f"{where}: argument name {name!r} is reserved")
    try:
        return arg(name)
    except ValueError as exc:
        raise BasisFormatError(f"{where}: {exc}") from exc


def parse_basis_json(text: str) -> Basis:
    """Parse `{"agents": {"a": [["p","q"], ...]}, "arguments": [...]}`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BasisFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise BasisFormatError("expected a JSON object at the top level")
    unknown = set(data) - {"agents", "arguments"}
    if unknown:
        raise BasisFormatError(f"unknown keys: {sorted(unknown)}")
    agents = data.get("agents")
    if not isinstance(agents, dict) or not agents:
        raise BasisFormatError("'agents' must be a non-empty object")
    views: dict[str, list] = {}
    for agent, pairs in agents.items():
        if not isinstance(pairs, list):
            raise BasisFormatError(f"agent {agent!r}: expected a list of pairs")
        edges = []
        for pair in pairs:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise BasisFormatError(f"agent {agent!r}: bad attack entry {pair!r}")
            edges.append(
                (_checked_arg(pair[0], f"agent {agent!r}"), _checked_arg(pair[1], f"agent {agent!r}"))
            )
        views[agent] = edges
    extra = data.get("arguments", [])
    if not isinstance(extra, list):
        raise BasisFormatError("'arguments' must be a list of names")
    return Basis(views, [_checked_arg(a, "'arguments'") for a in extra])


def parse_basis_lines(text: str) -> Basis:
    """Parse the line format: one `agent: x -> y` attack per line."""
    views: dict[str, list] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        m = _LINE_RE.match(line)
        if not m:
            raise BasisFormatError(f"line {lineno}: cannot parse {line!r}")
        agent, x, y = m.groups()
        views.setdefault(agent, []).append(
            (_checked_arg(x, f"line {lineno}"), _checked_arg(y, f"line {lineno}"))
        )
    if not views:
        raise BasisFormatError("no attacks found; a basis needs at least one agent")
    return Basis(views)


def parse_basis(text: str) -> Basis:
    """Dispatch on the first non-blank character: `{` means JSON, else lines."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_basis_json(text)
    return parse_basis_lines(text)


def format_basis_json(b: Basis) -> str:
    payload = {
        "agents": {
            agent: sorted([x.name, y.name] for x, y in b.views[agent])
            for agent in b.agents
        },
        "arguments": sorted(a.name for a in b.arguments),
    }
    return json.dumps(payload, indent=2, sort_keys=True)
