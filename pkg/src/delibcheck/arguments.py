"""Argument symbols, interned to dense integer ids.

Interning is injective and ids are stable for the lifetime of the process.
Names starting with ``_fresh`` are reserved for the checker's pool of
generic witness arguments and are rejected by all input parsers.
"""

from __future__ import annotations

import re
import threading

_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

FRESH_PREFIX = "_fresh"


class Arg:
    """An interned argument symbol. Compare and sort by interned id."""

    __slots__ = ("name", "index")

    def __init__(self, name: str, index: int):
        self.name = name
        self.index = index

    def __repr__(self) -> str:
        return self.name

    def __hash__(self) -> int:
        return self.index

    def __eq__(self, other) -> bool:
        return self is other or (isinstance(other, Arg) and self.index == other.index)

    def __lt__(self, other: "Arg") -> bool:
        return self.index < other.index

    def __le__(self, other: "Arg") -> bool:
        return self.index <= other.index


_lock = threading.Lock()
_by_name: dict[str, Arg] = {}
_by_index: list[Arg] = []


def arg(name: str | Arg) -> Arg:
    """Intern `name` and return its symbol. Idempotent on Arg values."""
    if isinstance(name, Arg):
        return name
    found = _by_name.get(name)
    if found is not None:
        return found
    if not _NAME_RE.match(name):
        raise ValueError(
            f"invalid argument name {name!r}: expected a non-empty token over [A-Za-z0-9_]"
        )
    with _lock:
        found = _by_name.get(name)
        if found is None:
            found = Arg(name, len(_by_index))
            _by_index.append(found)
            _by_name[name] = found
    return found


def is_reserved(name: str) -> bool:
    """True for names claimed by the checker's fresh-symbol pool."""
    return name.startswith(FRESH_PREFIX)
