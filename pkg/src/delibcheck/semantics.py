"""Extension semantics over attack graphs, and three-valued labellings.

Extensions are computed by subset enumeration over integer bitmasks, with
conflict-free pruning; this keeps every semantics exact at desk scale
(at most 20 arguments) without a solver backend.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arguments import Arg
from .errors import DomainError
from .framework import Framework, components


class SemanticsKind(enum.Enum):
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


ALL_SEMANTICS = tuple(SemanticsKind)


@dataclass(frozen=True)
class Labelling:
    """A three-valued verdict on `domain`: in_set maps to 1, out_set to 0.

    Everything else, inside the domain or not, carries the default value 1/2.
    """

    in_set: frozenset[Arg]
    out_set: frozenset[Arg]
    domain: frozenset[Arg]

    def __post_init__(self):
        if self.in_set & self.out_set:
            raise DomainError("a labelling cannot both accept and reject an argument")
        if not (self.in_set | self.out_set) <= self.domain:
            raise DomainError("labelled arguments must belong to the labelling domain")


def labelling(in_set: Iterable = (), out_set: Iterable = (), domain: Iterable = ()) -> Labelling:
    from .arguments import arg

    ins = frozenset(arg(a) for a in in_set)
    outs = frozenset(arg(a) for a in out_set)
    dom = frozenset(arg(a) for a in domain) | ins | outs
    return Labelling(ins, outs, dom)


def _masks(fw: Framework) -> tuple[list[Arg], list[int], list[int]]:
    nodes = sorted(fw.nodes)
    index = {a: i for i, a in enumerate(nodes)}
    att_of = [0] * len(nodes)  # att_of[i]: attackers of node i
    tgt_of = [0] * len(nodes)  # tgt_of[i]: nodes attacked by node i
    for x, y in fw.edges:
        tgt_of[index[x]] |= 1 << index[y]
        att_of[index[y]] |= 1 << index[x]
    return nodes, att_of, tgt_of


def _admissible_masks(n: int, att_of: list[int], tgt_of: list[int]) -> list[tuple[int, int]]:
    """All admissible sets as (mask, attacked-by-mask) pairs."""
    out = []
    for m in range(1 << n):
        plus = minus = 0
        mm = m
        while mm:
            low = mm & -mm
            i = low.bit_length() - 1
            plus |= tgt_of[i]
            minus |= att_of[i]
            mm ^= low
        if plus & m:  # internal conflict
            continue
        if minus & ~plus:  # some attacker is not counter-attacked
            continue
        out.append((m, plus))
    return out


def _defended(att_of: list[int], plus: int) -> int:
    d = 0
    for i, attackers_of_i in enumerate(att_of):
        if attackers_of_i & ~plus == 0:
            d |= 1 << i
    return d


@lru_cache(maxsize=1 << 16)
def extensions(fw: Framework, sem: SemanticsKind) -> frozenset[frozenset[Arg]]:
    """The extensions of `fw` under `sem`, as a set of argument sets."""
    n = len(fw.nodes)
    if n > 20:
        raise ValueError("extension enumeration supports at most 20 arguments")
    nodes, att_of, tgt_of = _masks(fw)
    admissible = _admissible_masks(n, att_of, tgt_of)
    if sem is SemanticsKind.ADMISSIBLE:
        masks = [m for m, _ in admissible]
    elif sem is SemanticsKind.PREFERRED:
        masks = [
            m
            for m, _ in admissible
            if not any(m2 != m and m2 & m == m for m2, _ in admissible)
        ]
    elif sem is SemanticsKind.STABLE:
        full = (1 << n) - 1
        masks = [m for m, plus in admissible if (m | plus) == full]
    elif sem is SemanticsKind.COMPLETE:
        masks = [m for m, plus in admissible if _defended(att_of, plus) & ~m == 0]
    elif sem is SemanticsKind.GROUNDED:
        g = 0
        while True:
            plus = 0
            mm = g
            while mm:
                low = mm & -mm
                plus |= tgt_of[low.bit_length() - 1]
                mm ^= low
            g2 = _defended(att_of, plus)
            if g2 == g:
                break
            g = g2
        masks = [g]
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown semantics {sem!r}")
    return frozenset(
        frozenset(nodes[i] for i in range(n) if m >> i & 1) for m in masks
    )


def admissible_sets(fw: Framework) -> frozenset[frozenset[Arg]]:
    """The sets that are conflict-free and defend themselves against all attackers."""
    return extensions(fw, SemanticsKind.ADMISSIBLE)


def labellings(fw: Framework, sem: SemanticsKind) -> frozenset[Labelling]:
    """One labelling per extension: the extension is in, what it attacks is out."""
    out = set()
    for ext in extensions(fw, sem):
        attacked = frozenset(y for (x, y) in fw.edges if x in ext)
        out.add(Labelling(ext, attacked, fw.nodes))
    return frozenset(out)


def acceptance(fw: Framework, sem: SemanticsKind, p: Arg, mode: str) -> bool:
    """Quantify membership of `p` over the extensions: 'skeptical' or 'credulous'."""
    exts = extensions(fw, sem)
    if mode == "skeptical":
        return all(p in e for e in exts)
    if mode == "credulous":
        return any(p in e for e in exts)
    raise ValueError(f"unknown acceptance mode {mode!r}")


def check_normality(sem: SemanticsKind, fw: Framework) -> bool:
    """Do the extensions decompose as unions of per-component extensions?"""
    per_component = [extensions(c, sem) for c in components(fw)]
    expected = frozenset(
        frozenset().union(*combo) for combo in itertools.product(*per_component)
    )
    return expected == extensions(fw, sem)
