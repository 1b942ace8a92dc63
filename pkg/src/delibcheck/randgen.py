"""Seeded generators for random frameworks, bases, and formulas.

Used by the property suites and the probe-validities command. Everything is
a pure function of the supplied random.Random instance, so a fixed seed
reproduces a run exactly.
"""

from __future__ import annotations

import random
from typing import Sequence

from .arguments import Arg, arg
from .basis import Basis
from .formulas import (
    Atom,
    BlackDiamond,
    BlackFormula,
    BlackImplies,
    BlackNeg,
    ExistsDiamond,
    UpdateDiamond,
    WhiteAnd,
    WhiteFormula,
    WhiteNeg,
    black_box,
    update_box,
    white_box,
)
from .framework import Framework, framework
from .semantics import Labelling


def random_framework(rng: random.Random, max_nodes: int = 6, density: float = 0.3) -> Framework:
    count = rng.randint(0, max_nodes)
    nodes = [arg(f"a{i + 1}") for i in range(count)]
    edges = [(x, y) for x in nodes for y in nodes if rng.random() < density]
    return framework(nodes, edges)


def random_basis(
    rng: random.Random,
    max_args: int = 4,
    max_agents: int = 3,
    density: float = 0.4,
) -> Basis:
    """Arguments a1..ak; each agent's view sampled edgewise at `density`."""
    arg_count = rng.randint(1, max_args)
    agent_count = rng.randint(1, max_agents)
    args = [arg(f"a{i + 1}") for i in range(arg_count)]
    views = {}
    for j in range(agent_count):
        views[f"g{j + 1}"] = [
            (x, y) for x in args for y in args if rng.random() < density
        ]
    return Basis(views, args)


def random_black_formula(rng: random.Random, atoms: Sequence[Arg], size: int = 4) -> BlackFormula:
    if size <= 1 or rng.random() < 0.4:
        return Atom(rng.choice(atoms))
    if rng.random() < 0.4:
        return BlackNeg(random_black_formula(rng, atoms, size - 1))
    half = max(1, size // 2)
    return BlackImplies(
        random_black_formula(rng, atoms, half),
        random_black_formula(rng, atoms, half),
    )


def random_white_formula(
    rng: random.Random,
    atoms: Sequence[Arg],
    max_depth: int = 1,
    size: int = 5,
) -> WhiteFormula:
    """A white formula of white modal depth at most `max_depth`."""
    kinds = ["cdia", "cbox"]
    if size > 1:
        kinds += ["neg", "and"]
        if max_depth > 0:
            kinds += ["upd", "updbox", "ex", "exbox"]
    kind = rng.choice(kinds)
    if kind == "cdia":
        return BlackDiamond(random_black_formula(rng, atoms, size=3))
    if kind == "cbox":
        return black_box(random_black_formula(rng, atoms, size=3))
    if kind == "neg":
        return WhiteNeg(random_white_formula(rng, atoms, max_depth, size - 1))
    if kind == "and":
        half = max(1, size // 2)
        return WhiteAnd(
            random_white_formula(rng, atoms, max_depth, half),
            random_white_formula(rng, atoms, max_depth, half),
        )
    body = random_white_formula(rng, atoms, max_depth - 1, size - 1)
    if kind == "upd":
        return UpdateDiamond(rng.choice(atoms), body)
    if kind == "updbox":
        return update_box(rng.choice(atoms), body)
    if kind == "ex":
        return ExistsDiamond(body)
    return white_box(body)


def random_labelling(rng: random.Random, atoms: Sequence[Arg]) -> Labelling:
    ins, outs = set(), set()
    for a in atoms:
        roll = rng.random()
        if roll < 1 / 3:
            ins.add(a)
        elif roll < 2 / 3:
            outs.add(a)
    return Labelling(frozenset(ins), frozenset(outs), frozenset(atoms))
