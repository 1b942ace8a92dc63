"""The model checker for the two-layer dynamic language.

Truth of the black diamond at a state only needs that state's labellings.
The dynamic diamonds quantify over deliberative successors; the existential
diamond ranges over an unbounded argument universe, so `check` restricts it
to a finite quantifier domain: the vicinity of the formula's black atoms (at
the formula's white modal depth), the explicit modal indices, and a pool of
generic fresh witnesses. `oracle_check` is the brute-force counterpart that
ranges over an explicit finite universe with no shrinking; the two are held
to agree by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .arguments import Arg, arg
from .errors import DomainError, FreshPoolError
from .formulas import (
    BlackDiamond,
    BlackFormula,
    ExistsDiamond,
    ONE,
    UpdateDiamond,
    WhiteAnd,
    WhiteFormula,
    WhiteNeg,
    black_atoms,
    eval_black,
    format_black,
    format_formula,
    modal_args,
    white_depth,
)
from .framework import Framework, components_containing
from .basis import Basis, ROOT, State, satisfies_carrier, successors, update_set, vicinity
from .semantics import SemanticsKind, labellings


@dataclass(frozen=True)
class CheckConfig:
    """Knobs for `check`.

    fresh_pool_size defaults to the formula's white modal depth: one unused
    generic witness per quantifier level. A smaller pool without an explicit
    quantifier domain is rejected, since it could under-approximate the
    existential diamond.
    """

    semantics: SemanticsKind = SemanticsKind.PREFERRED
    fresh_pool_size: Optional[int] = None
    quantifier_domain_override: Optional[frozenset[Arg]] = None
    memoize: bool = False


DEFAULT_CONFIG = CheckConfig()


@dataclass
class CheckStats:
    states_visited: int = 0
    successors_enumerated: int = 0


def black_sat(q: State, sem: SemanticsKind, alpha: BlackFormula) -> bool:
    """Does some labelling of the state, seen as an attack graph, make alpha fully true?"""
    fw = Framework(q.args, q.edges)
    return any(eval_black(lab, alpha) == ONE for lab in labellings(fw, sem))


def _fresh_pool(count: int, taken: set[str]) -> list[Arg]:
    pool: list[Arg] = []
    i = 0
    while len(pool) < count:
        name = f"_fresh{i}"
        i += 1
        if name in taken:
            continue
        pool.append(arg(name))
    return pool


def _domain(b: Basis, phi: WhiteFormula, cfg: CheckConfig, extra_taken: frozenset[Arg]) -> frozenset[Arg]:
    if cfg.quantifier_domain_override is not None:
        return frozenset(cfg.quantifier_domain_override)
    base = vicinity(b, black_atoms(phi), white_depth(phi)) | modal_args(phi)
    count = cfg.fresh_pool_size if cfg.fresh_pool_size is not None else white_depth(phi)
    taken = {a.name for a in b.arguments | base | extra_taken}
    return base | frozenset(_fresh_pool(count, taken))


def quantifier_domain(b: Basis, phi: WhiteFormula, cfg: CheckConfig = DEFAULT_CONFIG) -> frozenset[Arg]:
    """The finite set the existential diamond ranges over in `check`."""
    return _domain(b, phi, cfg, frozenset())


def _validate_pool(phi: WhiteFormula, cfg: CheckConfig) -> None:
    if cfg.quantifier_domain_override is not None:
        return
    depth = white_depth(phi)
    count = cfg.fresh_pool_size if cfg.fresh_pool_size is not None else depth
    if count < depth:
        raise FreshPoolError(
            f"fresh pool of size {count} cannot cover white modal depth {depth}"
        )


def _validate_state(b: Basis, q: State) -> None:
    if not satisfies_carrier(b, q):
        raise DomainError("state violates the carrier condition for this basis")


class _Evaluator:
    __slots__ = ("basis", "cfg", "domain", "stats", "memo", "succ_cache")

    def __init__(self, b: Basis, cfg: CheckConfig, domain: list[Arg], stats: Optional[CheckStats]):
        self.basis = b
        self.cfg = cfg
        self.domain = domain
        self.stats = stats
        self.memo: dict[tuple[WhiteFormula, State], bool] = {}
        self.succ_cache: dict[tuple[State, Arg], tuple[State, ...]] = {}

    def succ(self, q: State, p: Arg) -> tuple[State, ...]:
        key = (q, p)
        out = self.succ_cache.get(key)
        if out is None:
            out = successors(self.basis, q, p)
            self.succ_cache[key] = out
            if self.stats:
                self.stats.successors_enumerated += len(out)
        return out

    def eval(self, phi: WhiteFormula, q: State) -> bool:
        if self.cfg.memoize:
            key = (phi, q)
            cached = self.memo.get(key)
            if cached is not None:
                return cached
            result = self._eval(phi, q)
            self.memo[key] = result
            return result
        return self._eval(phi, q)

    def _eval(self, phi: WhiteFormula, q: State) -> bool:
        if self.stats:
            self.stats.states_visited += 1
        if isinstance(phi, BlackDiamond):
            return black_sat(q, self.cfg.semantics, phi.body)
        if isinstance(phi, WhiteNeg):
            return not self.eval(phi.body, q)
        if isinstance(phi, WhiteAnd):
            return self.eval(phi.lhs, q) and self.eval(phi.rhs, q)
        if isinstance(phi, UpdateDiamond):
            return any(self.eval(phi.body, q2) for q2 in self.succ(q, phi.arg))
        if isinstance(phi, ExistsDiamond):
            return any(
                self.eval(phi.body, q2)
                for p in self.domain
                for q2 in self.succ(q, p)
            )
        raise TypeError(f"not a white formula: {phi!r}")


def check(
    b: Basis,
    phi: WhiteFormula,
    q: State = ROOT,
    cfg: CheckConfig = DEFAULT_CONFIG,
    stats: Optional[CheckStats] = None,
) -> bool:
    """Evaluate `phi` at `q`, with the existential diamond over the finite domain."""
    _validate_state(b, q)
    _validate_pool(phi, cfg)
    domain = sorted(_domain(b, phi, cfg, q.args))
    return _Evaluator(b, cfg, domain, stats).eval(phi, q)


def check_at_root(
    b: Basis,
    phi: WhiteFormula,
    cfg: CheckConfig = DEFAULT_CONFIG,
    stats: Optional[CheckStats] = None,
) -> bool:
    """Shrink the basis to the formula's vicinity, then check at the empty state."""
    from .basis import shrink

    return check(shrink(b, phi), phi, ROOT, cfg, stats)


# --- witness traces ----------------------------------------------------------


def _state_json(q: State) -> dict:
    return {
        "args": sorted(a.name for a in q.args),
        "edges": sorted([x.name, y.name] for x, y in q.edges),
    }


def check_with_trace(
    b: Basis,
    phi: WhiteFormula,
    q: State = ROOT,
    cfg: CheckConfig = DEFAULT_CONFIG,
) -> tuple[bool, Optional[dict]]:
    """Like `check`, but with a JSON-ready witness tree when the verdict is true.

    Each existential step records the argument chosen, the edges the event
    added, and the resulting state, so a satisfying deliberative timeline can
    be replayed.
    """
    _validate_state(b, q)
    _validate_pool(phi, cfg)
    domain = sorted(_domain(b, phi, cfg, q.args))
    ev = _Evaluator(b, cfg, domain, None)

    def trace(f: WhiteFormula, at: State) -> tuple[bool, Optional[dict]]:
        if isinstance(f, BlackDiamond):
            ok = black_sat(at, cfg.semantics, f.body)
            node = {"subformula": format_formula(f), "substate": _state_json(at)}
            return ok, (node if ok else None)
        if isinstance(f, WhiteNeg):
            ok = not ev.eval(f.body, at)
            node = {"subformula": format_formula(f), "substate": _state_json(at)}
            return ok, (node if ok else None)
        if isinstance(f, WhiteAnd):
            ok1, w1 = trace(f.lhs, at)
            if not ok1:
                return False, None
            ok2, w2 = trace(f.rhs, at)
            if not ok2:
                return False, None
            node = {
                "subformula": format_formula(f),
                "substate": _state_json(at),
                "children": [w1, w2],
            }
            return True, node
        if isinstance(f, (UpdateDiamond, ExistsDiamond)):
            candidates = [f.arg] if isinstance(f, UpdateDiamond) else domain
            for p in candidates:
                for q2 in ev.succ(at, p):
                    ok, w = trace(f.body, q2)
                    if ok:
                        node = {
                            "argument": p.name,
                            "chosen_edge_set": sorted(
                                [x.name, y.name] for x, y in q2.edges - at.edges
                            ),
                            "substate": _state_json(q2),
                            "subformula": format_formula(f.body),
                            "witness": w,
                        }
                        return True, node
            return False, None
        raise TypeError(f"not a white formula: {f!r}")

    return trace(phi, q)


# --- brute-force oracle ------------------------------------------------------


def oracle_check(
    b: Basis,
    phi: WhiteFormula,
    q: State,
    universe: Iterable[Arg],
    sem: SemanticsKind = SemanticsKind.PREFERRED,
) -> bool:
    """Exhaustive evaluation: the existential diamond ranges over all of `universe`.

    No shrinking, no fresh pool, no memoization. The universe must cover
    every view endpoint and every argument occurring in the formula.
    """
    members = frozenset(arg(a) for a in universe)
    endpoint_gap = frozenset(v for e in b.union_view for v in e) - members
    if endpoint_gap:
        raise DomainError(f"universe is missing view endpoints: {sorted(endpoint_gap)}")
    formula_gap = (black_atoms(phi) | modal_args(phi)) - members
    if formula_gap:
        raise DomainError(f"universe is missing formula arguments: {sorted(formula_gap)}")
    _validate_state(b, q)
    order = sorted(members)

    def eval_at(f: WhiteFormula, at: State) -> bool:
        if isinstance(f, BlackDiamond):
            return black_sat(at, sem, f.body)
        if isinstance(f, WhiteNeg):
            return not eval_at(f.body, at)
        if isinstance(f, WhiteAnd):
            return eval_at(f.lhs, at) and eval_at(f.rhs, at)
        if isinstance(f, UpdateDiamond):
            return any(eval_at(f.body, q2) for q2 in successors(b, at, f.arg))
        if isinstance(f, ExistsDiamond):
            return any(
                eval_at(f.body, q2) for p in order for q2 in successors(b, at, p)
            )
        raise TypeError(f"not a white formula: {f!r}")

    return eval_at(phi, q)


# --- tree unfolding ----------------------------------------------------------


@dataclass(frozen=True)
class TreeNode:
    """A deliberative timeline: the events taken and the attack graph they built."""

    path: tuple[tuple[Arg, frozenset], ...]
    frame: Framework


def unfold_tree(b: Basis, depth: int, universe: Iterable[Arg]) -> list[TreeNode]:
    """All event sequences of length up to `depth` over `universe`, with frames.

    Children are ordered by argument id, then by the event enumeration order,
    so the listing is deterministic. Distinct events yield distinct nodes even
    when they produce the same frame.
    """
    order = sorted(arg(a) for a in universe)
    root = TreeNode((), Framework(frozenset(), frozenset()))
    out = [root]
    frontier = [root]
    for _ in range(depth):
        next_frontier = []
        for node in frontier:
            at = State(node.frame.nodes, node.frame.edges)
            for p in order:
                for event in update_set(b, at, p):
                    frame = Framework(node.frame.nodes | {p}, node.frame.edges | event)
                    next_frontier.append(TreeNode(node.path + ((p, event),), frame))
        out.extend(next_frontier)
        frontier = next_frontier
    return out


# --- bounded bisimulation game -----------------------------------------------


def n_bisimilar(
    b1: Basis,
    q1: State,
    b2: Basis,
    q2: State,
    n: int,
    symbols: Iterable[Arg],
    universe: Iterable[Arg],
    sem: SemanticsKind = SemanticsKind.PREFERRED,
) -> bool:
    """Decide the n-round bisimulation game modulo `symbols`, over `universe`.

    Every surviving pair must agree on the components containing `symbols`;
    each round demands mutual successor matching through the update relation
    of every argument in `universe` and through their union (the existential
    relation). `sem` is carried for signature parity with the models being
    compared; the game itself never evaluates extensions.
    """
    del sem
    wanted = frozenset(arg(s) for s in symbols)
    order = sorted(arg(a) for a in universe)
    memo: dict[tuple[State, State, int], bool] = {}

    def marked(v: State) -> Framework:
        return components_containing(Framework(v.args, v.edges), wanted)

    def game(v: State, w: State, i: int) -> bool:
        key = (v, w, i)
        cached = memo.get(key)
        if cached is not None:
            return cached
        memo[key] = False  # cycles cannot occur (i decreases) but stay safe
        if marked(v) != marked(w):
            return False
        result = True
        if i > 0:
            relations = [(p, successors(b1, v, p), successors(b2, w, p)) for p in order]
            exists1 = tuple({s: None for _, sv, _ in relations for s in sv})
            exists2 = tuple({s: None for _, _, sw in relations for s in sw})
            relations.append((None, exists1, exists2))
            for _, sv, sw in relations:
                forth = all(any(game(u, u2, i - 1) for u2 in sw) for u in sv)
                back = forth and all(any(game(u, u2, i - 1) for u in sv) for u2 in sw)
                if not (forth and back):
                    result = False
                    break
        memo[key] = result
        return result

    return game(q1, q2, n)
