"""The two-layer formula language.

The black layer is three-valued Lukasiewicz logic over argument atoms; its
only gateway into the dynamic layer is the diamond `<< a >>` ("some labelling
makes a fully true"). The white layer adds negation, conjunction, update
diamonds `<p>` and the existential update diamond `E*`. Everything else
(boxes, disjunction, implication) is parser-level sugar expanded here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arguments import Arg
from .semantics import Labelling

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)

TruthValue = Fraction
TRUTH_VALUES = (ZERO, HALF, ONE)


# --- black layer -----------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    arg: Arg


@dataclass(frozen=True)
class BlackNeg:
    body: "BlackFormula"


@dataclass(frozen=True)
class BlackImplies:
    lhs: "BlackFormula"
    rhs: "BlackFormula"


BlackFormula = Union[Atom, BlackNeg, BlackImplies]


# --- white layer -----------------------------------------------------------


@dataclass(frozen=True)
class BlackDiamond:
    body: BlackFormula


@dataclass(frozen=True)
class WhiteNeg:
    body: "WhiteFormula"


@dataclass(frozen=True)
class WhiteAnd:
    lhs: "WhiteFormula"
    rhs: "WhiteFormula"


@dataclass(frozen=True)
class UpdateDiamond:
    arg: Arg
    body: "WhiteFormula"


@dataclass(frozen=True)
class ExistsDiamond:
    body: "WhiteFormula"


WhiteFormula = Union[BlackDiamond, WhiteNeg, WhiteAnd, UpdateDiamond, ExistsDiamond]


# --- derived connectives ---------------------------------------------------

# Lukasiewicz: a|b := (a->b)->b evaluates to max, a&b := ~(~a|~b) to min.


def black_or(a: BlackFormula, b: BlackFormula) -> BlackFormula:
    return BlackImplies(BlackImplies(a, b), b)


def black_and(a: BlackFormula, b: BlackFormula) -> BlackFormula:
    return BlackNeg(black_or(BlackNeg(a), BlackNeg(b)))


def black_iff(a: BlackFormula, b: BlackFormula) -> BlackFormula:
    return black_and(BlackImplies(a, b), BlackImplies(b, a))


def black_box(a: BlackFormula) -> WhiteFormula:
    """[[a]]: every labelling makes `a` fully true."""
    return WhiteNeg(BlackDiamond(BlackNeg(a)))


def white_or(f: WhiteFormula, g: WhiteFormula) -> WhiteFormula:
    return WhiteNeg(WhiteAnd(WhiteNeg(f), WhiteNeg(g)))


def white_implies(f: WhiteFormula, g: WhiteFormula) -> WhiteFormula:
    return WhiteNeg(WhiteAnd(f, WhiteNeg(g)))


def white_iff(f: WhiteFormula, g: WhiteFormula) -> WhiteFormula:
    return WhiteAnd(white_implies(f, g), white_implies(g, f))


def update_box(p: Arg, f: WhiteFormula) -> WhiteFormula:
    """[p]f: every way of updating with p leads to f."""
    return WhiteNeg(UpdateDiamond(p, WhiteNeg(f)))


def white_box(f: WhiteFormula) -> WhiteFormula:
    """A* f: every update with any argument leads to f."""
    return WhiteNeg(ExistsDiamond(WhiteNeg(f)))


# --- measures --------------------------------------------------------------


def eval_black(lab: Labelling, alpha: BlackFormula) -> TruthValue:
    """Lukasiewicz value of `alpha` under a labelling; unlabelled atoms are 1/2."""
    if isinstance(alpha, Atom):
        if alpha.arg in lab.in_set:
            return ONE
        if alpha.arg in lab.out_set:
            return ZERO
        return HALF
    if isinstance(alpha, BlackNeg):
        return ONE - eval_black(lab, alpha.body)
    if isinstance(alpha, BlackImplies):
        v = ONE - (eval_black(lab, alpha.lhs) - eval_black(lab, alpha.rhs))
        return v if v < ONE else ONE
    raise TypeError(f"not a black formula: {alpha!r}")


def white_depth(phi: WhiteFormula) -> int:
    """Deepest nesting of white modal operators."""
    if isinstance(phi, BlackDiamond):
        return 0
    if isinstance(phi, WhiteNeg):
        return white_depth(phi.body)
    if isinstance(phi, WhiteAnd):
        return max(white_depth(phi.lhs), white_depth(phi.rhs))
    if isinstance(phi, (UpdateDiamond, ExistsDiamond)):
        return 1 + white_depth(phi.body)
    raise TypeError(f"not a white formula: {phi!r}")


def _black_atoms(alpha: BlackFormula, into: set[Arg]) -> None:
    if isinstance(alpha, Atom):
        into.add(alpha.arg)
    elif isinstance(alpha, BlackNeg):
        _black_atoms(alpha.body, into)
    elif isinstance(alpha, BlackImplies):
        _black_atoms(alpha.lhs, into)
        _black_atoms(alpha.rhs, into)
    else:
        raise TypeError(f"not a black formula: {alpha!r}")


def black_atoms(phi: WhiteFormula) -> frozenset[Arg]:
    """Arguments occurring inside some black subformula; modal indices excluded."""
    out: set[Arg] = set()

    def walk(f: WhiteFormula) -> None:
        if isinstance(f, BlackDiamond):
            _black_atoms(f.body, out)
        elif isinstance(f, WhiteNeg):
            walk(f.body)
        elif isinstance(f, WhiteAnd):
            walk(f.lhs)
            walk(f.rhs)
        elif isinstance(f, (UpdateDiamond, ExistsDiamond)):
            walk(f.body)
        else:
            raise TypeError(f"not a white formula: {f!r}")

    walk(phi)
    return frozenset(out)


def modal_args(phi: WhiteFormula) -> frozenset[Arg]:
    """Arguments appearing as `<p>` / `[p]` modal indices."""
    out: set[Arg] = set()

    def walk(f: WhiteFormula) -> None:
        if isinstance(f, BlackDiamond):
            return
        if isinstance(f, WhiteNeg):
            walk(f.body)
        elif isinstance(f, WhiteAnd):
            walk(f.lhs)
            walk(f.rhs)
        elif isinstance(f, UpdateDiamond):
            out.add(f.arg)
            walk(f.body)
        elif isinstance(f, ExistsDiamond):
            walk(f.body)
        else:
            raise TypeError(f"not a white formula: {f!r}")

    walk(phi)
    return frozenset(out)


# --- printing --------------------------------------------------------------

# Precedence: 1 binary, 2 unary, 3 self-delimiting. Right operand of `->` and
# left operand of `&` stay unparenthesised at their own level.


def format_black(alpha: BlackFormula, _prec: int = 0) -> str:
    if isinstance(alpha, Atom):
        return alpha.arg.name
    if isinstance(alpha, BlackNeg):
        text, prec = "~" + format_black(alpha.body, 2), 2
    elif isinstance(alpha, BlackImplies):
        text = format_black(alpha.lhs, 2) + " -> " + format_black(alpha.rhs, 1)
        prec = 1
    else:
        raise TypeError(f"not a black formula: {alpha!r}")
    return f"({text})" if prec < _prec else text


def format_formula(phi: WhiteFormula, _prec: int = 0) -> str:
    if isinstance(phi, BlackDiamond):
        return "<<" + format_black(phi.body) + ">>"
    if isinstance(phi, WhiteNeg):
        text, prec = "~" + format_formula(phi.body, 2), 2
    elif isinstance(phi, UpdateDiamond):
        text, prec = f"<{phi.arg.name}> " + format_formula(phi.body, 2), 2
    elif isinstance(phi, ExistsDiamond):
        text, prec = "E* " + format_formula(phi.body, 2), 2
    elif isinstance(phi, WhiteAnd):
        text = format_formula(phi.lhs, 1) + " & " + format_formula(phi.rhs, 2)
        prec = 1
    else:
        raise TypeError(f"not a white formula: {phi!r}")
    return f"({text})" if prec < _prec else text
