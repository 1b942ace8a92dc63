"""Model checking for deliberative dynamic logic over multi-agent argumentation.

A basis of per-agent attack graphs induces a space of faithful stepwise
updates toward a joint framework. Formulas pair a three-valued static layer
with dynamic modalities over deliberative futures; checking at the empty
state stays finite by shrinking every view to the vicinity of the formula's
atoms.
"""

from .arguments import Arg, arg, is_reserved
from .basis import (
    Basis,
    ROOT,
    State,
    complete_assents,
    format_basis_json,
    parse_basis,
    parse_basis_json,
    parse_basis_lines,
    restrict,
    satisfies_carrier,
    shrink,
    state,
    successors,
    update_set,
    vicinity,
)
from .checker import (
    CheckConfig,
    CheckStats,
    TreeNode,
    black_sat,
    check,
    check_at_root,
    check_with_trace,
    n_bisimilar,
    oracle_check,
    quantifier_domain,
    unfold_tree,
)
from .errors import (
    ApxFormatError,
    BasisFormatError,
    DomainError,
    FormulaSyntaxError,
    FreshPoolError,
    LayerError,
)
from .formulas import (
    Atom,
    BlackDiamond,
    BlackFormula,
    BlackImplies,
    BlackNeg,
    ExistsDiamond,
    HALF,
    ONE,
    TruthValue,
    UpdateDiamond,
    WhiteAnd,
    WhiteFormula,
    WhiteNeg,
    ZERO,
    black_and,
    black_atoms,
    black_box,
    black_iff,
    black_or,
    eval_black,
    format_black,
    format_formula,
    modal_args,
    update_box,
    white_box,
    white_depth,
    white_iff,
    white_implies,
    white_or,
)
from .framework import (
    Attack,
    EMPTY_FRAMEWORK,
    Framework,
    attackers,
    components,
    components_containing,
    format_apx,
    framework,
    parse_apx,
    targets,
)
from .parser import parse_black, parse_formula
from .semantics import (
    ALL_SEMANTICS,
    Labelling,
    SemanticsKind,
    acceptance,
    admissible_sets,
    check_normality,
    extensions,
    labelling,
    labellings,
)

__all__ = [
    "ALL_SEMANTICS",
    "ApxFormatError",
    "Arg",
    "Atom",
    "Attack",
    "Basis",
    "BasisFormatError",
    "BlackDiamond",
    "BlackFormula",
    "BlackImplies",
    "BlackNeg",
    "CheckConfig",
    "CheckStats",
    "DomainError",
    "EMPTY_FRAMEWORK",
    "ExistsDiamond",
    "FormulaSyntaxError",
    "Framework",
    "FreshPoolError",
    "HALF",
    "Labelling",
    "LayerError",
    "ONE",
    "ROOT",
    "SemanticsKind",
    "State",
    "TreeNode",
    "TruthValue",
    "UpdateDiamond",
    "WhiteAnd",
    "WhiteFormula",
    "WhiteNeg",
    "ZERO",
    "acceptance",
    "admissible_sets",
    "arg",
    "attackers",
    "black_and",
    "black_atoms",
    "black_box",
    "black_iff",
    "black_or",
    "black_sat",
    "check",
    "check_at_root",
    "check_normality",
    "check_with_trace",
    "complete_assents",
    "components",
    "components_containing",
    "eval_black",
    "extensions",
    "format_apx",
    "format_basis_json",
    "format_black",
    "format_formula",
    "framework",
    "is_reserved",
    "labelling",
    "labellings",
    "modal_args",
    "n_bisimilar",
    "oracle_check",
    "parse_apx",
    "parse_basis",
    "parse_basis_json",
    "parse_basis_lines",
    "parse_black",
    "parse_formula",
    "quantifier_domain",
    "restrict",
    "satisfies_carrier",
    "shrink",
    "state",
    "successors",
    "targets",
    "unfold_tree",
    "update_box",
    "update_set",
    "vicinity",
    "white_box",
    "white_depth",
    "white_iff",
    "white_implies",
    "white_or",
]
