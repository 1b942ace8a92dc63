import pytest

from delibcheck import (
    Atom,
    FormulaSyntaxError,
    LayerError,
    arg,
    black_and,
    black_iff,
    black_or,
    parse_black,
    parse_formula,
    white_iff,
    white_implies,
    white_or,
)
from delibcheck.formulas import (
    BlackDiamond,
    BlackImplies,
    BlackNeg,
    ExistsDiamond,
    UpdateDiamond,
    WhiteAnd,
    WhiteNeg,
)

P, Q = Atom(arg("p")), Atom(arg("q"))


def test_update_diamond_black_box():
    phi = parse_formula("<p> [[ p ]]")
    assert phi == UpdateDiamond(arg("p"), WhiteNeg(BlackDiamond(BlackNeg(P))))


def test_nested_exists_conjunction():
    phi = parse_formula("E* E* (<< p >> & << q >>)")
    assert phi == ExistsDiamond(
        ExistsDiamond(WhiteAnd(BlackDiamond(P), BlackDiamond(Q)))
    )


def test_dangling_implication_is_syntax_error():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("<< p -> >>")
    assert not isinstance(err.value, LayerError)
    assert err.value.position == len("<< p -> ")


def test_atom_at_white_level_is_layer_error():
    with pytest.raises(LayerError):
        parse_formula("p & <<q>>")


def test_white_operator_in_black_layer_is_layer_error():
    with pytest.raises(LayerError):
        parse_formula("<< E* p >>")
    with pytest.raises(LayerError):
        parse_formula("<< <p> q >>")


def test_reserved_names_rejected_everywhere():
    with pytest.raises(FormulaSyntaxError, match="reserved"):
        parse_formula("<< _fresh0 >>")
    with pytest.raises(FormulaSyntaxError, match="reserved"):
        parse_formula("<_fresh1> <<p>>")


def test_unexpected_character_position():
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("<<p>> $")
    assert err.value.position == 6


def test_trailing_tokens_rejected():
    with pytest.raises(FormulaSyntaxError, match="after the formula"):
        parse_formula("<<p>> <<q>>")


def test_whitespace_insensitive():
    assert parse_formula("<p>[[p]]") == parse_formula(" < p > [[ p ]] ")


def test_white_sugar_expansion():
    f, g = BlackDiamond(P), BlackDiamond(Q)
    assert parse_formula("<<p>> | <<q>>") == white_or(f, g)
    assert parse_formula("<<p>> -> <<q>>") == white_implies(f, g)
    assert parse_formula("<<p>> <-> <<q>>") == white_iff(f, g)
    assert parse_formula("A* <<p>>") == WhiteNeg(ExistsDiamond(WhiteNeg(f)))
    assert parse_formula("[q] <<p>>") == WhiteNeg(
        UpdateDiamond(arg("q"), WhiteNeg(f))
    )


def test_black_sugar_expansion():
    assert parse_black("p | q") == black_or(P, Q)
    assert parse_black("p & q") == black_and(P, Q)
    assert parse_black("p <-> q") == black_iff(P, Q)


def test_precedence_unary_and_or_implies():
    # ~ binds tighter than &, & tighter than |, | tighter than ->
    assert parse_black("~p & q") == black_and(BlackNeg(P), Q)
    assert parse_black("p & q | p") == black_or(black_and(P, Q), P)
    assert parse_black("p | q -> p") == BlackImplies(black_or(P, Q), P)


def test_implication_right_associative():
    assert parse_black("p -> q -> p") == BlackImplies(P, BlackImplies(Q, P))
    phi = parse_formula("<<p>> -> <<q>> -> <<p>>")
    f, g = BlackDiamond(P), BlackDiamond(Q)
    assert phi == white_implies(f, white_implies(g, f))


def test_modalities_bind_tighter_than_binary():
    f, g = BlackDiamond(P), BlackDiamond(Q)
    assert parse_formula("E* <<p>> & <<q>>") == WhiteAnd(ExistsDiamond(f), g)
    assert parse_formula("E* (<<p>> & <<q>>)") == ExistsDiamond(WhiteAnd(f, g))


def test_parentheses_group_black_layer():
    assert parse_black("~(p -> q)") == BlackNeg(BlackImplies(P, Q))


def test_ident_tokens_can_start_with_digits_or_E():
    assert parse_black("0x & Ea") == black_and(Atom(arg("0x")), Atom(arg("Ea")))


def test_empty_input_is_syntax_error():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("")
