import random

import pytest

from delibcheck import (
    CheckConfig,
    CheckStats,
    DomainError,
    FreshPoolError,
    ROOT,
    SemanticsKind,
    arg,
    black_sat,
    check,
    check_at_root,
    check_with_trace,
    oracle_check,
    parse_black,
    parse_formula,
    quantifier_domain,
    state,
    successors,
    unfold_tree,
    update_set,
    white_depth,
)
from delibcheck.randgen import random_basis, random_white_formula

from conftest import SIX_TRUE_FORMULAS, args, basis, edge

PREF = SemanticsKind.PREFERRED


# --- black satisfaction -------------------------------------------------------


def test_black_sat_tautology_at_empty_state():
    assert black_sat(ROOT, PREF, parse_black("p -> p"))


def test_black_sat_credulous_acceptance():
    q = state(edges=[("p", "q"), ("q", "p")])
    assert black_sat(q, PREF, parse_black("p"))
    assert black_sat(q, PREF, parse_black("q"))
    assert not black_sat(q, PREF, parse_black("p & q"))


def test_black_sat_self_attacker_stays_undecided():
    q = state(edges=[("p", "p")])
    assert not black_sat(q, PREF, parse_black("p"))
    assert not black_sat(q, PREF, parse_black("~p"))


def test_black_sat_stable_without_extensions():
    q = state(edges=[("p", "p")])
    assert not black_sat(q, SemanticsKind.STABLE, parse_black("p -> p"))


# --- quantifier domain ----------------------------------------------------------


def test_quantifier_domain_vicinity_plus_fresh(worked_basis):
    phi = parse_formula("E*[[p]]")
    assert quantifier_domain(worked_basis, phi) == args("p", "q", "_fresh0")


def test_quantifier_domain_depth_zero(worked_basis):
    phi = parse_formula("<<p>>")
    assert quantifier_domain(worked_basis, phi) == args("p")


def test_quantifier_domain_override_passthrough(worked_basis):
    cfg = CheckConfig(quantifier_domain_override=args("x", "y"))
    phi = parse_formula("E*[[p]]")
    assert quantifier_domain(worked_basis, phi, cfg) == args("x", "y")


def test_quantifier_domain_includes_modal_indices(crossing_basis):
    phi = parse_formula("<zzz> E* [[p]]")
    domain = quantifier_domain(crossing_basis, phi)
    assert args("zzz", "p", "q") <= domain
    assert sum(1 for a in domain if a.name.startswith("_fresh")) == 2


def test_fresh_pool_skips_taken_names(crossing_basis):
    b = basis({"a": [("p", "q")], "b": [("q", "p")]}, extra=["_fresh0"])
    phi = parse_formula("E*[[p]]")
    domain = quantifier_domain(b, phi)
    assert arg("_fresh1") in domain and arg("_fresh0") not in domain - b.arguments


# --- check ------------------------------------------------------------------------


def test_check_six_formulas_from_worked_example(worked_basis):
    for text in SIX_TRUE_FORMULAS:
        assert check_at_root(worked_basis, parse_formula(text)), text


def test_check_crossing_basis_box_diamond(crossing_basis):
    assert check_at_root(crossing_basis, parse_formula("[q]<p>[[p]]"))
    assert check_at_root(crossing_basis, parse_formula("[p]<q>[[q]]"))
    assert not check_at_root(crossing_basis, parse_formula("<p>[q][[p]]"))


def test_check_tautology_diamond_any_state(crossing_basis):
    phi = parse_formula("<<p -> p>>")
    assert check(crossing_basis, phi, ROOT)
    assert check(crossing_basis, phi, state(args=["p", "q"]))


def test_check_exists_tautology_after_one_update(crossing_basis):
    assert check_at_root(crossing_basis, parse_formula("E* <<p -> p>>"))


def test_check_exists_box_p_on_crossing(crossing_basis):
    assert check_at_root(crossing_basis, parse_formula("E*[[p]]"))


def test_check_rejects_invalid_state(crossing_basis):
    solo = basis({"only": [("p", "q")]})
    with pytest.raises(DomainError):
        check(solo, parse_formula("<<p>>"), state(args=["p", "q"]))


def test_check_fresh_pool_too_small_is_config_error(worked_basis):
    phi = parse_formula("E* E* <<p>>")
    with pytest.raises(FreshPoolError):
        check(worked_basis, phi, ROOT, CheckConfig(fresh_pool_size=1))
    assert check(worked_basis, phi, ROOT, CheckConfig(fresh_pool_size=2))


def test_check_override_waives_pool_requirement(worked_basis):
    phi = parse_formula("E* E* <<p>>")
    cfg = CheckConfig(
        fresh_pool_size=0, quantifier_domain_override=args("p", "q")
    )
    assert check(worked_basis, phi, ROOT, cfg)


def test_check_memoization_is_transparent():
    rng = random.Random(19)
    for _ in range(25):
        b = random_basis(rng, max_args=4, max_agents=3)
        phi = random_white_formula(rng, sorted(b.arguments), max_depth=2)
        plain = check_at_root(b, phi)
        memoized = check_at_root(b, phi, CheckConfig(memoize=True))
        assert plain == memoized


def test_check_collects_stats(worked_basis):
    stats = CheckStats()
    check_at_root(worked_basis, parse_formula("E*[[p]]"), stats=stats)
    assert stats.states_visited > 0
    assert stats.successors_enumerated > 0


# --- oracle ------------------------------------------------------------------------


def test_oracle_matches_on_worked_example(worked_basis):
    universe = args("p", "q", "f0", "f1")
    for text in SIX_TRUE_FORMULAS:
        assert oracle_check(worked_basis, parse_formula(text), ROOT, universe), text


def test_oracle_universe_must_cover_views(crossing_basis):
    with pytest.raises(DomainError):
        oracle_check(crossing_basis, parse_formula("<<p>>"), ROOT, args("p"))


def test_oracle_universe_must_cover_formula(crossing_basis):
    with pytest.raises(DomainError):
        oracle_check(
            crossing_basis, parse_formula("<zzz><<p>>"), ROOT, args("p", "q")
        )


def test_oracle_reduces_to_black_checking_without_views():
    b = basis({"a": []}, extra=["p"])
    phi = parse_formula("E* <<p>>")
    assert oracle_check(b, phi, ROOT, args("p"))
    assert not oracle_check(b, parse_formula("E* <<~p>>"), ROOT, args("p"))


def test_oracle_agreement_smoke():
    rng = random.Random(20)
    for _ in range(25):
        b = random_basis(rng, max_args=4, max_agents=3)
        phi = random_white_formula(rng, sorted(b.arguments), max_depth=2)
        universe = b.arguments | {arg(f"w{i}") for i in range(white_depth(phi))}
        assert check_at_root(b, phi) == oracle_check(b, phi, ROOT, universe)


def test_fresh_witness_is_sometimes_the_only_one():
    # "some update leaves p undecided": every named argument breaks the body
    # (updating p makes it accepted), so the generic fresh witness is essential
    b = basis({"a": []}, extra=["p"])
    phi = parse_formula("E* [[~p]]")
    assert check_at_root(b, phi)
    assert oracle_check(b, phi, ROOT, args("p", "spare"))
    # with the pool overridden away, the diamond loses its witness
    cfg = CheckConfig(quantifier_domain_override=args("p"))
    assert not check_at_root(b, phi, cfg)


# --- fresh-argument irrelevance ---------------------------------------------------


def test_fresh_argument_irrelevance(worked_basis):
    rng = random.Random(21)
    fresh_a, fresh_b = arg("spareX"), arg("spareY")
    q = successors(worked_basis, ROOT, arg("p"))[0]
    for _ in range(20):
        body = random_white_formula(rng, [arg("p"), arg("q")], max_depth=1)
        via_a = successors(worked_basis, q, fresh_a)
        via_b = successors(worked_basis, q, fresh_b)
        assert len(via_a) == len(via_b)
        for qa, qb in zip(via_a, via_b):
            assert qa.edges == qb.edges
            assert check(worked_basis, body, qa) == check(worked_basis, body, qb)


# --- tree unfolding ----------------------------------------------------------------


def test_unfold_depth_zero_is_root_only(worked_basis):
    (root,) = unfold_tree(worked_basis, 0, args("p", "q"))
    assert root.path == ()
    assert root.frame.nodes == frozenset() and root.frame.edges == frozenset()


def test_unfold_depth_one_matches_first_successors(worked_basis):
    nodes = unfold_tree(worked_basis, 1, args("p", "q"))
    p_frames = {
        (n.frame.nodes, n.frame.edges) for n in nodes if n.path and n.path[0][0] == arg("p")
    }
    assert p_frames == {
        (args("p"), frozenset()),
        (args("p"), frozenset({edge("p", "p")})),
    }


def test_unfold_single_agent_one_child_per_argument():
    b = basis({"solo": [("p", "q")]})
    nodes = unfold_tree(b, 1, args("p", "q"))
    children = [n for n in nodes if len(n.path) == 1]
    assert len(children) == 2
    assert sorted(n.path[0][0].name for n in children) == ["p", "q"]


def test_unfold_frames_accumulate_along_paths(crossing_basis):
    for node in unfold_tree(crossing_basis, 2, args("p", "q")):
        rebuilt_nodes, rebuilt_edges = frozenset(), frozenset()
        for p, event in node.path:
            rebuilt_nodes |= {p}
            rebuilt_edges |= event
        assert node.frame.nodes == rebuilt_nodes
        assert node.frame.edges == rebuilt_edges


def test_unfold_counts_events_not_states(crossing_basis):
    q = state(args=["p"])
    events = update_set(crossing_basis, q, arg("q"))
    nodes = unfold_tree(crossing_basis, 2, args("p", "q"))
    via_pq = [
        n for n in nodes if [step[0] for step in n.path] == [arg("p"), arg("q")]
    ]
    assert len(via_pq) == len(events)


# --- traces -----------------------------------------------------------------------


def _replay(witness, at_args=frozenset(), at_edges=frozenset()):
    """Walk a witness tree and confirm each recorded substate is reachable."""
    if witness is None:
        return
    if "argument" in witness:
        at_args = at_args | {witness["argument"]}
        at_edges = at_edges | {tuple(e) for e in witness["chosen_edge_set"]}
        assert set(witness["substate"]["args"]) == at_args
        assert {tuple(e) for e in witness["substate"]["edges"]} == at_edges
        _replay(witness["witness"], at_args, at_edges)
    for child in witness.get("children", []):
        _replay(child, at_args, at_edges)


def test_trace_replays_the_timeline(worked_basis):
    ok, witness = check_with_trace(worked_basis, parse_formula("E* E* (<<p>> & <<q>>)"))
    assert ok and witness is not None
    assert witness["argument"] in {"p", "q"}
    _replay(witness)


def test_trace_absent_when_false(crossing_basis):
    ok, witness = check_with_trace(crossing_basis, parse_formula("<p>[q][[p]]"))
    assert not ok and witness is None
