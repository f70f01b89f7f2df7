from fractions import Fraction
from itertools import product
from math import comb

import pytest
from conftest import graph_and_perm, graph_and_switching, signed_graphs
from hypothesis import given
from oracles import ell_complete, ell_cycle

from tokensign import SignedGraph, family, frustration_index, is_balanced, switch, token_graph, unbalance_level
from tokensign.core import negate
from tokensign.errors import TooLarge
from tokensign.measures import (
    check_frustration_bounds,
    ell,
    evaluate_monotonicity,
    explore_monotonicity,
    unbalance_level_m,
)


def brute_frustration(g):
    return min(sum(1 for u, v, s in g.edges if vals[u - 1] * s * vals[v - 1] < 0)
               for vals in product((1, -1), repeat=g.n))


# ---------------------------------------------------------------- frustration

@given(signed_graphs(max_n=7))
def test_frustration_matches_brute_force(g):
    res = frustration_index(g)
    assert res.index == brute_frustration(g)
    assert switch(g, res.witness).m_neg == res.index
    assert len(res.removed_edges) == res.index


@given(signed_graphs())
def test_frustration_zero_iff_balanced(g):
    assert (frustration_index(g).index == 0) == is_balanced(g)


@given(signed_graphs())
def test_removing_witness_edges_balances(g):
    res = frustration_index(g)
    kept = [e for e in g.edges if (e[0], e[1]) not in set(res.removed_edges)]
    assert is_balanced(SignedGraph(g.n, tuple(kept)))


def test_frustration_tie_break_prefers_plus_first():
    res = frustration_index(family("Cn_minus", 3))
    assert res.witness.values == (1, 1, 1)


def test_frustration_known_values():
    assert frustration_index(family("all_neg_Kn", 5)).index == 4
    assert frustration_index(family("k5_three_negative")).index == 3
    assert frustration_index(family("all_neg_Cn", 5)).index == 1


def test_frustration_guard():
    with pytest.raises(TooLarge):
        frustration_index(family("Cn_minus", 30))


# ---------------------------------------------------------------- unbalance level

@pytest.mark.parametrize("n", range(3, 16))
def test_cycle_levels_match_closed_form(n):
    assert ell(family("Cn_minus", n)) == ell_cycle(n, -1)
    assert ell(family("all_neg_Cn", n)) == ell_cycle(n, (-1) ** n)


@pytest.mark.parametrize("n", range(2, 16))
@pytest.mark.parametrize("kind", ["Kn_minus", "neg_Kn_plus", "all_neg_Kn"])
def test_complete_levels_match_closed_form(n, kind):
    assert ell(family(kind, n)) == ell_complete(n, kind)


@given(signed_graphs())
def test_level_in_unit_interval_and_zero_iff_balanced(g):
    x = ell(g)
    assert 0 <= x <= 1
    assert (x == 0) == is_balanced(g)


@given(graph_and_switching())
def test_level_is_switching_invariant(gs):
    g, s = gs
    assert ell(switch(g, s)) == ell(g)


@given(graph_and_perm())
def test_level_is_relabelling_invariant(gp):
    g, perm = gp
    assert ell(g.relabel(perm)) == ell(g)


def test_level_components():
    res = unbalance_level(family("Kn_minus", 5))
    assert res.ell_n_minus_1 == Fraction(22, 93) and res.ell_n == Fraction(132, 323)
    assert res.ell == max(res.ell_n, res.ell_n_minus_1)
    assert res.signed_traces[:4] == (5, 0, 20, 24)
    assert unbalance_level_m(family("Kn_minus", 5), 5) == res.ell_n
    with pytest.raises(ValueError):
        unbalance_level_m(family("Kn_minus", 5), -1)


def test_edgeless_graph_level_is_zero():
    assert ell(SignedGraph(3)) == 0


def test_token_level_examples():
    assert ell(token_graph(family("Cn_minus", 5), 2).graph) == Fraction(59, 96)
    assert ell(token_graph(family("paw_unbalanced"), 2).graph) == Fraction(22, 39)


# ---------------------------------------------------------------- bounds

@given(signed_graphs(min_n=3, max_n=6))
def test_token_frustration_bounds(g):
    rep = check_frustration_bounds(g, 2)
    assert rep.holds
    assert rep.upper == comb(g.n - 2, 1) * rep.frustration


def test_bounds_guard():
    with pytest.raises(TooLarge):
        check_frustration_bounds(family("Kn_minus", 8), 3)


# ---------------------------------------------------------------- monotonicity explorer

def test_explorer_is_seeded():
    a = explore_monotonicity(20, 5, 2, seed=3)
    b = explore_monotonicity(20, 5, 2, seed=3)
    assert a.counts == b.counts and a.max_ell == b.max_ell and a.evaluated == 20


def test_explorer_counterexamples_recheck():
    rep = explore_monotonicity(60, 6, 2, seed=0)
    for stmt, cases in rep.counterexamples.items():
        for t in cases:
            fresh = evaluate_monotonicity(t.graph, t.other, 2, t.trial)
            assert not getattr(fresh, f"statement{stmt}")


def test_balanced_base_never_breaks_statement_one():
    rep = explore_monotonicity(30, 5, 2, seed=1, balanced_only=True)
    assert rep.counts[1] == 0


@given(signed_graphs(min_n=3, max_n=5))
def test_trial_fields_agree_with_direct_computation(g):
    other = negate(g)
    t = evaluate_monotonicity(g, other, 2)
    assert t.ell == ell(g) and t.ell_token_other == ell(token_graph(other, 2).graph)
    assert t.statement2 == (not t.frustration <= t.frustration_other
                            or t.token_frustration <= t.token_frustration_other)
