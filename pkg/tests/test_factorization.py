import pytest

from cli.oracles import random_automaton, random_term
from errors import MissingTableEntryError
from factorization.low_arity import (
    PhiTable,
    decide_low_arity,
    evaluated_label,
    evaluated_tree,
    h_sets,
    profile_label_evaluator,
    profile_labels,
)
from factorization.pieces import Piece, find_piece, is_reduced, pieces
from factorization.reduction import enumerate_factorizations, reduce, singleton_factorization
from profiles.evaluation import phi, pi_eval
from terms.alphabet import RankedAlphabet
from terms.term import Node, Term, Var, flatten, height, is_in_f, sing

C = Node("c")


@pytest.mark.parametrize(
    "t, reduced",
    [
        (Term(0, C), True),
        (Term(2, Node("a", (Var(0), Var(1)))), True),
        (Term(2, Node("a", (Node("b", (Var(0),)), Var(1)))), True),
        (Term(2, Node("a", (Node("b", (Node("b", (Var(0),)),)), Var(1)))), False),
        (Term(0, Node("a", (C, C))), False),
        (Term(1, Node("a", (Var(0), C))), False),
    ],
)
def test_is_reduced(t, reduced):
    assert is_reduced(t)[0] == reduced


def test_find_piece_returns_the_unary_chain():
    t = Term(2, Node("a", (Node("b", (Node("b", (Var(0),)),)), Var(1))))
    assert find_piece(t) == Piece((0,), None, frozenset({(0,), (0, 0)}), 1)


def test_pieces_count_variable_leaves_and_the_cut():
    t = Term(2, Node("a", (Node("b", (Var(0),)), Var(1))))
    found = list(pieces(t))
    assert Piece((), None, frozenset({(), (0,)}), 2) in found
    assert Piece((), (0,), frozenset({()}), 2) in found
    assert list(pieces(t, max_arity=1)) == [Piece((0,), None, frozenset({(0,)}), 1)]


def test_reduce_of_a_variable_free_term_is_one_factor():
    t = Term(0, Node("a", (C, Node("b", (C, C)))))
    assert reduce(t) == sing(t)


def test_reduce_keeps_reduced_terms_as_singletons():
    t = Term(2, Node("a", (Var(0), Var(1))))
    assert reduce(t) == singleton_factorization(t)


def test_reduce_collapses_below_the_branching_vertex():
    t = Term(2, Node("a", (Node("a", (Var(0), C)), Var(1))))
    outer = reduce(t)
    factor = Term(1, Node("a", (Var(0), C)))
    assert outer == Term(2, Node(Term(2, Node("a", (Var(0), Var(1)))), (Node(factor, (Var(0),)), Var(1))))


def test_reduce_rejects_a_variable_root():
    with pytest.raises(ValueError):
        reduce(Term(1, Var(0)))


@pytest.mark.parametrize("max_arity", [0, 1, 2, 3])
def test_reduced_factorizations_are_low(unary_alphabet, rng, max_arity):
    for _ in range(250):
        t = random_term(rng, unary_alphabet, int(rng.integers(0, max_arity + 1)), 25)
        factors = []
        outer = reduce(t, factors.append)
        assert height(outer.root) <= 2 * t.arity, t
        assert flatten(outer) == t
        assert is_reduced(outer)[0]
        assert is_in_f(outer)
        assert all(factor.arity <= 1 for factor in factors)


def test_enumerate_factorizations(unary_alphabet, rng):
    for _ in range(30):
        t = random_term(rng, unary_alphabet, int(rng.integers(0, 3)), 7)
        found = list(enumerate_factorizations(t))
        assert len(found) == len(set(found))
        assert singleton_factorization(t) in found
        assert reduce(t) in found
        assert all(flatten(outer) == t and is_in_f(outer) for outer in found)
        low = list(enumerate_factorizations(t, max_height=2 * t.arity))
        assert set(low) <= set(found)
        assert all(height(outer.root) <= 2 * t.arity for outer in low)


def test_phi_table_covers_only_low_arities(contains_a_language):
    table = PhiTable(contains_a_language.positive)
    t = Term(1, Node("b", (Var(0), C)))
    assert table[t] == phi(contains_a_language.positive, t)
    assert len(table) == 1
    with pytest.raises(KeyError):
        table[Term(2, Node("a", (Var(0), Var(1))))]


def test_evaluated_label(contains_a_language):
    table = PhiTable(contains_a_language.positive)
    assert evaluated_label(Term(2, Node("a", (Var(0), Var(1)))), table) == "a"
    with pytest.raises(MissingTableEntryError):
        evaluated_label(Term(2, Node("a", (Var(1), Var(0)))), table)
    with pytest.raises(MissingTableEntryError):
        evaluated_label(Term(0, C), {})


def test_evaluated_tree_evaluates_like_the_term(contains_a_language, alphabet, rng):
    automaton = contains_a_language.positive
    table = PhiTable(automaton)
    evaluate = profile_label_evaluator(automaton)
    for _ in range(50):
        t = random_term(rng, alphabet, int(rng.integers(0, 3)), 10)
        assert evaluate(evaluated_tree(reduce(t), table)) == phi(automaton, t)


def test_decide_low_arity_on_variable_free_terms(unary_alphabet, rng):
    for _ in range(10):
        automaton = random_automaton(rng, unary_alphabet)
        table = PhiTable(automaton)
        h = h_sets(profile_labels(automaton), profile_label_evaluator(automaton), 0, 0)
        for _ in range(10):
            t = random_term(rng, unary_alphabet, 0, 10)
            value = phi(automaton, t)
            assert decide_low_arity(t, value, table, h)
            for other in h:
                if other != value:
                    assert not decide_low_arity(t, other, table, h)


def test_decide_low_arity_on_unary_terms(rng):
    alphabet = RankedAlphabet.of({"b": 1, "c": 0})
    for _ in range(5):
        automaton = random_automaton(rng, alphabet)
        table = PhiTable(automaton)
        evaluate = profile_label_evaluator(automaton)
        h = h_sets(profile_labels(automaton), evaluate, 1, 2)
        for target, group in h.items():
            assert all(pi_eval(s) == target for s in group)
        for _ in range(10):
            t = random_term(rng, alphabet, 1, 8)
            value = phi(automaton, t)
            assert decide_low_arity(t, value, table, h)
            assert not any(decide_low_arity(t, other, table, h) for other in h if other != value)


def test_decide_low_arity_without_h_set(contains_a_language):
    t = Term(0, Node("a", (C, C)))
    assert not decide_low_arity(t, phi(contains_a_language.positive, t), PhiTable(contains_a_language.positive), {})
