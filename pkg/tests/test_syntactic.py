import pytest

from automata.automaton import empty_automaton, universal_automaton
from automata.language_pair import LanguagePair, require_language_pair
from automata.membership import membership
from cli.oracles import random_automaton, random_regular_tree, random_term, shuffle_successors
from errors import ArityMismatchError
from syntactic.algebra import check_congruence, class_sizes, classify, recognizes, syntactic_algebra
from syntactic.commutativity import CommutativityResult, is_commutative
from syntactic.congruence import separating_context, synt_equiv
from syntactic.elements import element_of, reachable_elements
from terms.alphabet import RankedAlphabet
from terms.context import substitute_hole
from terms.regular_tree import GraphNode, RegularTree, from_term
from terms.term import Node, Term, Var

C = Node("c")
A_CC = Term(0, Node("a", (C, C)))


@pytest.fixture(scope="module")
def contains_a_algebra(contains_a_language):
    return syntactic_algebra(contains_a_language, 1)


def test_contains_a_classes(contains_a_algebra):
    # arity 0: with or without an a; arity 1: accepting, rejecting, or waiting for the argument
    assert class_sizes(contains_a_algebra) == {0: 2, 1: 3}
    assert classify(contains_a_algebra, A_CC).accepting
    assert not classify(contains_a_algebra, Term(0, C)).accepting
    assert contains_a_algebra.accepting == [classify(contains_a_algebra, A_CC).id]


def test_universal_language_has_one_class_per_arity(everything_language):
    assert class_sizes(syntactic_algebra(everything_language, 1)) == {0: 1, 1: 1}


def test_classes_partition_the_reachable_values(contains_a_algebra):
    for arity, classes in contains_a_algebra.classes.items():
        values = [member.value for algebra_class in classes for member in algebra_class.members]
        assert len(values) == len(set(values))
        assert len(classes) <= len(values)
        assert all(algebra_class.arity == arity for algebra_class in classes)


def test_recognizes_agrees_with_membership(contains_a_language, contains_a_algebra, alphabet, rng):
    for _ in range(20):
        t = random_term(rng, alphabet, 0, 8)
        assert recognizes(contains_a_language, contains_a_algebra, t) == membership(contains_a_language.positive, t)


def test_recognizes_needs_the_language_arity(contains_a_language, contains_a_algebra):
    with pytest.raises(ArityMismatchError):
        recognizes(contains_a_language, contains_a_algebra, Term(1, Node("b", (Var(0), C))))


def test_synt_equiv(contains_a_language, all_b):
    a_cc = element_of(contains_a_language, A_CC)
    assert synt_equiv(contains_a_language, a_cc, a_cc)
    assert not synt_equiv(contains_a_language, a_cc, element_of(contains_a_language, Term(0, C)))
    assert synt_equiv(
        contains_a_language,
        element_of(contains_a_language, Term(0, Node("b", (C, C)))),
        element_of(contains_a_language, all_b),
    )


def test_synt_equiv_on_arity_one(contains_a_language):
    left = element_of(contains_a_language, Term(1, Node("b", (Var(0), C))))
    right = element_of(contains_a_language, Term(1, Node("b", (C, Var(0)))))
    constant = element_of(contains_a_language, Term(1, Node("a", (C, C))))
    assert synt_equiv(contains_a_language, left, right)
    assert not synt_equiv(contains_a_language, left, constant)


def test_synt_equiv_rejects_mixed_arities(contains_a_language):
    with pytest.raises(ArityMismatchError):
        synt_equiv(
            contains_a_language,
            element_of(contains_a_language, A_CC),
            element_of(contains_a_language, Term(1, Node("b", (Var(0), C)))),
        )


def test_separating_context_separates(contains_a_language, first_child_a_language):
    first = Term(0, Node("b", (A_CC.root, C)))
    second = Term(0, Node("b", (C, A_CC.root)))
    cases = [
        (contains_a_language, A_CC, Term(0, C)),
        (first_child_a_language, first, second),
    ]
    for language, u, v in cases:
        context = separating_context(language, element_of(language, u), element_of(language, v))
        assert context is not None
        left = membership(language.positive, substitute_hole(context, from_term(u)))
        right = membership(language.positive, substitute_hole(context, from_term(v)))
        assert left != right


def test_composition_table_is_a_congruence(contains_a_algebra, rng):
    assert check_congruence(contains_a_algebra, 100, rng) == []


def test_commutativity(contains_a_language, first_child_a_language):
    assert is_commutative(contains_a_language) == CommutativityResult(True)
    assert is_commutative(first_child_a_language) == CommutativityResult(False, "a", (1, 0))


def test_commutativity_through_the_algebra(everything_language):
    algebra = syntactic_algebra(everything_language, 2)
    assert is_commutative(everything_language, algebra).commutative


def test_languages_without_wide_symbols_are_commutative():
    alphabet = RankedAlphabet.of({"b": 1, "c": 0})
    language = require_language_pair(universal_automaton(alphabet), empty_automaton(alphabet))
    assert is_commutative(language).commutative


def test_commutative_languages_ignore_successor_order(contains_a_language, alphabet, rng):
    for _ in range(40):
        g = random_regular_tree(rng, alphabet, 5)
        shuffled = shuffle_successors(rng, g)
        assert membership(contains_a_language.positive, shuffled) == membership(contains_a_language.positive, g)


def lasso(prefix, cycle):
    """The regular tree reading the unary word `prefix` then repeating `cycle` forever."""
    word = list(prefix) + list(cycle)
    nodes = {
        f"n{index}": GraphNode(label, None, (f"n{index + 1}" if index + 1 < len(word) else f"n{len(prefix)}",))
        for index, label in enumerate(word)
    }
    return RegularTree(0, "n0", nodes)


def test_infinite_branch_is_told_from_finite_ones(infinite_b_words_language):
    algebra = syntactic_algebra(infinite_b_words_language, 0)
    assert class_sizes(algebra) == {0: 2}
    assert recognizes(infinite_b_words_language, algebra, lasso("", "b"))
    assert not recognizes(infinite_b_words_language, algebra, Term(0, Node("b", (C,))))


def test_recurring_a_is_recognized(infinitely_many_a_language):
    algebra = syntactic_algebra(infinitely_many_a_language, 0)
    assert class_sizes(algebra) == {0: 2}
    assert recognizes(infinitely_many_a_language, algebra, lasso("", "a"))
    assert recognizes(infinitely_many_a_language, algebra, lasso("b", "ab"))
    assert not recognizes(infinitely_many_a_language, algebra, lasso("a", "b"))
    assert not recognizes(infinitely_many_a_language, algebra, Term(0, C))


@pytest.mark.parametrize("symbols", [{"b": 1, "c": 0}, {"a": 1, "b": 1, "c": 0}])
def test_every_unary_regular_tree_is_reached(symbols, rng):
    alphabet = RankedAlphabet.of(symbols)
    for _ in range(5):
        language = LanguagePair(random_automaton(rng, alphabet), empty_automaton(alphabet))
        values = {element.value for element in reachable_elements(language, 0)}
        for _ in range(20):
            g = random_regular_tree(rng, alphabet, 4)
            assert element_of(language, g).value in values


CORPUS_LANGUAGES = [
    "contains_a_language",
    "first_child_a_language",
    "everything_language",
    "infinite_b_words_language",
    "infinitely_many_a_language",
]


@pytest.mark.parametrize("name", CORPUS_LANGUAGES)
def test_recognizes_regular_trees(name, request, rng):
    language = request.getfixturevalue(name)
    algebra = syntactic_algebra(language, 0)
    for _ in range(20):
        g = random_regular_tree(rng, language.alphabet, 4)
        assert recognizes(language, algebra, g) == membership(language.positive, g)


def test_recognizes_regular_trees_with_wider_classes(contains_a_language, contains_a_algebra, alphabet, rng):
    for _ in range(20):
        g = random_regular_tree(rng, alphabet, 5)
        assert recognizes(contains_a_language, contains_a_algebra, g) == membership(contains_a_language.positive, g)


@pytest.fixture(
    scope="module",
    params=[
        ("contains_a_language", 0),
        ("contains_a_language", 1),
        ("first_child_a_language", 0),
        ("infinite_b_words_language", 0),
        ("infinitely_many_a_language", 0),
    ],
)
def pairwise(request):
    """Reached elements of each arity with synt_equiv decided for every pair."""
    name, max_arity = request.param
    language = request.getfixturevalue(name)
    elements = reachable_elements(language, max_arity)
    by_arity = {}
    for element in elements:
        by_arity.setdefault(element.arity, []).append(element)
    relation = {
        arity: [[synt_equiv(language, left, right) for right in group] for left in group]
        for arity, group in by_arity.items()
    }
    return language, max_arity, by_arity, relation


def test_synt_equiv_is_an_equivalence(pairwise):
    _, _, by_arity, relation = pairwise
    for arity, group in by_arity.items():
        equiv = relation[arity]
        size = len(group)
        for i in range(size):
            assert equiv[i][i]
            for j in range(size):
                assert equiv[i][j] == equiv[j][i]
                if not equiv[i][j]:
                    continue
                for k in range(size):
                    if equiv[j][k]:
                        assert equiv[i][k]


def test_classes_match_pairwise_equivalence(pairwise):
    language, max_arity, by_arity, relation = pairwise
    algebra = syntactic_algebra(language, max_arity)
    for arity, group in by_arity.items():
        expected = {
            frozenset(other.value for other, same in zip(group, relation[arity][index]) if same)
            for index in range(len(group))
        }
        actual = {
            frozenset(member.value for member in algebra_class.members) for algebra_class in algebra.classes[arity]
        }
        assert len(algebra.classes[arity]) == len(expected)
        assert actual == expected


def test_commutative_algebra_ignores_successor_order(contains_a_language, contains_a_algebra, alphabet, rng):
    assert is_commutative(contains_a_language, contains_a_algebra).commutative
    for _ in range(20):
        g = random_regular_tree(rng, alphabet, 5)
        shuffled = shuffle_successors(rng, g)
        assert recognizes(contains_a_language, contains_a_algebra, shuffled) == recognizes(
            contains_a_language, contains_a_algebra, g
        )
