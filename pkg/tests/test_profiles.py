from itertools import product

import pytest

from automata.membership import membership
from automata.runs import RunProfile
from cli.oracles import random_automaton, random_regular_tree, random_term
from errors import ArityMismatchError
from factorization.reduction import enumerate_factorizations
from profiles.evaluation import (
    accepts_via_phi,
    generator_labels,
    phi,
    pi_eval,
    profile_set_of_regular,
    profiles_of_regular,
)
from profiles.profile_set import (
    Branch,
    VarAtom,
    normalize,
    partial_profile,
    profile_set_leq,
    rename,
)
from profiles.semigroup import Fin, Inf, s_mul, s_omega
from terms.enumeration import enumerate_terms
from terms.regular_tree import GraphNode, RegularTree
from terms.term import Node, Term, Var, flatten, relabel_term

C = Node("c")
STATES = ("p", "q")
SEGMENTS = [Fin(source, priority, target) for source in STATES for priority in range(3) for target in STATES]
ELEMENTS = SEGMENTS + [Inf(state) for state in STATES]


def test_s_mul():
    assert s_mul(Fin("p", 1, "q"), Fin("q", 0, "p")) == Fin("p", 0, "p")
    assert s_mul(Fin("p", 2, "q"), Inf("q")) == Inf("p")
    assert s_mul(Fin("p", 1, "q"), Fin("p", 0, "p")) is None
    assert s_mul(Inf("p"), Fin("p", 0, "p")) is None


def test_s_mul_is_associative():
    for x, y, z in product(ELEMENTS, repeat=3):
        xy = s_mul(x, y)
        yz = s_mul(y, z)
        left = None if xy is None else s_mul(xy, z)
        right = None if yz is None else s_mul(x, yz)
        assert left == right, (x, y, z)


def loops(max_length):
    for length in range(1, max_length + 1):
        yield from (list(loop) for loop in product(SEGMENTS, repeat=length))


def test_s_omega_is_invariant_under_rotation_and_unrolling():
    for prefix in [[]] + [[segment] for segment in SEGMENTS]:
        for loop in loops(3):
            value = s_omega(prefix, loop)
            if prefix:
                assert s_omega(prefix + loop[:1], loop[1:] + loop[:1]) == value
            assert s_omega(prefix, loop + loop) == value


def test_s_omega_needs_even_loop_minimum():
    assert s_omega([], [Fin("p", 2, "q"), Fin("q", 0, "p")]) == Inf("p")
    assert s_omega([], [Fin("p", 2, "q"), Fin("q", 1, "p")]) is None
    assert s_omega([Fin("q", 1, "p")], [Fin("p", 0, "p")]) == Inf("q")


def test_s_omega_rejects_an_empty_loop():
    with pytest.raises(ValueError):
        s_omega([Fin("p", 0, "p")], [])


def test_partial_profile_allows_one_atom_per_variable():
    with pytest.raises(ValueError):
        partial_profile([VarAtom("p", 0, "p", 0), VarAtom("p", 1, "q", 0)])


def test_normalize_keeps_the_weakest_obligations():
    weak = frozenset([Branch("p")])
    strong = frozenset([Branch("p"), VarAtom("p", 0, "q", 0)])
    assert normalize([weak, strong]) == frozenset([weak])
    assert profile_set_leq(frozenset([strong]), frozenset([weak]))
    assert not profile_set_leq(frozenset([weak]), frozenset([strong]))


def test_phi_of_corpus_symbols(contains_a_language):
    labels = generator_labels(contains_a_language.positive)
    assert labels["c"] == frozenset([frozenset([Branch("d")])])
    assert frozenset([Branch("s"), VarAtom("s", 0, "d", 0), VarAtom("s", 0, "d", 1)]) in labels["a"]
    assert len(labels["b"]) == 3


def test_phi_acceptance_agrees_with_membership(contains_a_language, first_child_a_language, alphabet):
    automata = [
        contains_a_language.positive,
        contains_a_language.complement,
        first_child_a_language.positive,
        first_child_a_language.complement,
    ]
    for automaton in automata:
        for t in enumerate_terms(alphabet, 0, 2):
            assert accepts_via_phi(automaton, phi(automaton, t)) == membership(automaton, t), t


def test_pi_eval_of_singleton_is_the_label(alphabet, rng):
    for _ in range(100):
        automaton = random_automaton(rng, alphabet)
        arity = int(rng.integers(0, 3))
        value = phi(automaton, random_term(rng, alphabet, arity, 6))
        assert pi_eval(Term(arity, Node(value, tuple(Var(i) for i in range(arity))))) == value


def test_pi_eval_commutes_with_flatten(alphabet, rng):
    for _ in range(200):
        automaton = random_automaton(rng, alphabet)
        t = random_term(rng, alphabet, int(rng.integers(0, 3)), 8)
        outers = list(enumerate_factorizations(t))
        outer = outers[rng.integers(len(outers))]
        evaluated = relabel_term(outer, lambda factor: phi(automaton, factor))
        assert pi_eval(evaluated) == phi(automaton, flatten(outer)) == phi(automaton, t)


def test_pi_eval_rejects_labels_naming_missing_children():
    label = frozenset([frozenset([VarAtom("p", 0, "p", 1)])])
    with pytest.raises(ArityMismatchError):
        pi_eval(Term(1, Node(label, (Var(0),))))


def test_unreferenced_children_are_not_visited():
    label = frozenset([frozenset([Branch("p")])])
    assert pi_eval(Term(0, Node(label, (Node(frozenset()),)))) == label


def test_profiles_of_all_b_tree(contains_a_language, all_b):
    assert profiles_of_regular(contains_a_language.positive, all_b) == frozenset([RunProfile("d")])


def test_profile_set_of_regular_tree_with_a_variable(contains_a_language):
    # b(all-b, x0)
    g = RegularTree(
        1,
        "n0",
        {
            "n0": GraphNode("b", None, ("n1", "x")),
            "n1": GraphNode("b", None, ("n1", "n1")),
            "x": GraphNode(None, 0),
        },
    )
    assert profile_set_of_regular(contains_a_language.positive, g) == frozenset(
        [
            frozenset([Branch("s"), VarAtom("s", 1, "s", 0)]),
            frozenset([Branch("d"), VarAtom("d", 0, "d", 0)]),
        ]
    )


def test_profile_set_of_regular_agrees_with_membership(contains_a_language, first_child_a_language, rng, alphabet):
    for _ in range(40):
        g = random_regular_tree(rng, alphabet, 5)
        for automaton in (contains_a_language.positive, first_child_a_language.positive):
            assert accepts_via_phi(automaton, profile_set_of_regular(automaton, g)) == membership(automaton, g)


def test_rename_moves_variable_atoms():
    value = frozenset([frozenset([Branch("p"), VarAtom("p", 0, "q", 0)])])
    assert rename(value, {0: 2}) == frozenset([frozenset([Branch("p"), VarAtom("p", 0, "q", 2)])])
