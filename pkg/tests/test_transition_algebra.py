from itertools import product

from profiles.evaluation import generator_labels
from profiles.profile_set import Branch, VarAtom, conjunction_leq, rename
from profiles.saturation import compose_profile_sets, saturate
from profiles.transition_algebra import (
    BOTTOM,
    as_profile_set,
    first_projection,
    hat_closure,
    hat_generators,
    is_rectangular,
    t_meet,
)

STATES = ("p", "q", "r")


def transition_elements(arity, max_atoms):
    """Every conjunction with at most one atom per variable and at most `max_atoms` atoms."""
    variable_choices = [None] + [
        VarAtom(source, priority, target, 0)
        for source in STATES
        for priority in range(2)
        for target in STATES
    ]
    for branches in product([False, True], repeat=len(STATES)):
        branch_atoms = [Branch(state) for state, chosen in zip(STATES, branches) if chosen]
        for choices in product(variable_choices, repeat=arity):
            atoms = list(branch_atoms)
            for index, atom in enumerate(choices):
                if atom is not None:
                    atoms.append(VarAtom(atom.source, atom.priority, atom.target, index))
            if len(atoms) <= max_atoms:
                yield frozenset(atoms)


def test_t_meet():
    x = frozenset([Branch("p")])
    y = frozenset([VarAtom("p", 1, "q", 0)])
    assert t_meet(x, y) == frozenset([Branch("p"), VarAtom("p", 1, "q", 0)])
    assert t_meet(y, frozenset([VarAtom("p", 0, "q", 0)])) is BOTTOM
    assert t_meet(BOTTOM, x) is BOTTOM


def test_every_transition_element_is_rectangular():
    for element in transition_elements(2, 4):
        assert is_rectangular(as_profile_set(element), 2), element
    assert is_rectangular(as_profile_set(BOTTOM), 2)


def test_disjunction_of_correlated_choices_is_not_rectangular():
    e = frozenset(
        [
            frozenset([VarAtom("p", 0, "p", 0), VarAtom("p", 0, "p", 1)]),
            frozenset([VarAtom("p", 0, "q", 0), VarAtom("p", 0, "q", 1)]),
        ]
    )
    assert not is_rectangular(e, 2)


def test_hat_generators_pair_values_with_their_runs(contains_a_language):
    generators = hat_generators(contains_a_language.positive)
    labels = generator_labels(contains_a_language.positive)
    assert sorted(name for name, _ in generators) == ["a", "a", "b", "b", "b", "c"]
    for name, (value, run) in generators:
        assert value == labels[name]
        assert run in value


def test_hat_closure_covers_the_reachable_values(contains_a_language):
    automaton = contains_a_language.positive
    elements = hat_closure(automaton, hat_generators(automaton), 1)
    generators = [(name, automaton.alphabet.arity(name), value) for name, value in generator_labels(automaton).items()]
    reachable = saturate(generators, compose_profile_sets, rename, 1)
    assert first_projection(elements) == {(element.arity, element.value) for element in reachable}

    fibres = {}
    for element in elements:
        value, run = element.value
        fibres.setdefault((element.arity, value), []).append(run)
        if run is BOTTOM:
            assert not value
        else:
            assert any(conjunction_leq(run, disjunct) for disjunct in value)
    assert all(len(runs) == len(set(runs)) for runs in fibres.values())
