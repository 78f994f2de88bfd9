import logging
from typing import Dict, FrozenSet, Hashable, List, Optional, Tuple

from automata.automaton import ParityTreeAutomaton, Transition
from automata.emptiness import emptiness
from automata.language_pair import LanguagePair
from automata.operations import product, union
from automata.runs import RunProfile
from enums import HOLE
from errors import ArityMismatchError
from profiles.evaluation import profiles_of_regular
from syntactic.elements import AlgebraElement
from terms.context import Context

logger = logging.getLogger(__name__)

TOP = ("top",)


def _profile_key(profile: RunProfile) -> Tuple:
    return (str(profile.root), tuple((e.index, e.min_priority, str(e.state)) for e in profile.exits))


def hole_automaton(
    automaton: ParityTreeAutomaton, profiles: FrozenSet[RunProfile], arity: int
) -> ParityTreeAutomaton:
    """
    Runs `automaton` on s[u] while reading the context s: at a hole in state q
    it picks a profile of u rooted in q and continues below the hole's i-th
    successor in that profile's exit state, with the exit's least priority.
    Successors that u does not use are accepted unconditionally.
    """
    alphabet = automaton.alphabet.extended(HOLE, arity)
    ordered = sorted(profiles, key=_profile_key)
    original: Dict[Hashable, Hashable] = {("q", state): state for state in automaton.states}
    priority: Dict[Hashable, int] = {("q", state): automaton.priority[state] for state in automaton.states}
    for profile in ordered:
        for exit_ in profile.exits:
            variant = ("k", exit_.state, exit_.min_priority)
            original.setdefault(variant, exit_.state)
            priority[variant] = exit_.min_priority
    priority[TOP] = 0

    by_root: Dict[Hashable, List[RunProfile]] = {}
    for profile in ordered:
        by_root.setdefault(profile.root, []).append(profile)

    transitions: List[Transition] = []
    for variant, state in original.items():
        for transition in automaton.transitions:
            if transition.state == state:
                transitions.append(
                    Transition(variant, transition.symbol, tuple(("q", s) for s in transition.successors))
                )
        for profile in by_root.get(state, []):
            exits = {exit_.index: exit_ for exit_ in profile.exits}
            transitions.append(
                Transition(
                    variant,
                    HOLE,
                    tuple(
                        ("k", exits[i].state, exits[i].min_priority) if i in exits else TOP
                        for i in range(arity)
                    ),
                )
            )
    transitions.extend(Transition(TOP, name, (TOP,) * symbol_arity) for name, symbol_arity in alphabet)
    states = tuple(original) + (TOP,)
    return ParityTreeAutomaton(states, alphabet, tuple(transitions), ("q", automaton.initial), priority)


class HoleAutomata:
    """The hole automata of one element, for the language and for its complement."""

    def __init__(self, language: LanguagePair, element: AlgebraElement):
        self.arity = element.arity
        self.positive = hole_automaton(
            language.positive, profiles_of_regular(language.positive, element.witness), element.arity
        )
        self.complement = hole_automaton(
            language.complement, profiles_of_regular(language.complement, element.witness), element.arity
        )


def separate(left: HoleAutomata, right: HoleAutomata) -> Optional[Context]:
    """A context putting one side into the language and the other into its complement, if any."""
    if left.arity != right.arity:
        raise ArityMismatchError(f"Elements of arity {left.arity} and {right.arity} are incomparable")
    contexts = union(product(left.positive, right.complement), product(right.positive, left.complement))
    result = emptiness(contexts)
    logger.debug("Context automaton with %d states is %s", len(contexts.states), "empty" if result.empty else "nonempty")
    if result.empty:
        return None
    return Context(result.witness, left.arity)


def separating_context(language: LanguagePair, u: AlgebraElement, v: AlgebraElement) -> Optional[Context]:
    if u.arity != v.arity:
        raise ArityMismatchError(f"Elements of arity {u.arity} and {v.arity} are incomparable")
    return separate(HoleAutomata(language, u), HoleAutomata(language, v))


def synt_equiv(language: LanguagePair, u: AlgebraElement, v: AlgebraElement) -> bool:
    return separating_context(language, u, v) is None
