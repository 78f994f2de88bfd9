import logging
from collections import deque
from itertools import product as cartesian
from typing import Dict, Hashable, List, Mapping, Optional, Sequence, Tuple

from automata.automaton import ParityTreeAutomaton, Transition, check_same_alphabet
from errors import ArityMismatchError, UnknownSymbolError
from terms.alphabet import RankedAlphabet

logger = logging.getLogger(__name__)

Record = Tuple[Optional[int], ...]


def product(first: ParityTreeAutomaton, second: ParityTreeAutomaton) -> ParityTreeAutomaton:
    """
    Intersection. States are (first state, second state, record) where the record
    holds, for every priority level l of `first`, the least priority of `second`
    seen since `first` last showed a priority <= l. A state emits the pair
    (priority of first, least priority of second since that level was last reset),
    re-indexed monotonically so that its parity is even iff both components are.
    """
    check_same_alphabet(first.alphabet, second.alphabet)
    levels = first.priorities
    level_of = {value: index for index, value in enumerate(levels)}
    ranks = _pair_ranks(levels, second.priorities)

    initial = (first.initial, second.initial, (None,) * len(levels))
    states: List[Hashable] = [initial]
    seen = {initial}
    priority: Dict[Hashable, int] = {}
    transitions: List[Transition] = []
    queue = deque([initial])
    while queue:
        state = queue.popleft()
        first_state, second_state, record = state
        a = first.priority[first_state]
        b = second.priority[second_state]
        level = level_of[a]
        recorded = record[level]
        priority[state] = ranks[(a, b if recorded is None else min(recorded, b))]
        following = _advance(record, level, b)

        for symbol, _ in first.alphabet:
            for left, right in cartesian(
                first.transitions_from(first_state, symbol), second.transitions_from(second_state, symbol)
            ):
                successors = tuple(
                    (p, q, following) for p, q in zip(left.successors, right.successors)
                )
                transitions.append(Transition(state, symbol, successors))
                for successor in successors:
                    if successor not in seen:
                        seen.add(successor)
                        states.append(successor)
                        queue.append(successor)

    logger.debug("Product automaton with %d states", len(states))
    return ParityTreeAutomaton(tuple(states), first.alphabet, tuple(transitions), initial, priority)


def _advance(record: Record, level: int, value: int) -> Record:
    return tuple(
        None if index >= level else (value if kept is None else min(kept, value))
        for index, kept in enumerate(record)
    )


def _pair_ranks(first: Sequence[int], second: Sequence[int]) -> Dict[Tuple[int, int], int]:
    """Monotone re-indexing of the lexicographic pairs, even exactly when both are even."""
    ranks: Dict[Tuple[int, int], int] = {}
    current = -1
    for pair in sorted(cartesian(first, second)):
        parity = 0 if pair[0] % 2 == 0 and pair[1] % 2 == 0 else 1
        if current < 0:
            current = parity
        elif current % 2 != parity:
            current += 1
        ranks[pair] = current
    return ranks


def union(first: ParityTreeAutomaton, second: ParityTreeAutomaton) -> ParityTreeAutomaton:
    check_same_alphabet(first.alphabet, second.alphabet)
    initial = ("start",)
    states: List[Hashable] = [initial]
    priority: Dict[Hashable, int] = {initial: 0}
    transitions: List[Transition] = []
    for tag, automaton in (("left", first), ("right", second)):
        for state in automaton.states:
            states.append((tag, state))
            priority[(tag, state)] = automaton.priority[state]
        for transition in automaton.transitions:
            successors = tuple((tag, successor) for successor in transition.successors)
            transitions.append(Transition((tag, transition.state), transition.symbol, successors))
            if transition.state == automaton.initial:
                transitions.append(Transition(initial, transition.symbol, successors))
    return ParityTreeAutomaton(tuple(states), first.alphabet, tuple(transitions), initial, priority)


def relabel_preimage(
    automaton: ParityTreeAutomaton, h: Mapping[str, str], alphabet: RankedAlphabet
) -> ParityTreeAutomaton:
    """Automaton over `alphabet` accepting t iff the relabelled tree h(t) is accepted."""
    for name, arity in alphabet:
        if name not in h:
            raise UnknownSymbolError(f"The relabelling is not defined on '{name}'")
        if h[name] not in automaton.alphabet or automaton.alphabet.arity(h[name]) != arity:
            raise ArityMismatchError(f"The relabelling {name} -> {h[name]} does not preserve arity")
    transitions = [
        Transition(transition.state, name, transition.successors)
        for transition in automaton.transitions
        for name, _ in alphabet
        if h[name] == transition.symbol
    ]
    return ParityTreeAutomaton(
        automaton.states, alphabet, tuple(transitions), automaton.initial, automaton.priority
    )
