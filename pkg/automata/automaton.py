from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Dict, Hashable, List, Mapping, NamedTuple, Tuple

from errors import AlphabetMismatchError, ArityMismatchError
from terms.alphabet import RankedAlphabet


class Transition(NamedTuple):
    state: Hashable
    symbol: str
    successors: Tuple[Hashable, ...]


@dataclass(frozen=True, eq=False)
class ParityTreeAutomaton:
    states: Tuple[Hashable, ...]
    alphabet: RankedAlphabet
    transitions: Tuple[Transition, ...]
    initial: Hashable
    priority: Mapping[Hashable, int]

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(dict.fromkeys(self.states)))
        object.__setattr__(
            self, "transitions", tuple(dict.fromkeys(Transition(t[0], t[1], tuple(t[2])) for t in self.transitions))
        )
        object.__setattr__(self, "priority", MappingProxyType(dict(self.priority)))

        known = set(self.states)
        if self.initial not in known:
            raise ValueError(f"Initial state {self.initial!r} is not a state")
        for state in self.states:
            if state not in self.priority:
                raise ValueError(f"State {state!r} has no priority")
            if self.priority[state] < 0:
                raise ValueError(f"State {state!r} has a negative priority")
        for transition in self.transitions:
            if transition.symbol not in self.alphabet:
                raise AlphabetMismatchError(
                    f"Transition {transition} uses a symbol outside the alphabet"
                )
            if self.alphabet.arity(transition.symbol) != len(transition.successors):
                raise ArityMismatchError(
                    f"Transition {transition} has {len(transition.successors)} successors, "
                    f"'{transition.symbol}' has arity {self.alphabet.arity(transition.symbol)}"
                )
            for state in (transition.state,) + tuple(transition.successors):
                if state not in known:
                    raise ValueError(f"Transition {transition} uses unknown state {state!r}")

    @cached_property
    def _index(self) -> Dict[Tuple[Hashable, str], List[Transition]]:
        index: Dict[Tuple[Hashable, str], List[Transition]] = {}
        for transition in self.transitions:
            index.setdefault((transition.state, transition.symbol), []).append(transition)
        return index

    def transitions_from(self, state: Hashable, symbol: str) -> List[Transition]:
        return self._index.get((state, symbol), [])

    @property
    def priorities(self) -> List[int]:
        return sorted(set(self.priority.values()))

    @property
    def max_priority(self) -> int:
        return max(self.priority.values(), default=0)

    def __repr__(self):
        return (
            f"ParityTreeAutomaton(states={len(self.states)}, "
            f"transitions={len(self.transitions)}, initial={self.initial!r})"
        )


def universal_automaton(alphabet: RankedAlphabet, state: str = "u") -> ParityTreeAutomaton:
    """One state with priority 0 and every transition: accepts every tree."""
    transitions = [Transition(state, name, (state,) * arity) for name, arity in alphabet]
    return ParityTreeAutomaton((state,), alphabet, tuple(transitions), state, {state: 0})


def empty_automaton(alphabet: RankedAlphabet, state: str = "z") -> ParityTreeAutomaton:
    return ParityTreeAutomaton((state,), alphabet, (), state, {state: 1})


def check_same_alphabet(first: RankedAlphabet, second: RankedAlphabet) -> None:
    if first.arities != second.arities:
        raise AlphabetMismatchError(f"Alphabets differ: {first.arities} vs {second.arities}")
