from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Hashable, Mapping, Optional, Set, Tuple, Union

from automata.automaton import ParityTreeAutomaton, Transition
from errors import AlphabetMismatchError, ArityMismatchError, IncompleteRunError
from terms.term import Node, Path, Term, TermNode, Var, positions


@dataclass(frozen=True, order=True)
class VariableExit:
    index: int
    min_priority: int
    state: Hashable


@dataclass(frozen=True)
class RunProfile:
    """Root state plus, per occurring variable, the least priority on its root path and its state."""

    root: Hashable
    exits: Tuple[VariableExit, ...] = ()

    @classmethod
    def of(cls, root: Hashable, exits) -> "RunProfile":
        return cls(root, tuple(sorted(exits, key=lambda exit_: exit_.index)))


@dataclass(frozen=True)
class Rejection:
    reason: str
    path: Path


def check_run(
    automaton: ParityTreeAutomaton, t: Term, labelling: Mapping[Path, Hashable]
) -> Union[RunProfile, Rejection]:
    missing = [path for path, _ in positions(t.root) if path not in labelling]
    if missing:
        raise IncompleteRunError(f"The labelling misses the nodes {missing}")

    exits = []

    def walk(node: TermNode, path: Path, lowest: float) -> Optional[Rejection]:
        state = labelling[path]
        if state not in automaton.priority:
            return Rejection(f"unknown state {state!r}", path)
        lowest = min(lowest, automaton.priority[state])
        if isinstance(node, Var):
            exits.append(VariableExit(node.index, int(lowest), state))
            return None
        _check_symbol(automaton, node)
        successors = tuple(labelling[path + (index,)] for index in range(len(node.children)))
        if Transition(state, node.label, successors) not in automaton.transitions_from(state, node.label):
            return Rejection(f"no transition ({state!r}, {node.label!r}, {successors!r})", path)
        for index, child in enumerate(node.children):
            rejection = walk(child, path + (index,), lowest)
            if rejection is not None:
                return rejection
        return None

    rejection = walk(t.root, (), float("inf"))
    if rejection is not None:
        return rejection
    return RunProfile.of(labelling[()], exits)


def enumerate_runs(automaton: ParityTreeAutomaton, t: Term, start: Hashable) -> FrozenSet[RunProfile]:
    return frozenset(RunProfile.of(start, exits) for exits in _exits(automaton, t.root, start))


def _exits(automaton: ParityTreeAutomaton, node: TermNode, state: Hashable) -> Set[Tuple[VariableExit, ...]]:
    own = automaton.priority[state]
    if isinstance(node, Var):
        return {(VariableExit(node.index, own, state),)}
    _check_symbol(automaton, node)
    result = set()
    for transition in automaton.transitions_from(state, node.label):
        options = [
            _exits(automaton, child, successor)
            for child, successor in zip(node.children, transition.successors)
        ]
        for combination in product(*options):
            result.add(
                tuple(
                    VariableExit(exit_.index, min(own, exit_.min_priority), exit_.state)
                    for part in combination
                    for exit_ in part
                )
            )
    return result


def _check_symbol(automaton: ParityTreeAutomaton, node: Node) -> None:
    if node.label not in automaton.alphabet:
        raise AlphabetMismatchError(f"Symbol {node.label!r} is not in the automaton's alphabet")
    if automaton.alphabet.arity(node.label) != len(node.children):
        raise ArityMismatchError(
            f"Symbol {node.label!r} has arity {automaton.alphabet.arity(node.label)} "
            f"but {len(node.children)} children"
        )
