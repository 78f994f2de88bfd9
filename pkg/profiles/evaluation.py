import logging
from typing import Callable, Dict, FrozenSet, Hashable, Optional, Set

import networkx as nx

from automata.automaton import ParityTreeAutomaton
from automata.runs import RunProfile, VariableExit, enumerate_runs
from enums import EVEN, ODD
from errors import AlphabetMismatchError, ArityMismatchError
from games.parity_game import ParityGame
from games.solver import solve
from profiles.profile_set import (
    Branch,
    PartialProfile,
    ProfileSet,
    VarAtom,
    disjunct_key,
    from_run_profile,
    is_run_shaped,
    normalize,
    variable_indices,
)
from profiles.semigroup import Fin, Inf, s_mul
from terms.regular_tree import RegularTree, Tree, reachable, relabel_tree, spine, to_graph, to_term
from terms.term import Node, Term, Var, singleton

logger = logging.getLogger(__name__)

Options = Set[PartialProfile]
Descend = Callable[[int, Fin], Options]


def pi_eval(tree: Tree) -> ProfileSet:
    """
    Product of a tree labelled by profile sets. A disjunct is chosen at every
    vertex reached by some atom; variable atoms are multiplied along the path
    into the child they name, and a choice whose path products are undefined
    is dropped.
    """
    if isinstance(tree, Term):
        if isinstance(tree.root, Var):
            raise ArityMismatchError("The root of an evaluated tree must not be a variable")
        return normalize(_term_options(tree.root, None))
    visible = reachable(tree)
    if nx.is_directed_acyclic_graph(to_graph(tree).subgraph(visible)):
        return pi_eval(to_term(tree))
    return normalize(_RegularEvaluation(tree).options(tree.root, None))


def _combine(disjunct: PartialProfile, arrival: Optional[Fin], descend: Descend) -> Options:
    conjunctions: Options = {frozenset()}
    for atom in disjunct:
        if isinstance(atom, Branch):
            root = Inf(atom.state) if arrival is None else s_mul(arrival, Inf(atom.state))
            if root is None:
                return set()
            part: Options = {frozenset([Branch(root.state)])}
        else:
            segment = Fin(atom.source, atom.priority, atom.target)
            if arrival is not None:
                segment = s_mul(arrival, segment)
                if segment is None:
                    return set()
            part = descend(atom.index, segment)
            if not part:
                return set()
        conjunctions = {left | right for left in conjunctions for right in part}
    return conjunctions


def _check_label(label: Hashable, arity: int) -> None:
    if not isinstance(label, frozenset):
        raise ArityMismatchError(f"Vertex label {label!r} is not a profile set")
    for index in variable_indices(label):
        if index >= arity:
            raise ArityMismatchError(f"Label refers to x{index} but the vertex has {arity} successors")


def _variable_atom(segment: Fin, index: int) -> Options:
    return {frozenset([VarAtom(segment.source, segment.priority, segment.target, index)])}


def _term_options(node: Node, arrival: Optional[Fin]) -> Options:
    _check_label(node.label, len(node.children))

    def descend(index: int, segment: Fin) -> Options:
        child = node.children[index]
        if isinstance(child, Var):
            return _variable_atom(segment, child.index)
        return _term_options(child, segment)

    result: Options = set()
    for disjunct in node.label:
        result |= _combine(disjunct, arrival, descend)
    return result


class _RegularEvaluation:
    """
    The spine above the variable leaves is finite and evaluated recursively.
    Below it lies a variable-free graph, decided per (node, arrival state) by a
    game where Even picks a disjunct and Odd picks one of its variable atoms.
    """

    def __init__(self, g: RegularTree):
        self.g = g
        self.spine = spine(g)
        self._even_region: Optional[FrozenSet] = None

    def options(self, node_id: str, arrival: Optional[Fin]) -> Options:
        node = self.g.nodes[node_id]
        _check_label(node.label, len(node.successors))

        def descend(index: int, segment: Fin) -> Options:
            child_id = node.successors[index]
            child = self.g.nodes[child_id]
            if child.is_variable:
                return _variable_atom(segment, child.var)
            if child_id in self.spine:
                return self.options(child_id, segment)
            if ("node", child_id, segment.target) in self.even_region:
                return {frozenset([Branch(segment.source)])}
            return set()

        result: Options = set()
        for disjunct in sorted(node.label, key=disjunct_key):
            result |= _combine(disjunct, arrival, descend)
        return result

    @property
    def even_region(self) -> FrozenSet:
        if self._even_region is None:
            self._even_region = solve(self._game()).even_region
        return self._even_region

    def _game(self) -> ParityGame:
        free = [
            node_id
            for node_id in reachable(self.g)
            if node_id not in self.spine and not self.g.nodes[node_id].is_variable
        ]
        free.sort()
        for node_id in free:
            label = self.g.nodes[node_id].label
            _check_label(label, len(self.g.nodes[node_id].successors))
            if not all(is_run_shaped(disjunct) for disjunct in label):
                raise ValueError(
                    f"Node '{node_id}' lies on the variable-free part of a cyclic tree "
                    "and its label is not run-shaped"
                )
        neutral = max(
            (
                atom.priority
                for node_id in free
                for disjunct in self.g.nodes[node_id].label
                for atom in disjunct
                if isinstance(atom, VarAtom)
            ),
            default=0,
        )

        node_positions: Dict[Hashable, None] = {}
        positions = []
        edges = []
        for node_id in free:
            node = self.g.nodes[node_id]
            for disjunct in sorted(node.label, key=disjunct_key):
                state = next(atom.state for atom in disjunct if isinstance(atom, Branch))
                here = ("node", node_id, state)
                node_positions.setdefault(here)
                pick = ("pick", node_id, disjunct)
                positions.append((pick, ODD, neutral))
                edges.append((here, pick))
                for atom in sorted(
                    (atom for atom in disjunct if isinstance(atom, VarAtom)), key=lambda atom: atom.index
                ):
                    edge = ("edge", node_id, disjunct, atom.index)
                    target = ("node", node.successors[atom.index], atom.target)
                    node_positions.setdefault(target)
                    positions.append((edge, EVEN, atom.priority))
                    edges.append((pick, edge))
                    edges.append((edge, target))
        positions.extend((position, EVEN, neutral) for position in node_positions)
        game = ParityGame.build(positions, edges)
        logger.debug("Regular evaluation game with %d positions", len(game))
        return game


def phi(automaton: ParityTreeAutomaton, t: Term) -> ProfileSet:
    """Disjunction over all partial runs from any root state of the run's root state and exits."""
    return normalize(
        from_run_profile(profile)
        for state in automaton.states
        for profile in enumerate_runs(automaton, t, state)
    )


def accepts_via_phi(automaton: ParityTreeAutomaton, value: ProfileSet) -> bool:
    return any(Branch(automaton.initial) in disjunct for disjunct in value)


def generator_labels(automaton: ParityTreeAutomaton) -> Dict[str, ProfileSet]:
    return {name: phi(automaton, singleton(automaton.alphabet, name)) for name, _ in automaton.alphabet}


def profile_set_of_regular(automaton: ParityTreeAutomaton, tree: Tree) -> ProfileSet:
    if isinstance(tree, Term):
        return phi(automaton, tree)
    labels = generator_labels(automaton)
    for node_id in reachable(tree):
        node = tree.nodes[node_id]
        if node.is_variable:
            continue
        if node.label not in labels:
            raise AlphabetMismatchError(f"Symbol {node.label!r} is not in the automaton's alphabet")
        if automaton.alphabet.arity(node.label) != len(node.successors):
            raise ArityMismatchError(
                f"Node '{node_id}' has {len(node.successors)} successors, "
                f"'{node.label}' has arity {automaton.alphabet.arity(node.label)}"
            )
    visible = reachable(tree)
    trimmed = RegularTree(tree.arity, tree.root, {node_id: tree.nodes[node_id] for node_id in visible})
    return pi_eval(relabel_tree(trimmed, labels))


def profiles_of_regular(automaton: ParityTreeAutomaton, g: Tree) -> FrozenSet[RunProfile]:
    """Profiles of the partial runs on the unravelling of g, from every root state."""
    return frozenset(_as_run_profile(disjunct) for disjunct in profile_set_of_regular(automaton, g))


def _as_run_profile(disjunct: PartialProfile) -> RunProfile:
    root = next(atom.state for atom in disjunct if isinstance(atom, Branch))
    return RunProfile.of(
        root,
        [
            VariableExit(atom.index, atom.priority, atom.target)
            for atom in disjunct
            if isinstance(atom, VarAtom)
        ],
    )
