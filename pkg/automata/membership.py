import logging
from collections import deque
from typing import AbstractSet, Dict, Hashable, List, Mapping, Optional, Tuple

from automata.automaton import ParityTreeAutomaton, Transition
from enums import EVEN, ODD
from errors import AlphabetMismatchError, ArityMismatchError
from games.parity_game import ParityGame
from games.solver import solve
from terms.regular_tree import Tree, as_regular_tree, reachable

logger = logging.getLogger(__name__)

_ACCEPT = ("accept",)


def membership_game(
    automaton: ParityTreeAutomaton,
    tree: Tree,
    accept_from: Optional[Mapping[int, AbstractSet[Hashable]]] = None,
) -> Tuple[ParityGame, Hashable]:
    """
    Acceptance game on (node, state): Even picks a transition at ("at", node, state),
    Odd picks the direction at ("move", node, transition).
    A variable leaf is won by Even iff its state is accepted for that variable.
    """
    g = as_regular_tree(tree)
    if accept_from is None and g.arity != 0:
        raise ArityMismatchError(
            f"Membership of a tree of arity {g.arity} needs accepting states for its variables"
        )
    positions: List[Tuple[Hashable, object, int]] = [(_ACCEPT, EVEN, 0)]
    edges: List[Tuple[Hashable, Hashable]] = [(_ACCEPT, _ACCEPT)]
    visible = reachable(g)
    for node_id in g.nodes:
        if node_id not in visible:
            continue
        node = g.nodes[node_id]
        if not node.is_variable:
            if node.label not in automaton.alphabet:
                raise AlphabetMismatchError(f"Symbol {node.label!r} is not in the automaton's alphabet")
            if automaton.alphabet.arity(node.label) != len(node.successors):
                raise ArityMismatchError(
                    f"Node '{node_id}' has {len(node.successors)} successors, "
                    f"'{node.label}' has arity {automaton.alphabet.arity(node.label)}"
                )
        for state in automaton.states:
            here = ("at", node_id, state)
            positions.append((here, EVEN, automaton.priority[state]))
            if node.is_variable:
                if state in accept_from.get(node.var, ()):
                    edges.append((here, _ACCEPT))
                continue
            for transition in automaton.transitions_from(state, node.label):
                move = ("move", node_id, transition)
                positions.append((move, ODD, automaton.priority[state]))
                edges.append((here, move))
                for successor_id, successor_state in zip(node.successors, transition.successors):
                    edges.append((move, ("at", successor_id, successor_state)))
    game = ParityGame.build(positions, edges)
    logger.debug("Membership game with %d positions", len(game))
    return game, ("at", g.root, automaton.initial)


def membership(
    automaton: ParityTreeAutomaton,
    tree: Tree,
    accept_from: Optional[Mapping[int, AbstractSet[Hashable]]] = None,
) -> bool:
    game, start = membership_game(automaton, tree, accept_from)
    return start in solve(game).even_region


def accepting_annotation(
    automaton: ParityTreeAutomaton,
    tree: Tree,
    accept_from: Optional[Mapping[int, AbstractSet[Hashable]]] = None,
) -> Optional[Dict[Tuple[str, Hashable], Transition]]:
    """
    The regular accepting run read off Even's winning strategy, as the transition
    used at each (node, state) pair it visits; None when the tree is rejected.
    """
    game, start = membership_game(automaton, tree, accept_from)
    solution = solve(game)
    if start not in solution.even_region:
        return None
    annotation: Dict[Tuple[str, Hashable], Transition] = {}
    queue = deque([start])
    seen = {start}
    while queue:
        position = queue.popleft()
        if position == _ACCEPT or position not in solution.even_strategy:
            continue
        move = solution.even_strategy[position]
        if move == _ACCEPT:
            continue
        _, node_id, state = position
        annotation[(node_id, state)] = move[2]
        for successor in game.successors(move):
            if successor not in seen:
                seen.add(successor)
                queue.append(successor)
    return annotation
