import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, Hashable, Optional

from automata.automaton import ParityTreeAutomaton
from enums import EVEN, ODD
from games.parity_game import ParityGame
from games.solver import solve
from terms.regular_tree import GraphNode, RegularTree, compact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmptinessResult:
    empty: bool
    witness: Optional[RegularTree] = None


def emptiness_game(automaton: ParityTreeAutomaton) -> ParityGame:
    """Even picks a transition from a state, Odd picks one of its successor states."""
    positions = []
    edges = []
    for state in automaton.states:
        positions.append((("state", state), EVEN, automaton.priority[state]))
    for transition in automaton.transitions:
        pick = ("pick", transition)
        positions.append((pick, ODD, automaton.priority[transition.state]))
        edges.append((("state", transition.state), pick))
        for successor in transition.successors:
            edges.append((pick, ("state", successor)))
    return ParityGame.build(positions, edges)


def emptiness(automaton: ParityTreeAutomaton) -> EmptinessResult:
    game = emptiness_game(automaton)
    solution = solve(game)
    start = ("state", automaton.initial)
    if start not in solution.even_region:
        return EmptinessResult(True)

    names: Dict[Hashable, str] = {automaton.initial: "n0"}
    nodes: Dict[str, GraphNode] = {}
    queue = deque([automaton.initial])
    while queue:
        state = queue.popleft()
        _, transition = solution.even_strategy[("state", state)]
        for successor in transition.successors:
            if successor not in names:
                names[successor] = f"n{len(names)}"
                queue.append(successor)
        nodes[names[state]] = GraphNode(
            transition.symbol, None, tuple(names[successor] for successor in transition.successors)
        )
    witness = compact(RegularTree(0, "n0", nodes))
    logger.debug("Emptiness witness with %d nodes", len(witness.nodes))
    return EmptinessResult(False, witness)
