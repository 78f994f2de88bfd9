from typing import Hashable, Mapping, Set

import networkx as nx

from enums import EVEN, ODD, Player
from games.parity_game import GameSolution, ParityGame


def verify_strategy(game: ParityGame, solution: GameSolution) -> bool:
    """
    Check a claimed solution: the regions partition the arena and, with each
    strategy fixed, every cycle left inside a region has the owner's parity.
    """
    positions = set(game.positions)
    even, odd = set(solution.even_region), set(solution.odd_region)
    if even & odd or even | odd != positions:
        return False
    return _is_winning(game, EVEN, even, solution.even_strategy) and _is_winning(
        game, ODD, odd, solution.odd_strategy
    )


def _is_winning(game: ParityGame, player: Player, region: Set[Hashable], strategy: Mapping) -> bool:
    for position in strategy:
        if position not in region or game.owner[position] is not player:
            return False

    graph = nx.DiGraph()
    graph.add_nodes_from(region)
    for position in region:
        successors = game.successors(position)
        if game.owner[position] is player:
            if position not in strategy:
                return False
            chosen = strategy[position]
            if chosen not in successors or chosen not in region:
                return False
            graph.add_edge(position, chosen)
        else:
            if any(successor not in region for successor in successors):
                return False
            graph.add_edges_from((position, successor) for successor in successors)

    for lowest in sorted({game.priority[position] for position in region}):
        if player.wins(lowest):
            continue
        subgraph = graph.subgraph(position for position in region if game.priority[position] >= lowest)
        for component in nx.strongly_connected_components(subgraph):
            if not any(game.priority[position] == lowest for position in component):
                continue
            if len(component) > 1 or any(subgraph.has_edge(position, position) for position in component):
                return False
    return True
